#include "exlen/filt.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace exlen {

Subcat filt_closure(const Presentation& p, Subcat x, bool stable_only) {
  return close_under(x, {p.extension_rules(stable_only)});
}

FiltLength filt_length(const Presentation& p, Subcat x, const ObjClass& m, bool stable_only,
                       unsigned mult_cap) {
  FiltLength result;
  if (m.width() != p.size()) throw Error(ErrorKind::argument, "object class has wrong width");
  if (m.is_zero()) {
    result.length = 0;
    return result;
  }

  // Conflations usable as a single filtration step: first term one member of x.
  std::vector<const Conflation*> steps;
  for (const auto& c : p.conflations()) {
    if (stable_only && !c.stable) continue;
    auto a = c.a.as_indec();
    if (a && x.contains(*a)) steps.push_back(&c);
  }

  std::map<ObjClass, unsigned> dist;
  std::deque<ObjClass> queue;
  dist.emplace(m, 0);
  queue.push_back(m);
  auto visit = [&](ObjClass next, unsigned d) -> bool {
    for (std::size_t i = 0; i < next.width(); ++i) {
      if (next[i] > mult_cap) {
        result.cap_hit = true;
        return false;
      }
    }
    if (next.is_zero()) {
      result.length = d;
      return true;
    }
    if (dist.emplace(next, d).second) queue.push_back(std::move(next));
    return false;
  };

  while (!queue.empty()) {
    ObjClass cur = std::move(queue.front());
    queue.pop_front();
    const unsigned d = dist.at(cur) + 1;
    for (std::size_t i = 0; i < cur.width(); ++i) {
      if (cur[i] == 0 || !x.contains(i)) continue;
      ObjClass next = cur;
      next[i] -= 1;
      if (visit(std::move(next), d)) return result;
    }
    for (const Conflation* c : steps) {
      if (!cur.contains(c->b)) continue;
      ObjClass next = cur;
      next -= c->b;
      next += c->c;
      if (visit(std::move(next), d)) return result;
    }
  }
  return result;
}

bool semibrick_check(const Presentation& p, Subcat x) {
  if (!x.subset_of(p.bricks())) return false;
  bool ok = true;
  x.for_each([&](std::size_t i) {
    if (p.hom_out(i).intersects(x)) ok = false;
  });
  return ok;
}

bool sms_check(const Presentation& p, Subcat x) {
  return semibrick_check(p, x) && filt_closure(p, x, false) == p.all();
}

std::vector<Subcat> enumerate_semibricks(const Presentation& p) {
  std::vector<Subcat> out;
  const auto bricks = p.bricks().members();
  // Depth-first over bricks in declaration order, keeping pairwise Hom-orthogonality.
  auto extend = [&](auto&& self, std::size_t from, Subcat chosen) -> void {
    out.push_back(chosen);
    for (std::size_t k = from; k < bricks.size(); ++k) {
      const std::size_t b = bricks[k];
      if (p.hom_out(b).intersects(chosen) || p.hom_in(b).intersects(chosen)) continue;
      Subcat next = chosen;
      next.insert(b);
      self(self, k + 1, next);
    }
  };
  extend(extend, 0, Subcat{});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

// l_x on each indec of Filt(x); nullopt outside the closure.
std::vector<std::optional<unsigned>> indec_lengths(const Presentation& p, Subcat x,
                                                   Subcat scope, unsigned mult_cap) {
  std::vector<std::optional<unsigned>> len(p.size());
  scope.for_each([&](std::size_t i) {
    len[i] = filt_length(p, x, ObjClass(p.size(), i), false, mult_cap).length;
  });
  return len;
}

std::optional<std::uint64_t> additive_length(const std::vector<std::optional<unsigned>>& len,
                                             const ObjClass& m) {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i] == 0) continue;
    if (!len[i]) return std::nullopt;
    t += std::uint64_t{m[i]} * *len[i];
  }
  return t;
}

bool inside(const Conflation& c, Subcat scope) {
  return (c.a.support() | c.b.support() | c.c.support()).subset_of(scope);
}

}  // namespace

bool proper_relative(const Presentation& p, Subcat x, unsigned mult_cap) {
  const Subcat closure = filt_closure(p, x, false);
  const auto len = indec_lengths(p, x, closure, mult_cap);
  for (const auto& c : p.conflations()) {
    if (!inside(c, closure)) continue;
    auto la = additive_length(len, c.a), lb = additive_length(len, c.b),
         lc = additive_length(len, c.c);
    if (!la || !lb || !lc || *lb != *la + *lc) return false;
  }
  return true;
}

Strata strata(const Presentation& p) {
  Strata s;
  if (p.size() == 0) return s;
  std::uint32_t lo = p.theta(0), hi = p.theta(0);
  for (const auto& d : p.indecs()) {
    lo = std::min(lo, d.theta);
    hi = std::max(hi, d.theta);
  }
  auto level = [&](std::size_t i) { return p.theta(i) - lo + 1; };
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (level(i) == 1) s.theta1.insert(i);
  }
  Subcat cumulative = s.theta1;
  for (unsigned n = 2; n <= hi - lo + 1; ++n) {
    Subcat fresh;
    p.bricks().for_each([&](std::size_t i) {
      if (level(i) != n) return;
      if (p.hom_out(i).intersects(cumulative) || p.hom_in(i).intersects(cumulative)) return;
      fresh.insert(i);
    });
    s.levels.emplace_back(n, fresh);
    cumulative |= fresh;
  }
  s.theta_inf = cumulative;
  return s;
}

namespace {

Subcat simples_with(const Presentation& p, Subcat c,
                    const std::vector<bool>& stable_flags) {
  Subcat out;
  c.for_each([&](std::size_t m) {
    const auto& cs = p.conflations();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (!stable_flags[k]) continue;
      const Conflation& cf = cs[k];
      if (cf.b.as_indec() != m || cf.a.is_zero() || cf.c.is_zero()) continue;
      if ((cf.a.support() | cf.c.support()).subset_of(c)) return;
    }
    out.insert(m);
  });
  return out;
}

}  // namespace

Subcat simples(const Presentation& p, Subcat c) {
  if (filt_closure(p, c, true) != c) {
    throw Error(ErrorKind::contract,
                describe(p, c) + " is not closed under stable extensions");
  }
  std::vector<bool> flags;
  for (const auto& cf : p.conflations()) flags.push_back(cf.stable);
  return simples_with(p, c, flags);
}

Presentation with_length_of(const Presentation& p, Subcat x, unsigned mult_cap) {
  const auto len = indec_lengths(p, x, p.all(), mult_cap);
  std::vector<Indec> indecs = p.indecs();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!len[i]) {
      throw Error(ErrorKind::contract, p.indec(i).id + " is not filtered by " + describe(p, x));
    }
    indecs[i].theta = *len[i];
  }
  const std::size_t n = p.size();
  std::vector<std::uint32_t> hom(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) hom[i * n + j] = p.hom_dim(i, j);
  }
  // The relabeled E_Θ' is read off the recorded conflations that stay stable.
  std::vector<bool> ext(n * n, false);
  std::vector<Conflation> conflations = p.conflations();
  for (auto& c : conflations) {
    c.stable = *additive_length(len, c.b) ==
               *additive_length(len, c.a) + *additive_length(len, c.c);
    auto a = c.a.as_indec(), z = c.c.as_indec();
    if (c.stable && !c.split && a && z) ext[*z * n + *a] = true;
  }
  return Presentation(p.name(), std::move(indecs), std::move(hom), std::move(ext),
                      std::move(conflations));
}

bool length_wide_roundtrip(const Presentation& p, Subcat x, unsigned mult_cap) {
  if (!semibrick_check(p, x)) {
    throw Error(ErrorKind::argument, describe(p, x) + " is not a semibrick");
  }
  const Subcat closure = filt_closure(p, x, false);
  const auto len = indec_lengths(p, x, closure, mult_cap);
  std::vector<bool> flags;
  for (const auto& c : p.conflations()) {
    bool stable = false;
    if (inside(c, closure)) {
      auto la = additive_length(len, c.a), lb = additive_length(len, c.b),
           lc = additive_length(len, c.c);
      stable = la && lb && lc && *lb == *la + *lc;
    }
    flags.push_back(stable);
  }
  return simples_with(p, closure, flags) == x;
}

}  // namespace exlen
