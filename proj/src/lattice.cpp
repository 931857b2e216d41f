#include "exlen/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "exlen/filt.hpp"

namespace exlen {

namespace {

std::string key(const Presentation& p, Subcat s) { return describe(p, s); }

std::string id_of(const Presentation& p, std::size_t i) { return p.indec(i).id; }

}  // namespace

// TorsLattice

TorsLattice TorsLattice::build(const Presentation& p, std::vector<Subcat> elements) {
  TorsLattice l;
  std::sort(elements.begin(), elements.end(), canonical_less);
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  l.elements_ = std::move(elements);
  const std::size_t n = l.elements_.size();
  for (std::size_t i = 0; i < n; ++i) l.index_.emplace(l.elements_[i], i);

  l.down_.assign(n, {});
  l.up_.assign(n, {});
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<std::size_t> below;
    for (std::size_t x = 0; x < n; ++x) {
      if (l.elements_[x].proper_subset_of(l.elements_[y])) below.push_back(x);
    }
    for (std::size_t x : below) {
      const bool maximal = std::none_of(below.begin(), below.end(), [&](std::size_t z) {
        return l.elements_[x].proper_subset_of(l.elements_[z]);
      });
      if (!maximal) continue;
      Cover c{y, x, std::nullopt, {}};
      LabelResult r = label_cover(p, l.elements_[y], l.elements_[x]);
      c.label = r.brick;
      c.label_error = std::move(r.error);
      l.down_[y].push_back(l.covers_.size());
      l.up_[x].push_back(l.covers_.size());
      l.covers_.push_back(std::move(c));
    }
  }

  l.join_.assign(n * n, kNoElement);
  l.meet_.assign(n * n, kNoElement);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto lookup = [&](Subcat s) {
        auto it = l.index_.find(s);
        return it == l.index_.end() ? kNoElement : it->second;
      };
      const std::size_t jn = lookup(t_closure(p, l.elements_[i] | l.elements_[j]));
      const std::size_t mt = lookup(l.elements_[i] & l.elements_[j]);
      l.join_[i * n + j] = l.join_[j * n + i] = jn;
      l.meet_[i * n + j] = l.meet_[j * n + i] = mt;
    }
  }
  return l;
}

std::optional<std::size_t> TorsLattice::find(Subcat s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> TorsLattice::cover_between(std::size_t upper, std::size_t lower) const {
  for (std::size_t c : down_.at(upper)) {
    if (covers_[c].lower == lower) return c;
  }
  return std::nullopt;
}

// Labels

Subcat bricks_in(const Presentation& p, Subcat u, Subcat t) {
  return p.bricks() & perp_right(p, u) & t;
}

LabelResult label_cover(const Presentation& p, Subcat upper, Subcat lower) {
  LabelResult r;
  const Subcat bricks = bricks_in(p, lower, upper);
  if (bricks.empty()) {
    r.error = "NoLabel: no brick in " + key(p, lower) + "^perp ∩ " + key(p, upper);
    return r;
  }
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  bricks.for_each([&](std::size_t i) { best = std::min(best, p.theta(i)); });
  Subcat minimal;
  bricks.for_each([&](std::size_t i) {
    if (p.theta(i) == best) minimal.insert(i);
  });
  if (minimal.size() > 1) {
    r.error = "AmbiguousLabel: minimal-theta bricks " + key(p, minimal) + " between " +
              key(p, upper) + " and " + key(p, lower);
    return r;
  }
  const std::size_t s = minimal.members().front();
  const Subcat single = Subcat::single(s);
  std::string why;
  if (t_closure(p, lower | single) != upper) why = "T(U ∪ S) != T";
  if (why.empty() && (upper & perp_left(p, single)) != lower) why = "T ∩ ^perp S != U";
  if (why.empty()) {
    bricks.for_each([&](std::size_t other) {
      const Subcat o = Subcat::single(other);
      if (why.empty() && !(sub_theta(p, o) & fac_theta(p, o)).contains(s)) {
        why = "S not in Sub(S') ∩ Fac(S') for S' = " + id_of(p, other);
      }
    });
  }
  if (!why.empty()) {
    r.error = "NoLabel: candidate " + id_of(p, s) + " on " + key(p, upper) + " -> " +
              key(p, lower) + " fails: " + why;
    return r;
  }
  r.brick = s;
  return r;
}

std::size_t brick_label(const Presentation& p, Subcat upper, Subcat lower) {
  LabelResult r = label_cover(p, upper, lower);
  if (!r.brick) throw Error(ErrorKind::contract, r.error);
  return *r.brick;
}

// Checks

Report check_join_meet(const TorsLattice& l) {
  Report rep{"join/meet formulas", {}, {}};
  const std::size_t n = l.size();
  if (n == 0) {
    rep.fail("empty lattice");
    return rep;
  }
  if (!l.element(l.bottom()).empty()) rep.fail("bottom is not the zero subcategory");
  for (std::size_t i = 0; i < n; ++i) {
    if (!l.element(i).subset_of(l.element(l.top()))) rep.fail("top is not the largest element");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      // Least upper bound and greatest lower bound by direct scan.
      std::size_t lub = kNoElement, glb = kNoElement;
      for (std::size_t z = 0; z < n; ++z) {
        if (l.leq(x, z) && l.leq(y, z) && (lub == kNoElement || l.leq(z, lub))) lub = z;
        if (l.leq(z, x) && l.leq(z, y) && (glb == kNoElement || l.leq(glb, z))) glb = z;
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (lub != kNoElement && l.leq(x, z) && l.leq(y, z) && !l.leq(lub, z)) lub = kNoElement;
        if (glb != kNoElement && l.leq(z, x) && l.leq(z, y) && !l.leq(z, glb)) glb = kNoElement;
      }
      const std::string pair = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      if (lub == kNoElement) rep.fail("no least upper bound for " + pair);
      if (glb == kNoElement) rep.fail("no greatest lower bound for " + pair);
      if (l.join(x, y) != lub) rep.fail("T(x ∪ y) differs from the least upper bound for " + pair);
      if (l.meet(x, y) != glb) rep.fail("x ∩ y differs from the greatest lower bound for " + pair);
    }
  }
  return rep;
}

namespace {

bool tables_complete(const TorsLattice& l) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      if (l.join(x, y) == kNoElement || l.meet(x, y) == kNoElement) return false;
    }
  }
  return true;
}

// Calls f on every subset of `pool` with 2..bound elements.
template <class F>
void for_small_subsets(const std::vector<std::size_t>& pool, unsigned bound, F&& f) {
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() >= 2) f(pick);
    if (pick.size() == bound) return;
    for (std::size_t k = from; k < pool.size(); ++k) {
      pick.push_back(pool[k]);
      self(self, k + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

Report check_semidistributive(const TorsLattice& l, unsigned subset_bound) {
  Report rep{"semidistributivity", {}, {}};
  const std::size_t n = l.size();
  if (!tables_complete(l)) {
    rep.fail("join/meet tables are incomplete; the enumeration is not a lattice");
    return rep;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        auto at = [&] {
          return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
        };
        if (l.meet(x, y) == l.meet(x, z) && l.meet(x, l.join(y, z)) != l.meet(x, y)) {
          rep.fail("SD-meet fails at " + at());
        }
        if (l.join(x, y) == l.join(x, z) && l.join(x, l.meet(y, z)) != l.join(x, y)) {
          rep.fail("SD-join fails at " + at());
        }
      }
    }
  }
  // Subset forms: for each x, the elements sharing a meet (join) with x.
  std::size_t subsets = 0;
  for (std::size_t x = 0; x < n; ++x) {
    std::map<std::size_t, std::vector<std::size_t>> by_meet, by_join;
    for (std::size_t y = 0; y < n; ++y) {
      by_meet[l.meet(x, y)].push_back(y);
      by_join[l.join(x, y)].push_back(y);
    }
    for (const auto& [a, group] : by_meet) {
      std::size_t whole = l.bottom();
      for (std::size_t y : group) whole = l.join(whole, y);
      if (l.meet(x, whole) != a) rep.fail("complete SD-meet fails at x=" + std::to_string(x));
      for_small_subsets(group, subset_bound, [&](const std::vector<std::size_t>& pick) {
        ++subsets;
        std::size_t j = pick.front();
        for (std::size_t y : pick) j = l.join(j, y);
        if (l.meet(x, j) != a) rep.fail("SD-meet fails for a subset at x=" + std::to_string(x));
      });
    }
    for (const auto& [a, group] : by_join) {
      std::size_t whole = l.top();
      for (std::size_t y : group) whole = l.meet(whole, y);
      if (l.join(x, whole) != a) rep.fail("complete SD-join fails at x=" + std::to_string(x));
      for_small_subsets(group, subset_bound, [&](const std::vector<std::size_t>& pick) {
        ++subsets;
        std::size_t m = pick.front();
        for (std::size_t y : pick) m = l.meet(m, y);
        if (l.join(x, m) != a) rep.fail("SD-join fails for a subset at x=" + std::to_string(x));
      });
    }
  }
  rep.note("triples checked: " + std::to_string(n * n * (n ? n - 1 : 0) / 2));
  rep.note("subset bound " + std::to_string(subset_bound) + ", subsets checked: " +
           std::to_string(subsets));
  return rep;
}

Report check_algebraic(const TorsLattice& l, const Presentation& p) {
  Report rep{"algebraicity", {}, {}};
  if (!tables_complete(l)) {
    rep.fail("join/meet tables are incomplete; the enumeration is not a lattice");
    return rep;
  }
  std::vector<std::size_t> singleton(p.size(), kNoElement);
  for (std::size_t m = 0; m < p.size(); ++m) {
    auto idx = l.find(t_closure(p, Subcat::single(m)));
    if (!idx) {
      rep.fail("T(" + id_of(p, m) + ") is not a lattice element");
      return rep;
    }
    singleton[m] = *idx;
  }
  std::size_t witnesses = 0;
  for (std::size_t t = 0; t < l.size(); ++t) {
    std::size_t acc = l.bottom();
    l.element(t).for_each([&](std::size_t m) { acc = l.join(acc, singleton[m]); });
    if (acc != t) rep.fail(key(p, l.element(t)) + " is not the join of its singleton closures");

    // Compactness: each singleton closure below t is reached by a finite
    // greedy prefix of the family of elements below t.
    std::vector<std::size_t> family;
    for (std::size_t z = 0; z < l.size(); ++z) {
      if (l.leq(z, t)) family.push_back(z);
    }
    l.element(t).for_each([&](std::size_t m) {
      std::size_t joined = l.bottom(), used = 0;
      for (std::size_t z : family) {
        if (l.leq(singleton[m], joined)) break;
        if (l.leq(z, joined)) continue;
        joined = l.join(joined, z);
        ++used;
      }
      if (!l.leq(singleton[m], joined) || used > p.size()) {
        rep.fail("no finite witness for T(" + id_of(p, m) + ") below " + key(p, l.element(t)));
      }
      ++witnesses;
    });
  }
  rep.note("compactness witnesses: " + std::to_string(witnesses));
  return rep;
}

Report check_labels(const TorsLattice& l) {
  Report rep{"brick labeling", {}, {}};
  for (const Cover& c : l.covers()) {
    if (!c.label) rep.fail(c.label_error);
  }
  rep.note("covers: " + std::to_string(l.covers().size()));
  return rep;
}

Report interval_check(const Presentation& p, const TorsLattice& l, std::size_t u,
                      std::size_t t) {
  Report rep{"interval", {}, {}};
  const Subcat us = l.element(u), ts = l.element(t);
  const std::string where = "[" + key(p, us) + ", " + key(p, ts) + "]";
  if (!us.subset_of(ts)) {
    rep.fail(where + " is not an interval");
    return rep;
  }
  std::size_t size = 0;
  for (std::size_t z = 0; z < l.size(); ++z) {
    if (us.subset_of(l.element(z)) && l.element(z).subset_of(ts)) ++size;
  }
  const Subcat bricks = bricks_in(p, us, ts);
  if ((size == 1) != bricks.empty()) {
    rep.fail(where + ": size " + std::to_string(size) + " but bricks " + key(p, bricks));
  }
  if (bricks.size() == 1 && size != 2) {
    rep.fail(where + ": one brick but size " + std::to_string(size));
  }
  if (size == 2) {
    LabelResult r = label_cover(p, ts, us);
    if (!r.brick) rep.fail(where + ": " + r.error);
  }
  return rep;
}

Report interval_check_all(const Presentation& p, const TorsLattice& l) {
  Report rep{"intervals", {}, {}};
  std::size_t count = 0;
  for (std::size_t u = 0; u < l.size(); ++u) {
    for (std::size_t t = 0; t < l.size(); ++t) {
      if (!l.leq(u, t)) continue;
      ++count;
      Report r = interval_check(p, l, u, t);
      for (auto& f : r.failures) rep.fail(std::move(f));
    }
  }
  rep.note("intervals checked: " + std::to_string(count));
  return rep;
}

Irreducibles irr_elements(const TorsLattice& l) {
  Irreducibles out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l.lower_covers(i).size() == 1) out.join.push_back(i);
    if (l.upper_covers(i).size() == 1) out.meet.push_back(i);
  }
  return out;
}

BrickSplit jbrick_mbrick(const Presentation& p, Subcat u, Subcat t) {
  BrickSplit out;
  bricks_in(p, u, t).for_each([&](std::size_t s) {
    const Subcat single = Subcat::single(s);
    const Subcat left = perp_left(p, single);
    if (is_torsion_class(p, t & left)) out.mbrick.insert(s);
    if (is_torsion_class(p, t_closure(p, u | single) & left)) out.jbrick.insert(s);
  });
  return out;
}

Report standard_check(const Presentation& p) {
  Report rep{"standard", {}, {}};
  p.bricks().for_each([&](std::size_t s) {
    const Subcat single = Subcat::single(s);
    const Subcat both = sub_theta(p, single) & fac_theta(p, single);
    if (both != single) {
      rep.fail("Sub(" + id_of(p, s) + ") ∩ Fac(" + id_of(p, s) + ") = " + key(p, both));
    }
  });
  return rep;
}

Report irreducible_bijection_check(const Presentation& p, const TorsLattice& l, std::size_t u,
                         std::size_t t) {
  Report rep{"brick/irreducible bijections", {}, {}};
  const Subcat us = l.element(u), ts = l.element(t);
  const std::string where = "[" + key(p, us) + ", " + key(p, ts) + "]";
  if (!standard_check(p).ok()) {
    rep.fail("presentation is not standard");
    return rep;
  }
  auto in_interval = [&](std::size_t z) {
    return us.subset_of(l.element(z)) && l.element(z).subset_of(ts);
  };
  std::vector<std::size_t> members;
  for (std::size_t z = 0; z < l.size(); ++z) {
    if (in_interval(z)) members.push_back(z);
  }
  auto lower_in = [&](std::size_t z) {
    std::vector<std::size_t> out;
    for (std::size_t c : l.lower_covers(z)) {
      if (in_interval(l.covers()[c].lower)) out.push_back(c);
    }
    return out;
  };
  auto upper_in = [&](std::size_t z) {
    std::vector<std::size_t> out;
    for (std::size_t c : l.upper_covers(z)) {
      if (in_interval(l.covers()[c].upper)) out.push_back(c);
    }
    return out;
  };
  std::set<std::size_t> jirr, mirr;
  for (std::size_t z : members) {
    if (lower_in(z).size() == 1) jirr.insert(z);
    if (upper_in(z).size() == 1) mirr.insert(z);
  }

  const Subcat bricks = bricks_in(p, us, ts);
  if ((members.size() == 2) != (bricks.size() == 1)) {
    rep.fail(where + ": size-2 and single-brick conditions disagree");
  }
  if (bricks.size() == 1) {
    const Subcat single = Subcat::single(bricks.members().front());
    if ((perp_right(p, us) & ts) != filt_closure(p, single, true)) {
      rep.fail(where + ": U^perp ∩ T differs from Filt(S)");
    }
  }

  const BrickSplit split = jbrick_mbrick(p, us, ts);
  std::set<std::size_t> jimage, mimage;
  split.jbrick.for_each([&](std::size_t s) {
    const Subcat single = Subcat::single(s);
    auto ts_idx = l.find(t_closure(p, us | single));
    if (!ts_idx || !jirr.contains(*ts_idx)) {
      rep.fail(where + ": T(U ∪ " + id_of(p, s) + ") is not join-irreducible");
      return;
    }
    if (!jimage.insert(*ts_idx).second) rep.fail(where + ": Jbrick map is not injective");
    const Cover& c = l.covers()[lower_in(*ts_idx).front()];
    if (l.element(c.lower) != (l.element(*ts_idx) & perp_left(p, single))) {
      rep.fail(where + ": lower cover of T_" + id_of(p, s) + " is not T_S ∩ ^perp S");
    }
    if (c.label != s) rep.fail(where + ": arrow out of T_" + id_of(p, s) + " has another label");
  });
  split.mbrick.for_each([&](std::size_t s) {
    const Subcat single = Subcat::single(s);
    auto us_idx = l.find(ts & perp_left(p, single));
    if (!us_idx || !mirr.contains(*us_idx)) {
      rep.fail(where + ": T ∩ ^perp " + id_of(p, s) + " is not meet-irreducible");
      return;
    }
    if (!mimage.insert(*us_idx).second) rep.fail(where + ": Mbrick map is not injective");
    const Cover& c = l.covers()[upper_in(*us_idx).front()];
    if (l.element(c.upper) != t_closure(p, l.element(*us_idx) | single)) {
      rep.fail(where + ": upper cover of U_" + id_of(p, s) + " is not T(U_S ∪ S)");
    }
    if (c.label != s) rep.fail(where + ": arrow into U_" + id_of(p, s) + " has another label");
  });
  if (jimage != jirr) rep.fail(where + ": Jbrick map is not onto the join-irreducibles");
  if (mimage != mirr) rep.fail(where + ": Mbrick map is not onto the meet-irreducibles");
  return rep;
}

Report top_bottom_arrows_check(const Presentation& p, const EnumerationOptions& opts) {
  Report rep{"arrows at top and bottom", {}, {}};
  const Strata s = strata(p);
  const Presentation q = s.theta1 == s.theta_inf ? p : with_length_of(p, s.theta_inf);
  if (!(s.theta1 == s.theta_inf)) rep.note("relabeled by the filtration length of Θ∞");
  const TorsLattice l = TorsLattice::build(q, enumerate_tors(q, opts));
  const Subcat theta1 = strata(q).theta1;

  std::set<std::tuple<std::uint64_t, std::uint64_t, std::size_t>> top_seen, top_want,
      bottom_seen, bottom_want;
  for (const Cover& c : l.covers()) {
    const std::size_t label = c.label.value_or(kNoElement);
    if (c.upper == l.top()) {
      top_seen.emplace(l.element(c.upper).bits(), l.element(c.lower).bits(), label);
    }
    if (c.lower == l.bottom()) {
      bottom_seen.emplace(l.element(c.upper).bits(), l.element(c.lower).bits(), label);
    }
  }
  theta1.for_each([&](std::size_t x) {
    const Subcat single = Subcat::single(x);
    top_want.emplace(q.all().bits(), perp_left(q, single).bits(), x);
    const Subcat tx = t_closure(q, single);
    if (tx != single) rep.note("T(" + q.indec(x).id + ") = " + key(q, tx) + " is larger than add " + q.indec(x).id);
    bottom_want.emplace(tx.bits(), std::uint64_t{0}, x);
  });
  if (top_seen != top_want) rep.fail("arrows out of the top differ from A -> ^perp X, X in Θ1");
  if (bottom_seen != bottom_want) rep.fail("arrows into the bottom differ from T(X) -> 0, X in Θ1");
  return rep;
}

namespace {

// Covers of the torsion-free lattice, upper -> lower, keyed by bitsets.
std::vector<std::pair<Subcat, Subcat>> torf_covers(const std::vector<Subcat>& torf) {
  std::vector<std::pair<Subcat, Subcat>> out;
  for (Subcat y : torf) {
    for (Subcat x : torf) {
      if (!x.proper_subset_of(y)) continue;
      const bool cover = std::none_of(torf.begin(), torf.end(), [&](Subcat z) {
        return x.proper_subset_of(z) && z.proper_subset_of(y);
      });
      if (cover) out.emplace_back(y, x);
    }
  }
  return out;
}

std::optional<std::size_t> torf_label(const Presentation& p, Subcat upper, Subcat lower) {
  const Subcat bricks = p.bricks() & perp_left(p, lower) & upper;
  std::optional<std::size_t> best;
  bricks.for_each([&](std::size_t i) {
    if (!best || p.theta(i) < p.theta(*best)) best = i;
  });
  return best;
}

}  // namespace

Report dual_lattice_check(const Presentation& p, const TorsLattice& l,
                          const EnumerationOptions& opts) {
  Report rep{"tors/torf duality", {}, {}};
  const std::vector<Subcat> torf = enumerate_torf(p, opts);
  std::set<std::uint64_t> torf_set;
  for (Subcat f : torf) torf_set.insert(f.bits());
  std::set<std::uint64_t> image;
  for (Subcat t : l.elements()) {
    const Subcat f = perp_right(p, t);
    if (!torf_set.contains(f.bits())) rep.fail(key(p, t) + "^perp is not torsion-free");
    image.insert(f.bits());
  }
  if (image != torf_set) rep.fail("T -> T^perp is not a bijection onto torf");
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      const Subcat fx = perp_right(p, l.element(x)), fy = perp_right(p, l.element(y));
      if (l.leq(x, y) != fy.subset_of(fx)) rep.fail("T -> T^perp does not reverse order");
      if (l.join(x, y) != kNoElement &&
          perp_right(p, l.element(l.join(x, y))) != (fx & fy)) {
        rep.fail("(T1 ∨ T2)^perp != T1^perp ∩ T2^perp");
      }
    }
  }
  // Labeled covers T -S-> U correspond to U^perp -S-> T^perp.
  std::set<std::tuple<std::uint64_t, std::uint64_t, std::size_t>> from_tors, from_torf;
  for (const Cover& c : l.covers()) {
    from_tors.emplace(perp_right(p, l.element(c.lower)).bits(),
                      perp_right(p, l.element(c.upper)).bits(), c.label.value_or(kNoElement));
  }
  for (auto [upper, lower] : torf_covers(torf)) {
    from_torf.emplace(upper.bits(), lower.bits(),
                      torf_label(p, upper, lower).value_or(kNoElement));
  }
  if (from_tors != from_torf) rep.fail("labeled covers are not preserved by T -> T^perp");
  return rep;
}

Report torsion_pairs_check(const Presentation& p, const std::vector<Subcat>& tors,
                           const std::vector<Subcat>& torf) {
  Report rep{"torsion pairs", {}, {}};
  std::set<std::uint64_t> torf_set, hit;
  for (Subcat f : torf) torf_set.insert(f.bits());
  for (Subcat t : tors) {
    try {
      const Subcat f = torsion_pair_of(p, t).second;
      if (!torf_set.contains(f.bits())) rep.fail(key(p, t) + "^perp is not a torsion-free class");
      hit.insert(f.bits());
    } catch (const Error& e) {
      rep.fail(e.what());
    }
  }
  for (Subcat f : torf) {
    if (perp_right(p, perp_left(p, f)) != f) {
      rep.fail("(^perp F)^perp != F for F = " + key(p, f));
    }
  }
  if (hit != torf_set) rep.fail("T -> T^perp misses some torsion-free classes");
  return rep;
}

}  // namespace exlen
