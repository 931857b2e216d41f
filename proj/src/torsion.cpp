#include "exlen/torsion.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace exlen {

Subcat fac_theta(const Presentation& p, Subcat s) { return close_under(s, {p.quotient_rules()}); }

Subcat sub_theta(const Presentation& p, Subcat s) { return close_under(s, {p.subobject_rules()}); }

Subcat t_closure(const Presentation& p, Subcat s) {
  return close_under(s, {p.quotient_rules(), p.extension_rules(true)});
}

Subcat f_closure(const Presentation& p, Subcat s) {
  return close_under(s, {p.subobject_rules(), p.extension_rules(true)});
}

bool is_torsion_class(const Presentation& p, Subcat s) { return t_closure(p, s) == s; }

bool is_torsionfree_class(const Presentation& p, Subcat s) { return f_closure(p, s) == s; }

namespace {

template <class Closure>
std::vector<Subcat> enumerate_closed(const Presentation& p, const EnumerationOptions& opts,
                                     Closure closure) {
  const std::size_t n = p.size();
  if (n > opts.max_indecs) {
    throw Error(ErrorKind::bound,
                "refusing to enumerate 2^" + std::to_string(n) + " subsets (bound is " +
                    std::to_string(opts.max_indecs) +
                    " indecs); raise --max-indecs if this is intended");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, 64));
  std::vector<std::unordered_set<Subcat, SubcatHash>> found(jobs);
  auto work = [&](unsigned w) {
    for (std::uint64_t bits = w; bits < total; bits += jobs) {
      found[w].insert(closure(Subcat{bits}));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  std::unordered_set<Subcat, SubcatHash> merged;
  for (auto& f : found) merged.insert(f.begin(), f.end());
  std::vector<Subcat> out(merged.begin(), merged.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::vector<Subcat> enumerate_tors(const Presentation& p, const EnumerationOptions& opts) {
  return enumerate_closed(p, opts, [&](Subcat s) { return t_closure(p, s); });
}

std::vector<Subcat> enumerate_torf(const Presentation& p, const EnumerationOptions& opts) {
  return enumerate_closed(p, opts, [&](Subcat s) { return f_closure(p, s); });
}

Subcat perp_right(const Presentation& p, Subcat s) {
  Subcat out = p.all() - s;
  s.for_each([&](std::size_t i) { out = out - p.hom_out(i); });
  // A member of s maps to itself, so only members with zero endomorphisms survive.
  s.for_each([&](std::size_t i) {
    if (p.hom_dim(i, i) == 0 && !p.hom_in(i).intersects(s)) out.insert(i);
  });
  return out;
}

Subcat perp_left(const Presentation& p, Subcat s) {
  Subcat out = p.all() - s;
  s.for_each([&](std::size_t i) { out = out - p.hom_in(i); });
  s.for_each([&](std::size_t i) {
    if (p.hom_dim(i, i) == 0 && !p.hom_out(i).intersects(s)) out.insert(i);
  });
  return out;
}

std::pair<Subcat, Subcat> torsion_pair_of(const Presentation& p, Subcat t) {
  const Subcat f = perp_right(p, t);
  if (perp_left(p, f) != t) {
    throw Error(ErrorKind::contract, "torsion pair round trip fails for " + describe(p, t) +
                                         ": ^perp(T^perp) = " + describe(p, perp_left(p, f)));
  }
  return {t, f};
}

}  // namespace exlen
