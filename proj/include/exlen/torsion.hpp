#pragma once

#include <utility>
#include <vector>

#include "exlen/model.hpp"

namespace exlen {

struct EnumerationOptions {
  std::size_t max_indecs = 22;
  unsigned jobs = 1;
};

Subcat fac_theta(const Presentation& p, Subcat s);
Subcat sub_theta(const Presentation& p, Subcat s);

/// Smallest torsion class containing s: joint fixpoint of the quotient rule
/// and the stable-extension rule.
Subcat t_closure(const Presentation& p, Subcat s);
/// Smallest torsion-free class containing s.
Subcat f_closure(const Presentation& p, Subcat s);

bool is_torsion_class(const Presentation& p, Subcat s);
bool is_torsionfree_class(const Presentation& p, Subcat s);

/// {t_closure(s) : s subset of indecs}, deduplicated, in canonical order.
/// Throws Error(bound) when the presentation has more than max_indecs indecs.
std::vector<Subcat> enumerate_tors(const Presentation& p, const EnumerationOptions& opts = {});
std::vector<Subcat> enumerate_torf(const Presentation& p, const EnumerationOptions& opts = {});

/// Indecs with no nonzero map from (perp_right), resp. to (perp_left), s.
Subcat perp_right(const Presentation& p, Subcat s);
Subcat perp_left(const Presentation& p, Subcat s);

/// (t, t^perp). Throws Error(contract) if ^perp(t^perp) != t.
std::pair<Subcat, Subcat> torsion_pair_of(const Presentation& p, Subcat t);

}  // namespace exlen
