#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exlen/model.hpp"
#include "exlen/report.hpp"
#include "exlen/torsion.hpp"

namespace exlen {

inline constexpr std::size_t kNoElement = std::numeric_limits<std::size_t>::max();

/// Hasse arrow upper -> lower with its brick label.
struct Cover {
  std::size_t upper = 0;
  std::size_t lower = 0;
  std::optional<std::size_t> label;
  std::string label_error;  // set when no unique label exists
};

class TorsLattice {
 public:
  /// `elements` must be enumerate_tors(p). Join/meet tables are filled with
  /// t_closure(x | y) and x & y; entries missing from `elements` become
  /// kNoElement and are reported by check_join_meet.
  static TorsLattice build(const Presentation& p, std::vector<Subcat> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Subcat>& elements() const { return elements_; }
  Subcat element(std::size_t i) const { return elements_.at(i); }
  std::optional<std::size_t> find(Subcat s) const;
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }
  bool leq(std::size_t i, std::size_t j) const {
    return elements_[i].subset_of(elements_[j]);
  }

  const std::vector<Cover>& covers() const { return covers_; }
  /// Indices into covers().
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_[i]; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  std::optional<std::size_t> cover_between(std::size_t upper, std::size_t lower) const;

  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }

 private:
  std::vector<Subcat> elements_;
  std::unordered_map<Subcat, std::size_t, SubcatHash> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> down_, up_;
  std::vector<std::size_t> join_, meet_;
};

/// Bricks in u^perp ∩ t.
Subcat bricks_in(const Presentation& p, Subcat u, Subcat t);

struct LabelResult {
  std::optional<std::size_t> brick;
  std::string error;  // "NoLabel: ..." or "AmbiguousLabel: ..."
};

/// Brick label of the cover upper -> lower: the minimal-Θ brick of
/// lower^perp ∩ upper, required to be unique and to satisfy
/// upper = T(lower ∪ S), lower = upper ∩ ^perp S and S ∈ Sub(S') ∩ Fac(S')
/// for every brick S' of the interval.
LabelResult label_cover(const Presentation& p, Subcat upper, Subcat lower);
/// Throwing form of label_cover (Error(contract) on NoLabel/AmbiguousLabel).
std::size_t brick_label(const Presentation& p, Subcat upper, Subcat lower);

Report check_join_meet(const TorsLattice& l);
Report check_semidistributive(const TorsLattice& l, unsigned subset_bound = 4);
Report check_algebraic(const TorsLattice& l, const Presentation& p);
Report check_labels(const TorsLattice& l);

/// Interval [u, t] given by lattice indices.
Report interval_check(const Presentation& p, const TorsLattice& l, std::size_t u, std::size_t t);
Report interval_check_all(const Presentation& p, const TorsLattice& l);

struct Irreducibles {
  std::vector<std::size_t> join;  // exactly one lower cover
  std::vector<std::size_t> meet;  // exactly one upper cover
};
Irreducibles irr_elements(const TorsLattice& l);

struct BrickSplit {
  Subcat jbrick;
  Subcat mbrick;
};
BrickSplit jbrick_mbrick(const Presentation& p, Subcat u, Subcat t);

/// Sub(S) ∩ Fac(S) = {S} for every brick S.
Report standard_check(const Presentation& p);
Report irreducible_bijection_check(const Presentation& p, const TorsLattice& l, std::size_t u,
                         std::size_t t);

/// Hasse arrows out of the top and into the bottom against the Θ_1 families,
/// after relabeling by l_{Θ∞} when Θ_1 != Θ_∞.
Report top_bottom_arrows_check(const Presentation& p, const EnumerationOptions& opts = {});

/// T -> T^perp is an anti-isomorphism onto the torsion-free lattice that
/// carries labeled covers to labeled covers.
Report dual_lattice_check(const Presentation& p, const TorsLattice& l,
                          const EnumerationOptions& opts = {});

/// Torsion pair round trips over the enumerated classes, and perp_right as a
/// bijection tors -> torf with inverse perp_left.
Report torsion_pairs_check(const Presentation& p, const std::vector<Subcat>& tors,
                           const std::vector<Subcat>& torf);

}  // namespace exlen
