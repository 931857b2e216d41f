#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "exlen/model.hpp"

namespace exlen {

/// Summand closure of Filt(x): least fixpoint under the extension rule of
/// every recorded conflation (stable ones only when `stable_only`).
Subcat filt_closure(const Presentation& p, Subcat x, bool stable_only);

struct FiltLength {
  std::optional<unsigned> length;  // nullopt: m is not in Filt(x)
  bool cap_hit = false;            // search pruned a state above the multiplicity cap
};

inline constexpr unsigned kDefaultMultCap = 3;

/// Minimal length of an x-filtration of m, by breadth-first search over
/// object classes. A step peels one member of x off the bottom of m, either
/// as a split summand or along a recorded conflation x_i >-> b ->> c with
/// b a summand of m.
FiltLength filt_length(const Presentation& p, Subcat x, const ObjClass& m, bool stable_only,
                       unsigned mult_cap = kDefaultMultCap);

bool semibrick_check(const Presentation& p, Subcat x);
bool sms_check(const Presentation& p, Subcat x);

/// Every semibrick among the indecomposables, in canonical order.
std::vector<Subcat> enumerate_semibricks(const Presentation& p);

/// l_x(b) = l_x(a) + l_x(c) for every recorded conflation inside Filt(x).
/// Only relative to the recorded conflations.
bool proper_relative(const Presentation& p, Subcat x, unsigned mult_cap = kDefaultMultCap);

struct Strata {
  Subcat theta1;
  std::vector<std::pair<unsigned, Subcat>> levels;  // (normalized level n, Θ'_n), n >= 2
  Subcat theta_inf;
};

Strata strata(const Presentation& p);

/// Simple objects of the stable-extension-closed subcategory c. Throws
/// Error(contract) if c is not closed under stable extensions.
Subcat simples(const Presentation& p, Subcat c);

/// Same presentation with Θ replaced by l_x and stability flags recomputed.
/// x must generate every indecomposable (Error(contract) otherwise).
Presentation with_length_of(const Presentation& p, Subcat x, unsigned mult_cap = kDefaultMultCap);

/// sim(Filt(x)) == x, where stability inside Filt(x) is measured by l_x.
/// Throws Error(argument) unless x is a semibrick.
bool length_wide_roundtrip(const Presentation& p, Subcat x, unsigned mult_cap = kDefaultMultCap);

}  // namespace exlen
