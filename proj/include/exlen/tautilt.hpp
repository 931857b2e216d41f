#pragma once

#include <vector>

#include "exlen/model.hpp"
#include "exlen/report.hpp"
#include "exlen/torsion.hpp"

namespace exlen {

/// Members of `scope` with no nonzero Θ-extension into (projectives), resp.
/// out of (injectives), any member of `scope`.
Subcat theta_projectives(const Presentation& p, Subcat scope);
Subcat theta_injectives(const Presentation& p, Subcat scope);

bool enough_projectives_check(const Presentation& p);
bool enough_injectives_check(const Presentation& p);

/// E_Θ(x, m) = 0 for x in s and m in Fac_Θ(s).
bool tau_rigid_check(const Presentation& p, Subcat s);
/// Dual: E_Θ(m, x) = 0 for x in s and m in Sub_Θ(s).
bool tau_inverse_rigid_check(const Presentation& p, Subcat s);

/// A torsion class with its Θ-projectives. `support` records the
/// finite-case criterion T = Fac_Θ(P(T)).
struct TauTiltRecord {
  Subcat tors;
  Subcat ptors;
  bool support = false;
};

/// Throws Error(argument) if t is not a torsion class.
TauTiltRecord support_tors(const Presentation& p, Subcat t);

/// Dual record for a torsion-free class: I(F) and F = Sub_Θ(I(F)).
struct TauInverseRecord {
  Subcat torf;
  Subcat itorf;
  bool support = false;
};
TauInverseRecord support_torf(const Presentation& p, Subcat f);

/// s = P(Fac_Θ(s)), s τ-rigid, and Fac_Θ(s) a support torsion class.
bool stau_tilt_check(const Presentation& p, Subcat s);
/// s = I(Sub_Θ(s)), s τ⁻¹-rigid, and Sub_Θ(s) a support torsion-free class.
bool stau_inverse_tilt_check(const Presentation& p, Subcat s);

/// Round trips of S -> Fac_Θ(S), T -> P(T), their torsion-free duals, and
/// the composite S -> I(Fac_Θ(S)^perp) with inverse T -> P(^perp Sub_Θ(T)).
Report bijection_check(const Presentation& p, const EnumerationOptions& opts = {});

/// One row per torsion class: (T, T^perp, P(T), I(T^perp)).
struct PairingRow {
  Subcat tors;
  Subcat torf;
  Subcat ptors;
  Subcat itorf;
  bool support = false;
};
std::vector<PairingRow> pairing_table(const Presentation& p, const EnumerationOptions& opts = {});

}  // namespace exlen
