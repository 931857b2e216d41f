#include "exlen/tautilt.hpp"

#include <map>
#include <set>

namespace exlen {

namespace {

// Some x in `from` has E_Θ(x, m) != 0 for some m in `to`.
bool ext_between(const Presentation& p, Subcat from, Subcat to) {
  bool hit = false;
  from.for_each([&](std::size_t x) {
    to.for_each([&](std::size_t m) { hit = hit || p.ext(x, m); });
  });
  return hit;
}

}  // namespace

Subcat theta_projectives(const Presentation& p, Subcat scope) {
  Subcat out;
  scope.for_each([&](std::size_t m) {
    if (!ext_between(p, Subcat::single(m), scope)) out.insert(m);
  });
  return out;
}

Subcat theta_injectives(const Presentation& p, Subcat scope) {
  Subcat out;
  scope.for_each([&](std::size_t m) {
    if (!ext_between(p, scope, Subcat::single(m))) out.insert(m);
  });
  return out;
}

bool enough_projectives_check(const Presentation& p) {
  return fac_theta(p, theta_projectives(p, p.all())) == p.all();
}

bool enough_injectives_check(const Presentation& p) {
  return sub_theta(p, theta_injectives(p, p.all())) == p.all();
}

bool tau_rigid_check(const Presentation& p, Subcat s) {
  return !ext_between(p, s, fac_theta(p, s));
}

bool tau_inverse_rigid_check(const Presentation& p, Subcat s) {
  return !ext_between(p, sub_theta(p, s), s);
}

TauTiltRecord support_tors(const Presentation& p, Subcat t) {
  if (!is_torsion_class(p, t)) {
    throw Error(ErrorKind::argument, describe(p, t) + " is not a torsion class");
  }
  TauTiltRecord r{t, theta_projectives(p, t), false};
  r.support = fac_theta(p, r.ptors) == t;
  return r;
}

TauInverseRecord support_torf(const Presentation& p, Subcat f) {
  if (!is_torsionfree_class(p, f)) {
    throw Error(ErrorKind::argument, describe(p, f) + " is not a torsion-free class");
  }
  TauInverseRecord r{f, theta_injectives(p, f), false};
  r.support = sub_theta(p, r.itorf) == f;
  return r;
}

bool stau_tilt_check(const Presentation& p, Subcat s) {
  const Subcat fac = fac_theta(p, s);
  if (theta_projectives(p, fac) != s || !tau_rigid_check(p, s)) return false;
  return is_torsion_class(p, fac) && support_tors(p, fac).support;
}

bool stau_inverse_tilt_check(const Presentation& p, Subcat s) {
  const Subcat sub = sub_theta(p, s);
  if (theta_injectives(p, sub) != s || !tau_inverse_rigid_check(p, s)) return false;
  return is_torsionfree_class(p, sub) && support_torf(p, sub).support;
}

Report bijection_check(const Presentation& p, const EnumerationOptions& opts) {
  Report rep{"support tau-tilting bijections", {}, {}};
  auto key = [&](Subcat s) { return describe(p, s); };
  const auto tors = enumerate_tors(p, opts);
  const auto torf = enumerate_torf(p, opts);

  std::set<std::uint64_t> stilt;
  std::size_t support_count = 0;
  for (Subcat t : tors) {
    const TauTiltRecord r = support_tors(p, t);
    if (!r.support) {
      rep.fail("torsion class " + key(t) + " fails T = Fac(P(T)) (support, finite-case criterion)");
      continue;
    }
    ++support_count;
    if (fac_theta(p, r.ptors) != t) rep.fail("Fac(P(T)) != T for T = " + key(t));
    if (theta_projectives(p, fac_theta(p, r.ptors)) != r.ptors) {
      rep.fail("P(Fac(P(T))) != P(T) for T = " + key(t));
    }
    if (!tau_rigid_check(p, r.ptors)) rep.fail("P(T) is not tau-rigid for T = " + key(t));
    if (!stau_tilt_check(p, r.ptors)) {
      rep.fail("P(T) is not support tau-tilting for T = " + key(t));
    }
    if (!stilt.insert(r.ptors.bits()).second) rep.fail("T -> P(T) is not injective");
  }
  if (support_count != tors.size()) {
    rep.fail(std::to_string(support_count) + " support torsion classes out of " +
             std::to_string(tors.size()));
  }

  std::set<std::uint64_t> sitilt;
  for (Subcat f : torf) {
    const TauInverseRecord r = support_torf(p, f);
    if (!r.support) {
      rep.fail("torsion-free class " + key(f) + " fails F = Sub(I(F))");
      continue;
    }
    if (theta_injectives(p, sub_theta(p, r.itorf)) != r.itorf) {
      rep.fail("I(Sub(I(F))) != I(F) for F = " + key(f));
    }
    if (!stau_inverse_tilt_check(p, r.itorf)) {
      rep.fail("I(F) is not support tau^-1-tilting for F = " + key(f));
    }
    if (!sitilt.insert(r.itorf.bits()).second) rep.fail("F -> I(F) is not injective");
  }

  // Composite S -> I(Fac(S)^perp) and its inverse T -> P(^perp Sub(T)).
  std::set<std::uint64_t> image;
  for (std::uint64_t bits : stilt) {
    const Subcat s{bits};
    const Subcat to = theta_injectives(p, perp_right(p, fac_theta(p, s)));
    if (!sitilt.contains(to.bits())) {
      rep.fail("I(Fac(S)^perp) is not support tau^-1-tilting for S = " + key(s));
    }
    if (theta_projectives(p, perp_left(p, sub_theta(p, to))) != s) {
      rep.fail("composite inverse does not return S = " + key(s));
    }
    image.insert(to.bits());
  }
  if (image != sitilt) rep.fail("S -> I(Fac(S)^perp) is not onto");
  rep.note("support (finite-case criterion): " + std::to_string(support_count) + " of " +
           std::to_string(tors.size()) + " torsion classes");
  return rep;
}

std::vector<PairingRow> pairing_table(const Presentation& p, const EnumerationOptions& opts) {
  std::vector<PairingRow> rows;
  for (Subcat t : enumerate_tors(p, opts)) {
    const TauTiltRecord r = support_tors(p, t);
    const Subcat f = perp_right(p, t);
    rows.push_back({t, f, r.ptors, theta_injectives(p, f), r.support});
  }
  return rows;
}

}  // namespace exlen
