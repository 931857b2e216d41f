#include <doctest.h>

#include <set>

#include "exlen/tautilt.hpp"
#include "support.hpp"

using namespace exlen;
using exlen::testing::all_subsets;
using exlen::testing::corpus;
using exlen::testing::ids;

namespace {

// Oracle: support tau-tilting sets by direct scan of the ext table.
std::set<std::uint64_t> stilt_oracle(const Presentation& p) {
  std::set<std::uint64_t> out;
  for (Subcat s : all_subsets(p)) {
    const Subcat fac = fac_theta(p, s);
    bool rigid = true, proj = true;
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t m = 0; m < p.size(); ++m) {
        if (s.contains(x) && fac.contains(m) && p.ext(x, m)) rigid = false;
      }
    }
    for (std::size_t x = 0; x < p.size(); ++x) {
      bool no_ext = true;
      for (std::size_t m = 0; m < p.size(); ++m) no_ext = no_ext && !(fac.contains(m) && p.ext(x, m));
      if (fac.contains(x) && (no_ext != s.contains(x))) proj = false;
    }
    if (rigid && proj && is_torsion_class(p, fac)) out.insert(s.bits());
  }
  return out;
}

}  // namespace

TEST_SUITE("tautilt") {

TEST_CASE("A327 projectives and injectives") {
  const Presentation p = corpus("A327");
  CHECK(theta_projectives(p, p.all()) == ids(p, {"S2m", "I2m", "S3"}));
  CHECK(theta_injectives(p, p.all()) == ids(p, {"P1", "P2", "S3"}));
  CHECK(theta_projectives(p, Subcat{}) == Subcat{});
  CHECK(enough_projectives_check(p));
  CHECK(enough_injectives_check(p));
}

TEST_CASE("mod kA2 projectives") {
  const Presentation p = corpus("modkA2");
  CHECK(theta_projectives(p, p.all()) == ids(p, {"S2", "P1"}));
  CHECK(enough_projectives_check(p));
  const TauTiltRecord r = support_tors(p, ids(p, {"P1", "S1"}));
  CHECK(r.ptors == ids(p, {"P1", "S1"}));
  CHECK(r.support);
}

TEST_CASE("enough projectives fails when an indec is unreachable") {
  CHECK_FALSE(enough_projectives_check(corpus("negative/missing_conflation")));
}

TEST_CASE("tau-rigidity") {
  const Presentation p = corpus("A327");
  CHECK(tau_rigid_check(p, Subcat{}));
  CHECK(tau_rigid_check(p, ids(p, {"S3", "P2", "P1"})));
  CHECK_FALSE(tau_rigid_check(p, ids(p, {"P1", "S1m"})));
  const Presentation n = corpus("nilpotent2");
  CHECK_FALSE(tau_rigid_check(n, ids(n, {"S"})));
  CHECK(tau_rigid_check(n, ids(n, {"M"})));
}

TEST_CASE("support records") {
  const Presentation p = corpus("A327");
  const TauTiltRecord top = support_tors(p, p.all());
  CHECK(top.ptors == ids(p, {"S2m", "I2m", "S3"}));
  CHECK(top.support);
  const TauTiltRecord bottom = support_tors(p, Subcat{});
  CHECK(bottom.ptors.empty());
  CHECK(bottom.support);
  CHECK_THROWS_AS(support_tors(p, ids(p, {"S3"})), Error);
  CHECK(stau_tilt_check(p, theta_projectives(p, p.all())));
  CHECK_FALSE(stau_tilt_check(p, ids(p, {"P1", "S1m"})));
  const auto s3 = support_tors(p, ids(p, {"S3", "P2", "P1"}));
  CHECK(s3.ptors == ids(p, {"S3", "P2", "P1"}));
  CHECK(stau_tilt_check(p, s3.ptors));
}

TEST_CASE("support tau-tilting sets match the oracle and the torsion classes") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Presentation p = corpus(name);
    const auto tors = enumerate_tors(p);
    std::set<std::uint64_t> from_tors;
    for (Subcat t : tors) {
      const TauTiltRecord r = support_tors(p, t);
      CHECK(r.support);
      CHECK(tau_rigid_check(p, r.ptors));
      from_tors.insert(r.ptors.bits());
    }
    CHECK_MESSAGE(from_tors == stilt_oracle(p), name);
    CHECK(from_tors.size() == tors.size());
  }
  CHECK(stilt_oracle(corpus("modkA2")).size() == 5);
}

TEST_CASE("bijection checks pass on every corpus") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Report r = bijection_check(corpus(name));
    CHECK_MESSAGE(r.ok(), name << ": " << (r.failures.empty() ? "" : r.failures.front()));
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes.back().find("finite-case criterion") != std::string::npos);
  }
  CHECK_FALSE(bijection_check(corpus("negative/missing_conflation")).ok());
}

TEST_CASE("composite map and its inverse on A327") {
  const Presentation p = corpus("A327");
  for (Subcat t : enumerate_tors(p)) {
    const Subcat s = theta_projectives(p, t);
    const Subcat image = theta_injectives(p, perp_right(p, fac_theta(p, s)));
    CHECK(stau_inverse_tilt_check(p, image));
    CHECK(theta_projectives(p, perp_left(p, sub_theta(p, image))) == s);
  }
}

TEST_CASE("pairing table rows") {
  const Presentation p = corpus("modkA2");
  const auto rows = pairing_table(p);
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().tors.empty());
  CHECK(rows.front().torf == p.all());
  CHECK(rows.front().itorf == theta_injectives(p, p.all()));
  CHECK(rows.back().ptors == theta_projectives(p, p.all()));
}

}
