#include <doctest.h>

#include <set>

#include "exlen/filt.hpp"
#include "exlen/tautilt.hpp"
#include "exlen/torsion.hpp"
#include "support.hpp"

using namespace exlen;
using exlen::testing::all_subsets;
using exlen::testing::corpus;
using exlen::testing::ids;

namespace {

bool torsion_oracle(const Presentation& p, Subcat s) {
  return exlen::testing::closed_under_quotients(p, s) &&
         exlen::testing::closed_under_extensions(p, s);
}

bool torsionfree_oracle(const Presentation& p, Subcat s) {
  return exlen::testing::closed_under_subobjects(p, s) &&
         exlen::testing::closed_under_extensions(p, s);
}

std::vector<Subcat> filter_sorted(const Presentation& p, bool (*pred)(const Presentation&, Subcat)) {
  std::vector<Subcat> out;
  for (Subcat s : all_subsets(p)) {
    if (pred(p, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// One pass of a rule list from s, without iterating to a fixpoint.
Subcat single_step(const Presentation& p, Subcat s, bool quotient) {
  Subcat out = s;
  for (const auto& c : p.conflations()) {
    if (c.stable && c.b.support().subset_of(s)) out |= quotient ? c.c.support() : c.a.support();
  }
  return out;
}

}  // namespace

TEST_SUITE("torsion") {

TEST_CASE("enumeration equals the brute-force closed-subset oracle") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Presentation p = corpus(name);
    CHECK_MESSAGE(enumerate_tors(p) == filter_sorted(p, torsion_oracle), name);
    CHECK_MESSAGE(enumerate_torf(p) == filter_sorted(p, torsionfree_oracle), name);
  }
}

TEST_CASE("enumeration equals the oracle on random presentations") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const Presentation p = exlen::testing::random_presentation(rng);
    CHECK(enumerate_tors(p) == filter_sorted(p, torsion_oracle));
    EnumerationOptions par;
    par.jobs = 3;
    CHECK(enumerate_tors(p, par) == enumerate_tors(p));
  }
}

TEST_CASE("closures are smallest closed supersets") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Presentation p = exlen::testing::random_presentation(rng, 6);
    const Subcat s = exlen::testing::random_subset(rng, p);
    CHECK(t_closure(p, s) ==
          exlen::testing::smallest_closed_superset(p, s, [&](Subcat x) { return torsion_oracle(p, x); }));
    CHECK(f_closure(p, s) == exlen::testing::smallest_closed_superset(
                                 p, s, [&](Subcat x) { return torsionfree_oracle(p, x); }));
    CHECK(fac_theta(p, s) == exlen::testing::smallest_closed_superset(p, s, [&](Subcat x) {
            return exlen::testing::closed_under_quotients(p, x);
          }));
    CHECK(sub_theta(p, s) == exlen::testing::smallest_closed_superset(p, s, [&](Subcat x) {
            return exlen::testing::closed_under_subobjects(p, x);
          }));
  }
}

TEST_CASE("closure operators are extensive, monotone and idempotent") {
  std::mt19937 rng(99);
  using Op = Subcat (*)(const Presentation&, Subcat);
  const Op ops[] = {fac_theta, sub_theta, t_closure, f_closure};
  for (int trial = 0; trial < 300; ++trial) {
    const Presentation p = exlen::testing::random_presentation(rng);
    const Subcat s = exlen::testing::random_subset(rng, p);
    const Subcat t = s | exlen::testing::random_subset(rng, p);
    for (Op op : ops) {
      CHECK(s.subset_of(op(p, s)));
      CHECK(op(p, s).subset_of(op(p, t)));
      CHECK(op(p, op(p, s)) == op(p, s));
    }
  }
}

TEST_CASE("T(S) = Filt(Fac(S)) and F(S) = Filt(Sub(S)) on every corpus") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Presentation p = corpus(name);
    for (Subcat s : all_subsets(p)) {
      CHECK(t_closure(p, s) == filt_closure(p, fac_theta(p, s), true));
      CHECK(f_closure(p, s) == filt_closure(p, sub_theta(p, s), true));
    }
  }
}

TEST_CASE("single-step Fac and Sub agree with the fixpoint on every corpus") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Presentation p = corpus(name);
    for (Subcat s : all_subsets(p)) {
      CHECK(single_step(p, s, true) == fac_theta(p, s));
      CHECK(single_step(p, s, false) == sub_theta(p, s));
    }
  }
}

TEST_CASE("Fac of a tau-rigid set is already a torsion class") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Presentation p = corpus(name);
    for (Subcat s : all_subsets(p)) {
      if (tau_rigid_check(p, s)) CHECK(t_closure(p, s) == fac_theta(p, s));
    }
  }
}

TEST_CASE("mod kA2 has exactly the five hand-enumerated torsion classes") {
  const Presentation p = corpus("modkA2");
  const std::vector<Subcat> want = {Subcat{}, ids(p, {"S1"}), ids(p, {"S2"}), ids(p, {"P1", "S1"}),
                                    p.all()};
  CHECK(enumerate_tors(p) == want);
}

TEST_CASE("torsion class counts") {
  CHECK(enumerate_tors(corpus("modkA3")).size() == 14);
  CHECK(enumerate_tors(corpus("single")).size() == 2);
  CHECK(enumerate_tors(corpus("nilpotent2")).size() == 2);
  const auto empty = enumerate_tors(corpus("empty"));
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().empty());
}

TEST_CASE("A327 closures and perpendiculars") {
  const Presentation p = corpus("A327");
  CHECK(t_closure(p, ids(p, {"S3"})) == ids(p, {"S3", "P2", "P1"}));
  CHECK(t_closure(p, ids(p, {"P2"})) == ids(p, {"P2", "P1"}));
  CHECK(t_closure(p, ids(p, {"I2m"})) == ids(p, {"I2m", "S1m"}));
  CHECK(fac_theta(p, ids(p, {"P2"})) == ids(p, {"P2", "P1"}));
  CHECK(is_torsion_class(p, ids(p, {"S2m", "P1"})));
  CHECK_FALSE(is_torsion_class(p, ids(p, {"S3"})));
  CHECK(perp_left(p, ids(p, {"P1"})) == ids(p, {"S2m", "S1m", "I2m"}));
  CHECK(perp_left(p, ids(p, {"S1m"})) == ids(p, {"S2m", "P1", "P2", "S3"}));
  CHECK(perp_left(p, ids(p, {"S2m"})) == p.all() - ids(p, {"S2m"}));
  CHECK(perp_left(p, ids(p, {"I2m"})) == ids(p, {"S1m", "P1", "P2", "S3"}));
  CHECK(perp_left(p, ids(p, {"P2"})) == ids(p, {"S2m", "P1"}));
  CHECK(perp_left(p, ids(p, {"S3"})) == ids(p, {"S1m", "P2", "P1"}));
  CHECK(perp_right(p, Subcat{}) == p.all());
  CHECK(perp_right(p, p.all()) == Subcat{});
  CHECK(sub_theta(p, Subcat{}) == Subcat{});
  CHECK(sub_theta(p, p.all()) == p.all());
}

TEST_CASE("perpendiculars match the hom-table definition") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Presentation p = corpus(name);
    for (Subcat s : all_subsets(p)) {
      Subcat right, left;
      for (std::size_t m = 0; m < p.size(); ++m) {
        bool zero_from = true, zero_to = true;
        s.for_each([&](std::size_t x) {
          zero_from = zero_from && p.hom_dim(x, m) == 0;
          zero_to = zero_to && p.hom_dim(m, x) == 0;
        });
        if (zero_from) right.insert(m);
        if (zero_to) left.insert(m);
      }
      CHECK(perp_right(p, s) == right);
      CHECK(perp_left(p, s) == left);
    }
  }
}

TEST_CASE("torsion pairs round trip and give a bijection onto torsion-free classes") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Presentation p = corpus(name);
    const auto torf = enumerate_torf(p);
    std::set<std::uint64_t> image;
    for (Subcat t : enumerate_tors(p)) {
      const auto [tt, f] = torsion_pair_of(p, t);
      CHECK(tt == t);
      CHECK(is_torsionfree_class(p, f));
      image.insert(f.bits());
    }
    CHECK(image.size() == torf.size());
  }
  const Presentation p = corpus("A327");
  CHECK(torsion_pair_of(p, ids(p, {"P2", "P1"})).second == ids(p, {"S1m", "S2m", "S3", "I2m"}));
}

TEST_CASE("a missing conflation breaks the torsion pair round trip") {
  const Presentation p = corpus("negative/missing_conflation");
  CHECK_THROWS_AS(torsion_pair_of(p, ids(p, {"P1"})), Error);
}

TEST_CASE("enumeration refuses presentations above the bound") {
  const Presentation p = corpus("A327");
  EnumerationOptions small;
  small.max_indecs = 5;
  try {
    enumerate_tors(p, small);
    FAIL("bound not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::bound);
    CHECK(std::string(e.what()).find("--max-indecs") != std::string::npos);
  }
}

}
