#include <doctest.h>

#include "exlen/filt.hpp"
#include "exlen/torsion.hpp"
#include "support.hpp"

using namespace exlen;
using exlen::testing::corpus;
using exlen::testing::ids;

namespace {

unsigned length_of(const Presentation& p, Subcat x, std::initializer_list<std::string_view> m) {
  const FiltLength fl = filt_length(p, x, p.obj(m), true);
  REQUIRE(fl.length.has_value());
  return *fl.length;
}

// Oracle: pairwise hom vanishing and End = k, read off the table.
bool semibrick_oracle(const Presentation& p, Subcat x) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!x.contains(i)) continue;
    if (p.hom_dim(i, i) != 1) return false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j != i && x.contains(j) && p.hom_dim(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("filt") {

TEST_CASE("filtration lengths by Y in A327") {
  const Presentation p = corpus("A327");
  const Subcat y = ids(p, {"S2m", "S1m", "P1"});
  CHECK(length_of(p, y, {"I2m"}) == 2);
  CHECK(length_of(p, y, {"S3"}) == 3);
  CHECK(length_of(p, y, {"P2"}) == 2);
  CHECK(length_of(p, y, {"P1"}) == 1);
  CHECK(length_of(p, y, {"P2", "S3"}) == 5);
  CHECK(length_of(p, y, {}) == 0);
  CHECK(filt_closure(p, y, true) == p.all());
  const FiltLength outside = filt_length(p, ids(p, {"P1"}), p.obj({"S3"}), true);
  CHECK_FALSE(outside.length);
}

TEST_CASE("filtration length with a stable self-extension") {
  const Presentation p = corpus("nilpotent2");
  CHECK(length_of(p, ids(p, {"S"}), {"M"}) == 2);
  CHECK(length_of(p, ids(p, {"S"}), {"M", "S"}) == 3);
}

TEST_CASE("theta equals the theta1-length on length-wide corpora") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Presentation p = corpus(name);
    const Strata s = strata(p);
    if (!(s.theta1 == s.theta_inf)) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const FiltLength fl = filt_length(p, s.theta1, ObjClass(p.size(), i, 1), true);
      CHECK_MESSAGE(fl.length == p.theta(i), name << " " << p.indec(i).id);
    }
  }
}

TEST_CASE("A327 strata") {
  const Presentation p = corpus("A327");
  const Strata s = strata(p);
  const Subcat want = ids(p, {"S2m", "S1m", "P1"});
  CHECK(s.theta1 == want);
  CHECK(s.theta_inf == want);
  for (const auto& [n, level] : s.levels) {
    CHECK(n >= 2);
    CHECK_FALSE(level.intersects(s.theta1));
  }
  CHECK(semibrick_check(p, s.theta_inf));
  CHECK(sms_check(p, s.theta_inf));
}

TEST_CASE("theta_inf is a simple-minded system on every corpus") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Presentation p = corpus(name);
    CHECK_MESSAGE(sms_check(p, strata(p).theta_inf), name);
  }
  const Strata e = strata(corpus("empty"));
  CHECK(e.theta1.empty());
  CHECK(e.theta_inf.empty());
}

TEST_CASE("simples of stable-extension-closed subcategories") {
  const Presentation p = corpus("A327");
  CHECK(simples(p, p.all()) == ids(p, {"S2m", "S1m", "P1"}));
  CHECK(simples(p, ids(p, {"S2m", "I2m", "S1m"})) == ids(p, {"S2m", "S1m"}));
  CHECK(simples(p, Subcat{}) == Subcat{});
  CHECK_THROWS_AS(simples(p, ids(p, {"S2m", "S1m"})), Error);
  const Presentation k = corpus("modkA2");
  CHECK(simples(k, k.all()) == ids(k, {"S1", "S2"}));
}

TEST_CASE("semibrick enumeration matches the hom-table oracle") {
  for (const auto& name : exlen::testing::valid_corpora()) {
    const Presentation p = corpus(name);
    std::vector<Subcat> want;
    for (Subcat x : exlen::testing::all_subsets(p)) {
      CHECK(semibrick_check(p, x) == semibrick_oracle(p, x));
      if (semibrick_oracle(p, x)) want.push_back(x);
    }
    std::sort(want.begin(), want.end(), canonical_less);
    CHECK_MESSAGE(enumerate_semibricks(p) == want, name);
  }
}

TEST_CASE("sim(Filt(X)) = X for every semibrick of A327") {
  const Presentation p = corpus("A327");
  const auto all = enumerate_semibricks(p);
  CHECK(all.size() > 6);
  for (Subcat x : all) {
    CHECK_MESSAGE(length_wide_roundtrip(p, x), describe(p, x));
    CHECK(proper_relative(p, x));
  }
  CHECK_THROWS_AS(length_wide_roundtrip(p, ids(p, {"S3", "P2"})), Error);
}

TEST_CASE("relabeling by a simple-minded system") {
  const Presentation p = corpus("A327");
  const Presentation q = with_length_of(p, ids(p, {"S2m", "S1m", "P1"}));
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(q.theta(i) == p.theta(i));
  CHECK(validate(q).empty());
  CHECK_THROWS_AS(with_length_of(p, ids(p, {"P1"})), Error);
  const Presentation k = corpus("modkA2");
  const Presentation r = with_length_of(k, ids(k, {"S1", "S2"}));
  CHECK(r.theta(k.index_of("P1")) == 2);
}

TEST_CASE("sms requires generating everything") {
  const Presentation p = corpus("modkA2");
  CHECK(sms_check(p, ids(p, {"S1", "S2"})));
  CHECK_FALSE(sms_check(p, ids(p, {"S1"})));
  CHECK_FALSE(sms_check(p, ids(p, {"S2", "P1"})));
}

}
