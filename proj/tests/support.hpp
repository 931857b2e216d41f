#pragma once

#include <random>
#include <string>
#include <vector>

#include "exlen/model.hpp"

#ifndef EXLEN_CORPUS_DIR
#define EXLEN_CORPUS_DIR "corpus"
#endif

namespace exlen::testing {

inline Presentation corpus(const std::string& name) {
  return load_file(std::string(EXLEN_CORPUS_DIR) + "/" + name + ".json");
}

inline const std::vector<std::string>& valid_corpora() {
  static const std::vector<std::string> names = {"A327",   "modkA2", "modkA3",
                                                 "single", "empty",  "nilpotent2"};
  return names;
}

inline Subcat ids(const Presentation& p, std::vector<std::string> names) {
  return p.subcat_of(names);
}

// Every subset of the indecs, as masks.
inline std::vector<Subcat> all_subsets(const Presentation& p) {
  std::vector<Subcat> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << p.size()); ++b) out.emplace_back(b);
  return out;
}

// Oracle: closure under the conflation list read directly, without rule tables.
inline bool closed_under_quotients(const Presentation& p, Subcat s) {
  for (const auto& c : p.conflations()) {
    if (c.stable && c.b.support().subset_of(s) && !c.c.support().subset_of(s)) return false;
  }
  return true;
}

inline bool closed_under_subobjects(const Presentation& p, Subcat s) {
  for (const auto& c : p.conflations()) {
    if (c.stable && c.b.support().subset_of(s) && !c.a.support().subset_of(s)) return false;
  }
  return true;
}

inline bool closed_under_extensions(const Presentation& p, Subcat s, bool stable_only = true) {
  for (const auto& c : p.conflations()) {
    if (stable_only && !c.stable) continue;
    if ((c.a.support() | c.c.support()).subset_of(s) && !c.b.support().subset_of(s)) return false;
  }
  return true;
}

// Oracle: smallest closed superset, as the intersection of every closed superset.
template <class Closed>
Subcat smallest_closed_superset(const Presentation& p, Subcat s, Closed closed) {
  Subcat out = p.all();
  for (Subcat x : all_subsets(p)) {
    if (s.subset_of(x) && closed(x)) out &= x;
  }
  return out;
}

// Random presentation for closure-operator properties. Not necessarily valid.
inline Presentation random_presentation(std::mt19937& rng, std::size_t max_n = 7) {
  std::uniform_int_distribution<std::size_t> size_d(1, max_n);
  const std::size_t n = size_d(rng);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1), small(0, 3);
  std::vector<Indec> indecs;
  for (std::size_t i = 0; i < n; ++i) indecs.push_back({"X" + std::to_string(i), 1U + small(rng) % 3U});
  std::vector<std::uint32_t> hom(n * n, 0);
  std::vector<bool> ext(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) hom[i * n + j] = i == j ? 1 : (small(rng) == 0);
  }
  std::vector<Conflation> cs;
  const int count = small(rng) + small(rng);
  for (int k = 0; k < count; ++k) {
    Conflation c{ObjClass(n, idx(rng)), ObjClass(n, idx(rng)), ObjClass(n, idx(rng)),
                 coin(rng) == 1, false};
    if (coin(rng)) c.b[idx(rng)] += 1;
    ext[c.c.as_indec().value() * n + c.a.as_indec().value()] = true;
    cs.push_back(c);
  }
  return Presentation("random", indecs, hom, ext, cs);
}

inline Subcat random_subset(std::mt19937& rng, const Presentation& p) {
  std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << p.size()) - 1);
  return Subcat{d(rng)};
}

}  // namespace exlen::testing
