#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exlen/subcat.hpp"

namespace exlen {

enum class ErrorKind {
  io,        // file could not be read
  parse,     // malformed document
  schema,    // well-formed document violating the input schema
  argument,  // bad id or subset passed to an operation
  bound,     // configured enumeration bound exceeded
  contract,  // presentation contradicts the length-category contract
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct Indec {
  std::string id;
  std::uint32_t theta = 1;
};

/// Isomorphism class of an object: multiplicity of each declared
/// indecomposable (Krull-Schmidt). All-zero is the zero object.
class ObjClass {
 public:
  ObjClass() = default;
  explicit ObjClass(std::size_t n) : mult_(n, 0) {}
  ObjClass(std::size_t n, std::size_t indec, std::uint32_t mult = 1) : mult_(n, 0) {
    mult_.at(indec) = mult;
  }

  std::size_t width() const { return mult_.size(); }
  std::uint32_t operator[](std::size_t i) const { return mult_[i]; }
  std::uint32_t& operator[](std::size_t i) { return mult_[i]; }
  std::span<const std::uint32_t> mult() const { return mult_; }

  bool is_zero() const;
  std::uint32_t total() const;
  Subcat support() const;
  /// Single indecomposable with multiplicity one.
  std::optional<std::size_t> as_indec() const;
  bool contains(const ObjClass& o) const;  // o <= *this as multisets

  ObjClass& operator+=(const ObjClass& o);
  ObjClass& operator-=(const ObjClass& o);  // requires contains(o)
  friend ObjClass operator+(ObjClass x, const ObjClass& y) { return x += y; }

  bool operator==(const ObjClass&) const = default;
  auto operator<=>(const ObjClass&) const = default;

 private:
  std::vector<std::uint32_t> mult_;
};

/// A recorded E-triangle a >-> b ->> c.
struct Conflation {
  ObjClass a, b, c;
  bool stable = false;
  bool split = false;
};

/// Premise/conclusion pair of a fixpoint rule: once `premise` is contained
/// in the current set, `conclusion` is added.
struct Rule {
  Subcat premise;
  Subcat conclusion;
};

/// Finite model of an extriangulated length category. Immutable after
/// construction; every operation in the library is a pure function of it.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, std::vector<Indec> indecs, std::vector<std::uint32_t> hom,
               std::vector<bool> ext, std::vector<Conflation> conflations);

  const std::string& name() const { return name_; }
  std::size_t size() const { return indecs_.size(); }
  const std::vector<Indec>& indecs() const { return indecs_; }
  const Indec& indec(std::size_t i) const { return indecs_.at(i); }
  const std::vector<Conflation>& conflations() const { return conflations_; }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws Error(argument) for an undeclared id.
  std::size_t index_of(std::string_view id) const;
  Subcat subcat_of(std::span<const std::string> ids) const;
  std::vector<std::string> ids_of(Subcat s) const;
  ObjClass obj(std::initializer_list<std::string_view> ids) const;

  Subcat all() const { return Subcat::full(size()); }

  std::uint32_t theta(std::size_t i) const { return indecs_.at(i).theta; }
  std::uint64_t theta(const ObjClass& m) const;

  std::uint32_t hom_dim(std::size_t from, std::size_t to) const { return hom_[from * size() + to]; }
  std::uint64_t hom_dim(const ObjClass& m, const ObjClass& n) const;
  /// E_Θ(from, to) != 0.
  bool ext(std::size_t from, std::size_t to) const { return ext_[from * size() + to]; }
  bool is_brick(std::size_t i) const { return hom_dim(i, i) == 1; }
  Subcat bricks() const { return bricks_; }

  /// Indecs receiving a nonzero map from i (i excluded), resp. mapping to i.
  Subcat hom_out(std::size_t i) const { return hom_out_[i]; }
  Subcat hom_in(std::size_t i) const { return hom_in_[i]; }

  // Fixpoint rules derived from the conflation list.
  std::span<const Rule> extension_rules(bool stable_only) const {
    return stable_only ? ext_stable_rules_ : ext_all_rules_;
  }
  std::span<const Rule> quotient_rules() const { return quotient_rules_; }
  std::span<const Rule> subobject_rules() const { return subobject_rules_; }

 private:
  std::string name_;
  std::vector<Indec> indecs_;
  std::vector<std::uint32_t> hom_;
  std::vector<bool> ext_;
  std::vector<Conflation> conflations_;

  Subcat bricks_;
  std::vector<Subcat> hom_out_, hom_in_;
  std::vector<Rule> ext_all_rules_, ext_stable_rules_, quotient_rules_, subobject_rules_;
};

/// Least fixpoint of `s` under every rule in `rule_sets`.
Subcat close_under(Subcat s, std::initializer_list<std::span<const Rule>> rule_sets);

Presentation load(std::string_view json_text);
Presentation load_file(const std::string& path);

struct Violation {
  std::string rule;
  std::string where;
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate(const Presentation& p);

std::string describe(const Presentation& p, const ObjClass& m);
std::string describe(const Presentation& p, Subcat s);
/// Canonical key: member ids in declaration order, comma separated.
std::string canonical_key(const Presentation& p, Subcat s);

}  // namespace exlen
