#include "exlen/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace exlen {

using nlohmann::json;

// ObjClass

bool ObjClass::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(), [](auto m) { return m == 0; });
}

std::uint32_t ObjClass::total() const {
  std::uint32_t t = 0;
  for (auto m : mult_) t += m;
  return t;
}

Subcat ObjClass::support() const {
  Subcat s;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[i] != 0) s.insert(i);
  }
  return s;
}

std::optional<std::size_t> ObjClass::as_indec() const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[i] == 0) continue;
    if (mult_[i] != 1 || found) return std::nullopt;
    found = i;
  }
  return found;
}

bool ObjClass::contains(const ObjClass& o) const {
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (o.mult_[i] > mult_[i]) return false;
  }
  return true;
}

ObjClass& ObjClass::operator+=(const ObjClass& o) {
  for (std::size_t i = 0; i < mult_.size(); ++i) mult_[i] += o.mult_[i];
  return *this;
}

ObjClass& ObjClass::operator-=(const ObjClass& o) {
  for (std::size_t i = 0; i < mult_.size(); ++i) mult_[i] -= o.mult_[i];
  return *this;
}

// Presentation

namespace {

void add_rule(std::vector<Rule>& rules, Subcat premise, Subcat conclusion) {
  if (conclusion.subset_of(premise)) return;
  for (const auto& r : rules) {
    if (r.premise == premise && r.conclusion == conclusion) return;
  }
  rules.push_back({premise, conclusion});
}

}  // namespace

Presentation::Presentation(std::string name, std::vector<Indec> indecs,
                           std::vector<std::uint32_t> hom, std::vector<bool> ext,
                           std::vector<Conflation> conflations)
    : name_(std::move(name)),
      indecs_(std::move(indecs)),
      hom_(std::move(hom)),
      ext_(std::move(ext)),
      conflations_(std::move(conflations)) {
  const std::size_t n = indecs_.size();
  if (n > Subcat::kMaxIndecs) {
    throw Error(ErrorKind::schema, "at most 64 indecomposables are supported, got " +
                                       std::to_string(n));
  }
  if (hom_.size() != n * n || ext_.size() != n * n) {
    throw Error(ErrorKind::schema, "hom/ext tables must be square in the number of indecs");
  }
  hom_out_.assign(n, Subcat{});
  hom_in_.assign(n, Subcat{});
  for (std::size_t i = 0; i < n; ++i) {
    if (is_brick(i)) bricks_.insert(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && hom_dim(i, j) != 0) {
        hom_out_[i].insert(j);
        hom_in_[j].insert(i);
      }
    }
  }
  for (const auto& c : conflations_) {
    const Subcat a = c.a.support(), b = c.b.support(), z = c.c.support();
    add_rule(ext_all_rules_, a | z, b);
    if (!c.stable) continue;
    add_rule(ext_stable_rules_, a | z, b);
    add_rule(quotient_rules_, b, z);
    add_rule(subobject_rules_, b, a);
  }
}

std::optional<std::size_t> Presentation::find(std::string_view id) const {
  for (std::size_t i = 0; i < indecs_.size(); ++i) {
    if (indecs_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t Presentation::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::argument, "unknown indecomposable '" + std::string(id) + "'");
}

Subcat Presentation::subcat_of(std::span<const std::string> ids) const {
  Subcat s;
  for (const auto& id : ids) s.insert(index_of(id));
  return s;
}

std::vector<std::string> Presentation::ids_of(Subcat s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(indecs_[i].id); });
  return out;
}

ObjClass Presentation::obj(std::initializer_list<std::string_view> ids) const {
  ObjClass m(size());
  for (auto id : ids) m[index_of(id)] += 1;
  return m;
}

std::uint64_t Presentation::theta(const ObjClass& m) const {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < m.width(); ++i) t += std::uint64_t{m[i]} * indecs_[i].theta;
  return t;
}

std::uint64_t Presentation::hom_dim(const ObjClass& m, const ObjClass& n) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i] == 0) continue;
    for (std::size_t j = 0; j < n.width(); ++j) {
      d += std::uint64_t{m[i]} * n[j] * hom_dim(i, j);
    }
  }
  return d;
}

Subcat close_under(Subcat s, std::initializer_list<std::span<const Rule>> rule_sets) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto rules : rule_sets) {
      for (const auto& r : rules) {
        if (r.premise.subset_of(s) && !r.conclusion.subset_of(s)) {
          s |= r.conclusion;
          changed = true;
        }
      }
    }
  }
  return s;
}

// Loading

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::schema, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) schema_error(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::uint32_t natural_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    schema_error(where + "." + key, "expected a non-negative integer");
  }
  return v.get<std::uint32_t>();
}

bool bool_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_boolean()) schema_error(where + "." + key, "expected a boolean");
  return v.get<bool>();
}

const json& array_field(const json& obj, const char* key, const std::string& where,
                        bool optional) {
  static const json empty = json::array();
  if (optional && obj.find(key) == obj.end()) return empty;
  const json& v = field(obj, key, where);
  if (!v.is_array()) schema_error(where + "." + key, "expected a list");
  return v;
}

}  // namespace

Presentation load(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, "parse error at " + line_col(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) schema_error("document", "expected an object at top level");

  std::string name = doc.contains("name") ? string_field(doc, "name", "document") : "";

  std::vector<Indec> indecs;
  std::unordered_set<std::string> seen;
  const json& jind = array_field(doc, "indecs", "document", false);
  for (std::size_t k = 0; k < jind.size(); ++k) {
    const std::string where = "indecs[" + std::to_string(k) + "]";
    Indec d{string_field(jind[k], "id", where), natural_field(jind[k], "theta", where)};
    if (d.id.empty()) schema_error(where + ".id", "empty id");
    if (!seen.insert(d.id).second) schema_error(where + ".id", "duplicate id '" + d.id + "'");
    indecs.push_back(std::move(d));
  }
  const std::size_t n = indecs.size();
  if (n > Subcat::kMaxIndecs) {
    schema_error("indecs", "at most 64 indecomposables are supported");
  }
  auto lookup = [&](const std::string& id, const std::string& where) {
    for (std::size_t i = 0; i < n; ++i) {
      if (indecs[i].id == id) return i;
    }
    schema_error(where, "unknown indec '" + id + "'");
  };

  std::vector<std::uint32_t> hom(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) hom[i * n + i] = 1;
  const json& jhom = array_field(doc, "hom", "document", true);
  for (std::size_t k = 0; k < jhom.size(); ++k) {
    const std::string where = "hom[" + std::to_string(k) + "]";
    auto from = lookup(string_field(jhom[k], "from", where), where + ".from");
    auto to = lookup(string_field(jhom[k], "to", where), where + ".to");
    hom[from * n + to] = natural_field(jhom[k], "dim", where);
  }

  std::vector<bool> ext(n * n, false);
  const json& jext = array_field(doc, "ext", "document", true);
  for (std::size_t k = 0; k < jext.size(); ++k) {
    const std::string where = "ext[" + std::to_string(k) + "]";
    auto from = lookup(string_field(jext[k], "from", where), where + ".from");
    auto to = lookup(string_field(jext[k], "to", where), where + ".to");
    ext[from * n + to] = true;
  }

  std::vector<Conflation> conflations;
  const json& jconf = array_field(doc, "conflations", "document", true);
  for (std::size_t k = 0; k < jconf.size(); ++k) {
    const std::string where = "conflations[" + std::to_string(k) + "]";
    auto term = [&](const char* key) {
      ObjClass m(n);
      const json& ids = array_field(jconf[k], key, where, false);
      for (std::size_t t = 0; t < ids.size(); ++t) {
        const std::string w = where + "." + key + "[" + std::to_string(t) + "]";
        if (!ids[t].is_string()) schema_error(w, "expected an indec id");
        m[lookup(ids[t].get<std::string>(), w)] += 1;
      }
      return m;
    };
    Conflation c;
    c.a = term("a");
    c.b = term("b");
    c.c = term("c");
    c.stable = bool_field(jconf[k], "stable", where);
    c.split = bool_field(jconf[k], "split", where);
    conflations.push_back(std::move(c));
  }

  return Presentation(std::move(name), std::move(indecs), std::move(hom), std::move(ext),
                      std::move(conflations));
}

Presentation load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str());
}

// Validation

std::string describe(const Presentation& p, const ObjClass& m) {
  if (m.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (m[i] > 1) out += std::to_string(m[i]) + "*";
    out += p.indec(i).id;
  }
  return out;
}

std::string canonical_key(const Presentation& p, Subcat s) {
  std::string out;
  s.for_each([&](std::size_t i) {
    if (!out.empty()) out += ",";
    out += p.indec(i).id;
  });
  return out;
}

std::string describe(const Presentation& p, Subcat s) { return "{" + canonical_key(p, s) + "}"; }

ValidationReport validate(const Presentation& p) {
  ValidationReport report;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::string where = "indec " + p.indec(i).id;
    if (p.theta(i) < 1) report.push_back({"theta positivity", where, "theta must be >= 1"});
    if (p.hom_dim(i, i) < 1) {
      report.push_back({"identity morphism", where, "hom_dim to itself must be >= 1"});
    }
  }
  const auto& cs = p.conflations();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const Conflation& c = cs[k];
    const std::string where = "conflation " + std::to_string(k) + " (" + describe(p, c.a) +
                              " -> " + describe(p, c.b) + " -> " + describe(p, c.c) + ")";
    const auto ta = p.theta(c.a), tb = p.theta(c.b), tc = p.theta(c.c);
    const std::string sums = "theta(b)=" + std::to_string(tb) +
                             ", theta(a)+theta(c)=" + std::to_string(ta + tc);
    if (c.a.is_zero() || c.c.is_zero()) {
      report.push_back({"empty end term", where, "end terms must be nonzero"});
    }
    if (tb > ta + tc) report.push_back({"subadditivity", where, sums});
    if (c.stable && tb != ta + tc) report.push_back({"stability equality", where, sums});
    if (c.split && !c.stable) {
      report.push_back({"split stability", where, "a split conflation is stable"});
    }
    if (c.split && c.b != c.a + c.c) {
      report.push_back({"split shape", where, "b must equal a+c"});
    }
    auto a = c.a.as_indec(), z = c.c.as_indec();
    if (c.stable && !c.split && a && z && !p.ext(*z, *a)) {
      report.push_back({"ext consistency", where,
                        "ext entry " + p.indec(*z).id + " -> " + p.indec(*a).id + " is missing"});
    }
  }
  return report;
}

}  // namespace exlen
