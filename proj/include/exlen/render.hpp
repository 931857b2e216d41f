#pragma once

#include <string>
#include <vector>

#include "exlen/filt.hpp"
#include "exlen/model.hpp"
#include "exlen/report.hpp"
#include "exlen/torsion.hpp"

namespace exlen {

enum class Command {
  validate,
  strata,
  simples,
  semibricks,
  tors,
  hasse,
  check,
  intervals,
  tautilt,
  report,
};

struct RenderOptions {
  EnumerationOptions enumeration;
  unsigned mult_cap = kDefaultMultCap;
  unsigned sd_bound = 4;
  bool stable_only = true;
  bool json = false;
  bool count = false;
  bool pairs = false;
  bool table = false;
  std::vector<std::string> sub;  // --sub ids for simples
};

enum class Outcome { ok, validation_failure, contract_violation };

struct Rendered {
  std::string text;
  Outcome outcome = Outcome::ok;
};

/// Output of one CLI command. Validation runs first; a failing presentation
/// yields its violation list and Outcome::validation_failure.
Rendered render(const Presentation& p, Command cmd, const RenderOptions& opts);

/// Hasse diagram of the torsion lattice as Graphviz DOT.
std::string hasse_dot(const Presentation& p, const EnumerationOptions& opts = {});

/// Every structural check run by `check`, in a fixed order.
std::vector<Report> all_checks(const Presentation& p, const RenderOptions& opts);

}  // namespace exlen
