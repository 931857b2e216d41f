#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "exlen/exlen.h"

#ifndef EXLEN_CORPUS_DIR
#define EXLEN_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kContract = 3, kMismatch = 4 };

struct Flags {
  std::string input;
  std::string dot;
  std::string corpus = EXLEN_CORPUS_DIR;
  std::string sub;
  bool count = false;
  bool pairs = false;
  bool table = false;
  bool json = false;
  bool regenerate = false;
  unsigned jobs = 1;
  std::size_t max_indecs = 22;
  unsigned mult_cap = 3;
  unsigned sd_bound = 4;
  bool stable_only = true;
};

struct Category {
  exlen_category* ptr = nullptr;
  ~Category() { exlen_free(ptr); }
};

int exit_for(exlen_status s) {
  switch (s) {
    case EXLEN_OK: return kOk;
    case EXLEN_ERR_IO:
    case EXLEN_ERR_PARSE:
    case EXLEN_ERR_SCHEMA:
    case EXLEN_ERR_VALIDATION: return kValidation;
    case EXLEN_ERR_ARGUMENT:
    case EXLEN_ERR_BOUND: return kUsage;
    default: return kContract;
  }
}

std::string resolve(const Flags& f) {
  if (fs::exists(f.input)) return f.input;
  const fs::path named = fs::path(f.corpus) / (f.input + ".json");
  if (fs::exists(named)) return named.string();
  return f.input;
}

int run_command(exlen_command cmd, const Flags& f, std::ostream& out, std::ostream& err) {
  Category cat;
  const exlen_status ls = exlen_load_file(resolve(f).c_str(), &cat.ptr);
  if (ls != EXLEN_OK) {
    err << "error: " << exlen_last_error() << "\n";
    return exit_for(ls);
  }
  exlen_options o;
  exlen_options_init(&o);
  o.max_indecs = f.max_indecs;
  o.jobs = f.jobs;
  o.mult_cap = f.mult_cap;
  o.sd_bound = f.sd_bound;
  o.stable_only = f.stable_only;
  o.json = f.json;
  o.count = f.count;
  o.pairs = f.pairs;
  o.table = f.table;
  o.sub = f.sub.c_str();
  char* text = nullptr;
  const exlen_status s = exlen_render(cat.ptr, cmd, &o, &text);
  const bool rendered = text != nullptr;
  if (text) {
    if (cmd == EXLEN_CMD_HASSE && !f.dot.empty()) {
      std::ofstream file(f.dot);
      file << text;
      if (!file) {
        err << "error: cannot write " << f.dot << "\n";
        exlen_string_free(text);
        return kUsage;
      }
    } else {
      out << text;
    }
    exlen_string_free(text);
  }
  if (!rendered) {
    err << "error: " << exlen_last_error() << "\n";
  }
  return exit_for(s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int selftest(const Flags& f, std::ostream& out, std::ostream& err) {
  const fs::path dir = fs::path(f.corpus) / "expected";
  const fs::path manifest = dir / "manifest.json";
  nlohmann::json cases;
  try {
    cases = nlohmann::json::parse(read_file(manifest));
  } catch (const std::exception& e) {
    err << "error: cannot read " << manifest.string() << ": " << e.what() << "\n";
    return kUsage;
  }
  std::size_t failed = 0;
  for (const auto& c : cases) {
    const std::string name = c.at("name");
    std::vector<std::string> args = c.at("args");
    args.push_back("--corpus");
    args.push_back(f.corpus);
    const int want_exit = c.at("exit");
    std::ostringstream got_out, got_err;
    const int got_exit = run(args, got_out, got_err);
    const fs::path expected = dir / (name + ".out");
    if (f.regenerate) {
      std::ofstream(expected, std::ios::binary) << got_out.str();
    }
    const bool same_out = read_file(expected) == got_out.str();
    const bool same_exit = got_exit == want_exit;
    out << (same_out && same_exit ? "PASS " : "FAIL ") << name;
    if (!same_exit) out << " (exit " << got_exit << ", expected " << want_exit << ")";
    if (!same_out) out << " (output differs from " << expected.filename().string() << ")";
    out << "\n";
    if (!(same_out && same_exit)) ++failed;
  }
  out << (cases.size() - failed) << " of " << cases.size() << " corpus checks passed\n";
  return failed == 0 ? kOk : kMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsion classes, bricks and tau-tilting in finite extriangulated length categories",
               "exlen"};
  app.require_subcommand(1);
  Flags f;

  struct Sub {
    const char* name;
    const char* help;
    exlen_command cmd;
  };
  const std::vector<Sub> subs = {
      {"validate", "check a presentation against the length-category contract", EXLEN_CMD_VALIDATE},
      {"strata", "Θ-strata and Θ∞", EXLEN_CMD_STRATA},
      {"simples", "simple objects of a subcategory", EXLEN_CMD_SIMPLES},
      {"semibricks", "every semibrick with its filtration data", EXLEN_CMD_SEMIBRICKS},
      {"tors", "torsion classes in canonical order", EXLEN_CMD_TORS},
      {"hasse", "Hasse diagram of the torsion lattice as DOT", EXLEN_CMD_HASSE},
      {"check", "run every lattice report", EXLEN_CMD_CHECK},
      {"intervals", "interval table with bricks and labels", EXLEN_CMD_INTERVALS},
      {"tautilt", "support tau-tilting pairing", EXLEN_CMD_TAUTILT},
      {"report", "structured summary of every check", EXLEN_CMD_REPORT},
  };
  std::vector<std::pair<CLI::App*, exlen_command>> commands;
  for (const Sub& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("input", f.input, "presentation file or corpus name")->required();
    sc->add_option("--corpus", f.corpus, "corpus directory");
    sc->add_option("--jobs", f.jobs, "enumeration threads")->check(CLI::Range(1U, 64U));
    sc->add_option("--max-indecs", f.max_indecs, "enumeration bound");
    sc->add_option("--mult-cap", f.mult_cap, "multiplicity cap for filtration search");
    sc->add_option("--sd-bound", f.sd_bound, "subset bound for semidistributivity");
    sc->add_option("--stable-only", f.stable_only, "restrict Filt closures to stable conflations");
    sc->add_flag("--json", f.json, "structured output");
    if (s.cmd == EXLEN_CMD_SIMPLES) sc->add_option("--sub", f.sub, "comma-separated ids");
    if (s.cmd == EXLEN_CMD_TORS) {
      sc->add_flag("--count", f.count, "print the number of torsion classes");
      sc->add_flag("--pairs", f.pairs, "print torsion pairs");
    }
    if (s.cmd == EXLEN_CMD_HASSE) sc->add_option("--dot", f.dot, "write DOT to this path");
    if (s.cmd == EXLEN_CMD_TAUTILT) sc->add_flag("--table", f.table, "tab-separated pairing table");
    commands.emplace_back(sc, s.cmd);
  }
  CLI::App* st = app.add_subcommand("selftest", "replay the bundled corpus against expected outputs");
  st->add_option("--corpus", f.corpus, "corpus directory");
  st->add_flag("--regenerate", f.regenerate, "rewrite expected outputs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (st->parsed()) return selftest(f, out, err);
  for (const auto& [sc, cmd] : commands) {
    if (sc->parsed()) return run_command(cmd, f, out, err);
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}
