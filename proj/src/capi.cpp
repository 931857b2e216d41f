#include "exlen/exlen.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "exlen/model.hpp"
#include "exlen/render.hpp"
#include "exlen/torsion.hpp"

struct exlen_category {
  exlen::Presentation p;
};

namespace {

thread_local std::string last_error;

exlen_status status_of(exlen::ErrorKind k) {
  switch (k) {
    case exlen::ErrorKind::io: return EXLEN_ERR_IO;
    case exlen::ErrorKind::parse: return EXLEN_ERR_PARSE;
    case exlen::ErrorKind::schema: return EXLEN_ERR_SCHEMA;
    case exlen::ErrorKind::argument: return EXLEN_ERR_ARGUMENT;
    case exlen::ErrorKind::bound: return EXLEN_ERR_BOUND;
    case exlen::ErrorKind::contract: return EXLEN_ERR_CONTRACT;
  }
  return EXLEN_ERR_INTERNAL;
}

template <class F>
exlen_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const exlen::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return EXLEN_ERR_INTERNAL;
  }
}

exlen_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return EXLEN_ERR_ARGUMENT;
}

exlen::EnumerationOptions enumeration_of(const exlen_options* o) {
  exlen::EnumerationOptions e;
  if (o) {
    e.max_indecs = o->max_indecs;
    e.jobs = o->jobs;
  }
  return e;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

void exlen_options_init(exlen_options* opts) {
  if (!opts) return;
  *opts = exlen_options{};
  opts->max_indecs = 22;
  opts->jobs = 1;
  opts->mult_cap = 3;
  opts->sd_bound = 4;
  opts->stable_only = 1;
}

const char* exlen_last_error(void) { return last_error.c_str(); }

exlen_status exlen_load_file(const char* path, exlen_category** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new exlen_category{exlen::load_file(path)};
    return EXLEN_OK;
  });
}

exlen_status exlen_load_string(const char* json, exlen_category** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new exlen_category{exlen::load(json)};
    return EXLEN_OK;
  });
}

void exlen_free(exlen_category* cat) { delete cat; }

size_t exlen_indec_count(const exlen_category* cat) { return cat ? cat->p.size() : 0; }

const char* exlen_indec_id(const exlen_category* cat, size_t i) {
  if (!cat || i >= cat->p.size()) return nullptr;
  return cat->p.indec(i).id.c_str();
}

uint32_t exlen_indec_theta(const exlen_category* cat, size_t i) {
  if (!cat || i >= cat->p.size()) return 0;
  return cat->p.theta(i);
}

exlen_status exlen_indec_index(const exlen_category* cat, const char* id, size_t* out) {
  if (!cat) return null_arg("cat");
  if (!id) return null_arg("id");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = cat->p.index_of(id);
    return EXLEN_OK;
  });
}

exlen_status exlen_render(const exlen_category* cat, exlen_command cmd, const exlen_options* opts,
                          char** out) {
  if (!cat) return null_arg("cat");
  if (!out) return null_arg("out");
  if (cmd < EXLEN_CMD_VALIDATE || cmd > EXLEN_CMD_REPORT) {
    last_error = "unknown command";
    return EXLEN_ERR_ARGUMENT;
  }
  return guarded([&] {
    exlen::RenderOptions ro;
    exlen_options defaults;
    exlen_options_init(&defaults);
    const exlen_options& o = opts ? *opts : defaults;
    ro.enumeration = enumeration_of(&o);
    ro.mult_cap = o.mult_cap;
    ro.sd_bound = o.sd_bound;
    ro.stable_only = o.stable_only != 0;
    ro.json = o.json != 0;
    ro.count = o.count != 0;
    ro.pairs = o.pairs != 0;
    ro.table = o.table != 0;
    if (o.sub && *o.sub) {
      std::stringstream ss(o.sub);
      for (std::string id; std::getline(ss, id, ',');) {
        if (!id.empty()) ro.sub.push_back(id);
      }
    }
    const exlen::Rendered r = exlen::render(cat->p, static_cast<exlen::Command>(cmd), ro);
    *out = copy_out(r.text);
    switch (r.outcome) {
      case exlen::Outcome::ok: return EXLEN_OK;
      case exlen::Outcome::validation_failure: return EXLEN_ERR_VALIDATION;
      case exlen::Outcome::contract_violation: return EXLEN_ERR_CONTRACT;
    }
    return EXLEN_ERR_INTERNAL;
  });
}

void exlen_string_free(char* s) { std::free(s); }

exlen_status exlen_tors_count(const exlen_category* cat, const exlen_options* opts, size_t* out) {
  if (!cat) return null_arg("cat");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = exlen::enumerate_tors(cat->p, enumeration_of(opts)).size();
    return EXLEN_OK;
  });
}

exlen_status exlen_tors_list(const exlen_category* cat, const exlen_options* opts, uint64_t* masks,
                             size_t cap, size_t* count) {
  if (!cat) return null_arg("cat");
  if (!count) return null_arg("count");
  if (cap > 0 && !masks) return null_arg("masks");
  return guarded([&] {
    const auto tors = exlen::enumerate_tors(cat->p, enumeration_of(opts));
    *count = tors.size();
    for (size_t i = 0; i < tors.size() && i < cap; ++i) masks[i] = tors[i].bits();
    return EXLEN_OK;
  });
}

exlen_status exlen_t_closure(const exlen_category* cat, uint64_t mask, uint64_t* out) {
  if (!cat) return null_arg("cat");
  if (!out) return null_arg("out");
  return guarded([&] {
    if ((exlen::Subcat{mask} - cat->p.all()).bits() != 0) {
      throw exlen::Error(exlen::ErrorKind::argument, "mask has bits beyond the declared indecs");
    }
    *out = exlen::t_closure(cat->p, exlen::Subcat{mask}).bits();
    return EXLEN_OK;
  });
}

}  // extern "C"
