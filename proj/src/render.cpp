#include "exlen/render.hpp"

#include <json.hpp>
#include <sstream>

#include "exlen/lattice.hpp"
#include "exlen/tautilt.hpp"

namespace exlen {

namespace {

using Json = nlohmann::ordered_json;

Json ids_json(const Presentation& p, Subcat s) { return Json(p.ids_of(s)); }

Json report_json(const Report& r) {
  return Json{{"name", r.name}, {"ok", r.ok()}, {"failures", r.failures}, {"notes", r.notes}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json validation_json(const Presentation& p, const ValidationReport& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back({{"rule", x.rule}, {"where", x.where}, {"detail", x.detail}});
  (void)p;
  return out;
}

std::string validation_text(const Presentation& p, const ValidationReport& v) {
  std::ostringstream os;
  if (v.empty()) {
    os << "ok: " << p.name() << ", " << p.size() << " indecs, " << p.conflations().size()
       << " conflations\n";
  }
  for (const auto& x : v) os << "violation: " << x.rule << " at " << x.where << ": " << x.detail << "\n";
  return os.str();
}

Rendered render_validate(const Presentation& p, const ValidationReport& v, const RenderOptions& o) {
  Rendered r;
  r.outcome = v.empty() ? Outcome::ok : Outcome::validation_failure;
  if (o.json) {
    r.text = dump(Json{{"name", p.name()}, {"ok", v.empty()}, {"violations", validation_json(p, v)}});
  } else {
    r.text = validation_text(p, v);
  }
  return r;
}

Json strata_json(const Presentation& p, const Strata& s) {
  Json levels = Json::array();
  for (const auto& [n, sub] : s.levels) levels.push_back({{"level", n}, {"members", ids_json(p, sub)}});
  return Json{{"theta1", ids_json(p, s.theta1)},
              {"levels", levels},
              {"theta_inf", ids_json(p, s.theta_inf)},
              {"theta_inf_semibrick", semibrick_check(p, s.theta_inf)},
              {"theta_inf_sms", sms_check(p, s.theta_inf)},
              {"length_wide", s.theta1 == s.theta_inf}};
}

Rendered render_strata(const Presentation& p, const RenderOptions& o) {
  const Strata s = strata(p);
  if (o.json) return {dump(strata_json(p, s)), Outcome::ok};
  std::ostringstream os;
  os << "theta1: " << describe(p, s.theta1) << "\n";
  for (const auto& [n, sub] : s.levels) os << "level " << n << ": " << describe(p, sub) << "\n";
  os << "theta_inf: " << describe(p, s.theta_inf) << "\n";
  os << "theta_inf semibrick: " << yes_no(semibrick_check(p, s.theta_inf)) << "\n";
  os << "theta_inf simple-minded system: " << yes_no(sms_check(p, s.theta_inf)) << "\n";
  os << "length wide: " << yes_no(s.theta1 == s.theta_inf) << "\n";
  return {os.str(), Outcome::ok};
}

Rendered render_simples(const Presentation& p, const RenderOptions& o) {
  const Subcat c = o.sub.empty() ? p.all() : p.subcat_of(o.sub);
  const Subcat sim = simples(p, c);
  if (o.json) {
    return {dump(Json{{"subcategory", ids_json(p, c)}, {"simples", ids_json(p, sim)}}), Outcome::ok};
  }
  return {"simples of " + describe(p, c) + ": " + describe(p, sim) + "\n", Outcome::ok};
}

Rendered render_semibricks(const Presentation& p, const RenderOptions& o) {
  Json rows = Json::array();
  std::ostringstream os;
  for (Subcat x : enumerate_semibricks(p)) {
    const bool sms = sms_check(p, x);
    const bool proper = proper_relative(p, x, o.mult_cap);
    const bool round = length_wide_roundtrip(p, x, o.mult_cap);
    const Subcat filt = filt_closure(p, x, o.stable_only);
    rows.push_back({{"members", ids_json(p, x)},
                    {"filt", ids_json(p, filt)},
                    {"sms", sms},
                    {"proper_relative_to_presentation", proper},
                    {"sim_filt_roundtrip", round}});
    os << describe(p, x) << "  filt=" << describe(p, filt) << "  sms=" << yes_no(sms)
       << "  proper(relative to presentation)=" << yes_no(proper)
       << "  sim(Filt)=X: " << yes_no(round) << "\n";
  }
  return {o.json ? dump(rows) : os.str(), Outcome::ok};
}

Rendered render_tors(const Presentation& p, const RenderOptions& o) {
  const auto tors = enumerate_tors(p, o.enumeration);
  if (o.count) {
    if (o.json) return {dump(Json{{"count", tors.size()}}), Outcome::ok};
    return {std::to_string(tors.size()) + "\n", Outcome::ok};
  }
  Json rows = Json::array();
  std::ostringstream os;
  for (Subcat t : tors) {
    if (o.pairs) {
      const Subcat f = perp_right(p, t);
      rows.push_back({{"tors", ids_json(p, t)}, {"torf", ids_json(p, f)}});
      os << describe(p, t) << " | " << describe(p, f) << "\n";
    } else {
      rows.push_back(ids_json(p, t));
      os << describe(p, t) << "\n";
    }
  }
  return {o.json ? dump(rows) : os.str(), Outcome::ok};
}

Rendered render_intervals(const Presentation& p, const RenderOptions& o) {
  const auto l = TorsLattice::build(p, enumerate_tors(p, o.enumeration));
  Json rows = Json::array();
  std::ostringstream os;
  bool clean = true;
  for (std::size_t u = 0; u < l.size(); ++u) {
    for (std::size_t t = 0; t < l.size(); ++t) {
      if (!l.leq(u, t)) continue;
      std::size_t size = 0;
      for (std::size_t z = 0; z < l.size(); ++z) {
        if (l.leq(u, z) && l.leq(z, t)) ++size;
      }
      const Subcat bricks = bricks_in(p, l.element(u), l.element(t));
      const Report r = interval_check(p, l, u, t);
      clean = clean && r.ok();
      Json row{{"lower", ids_json(p, l.element(u))},
               {"upper", ids_json(p, l.element(t))},
               {"size", size},
               {"bricks", ids_json(p, bricks)},
               {"ok", r.ok()},
               {"failures", r.failures}};
      os << "[" << describe(p, l.element(u)) << ", " << describe(p, l.element(t)) << "] size="
         << size << " bricks=" << describe(p, bricks);
      if (size == 2) {
        const LabelResult lr = label_cover(p, l.element(t), l.element(u));
        if (lr.brick) {
          row["label"] = p.indec(*lr.brick).id;
          os << " label=" << p.indec(*lr.brick).id;
        }
      }
      for (const auto& f : r.failures) os << "  FAIL " << f;
      os << "\n";
      rows.push_back(std::move(row));
    }
  }
  return {o.json ? dump(rows) : os.str(), clean ? Outcome::ok : Outcome::contract_violation};
}

Json tautilt_json(const Presentation& p, const std::vector<PairingRow>& rows, const Report& b) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"tors", ids_json(p, r.tors)},
                   {"torf", ids_json(p, r.torf)},
                   {"P", ids_json(p, r.ptors)},
                   {"I", ids_json(p, r.itorf)},
                   {"support", r.support}});
  }
  return Json{{"rows", out}, {"bijections", report_json(b)}};
}

Rendered render_tautilt(const Presentation& p, const RenderOptions& o) {
  const auto rows = pairing_table(p, o.enumeration);
  const Report b = bijection_check(p, o.enumeration);
  const Outcome outcome = b.ok() ? Outcome::ok : Outcome::contract_violation;
  if (o.json) return {dump(tautilt_json(p, rows, b)), outcome};
  std::ostringstream os;
  if (o.table) {
    os << "T\tF\tP(T)\tI(F)\n";
    for (const auto& r : rows) {
      os << canonical_key(p, r.tors) << "\t" << canonical_key(p, r.torf) << "\t"
         << canonical_key(p, r.ptors) << "\t" << canonical_key(p, r.itorf) << "\n";
    }
    return {os.str(), outcome};
  }
  for (const auto& r : rows) {
    os << "T=" << describe(p, r.tors) << " P(T)=" << describe(p, r.ptors)
       << " F=" << describe(p, r.torf) << " I(F)=" << describe(p, r.itorf)
       << " support=" << yes_no(r.support) << "\n";
  }
  os << (b.ok() ? "PASS " : "FAIL ") << b.name << "\n";
  for (const auto& f : b.failures) os << "  " << f << "\n";
  for (const auto& n : b.notes) os << "  note: " << n << "\n";
  return {os.str(), outcome};
}

std::string checks_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.ok() ? "PASS " : "FAIL ") << r.name << "\n";
    for (const auto& f : r.failures) os << "  " << f << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
  }
  return os.str();
}

bool all_ok(const std::vector<Report>& reports) {
  for (const auto& r : reports) {
    if (!r.ok()) return false;
  }
  return true;
}

Rendered render_check(const Presentation& p, const RenderOptions& o) {
  const auto reports = all_checks(p, o);
  const Outcome outcome = all_ok(reports) ? Outcome::ok : Outcome::contract_violation;
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return {dump(arr), outcome};
  }
  return {checks_text(reports), outcome};
}

Rendered render_report(const Presentation& p, const RenderOptions& o) {
  const auto tors = enumerate_tors(p, o.enumeration);
  const auto l = TorsLattice::build(p, tors);
  const auto reports = all_checks(p, o);
  const Irreducibles irr = irr_elements(l);
  Json covers = Json::array();
  for (const Cover& c : l.covers()) {
    covers.push_back({{"upper", ids_json(p, l.element(c.upper))},
                      {"lower", ids_json(p, l.element(c.lower))},
                      {"label", c.label ? Json(p.indec(*c.label).id) : Json(nullptr)}});
  }
  Json jirr = Json::array(), mirr = Json::array();
  for (std::size_t i : irr.join) jirr.push_back(ids_json(p, l.element(i)));
  for (std::size_t i : irr.meet) mirr.push_back(ids_json(p, l.element(i)));
  Json checks = Json::array();
  for (const auto& r : reports) checks.push_back(report_json(r));
  const bool ok = all_ok(reports);
  Json out{{"name", p.name()},
           {"indecs", p.size()},
           {"conflations", p.conflations().size()},
           {"validation", Json::array()},
           {"strata", strata_json(p, strata(p))},
           {"simples", ids_json(p, simples(p, p.all()))},
           {"theta_projectives", ids_json(p, theta_projectives(p, p.all()))},
           {"theta_injectives", ids_json(p, theta_injectives(p, p.all()))},
           {"tors_count", tors.size()},
           {"covers", covers},
           {"join_irreducible", jirr},
           {"meet_irreducible", mirr},
           {"checks", checks},
           {"ok", ok}};
  return {dump(out), ok ? Outcome::ok : Outcome::contract_violation};
}

}  // namespace

std::string hasse_dot(const Presentation& p, const EnumerationOptions& opts) {
  const auto l = TorsLattice::build(p, enumerate_tors(p, opts));
  auto node = [&](std::size_t i) { return "\"" + describe(p, l.element(i)) + "\""; };
  std::ostringstream os;
  os << "digraph \"" << p.name() << "\" {\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    os << "  " << node(i) << " [label=\"" << canonical_key(p, l.element(i)) << "\"];\n";
  }
  for (const Cover& c : l.covers()) {
    os << "  " << node(c.upper) << " -> " << node(c.lower);
    if (c.label) os << " [label=\"" << p.indec(*c.label).id << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<Report> all_checks(const Presentation& p, const RenderOptions& o) {
  std::vector<Report> out;
  const auto tors = enumerate_tors(p, o.enumeration);
  const auto torf = enumerate_torf(p, o.enumeration);
  out.push_back(torsion_pairs_check(p, tors, torf));
  const auto l = TorsLattice::build(p, tors);
  out.push_back(check_join_meet(l));
  out.push_back(check_semidistributive(l, o.sd_bound));
  out.push_back(check_algebraic(l, p));
  out.push_back(check_labels(l));
  out.push_back(interval_check_all(p, l));

  Report standard = standard_check(p);
  out.push_back(standard);
  Report thm{"brick/irreducible bijections", {}, {}};
  if (standard.ok()) {
    std::size_t count = 0;
    for (std::size_t u = 0; u < l.size(); ++u) {
      for (std::size_t t = 0; t < l.size(); ++t) {
        if (!l.leq(u, t)) continue;
        ++count;
        for (auto& f : irreducible_bijection_check(p, l, u, t).failures) thm.fail(std::move(f));
      }
    }
    thm.note("intervals checked: " + std::to_string(count));
  } else {
    thm.note("skipped: presentation is not standard");
  }
  out.push_back(thm);

  try {
    out.push_back(top_bottom_arrows_check(p, o.enumeration));
  } catch (const Error& e) {
    Report r{"arrows at top and bottom", {}, {}};
    r.fail(e.what());
    out.push_back(r);
  }
  out.push_back(dual_lattice_check(p, l, o.enumeration));

  Report strata_rep{"strata", {}, {}};
  const Strata s = strata(p);
  if (!sms_check(p, s.theta_inf)) strata_rep.fail("theta_inf " + describe(p, s.theta_inf) + " is not a simple-minded system");
  if (s.theta1 == s.theta_inf) {
    if (simples(p, p.all()) != s.theta1) strata_rep.fail("sim(all) differs from theta1");
    for (std::size_t i = 0; i < p.size(); ++i) {
      const FiltLength fl = filt_length(p, s.theta1, ObjClass(p.size(), i, 1), true, o.mult_cap);
      if (fl.length != p.theta(i)) {
        strata_rep.fail("theta(" + p.indec(i).id + ") = " + std::to_string(p.theta(i)) +
                        " but its theta1-length is " +
                        (fl.length ? std::to_string(*fl.length) : std::string("undefined")));
      }
    }
  } else {
    strata_rep.note("theta1 != theta_inf; length identity not applicable");
  }
  out.push_back(strata_rep);

  Report enough{"enough projectives and injectives", {}, {}};
  if (!enough_projectives_check(p)) enough.fail("Fac(projectives) misses " + describe(p, p.all() - fac_theta(p, theta_projectives(p, p.all()))));
  if (!enough_injectives_check(p)) enough.fail("Sub(injectives) misses " + describe(p, p.all() - sub_theta(p, theta_injectives(p, p.all()))));
  out.push_back(enough);

  out.push_back(bijection_check(p, o.enumeration));
  return out;
}

Rendered render(const Presentation& p, Command cmd, const RenderOptions& opts) {
  const ValidationReport v = validate(p);
  if (cmd == Command::validate || !v.empty()) {
    if (cmd == Command::report) {
      return {dump(Json{{"name", p.name()}, {"validation", validation_json(p, v)}, {"ok", false}}),
              Outcome::validation_failure};
    }
    return render_validate(p, v, opts);
  }
  switch (cmd) {
    case Command::strata: return render_strata(p, opts);
    case Command::simples: return render_simples(p, opts);
    case Command::semibricks: return render_semibricks(p, opts);
    case Command::tors: return render_tors(p, opts);
    case Command::hasse: return {hasse_dot(p, opts.enumeration), Outcome::ok};
    case Command::check: return render_check(p, opts);
    case Command::intervals: return render_intervals(p, opts);
    case Command::tautilt: return render_tautilt(p, opts);
    case Command::report: return render_report(p, opts);
    case Command::validate: break;
  }
  return render_validate(p, v, opts);
}

}  // namespace exlen
