#include "gca/specdoc.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include "gca/parse.hpp"
#include "gca/random.hpp"

namespace gca {

namespace {

Parity parse_parity(const Json& j) {
  if (j.is_number_integer()) {
    int v = j.get<int>();
    if (v == 0) return Parity::Even;
    if (v == 1) return Parity::Odd;
  } else if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
  }
  throw Error("spec document: parity must be \"even\", \"odd\", 0 or 1");
}

BundleSpec parse_bundle(const Json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("fibres"))
    throw Error("spec document: bundle needs \"base\" and \"fibres\"");
  std::vector<std::pair<std::string, Parity>> base;
  for (const auto& b : j.at("base")) {
    if (b.is_string())
      base.emplace_back(b.get<std::string>(), Parity::Even);
    else
      base.emplace_back(b.at("name").get<std::string>(),
                        parse_parity(b.at("parity")));
  }
  std::vector<Parity> parities;
  for (const auto& f : j.at("fibres"))
    parities.push_back(f.is_object() ? parse_parity(f.at("parity"))
                                     : parse_parity(f));
  BundleSpec spec = BundleSpec::make(std::move(base), std::move(parities));
  std::size_t i = 0;
  for (const auto& f : j.at("fibres")) {
    if (f.is_object()) {
      if (f.contains("eta")) spec.fibres[i].eta_name = f.at("eta");
      if (f.contains("xi")) spec.fibres[i].xi_name = f.at("xi");
    }
    ++i;
  }
  return spec;
}

Json bundle_json(const BundleSpec& b) {
  Json base = Json::array();
  for (const auto& v : b.base)
    base.push_back({{"name", v.name}, {"parity", to_string(v.parity)}});
  Json fibres = Json::array();
  for (const auto& f : b.fibres)
    fibres.push_back({{"parity", to_string(f.section_parity)},
                      {"eta", f.eta_name},
                      {"xi", f.xi_name}});
  return Json{{"base", base}, {"fibres", fibres}};
}

std::map<int, Poly> parse_field(const Json& j, const Chart& chart) {
  std::map<int, Poly> coeffs;
  for (const auto& [name, expr] : j.items()) {
    Poly c = parse_expr(expr.get<std::string>(), chart);
    if (!c.is_zero()) coeffs.emplace(chart.index(name), std::move(c));
  }
  return coeffs;
}

Json field_json(const Derivation& d) {
  Json out = Json::object();
  for (const auto& [var, c] : d.coefficients())
    out[d.chart().var(var).name] = render(c);
  return out;
}

std::vector<std::vector<std::vector<Poly>>> parse_cube(const Json& j,
                                                       const Chart& base) {
  std::vector<std::vector<std::vector<Poly>>> out;
  for (const auto& plane : j) {
    out.emplace_back();
    for (const auto& row : plane) {
      out.back().emplace_back();
      for (const auto& e : row)
        out.back().back().push_back(parse_expr(e.get<std::string>(), base));
    }
  }
  return out;
}

/// (S, Q) on T*(PiE) -> QuasiQStructure, used when a task that needs D and
/// q is pointed at an odd Jacobi document.
QuasiQStructure to_quasi(const SpecDocument& doc) {
  if (doc.quasi) return *doc.quasi;
  return transport(doc.jacobi_structure(), doc.bundle);
}

}  // namespace

void Report::set_output(Json j) { output_ = std::make_shared<Json>(std::move(j)); }

bool Report::pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

void Report::add(const BracketReport& br) {
  for (const auto& e : br.entries) {
    std::string name = e.name;
    if (!e.pass && !e.witness.empty()) name += " [" + e.witness + "]";
    entries.push_back({std::move(name), e.pass, render(e.residual)});
  }
}

Json Report::to_json() const {
  Json checks = Json::array();
  for (const auto& e : entries)
    checks.push_back(
        {{"name", e.name}, {"pass", e.pass}, {"residual", e.residual}});
  Json j{{"task", task},
         {"pass", pass()},
         {"time_ms", time_ms},
         {"checks", checks}};
  if (output_) j["output"] = *output_;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "task: " << task << "\n";
  for (const auto& e : entries) {
    os << (e.pass ? "  [ ok ] " : "  [FAIL] ") << e.name;
    if (!e.pass) os << "  residual = " << e.residual;
    os << "\n";
  }
  if (output_) os << "output:\n" << output_->dump(2) << "\n";
  os << (pass() ? "PASS" : "FAIL") << " (" << time_ms << " ms)\n";
  return os.str();
}

SpecDocument SpecDocument::from_json(const Json& doc) {
  SpecDocument out;
  out.bundle = parse_bundle(doc.at("bundle"));
  const Json& st = doc.at("structure");
  const std::string kind = st.at("kind").get<std::string>();

  Chart base(out.bundle.base);
  if (kind == "explicit" || kind == "schouten") {
    out.kind = kind == "explicit" ? Kind::Explicit : Kind::Schouten;
    Chart ph = out.bundle.pistar_phase().chart();
    out.S = parse_expr(st.at("S").get<std::string>(), ph);
    if (st.contains("Q"))
      out.Q = parse_expr(st.at("Q").get<std::string>(), ph);
    else if (out.kind == Kind::Explicit)
      throw Error("spec document: explicit structure needs \"Q\"");
  } else if (kind == "algebroid") {
    out.kind = Kind::Algebroid;
    std::vector<std::vector<Poly>> anchor;
    for (const auto& row : st.at("anchor")) {
      anchor.emplace_back();
      for (const auto& e : row)
        anchor.back().push_back(parse_expr(e.get<std::string>(), base));
    }
    std::vector<Poly> cocycle;
    for (const auto& e : st.at("cocycle"))
      cocycle.push_back(parse_expr(e.get<std::string>(), base));
    out.algebroid = JacobiAlgebroidSpec::make(
        out.bundle, std::move(anchor), parse_cube(st.at("brackets"), base),
        std::move(cocycle));
    if (st.value("tau_extension", false)) {
      out.algebroid = extend_r01(*out.algebroid);
      out.bundle = out.algebroid->bundle;
    }
  } else if (kind == "quasi-q" || kind == "lie-cocycle") {
    Chart pie = out.bundle.pie_chart();
    auto coeffs = parse_field(st.at(kind == "quasi-q" ? "D" : "Q"), pie);
    Derivation d(pie, Parity::Odd, std::move(coeffs));
    Poly f = parse_expr(
        st.at(kind == "quasi-q" ? "q" : "phi").get<std::string>(), pie);
    if (kind == "quasi-q") {
      out.kind = Kind::QuasiQ;
      out.quasi = QuasiQStructure{pie, std::move(d), std::move(f)};
    } else {
      out.kind = Kind::LieCocycle;
      out.lie = LieAlgebroidWithCocycle{pie, std::move(d), std::move(f)};
    }
  } else {
    throw Error("spec document: unknown structure kind \"" + kind + "\"");
  }
  return out;
}

SpecDocument SpecDocument::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec document: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error("spec document is not valid JSON: " + std::string(e.what()));
  }
  return from_json(doc);
}

OddJacobiStructure SpecDocument::jacobi_structure() const {
  switch (kind) {
    case Kind::Algebroid:
      return build_structure(*algebroid);
    case Kind::Explicit:
      return OddJacobiStructure{bundle.pistar_phase(), *S, *Q};
    case Kind::Schouten:
      return OddJacobiStructure{bundle.pistar_phase(), *S,
                                Poly(bundle.pistar_phase().chart())};
    default:
      throw Error("document carries no (S, Q) structure on T*(PiE*)");
  }
}

Json SpecDocument::to_json() const {
  Json st;
  switch (kind) {
    case Kind::Explicit:
      st = {{"kind", "explicit"}, {"S", render(*S)}, {"Q", render(*Q)}};
      break;
    case Kind::Schouten:
      st = {{"kind", "schouten"}, {"S", render(*S)}};
      break;
    case Kind::Algebroid: {
      const auto& a = *algebroid;
      Json anchor = Json::array(), cube = Json::array(), coc = Json::array();
      for (const auto& row : a.anchor) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(render(e));
        anchor.push_back(r);
      }
      for (const auto& plane : a.structure) {
        Json p = Json::array();
        for (const auto& row : plane) {
          Json r = Json::array();
          for (const auto& e : row) r.push_back(render(e));
          p.push_back(r);
        }
        cube.push_back(p);
      }
      for (const auto& e : a.cocycle) coc.push_back(render(e));
      st = {{"kind", "algebroid"},
            {"anchor", anchor},
            {"brackets", cube},
            {"cocycle", coc}};
      break;
    }
    case Kind::QuasiQ:
      st = {{"kind", "quasi-q"},
            {"D", field_json(quasi->D)},
            {"q", render(quasi->q)}};
      break;
    case Kind::LieCocycle:
      st = {{"kind", "lie-cocycle"},
            {"Q", field_json(lie->Q)},
            {"phi", render(lie->phi)}};
      break;
  }
  return Json{{"bundle", bundle_json(bundle)}, {"structure", st}};
}

Json emit_quasi_q(const QuasiQStructure& s, const BundleSpec& b) {
  return Json{{"bundle", bundle_json(b)},
              {"structure",
               {{"kind", "quasi-q"}, {"D", field_json(s.D)}, {"q", render(s.q)}}}};
}

Json emit_lie_cocycle(const LieAlgebroidWithCocycle& l, const BundleSpec& b) {
  return Json{
      {"bundle", bundle_json(b)},
      {"structure",
       {{"kind", "lie-cocycle"}, {"Q", field_json(l.Q)}, {"phi", render(l.phi)}}}};
}

namespace {

void run_axioms(const SpecDocument& doc, const TaskOptions& opts, Report& rep) {
  PhaseChart pc = doc.bundle.pistar_phase();
  if (opts.epsilon == 0) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < pc.chart().size(); ++i)
      gens.push_back(Poly::variable(pc.chart(), int(i)));
    RandomPolyGen gen(pc.chart(), opts.seed);
    for (int k = 0; k < 4; ++k)
      gens.push_back(gen.homogeneous(k % 2 ? Parity::Odd : Parity::Even, 2, 2));
    rep.add(check_axioms(
        [&](const Poly& a, const Poly& b) { return poisson(a, b, pc); }, 0,
        gens));
    return;
  }
  if (opts.epsilon != 1) throw Error("axioms: --epsilon must be 0 or 1");
  OddJacobiStructure j = doc.jacobi_structure();
  Chart small = doc.bundle.pistar_chart();
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < small.size(); ++i)
    gens.push_back(Poly::variable(small, int(i)).on_chart(pc.chart()));
  RandomPolyGen gen(small, opts.seed);
  for (int k = 0; k < 4; ++k)
    gens.push_back(gen.homogeneous(k % 2 ? Parity::Odd : Parity::Even, 2, 2)
                       .on_chart(pc.chart()));
  rep.add(check_axioms(
      [&](const Poly& a, const Poly& b) { return odd_jacobi_bracket(j, a, b); },
      1, gens));
}

void run_bracket(const SpecDocument& doc, const TaskOptions& opts,
                 Report& rep) {
  if (opts.x_expr.empty() || opts.y_expr.empty())
    throw Error("bracket: both --x and --y are required");
  OddJacobiStructure j = doc.jacobi_structure();
  Chart small = doc.bundle.pistar_chart();
  Poly x = parse_expr(opts.x_expr, small).on_chart(j.phase.chart());
  Poly y = parse_expr(opts.y_expr, small).on_chart(j.phase.chart());
  Poly z = odd_jacobi_bracket(j, x, y);
  if (doc.algebroid) {
    Poly oracle =
        coordinate_bracket(*doc.algebroid, x, y).on_chart(j.phase.chart());
    BracketReport br;
    br.add("coordinate oracle agreement", z - oracle);
    rep.add(br);
  }
  rep.set_output(Json{{"bracket", render(z)}});
}

void dispatch(const SpecDocument& doc, const std::string& task,
              const TaskOptions& opts, Report& rep) {
  if (task == "verify-odd-jacobi") {
    rep.add(verify_odd_jacobi(doc.jacobi_structure()));
  } else if (task == "verify-quasi-q") {
    if (doc.lie) {
      // lie-cocycle documents: Q is a curvature-free instance, plus the
      // cocycle conditions on phi
      rep.add(verify_quasi_q(doc.lie->Q, Poly(doc.lie->chart)));
      BracketReport br;
      br.add("Q[phi]", doc.lie->Q(doc.lie->phi));
      rep.add(br);
    } else {
      QuasiQStructure s = to_quasi(doc);
      rep.add(verify_quasi_q(s.D, s.q));
    }
  } else if (task == "verify-schouten") {
    if (!doc.S) throw Error("verify-schouten: document carries no S");
    rep.add(verify_schouten(*doc.S, doc.bundle.pistar_phase()));
  } else if (task == "transport") {
    QuasiQStructure s = transport(doc.jacobi_structure(), doc.bundle);
    rep.add(verify_quasi_q(s.D, s.q));
    rep.set_output(emit_quasi_q(s, doc.bundle));
  } else if (task == "split") {
    QuasiQStructure s = to_quasi(doc);
    LieAlgebroidWithCocycle l = cocycle_split(s);
    rep.add(verify_quasi_q(l.Q, Poly(l.chart)));
    BracketReport br;
    br.add("Q[phi]", l.Q(l.phi));
    rep.add(br);
    rep.set_output(emit_lie_cocycle(l, doc.bundle));
  } else if (task == "merge") {
    if (!doc.lie) throw Error("merge: document is not of kind lie-cocycle");
    QuasiQStructure s = cocycle_merge(*doc.lie);
    rep.add(verify_quasi_q(s.D, s.q));
    rep.set_output(emit_quasi_q(s, doc.bundle));
  } else if (task == "schoutenise") {
    Schoutenisation sch = schoutenise(doc.jacobi_structure(), doc.bundle);
    rep.add(verify_schouten(sch.Sbar, sch.phase));
    rep.set_output(Json{{"Sbar", render(sch.Sbar)},
                        {"S", render(sch.S)},
                        {"Q", render(sch.Q)}});
  } else if (task == "dual-schouten") {
    if (!doc.algebroid)
      throw Error("dual-schouten: document is not of kind algebroid");
    auto [sbar, phibar] = dual_schouten(*doc.algebroid);
    PhaseChart pc = doc.algebroid->bundle.pistar_phase();
    BracketReport br;
    br.add("{Sbar,Sbar}", poisson(sbar, sbar, pc));
    br.add("{Sbar,phibar}", poisson(sbar, phibar, pc));
    rep.add(br);
    rep.set_output(Json{{"Sbar", render(sbar)}, {"phibar", render(phibar)}});
  } else if (task == "bracket") {
    run_bracket(doc, opts, rep);
  } else if (task == "axioms") {
    run_axioms(doc, opts, rep);
  } else {
    throw Error("unknown task: " + task);
  }
}

}  // namespace

Report run(const SpecDocument& doc, const std::string& task,
           const TaskOptions& opts) {
  Report rep;
  rep.task = task;
  auto t0 = std::chrono::steady_clock::now();
  try {
    dispatch(doc, task, opts, rep);
  } catch (const StructureError& e) {
    // A verified structural precondition failed: report as a failing check
    // rather than an input error.
    rep.entries.push_back({e.what(), false, "(precondition)"});
  }
  rep.time_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

SpecDocument make_example(const std::string& name, int dim,
                          const std::string& preset) {
  SpecDocument out;
  if (name == "odd-contact") {
    if (dim < 1) throw Error("odd-contact example needs --dim >= 1");
    OddContact oc = odd_contact(dim);
    out.kind = SpecDocument::Kind::Algebroid;
    out.bundle = oc.spec.bundle;
    out.algebroid = oc.spec;
    return out;
  }
  if (name == "lie-algebra") {
    std::vector<Parity> par(2, Parity::Even);
    std::vector<std::vector<std::vector<Rational>>> c(
        2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, 0)));
    std::vector<Rational> coc(2, 0);
    if (preset == "solvable2") {
      // [e1, e2] = e2, character phi(e1) = 1, phi(e2) = 0.
      c[0][1][1] = -1;
      c[1][0][1] = 1;
      coc[0] = 1;
    } else if (preset == "abelian2") {
      coc[0] = 1;
    } else {
      throw Error("unknown lie-algebra preset: " + preset);
    }
    out.kind = SpecDocument::Kind::Algebroid;
    out.algebroid = lie_algebra_jacobi(par, c, coc);
    out.bundle = out.algebroid->bundle;
    return out;
  }
  if (name == "flat-connection") {
    // A = dx1 on R^{1|1}: odd, closed, constant coefficient.
    Chart base({{"x1", Parity::Even}, {"th1", Parity::Odd}});
    std::vector<Poly> comps{Poly::constant(base, 1), Poly(base)};
    QuasiQStructure s = flat_connection_quasi_q(base, comps);
    out.kind = SpecDocument::Kind::QuasiQ;
    out.bundle = BundleSpec::make({{"x1", Parity::Even}, {"th1", Parity::Odd}},
                                  {Parity::Even, Parity::Odd});
    out.bundle.fibres[0].xi_name = "dx1";
    out.bundle.fibres[1].xi_name = "dth1";
    out.quasi = QuasiQStructure{out.bundle.pie_chart(),
                                s.D.on_chart(out.bundle.pie_chart()),
                                s.q.on_chart(out.bundle.pie_chart())};
    return out;
  }
  throw Error("unknown example: " + name);
}

}  // namespace gca
