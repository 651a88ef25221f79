#include "gca/algebroids.hpp"

namespace gca {

namespace {

Parity section_parity(const BundleSpec& b, std::size_t a) {
  return b.fibres[a].section_parity;
}

void check_tensor_parity(const JacobiAlgebroidSpec& s) {
  const std::size_t r = s.bundle.rank();
  const std::size_t nb = s.bundle.base.size();
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t A = 0; A < nb; ++A)
      if (!s.anchor[a][A].has_parity(section_parity(s.bundle, a) +
                                     s.bundle.base[A].parity))
        throw ParityMismatch("anchor entry parity makes S inhomogeneous");
    if (!s.cocycle[a].has_parity(section_parity(s.bundle, a)))
      throw ParityMismatch("cocycle entry parity makes Q inhomogeneous");
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t g = 0; g < r; ++g)
        if (!s.structure[a][b][g].has_parity(section_parity(s.bundle, a) +
                                             section_parity(s.bundle, b) +
                                             section_parity(s.bundle, g)))
          throw ParityMismatch("bracket constant parity makes S inhomogeneous");
  }
}

}  // namespace

JacobiAlgebroidSpec JacobiAlgebroidSpec::make(
    BundleSpec bundle, std::vector<std::vector<Poly>> anchor,
    std::vector<std::vector<std::vector<Poly>>> structure,
    std::vector<Poly> cocycle) {
  const std::size_t r = bundle.fibres.size();
  const std::size_t nb = bundle.base.size();
  std::vector<Variable> base_vars = bundle.base;
  for (auto& v : base_vars) v.weight = 0;
  Chart base(base_vars);

  auto fix = [&](Poly& p) {
    if (!p.chart().same(base)) p = p.on_chart(base, false);
  };
  if (anchor.size() != r || structure.size() != r || cocycle.size() != r)
    throw Error("jacobi algebroid spec: tensor rank mismatch");
  for (std::size_t a = 0; a < r; ++a) {
    if (anchor[a].size() != nb || structure[a].size() != r)
      throw Error("jacobi algebroid spec: tensor rank mismatch");
    for (auto& p : anchor[a]) fix(p);
    fix(cocycle[a]);
    for (std::size_t b = 0; b < r; ++b) {
      if (structure[a][b].size() != r)
        throw Error("jacobi algebroid spec: tensor rank mismatch");
      for (auto& p : structure[a][b]) fix(p);
    }
  }

  // Project onto the graded-antisymmetric part in (beta, alpha): only
  // (1/2)(Q_{ba} + (-1)^((a+1)(b+1)) Q_{ab}) is visible in S.
  std::vector<std::vector<std::vector<Poly>>> proj = structure;
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t g = 0; g < r; ++g) {
        int s = parity_sign(bundle.fibres[a].section_parity + Parity::Odd,
                            bundle.fibres[b].section_parity + Parity::Odd);
        proj[b][a][g] = Rational(1, 2) *
                        (structure[b][a][g] + Rational(s) * structure[a][b][g]);
      }

  JacobiAlgebroidSpec spec{std::move(bundle), std::move(base),
                           std::move(anchor), std::move(proj),
                           std::move(cocycle)};
  check_tensor_parity(spec);
  return spec;
}

OddJacobiStructure build_structure(const JacobiAlgebroidSpec& spec) {
  PhaseChart pc = spec.bundle.pistar_phase();
  const Chart& ch = pc.chart();
  const std::size_t r = spec.bundle.rank();
  const std::size_t nb = spec.bundle.base.size();

  auto var = [&](const std::string& n) { return Poly::variable(ch, ch.index(n)); };
  auto lift = [&](const Poly& p) { return p.on_chart(ch); };

  Poly S(ch), Q(ch);
  for (std::size_t a = 0; a < r; ++a) {
    const Parity ea = section_parity(spec.bundle, a);
    Poly pi_a = var("p_" + spec.bundle.fibres[a].eta_name);
    for (std::size_t A = 0; A < nb; ++A) {
      if (spec.anchor[a][A].is_zero()) continue;
      S += Rational(ea == Parity::Odd ? -1 : 1) *
           (pi_a * lift(spec.anchor[a][A]) * var("p_" + spec.bundle.base[A].name));
    }
    for (std::size_t b = 0; b < r; ++b) {
      const Parity eb = section_parity(spec.bundle, b);
      Poly pi_b = var("p_" + spec.bundle.fibres[b].eta_name);
      for (std::size_t g = 0; g < r; ++g) {
        if (spec.structure[b][a][g].is_zero()) continue;
        S += Rational(ea + eb == Parity::Odd ? -1 : 1) * Rational(1, 2) *
             (pi_a * pi_b * lift(spec.structure[b][a][g]) *
              var(spec.bundle.fibres[g].eta_name));
      }
    }
    if (!spec.cocycle[a].is_zero()) Q += pi_a * lift(spec.cocycle[a]);
  }
  if (!S.has_parity(Parity::Odd) || !Q.has_parity(Parity::Odd))
    throw ParityMismatch("build_structure: (S, Q) came out non-odd");
  return OddJacobiStructure{std::move(pc), std::move(S), std::move(Q)};
}

QuasiQStructure transport(const OddJacobiStructure& j, const BundleSpec& b) {
  PhaseChart pistar = b.pistar_phase();
  if (!j.phase.same(pistar))
    throw ChartMismatch("transport: structure is not on T*(PiE*) of this bundle");
  PhaseChart pie = b.pie_phase();

  // Shape checks: S at most quadratic in momenta with no momentum-free part,
  // Q linear in the fibre momenta only.
  if (pistar.momentum_degree(j.S) > 2)
    throw StructureError("transport: S has momentum degree > 2");
  std::vector<int> fibre_momenta, base_momenta;
  for (auto& f : b.fibres)
    fibre_momenta.push_back(pistar.chart().index("p_" + f.eta_name));
  for (auto& v : b.base)
    base_momenta.push_back(pistar.chart().index("p_" + v.name));
  if (j.Q.degree_in(fibre_momenta) > 1 || j.Q.depends_on(base_momenta))
    throw StructureError("transport: Q must be linear in the pi momenta");

  Substitution rinv = dvb_morphism_inverse(b);
  Poly s_hat = rinv(j.S);
  Poly q_hat = rinv(j.Q);
  if (!pie.momentum_free(q_hat))
    throw StructureError("transport: Q-hat still depends on momenta");

  auto [d_phase, minus_g] = desymbol(s_hat, pie);  // throws if not linear
  if (!minus_g.is_zero())
    throw StructureError("transport: S has a momentum-free remainder");

  Chart bundle_chart = b.pie_chart();
  Derivation D = d_phase.on_chart(bundle_chart);
  Poly q = -q_hat.on_chart(bundle_chart);

  // Theorem-1 equivalence, both directions.
  const bool jacobi_ok = verify_odd_jacobi(j).pass();
  const bool quasi_ok = verify_quasi_q(D, q).pass();
  if (jacobi_ok != quasi_ok)
    throw Error("transport: odd Jacobi and quasi-Q verdicts disagree");

  return QuasiQStructure{std::move(bundle_chart), std::move(D), std::move(q)};
}

namespace {

void require_weight_one(const QuasiQStructure& s, const char* who) {
  Derivation e = euler_field(s.chart);
  if (commutator(e, s.D) != s.D)
    throw StructureError(std::string(who) + ": D is not of weight one");
  if (e(s.q) != s.q)
    throw StructureError(std::string(who) + ": q is not of weight one");
}

}  // namespace

LieAlgebroidWithCocycle cocycle_split(const QuasiQStructure& s) {
  require_weight_one(s, "cocycle_split");
  Derivation e = euler_field(s.chart);
  Derivation q_field = s.q * e;
  Derivation homological = s.D - q_field;
  Derivation sq = commutator(homological, homological);
  for (auto& [v, c] : sq.coefficients())
    if (!c.is_zero())
      throw StructureError("cocycle_split: Q^2 != 0, input was not quasi-Q");
  if (!homological(s.q).is_zero())
    throw StructureError("cocycle_split: Q(phi) != 0, input was not quasi-Q");
  return LieAlgebroidWithCocycle{s.chart, std::move(homological), s.q};
}

QuasiQStructure cocycle_merge(const LieAlgebroidWithCocycle& l) {
  Derivation e = euler_field(l.chart);
  if (!l.phi.has_parity(Parity::Odd))
    throw ParityMismatch("cocycle_merge: phi must be odd");
  if (e(l.phi) != l.phi)
    throw StructureError("cocycle_merge: phi is not of weight one");
  Derivation qq = commutator(l.Q, l.Q);
  for (auto& [v, c] : qq.coefficients())
    if (!c.is_zero())
      throw StructureError("cocycle_merge: Q is not homological");
  if (!l.Q(l.phi).is_zero())
    throw StructureError("cocycle_merge: phi is not a cocycle");
  QuasiQStructure s{l.chart, l.Q + l.phi * e, l.phi};
  if (!verify_quasi_q(s.D, s.q).pass())
    throw Error("cocycle_merge: merged structure failed the quasi-Q check");
  return s;
}

JacobiAlgebroidSpec replace_structure_constants(const JacobiAlgebroidSpec& spec) {
  const std::size_t r = spec.bundle.rank();
  auto structure = spec.structure;
  for (std::size_t b = 0; b < r; ++b) {
    const Parity eb = section_parity(spec.bundle, b);
    for (std::size_t a = 0; a < r; ++a) {
      const Parity ea = section_parity(spec.bundle, a);
      for (std::size_t g = 0; g < r; ++g) {
        Poly delta(spec.base_chart);
        if (a == g) delta += spec.cocycle[b];
        if (b == g)
          delta += Rational(parity_sign(ea + Parity::Odd, eb + Parity::Odd)) *
                   spec.cocycle[a];
        structure[b][a][g] -=
            Rational(ea + eb == Parity::Odd ? -1 : 1) * delta;
      }
    }
  }
  std::vector<Poly> zero_cocycle(r, Poly(spec.base_chart));
  return JacobiAlgebroidSpec::make(spec.bundle, spec.anchor,
                                   std::move(structure),
                                   std::move(zero_cocycle));
}

std::pair<Poly, Poly> dual_schouten(const JacobiAlgebroidSpec& spec) {
  OddJacobiStructure j = build_structure(spec);
  if (!verify_odd_jacobi(j).pass())
    throw StructureError("dual_schouten: spec is not a valid Jacobi algebroid");
  const PhaseChart& pc = j.phase;
  const Chart& ch = pc.chart();
  const std::size_t r = spec.bundle.rank();
  auto var = [&](const std::string& n) { return Poly::variable(ch, ch.index(n)); };
  auto lift = [&](const Poly& p) { return p.on_chart(ch); };

  Poly sbar(ch), phibar(ch);
  for (std::size_t a = 0; a < r; ++a) {
    const Parity ea = section_parity(spec.bundle, a);
    Poly pi_a = var("p_" + spec.bundle.fibres[a].eta_name);
    for (std::size_t A = 0; A < spec.bundle.base.size(); ++A)
      sbar += Rational(ea == Parity::Odd ? -1 : 1) *
              (pi_a * lift(spec.anchor[a][A]) *
               var("p_" + spec.bundle.base[A].name));
    for (std::size_t b = 0; b < r; ++b) {
      const Parity eb = section_parity(spec.bundle, b);
      for (std::size_t g = 0; g < r; ++g)
        sbar += Rational(1, 2) * Rational(ea + eb == Parity::Odd ? -1 : 1) *
                (pi_a * var("p_" + spec.bundle.fibres[b].eta_name) *
                 lift(spec.structure[b][a][g]) *
                 var(spec.bundle.fibres[g].eta_name));
    }
    for (std::size_t g = 0; g < r; ++g) {
      const Parity eg = section_parity(spec.bundle, g);
      sbar += Rational(1, 2) * Rational(2) *
              Rational(eg == Parity::Odd ? -1 : 1) *
              (pi_a * lift(spec.cocycle[a]) *
               var("p_" + spec.bundle.fibres[g].eta_name) *
               var(spec.bundle.fibres[g].eta_name));
    }
    phibar -= pi_a * lift(spec.cocycle[a]);
  }
  if (!poisson(sbar, sbar, pc).is_zero())
    throw Error("dual_schouten: {S-bar,S-bar} != 0");
  if (!poisson(sbar, phibar, pc).is_zero())
    throw Error("dual_schouten: {S-bar,phi-bar} != 0");
  return {std::move(sbar), std::move(phibar)};
}

Schoutenisation schoutenise(const OddJacobiStructure& j, const BundleSpec& b) {
  PhaseChart pistar = b.pistar_phase();
  if (!j.phase.same(pistar))
    throw ChartMismatch("schoutenise: structure is not on T*(PiE*) of this bundle");

  // Extended chart: original variables, then t, u = e^(-t), p_t. Only u and
  // the conjugate pair are new generators; t never occurs outside derivatives.
  std::vector<Variable> vars = pistar.chart().vars();
  const int t_idx = int(vars.size());
  vars.push_back(Variable{"t", Parity::Even, 0});
  vars.push_back(Variable{"u", Parity::Even, 0, /*laurent=*/true, t_idx});
  vars.push_back(Variable{"p_t", Parity::Even, 0});
  Chart ch(std::move(vars));
  std::vector<std::pair<int, int>> pairs = pistar.pairs();
  pairs.emplace_back(t_idx, t_idx + 2);
  PhaseChart ext(ch, std::move(pairs));

  Poly S = j.S.on_chart(ch);
  Poly Q = j.Q.on_chart(ch);
  Poly u = Poly::variable(ch, t_idx + 1);
  Poly pt = Poly::variable(ch, t_idx + 2);
  Poly sbar = u * (S - Q * pt);
  return Schoutenisation{std::move(ext), std::move(sbar), std::move(S),
                         std::move(Q), std::move(u), std::move(pt)};
}

JacobiAlgebroidSpec lie_algebra_jacobi(
    const std::vector<Parity>& section_parities,
    const std::vector<std::vector<std::vector<Rational>>>& constants,
    const std::vector<Rational>& cocycle) {
  const std::size_t r = section_parities.size();
  BundleSpec bundle = BundleSpec::make({}, section_parities);
  Chart base;
  std::vector<std::vector<Poly>> anchor(r);
  std::vector<std::vector<std::vector<Poly>>> structure(
      r, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r, Poly(base))));
  std::vector<Poly> cpolys(r, Poly(base));
  for (std::size_t b = 0; b < r; ++b) {
    cpolys[b] = Poly::constant(base, cocycle.at(b));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t g = 0; g < r; ++g)
        structure[b][a][g] = Poly::constant(base, constants.at(b).at(a).at(g));
  }
  return JacobiAlgebroidSpec::make(std::move(bundle), std::move(anchor),
                                   std::move(structure), std::move(cpolys));
}

JacobiAlgebroidSpec extend_r01(const JacobiAlgebroidSpec& spec) {
  const std::size_t r = spec.bundle.rank();
  for (auto& c : spec.cocycle)
    if (!c.is_zero())
      throw StructureError("extend_r01: input must be a plain Lie algebroid");
  {
    OddJacobiStructure j = build_structure(spec);
    if (!verify_odd_jacobi(j).pass())
      throw StructureError("extend_r01: underlying Lie algebroid is invalid");
  }

  BundleSpec bundle = spec.bundle;
  BundleSpec::Fibre tau;
  tau.section_parity = Parity::Even;
  tau.eta_name = "tau";
  tau.xi_name = "xi" + std::to_string(r + 1);
  bundle.fibres.push_back(std::move(tau));

  const Chart& base = spec.base_chart;
  const std::size_t nb = spec.bundle.base.size();
  std::vector<std::vector<Poly>> anchor = spec.anchor;
  anchor.emplace_back(nb, Poly(base));
  std::vector<std::vector<std::vector<Poly>>> structure(
      r + 1, std::vector<std::vector<Poly>>(r + 1,
                                            std::vector<Poly>(r + 1, Poly(base))));
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t g = 0; g < r; ++g)
        structure[b][a][g] = spec.structure[b][a][g];
  // The p_tau pi^a eta_a term of S: Q_{T a}^a = -1, Q_{a T}^a = (-1)^a.
  for (std::size_t a = 0; a < r; ++a) {
    structure[r][a][a] = Poly::constant(base, -1);
    structure[a][r][a] = Poly::constant(
        base, spec.bundle.fibres[a].section_parity == Parity::Odd ? -1 : 1);
  }
  std::vector<Poly> cocycle(r + 1, Poly(base));
  cocycle[r] = Poly::constant(base, -1);  // Q = -p_tau
  return JacobiAlgebroidSpec::make(std::move(bundle), std::move(anchor),
                                   std::move(structure), std::move(cocycle));
}

QuasiQStructure flat_connection_quasi_q(const Chart& base,
                                        const std::vector<Poly>& components) {
  const std::size_t n = base.size();
  if (components.size() != n)
    throw Error("flat_connection_quasi_q: one component per base variable");
  std::vector<Variable> vars;
  for (auto& v : base.vars()) vars.push_back(Variable{v.name, v.parity, 0});
  for (auto& v : base.vars())
    vars.push_back(Variable{"d" + v.name, v.parity + Parity::Odd, 1});
  Chart ch(std::move(vars));

  Poly a_form(ch);
  for (std::size_t i = 0; i < n; ++i) {
    Poly comp = components[i].on_chart(ch, false);
    a_form += Poly::variable(ch, int(n + i)) * comp;
  }
  if (!a_form.has_parity(Parity::Odd))
    throw ParityMismatch("flat_connection_quasi_q: the one-form must be odd");

  std::map<int, Poly> d_coeffs;
  for (std::size_t i = 0; i < n; ++i)
    d_coeffs.emplace(int(i), Poly::variable(ch, int(n + i)));
  Derivation de_rham(ch, Parity::Odd, std::move(d_coeffs));
  Derivation D = de_rham + a_form * euler_field(ch);
  return QuasiQStructure{std::move(ch), std::move(D), std::move(a_form)};
}

OddContact odd_contact(int n) {
  if (n < 1) throw Error("odd_contact: dimension must be >= 1");
  std::vector<std::pair<std::string, Parity>> base;
  for (int i = 1; i <= n; ++i)
    base.emplace_back("x" + std::to_string(i), Parity::Even);
  BundleSpec tn = BundleSpec::make(std::move(base),
                                   std::vector<Parity>(std::size_t(n), Parity::Even));
  Chart base_chart(std::vector<Variable>(tn.base));
  const std::size_t N = std::size_t(n);
  std::vector<std::vector<Poly>> anchor(N, std::vector<Poly>(N, Poly(base_chart)));
  for (std::size_t i = 0; i < N; ++i)
    anchor[i][i] = Poly::constant(base_chart, 1);
  std::vector<std::vector<std::vector<Poly>>> structure(
      N, std::vector<std::vector<Poly>>(N, std::vector<Poly>(N, Poly(base_chart))));
  std::vector<Poly> cocycle(N, Poly(base_chart));
  JacobiAlgebroidSpec tangent = JacobiAlgebroidSpec::make(
      tn, std::move(anchor), std::move(structure), std::move(cocycle));
  JacobiAlgebroidSpec spec = extend_r01(tangent);
  OddJacobiStructure jacobi = build_structure(spec);
  QuasiQStructure quasi = transport(jacobi, spec.bundle);
  return OddContact{std::move(spec), std::move(jacobi), std::move(quasi)};
}

}  // namespace gca
