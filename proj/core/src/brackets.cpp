#include "gca/brackets.hpp"

#include "gca/algebroids.hpp"

namespace gca {

namespace {

Parity parity_or_throw(const Poly& p, const char* what) {
  auto info = p.parity_of();
  if (info.kind == ParityInfo::Inhomogeneous)
    throw ParityMismatch(std::string(what) + ": inhomogeneous parity");
  return info.kind == ParityInfo::Homogeneous ? info.value : Parity::Even;
}

}  // namespace

BracketReport check_axioms(const BracketFn& bracket, int epsilon,
                           const std::vector<Poly>& generators) {
  if (epsilon != 0 && epsilon != 1) throw Error("check_axioms: epsilon must be 0 or 1");
  const Parity eps = epsilon ? Parity::Odd : Parity::Even;
  const std::size_t n = generators.size();

  std::vector<Parity> par(n);
  for (std::size_t i = 0; i < n; ++i)
    par[i] = parity_or_throw(generators[i], "check_axioms generator");

  // Pairwise brackets are reused across the triple grid.
  std::vector<std::vector<Poly>> bk(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      bk[i][j] = bracket(generators[i], generators[j]);

  BracketReport report;
  auto record = [&](const char* axiom, bool ok, const Poly& residual,
                    std::string witness) {
    if (ok) return false;
    report.add(axiom, residual, std::move(witness));
    return true;
  };
  auto witness2 = [&](std::size_t i, std::size_t j) {
    return "generators #" + std::to_string(i) + ", #" + std::to_string(j);
  };

  // Grading
  bool failed = false;
  for (std::size_t i = 0; i < n && !failed; ++i)
    for (std::size_t j = 0; j < n && !failed; ++j) {
      bool ok = bk[i][j].has_parity(par[i] + par[j] + eps);
      failed = record("grading", ok, bk[i][j], witness2(i, j));
    }
  if (!failed) report.add("grading", Poly());

  // Skewsymmetry
  failed = false;
  for (std::size_t i = 0; i < n && !failed; ++i)
    for (std::size_t j = 0; j < n && !failed; ++j) {
      int s = parity_sign(par[i] + eps, par[j] + eps);
      Poly r = bk[i][j] + Rational(s) * bk[j][i];
      failed = record("skewsymmetry", r.is_zero(), r, witness2(i, j));
    }
  if (!failed) report.add("skewsymmetry", Poly());

  // Jacobi identity (cyclic form)
  failed = false;
  for (std::size_t i = 0; i < n && !failed; ++i)
    for (std::size_t j = 0; j < n && !failed; ++j)
      for (std::size_t k = 0; k < n && !failed; ++k) {
        Poly r = Rational(parity_sign(par[i] + eps, par[k] + eps)) *
                     bracket(generators[i], bk[j][k]) +
                 Rational(parity_sign(par[j] + eps, par[i] + eps)) *
                     bracket(generators[j], bk[k][i]) +
                 Rational(parity_sign(par[k] + eps, par[j] + eps)) *
                     bracket(generators[k], bk[i][j]);
        failed = record("jacobi", r.is_zero(), r,
                        witness2(i, j) + ", #" + std::to_string(k));
      }
  if (!failed) report.add("jacobi", Poly());

  // Leibniz rule, anomaly form: the {a,1}bc term vanishes for genuine
  // Poisson/Schouten brackets and carries the Jacobi anomaly otherwise.
  failed = false;
  for (std::size_t i = 0; i < n && !failed; ++i) {
    Poly one = Poly::constant(generators[i].chart(), 1);
    Poly anomaly = bracket(generators[i], one);
    for (std::size_t j = 0; j < n && !failed; ++j)
      for (std::size_t k = 0; k < n && !failed; ++k) {
        Poly bc = generators[j] * generators[k];
        Poly r = bracket(generators[i], bc) - bk[i][j] * generators[k] -
                 Rational(parity_sign(par[i] + eps, par[j])) *
                     (generators[j] * bracket(generators[i], generators[k])) +
                 anomaly * bc;
        failed = record("leibniz", r.is_zero(), r,
                        witness2(i, j) + ", #" + std::to_string(k));
      }
  }
  if (!failed) report.add("leibniz", Poly());

  return report;
}

Poly odd_jacobi_bracket(const OddJacobiStructure& j, const Poly& x,
                        const Poly& y) {
  const PhaseChart& pc = j.phase;
  Poly xl = x.chart().same(pc.chart()) ? x : x.on_chart(pc.chart());
  Poly yl = y.chart().same(pc.chart()) ? y : y.on_chart(pc.chart());
  if (!pc.momentum_free(xl) || !pc.momentum_free(yl))
    throw Error("odd_jacobi_bracket: arguments must be momentum-free");
  Poly acc(pc.chart());
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Poly xp = xl.parity_part(p);
    if (xp.is_zero()) continue;
    const Rational s(parity_sign(p + Parity::Odd, Parity::Odd));  // (-1)^(X+1)
    acc += s * (poisson(poisson(j.S, xp, pc), yl, pc) -
                poisson(j.Q, xp * yl, pc));
  }
  if (!pc.momentum_free(acc))
    throw Error("odd_jacobi_bracket: result is not momentum-free");
  return acc;
}

Poly coordinate_bracket(const JacobiAlgebroidSpec& spec, const Poly& x,
                        const Poly& y) {
  const Chart ch = spec.bundle.pistar_chart();
  Poly xl = x.chart().same(ch) ? x : x.on_chart(ch);
  Poly yl = y.chart().same(ch) ? y : y.on_chart(ch);
  const std::size_t r = spec.bundle.rank();
  const std::size_t nb = spec.bundle.base.size();

  std::vector<int> eta(r);
  std::vector<Parity> sp(r);
  for (std::size_t a = 0; a < r; ++a) {
    eta[a] = ch.index(spec.bundle.fibres[a].eta_name);
    sp[a] = spec.bundle.fibres[a].section_parity;
  }
  auto lift = [&](const Poly& p) { return p.on_chart(ch); };

  Poly acc(ch);
  for (Parity xp : {Parity::Even, Parity::Odd}) {
    Poly X = xl.parity_part(xp);
    if (X.is_zero()) continue;
    // anchor terms
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t A = 0; A < nb; ++A) {
        if (spec.anchor[a][A].is_zero()) continue;
        Poly Qa = lift(spec.anchor[a][A]);
        const Parity pA = spec.bundle.base[A].parity;
        int s1 = parity_sign(xp + sp[a] + Parity::Odd, pA + Parity::Odd);
        int s2 = parity_sign(xp + Parity::Odd, sp[a]);
        acc += Rational(s1) * (Qa * X.partial(eta[a]) * yl.partial(int(A))) -
               Rational(s2) * (Qa * X.partial(int(A)) * yl.partial(eta[a]));
      }
    }
    // structure-constant term: -(-1)^((X+1)a+b) Q_{ab}^g eta_g dX/deta_b dY/deta_a
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t g = 0; g < r; ++g) {
          const Poly& Qab = spec.structure[a][b][g];
          if (Qab.is_zero()) continue;
          int s = parity_sign(xp + Parity::Odd, sp[a]) *
                  (sp[b] == Parity::Odd ? -1 : 1);
          acc -= Rational(s) * (lift(Qab) * Poly::variable(ch, eta[g]) *
                                X.partial(eta[b]) * yl.partial(eta[a]));
        }
    // the two Q_alpha terms
    for (std::size_t a = 0; a < r; ++a) {
      if (spec.cocycle[a].is_zero()) continue;
      Poly Qa = lift(spec.cocycle[a]);
      acc += Rational(xp == Parity::Odd ? -1 : 1) *
                 (Qa * X.partial(eta[a]) * yl) +
             X * Qa * yl.partial(eta[a]);
    }
  }
  return acc;
}

BracketReport verify_odd_jacobi(const OddJacobiStructure& j) {
  BracketReport report;
  report.add("{Q,Q}", poisson(j.Q, j.Q, j.phase));
  report.add("{Q,S}", poisson(j.Q, j.S, j.phase));
  report.add("{S,S}+2QS",
             poisson(j.S, j.S, j.phase) + Rational(2) * (j.Q * j.S));
  return report;
}

BracketReport verify_schouten(const Poly& s, const PhaseChart& pc) {
  if (!s.has_parity(Parity::Odd))
    throw ParityMismatch("verify_schouten: S must be odd");
  BracketReport report;
  report.add("{S,S}", poisson(s, s, pc));
  return report;
}

BracketReport verify_quasi_q(const Derivation& d, const Poly& q) {
  require_same_chart(d.chart(), q.chart(), "verify_quasi_q");
  if (!d.is_zero() && d.parity() != Parity::Odd)
    throw ParityMismatch("verify_quasi_q: D must be odd");
  if (!q.has_parity(Parity::Odd))
    throw ParityMismatch("verify_quasi_q: q must be odd");
  BracketReport report;
  Derivation half_dd = commutator(d, d);
  Derivation qd = q * d;
  bool ok = true;
  for (std::size_t v = 0; v < d.chart().size(); ++v) {
    Poly res = Rational(1, 2) * half_dd.coefficient(int(v)) - qd.coefficient(int(v));
    if (!res.is_zero()) {
      report.add("(1/2)[D,D]-qD @ d/d" + d.chart().var(int(v)).name, res);
      ok = false;
    }
  }
  if (ok) report.add("(1/2)[D,D]-qD", Poly(d.chart()));
  report.add("D[q]", d(q));
  return report;
}

BracketReport check_morphism(const Substitution& sigma,
                             const QuasiQStructure& source,
                             const QuasiQStructure& target) {
  require_same_chart(sigma.source(), target.chart, "check_morphism");
  require_same_chart(sigma.target(), source.chart, "check_morphism");
  BracketReport report;
  for (std::size_t v = 0; v < target.chart.size(); ++v) {
    Poly z = Poly::variable(target.chart, int(v));
    Poly res = source.D(sigma(z)) - sigma(target.D(z));
    report.add("D-related @ " + target.chart.var(int(v)).name, res);
  }
  report.add("curving: sigma(q) - q", sigma(target.q) - source.q);
  return report;
}

}  // namespace gca
