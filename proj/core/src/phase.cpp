#include "gca/phase.hpp"

#include <algorithm>

namespace gca {

PhaseChart::PhaseChart(Chart chart, std::vector<std::pair<int, int>> pairs)
    : chart_(std::move(chart)), pairs_(std::move(pairs)) {
  for (auto& [z, p] : pairs_) {
    const Variable& pos = chart_.var(z);
    const Variable& mom = chart_.var(p);
    if (pos.parity != mom.parity)
      throw ParityMismatch("phase chart: conjugate pair parity mismatch for '" +
                           pos.name + "'");
    if (pos.weight != -mom.weight)
      throw WeightMismatch("phase chart: conjugate pair weight mismatch for '" +
                           pos.name + "'");
    momenta_.push_back(p);
  }
  std::sort(momenta_.begin(), momenta_.end());
}

bool PhaseChart::is_momentum(int var) const {
  return std::binary_search(momenta_.begin(), momenta_.end(), var);
}

bool PhaseChart::same(const PhaseChart& other) const {
  return chart_.same(other.chart_) && pairs_ == other.pairs_;
}

PhaseChart cotangent(const Chart& base) {
  std::vector<Variable> vars = base.vars();
  std::vector<std::pair<int, int>> pairs;
  const int n = int(base.size());
  for (int i = 0; i < n; ++i) {
    const Variable& v = base.var(i);
    vars.push_back(Variable{"p_" + v.name, v.parity, -v.weight});
    pairs.emplace_back(i, n + i);
  }
  return PhaseChart(Chart(std::move(vars)), std::move(pairs));
}

namespace {

Poly poisson_homogeneous(const Poly& f, Parity fp, const Poly& g,
                         const PhaseChart& pc) {
  const Chart& ch = f.chart();
  Poly acc(ch);
  for (auto& [z, p] : pc.pairs()) {
    const Parity a = ch.var(z).parity;
    const int s1 = parity_sign(a, fp + Parity::Odd);  // (-1)^(A(F+1))
    const int s2 = parity_sign(a, fp);                // (-1)^(AF)
    acc += Rational(s1) * (f.partial(p) * g.partial(z)) -
           Rational(s2) * (f.partial(z) * g.partial(p));
  }
  return acc;
}

}  // namespace

Poly poisson(const Poly& f, const Poly& g, const PhaseChart& pc) {
  require_same_chart(f.chart(), pc.chart(), "poisson");
  require_same_chart(g.chart(), pc.chart(), "poisson");
  Poly acc(pc.chart());
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Poly part = f.parity_part(p);
    if (part.is_zero()) continue;
    acc += poisson_homogeneous(part, p, g, pc);
  }
  return acc;
}

Poly symbol(const Derivation& d, const Poly& f0, const PhaseChart& pc) {
  Derivation lifted =
      d.chart().same(pc.chart()) ? d : d.on_chart(pc.chart(), false);
  Poly f0l = f0.chart().same(pc.chart()) ? f0 : f0.on_chart(pc.chart(), false);
  Poly acc(pc.chart());
  for (auto& [v, c] : lifted.coefficients()) {
    int momentum = -1;
    for (auto& [z, p] : pc.pairs())
      if (z == v) momentum = p;
    if (momentum < 0)
      throw Error("symbol: no conjugate momentum for '" +
                  pc.chart().var(v).name + "'");
    acc += c * Poly::variable(pc.chart(), momentum);
  }
  return acc - f0l;
}

std::pair<Derivation, Poly> desymbol(const Poly& f, const PhaseChart& pc) {
  require_same_chart(f.chart(), pc.chart(), "desymbol");
  std::map<int, Poly> coeffs;
  Poly reconstructed(pc.chart());
  for (auto& [z, p] : pc.pairs()) {
    Poly c = f.partial_right(p);
    if (c.is_zero()) continue;
    if (!pc.momentum_free(c))
      throw Error("desymbol: input is not linear in momenta");
    reconstructed += c * Poly::variable(pc.chart(), p);
    coeffs.emplace(z, std::move(c));
  }
  Poly g = f - reconstructed;
  if (!pc.momentum_free(g))
    throw Error("desymbol: input is not linear in momenta");
  auto fp = f.parity_of();
  Parity dp = fp.kind == ParityInfo::Homogeneous ? fp.value : Parity::Odd;
  return {Derivation(pc.chart(), dp, std::move(coeffs)), -g};
}

BundleSpec BundleSpec::make(
    std::vector<std::pair<std::string, Parity>> base_vars,
    std::vector<Parity> fibre_parities) {
  BundleSpec b;
  for (auto& [name, parity] : base_vars)
    b.base.push_back(Variable{name, parity, 0});
  for (std::size_t i = 0; i < fibre_parities.size(); ++i) {
    Fibre f;
    f.section_parity = fibre_parities[i];
    f.eta_name = "eta" + std::to_string(i + 1);
    f.xi_name = "xi" + std::to_string(i + 1);
    b.fibres.push_back(std::move(f));
  }
  return b;
}

Chart BundleSpec::pistar_chart() const {
  std::vector<Variable> vars = base;
  for (auto& v : vars) v.weight = 0;
  for (auto& f : fibres)
    vars.push_back(Variable{f.eta_name, f.section_parity + Parity::Odd, +1});
  return Chart(std::move(vars));
}

Chart BundleSpec::pie_chart() const {
  std::vector<Variable> vars = base;
  for (auto& v : vars) v.weight = 0;
  for (auto& f : fibres)
    vars.push_back(Variable{f.xi_name, f.section_parity + Parity::Odd, +1});
  return Chart(std::move(vars));
}

Substitution dvb_morphism(const BundleSpec& b) {
  PhaseChart src = b.pie_phase();
  PhaseChart dst = b.pistar_phase();
  const Chart& s = src.chart();
  const Chart& t = dst.chart();
  std::map<int, Poly> images;
  for (auto& f : b.fibres) {
    int xi = s.index(f.xi_name);
    int pxi = s.index("p_" + f.xi_name);
    int eta = t.index(f.eta_name);
    int peta = t.index("p_" + f.eta_name);
    const int sign = f.section_parity == Parity::Odd ? -1 : 1;
    images.emplace(xi, Rational(sign) * Poly::variable(t, peta));
    images.emplace(pxi, Poly::variable(t, eta));
  }
  return Substitution(s, t, std::move(images), true, -1);
}

Substitution dvb_morphism_inverse(const BundleSpec& b) {
  PhaseChart src = b.pistar_phase();
  PhaseChart dst = b.pie_phase();
  const Chart& s = src.chart();
  const Chart& t = dst.chart();
  std::map<int, Poly> images;
  for (auto& f : b.fibres) {
    int eta = s.index(f.eta_name);
    int peta = s.index("p_" + f.eta_name);
    int xi = t.index(f.xi_name);
    int pxi = t.index("p_" + f.xi_name);
    const int sign = f.section_parity == Parity::Odd ? -1 : 1;
    images.emplace(eta, Poly::variable(t, pxi));
    images.emplace(peta, Rational(sign) * Poly::variable(t, xi));
  }
  return Substitution(s, t, std::move(images), true, -1);
}

namespace {

// d f / d xbar^A of a base function written in unbarred coordinates:
// re-express through the inverse base map, differentiate, map back.
struct BaseDifferential {
  const Chart& chart;
  std::map<int, Poly> fwd;  // xbar(x)
  std::map<int, Poly> inv;  // x(xbar)

  Poly operator()(const Poly& f, int a) const {
    if (fwd.empty()) return f.partial(a);
    Substitution to_bar(chart, chart, inv, true, 1);
    Substitution from_bar(chart, chart, fwd, true, 1);
    return from_bar(to_bar(f).partial(a));
  }
};

}  // namespace

Substitution frame_change(const BundleSpec& b,
                          const std::vector<std::vector<Poly>>& T,
                          const std::vector<std::vector<Poly>>& Tinv,
                          BundleSide side, const std::map<int, Poly>& base_change,
                          const std::map<int, Poly>& base_inverse) {
  const std::size_t r = b.rank();
  if (T.size() != r || Tinv.size() != r)
    throw Error("frame_change: matrix rank mismatch");
  PhaseChart pc = side == BundleSide::PiStar ? b.pistar_phase() : b.pie_phase();
  const Chart& ch = pc.chart();

  auto lift = [&](const Poly& p) {
    return p.chart().same(ch) ? p : p.on_chart(ch, true);
  };
  std::vector<std::vector<Poly>> t(r), tinv(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (T[i].size() != r || Tinv[i].size() != r)
      throw Error("frame_change: matrix rank mismatch");
    for (std::size_t j = 0; j < r; ++j) {
      Poly tij = lift(T[i][j]);
      Poly iij = lift(Tinv[i][j]);
      Parity expected = b.fibres[i].section_parity + b.fibres[j].section_parity;
      if (!tij.has_parity(expected) || !iij.has_parity(expected))
        throw ParityMismatch("frame_change: matrix entry parity mismatch");
      t[i].push_back(std::move(tij));
      tinv[i].push_back(std::move(iij));
    }
  }
  // Two-sided inverse check: T_b^g (T^-1)_g^a = delta and the other order.
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Poly lhs(ch), rhs(ch);
      for (std::size_t k = 0; k < r; ++k) {
        lhs += t[i][k] * tinv[k][j];
        rhs += tinv[i][k] * t[k][j];
      }
      Poly expect = Poly::constant(ch, i == j ? 1 : 0);
      if (lhs != expect || rhs != expect)
        throw StructureError("frame_change: T and Tinv are not inverse");
    }
  }

  std::map<int, Poly> fwd, inv;
  for (auto& [v, p] : base_change) fwd.emplace(v, lift(p));
  for (auto& [v, p] : base_inverse) inv.emplace(v, lift(p));
  if (fwd.empty() != inv.empty())
    throw Error("frame_change: base change requires its inverse");
  const std::size_t nb = b.base.size();
  if (!fwd.empty()) {
    Substitution sf(ch, ch, fwd, true, 1), si(ch, ch, inv, true, 1);
    for (std::size_t a = 0; a < nb; ++a) {
      Poly xa = Poly::variable(ch, int(a));
      if (sf(si(xa)) != xa || si(sf(xa)) != xa)
        throw StructureError("frame_change: base change inverse is wrong");
    }
  }
  BaseDifferential dbar{ch, fwd, inv};

  std::map<int, Poly> images;
  for (auto& [v, p] : fwd) images.emplace(v, p);

  auto var = [&](const std::string& name) {
    return Poly::variable(ch, ch.index(name));
  };

  for (std::size_t al = 0; al < r; ++al) {
    const Parity ea = b.fibres[al].section_parity;
    if (side == BundleSide::PiStar) {
      // eta_bar_a = (T^-1)_a^b eta_b ;  pi_bar^a = (-1)^(a+b) pi^b T_b^a
      Poly eta_bar(ch), pi_bar(ch);
      for (std::size_t be = 0; be < r; ++be) {
        const Parity eb = b.fibres[be].section_parity;
        eta_bar += tinv[al][be] * var(b.fibres[be].eta_name);
        pi_bar += Rational(ea + eb == Parity::Odd ? -1 : 1) *
                  (var("p_" + b.fibres[be].eta_name) * t[be][al]);
      }
      images.emplace(ch.index(b.fibres[al].eta_name), std::move(eta_bar));
      images.emplace(ch.index("p_" + b.fibres[al].eta_name), std::move(pi_bar));
    } else {
      // xi_bar^a = xi^b T_b^a ;  pi_bar_a = (T^-1)_a^b pi_b
      Poly xi_bar(ch), pi_bar(ch);
      for (std::size_t be = 0; be < r; ++be) {
        xi_bar += var(b.fibres[be].xi_name) * t[be][al];
        pi_bar += tinv[al][be] * var("p_" + b.fibres[be].xi_name);
      }
      images.emplace(ch.index(b.fibres[al].xi_name), std::move(xi_bar));
      images.emplace(ch.index("p_" + b.fibres[al].xi_name), std::move(pi_bar));
    }
  }

  for (std::size_t a = 0; a < nb; ++a) {
    const Parity pa = b.base[a].parity;
    Poly p_bar(ch);
    for (std::size_t bb = 0; bb < nb; ++bb)
      p_bar += dbar(Poly::variable(ch, int(bb)), int(a)) *
               var("p_" + b.base[bb].name);
    for (std::size_t de = 0; de < r; ++de) {
      for (std::size_t ga = 0; ga < r; ++ga) {
        for (std::size_t al = 0; al < r; ++al) {
          const Parity eg = b.fibres[ga].section_parity;
          const Parity ed = b.fibres[de].section_parity;
          if (side == BundleSide::PiStar) {
            int s = parity_sign(pa, eg + Parity::Odd) *
                    (ed == Parity::Odd ? -1 : 1);
            p_bar += Rational(s) * (var("p_" + b.fibres[de].eta_name) *
                                    t[de][ga] * dbar(tinv[ga][al], int(a)) *
                                    var(b.fibres[al].eta_name));
          } else {
            int s = parity_sign(pa, eg + Parity::Odd);
            p_bar += Rational(s) * (var(b.fibres[de].xi_name) * t[de][ga] *
                                    dbar(tinv[ga][al], int(a)) *
                                    var("p_" + b.fibres[al].xi_name));
          }
        }
      }
    }
    images.emplace(ch.index("p_" + b.base[a].name), std::move(p_bar));
  }

  return Substitution(ch, ch, std::move(images), true, 1);
}

}  // namespace gca
