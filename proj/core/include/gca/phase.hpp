#ifndef GCA_PHASE_HPP
#define GCA_PHASE_HPP

#include <utility>
#include <vector>

#include "gca/derivation.hpp"
#include "gca/substitution.hpp"

namespace gca {

/// A chart together with its position/momentum pairing. Each position z is
/// paired with a conjugate p_z of the same parity and negated weight.
/// Variables outside the pairing (the exp(-t) generator) carry no conjugate.
class PhaseChart {
 public:
  PhaseChart() = default;
  PhaseChart(Chart chart, std::vector<std::pair<int, int>> pairs);

  const Chart& chart() const { return chart_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const std::vector<int>& momenta() const { return momenta_; }

  bool is_momentum(int var) const;
  bool momentum_free(const Poly& f) const { return !f.depends_on(momenta_); }
  int momentum_degree(const Poly& f) const { return f.degree_in(momenta_); }

  bool same(const PhaseChart& other) const;

 private:
  Chart chart_;
  std::vector<std::pair<int, int>> pairs_;  // (position, momentum)
  std::vector<int> momenta_;
};

/// Doubles a chart with conjugate momenta named `p_<name>`, of equal parity
/// and negated weight.
PhaseChart cotangent(const Chart& base);

/// Canonical Poisson bracket summed over all conjugate pairs, with left
/// derivatives:
///   {F,G} = sum_A (-1)^(A(F+1)) dF/dp_A dG/dx^A - (-1)^(AF) dF/dx^A dG/dp_A.
/// Inhomogeneous F is split by parity and recombined linearly.
Poly poisson(const Poly& f, const Poly& g, const PhaseChart& pc);

/// Symbol of a vector field plus auxiliary function: sum c_z p_z - f0, with
/// the momentum placed to the right of its coefficient.
Poly symbol(const Derivation& d, const Poly& f0, const PhaseChart& pc);

/// Inverse of `symbol` on momentum-linear input: returns the vector field
/// and the curving function q = -(momentum-free part). Throws on
/// momentum-quadratic input.
std::pair<Derivation, Poly> desymbol(const Poly& f, const PhaseChart& pc);

/// Description of a vector bundle E -> M: weight-zero base coordinates and
/// fibre directions given by the parity of the corresponding section e^alpha.
/// Generated variable names are fixed: base as given (x1..xn by convention),
/// PiE* fibres eta1.., PiE fibres xi1.., momenta prefixed p_.
struct BundleSpec {
  struct Fibre {
    Parity section_parity = Parity::Even;
    std::string eta_name;  // name on the PiE* side
    std::string xi_name;   // name on the PiE side
  };

  std::vector<Variable> base;  // parities as given; weights forced to 0
  std::vector<Fibre> fibres;

  static BundleSpec make(std::vector<std::pair<std::string, Parity>> base_vars,
                         std::vector<Parity> fibre_parities);

  std::size_t rank() const { return fibres.size(); }

  /// PiE* chart: base (w=0) then eta_alpha (parity e_alpha+1, w=+1).
  Chart pistar_chart() const;
  /// PiE chart in the w-bar grading: base (w=0) then xi^alpha (w-bar=+1).
  Chart pie_chart() const;
  PhaseChart pistar_phase() const { return cotangent(pistar_chart()); }
  PhaseChart pie_phase() const { return cotangent(pie_chart()); }
};

/// Pullback R* along the canonical double vector bundle morphism
/// R: T*(PiE*) -> T*(PiE): functions on T*(PiE) become functions on
/// T*(PiE*) via pi_alpha -> eta_alpha, xi^alpha -> (-1)^alpha pi^alpha,
/// fixing x and p. Weight-compatible through the w-bar = -w flip.
Substitution dvb_morphism(const BundleSpec& b);

/// Pullback along R^{-1}: functions on T*(PiE*) become functions on T*(PiE).
Substitution dvb_morphism_inverse(const BundleSpec& b);

enum class BundleSide { PiStar, Pi };

/// Cotangent lift of a bundle automorphism: fibre frame change T (with its
/// two-sided inverse) over a base change supplied with its polynomial
/// inverse. Returns the substitution expressing the barred coordinates in
/// the unbarred ones, including the momentum correction terms.
///
/// T and Tinv are rank x rank matrices of polynomials in the base variables;
/// entry T[b][a] is T_b^a (row = lower index). base_change/base_inverse map
/// base variable index -> polynomial in base variables; empty means identity.
Substitution frame_change(const BundleSpec& b,
                          const std::vector<std::vector<Poly>>& T,
                          const std::vector<std::vector<Poly>>& Tinv,
                          BundleSide side,
                          const std::map<int, Poly>& base_change = {},
                          const std::map<int, Poly>& base_inverse = {});

}  // namespace gca

#endif
