#ifndef GCA_ALGEBROIDS_HPP
#define GCA_ALGEBROIDS_HPP

#include "gca/brackets.hpp"

namespace gca {

/// Structure functions of a Jacobi algebroid over a bundle: anchor
/// Q_alpha^A, bracket constants Q_{beta alpha}^gamma and cocycle part
/// Q_alpha, all polynomials in the base variables. The bracket constants
/// are stored graded-antisymmetrized in (beta, alpha); the constructor
/// projects arbitrary input onto that part, since nothing else survives in
/// (1/2) xi^alpha xi^beta Q_{beta alpha}^gamma.
struct JacobiAlgebroidSpec {
  BundleSpec bundle;
  Chart base_chart;
  std::vector<std::vector<Poly>> anchor;                  // [alpha][A]
  std::vector<std::vector<std::vector<Poly>>> structure;  // [beta][alpha][gamma]
  std::vector<Poly> cocycle;                              // [alpha]

  static JacobiAlgebroidSpec make(
      BundleSpec bundle, std::vector<std::vector<Poly>> anchor,
      std::vector<std::vector<std::vector<Poly>>> structure,
      std::vector<Poly> cocycle);
};

/// Odd vector field D and odd curving function q on the PiE chart
/// (w-bar grading). Weight-one instances satisfy [E,D] = D and E(q) = q.
struct QuasiQStructure {
  Chart chart;
  Derivation D;
  Poly q;
};

/// Homological field Q with an odd weight-one closed cocycle phi.
struct LieAlgebroidWithCocycle {
  Chart chart;
  Derivation Q;
  Poly phi;
};

/// S = (-1)^a pi^a Q_a^A p_A + (1/2)(-1)^(a+b) pi^a pi^b Q_{ba}^g eta_g,
/// Q = pi^a Q_a, on T*(PiE*). Validity is not implied.
OddJacobiStructure build_structure(const JacobiAlgebroidSpec& spec);

/// Moves (S, Q) to T*(PiE) along R^{-1} and undoes the symbol map:
/// D from S-hat, q = -Q-hat. Verifies that the odd Jacobi conditions and
/// the quasi-Q conditions agree (both computed); throws on shape violations.
QuasiQStructure transport(const OddJacobiStructure& j, const BundleSpec& b);

/// Proposition-1 split Q = D - qE, phi = q; asserts Q^2 = 0 and Q(phi) = 0.
LieAlgebroidWithCocycle cocycle_split(const QuasiQStructure& s);

/// Proposition-2 merge D = Q + phi E, q = phi; asserts the quasi-Q
/// conditions.
QuasiQStructure cocycle_merge(const LieAlgebroidWithCocycle& l);

/// The replacement of the bracket constants realized by the split,
///   Q_{ba}^g -> Q_{ba}^g - (-1)^(a+b)(delta_a^g Q_b
///               + (-1)^((a+1)(b+1)) Q_a delta_b^g),
/// with the cocycle zeroed. Used as the closed-form cross-check against
/// cocycle_split.
JacobiAlgebroidSpec replace_structure_constants(const JacobiAlgebroidSpec& spec);

/// Dual Schouten structure of the split Lie algebroid, on T*(PiE*):
/// returns (S-bar, phi-bar) and asserts {S-bar,S-bar} = 0, {S-bar,phi-bar} = 0.
std::pair<Poly, Poly> dual_schouten(const JacobiAlgebroidSpec& spec);

/// T*(PiE* x R) phase chart extended by (t, p_t) and the invertible
/// generator u = e^(-t), plus the structure moved onto it.
struct Schoutenisation {
  PhaseChart phase;
  Poly Sbar;  // u (S - Q p_t)
  Poly S;     // S on the extended chart
  Poly Q;     // Q on the extended chart
  Poly u;
  Poly p_t;
};
Schoutenisation schoutenise(const OddJacobiStructure& j, const BundleSpec& b);

/// Lie algebra with a character as a Jacobi algebroid over a point.
JacobiAlgebroidSpec lie_algebra_jacobi(
    const std::vector<Parity>& section_parities,
    const std::vector<std::vector<std::vector<Rational>>>& constants,
    const std::vector<Rational>& cocycle);

/// Extends a plain Lie algebroid spec (zero cocycle) by an odd fibre
/// direction tau: S gains the p_tau pi^a eta_a term and Q becomes -p_tau.
JacobiAlgebroidSpec extend_r01(const JacobiAlgebroidSpec& spec);

/// Quasi-Q structure of a flat Abelian connection on PiTM: D = d + A E,
/// q = A = d<x>^B A_B, over the given base chart (fibres named d<base name>).
/// A_B are polynomials in the base variables; the one-form must be odd.
QuasiQStructure flat_connection_quasi_q(const Chart& base,
                                        const std::vector<Poly>& components);

/// The odd contact example: PiT*N x R^(0|1) over an n-dimensional classical
/// base, with its weight minus one structure and the transported quasi-Q
/// pair.
struct OddContact {
  JacobiAlgebroidSpec spec;
  OddJacobiStructure jacobi;
  QuasiQStructure quasi;
};
OddContact odd_contact(int n);

}  // namespace gca

#endif
