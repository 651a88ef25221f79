#ifndef GCA_BRACKETS_HPP
#define GCA_BRACKETS_HPP

#include <functional>
#include <string>
#include <vector>

#include "gca/phase.hpp"

namespace gca {

struct JacobiAlgebroidSpec;  // algebroids module

/// Pair (S, Q) of odd functions on T*(PiE*): S at most quadratic and Q
/// linear in the momenta. Validity (the three bracket conditions) is checked
/// by verify_odd_jacobi, never assumed.
struct OddJacobiStructure {
  PhaseChart phase;
  Poly S;
  Poly Q;
};

/// Per-condition verification outcome; the residual polynomial is zero
/// exactly when the condition passes.
struct BracketReport {
  struct Entry {
    std::string name;
    bool pass = false;
    Poly residual;
    std::string witness;  // inputs for axiom-grid failures
  };
  std::vector<Entry> entries;

  bool pass() const {
    for (auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  void add(std::string name, Poly residual, std::string witness = {}) {
    bool ok = residual.is_zero();
    entries.push_back({std::move(name), ok, std::move(residual), std::move(witness)});
  }
};

using BracketFn = std::function<Poly(const Poly&, const Poly&)>;

/// Checks the four epsilon-parameterized bracket axioms (grading,
/// skewsymmetry, Jacobi, Leibniz) exactly on all pairs/triples drawn from
/// the generator list. Leibniz is checked in the anomaly form
///   {a,bc} = {a,b}c + (-1)^((a+eps)b) b{a,c} - {a,1}bc,
/// which reduces to the strict rule whenever {a,1} = 0.
BracketReport check_axioms(const BracketFn& bracket, int epsilon,
                           const std::vector<Poly>& generators);

/// Derived odd Jacobi bracket
///   [[X,Y]] = (-1)^(X+1) {{S,X},Y} - (-1)^(X+1) {Q,XY}
/// on momentum-free X, Y; the result is asserted momentum-free.
Poly odd_jacobi_bracket(const OddJacobiStructure& j, const Poly& x,
                        const Poly& y);

/// Closed-form coordinate evaluation of the same bracket from the structure
/// functions; an independent oracle for odd_jacobi_bracket.
Poly coordinate_bracket(const JacobiAlgebroidSpec& spec, const Poly& x,
                        const Poly& y);

/// Residuals {Q,Q}, {Q,S}, {S,S}+2QS.
BracketReport verify_odd_jacobi(const OddJacobiStructure& j);

/// Pass iff {S,S} = 0.
BracketReport verify_schouten(const Poly& s, const PhaseChart& pc);

/// Residuals (1/2)[D,D] - qD (coefficientwise) and D(q).
BracketReport verify_quasi_q(const Derivation& d, const Poly& q);

/// Checks sigma(D_target f) = D_source(sigma f) on all target generators and
/// sigma(q_target) = q_source, for a pullback sigma: C(target) -> C(source).
struct QuasiQStructure;  // algebroids module
BracketReport check_morphism(const Substitution& sigma,
                             const QuasiQStructure& source,
                             const QuasiQStructure& target);

}  // namespace gca

#endif
