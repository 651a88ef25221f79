#ifndef GCA_DERIVATION_HPP
#define GCA_DERIVATION_HPP

#include <map>

#include "gca/poly.hpp"

namespace gca {

/// A graded derivation (vector field) on a chart: one polynomial coefficient
/// per variable, applied through the left derivative, plus an overall parity.
/// For each nonzero coefficient c_z: parity(c_z) + parity(z) = parity(D).
class Derivation {
 public:
  Derivation() = default;
  Derivation(Chart chart, Parity parity, std::map<int, Poly> coefficients);

  const Chart& chart() const { return chart_; }
  Parity parity() const { return parity_; }
  const std::map<int, Poly>& coefficients() const { return coeffs_; }
  Poly coefficient(int var) const;
  bool is_zero() const { return coeffs_.empty(); }

  Poly operator()(const Poly& f) const;

  Derivation operator+(const Derivation& rhs) const;
  Derivation operator-(const Derivation& rhs) const;
  Derivation operator-() const;
  /// Left multiplication by a parity-homogeneous function: (f*D)(g) = f*D(g).
  friend Derivation operator*(const Poly& f, const Derivation& d);

  bool operator==(const Derivation& rhs) const;
  bool operator!=(const Derivation& rhs) const { return !(*this == rhs); }

  /// Re-express over a chart containing the same variable names.
  Derivation on_chart(const Chart& target, bool check_weights = true) const;

 private:
  Chart chart_;
  Parity parity_ = Parity::Even;
  std::map<int, Poly> coeffs_;  // nonzero only
};

/// Graded commutator [D1,D2] = D1 D2 - (-1)^(p1 p2) D2 D1, returned as a
/// derivation. Verifies on all variable pairs that the second-order parts of
/// the composition difference actually cancel.
Derivation commutator(const Derivation& d1, const Derivation& d2);

/// E = sum w(z) z d/dz; counts the weight of homogeneous functions.
Derivation euler_field(const Chart& chart);

}  // namespace gca

#endif
