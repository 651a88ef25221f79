#ifndef GCA_RANDOM_HPP
#define GCA_RANDOM_HPP

#include <optional>
#include <random>

#include "gca/poly.hpp"

namespace gca {

/// Seeded generator of random polynomials, for property checks and the
/// `axioms` task. Deterministic for a fixed seed and call sequence.
class RandomPolyGen {
 public:
  RandomPolyGen(Chart chart, unsigned seed)
      : chart_(std::move(chart)), rng_(seed) {}

  std::mt19937& engine() { return rng_; }

  /// Random monomial of total degree <= max_degree (possibly constant).
  Poly monomial(int max_degree);
  /// Random polynomial with `terms` random monomials of degree <= max_degree.
  Poly poly(int terms, int max_degree);
  /// Random nonzero parity-homogeneous polynomial (falls back to a constant
  /// or single variable when the parity is hard to hit).
  Poly homogeneous(Parity parity, int terms, int max_degree);
  /// Small random rational with numerator/denominator in [-max, max].
  Rational rational(int max = 5);

 private:
  Chart chart_;
  std::mt19937 rng_;
};

}  // namespace gca

#endif
