#include "gca/random.hpp"

namespace gca {

Rational RandomPolyGen::rational(int max) {
  std::uniform_int_distribution<int> num(-max, max);
  std::uniform_int_distribution<int> den(1, max);
  Rational r(num(rng_), den(rng_));
  return r == 0 ? Rational(1) : r;
}

Poly RandomPolyGen::monomial(int max_degree) {
  if (chart_.size() == 0) return Poly::constant(chart_, 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> pick(0, int(chart_.size()) - 1);
  Poly m = Poly::constant(chart_, 1);
  const int d = deg(rng_);
  for (int i = 0; i < d; ++i) {
    Poly factor = Poly::variable(chart_, pick(rng_));
    if ((m * factor).is_zero()) continue;  // odd square, try to keep degree
    m *= factor;
  }
  return m;
}

Poly RandomPolyGen::poly(int terms, int max_degree) {
  Poly acc(chart_);
  for (int i = 0; i < terms; ++i) acc += rational() * monomial(max_degree);
  return acc;
}

Poly RandomPolyGen::homogeneous(Parity parity, int terms, int max_degree) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Poly p = poly(terms, max_degree).parity_part(parity);
    if (!p.is_zero()) return p;
  }
  if (parity == Parity::Even) return Poly::constant(chart_, 1);
  for (std::size_t v = 0; v < chart_.size(); ++v)
    if (chart_.var(int(v)).parity == Parity::Odd)
      return Poly::variable(chart_, int(v));
  throw Error("random homogeneous: chart has no odd variable");
}

}  // namespace gca
