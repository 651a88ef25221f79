#ifndef GCA_POLY_HPP
#define GCA_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gca/chart.hpp"

namespace gca {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Normal-form word: even variables as sparse (index, exponent) pairs in
/// chart order, odd variables as a strictly increasing index list. Odd
/// squares vanish, so odd exponents are implicit.
struct Monomial {
  std::vector<std::pair<int, int>> even;  // exponent != 0; < 0 only for laurent
  std::vector<int> odd;                   // strictly increasing

  Parity parity() const { return Parity(int(odd.size()) & 1); }
  bool is_one() const { return even.empty() && odd.empty(); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct ParityInfo {
  enum Kind { Homogeneous, Inhomogeneous, Zero } kind = Zero;
  Parity value = Parity::Even;  // meaningful iff Homogeneous
};
struct WeightInfo {
  enum Kind { Homogeneous, Inhomogeneous, Zero } kind = Zero;
  long long value = 0;  // meaningful iff Homogeneous
};

/// Sparse supercommutative polynomial over a chart, with exact rational
/// coefficients. All operations are pure; values are immutable in practice.
class Poly {
 public:
  Poly() = default;  // zero on the empty chart
  explicit Poly(Chart chart) : chart_(std::move(chart)) {}

  static Poly constant(Chart chart, Rational value);
  static Poly variable(Chart chart, int index);
  static Poly variable(Chart chart, std::string_view name);

  const Chart& chart() const { return chart_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  Poly operator-() const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
  Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
  Poly scaled(const Rational& c) const;
  friend Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

  /// Integer power. Negative exponents are only defined when the base is a
  /// single invertible (laurent) generator.
  Poly pow(int exponent) const;

  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  /// Left derivative with respect to a chart variable. Follows exp-linked
  /// generators through the chain rule.
  Poly partial(int var) const;
  Poly partial(std::string_view name) const { return partial(chart_.index(name)); }
  /// Right derivative (odd sign counted from the right).
  Poly partial_right(int var) const;

  ParityInfo parity_of() const;
  WeightInfo weight_of() const;
  bool has_parity(Parity p) const;
  bool has_weight(long long w) const;

  /// Terms of the requested parity.
  Poly parity_part(Parity p) const;

  /// True if any of the given variables occurs.
  bool depends_on(const std::vector<int>& vars) const;
  int degree_in(const std::vector<int>& vars) const;  // max total degree, 0 for zero poly

  /// Re-express on another chart, mapping variables by name. Every occurring
  /// variable must exist in the target with the same parity; weights must
  /// match unless `check_weights` is false.
  Poly on_chart(const Chart& target, bool check_weights = true) const;

 private:
  void add_term(Monomial m, Rational c);
  Poly derivative(int var, bool from_left) const;

  Chart chart_;
  std::map<Monomial, Rational> terms_;
};

long long monomial_weight(const Chart& chart, const Monomial& m);

}  // namespace gca

#endif
