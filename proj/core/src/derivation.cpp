#include "gca/derivation.hpp"

namespace gca {

Derivation::Derivation(Chart chart, Parity parity,
                       std::map<int, Poly> coefficients)
    : chart_(std::move(chart)), parity_(parity) {
  for (auto& [v, c] : coefficients) {
    if (v < 0 || std::size_t(v) >= chart_.size())
      throw UnknownVariable("derivation: bad variable index");
    if (c.is_zero()) continue;
    require_same_chart(c.chart(), chart_, "derivation coefficient");
    if (!c.has_parity(parity_ + chart_.var(v).parity))
      throw ParityMismatch("derivation: coefficient of d/d" +
                           chart_.var(v).name + " has wrong parity");
    coeffs_.emplace(v, std::move(c));
  }
}

Poly Derivation::coefficient(int var) const {
  auto it = coeffs_.find(var);
  if (it != coeffs_.end()) return it->second;
  return Poly(chart_);
}

Poly Derivation::operator()(const Poly& f) const {
  require_same_chart(f.chart(), chart_, "derivation apply");
  Poly r(chart_);
  for (auto& [v, c] : coeffs_) r += c * f.partial(v);
  return r;
}

Derivation Derivation::operator+(const Derivation& rhs) const {
  require_same_chart(chart_, rhs.chart_, "derivation add");
  if (!coeffs_.empty() && !rhs.coeffs_.empty() && parity_ != rhs.parity_)
    throw ParityMismatch("derivation add: mixed parities");
  std::map<int, Poly> coeffs = coeffs_;
  for (auto& [v, c] : rhs.coeffs_) {
    auto it = coeffs.find(v);
    if (it == coeffs.end())
      coeffs.emplace(v, c);
    else
      it->second += c;
  }
  return Derivation(chart_, coeffs_.empty() ? rhs.parity_ : parity_,
                    std::move(coeffs));
}

Derivation Derivation::operator-() const {
  std::map<int, Poly> coeffs;
  for (auto& [v, c] : coeffs_) coeffs.emplace(v, -c);
  return Derivation(chart_, parity_, std::move(coeffs));
}

Derivation Derivation::operator-(const Derivation& rhs) const {
  return *this + (-rhs);
}

Derivation operator*(const Poly& f, const Derivation& d) {
  auto info = f.parity_of();
  if (info.kind == ParityInfo::Inhomogeneous)
    throw ParityMismatch("poly * derivation: inhomogeneous function");
  std::map<int, Poly> coeffs;
  for (auto& [v, c] : d.coeffs_) coeffs.emplace(v, f * c);
  return Derivation(d.chart_, d.parity_ + info.value, std::move(coeffs));
}

bool Derivation::operator==(const Derivation& rhs) const {
  if (!chart_.same(rhs.chart_)) return false;
  if (!coeffs_.empty() && !rhs.coeffs_.empty() && parity_ != rhs.parity_)
    return false;
  return coeffs_ == rhs.coeffs_;
}

Derivation Derivation::on_chart(const Chart& target, bool check_weights) const {
  std::map<int, Poly> coeffs;
  for (auto& [v, c] : coeffs_) {
    int w = target.index(chart_.var(v).name);
    coeffs.emplace(w, c.on_chart(target, check_weights));
  }
  return Derivation(target, parity_, std::move(coeffs));
}

Derivation commutator(const Derivation& d1, const Derivation& d2) {
  require_same_chart(d1.chart(), d2.chart(), "commutator");
  const Chart& chart = d1.chart();
  const int eps = parity_sign(d1.parity(), d2.parity());
  std::map<int, Poly> coeffs;
  for (std::size_t v = 0; v < chart.size(); ++v) {
    Poly z = Poly::variable(chart, int(v));
    Poly c = d1(d2(z)) - Rational(eps) * d2(d1(z));
    if (!c.is_zero()) coeffs.emplace(int(v), std::move(c));
  }
  Derivation result(chart, d1.parity() + d2.parity(), std::move(coeffs));
  // The composition difference is first order; confirm the cancellation on
  // all quadratic words and flag an internal error if it ever fails.
  for (std::size_t a = 0; a < chart.size(); ++a) {
    for (std::size_t b = a; b < chart.size(); ++b) {
      Poly za = Poly::variable(chart, int(a));
      Poly zb = Poly::variable(chart, int(b));
      Poly w = za * zb;
      if (w.is_zero()) continue;
      Poly direct = d1(d2(w)) - Rational(eps) * d2(d1(w));
      if (direct != result(w))
        throw Error("commutator: second-order terms failed to cancel");
    }
  }
  return result;
}

Derivation euler_field(const Chart& chart) {
  std::map<int, Poly> coeffs;
  for (std::size_t v = 0; v < chart.size(); ++v) {
    int w = chart.var(int(v)).weight;
    if (w == 0) continue;
    coeffs.emplace(int(v), Rational(w) * Poly::variable(chart, int(v)));
  }
  return Derivation(chart, Parity::Even, std::move(coeffs));
}

}  // namespace gca
