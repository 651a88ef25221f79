#include "gca/poly.hpp"

#include <algorithm>

namespace gca {

namespace {

// Merge two increasing odd-factor lists. Returns false when a factor repeats
// (the product vanishes); otherwise fills `out` and the Koszul sign, one -1
// per transposition of two odd factors.
bool merge_odd(const std::vector<int>& a, const std::vector<int>& b,
               std::vector<int>& out, int& sign) {
  out.clear();
  out.reserve(a.size() + b.size());
  sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining a.size()-i odd factors of a
      if ((a.size() - i) & 1) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + long(i), a.end());
  out.insert(out.end(), b.begin() + long(j), b.end());
  return true;
}

Monomial merge_even(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.even.reserve(a.even.size() + b.even.size());
  std::size_t i = 0, j = 0;
  while (i < a.even.size() && j < b.even.size()) {
    if (a.even[i].first == b.even[j].first) {
      int e = a.even[i].second + b.even[j].second;
      if (e != 0) r.even.emplace_back(a.even[i].first, e);
      ++i, ++j;
    } else if (a.even[i].first < b.even[j].first) {
      r.even.push_back(a.even[i++]);
    } else {
      r.even.push_back(b.even[j++]);
    }
  }
  r.even.insert(r.even.end(), a.even.begin() + long(i), a.even.end());
  r.even.insert(r.even.end(), b.even.begin() + long(j), b.even.end());
  return r;
}

}  // namespace

long long monomial_weight(const Chart& chart, const Monomial& m) {
  long long w = 0;
  for (auto& [v, e] : m.even) w += (long long)chart.var(v).weight * e;
  for (int v : m.odd) w += chart.var(v).weight;
  return w;
}

Poly Poly::constant(Chart chart, Rational value) {
  Poly p(std::move(chart));
  if (value != 0) p.terms_.emplace(Monomial{}, std::move(value));
  return p;
}

Poly Poly::variable(Chart chart, int index) {
  const Variable& v = chart.var(index);
  Monomial m;
  if (v.parity == Parity::Odd)
    m.odd.push_back(index);
  else
    m.even.emplace_back(index, 1);
  Poly p(std::move(chart));
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Poly Poly::variable(Chart chart, std::string_view name) {
  int i = chart.index(name);
  return variable(std::move(chart), i);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("constant_value: polynomial is not constant");
  return terms_.begin()->second;
}

void Poly::add_term(Monomial m, Rational c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(chart_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& rhs) const {
  if (chart_.size() == 0 && is_zero()) return rhs;
  if (rhs.chart_.size() == 0 && rhs.is_zero()) return *this;
  require_same_chart(chart_, rhs.chart_, "add");
  Poly r = *this;
  for (auto& [m, c] : rhs.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
  require_same_chart(chart_, rhs.chart_, "mul");
  Poly r(chart_);
  std::vector<int> odd;
  for (auto& [ma, ca] : terms_) {
    for (auto& [mb, cb] : rhs.terms_) {
      int sign = 1;
      if (!merge_odd(ma.odd, mb.odd, odd, sign)) continue;
      Monomial m = merge_even(ma, mb);
      m.odd = odd;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(std::move(m), std::move(c));
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(chart_);
  if (c == 0) return r;
  for (auto& [m, k] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

Poly Poly::pow(int exponent) const {
  if (exponent == 0) return constant(chart_, 1);
  if (exponent > 0) {
    Poly r = *this;
    for (int i = 1; i < exponent; ++i) r = r * *this;
    return r;
  }
  // Negative power: only a single-term even monomial in laurent generators
  // is invertible.
  if (terms_.size() != 1) throw Error("pow: negative power of a sum");
  const auto& [m, c] = *terms_.begin();
  if (!m.odd.empty()) throw Error("pow: negative power of an odd factor");
  for (auto& [v, e] : m.even)
    if (!chart_.var(v).laurent)
      throw Error("pow: negative power of non-invertible variable '" +
                  chart_.var(v).name + "'");
  Poly r(chart_);
  Monomial mi;
  for (auto& [v, e] : m.even) mi.even.emplace_back(v, e * exponent);
  Rational ci = 1;
  Rational inv = Rational(denominator(c), numerator(c));
  for (int i = 0; i < -exponent; ++i) ci *= inv;
  r.add_term(std::move(mi), std::move(ci));
  return r;
}

bool Poly::operator==(const Poly& rhs) const {
  if (is_zero() && rhs.is_zero()) return true;
  return chart_.same(rhs.chart_) && terms_ == rhs.terms_;
}

Poly Poly::derivative(int var, bool from_left) const {
  if (var < 0 || std::size_t(var) >= chart_.size())
    throw UnknownVariable("partial: variable index out of range");
  Poly r(chart_);
  const bool is_odd = chart_.var(var).parity == Parity::Odd;
  for (auto& [m, c] : terms_) {
    if (is_odd) {
      auto it = std::find(m.odd.begin(), m.odd.end(), var);
      if (it == m.odd.end()) continue;
      std::size_t pos = std::size_t(it - m.odd.begin());
      std::size_t passed = from_left ? pos : (m.odd.size() - 1 - pos);
      Monomial d = m;
      d.odd.erase(d.odd.begin() + long(pos));
      r.add_term(std::move(d), (passed & 1) ? -c : c);
    } else {
      auto it = std::find_if(m.even.begin(), m.even.end(),
                             [&](auto& p) { return p.first == var; });
      if (it == m.even.end()) continue;
      int e = it->second;
      Monomial d = m;
      auto dit = d.even.begin() + (it - m.even.begin());
      if (e == 1)
        d.even.erase(dit);
      else
        dit->second = e - 1;
      r.add_term(std::move(d), c * e);
    }
  }
  return r;
}

Poly Poly::partial(int var) const {
  Poly r = derivative(var, true);
  // Chain rule through generators declared as exp(-var).
  for (std::size_t v = 0; v < chart_.size(); ++v) {
    if (chart_.var(int(v)).exp_of == var)
      r -= variable(chart_, int(v)) * derivative(int(v), true);
  }
  return r;
}

Poly Poly::partial_right(int var) const {
  Poly r = derivative(var, false);
  for (std::size_t v = 0; v < chart_.size(); ++v) {
    if (chart_.var(int(v)).exp_of == var)
      r -= variable(chart_, int(v)) * derivative(int(v), false);
  }
  return r;
}

ParityInfo Poly::parity_of() const {
  if (terms_.empty()) return {ParityInfo::Zero, Parity::Even};
  Parity p = terms_.begin()->first.parity();
  for (auto& [m, c] : terms_)
    if (m.parity() != p) return {ParityInfo::Inhomogeneous, Parity::Even};
  return {ParityInfo::Homogeneous, p};
}

WeightInfo Poly::weight_of() const {
  if (terms_.empty()) return {WeightInfo::Zero, 0};
  long long w = monomial_weight(chart_, terms_.begin()->first);
  for (auto& [m, c] : terms_)
    if (monomial_weight(chart_, m) != w) return {WeightInfo::Inhomogeneous, 0};
  return {WeightInfo::Homogeneous, w};
}

bool Poly::has_parity(Parity p) const {
  auto info = parity_of();
  return info.kind == ParityInfo::Zero ||
         (info.kind == ParityInfo::Homogeneous && info.value == p);
}

bool Poly::has_weight(long long w) const {
  auto info = weight_of();
  return info.kind == WeightInfo::Zero ||
         (info.kind == WeightInfo::Homogeneous && info.value == w);
}

Poly Poly::parity_part(Parity p) const {
  Poly r(chart_);
  for (auto& [m, c] : terms_)
    if (m.parity() == p) r.terms_.emplace(m, c);
  return r;
}

bool Poly::depends_on(const std::vector<int>& vars) const {
  for (auto& [m, c] : terms_) {
    for (auto& [v, e] : m.even)
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) return true;
    for (int v : m.odd)
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) return true;
  }
  return false;
}

int Poly::degree_in(const std::vector<int>& vars) const {
  int deg = 0;
  for (auto& [m, c] : terms_) {
    int d = 0;
    for (auto& [v, e] : m.even)
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) d += std::abs(e);
    for (int v : m.odd)
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) d += 1;
    deg = std::max(deg, d);
  }
  return deg;
}

Poly Poly::on_chart(const Chart& target, bool check_weights) const {
  Poly r(target);
  for (auto& [m, c] : terms_) {
    Monomial t;
    for (auto& [v, e] : m.even) {
      const Variable& src = chart_.var(v);
      int w = target.index(src.name);
      const Variable& dst = target.var(w);
      if (dst.parity != src.parity)
        throw ParityMismatch("on_chart: parity of '" + src.name + "' differs");
      if (check_weights && dst.weight != src.weight)
        throw WeightMismatch("on_chart: weight of '" + src.name + "' differs");
      t.even.emplace_back(w, e);
    }
    for (int v : m.odd) {
      const Variable& src = chart_.var(v);
      int w = target.index(src.name);
      const Variable& dst = target.var(w);
      if (dst.parity != src.parity)
        throw ParityMismatch("on_chart: parity of '" + src.name + "' differs");
      if (check_weights && dst.weight != src.weight)
        throw WeightMismatch("on_chart: weight of '" + src.name + "' differs");
      t.odd.push_back(w);
    }
    std::sort(t.even.begin(), t.even.end());
    // Koszul sign for re-sorting the odd factors into target order.
    int sign = 1;
    for (std::size_t i = 0; i + 1 < t.odd.size(); ++i)
      for (std::size_t j = i + 1; j < t.odd.size(); ++j)
        if (t.odd[i] > t.odd[j]) sign = -sign;
    std::sort(t.odd.begin(), t.odd.end());
    r.add_term(std::move(t), sign > 0 ? c : -c);
  }
  return r;
}

}  // namespace gca
