#ifndef GCA_CHART_HPP
#define GCA_CHART_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gca {

enum class Parity : int { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return Parity(int(a) ^ int(b));
}
constexpr int sign_pow(int exponent) { return (exponent & 1) ? -1 : 1; }
constexpr int parity_sign(Parity a, Parity b) {
  return (int(a) & int(b)) ? -1 : 1;
}
inline const char* to_string(Parity p) {
  return p == Parity::Even ? "even" : "odd";
}

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChartMismatch : public Error {
 public:
  using Error::Error;
};
class ParityMismatch : public Error {
 public:
  using Error::Error;
};
class WeightMismatch : public Error {
 public:
  using Error::Error;
};
class UnknownVariable : public Error {
 public:
  using Error::Error;
};
/// A verified precondition on structure data failed (invalid input structure).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A coordinate symbol: Z2 parity plus an integer weight.
///
/// `laurent` marks generators that may carry negative exponents.
/// `exp_of >= 0` marks a generator that behaves as exp(-z) for the chart
/// variable with that index: differentiating by z picks up -1 times the
/// generator itself (chain rule). Used for the e^(-t) extension.
struct Variable {
  std::string name;
  Parity parity = Parity::Even;
  int weight = 0;
  bool laurent = false;
  int exp_of = -1;
};

/// An immutable ordered list of variables. The creation order fixes the
/// monomial normal form. Cheap to copy (shared state).
class Chart {
 public:
  Chart() : d_(empty_data()) {}
  explicit Chart(std::vector<Variable> vars);

  std::size_t size() const { return d_->vars.size(); }
  const Variable& var(int i) const { return d_->vars.at(std::size_t(i)); }
  const std::vector<Variable>& vars() const { return d_->vars; }

  std::optional<int> find(std::string_view name) const;
  /// Index of a named variable; throws UnknownVariable if absent.
  int index(std::string_view name) const;

  /// Content equality (same names, parities, weights, flags, same order).
  bool same(const Chart& other) const;
  bool identical(const Chart& other) const { return d_ == other.d_; }

  /// New chart with extra variables appended.
  Chart extended(const std::vector<Variable>& extra) const;

 private:
  struct Data {
    std::vector<Variable> vars;
    std::map<std::string, int, std::less<>> by_name;
  };
  static std::shared_ptr<const Data> empty_data();
  std::shared_ptr<const Data> d_;
};

inline void require_same_chart(const Chart& a, const Chart& b,
                               const char* where) {
  if (!a.same(b))
    throw ChartMismatch(std::string(where) + ": operands on different charts");
}

}  // namespace gca

#endif
