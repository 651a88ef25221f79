#include "gca/chart.hpp"

namespace gca {

std::shared_ptr<const Chart::Data> Chart::empty_data() {
  static const auto d = std::make_shared<const Data>();
  return d;
}

Chart::Chart(std::vector<Variable> vars) {
  auto d = std::make_shared<Data>();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Variable& v = vars[i];
    if (v.name.empty()) throw Error("chart: empty variable name");
    if (!d->by_name.emplace(v.name, int(i)).second)
      throw Error("chart: duplicate variable name '" + v.name + "'");
    if (v.exp_of >= 0 && std::size_t(v.exp_of) >= vars.size())
      throw Error("chart: exp_of index out of range for '" + v.name + "'");
  }
  d->vars = std::move(vars);
  d_ = std::move(d);
}

std::optional<int> Chart::find(std::string_view name) const {
  auto it = d_->by_name.find(name);
  if (it == d_->by_name.end()) return std::nullopt;
  return it->second;
}

int Chart::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw UnknownVariable("unknown variable '" + std::string(name) + "'");
  return *i;
}

bool Chart::same(const Chart& other) const {
  if (identical(other)) return true;
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    const Variable& a = d_->vars[i];
    const Variable& b = other.d_->vars[i];
    if (a.name != b.name || a.parity != b.parity || a.weight != b.weight ||
        a.laurent != b.laurent || a.exp_of != b.exp_of)
      return false;
  }
  return true;
}

Chart Chart::extended(const std::vector<Variable>& extra) const {
  std::vector<Variable> vars = d_->vars;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return Chart(std::move(vars));
}

}  // namespace gca
