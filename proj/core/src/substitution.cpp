#include "gca/substitution.hpp"

namespace gca {

Substitution::Substitution(Chart source, Chart target,
                           std::map<int, Poly> images, bool graded,
                           int weight_sign)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      graded_(graded),
      weight_sign_(weight_sign) {
  for (auto& [v, img] : images_) {
    if (v < 0 || std::size_t(v) >= source_.size())
      throw UnknownVariable("substitution: bad variable index");
    const Variable& src = source_.var(v);
    if (!img.chart().same(target_))
      throw ChartMismatch("substitution: image of '" + src.name +
                          "' is not on the target chart");
    if (!img.has_parity(src.parity))
      throw ParityMismatch("substitution: image of '" + src.name +
                           "' has wrong parity");
    if (graded_ && !img.has_weight(weight_sign_ * (long long)src.weight))
      throw WeightMismatch("substitution: image of '" + src.name +
                           "' has wrong weight");
  }
}

Substitution Substitution::identity(const Chart& chart) {
  return Substitution(chart, chart, {}, true, 1);
}

Poly Substitution::image(int var) const {
  auto it = images_.find(var);
  if (it != images_.end()) return it->second;
  const Variable& src = source_.var(var);
  auto t = target_.find(src.name);
  if (!t)
    throw UnknownVariable("substitution: '" + src.name +
                          "' has no image and no target counterpart");
  const Variable& dst = target_.var(*t);
  if (dst.parity != src.parity)
    throw ParityMismatch("substitution: parity of '" + src.name + "' differs");
  return Poly::variable(target_, *t);
}

Poly Substitution::operator()(const Poly& f) const {
  require_same_chart(f.chart(), source_, "substitution");
  Poly result(target_);
  for (auto& [m, c] : f.terms()) {
    Poly term = Poly::constant(target_, c);
    for (auto& [v, e] : m.even) term *= image(v).pow(e);
    for (int v : m.odd) term *= image(v);
    result += term;
  }
  return result;
}

Substitution Substitution::then(const Substitution& g) const {
  require_same_chart(target_, g.source(), "substitution composition");
  std::map<int, Poly> images;
  for (std::size_t v = 0; v < source_.size(); ++v) {
    images.emplace(int(v), g(image(int(v))));
  }
  return Substitution(source_, g.target(), std::move(images),
                      graded_ && g.graded_, weight_sign_ * g.weight_sign_);
}

}  // namespace gca
