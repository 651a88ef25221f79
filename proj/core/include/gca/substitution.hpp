#ifndef GCA_SUBSTITUTION_HPP
#define GCA_SUBSTITUTION_HPP

#include <map>
#include <string>

#include "gca/poly.hpp"

namespace gca {

/// A (pullback-style) substitution: source-chart variables are sent to
/// polynomials over the target chart; unmapped variables map to themselves
/// by name where present in the target.
///
/// Every image must match the parity of its variable. In graded mode the
/// image weight must equal `weight_sign` times the variable weight;
/// `weight_sign = -1` expresses the w-bar = -w flip between the two sides
/// of the double vector bundle.
class Substitution {
 public:
  Substitution(Chart source, Chart target, std::map<int, Poly> images,
               bool graded = true, int weight_sign = 1);

  static Substitution identity(const Chart& chart);

  const Chart& source() const { return source_; }
  const Chart& target() const { return target_; }
  const std::map<int, Poly>& images() const { return images_; }

  /// Image of one source variable (identity-by-name when unmapped).
  Poly image(int var) const;

  Poly operator()(const Poly& f) const;

  /// Composition: first `inner` (on this->target's side), i.e.
  /// (this.then(g))(f) = g(this(f)). Requires g.source == this->target.
  Substitution then(const Substitution& g) const;

 private:
  Chart source_;
  Chart target_;
  std::map<int, Poly> images_;
  bool graded_;
  int weight_sign_;
};

}  // namespace gca

#endif
