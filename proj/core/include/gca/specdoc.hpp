#ifndef GCA_SPECDOC_HPP
#define GCA_SPECDOC_HPP

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "gca/algebroids.hpp"

namespace gca {

using Json = nlohmann::json;

struct TaskOptions {
  unsigned seed = 0;
  int epsilon = 0;
  std::string x_expr;
  std::string y_expr;
};

/// Task outcome: one entry per verified condition, residuals as canonical
/// expression strings, plus the constructed structure for construction
/// tasks. Deterministic ordering.
struct Report {
  struct Entry {
    std::string name;
    bool pass = false;
    std::string residual;
  };
  std::string task;
  std::vector<Entry> entries;
  double time_ms = 0;
  Json* output() { return output_.get(); }
  const Json* output() const { return output_.get(); }
  void set_output(Json j);

  bool pass() const;
  int exit_code() const { return pass() ? 0 : 1; }
  Json to_json() const;
  std::string to_text() const;

  void add(const BracketReport& br);

 private:
  std::shared_ptr<Json> output_;
};

/// A structured input document: a bundle description plus exactly one
/// structure kind (explicit S/Q, algebroid tables, quasi-q data, a bare
/// Schouten S, or a Lie algebroid with cocycle).
struct SpecDocument {
  enum class Kind { Explicit, Algebroid, QuasiQ, Schouten, LieCocycle };

  BundleSpec bundle;
  Kind kind = Kind::Explicit;
  std::optional<Poly> S, Q;                        // Explicit / Schouten
  std::optional<JacobiAlgebroidSpec> algebroid;    // Algebroid
  std::optional<QuasiQStructure> quasi;            // QuasiQ
  std::optional<LieAlgebroidWithCocycle> lie;      // LieCocycle

  static SpecDocument from_json(const Json& doc);
  static SpecDocument load(const std::string& path);

  /// The (S, Q) pair on T*(PiE*), from explicit expressions or from the
  /// algebroid tables.
  OddJacobiStructure jacobi_structure() const;

  Json to_json() const;
};

/// Dispatches a task name onto the corresponding module operation.
/// Verification failures become failing report entries; malformed input
/// throws.
Report run(const SpecDocument& doc, const std::string& task,
           const TaskOptions& opts = {});

/// Built-in example documents: "odd-contact" (dim), "lie-algebra"
/// (preset: "solvable2" or "abelian2"), "flat-connection".
SpecDocument make_example(const std::string& name, int dim,
                          const std::string& preset);

Json emit_quasi_q(const QuasiQStructure& s, const BundleSpec& b);
Json emit_lie_cocycle(const LieAlgebroidWithCocycle& l, const BundleSpec& b);

}  // namespace gca

#endif
