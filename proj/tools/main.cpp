// Command line front end: loads a structure document (or a built-in
// example), runs one task, prints a report to stdout.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <string>

#include "gca/specdoc.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "gca: exact verification of odd Jacobi / quasi-Q structures on graded "
      "bundles"};
  app.get_formatter()->column_width(30);

  std::string task, name, spec_path, example, preset = "solvable2";
  std::string format = "text";
  int dim = 1;
  gca::TaskOptions opts;

  app.add_option("task", task,
                 "verify-odd-jacobi | verify-quasi-q | verify-schouten | "
                 "transport | split | merge | schoutenise | dual-schouten | "
                 "bracket | axioms | example")
      ->required();
  app.add_option("name", name, "example name (for the example task)");
  app.add_option("--spec", spec_path, "JSON structure document to operate on");
  app.add_option("--example", example,
                 "use a built-in document instead of --spec: odd-contact | "
                 "lie-algebra | flat-connection");
  app.add_option("--dim", dim, "base dimension for odd-contact");
  app.add_option("--preset", preset, "lie-algebra preset: solvable2 | abelian2");
  app.add_option("--seed", opts.seed, "seed for randomized tasks");
  app.add_option("--epsilon", opts.epsilon, "bracket flavour for axioms: 0 | 1")
      ->check(CLI::Range(0, 1));
  app.add_option("--x", opts.x_expr, "left argument for the bracket task");
  app.add_option("--y", opts.y_expr, "right argument for the bracket task");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (task == "example") {
      if (name.empty()) name = example;
      if (name.empty())
        throw gca::Error("example task needs a name, e.g. `gca example odd-contact`");
      std::cout << gca::make_example(name, dim, preset).to_json().dump(2)
                << "\n";
      return 0;
    }

    gca::SpecDocument doc;
    if (!spec_path.empty())
      doc = gca::SpecDocument::load(spec_path);
    else if (!example.empty())
      doc = gca::make_example(example, dim, preset);
    else
      throw gca::Error("no input: pass --spec <file> or --example <name>");

    gca::Report rep = gca::run(doc, task, opts);
    if (format == "json")
      std::cout << rep.to_json().dump(2) << "\n";
    else
      std::cout << rep.to_text();
    return rep.exit_code();
  } catch (const gca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
