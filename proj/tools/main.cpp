#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

using icsheaf::cli::JobOptions;

namespace {

void input_flags(CLI::App* app, JobOptions& o, bool single_strat = true) {
  app->add_option("--complex", o.complex_path, "complex JSON (may embed a depth map)");
  app->add_option("--builtin", o.builtin, "embedded complex: tetrahedron-boundary, octahedron, torus7, suspended-torus");
  if (single_strat) app->add_option("--strat", o.strat_path, "depth map JSON");
}

void field_flags(CLI::App* app, JobOptions& o) {
  app->add_option("--field", o.field, "Q or Fp:<p>")->capture_default_str();
  app->add_option("--output", o.output, "json or md")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  app->add_flag("--serial", o.serial, "disable OpenMP kernels");
}

void build_flags(CLI::App* app, JobOptions& o) {
  app->add_option("--perversity", o.perversity, "preset (zero, top, ultra) or JSON array from k=1")->capture_default_str();
  app->add_option("--coeffs", o.coeffs_path, "local system JSON");
  app->add_flag("--reduce", o.reduce, "reduce between Deligne stages");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection cohomology of stratified simplicial pseudomanifolds"};
  app.require_subcommand(1);
  JobOptions o;

  auto* check = app.add_subcommand("check", "validate a stratification and run stratum sanity checks");
  input_flags(check, o);
  field_flags(check, o);

  auto* ih = app.add_subcommand("ih", "intersection cohomology Betti numbers");
  input_flags(ih, o);
  field_flags(ih, o);
  build_flags(ih, o);
  ih->add_flag("--retain-stages", o.retain_stages, "report every Deligne stage");

  auto* compare = app.add_subcommand("compare", "IH across stratifications subject to one Sigma");
  input_flags(compare, o, false);
  field_flags(compare, o);
  build_flags(compare, o);
  compare->add_option("--sigma", o.sigma_path, "Sigma as a list of simplices")->required();
  compare->add_option("--strat", o.strat_paths, "depth map JSON (repeatable)")->required();

  auto* axioms = app.add_subcommand("axioms", "axiom reports for the Deligne sheaf");
  input_flags(axioms, o);
  field_flags(axioms, o);
  build_flags(axioms, o);
  axioms->add_option("--systems", o.systems, "AX1 AX1' AX1''c AX2 AX2' AX2'' AX3 AX3''");
  axioms->add_option("--candidate", o.candidate_paths, "candidate stratification for AX2''/AX3'' (repeatable)");
  axioms->add_flag("--against-constant", o.against_constant, "also report on the constant sheaf");

  auto* paper = app.add_subcommand("paper-examples", "reproduce the worked examples");
  field_flags(paper, o);
  paper->add_flag("--reduce", o.reduce, "reduce between Deligne stages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (*check) return icsheaf::cli::cmd_check(o, std::cout, std::cerr);
  if (*ih) return icsheaf::cli::cmd_ih(o, std::cout, std::cerr);
  if (*compare) return icsheaf::cli::cmd_compare(o, std::cout, std::cerr);
  if (*axioms) return icsheaf::cli::cmd_axioms(o, std::cout, std::cerr);
  return icsheaf::cli::cmd_paper_examples(o, std::cout, std::cerr);
}
