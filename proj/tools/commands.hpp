#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icsheaf::cli {

struct JobOptions {
  std::string complex_path;
  std::string builtin;
  std::string strat_path;
  std::vector<std::string> strat_paths;  // compare
  std::string sigma_path;
  std::string coeffs_path;
  std::vector<std::string> candidate_paths;
  std::vector<std::string> systems;
  std::string perversity = "ultra";
  std::string field = "Q";
  std::string output = "json";
  bool reduce = false;
  bool retain_stages = false;
  bool against_constant = false;
  bool serial = false;
};

// Each returns the process exit code: 0 success, 1 negative verdict,
// 2 invalid input.
int cmd_check(const JobOptions& o, std::ostream& out, std::ostream& err);
int cmd_ih(const JobOptions& o, std::ostream& out, std::ostream& err);
int cmd_compare(const JobOptions& o, std::ostream& out, std::ostream& err);
int cmd_axioms(const JobOptions& o, std::ostream& out, std::ostream& err);
int cmd_paper_examples(const JobOptions& o, std::ostream& out, std::ostream& err);

}  // namespace icsheaf::cli
