#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tlenv {

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  std::optional<double> delta;  // empty: symbolic
  int max_degree = 3;
  int max_boundary = 8;
  OutputFormat format = OutputFormat::Text;
  unsigned long long seed = 0;
  std::string graph_path;
  std::string element_path;
  int n = 4;
  int k = 0;
  std::string shape;  // "l,r,t,b" with an optional ",-" for minus shading
  std::string pairing = "tau'";
};

inline constexpr int kMaxDegreeGuard = 5;
inline constexpr int kMaxBoundaryGuard = 10;

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  long cases = 0;
  std::string detail;  // first counterexample
};

// Identity suites shared by the command line and the bindings.
std::vector<CheckResult> cob_checks(int max_boundary, unsigned long long seed, int random_pairs = 200);
std::vector<CheckResult> derivation_checks(int max_degree, unsigned long long seed, int samples = 200);
std::vector<CheckResult> conjugate_checks(int max_degree, int max_q_points = 5);

// argv excludes the program name.  Returns 0 on success, 1 when an
// identity check fails or a computation hits a pole or a singular Gram
// block, 2 on usage errors and invalid input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlenv
