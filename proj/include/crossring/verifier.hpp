#pragma once

#include <map>
#include <string>
#include <vector>

#include "crossring/association.hpp"
#include "crossring/drawing.hpp"
#include "crossring/rational.hpp"
#include "crossring/robustness.hpp"

namespace crossring {

// The three-cycles-plus-arcs pattern behind the bucket counting: back cycle
// R(j-beta), home cycle R(j), front cycle R(j+a(j)), and one arc per bucket
// ring i running P(i, j-beta, j+a(j)) through v(i, j). The arc's initial
// half is P(i, j-beta, j), its final half P(i, j, j+a(j)).
struct ConfigView {
  int j = 0;
  int beta = 0;
  int back = 0;
  int home = 0;
  int front = 0;
  std::vector<int> rings;  // the bucket, ascending
  int k = 0;               // crossings between back and home cycle
};

ConfigView extract_configuration(const Associator& eng, int j, int beta);
ConfigView extract_configuration(const Drawing& d, int j, int beta);

// The structural axioms the pattern needs before its counting inequality
// applies: the front cycle avoids the other two, no cycle of the triple
// separates the other two, and every arc meets the home cycle only at its
// middle vertex without crossing sides. One message per violation.
std::vector<std::string> configuration_axioms(const Drawing& d,
                                              const RedComplementTables& tab,
                                              const ConfigView& cv);

struct ConfigCheck {
  int s = 0;
  int k = 0;
  int x1 = 0;  // good crossings: initial x initial or initial x final, distinct rings
  int x2 = 0;  // arcs whose initial half crosses the front cycle
  int x3 = 0;  // arcs whose final half crosses the back cycle
  bool holds = false;  // x1+x2+x3 >= s-2 when k = 0, x1+x2+x3+k >= s when k > 0
};

ConfigCheck configuration_inequality(const Drawing& d, const ConfigView& cv);

// Cross-cycle disjointness of the claimed crossing sets; one message per
// crossing claimed by two different owners, with both provenance tags.
std::vector<std::string> disjointness_check(const Association& a);

// The counting floor per cycle: |Y(j)| covers the four moving classes,
// |X(beta,j)| covers its bucket (minus two when beta equals the back gap),
// and each cycle claims at least m-2 crossings.
std::vector<std::string> counting_check(const Association& a);

struct PerCycleSummary {
  int j = 0;
  int claimed = 0;
  std::map<std::string, int> tags;
};

struct Certificate {
  std::string digest;
  int m = 0;
  int n = 0;
  bool robust = false;
  std::string diagnosis;  // robust | heavy_red_cycle | dichotomy_failed |
                          // not_robust_below_threshold
  int heavy_j = -1;
  int total_crossings = 0;
  int required_total = 0;  // (m-2)*n
  int claimed_total = 0;   // distinct crossings claimed across all cycles
  bool pairwise_disjoint = false;
  bool guarantee_met = false;  // claimed_total >= required_total
  std::vector<PerCycleSummary> per_j;
  std::vector<std::string> falsifications;
};

// Runs the whole pipeline on a valid drawing: on robust drawings, the
// association plus every guarantee, counting, disjointness and configuration
// check, with violations recorded rather than thrown; on non-robust drawings
// above the guarantee threshold, the heavy-cycle dichotomy. The gap bounds
// are checked either way.
Certificate certify(const Drawing& d);

std::string certificate_json(const Certificate& c);

// Induction quantity of the closed-form bound: min{(m-2)n, m(n - n0)} for
// n >= n0. Exposed for cross-checking the bound calculator.
Rational hks_statement_bound(int m, int n, const Rational& n0);

}  // namespace crossring
