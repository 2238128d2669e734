#ifndef ARCFILT_VERIFY_HPP
#define ARCFILT_VERIFY_HPP

#include <string>
#include <vector>

#include "arcfilt/cycle_lattice.hpp"
#include "arcfilt/dual_graph.hpp"

namespace arcfilt::verify {

struct CheckResult {
  std::string label;
  bool pass = false;
  std::string detail;
};

// Named verification suites exposed by the CLI:
//   ade            - arc series of every rational double point against its
//                    closed form, coefficient-exact to order 40
//   reduction      - reduction of the multivariate series equals the arc
//                    series (stabilized box certificate) on A1, A2, A3, D4
//   curves         - monomial curve series, rational forms and product
//                    structure, including the <3,4,5> space curve
//   degpole        - degree -1 / pole order 2 shape of the ADE closed forms
//   correspondence - ADE arc series vs quasihomogeneous Poincare series
//   all            - everything above plus the suspension identity, the
//                    rationality gate and the closure-oracle sweep
std::vector<std::string> suiteNames();
std::vector<CheckResult> runSuite(const std::string& name);

std::vector<CheckResult> suiteAde();
std::vector<CheckResult> suiteReduction();
std::vector<CheckResult> suiteCurves();
std::vector<CheckResult> suiteDegPole();
std::vector<CheckResult> suiteCorrespondence();
std::vector<CheckResult> suiteExtras();

// Individual members of the extras suite.
CheckResult checkSuspensionIdentity();
CheckResult checkRationalityOnAde();
CheckResult checkGenusOneRefused();
CheckResult closureOracleSweep();
CheckResult checkReductionToy();
CheckResult checkAdeProducts();

// Reference computations of the minimal anti-nef cycle >= v.  These stay
// deliberately independent of antiNefClosure's unit-increment loop so the
// suites can cross-check it.

// Ascending fixed-point iteration: simultaneously raise every coordinate to
// the least value its row constraint allows given the others.  Converges to
// the minimal anti-nef cycle from below.
Cycle fixedPointMinimalAntiNef(const Cycle& v, const DualGraph& graph);

// Exhaustive walk of the box [v, candidate]: true iff the candidate is the
// unique anti-nef cycle >= v in the box, which certifies global minimality
// when the candidate is anti-nef.  Boxes larger than maxPoints are refused.
bool certifyUniqueInBox(const Cycle& v, const DualGraph& graph, const Cycle& candidate,
                        std::size_t maxPoints = 5'000'000);

}  // namespace arcfilt::verify

#endif  // ARCFILT_VERIFY_HPP
