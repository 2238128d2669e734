#ifndef ARCFILT_POINCARE_HPP
#define ARCFILT_POINCARE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcfilt/cycle_lattice.hpp"
#include "arcfilt/dual_graph.hpp"
#include "arcfilt/series.hpp"

namespace arcfilt {

// Arc-filtration Poincare series of a singularity together with an optional
// exact closed form.
struct ArcSeriesResult {
  UniSeries series;
  std::optional<RationalForm> closedForm;
  std::string graphLabel;
};

// Coefficients c_i = h((i+1)*1) - h(i*1), where h is the valuation-ideal
// codimension and 1 is the all-ones cycle: the dimension of the i-th graded
// piece of the arc filtration.  Requires a rational singularity.
UniSeries arcSeries(const DualGraph& graph, int order);

// Closed forms of the arc series for the rational double points:
//   A_k : (1-t^2)/(1-t)^3
//   D_k : (1-t^{k-1})/((1-t)^2 (1-t^{k-2}))
//   E6  : (1-t^4)/((1-t)(1-t^2)^2)
//   E7  : (1-t^6)/((1-t)(1-t^2)(1-t^4))
//   E8  : (1-t^6)/((1-t^2)^2 (1-t^3))
RationalForm adeClosedForm(AdeFamily family, int k);

// Resource gates for the multivariate series: box enumeration is exponential
// in the vertex count, so both the variable count and the total grid size
// are capped.
struct MultiLimits {
  int maxVars = 4;
  std::size_t maxGridCells = 20'000'000;
};

// Multivariate Poincare series of the divisorial multi-index filtration,
// exact over the exponent box [0..box]^r.  The coefficient at v is the
// corner-alternating sum -sum_{I subset of vertices} (-1)^{|I|} h(v + e_I),
// the telescoped form of L(t) prod_i (t_i - 1) / (t_1...t_r - 1).
MultiSeries multiPoincare(const DualGraph& graph, int box, const MultiLimits& limits = {});

struct StabilizationOptions {
  int step = 4;      // box growth per round
  int startBox = 0;  // 0 means: start at the order
  int ceiling = 0;   // 0 means max(4*order, startBox + 2*step)
  MultiLimits limits{};
};

struct ReductionCheck {
  bool match = false;
  int stabilizedBox = 0;
  UniSeries reduced;   // reduction coefficients 0..order after stabilization
  UniSeries arc;       // independently computed arc series 0..order
};

// Machine check that the reduction of the multivariate series equals the arc
// series: grows the box until the reduction's coefficients 0..order agree
// across two consecutive boxes, then compares with arcSeries.  Throws
// InconclusiveError when the ceiling is hit before stabilization.
ReductionCheck checkReductionIdentity(const DualGraph& graph, int order,
                                      const StabilizationOptions& options = {});

// (1-t^2)/(1-t)^{n+2}: the arc series of f(z_1..z_n) + x^2 + y^2 = 0 for any
// f in the square of the maximal ideal.
RationalForm doubleSuspensionSeries(int n);

// True iff the form has degree -1 and a pole of order 2 at t=1 - the shape
// shared by the arc series of all rational double points.
bool degreePoleCheck(const RationalForm& form);

// The five exact identities between ADE arc series and quasihomogeneous
// Poincare series:
//   A_k -> A_1 (weights 1,1,1; degree 2)        for k = 1..10
//   D_k -> A_{k-2} (weights 1,k-2,1; degree k-1) for k = 4..10
//   E6  -> A_3 (weights 2,2,1; degree 4)
//   E7  -> A_5 (weights 2,4,1; degree 6)
//   E8  -> D_4 (weights 2,2,3; degree 6)
std::vector<std::pair<std::string, bool>> correspondenceCheck();

}  // namespace arcfilt

#endif  // ARCFILT_POINCARE_HPP
