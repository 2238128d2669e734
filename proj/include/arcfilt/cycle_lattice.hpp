#ifndef ARCFILT_CYCLE_LATTICE_HPP
#define ARCFILT_CYCLE_LATTICE_HPP

#include <functional>
#include <vector>

#include "arcfilt/dual_graph.hpp"

namespace arcfilt {

// Effective exceptional cycle: one nonnegative coefficient per vertex of a
// fixed dual graph, in the graph's vertex order.
using Cycle = std::vector<long long>;

// Intersection number y^T M z of two cycles.
long long pairing(const Cycle& y, const Cycle& z, const DualGraph& graph);

// Picks which violating vertex to bump: receives the violating vertex list
// and returns a position into it.  Used to show the closure is independent
// of the sweep order.
using VertexChooser = std::function<int(const std::vector<int>& violating)>;

// Smallest cycle >= y (coefficientwise) whose pairing with every vertex is
// <= 0.  Computed by unit increments; negative definiteness guarantees
// termination, with a hard step guard as a safety net.
Cycle antiNefClosure(const Cycle& y, const DualGraph& graph);
Cycle antiNefClosure(const Cycle& y, const DualGraph& graph, const VertexChooser& choose);

// Anti-nef closure of the all-ones cycle: the fundamental cycle.
Cycle fundamentalCycle(const DualGraph& graph);

// Artin's criterion: the fundamental cycle has arithmetic genus zero.
bool isRational(const DualGraph& graph);

// dim O/J(v) for the valuation ideal J(v) = { g : v_i(g) >= v_i for all i },
// via the anti-nef closure ytilde of v:
//     dim O/J(v) = -( ytilde.ytilde + K.ytilde ) / 2.
// Only valid on rational singularities; other graphs are refused.
long long codimension(const Cycle& v, const DualGraph& graph);

namespace detail {
// Same formula without the (relatively costly) rationality gate; callers
// must have checked isRational once.
long long codimensionUnchecked(const Cycle& v, const DualGraph& graph);
}  // namespace detail

}  // namespace arcfilt

#endif  // ARCFILT_CYCLE_LATTICE_HPP
