#include "arcfilt/cycle_lattice.hpp"

#include <numeric>

#include "arcfilt/errors.hpp"

namespace arcfilt {

namespace {

// Combined coefficient budget for the closure loop.  Negative definiteness
// bounds every closure well below this; hitting it means a bug or an
// absurdly large request.
constexpr long long kClosureStepGuard = 1'000'000;

void checkCycle(const Cycle& y, const DualGraph& graph, const char* what) {
  if (static_cast<int>(y.size()) != graph.vertexCount())
    throw InvalidParameterError(std::string(what) + ": cycle length does not match vertex count");
  for (long long c : y)
    if (c < 0) throw InvalidParameterError(std::string(what) + ": cycle coefficients must be >= 0");
}

}  // namespace

long long pairing(const Cycle& y, const Cycle& z, const DualGraph& graph) {
  const auto& m = graph.matrix();
  if (static_cast<int>(y.size()) != m.size() || static_cast<int>(z.size()) != m.size())
    throw InvalidParameterError("pairing: cycle length does not match vertex count");
  long long total = 0;
  for (int i = 0; i < m.size(); ++i) {
    if (y[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < m.size(); ++j) row += m.at(i, j) * z[j];
    total += y[i] * row;
  }
  return total;
}

Cycle antiNefClosure(const Cycle& y, const DualGraph& graph) {
  return antiNefClosure(y, graph, VertexChooser{});
}

Cycle antiNefClosure(const Cycle& y, const DualGraph& graph, const VertexChooser& choose) {
  checkCycle(y, graph, "antiNefClosure");
  const auto& m = graph.matrix();
  const int n = m.size();

  Cycle result = y;
  // pairs[i] = pairing(result, e_i), maintained incrementally.
  std::vector<long long> pairs(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pairs[i] += m.at(i, j) * result[j];

  long long steps = std::accumulate(result.begin(), result.end(), 0LL);
  std::vector<int> violating;
  for (;;) {
    violating.clear();
    for (int i = 0; i < n; ++i)
      if (pairs[i] > 0) violating.push_back(i);
    if (violating.empty()) break;

    int pick = choose ? violating[choose(violating)] : violating.front();
    ++result[pick];
    if (++steps > kClosureStepGuard)
      throw InternalError("anti-nef closure exceeded its step guard");
    for (int i = 0; i < n; ++i) pairs[i] += m.at(i, pick);
  }
  return result;
}

Cycle fundamentalCycle(const DualGraph& graph) {
  return antiNefClosure(Cycle(graph.vertexCount(), 1), graph);
}

bool isRational(const DualGraph& graph) {
  Cycle z = fundamentalCycle(graph);
  long long zz = pairing(z, z, graph);
  long long kz = 0;
  auto degrees = canonicalDegree(graph);
  for (int i = 0; i < graph.vertexCount(); ++i) kz += z[i] * degrees[i];
  // p_a(Z) = 1 + (Z.Z + K.Z)/2; the sum is even by adjunction.
  return 2 + zz + kz == 0;
}

long long codimension(const Cycle& v, const DualGraph& graph) {
  if (!isRational(graph))
    throw UnsupportedInputError(
        "codimension formula is only valid for rational singularities");
  return detail::codimensionUnchecked(v, graph);
}

namespace detail {

long long codimensionUnchecked(const Cycle& v, const DualGraph& graph) {
  checkCycle(v, graph, "codimension");
  Cycle y = antiNefClosure(v, graph);
  long long yy = pairing(y, y, graph);
  long long ky = 0;
  auto degrees = canonicalDegree(graph);
  for (int i = 0; i < graph.vertexCount(); ++i) ky += y[i] * degrees[i];
  if ((yy + ky) % 2 != 0) throw InternalError("odd Riemann-Roch sum");
  return -(yy + ky) / 2;
}

}  // namespace detail

}  // namespace arcfilt
