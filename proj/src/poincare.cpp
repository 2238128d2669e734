#include "arcfilt/poincare.hpp"

#include <algorithm>
#include <bit>

#include "arcfilt/errors.hpp"

namespace arcfilt {

namespace {

long long selfPairingPlusCanonical(const Cycle& y, const DualGraph& graph,
                                   const std::vector<long long>& degrees) {
  long long yy = pairing(y, y, graph);
  long long ky = 0;
  for (int i = 0; i < graph.vertexCount(); ++i) ky += y[i] * degrees[i];
  return yy + ky;
}

// Codimension h over the full grid [0..top]^r, axis 0 fastest.  Each point's
// closure is seeded with the closure of its predecessor along axis 0, which
// is a valid lower start because closures are monotone.
std::vector<long long> codimGrid(const DualGraph& graph, int top, std::size_t maxCells) {
  const int r = graph.vertexCount();
  std::size_t total = 1;
  for (int i = 0; i < r; ++i) {
    total *= static_cast<std::size_t>(top) + 1;
    if (total > maxCells)
      throw ResourceLimitError("codimension grid exceeds the configured cell budget");
  }

  auto degrees = canonicalDegree(graph);
  std::vector<long long> h(total, 0);
  Cycle v(r, 0), closure(r, 0), seed(r, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (idx > 0 && v[0] > 0) {
      for (int i = 0; i < r; ++i) seed[i] = std::max(closure[i], v[i]);
    } else {
      seed = v;
    }
    closure = antiNefClosure(seed, graph);
    h[idx] = -selfPairingPlusCanonical(closure, graph, degrees) / 2;

    // odometer
    for (int i = 0; i < r; ++i) {
      if (v[i] < top) {
        ++v[i];
        break;
      }
      v[i] = 0;
    }
  }
  return h;
}

}  // namespace

UniSeries arcSeries(const DualGraph& graph, int order) {
  if (order < 0) throw InvalidParameterError("series order must be >= 0");
  if (!isRational(graph))
    throw UnsupportedInputError("arc series requires a rational singularity");

  const int r = graph.vertexCount();
  UniSeries out(order);
  long long previous = 0;  // h(0) = 0
  for (int i = 0; i <= order; ++i) {
    long long current =
        detail::codimensionUnchecked(Cycle(r, static_cast<long long>(i) + 1), graph);
    out.set(i, Int(static_cast<long>(current - previous)));
    previous = current;
  }
  return out;
}

RationalForm adeClosedForm(AdeFamily family, int k) {
  switch (family) {
    case AdeFamily::A:
      if (k < 1) throw InvalidParameterError("A_k requires k >= 1");
      return RationalForm::fromProduct({{2, 1}, {1, -3}});
    case AdeFamily::D:
      if (k < 4) throw InvalidParameterError("D_k requires k >= 4");
      return RationalForm::fromProduct({{k - 1, 1}, {1, -2}, {k - 2, -1}});
    case AdeFamily::E:
      if (k == 6) return RationalForm::fromProduct({{4, 1}, {1, -1}, {2, -2}});
      if (k == 7) return RationalForm::fromProduct({{6, 1}, {1, -1}, {2, -1}, {4, -1}});
      if (k == 8) return RationalForm::fromProduct({{6, 1}, {2, -2}, {3, -1}});
      throw InvalidParameterError("E_k requires k in {6,7,8}");
  }
  throw InvalidParameterError("unknown family");
}

MultiSeries multiPoincare(const DualGraph& graph, int box, const MultiLimits& limits) {
  const int r = graph.vertexCount();
  if (box < 1) throw InvalidParameterError("box bound must be >= 1");
  if (box > MultiSeries::kMaxExponent)
    throw ResourceLimitError("box bound exceeds the representable exponent range");
  if (r > limits.maxVars)
    throw ResourceLimitError("vertex count exceeds the multivariate gate (" +
                             std::to_string(limits.maxVars) +
                             "); raise the limit explicitly for larger graphs");
  if (!isRational(graph))
    throw UnsupportedInputError("multivariate Poincare series requires a rational singularity");

  std::vector<long long> h = codimGrid(graph, box + 1, limits.maxGridCells);

  // Strides of the h grid (axis i has extent box+2).
  std::vector<std::size_t> stride(r);
  std::size_t s = 1;
  for (int i = 0; i < r; ++i) {
    stride[i] = s;
    s *= static_cast<std::size_t>(box) + 2;
  }

  MultiSeries out(r, box);
  std::vector<int> v(r, 0);
  const unsigned cornerCount = 1u << r;
  for (;;) {
    std::size_t base = 0;
    for (int i = 0; i < r; ++i) base += static_cast<std::size_t>(v[i]) * stride[i];

    long long coefficient = 0;
    for (unsigned mask = 0; mask < cornerCount; ++mask) {
      std::size_t idx = base;
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) idx += stride[i];
      long long value = h[idx];
      coefficient += (std::popcount(mask) % 2 == 1) ? value : -value;
    }
    if (coefficient != 0) out.setCoefficient(v, Int(static_cast<long>(coefficient)));

    int axis = 0;
    while (axis < r && v[axis] == box) {
      v[axis] = 0;
      ++axis;
    }
    if (axis == r) break;
    ++v[axis];
  }
  return out;
}

namespace {

bool agreeUpTo(const UniSeries& a, const UniSeries& b, int order) {
  for (int i = 0; i <= order; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

}  // namespace

ReductionCheck checkReductionIdentity(const DualGraph& graph, int order,
                                      const StabilizationOptions& options) {
  if (order < 0) throw InvalidParameterError("series order must be >= 0");
  if (options.step < 1) throw InvalidParameterError("stabilization step must be >= 1");

  UniSeries arc = arcSeries(graph, order);
  int box = std::max({options.startBox, order, 1});
  int ceiling = options.ceiling > 0 ? options.ceiling
                                    : std::max(4 * order, box + 2 * options.step);

  UniSeries previous = reduceToMin(multiPoincare(graph, box, options.limits));
  for (int next = box + options.step; next <= ceiling; next += options.step) {
    UniSeries current = reduceToMin(multiPoincare(graph, next, options.limits));
    if (agreeUpTo(previous, current, order)) {
      ReductionCheck result{agreeUpTo(current, arc, order), next, current.truncated(order),
                            std::move(arc)};
      return result;
    }
    previous = std::move(current);
  }
  throw InconclusiveError(
      "reduction coefficients did not stabilize below the box ceiling " +
      std::to_string(ceiling));
}

RationalForm doubleSuspensionSeries(int n) {
  if (n < 1) throw InvalidParameterError("suspension needs n >= 1 base variables");
  return RationalForm::fromProduct({{2, 1}, {1, -(n + 2)}});
}

bool degreePoleCheck(const RationalForm& form) {
  auto [degree, pole] = degreeAndPole(form);
  return degree == -1 && pole == 2;
}

std::vector<std::pair<std::string, bool>> correspondenceCheck() {
  std::vector<std::pair<std::string, bool>> results;

  bool aPass = true;
  RationalForm a1 = quasihomogeneousSeries({1, 1, 1}, 2);
  for (int k = 1; k <= 10; ++k) aPass = aPass && ratEqual(adeClosedForm(AdeFamily::A, k), a1);
  results.emplace_back("A_k->A1", aPass);

  bool dPass = true;
  for (int k = 4; k <= 10; ++k) {
    RationalForm target = quasihomogeneousSeries({1, k - 2, 1}, k - 1);
    dPass = dPass && ratEqual(adeClosedForm(AdeFamily::D, k), target);
  }
  results.emplace_back("D_k->A_{k-2}", dPass);

  results.emplace_back(
      "E6->A3", ratEqual(adeClosedForm(AdeFamily::E, 6), quasihomogeneousSeries({2, 2, 1}, 4)));
  results.emplace_back(
      "E7->A5", ratEqual(adeClosedForm(AdeFamily::E, 7), quasihomogeneousSeries({2, 4, 1}, 6)));
  results.emplace_back(
      "E8->D4", ratEqual(adeClosedForm(AdeFamily::E, 8), quasihomogeneousSeries({2, 2, 3}, 6)));
  return results;
}

}  // namespace arcfilt
