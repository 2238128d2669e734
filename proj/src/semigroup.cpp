#include "arcfilt/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "arcfilt/errors.hpp"

namespace arcfilt {

namespace {

constexpr long long kSieveCellBudget = 50'000'000;

}  // namespace

NumericalSemigroup semigroupFromGenerators(const std::vector<long long>& generators) {
  if (generators.empty()) throw InvalidParameterError("generator list must be nonempty");
  long long g = 0;
  for (long long a : generators) {
    if (a < 1) throw InvalidParameterError("generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1)
    throw InvalidParameterError("generators have gcd " + std::to_string(g) +
                                "; the value set is not cofinite");

  long long lo = *std::min_element(generators.begin(), generators.end());
  long long hi = *std::max_element(generators.begin(), generators.end());
  // The Frobenius number is at most 2*lo*hi, so sieving this far is enough
  // to see the full gap set and the start of the all-members tail.
  long long bound = 2 * lo * hi + hi + 1;
  if (bound > kSieveCellBudget)
    throw ResourceLimitError("generators too large for the membership sieve");

  std::vector<char> member(static_cast<size_t>(bound) + 1, 0);
  member[0] = 1;
  for (long long n = 1; n <= bound; ++n) {
    for (long long a : generators) {
      if (n >= a && member[static_cast<size_t>(n - a)]) {
        member[static_cast<size_t>(n)] = 1;
        break;
      }
    }
  }

  long long frobenius = -1;
  for (long long n = bound; n >= 0; --n) {
    if (!member[static_cast<size_t>(n)]) {
      frobenius = n;
      break;
    }
  }

  NumericalSemigroup s;
  s.generators = generators;
  std::sort(s.generators.begin(), s.generators.end());
  s.conductor = frobenius + 1;
  s.membership.assign(static_cast<size_t>(s.conductor), false);
  for (long long n = 0; n < s.conductor; ++n) {
    s.membership[static_cast<size_t>(n)] = member[static_cast<size_t>(n)] != 0;
    if (!member[static_cast<size_t>(n)]) s.gaps.push_back(n);
  }
  return s;
}

CurveSeries curveArcSeries(const std::vector<long long>& generators, int order) {
  if (order < 0) throw InvalidParameterError("series order must be >= 0");
  NumericalSemigroup semigroup = semigroupFromGenerators(generators);

  UniSeries series(order);
  for (int i = 0; i <= order; ++i) series.set(i, semigroup.contains(i) ? 1 : 0);

  // P(t) * (1-t) telescopes to a polynomial of degree = conductor: the
  // members below the conductor contribute (1-t) each and the tail
  // sum_{s>=conductor} t^s contributes t^conductor.
  Poly numerator;
  {
    std::vector<Int> c(static_cast<size_t>(semigroup.conductor) + 1, Int(0));
    for (long long n = 0; n < semigroup.conductor; ++n) {
      if (!semigroup.contains(n)) continue;
      c[static_cast<size_t>(n)] += 1;
      c[static_cast<size_t>(n) + 1] -= 1;
    }
    c[static_cast<size_t>(semigroup.conductor)] += 1;
    numerator = Poly::fromCoefficients(std::move(c));
  }
  RationalForm form(std::move(numerator), Poly::oneMinusPower(1));

  // The rational form must reproduce the membership indicators exactly.
  int checkOrder = std::max<long long>(order, semigroup.conductor + 4);
  UniSeries expanded = expandRational(form, static_cast<int>(checkOrder));
  for (int i = 0; i <= checkOrder; ++i)
    if (expanded.at(i) != (semigroup.contains(i) ? 1 : 0))
      throw InternalError("curve series form does not match membership");

  return CurveSeries{std::move(semigroup), std::move(series), std::move(form)};
}

}  // namespace arcfilt
