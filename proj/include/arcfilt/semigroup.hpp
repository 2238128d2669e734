#ifndef ARCFILT_SEMIGROUP_HPP
#define ARCFILT_SEMIGROUP_HPP

#include <vector>

#include "arcfilt/series.hpp"

namespace arcfilt {

// Value semigroup of a monomial curve: the set of orders realized by
// functions on the germ, a cofinite additive submonoid of Z_{>=0}.
struct NumericalSemigroup {
  std::vector<long long> generators;
  std::vector<bool> membership;  // indices 0..conductor-1
  long long conductor = 0;       // smallest c with [c, infinity) contained
  std::vector<long long> gaps;   // sorted nonmembers, all < conductor

  bool contains(long long n) const {
    if (n < 0) return false;
    if (n >= conductor) return true;
    return membership[static_cast<size_t>(n)];
  }
};

// Membership by the standard coin-problem dynamic program up to a bound
// safely past the Frobenius number.  Requires gcd(generators) = 1, otherwise
// the value set is not cofinite.
NumericalSemigroup semigroupFromGenerators(const std::vector<long long>& generators);

struct CurveSeries {
  NumericalSemigroup semigroup;
  UniSeries series;        // coefficient i is 1 iff i is in the semigroup
  RationalForm closedForm; // polynomial numerator of degree = conductor over (1-t)
};

// Arc-filtration Poincare series of the monomial curve with the given
// exponents: sum_{s in semigroup} t^s, with its exact rational form.
CurveSeries curveArcSeries(const std::vector<long long>& generators, int order);

}  // namespace arcfilt

#endif  // ARCFILT_SEMIGROUP_HPP
