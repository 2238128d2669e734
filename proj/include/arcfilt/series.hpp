#ifndef ARCFILT_SERIES_HPP
#define ARCFILT_SERIES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace arcfilt {

// All series and polynomial coefficients are exact integers; no floating
// point is used anywhere in the coefficient arithmetic.
using Int = mpz_class;

// ---------------------------------------------------------------------------
// Truncated power series in one variable, coefficients c_0..c_N.
// Two series compare equal when they agree up to the smaller order.
// ---------------------------------------------------------------------------
class UniSeries {
 public:
  explicit UniSeries(int order);  // zero series
  static UniSeries fromCoefficients(std::vector<Int> coefficients);
  static UniSeries one(int order);

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const Int& at(int i) const { return coefficients_[i]; }
  void set(int i, Int value) { coefficients_[i] = std::move(value); }
  const std::vector<Int>& coefficients() const { return coefficients_; }

  UniSeries truncated(int order) const;

  friend bool operator==(const UniSeries& a, const UniSeries& b);

 private:
  std::vector<Int> coefficients_;
};

UniSeries addSeries(const UniSeries& a, const UniSeries& b);
UniSeries mulSeries(const UniSeries& a, const UniSeries& b);
// Whitespace-separated coefficient list, e.g. "1 3 5 7 9".
std::string renderCoefficients(const UniSeries& series);

// ---------------------------------------------------------------------------
// Sparse truncated power series in r variables over the exponent box
// [0..box]^r.  Absent exponent tuples have coefficient zero.
// ---------------------------------------------------------------------------
class MultiSeries {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExponent = 255;  // per-variable; exponents pack into 8 bits

  MultiSeries(int varCount, int box);

  int varCount() const { return varCount_; }
  int box() const { return box_; }

  Int coefficient(std::span<const int> exponents) const;
  void setCoefficient(std::span<const int> exponents, Int value);
  void addToCoefficient(std::span<const int> exponents, const Int& delta);

  const std::unordered_map<std::uint64_t, Int>& terms() const { return terms_; }
  std::vector<std::uint64_t> sortedKeys() const;

  std::uint64_t packExponents(std::span<const int> exponents) const;
  void unpackExponents(std::uint64_t key, std::span<int> exponents) const;

  friend bool operator==(const MultiSeries& a, const MultiSeries& b);

 private:
  int varCount_;
  int box_;
  std::unordered_map<std::uint64_t, Int> terms_;
};

MultiSeries addSeries(const MultiSeries& a, const MultiSeries& b);
MultiSeries mulSeries(const MultiSeries& a, const MultiSeries& b);

// Substitutes every monomial t_1^{v_1}...t_r^{v_r} by t^{min v_i} and sums.
// Valid as a truncation of the full reduction only up to an order the caller
// certifies (e.g. by box stabilization); the output order equals the box.
UniSeries reduceToMin(const MultiSeries& series);

// ---------------------------------------------------------------------------
// Dense integer polynomials in one variable (the zero polynomial has
// degree -1).  Building block for exact rational forms.
// ---------------------------------------------------------------------------
class Poly {
 public:
  Poly() = default;                       // zero
  Poly(std::initializer_list<long long> coefficients);
  static Poly fromCoefficients(std::vector<Int> coefficients);
  static Poly constant(Int value);
  static Poly oneMinusPower(int a);       // 1 - t^a

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool isZero() const { return coefficients_.empty(); }
  const Int& coefficient(int i) const;    // zero outside stored range
  const std::vector<Int>& coefficients() const { return coefficients_; }

  Int evaluateAtOne() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  // Quotient when the division is exact over the integers; throws otherwise.
  Poly dividedExactlyBy(const Poly& divisor) const;

  Int content() const;         // gcd of coefficients, >= 0
  Poly primitivePart() const;  // content removed, leading coefficient > 0

  static Poly gcd(const Poly& a, const Poly& b);

 private:
  void normalize();
  std::vector<Int> coefficients_;  // coefficients_[i] multiplies t^i
};

std::string renderPoly(const Poly& p);

// ---------------------------------------------------------------------------
// Exact rational function numerator/denominator over Z[t], with an optional
// factored display Prod_a (1-t^a)^{e_a}.  The denominator must have a
// nonzero constant term.
// ---------------------------------------------------------------------------
using FactorList = std::vector<std::pair<int, long long>>;  // (a, e), e != 0

class RationalForm {
 public:
  RationalForm(Poly numerator, Poly denominator);
  static RationalForm fromProduct(const FactorList& factors);

  const Poly& numerator() const { return numerator_; }
  const Poly& denominator() const { return denominator_; }
  const std::optional<FactorList>& factors() const { return factors_; }

  // Cancels the polynomial gcd; drops the factored display.
  RationalForm reduced() const;

 private:
  Poly numerator_;
  Poly denominator_;
  std::optional<FactorList> factors_;
};

// Exact long division to the requested order; the denominator's constant
// term must be +-1 so the expansion stays integral.
UniSeries expandRational(const RationalForm& form, int order);

// True iff the forms agree as rational functions (cross-multiplication).
bool ratEqual(const RationalForm& a, const RationalForm& b);

// (deg numerator - deg denominator, pole order at t=1 floored at zero).
std::pair<long long, int> degreeAndPole(const RationalForm& form);

// Poincare series (1-t^degree)/Prod_i (1-t^{w_i}) of a graded hypersurface
// ring with the given variable weights and equation degree.
RationalForm quasihomogeneousSeries(const std::vector<int>& weights, int degree);

// The unique exponents with s = Prod_{a<=N} (1-t^a)^{e_a} mod t^{N+1},
// read off by iterative peeling.  Requires c_0 = 1.  This certifies product
// structure only up to the series order.
FactorList peelProductExponents(const UniSeries& series);

// Global detector: peels the expansion of the form to the given order,
// rebuilds the finite product, and accepts only if the product equals the
// form as a rational function.  Returns the factor list, or nullopt when the
// form is not a product of powers of the polynomials 1-t^a.
std::optional<FactorList> cyclotomicProductForm(const RationalForm& form, int order);

// Grammar: (1-t^2)/((1-t)^3), with ^1 omitted and parentheses around a
// denominator only when it has several factors or a power.
std::string renderRationalForm(const RationalForm& form);
std::string renderProduct(const FactorList& factors);

}  // namespace arcfilt

#endif  // ARCFILT_SERIES_HPP
