#include "arcfilt/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "arcfilt/errors.hpp"

namespace arcfilt {

// ---------------------------------------------------------------------------
// UniSeries
// ---------------------------------------------------------------------------

UniSeries::UniSeries(int order) {
  if (order < 0) throw InvalidParameterError("series order must be >= 0");
  coefficients_.assign(static_cast<size_t>(order) + 1, Int(0));
}

UniSeries UniSeries::fromCoefficients(std::vector<Int> coefficients) {
  if (coefficients.empty())
    throw InvalidParameterError("a series needs at least its constant coefficient");
  UniSeries s(0);
  s.coefficients_ = std::move(coefficients);
  return s;
}

UniSeries UniSeries::one(int order) {
  UniSeries s(order);
  s.set(0, 1);
  return s;
}

UniSeries UniSeries::truncated(int order) const {
  if (order < 0 || order > this->order())
    throw InvalidParameterError("truncation order out of range");
  UniSeries s(order);
  for (int i = 0; i <= order; ++i) s.set(i, coefficients_[i]);
  return s;
}

bool operator==(const UniSeries& a, const UniSeries& b) {
  int order = std::min(a.order(), b.order());
  for (int i = 0; i <= order; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

UniSeries addSeries(const UniSeries& a, const UniSeries& b) {
  UniSeries out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out.set(i, a.at(i) + b.at(i));
  return out;
}

UniSeries mulSeries(const UniSeries& a, const UniSeries& b) {
  UniSeries out(std::min(a.order(), b.order()));
  for (int k = 0; k <= out.order(); ++k) {
    Int acc = 0;
    for (int i = 0; i <= k; ++i) acc += a.at(i) * b.at(k - i);
    out.set(k, acc);
  }
  return out;
}

std::string renderCoefficients(const UniSeries& series) {
  std::ostringstream out;
  for (int i = 0; i <= series.order(); ++i) {
    if (i) out << ' ';
    out << series.at(i).get_str();
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// MultiSeries
// ---------------------------------------------------------------------------

MultiSeries::MultiSeries(int varCount, int box) : varCount_(varCount), box_(box) {
  if (varCount < 1 || varCount > kMaxVars)
    throw InvalidParameterError("variable count must be between 1 and 8");
  if (box < 0 || box > kMaxExponent)
    throw InvalidParameterError("box bound must be between 0 and 255");
}

std::uint64_t MultiSeries::packExponents(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != varCount_)
    throw InvalidParameterError("exponent tuple length does not match variable count");
  std::uint64_t key = 0;
  for (int i = 0; i < varCount_; ++i) {
    if (exponents[i] < 0 || exponents[i] > box_)
      throw InvalidParameterError("exponent outside the box");
    key |= static_cast<std::uint64_t>(exponents[i]) << (8 * i);
  }
  return key;
}

void MultiSeries::unpackExponents(std::uint64_t key, std::span<int> exponents) const {
  for (int i = 0; i < varCount_; ++i)
    exponents[i] = static_cast<int>((key >> (8 * i)) & 0xff);
}

Int MultiSeries::coefficient(std::span<const int> exponents) const {
  auto it = terms_.find(packExponents(exponents));
  return it == terms_.end() ? Int(0) : it->second;
}

void MultiSeries::setCoefficient(std::span<const int> exponents, Int value) {
  std::uint64_t key = packExponents(exponents);
  if (value == 0)
    terms_.erase(key);
  else
    terms_[key] = std::move(value);
}

void MultiSeries::addToCoefficient(std::span<const int> exponents, const Int& delta) {
  if (delta == 0) return;
  std::uint64_t key = packExponents(exponents);
  Int& slot = terms_[key];
  slot += delta;
  if (slot == 0) terms_.erase(key);
}

std::vector<std::uint64_t> MultiSeries::sortedKeys() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(terms_.size());
  for (const auto& [key, value] : terms_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  if (a.varCount() != b.varCount()) return false;
  int box = std::min(a.box(), b.box());
  auto withinBox = [&](const MultiSeries& s, std::uint64_t key, std::vector<int>& exps) {
    s.unpackExponents(key, exps);
    for (int e : exps)
      if (e > box) return false;
    return true;
  };
  std::vector<int> exps(a.varCount());
  for (const auto& [key, value] : a.terms()) {
    if (!withinBox(a, key, exps)) continue;
    if (b.coefficient(exps) != value) return false;
  }
  for (const auto& [key, value] : b.terms()) {
    if (!withinBox(b, key, exps)) continue;
    if (a.coefficient(exps) != value) return false;
  }
  return true;
}

MultiSeries addSeries(const MultiSeries& a, const MultiSeries& b) {
  if (a.varCount() != b.varCount())
    throw InvalidParameterError("variable counts do not match");
  MultiSeries out(a.varCount(), std::min(a.box(), b.box()));
  std::vector<int> exps(a.varCount());
  auto accumulate = [&](const MultiSeries& s) {
    for (const auto& [key, value] : s.terms()) {
      s.unpackExponents(key, exps);
      if (std::any_of(exps.begin(), exps.end(), [&](int e) { return e > out.box(); }))
        continue;
      out.addToCoefficient(exps, value);
    }
  };
  accumulate(a);
  accumulate(b);
  return out;
}

MultiSeries mulSeries(const MultiSeries& a, const MultiSeries& b) {
  if (a.varCount() != b.varCount())
    throw InvalidParameterError("variable counts do not match");
  const int r = a.varCount();
  MultiSeries out(r, std::min(a.box(), b.box()));
  std::vector<int> ea(r), eb(r), sum(r);
  for (const auto& [ka, va] : a.terms()) {
    a.unpackExponents(ka, ea);
    for (const auto& [kb, vb] : b.terms()) {
      b.unpackExponents(kb, eb);
      bool inside = true;
      for (int i = 0; i < r; ++i) {
        sum[i] = ea[i] + eb[i];
        if (sum[i] > out.box()) {
          inside = false;
          break;
        }
      }
      if (inside) out.addToCoefficient(sum, va * vb);
    }
  }
  return out;
}

UniSeries reduceToMin(const MultiSeries& series) {
  UniSeries out(series.box());
  std::vector<int> exps(series.varCount());
  for (const auto& [key, value] : series.terms()) {
    series.unpackExponents(key, exps);
    int level = *std::min_element(exps.begin(), exps.end());
    out.set(level, out.at(level) + value);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

void Poly::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Poly::Poly(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coefficients_.emplace_back(static_cast<long>(c));
  normalize();
}

Poly Poly::fromCoefficients(std::vector<Int> coefficients) {
  Poly p;
  p.coefficients_ = std::move(coefficients);
  p.normalize();
  return p;
}

Poly Poly::constant(Int value) {
  Poly p;
  if (value != 0) p.coefficients_.push_back(std::move(value));
  return p;
}

Poly Poly::oneMinusPower(int a) {
  if (a < 1) throw InvalidParameterError("factor exponent must be >= 1");
  Poly p;
  p.coefficients_.assign(static_cast<size_t>(a) + 1, Int(0));
  p.coefficients_[0] = 1;
  p.coefficients_[static_cast<size_t>(a)] = -1;
  return p;
}

const Int& Poly::coefficient(int i) const {
  static const Int zero(0);
  if (i < 0 || i > degree()) return zero;
  return coefficients_[static_cast<size_t>(i)];
}

Int Poly::evaluateAtOne() const {
  Int acc = 0;
  for (const Int& c : coefficients_) acc += c;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Int> c(std::max(a.coefficients_.size(), b.coefficients_.size()), Int(0));
  for (size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return Poly::fromCoefficients(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Int> c(std::max(a.coefficients_.size(), b.coefficients_.size()), Int(0));
  for (size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (size_t i = 0; i < b.coefficients_.size(); ++i) c[i] -= b.coefficients_[i];
  return Poly::fromCoefficients(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.isZero() || b.isZero()) return Poly{};
  std::vector<Int> c(a.coefficients_.size() + b.coefficients_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (size_t j = 0; j < b.coefficients_.size(); ++j)
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return Poly::fromCoefficients(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) { return a.coefficients_ == b.coefficients_; }

Poly Poly::dividedExactlyBy(const Poly& divisor) const {
  if (divisor.isZero()) throw InvalidParameterError("division by the zero polynomial");
  if (isZero()) return Poly{};
  if (degree() < divisor.degree()) throw InternalError("inexact polynomial division");

  // Long division over Q; exactness requires every step to stay integral.
  std::vector<mpq_class> rem(coefficients_.begin(), coefficients_.end());
  std::vector<mpq_class> quot(static_cast<size_t>(degree() - divisor.degree()) + 1);
  const mpq_class lead(divisor.coefficients_.back());
  for (int k = degree() - divisor.degree(); k >= 0; --k) {
    mpq_class q = rem[static_cast<size_t>(k + divisor.degree())] / lead;
    quot[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= divisor.degree(); ++j)
      rem[static_cast<size_t>(k + j)] -= q * divisor.coefficients_[static_cast<size_t>(j)];
  }
  for (const mpq_class& r : rem)
    if (r != 0) throw InternalError("inexact polynomial division");

  std::vector<Int> out;
  out.reserve(quot.size());
  for (mpq_class& q : quot) {
    q.canonicalize();
    if (q.get_den() != 1) throw InternalError("inexact polynomial division");
    out.push_back(q.get_num());
  }
  return Poly::fromCoefficients(std::move(out));
}

Int Poly::content() const {
  Int g = 0;
  for (const Int& c : coefficients_) g = ::gcd(g, c);
  return g;
}

Poly Poly::primitivePart() const {
  if (isZero()) return Poly{};
  Int g = content();
  if (coefficients_.back() < 0) g = -g;
  std::vector<Int> out;
  out.reserve(coefficients_.size());
  for (const Int& c : coefficients_) {
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(q));
  }
  return Poly::fromCoefficients(std::move(out));
}

namespace {

// lc(b)^k * a reduced modulo b for some k <= deg a - deg b + 1; only the
// primitive part matters to the gcd loop below.
Poly pseudoRemainder(Poly a, const Poly& b) {
  const Int lead = b.coefficients().back();
  while (!a.isZero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    const Int top = a.coefficients().back();
    std::vector<Int> next(a.coefficients().size(), Int(0));
    for (int i = 0; i <= a.degree(); ++i) next[static_cast<size_t>(i)] = a.coefficient(i) * lead;
    for (int j = 0; j <= b.degree(); ++j)
      next[static_cast<size_t>(j + shift)] -= top * b.coefficient(j);
    a = Poly::fromCoefficients(std::move(next));
  }
  return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.isZero()) return b.isZero() ? Poly{} : b.primitivePart() * Poly::constant(b.content());
  if (b.isZero()) return a.primitivePart() * Poly::constant(a.content());

  Int contentGcd = ::gcd(a.content(), b.content());
  Poly pa = a.primitivePart();
  Poly pb = b.primitivePart();
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.isZero()) {
    Poly r = pseudoRemainder(pa, pb);
    pa = std::move(pb);
    pb = r.isZero() ? Poly{} : r.primitivePart();
  }
  return pa.primitivePart() * Poly::constant(contentGcd);
}

std::string renderPoly(const Poly& p) {
  if (p.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Int& c = p.coefficient(i);
    if (c == 0) continue;
    Int magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    if (i == 0) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str();
      out << 't';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// RationalForm
// ---------------------------------------------------------------------------

RationalForm::RationalForm(Poly numerator, Poly denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.isZero() || denominator_.coefficient(0) == 0)
    throw InvalidParameterError("denominator must have a nonzero constant term");
}

RationalForm RationalForm::fromProduct(const FactorList& factors) {
  std::map<int, long long> merged;
  for (auto [a, e] : factors) {
    if (a < 1) throw InvalidParameterError("factor 1-t^a needs a >= 1");
    merged[a] += e;
  }
  FactorList normalized;
  Poly num = Poly::constant(1);
  Poly den = Poly::constant(1);
  for (auto [a, e] : merged) {
    if (e == 0) continue;
    normalized.emplace_back(a, e);
    Poly factor = Poly::oneMinusPower(a);
    for (long long i = 0; i < std::llabs(e); ++i) {
      if (e > 0)
        num = num * factor;
      else
        den = den * factor;
    }
  }
  RationalForm form(std::move(num), std::move(den));
  form.factors_ = std::move(normalized);
  return form;
}

RationalForm RationalForm::reduced() const {
  Poly g = Poly::gcd(numerator_, denominator_);
  if (g.degree() < 1 && g.coefficient(0) == 1) return RationalForm(numerator_, denominator_);
  Poly num = numerator_.dividedExactlyBy(g);
  Poly den = denominator_.dividedExactlyBy(g);
  if (den.coefficient(0) < 0) {
    num = Poly{} - num;
    den = Poly{} - den;
  }
  return RationalForm(std::move(num), std::move(den));
}

UniSeries expandRational(const RationalForm& form, int order) {
  if (order < 0) throw InvalidParameterError("expansion order must be >= 0");
  const Poly& den = form.denominator();
  const Int& d0 = den.coefficient(0);
  if (d0 != 1 && d0 != -1)
    throw InvalidParameterError("denominator constant term must be +1 or -1");

  // c_k = (n_k - sum_{j>=1} d_j c_{k-j}) / d0, exact since d0 is a unit.
  UniSeries out(order);
  for (int k = 0; k <= order; ++k) {
    Int acc = form.numerator().coefficient(k);
    int top = std::min(k, den.degree());
    for (int j = 1; j <= top; ++j) acc -= den.coefficient(j) * out.at(k - j);
    out.set(k, d0 == 1 ? acc : -acc);
  }
  return out;
}

bool ratEqual(const RationalForm& a, const RationalForm& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

namespace {

int multiplicityAtOne(Poly p) {
  int m = 0;
  const Poly oneMinusT = Poly::oneMinusPower(1);
  while (!p.isZero() && p.evaluateAtOne() == 0) {
    p = p.dividedExactlyBy(oneMinusT);
    ++m;
  }
  return m;
}

}  // namespace

std::pair<long long, int> degreeAndPole(const RationalForm& form) {
  if (form.numerator().isZero())
    throw InvalidParameterError("degree of the zero function is undefined");
  long long degree =
      static_cast<long long>(form.numerator().degree()) - form.denominator().degree();
  int pole = multiplicityAtOne(form.denominator()) - multiplicityAtOne(form.numerator());
  return {degree, std::max(0, pole)};
}

RationalForm quasihomogeneousSeries(const std::vector<int>& weights, int degree) {
  if (weights.empty()) throw InvalidParameterError("weight list must be nonempty");
  if (degree < 1) throw InvalidParameterError("equation degree must be >= 1");
  FactorList factors;
  factors.emplace_back(degree, 1);
  for (int w : weights) {
    if (w < 1) throw InvalidParameterError("weights must be positive");
    factors.emplace_back(w, -1);
  }
  return RationalForm::fromProduct(factors);
}

namespace {

// In-place multiplication of the residual by (1-t^a)^power.  One binomial
// convolution pass regardless of |power|: the multiplier's m-th coefficient
// sits at t^{ma} and equals (-1)^m C(power, m) for power > 0 and
// C(|power|+m-1, m) for power < 0.
void multiplyByBinomialPower(std::vector<Int>& residual, int a, long long power) {
  const int order = static_cast<int>(residual.size()) - 1;
  const int terms = order / a;
  std::vector<Int> multiplier(static_cast<size_t>(terms) + 1);
  multiplier[0] = 1;
  for (int m = 1; m <= terms; ++m) {
    if (power > 0 && m > power) break;  // the remaining coefficients are zero
    Int numerator = power > 0 ? Int(static_cast<long>(-(power - m + 1)))
                              : Int(static_cast<long>(-power + m - 1));
    multiplier[static_cast<size_t>(m)] = multiplier[static_cast<size_t>(m) - 1] * numerator;
    mpz_divexact_ui(multiplier[static_cast<size_t>(m)].get_mpz_t(),
                    multiplier[static_cast<size_t>(m)].get_mpz_t(),
                    static_cast<unsigned long>(m));
  }
  std::vector<Int> out(residual.size(), Int(0));
  for (int i = 0; i <= order; ++i) {
    if (residual[static_cast<size_t>(i)] == 0) continue;
    for (int m = 0; m <= terms && i + m * a <= order; ++m) {
      if (multiplier[static_cast<size_t>(m)] == 0) break;
      out[static_cast<size_t>(i + m * a)] +=
          residual[static_cast<size_t>(i)] * multiplier[static_cast<size_t>(m)];
    }
  }
  residual = std::move(out);
}

}  // namespace

FactorList peelProductExponents(const UniSeries& series) {
  if (series.at(0) != 1)
    throw InvalidParameterError("product peeling requires constant coefficient 1");
  const int order = series.order();
  std::vector<Int> residual(series.coefficients());
  FactorList out;
  for (int a = 1; a <= order; ++a) {
    // residual = prod_{b>=a} (1-t^b)^{e_b} = 1 - e_a t^a + O(t^{a+1}).
    Int e = -residual[static_cast<size_t>(a)];
    if (e == 0) continue;
    if (!e.fits_slong_p()) throw ResourceLimitError("peeled exponent does not fit a machine word");
    long long exponent = e.get_si();
    out.emplace_back(a, exponent);
    multiplyByBinomialPower(residual, a, -exponent);  // divide by (1-t^a)^exponent
  }
  for (int i = 1; i <= order; ++i)
    if (residual[static_cast<size_t>(i)] != 0) throw InternalError("nontrivial peel residual");
  return out;
}

std::optional<FactorList> cyclotomicProductForm(const RationalForm& form, int order) {
  UniSeries expansion = expandRational(form, order);
  if (expansion.at(0) != 1) return std::nullopt;
  FactorList peeled = peelProductExponents(expansion);
  RationalForm candidate = RationalForm::fromProduct(peeled);
  if (ratEqual(candidate, form)) return peeled;
  return std::nullopt;
}

namespace {

std::string renderFactorSide(const FactorList& factors, bool positiveSide) {
  std::ostringstream out;
  int rendered = 0;
  bool powered = false;
  for (auto [a, e] : factors) {
    long long count = positiveSide ? e : -e;
    if (count <= 0) continue;
    out << "(1-t";
    if (a > 1) out << '^' << a;
    out << ')';
    if (count > 1) {
      out << '^' << count;
      powered = true;
    }
    ++rendered;
  }
  if (rendered == 0) return "1";
  std::string body = out.str();
  if (rendered > 1 || powered) return "(" + body + ")";
  return body;
}

}  // namespace

std::string renderProduct(const FactorList& factors) {
  std::string num = renderFactorSide(factors, true);
  std::string den = renderFactorSide(factors, false);
  if (den == "1") return num;
  return num + "/" + den;
}

std::string renderRationalForm(const RationalForm& form) {
  if (form.factors()) return renderProduct(*form.factors());
  std::string num = form.numerator().degree() < 1 && form.numerator().coefficient(0) == 1
                        ? "1"
                        : "(" + renderPoly(form.numerator()) + ")";
  if (form.denominator().degree() < 1 && form.denominator().coefficient(0) == 1) return num;
  return num + "/(" + renderPoly(form.denominator()) + ")";
}

}  // namespace arcfilt
