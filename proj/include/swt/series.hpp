#ifndef SWT_SERIES_HPP
#define SWT_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "swt/error.hpp"
#include "swt/exact.hpp"

namespace swt {

/// Formal power series in t with exact rational coefficients, truncated after
/// t^order. The order is fixed at construction; no operation resizes silently.
class TruncSeries {
 public:
  TruncSeries() : coeffs_(1) {}
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Coefficients for t^0, t^1, ...; missing high terms are zero. Supplying
  /// more than order+1 coefficients is an error.
  TruncSeries(std::size_t order, std::span<const Rational> coeffs) : coeffs_(order + 1) {
    if (coeffs.size() > order + 1) throw OrderMismatch("more coefficients than the truncation order allows");
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs_[k] = coeffs[k];
  }
  TruncSeries(std::size_t order, std::initializer_list<Rational> coeffs)
      : TruncSeries(order, std::span<const Rational>(coeffs.begin(), coeffs.size())) {}

  static TruncSeries constant(std::size_t order, const Rational& c) {
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  static TruncSeries one(std::size_t order) { return constant(order, 1); }

  /// c * t^power, or zero if power exceeds the order.
  static TruncSeries monomial(std::size_t order, std::size_t power, const Rational& c = 1) {
    TruncSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_integral() const {
    for (const auto& c : coeffs_)
      if (!swt::is_integral(c)) return false;
    return true;
  }

  /// Coefficients as integers; throws InvariantViolation on a fraction.
  std::vector<Integer> integer_coeffs() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_integer(c));
    return out;
  }

  /// Same series viewed at a smaller order.
  TruncSeries truncated(std::size_t order) const {
    if (order > this->order()) throw OrderMismatch("cannot raise the truncation order");
    return TruncSeries(order, std::span<const Rational>(coeffs_.data(), order + 1));
  }

  TruncSeries& operator+=(const TruncSeries& b) {
    check_orders(*this, b);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& b) {
    check_orders(*this, b);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
    return *this;
  }
  TruncSeries& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) { return a *= Rational(-1); }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      os << (first ? "" : " + ") << coeffs_[k];
      if (k > 0) os << "*t^" << k;
      first = false;
    }
    if (first) os << '0';
    os << " + O(t^" << coeffs_.size() << ')';
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const TruncSeries& a) { return os << a.str(); }

  static void check_orders(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
      throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()));
  }

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at the common order.
inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries::check_orders(a, b);
  const std::size_t n = a.order();
  TruncSeries c(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// exp(a) for a with zero constant term, from (exp a)' = a' exp a:
/// k e_k = sum_{j=1..k} j a_j e_{k-j}.
inline TruncSeries series_exp(const TruncSeries& a) {
  if (a[0] != 0) throw std::domain_error("series_exp needs a zero constant term");
  const std::size_t n = a.order();
  TruncSeries e(n);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (a[j] != 0) acc += Rational(static_cast<long long>(j)) * a[j] * e[k - j];
    e[k] = acc / static_cast<long long>(k);
  }
  return e;
}

/// The q with q*b == a up to the order; b must have a nonzero constant term.
inline TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries::check_orders(a, b);
  if (b[0] == 0) throw DivisionByZero("series_div: divisor has zero constant term");
  const std::size_t n = a.order();
  TruncSeries q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = a[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

}  // namespace swt

#endif  // SWT_SERIES_HPP
