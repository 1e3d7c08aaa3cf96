#pragma once

// Exact truncated power series over the rationals, and the Catalan
// generating-function identities built on them.

#include "wigner/exact.hpp"
#include "wigner/params.hpp"

#include <array>
#include <optional>
#include <vector>

namespace wigner {

// Coefficients of x^0 .. x^N. Every arithmetic operation requires equal
// truncation orders and yields a series of that same order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order);
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, unsigned order);
  // c x^power, zero if power > order.
  static TruncatedSeries monomial(unsigned power, unsigned order, const Rational& c = 1);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational& operator[](unsigned i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Drops coefficients above `order`; order must not exceed the current one.
  TruncatedSeries truncated(unsigned order) const;

  // Term-wise derivative. The x^N coefficient of the result would need x^{N+1}
  // of the input, so the result has order N-1. Order-0 input gives the zero
  // series of order 0.
  TruncatedSeries derivative() const;

  // Same coefficients with one replaced; used to inject faults in checkers.
  TruncatedSeries with_coeff(unsigned i, const Rational& c) const;

  bool is_zero() const;
  std::optional<unsigned> first_nonzero() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c);
// Throws std::domain_error when b has a zero constant term.
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries pow(const TruncatedSeries& a, unsigned e);

// T(x) = sum Cat(k) x^k up to x^N.
TruncatedSeries catalan_series(unsigned order);

// The closed forms of the four order-1/n generating series.
struct SComponents {
  TruncatedSeries s1;  // -x T^3 / (1 - xT^2)^3
  TruncatedSeries s2;  // a x^2 T^5 / (1 - xT^2)
  TruncatedSeries s3;  // s x T^3 / (1 - xT^2)
  TruncatedSeries s4;  // x^3 T^7 / (1 - xT^2)^3 + (2 + r) x^3 T^7 / (1 - xT^2)^2
};

SComponents s_components(unsigned order, const EnsembleParams& params);

// Reduced form: r x^3 T^7 / (1-xT^2)^2 + x T^3 / (1-xT^2) ((a-2) x T^2 + s - 1).
TruncatedSeries s_total(unsigned order, const EnsembleParams& params);

// w0 x T^4/(1-xT^2)^2 + w1 x^3 T^7/(1-xT^2)^2 + w2 x^2 T^5/(1-xT^2) + w3 x T^3/(1-xT^2),
// evaluated from the supplied T. The GUE cancellation has weights (-1, 2, 2, 1).
TruncatedSeries cancellation_combination(const TruncatedSeries& t, const std::array<Rational, 4>& weights);

bool verify_cancellation(unsigned order);

}  // namespace wigner
