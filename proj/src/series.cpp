#include "wigner/series.hpp"

#include "wigner/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace wigner {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(op) + ": truncation orders differ (" +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
}

// Shared subexpressions of the generating-series closed forms.
struct CatalanForms {
  TruncatedSeries t;
  TruncatedSeries x;
  TruncatedSeries inv_denom;  // 1 / (1 - x T^2)

  explicit CatalanForms(TruncatedSeries cat)
      : t(std::move(cat)),
        x(TruncatedSeries::monomial(1, t.order())),
        inv_denom(TruncatedSeries::constant(1, t.order()) /
                  (TruncatedSeries::constant(1, t.order()) - x * t * t)) {}
};

}  // namespace

TruncatedSeries::TruncatedSeries(unsigned order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: need at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, unsigned order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(unsigned power, unsigned order, const Rational& c) {
  TruncatedSeries s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
  if (order > this->order())
    throw std::invalid_argument("truncated: cannot raise order " + std::to_string(this->order()) +
                                " to " + std::to_string(order));
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return TruncatedSeries(0u);
  std::vector<Rational> d(order());
  for (unsigned i = 1; i <= order(); ++i) d[i - 1] = coeffs_[i] * i;
  return TruncatedSeries(std::move(d));
}

TruncatedSeries TruncatedSeries::with_coeff(unsigned i, const Rational& c) const {
  TruncatedSeries s = *this;
  s.coeffs_.at(i) = c;
  return s;
}

bool TruncatedSeries::is_zero() const { return !first_nonzero().has_value(); }

std::optional<unsigned> TruncatedSeries::first_nonzero() const {
  for (unsigned i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return std::nullopt;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "series_add");
  std::vector<Rational> c(a.order() + 1);
  for (unsigned i = 0; i <= a.order(); ++i) c[i] = a[i] + b[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "series_sub");
  std::vector<Rational> c(a.order() + 1);
  for (unsigned i = 0; i <= a.order(); ++i) c[i] = a[i] - b[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a) { return Rational(-1) * a; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "series_mul");
  const unsigned n = a.order();
  std::vector<Rational> c(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const Rational& k, const TruncatedSeries& a) {
  std::vector<Rational> c(a.order() + 1);
  for (unsigned i = 0; i <= a.order(); ++i) c[i] = k * a[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const Rational& k) { return k * a; }

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "series_div");
  if (b[0] == 0) throw std::domain_error("series_div: divisor has zero constant term (not invertible)");
  const unsigned n = a.order();
  std::vector<Rational> q(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    Rational acc = a[i];
    for (unsigned j = 1; j <= i; ++j) acc -= b[j] * q[i - j];
    q[i] = acc / b[0];
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries pow(const TruncatedSeries& a, unsigned e) {
  TruncatedSeries out = TruncatedSeries::constant(1, a.order());
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

TruncatedSeries catalan_series(unsigned order) {
  std::vector<Rational> c(order + 1);
  for (unsigned k = 0; k <= order; ++k) c[k] = Rational(catalan(k));
  return TruncatedSeries(std::move(c));
}

SComponents s_components(unsigned order, const EnsembleParams& params) {
  const CatalanForms f(catalan_series(order));
  const auto& x = f.x;
  const auto t3 = pow(f.t, 3);
  const auto t5 = t3 * f.t * f.t;
  const auto t7 = t5 * f.t * f.t;
  const auto d2 = f.inv_denom * f.inv_denom;
  const auto d3 = d2 * f.inv_denom;
  const auto x3t7 = pow(x, 3) * t7;
  return {
      -(x * t3 * d3),
      params.kurtosis_ratio() * (x * x * t5 * f.inv_denom),
      params.diagonal_ratio() * (x * t3 * f.inv_denom),
      x3t7 * d3 + Rational(2 + params.r) * (x3t7 * d2),
  };
}

TruncatedSeries s_total(unsigned order, const EnsembleParams& params) {
  const CatalanForms f(catalan_series(order));
  const auto& x = f.x;
  const auto t2 = f.t * f.t;
  const auto t3 = t2 * f.t;
  const auto t7 = t3 * t3 * f.t;
  const auto cycle = Rational(params.r) * (pow(x, 3) * t7 * f.inv_denom * f.inv_denom);
  const auto bracket = Rational(params.kurtosis_ratio() - 2) * (x * t2) +
                       TruncatedSeries::constant(Rational(params.diagonal_ratio() - 1), order);
  return cycle + x * t3 * f.inv_denom * bracket;
}

TruncatedSeries cancellation_combination(const TruncatedSeries& t, const std::array<Rational, 4>& weights) {
  const CatalanForms f(t);
  const auto& x = f.x;
  const auto t3 = pow(f.t, 3);
  const auto t4 = t3 * f.t;
  const auto t5 = t4 * f.t;
  const auto t7 = t5 * f.t * f.t;
  const auto d = f.inv_denom;
  const auto d2 = d * d;
  return weights[0] * (x * t4 * d2) + weights[1] * (pow(x, 3) * t7 * d2) +
         weights[2] * (x * x * t5 * d) + weights[3] * (x * t3 * d);
}

bool verify_cancellation(unsigned order) {
  return cancellation_combination(catalan_series(order), {-1, 2, 2, 1}).is_zero();
}

}  // namespace wigner
