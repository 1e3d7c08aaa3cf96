#pragma once

// Independent oracles and generators shared by the test binaries. Nothing in
// here calls into the code paths it is used to check.

#include "wigner/exact.hpp"
#include "wigner/params.hpp"

#include <functional>
#include <random>
#include <vector>

namespace wigner::testing {

// Catalan numbers by the convolution recurrence Cat(n+1) = sum Cat(i) Cat(n-i).
inline std::vector<Integer> catalan_by_recurrence(unsigned up_to) {
  std::vector<Integer> c(up_to + 1);
  c[0] = 1;
  for (unsigned n = 0; n < up_to; ++n) {
    Integer s;
    for (unsigned i = 0; i <= n; ++i) s += c[i] * c[n - i];
    c[n + 1] = s;
  }
  return c;
}

// Visits every composition of `total` into `parts` nonnegative parts.
inline void for_each_composition(unsigned total, unsigned parts,
                                 const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> buf(parts);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned idx, unsigned left) {
    if (idx + 1 == parts) {
      buf[idx] = left;
      visit(buf);
      return;
    }
    for (unsigned q = 0; q <= left; ++q) {
      buf[idx] = q;
      rec(idx + 1, left - q);
    }
  };
  if (parts == 0) {
    if (total == 0) visit(buf);
    return;
  }
  rec(0, total);
}

// sum over compositions of (2 p_1 + 1) prod Cat(p_i).
inline Integer marked_composition_sum(unsigned total, unsigned parts) {
  const auto cat = catalan_by_recurrence(total);
  Integer sum;
  for_each_composition(total, parts, [&](const std::vector<unsigned>& p) {
    Integer term = Integer(2 * p[0] + 1);
    for (unsigned q : p) term *= cat[q];
    sum += term;
  });
  return sum;
}

// Brute-force version of the cycle-family count: weight(p) multiplies the
// inner sum for cycle length p.
inline Integer brute_cycle_sum(unsigned l, const std::function<Integer(unsigned)>& weight) {
  Integer sum;
  for (unsigned p = 3; p <= l; ++p) sum += weight(p) * marked_composition_sum(l - p, 2 * p);
  return sum;
}

inline Integer central_binomial(unsigned m) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * m, m);
  return b;
}

// (4^l - C(2l, l)) / 2
inline Rational goe_reference(unsigned l) {
  Integer four;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, l);
  return Rational(four - central_binomial(l)) / 2;
}

// Valid parameter sets with small random rational entries.
class ParamGenerator {
 public:
  explicit ParamGenerator(unsigned seed) : rng_(seed) {}

  Rational positive_rational() {
    std::uniform_int_distribution<int> num(1, 12), den(1, 6);
    const int a = num(rng_);
    const int b = den(rng_);
    Rational q(a, b);
    q.canonicalize();
    return q;
  }

  EnsembleParams next() {
    EnsembleParams p;
    p.r = std::uniform_int_distribution<int>(0, 1)(rng_);
    p.sigma2 = positive_rational();
    p.s2 = std::uniform_int_distribution<int>(0, 4)(rng_) == 0 ? Rational(0) : positive_rational();
    // alpha = sigma2^2 (1 + extra), extra >= 0
    const int en = std::uniform_int_distribution<int>(0, 10)(rng_);
    const int ed = std::uniform_int_distribution<int>(1, 5)(rng_);
    Rational extra(en, ed);
    extra.canonicalize();
    p.alpha = p.sigma2 * p.sigma2 * (1 + extra);
    return p;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace wigner::testing
