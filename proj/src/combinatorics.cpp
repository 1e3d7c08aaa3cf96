#include "wigner/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace wigner {

namespace {

std::vector<Integer> catalan_table(unsigned up_to) {
  std::vector<Integer> t;
  t.reserve(up_to + 1);
  for (unsigned i = 0; i <= up_to; ++i) t.push_back(catalan(i));
  return t;
}

// (2p+1) Cat(p): rooted plane trees with p edges and a marked corner.
std::vector<Integer> marked_tree_table(const std::vector<Integer>& cat) {
  std::vector<Integer> t(cat.size());
  for (std::size_t p = 0; p < cat.size(); ++p) t[p] = Integer(2 * p + 1) * cat[p];
  return t;
}

// Sum over compositions (l_1..l_p, r_1..r_p) of `total` into 2p parts of
// (2 l_1 + 1) prod Cat(l_i) Cat(r_i). The 2p-fold nested sum is evaluated one
// part at a time: acc[j] holds the partial sum over the parts consumed so far
// with those parts adding to j.
Integer cycle_decoration_sum(unsigned cycle_length, unsigned total, const std::vector<Integer>& cat,
                             const std::vector<Integer>& marked) {
  std::vector<Integer> acc(marked.begin(), marked.begin() + total + 1);
  for (unsigned part = 1; part < 2 * cycle_length; ++part) {
    std::vector<Integer> next(total + 1);
    for (unsigned j = 0; j <= total; ++j) {
      if (acc[j] == 0) continue;
      for (unsigned q = 0; j + q <= total; ++q) next[j + q] += acc[j] * cat[q];
    }
    acc = std::move(next);
  }
  return acc[total];
}

}  // namespace

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer catalan(unsigned k) {
  Integer c = binomial(2 * k, k);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  return c;
}

Integer semicircle_moment(unsigned k) { return k % 2 == 0 ? catalan(k / 2) : Integer(0); }

Integer count_four_visit_trees(unsigned l) {
  if (l < 2) return 0;
  const unsigned m = l - 2;
  const auto cat = catalan_table(m);
  Integer sum;
  for (unsigned p1 = 0; p1 <= m; ++p1) {
    const Integer w1 = Integer(2 * p1 + 1) * cat[p1];
    for (unsigned p2 = 0; p1 + p2 <= m; ++p2) {
      const Integer w12 = w1 * cat[p2];
      for (unsigned p3 = 0; p1 + p2 + p3 <= m; ++p3) {
        const unsigned p4 = m - p1 - p2 - p3;
        sum += w12 * cat[p3] * cat[p4];
      }
    }
  }
  return sum;
}

Integer count_self_loop_walks(unsigned l) {
  if (l < 1) return 0;
  const unsigned m = l - 1;
  const auto cat = catalan_table(m);
  Integer sum;
  for (unsigned p1 = 0; p1 <= m; ++p1) sum += Integer(2 * p1 + 1) * cat[p1] * cat[m - p1];
  return sum;
}

Integer count_one_way_cycle_walks(unsigned l) {
  if (l < 3) return 0;
  const auto cat = catalan_table(l);
  const auto marked = marked_tree_table(cat);
  Integer sum;
  for (unsigned p = 3; p <= l; ++p) sum += cycle_decoration_sum(p, l - p, cat, marked);
  return sum;
}

Integer count_both_way_cycle_walks(unsigned l) {
  if (l < 3) return 0;
  const auto cat = catalan_table(l);
  const auto marked = marked_tree_table(cat);
  Integer sum;
  for (unsigned p = 3; p <= l; ++p) sum += Integer(p) * cycle_decoration_sum(p, l - p, cat, marked);
  return sum;
}

Integer term1_coeff(unsigned l) {
  Integer c = catalan(l) * Integer(l) * Integer(l + 1);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
  return -c;
}

Rational term2_coeff(unsigned l, const EnsembleParams& params) {
  return params.kurtosis_ratio() * Rational(count_four_visit_trees(l));
}

Rational term3_coeff(unsigned l, const EnsembleParams& params) {
  return params.diagonal_ratio() * Rational(count_self_loop_walks(l));
}

Rational term4_coeff(unsigned l, const EnsembleParams& params) {
  Rational out = Rational(count_both_way_cycle_walks(l));
  if (params.r != 0) out += Rational(params.r) * Rational(count_one_way_cycle_walks(l));
  return out;
}

ExpansionTerm order_one_coeff(unsigned l, const EnsembleParams& params) {
  ExpansionTerm t;
  t.l = l;
  t.c1 = Rational(term1_coeff(l));
  t.c2 = term2_coeff(l, params);
  t.c3 = term3_coeff(l, params);
  t.c4 = term4_coeff(l, params);
  t.total = t.c1 + t.c2 + t.c3 + t.c4;
  return t;
}

Rational nu_moment(unsigned k, const EnsembleParams& params) {
  if (k % 2 != 0) return 0;
  const unsigned l = k / 2;
  const Rational a = params.kurtosis_ratio();
  const Rational s = params.diagonal_ratio();
  const Rational r = params.r;

  // Arcsine weight 1/(pi sqrt(4-x^2)) on [-2,2] has 2m-th moment C(2m, m).
  // Atoms r/4 at +-2 contribute (r/4)(2^k + (-2)^k) = (r/2) 4^l.
  Integer four_l;
  mpz_ui_pow_ui(four_l.get_mpz_t(), 4, l);
  Rational out = (r / 2) * Rational(four_l - binomial(2 * l, l));

  const Rational c4 = a - (2 + r);
  const Rational c2 = s - 4 * a + 7 + 3 * r;
  const Rational c0 = 2 * (a - s - 1);
  out += (c4 * Rational(binomial(2 * l + 4, l + 2)) + c2 * Rational(binomial(2 * l + 2, l + 1)) +
          c0 * Rational(binomial(2 * l, l))) /
         2;
  return out;
}

Rational expected_moment_expansion(unsigned k, unsigned long n, const EnsembleParams& params) {
  if (n < 1) throw std::invalid_argument("expected_moment_expansion: n must be >= 1");
  return Rational(semicircle_moment(k)) + nu_moment(k, params) / Rational(Integer(n));
}

}  // namespace wigner
