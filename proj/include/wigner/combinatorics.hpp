#pragma once

// Closed-form coefficients of the 1/n expansion of E[tr(X^k)/n].
//
// All arithmetic is exact. Coefficients are returned with the 1/n factor
// stripped, so for k = 2l
//
//   m_{2l}(n) = Cat(l) + (term1 + term2 + term3 + term4) / n + o(1/n).

#include "wigner/exact.hpp"
#include "wigner/params.hpp"

namespace wigner {

Integer binomial(unsigned n, unsigned k);
Integer catalan(unsigned k);

// Cat(k/2) for even k, 0 for odd k.
Integer semicircle_moment(unsigned k);

// Class counts of the four order-1/n walk families at length 2l. These are
// the combinatorial weights only; ensemble-dependent factors come on top.

// Trees with l-1 edges, one edge visited four times.
Integer count_four_visit_trees(unsigned l);
// Trees with l-1 edges plus one self-loop.
Integer count_self_loop_walks(unsigned l);
// Unicyclic graphs, cycle edges all traversed twice in the same direction.
Integer count_one_way_cycle_walks(unsigned l);
// Unicyclic graphs, cycle edges traversed once in each direction.
Integer count_both_way_cycle_walks(unsigned l);

// -l(l+1)/2 Cat(l): the falling-factorial correction on tree classes.
Integer term1_coeff(unsigned l);
Rational term2_coeff(unsigned l, const EnsembleParams& params);
Rational term3_coeff(unsigned l, const EnsembleParams& params);
Rational term4_coeff(unsigned l, const EnsembleParams& params);

struct ExpansionTerm {
  unsigned l = 0;
  Rational c1, c2, c3, c4;
  Rational total;
};

ExpansionTerm order_one_coeff(unsigned l, const EnsembleParams& params);

// Integral of x^k against the correction measure, from its density and atoms.
Rational nu_moment(unsigned k, const EnsembleParams& params);

// semicircle_moment(k) + nu_moment(k) / n. Requires n >= 1.
Rational expected_moment_expansion(unsigned k, unsigned long n, const EnsembleParams& params);

}  // namespace wigner
