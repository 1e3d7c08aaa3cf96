#pragma once

// Brute-force ground truth for the moment expansion.
//
// A closed word i_1 .. i_k (closing back to i_1) is stored in canonical form:
// letters are 1..v and each new letter is one more than the largest seen so
// far. Canonical words are in bijection with equivalence classes of words
// under relabeling of the alphabet.

#include "wigner/exact.hpp"
#include "wigner/params.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace wigner {

using Word = std::vector<unsigned>;

enum class CycleType { tree, self_loop, cycle_one_way, cycle_both_ways, other };

std::string_view to_string(CycleType t);
std::optional<CycleType> parse_cycle_type(std::string_view name);

// Traversal counts of one undirected edge {lo, hi}, lo <= hi. `forward` counts
// steps lo -> hi, `backward` steps hi -> lo. Self-loops put every step in
// `forward`.
struct EdgeTraversal {
  unsigned lo = 0;
  unsigned hi = 0;
  unsigned forward = 0;
  unsigned backward = 0;

  unsigned total() const { return forward + backward; }
  bool is_loop() const { return lo == hi; }
};

struct WalkClass {
  Word canonical_word;
  unsigned v = 0;
  unsigned e = 0;
  std::vector<EdgeTraversal> edges;  // sorted by (lo, hi)
  bool has_self_loop = false;
  CycleType cycle_type = CycleType::other;

  unsigned length() const { return static_cast<unsigned>(canonical_word.size()); }
  // Every edge traversed at least twice; necessary for a nonzero expectation
  // with centered entries.
  bool admissible() const;
};

// Letters 1-9 then a, b, c, ...
std::string format_word(std::span<const unsigned> word);
Word parse_word(std::string_view text);

// Relabels letters by order of first appearance.
Word canonicalize(std::span<const unsigned> word);

// `word` need not be canonical; the stored word is.
WalkClass classify_walk(std::span<const unsigned> word);

constexpr unsigned kMaxWalkLength = 12;

namespace detail {

template <class Visit>
void extend_canonical(Word& word, unsigned pos, unsigned used, Visit& visit) {
  if (pos == word.size()) {
    visit(std::span<const unsigned>(word));
    return;
  }
  for (unsigned letter = 1; letter <= used + 1; ++letter) {
    word[pos] = letter;
    extend_canonical(word, pos + 1, letter > used ? letter : used, visit);
  }
}

}  // namespace detail

// Depth-first walk over canonical words of length k that start with `prefix`
// (itself canonical). Memory is O(k).
template <class Visit>
void for_each_canonical_word(unsigned k, std::span<const unsigned> prefix, Visit&& visit) {
  if (k == 0 || prefix.size() > k) return;
  Word word(k);
  unsigned used = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    word[i] = prefix[i];
    if (prefix[i] > used) used = prefix[i];
  }
  if (prefix.empty()) {
    word[0] = 1;
    used = 1;
    detail::extend_canonical(word, 1, used, visit);
  } else {
    detail::extend_canonical(word, static_cast<unsigned>(prefix.size()), used, visit);
  }
}

template <class Visit>
void for_each_canonical_word(unsigned k, Visit&& visit) {
  for_each_canonical_word(k, std::span<const unsigned>(), visit);
}

// Canonical prefixes of the given depth; the subtrees below them partition the
// full enumeration and can be consumed independently.
std::vector<Word> canonical_prefixes(unsigned k, unsigned depth);

// Classified canonical words of length k. Throws std::invalid_argument for
// k == 0 or k > kMaxWalkLength.
std::vector<WalkClass> enumerate_canonical_words(unsigned k);

// Class counts keyed by (v, e, cycle_type).
class ClassCensus {
 public:
  explicit ClassCensus(unsigned k);

  unsigned length() const { return k_; }
  Integer total() const { return total_; }
  Integer count(unsigned v, unsigned e, std::optional<CycleType> filter = std::nullopt) const;
  const std::map<std::tuple<unsigned, unsigned, CycleType>, Integer>& table() const { return counts_; }

 private:
  unsigned k_;
  Integer total_;
  std::map<std::tuple<unsigned, unsigned, CycleType>, Integer> counts_;
};

Integer count_classes(unsigned k, unsigned v, unsigned e, std::optional<CycleType> filter = std::nullopt);

// Full moment tables of a concrete entry distribution.
//
// Off-diagonal entries: real case stores E[W^m]; complex case stores
// E[W^a conj(W)^b]. Diagonal entries are real in both cases. Tables cover
// all orders up to max_order().
class MomentModel {
 public:
  static MomentModel real(std::vector<Rational> offdiag, std::vector<Rational> diag);
  // mixed[a][b] = E[W^a conj(W)^b]; rows may have different lengths.
  static MomentModel complex(std::vector<std::vector<Rational>> mixed, std::vector<Rational> diag);

  // Real N(0,1) off-diagonal, N(0,2) diagonal.
  static MomentModel goe(unsigned max_order);
  // Complex Gaussian off-diagonal with E|W|^2 = 1, real N(0,1) diagonal.
  static MomentModel gue(unsigned max_order);
  // Off-diagonal +-sigma, diagonal +-s.
  static MomentModel rademacher(const Rational& sigma2, const Rational& s2, unsigned max_order);
  // Any valid parameters: off-diagonal modulus is 0 or sqrt(alpha)/sigma with
  // P(nonzero) = sigma^4/alpha (uniform phase in the complex case), diagonal
  // N(0, s2). Matches the custom sampler.
  static MomentModel three_point(const EnsembleParams& params, unsigned max_order);
  static MomentModel for_preset(Preset preset, const EnsembleParams& params, unsigned max_order);

  bool is_real() const { return is_real_; }
  unsigned max_order() const;

  // E[W^forward conj(W)^backward]; for real models E[W^(forward+backward)].
  // Throws std::out_of_range naming the missing order.
  Rational offdiag(unsigned forward, unsigned backward) const;
  Rational diag(unsigned m) const;

  // (r, sigma2, s2, alpha) read off the tables.
  EnsembleParams params() const;

  // Throws std::invalid_argument if first moments are nonzero or, for
  // complex models, E[W^2] != 0.
  void validate() const;

 private:
  bool is_real_ = true;
  std::vector<Rational> real_offdiag_;
  std::vector<std::vector<Rational>> mixed_;
  std::vector<Rational> diag_;
};

// Common expectation E[W_c] of the words in a class.
Rational expected_word_product(const WalkClass& cls, const MomentModel& model);

// sum_c E[W_c] grouped by vertex count v (index v, 0..k).
struct MomentPolynomial {
  unsigned k = 0;
  Rational sigma2 = 1;
  std::vector<Rational> by_vertices;

  // sum_v n(n-1)..(n-v+1) by_vertices[v] / (n^{1+k/2} sigma^k)
  Rational evaluate(unsigned long n) const;
};

// Throws std::invalid_argument for odd k.
MomentPolynomial moment_polynomial(unsigned k, const MomentModel& model);

// E[tr(X^k)/n] for X = W/(sigma sqrt(n)), exactly. k must be even; sigma2 is
// taken from the model.
Rational exact_moment(unsigned k, unsigned long n, const MomentModel& model);

}  // namespace wigner
