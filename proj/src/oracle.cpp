#include "wigner/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace wigner {

namespace {

void require_walk_length(unsigned k) {
  if (k == 0 || k > kMaxWalkLength)
    throw std::invalid_argument("walk length k=" + std::to_string(k) + " outside supported range 1.." +
                                std::to_string(kMaxWalkLength));
}

// Edges of a unicyclic graph left after repeatedly stripping leaves.
std::vector<bool> cycle_edges(const std::vector<EdgeTraversal>& edges, unsigned v) {
  std::vector<unsigned> degree(v + 1, 0);
  for (const auto& ed : edges) {
    ++degree[ed.lo];
    ++degree[ed.hi];
  }
  std::vector<bool> alive(edges.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i]) continue;
      if (degree[edges[i].lo] == 1 || degree[edges[i].hi] == 1) {
        alive[i] = false;
        --degree[edges[i].lo];
        --degree[edges[i].hi];
        changed = true;
      }
    }
  }
  return alive;
}

Rational double_factorial(unsigned m) {
  Integer out = 1;
  for (unsigned i = m; i > 1; i -= 2) out *= i;
  return Rational(out);
}

// Moments of N(0, var): E[X^m] = (m-1)!! var^{m/2} for even m.
std::vector<Rational> gaussian_moments(const Rational& var, unsigned max_order) {
  std::vector<Rational> m(max_order + 1);
  Rational power = 1;
  for (unsigned i = 0; i <= max_order; ++i) {
    if (i % 2 == 0) {
      m[i] = i == 0 ? Rational(1) : double_factorial(i - 1) * power;
      power *= var;
    }
  }
  return m;
}

// Symmetric distribution with E[X^{2j}] = base * ratio^j for j >= 1.
std::vector<Rational> geometric_even_moments(const Rational& base, const Rational& ratio, unsigned max_order) {
  std::vector<Rational> m(max_order + 1);
  m[0] = 1;
  Rational power = ratio;
  for (unsigned i = 2; i <= max_order; i += 2) {
    m[i] = base * power;
    power *= ratio;
  }
  return m;
}

}  // namespace

std::string_view to_string(CycleType t) {
  switch (t) {
    case CycleType::tree: return "tree";
    case CycleType::self_loop: return "self-loop";
    case CycleType::cycle_one_way: return "cycle-one-way";
    case CycleType::cycle_both_ways: return "cycle-both-ways";
    case CycleType::other: return "other";
  }
  return "other";
}

std::optional<CycleType> parse_cycle_type(std::string_view name) {
  for (auto t : {CycleType::tree, CycleType::self_loop, CycleType::cycle_one_way, CycleType::cycle_both_ways,
                 CycleType::other})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

bool WalkClass::admissible() const {
  return std::all_of(edges.begin(), edges.end(), [](const EdgeTraversal& ed) { return ed.total() >= 2; });
}

std::string format_word(std::span<const unsigned> word) {
  std::string s;
  s.reserve(word.size());
  for (unsigned letter : word) s.push_back(letter < 10 ? static_cast<char>('0' + letter) : static_cast<char>('a' + letter - 10));
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  for (char c : text) {
    if (c >= '1' && c <= '9')
      w.push_back(static_cast<unsigned>(c - '0'));
    else if (c >= 'a' && c <= 'z')
      w.push_back(static_cast<unsigned>(c - 'a' + 10));
    else
      throw std::invalid_argument("invalid letter '" + std::string(1, c) + "' in word");
  }
  return w;
}

Word canonicalize(std::span<const unsigned> word) {
  std::map<unsigned, unsigned> relabel;
  Word out;
  out.reserve(word.size());
  for (unsigned letter : word) {
    auto [it, inserted] = relabel.try_emplace(letter, static_cast<unsigned>(relabel.size() + 1));
    out.push_back(it->second);
  }
  return out;
}

WalkClass classify_walk(std::span<const unsigned> word) {
  WalkClass c;
  c.canonical_word = canonicalize(word);
  const auto& w = c.canonical_word;
  const std::size_t k = w.size();
  for (unsigned letter : w) c.v = std::max(c.v, letter);

  for (std::size_t j = 0; j < k; ++j) {
    const unsigned from = w[j];
    const unsigned to = w[(j + 1) % k];
    const unsigned lo = std::min(from, to);
    const unsigned hi = std::max(from, to);
    auto it = std::find_if(c.edges.begin(), c.edges.end(),
                           [&](const EdgeTraversal& ed) { return ed.lo == lo && ed.hi == hi; });
    if (it == c.edges.end()) {
      c.edges.push_back({lo, hi, 0, 0});
      it = c.edges.end() - 1;
    }
    if (from <= to)
      ++it->forward;
    else
      ++it->backward;
  }
  std::sort(c.edges.begin(), c.edges.end(),
            [](const EdgeTraversal& a, const EdgeTraversal& b) { return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi); });
  c.e = static_cast<unsigned>(c.edges.size());
  c.has_self_loop = std::any_of(c.edges.begin(), c.edges.end(), [](const EdgeTraversal& ed) { return ed.is_loop(); });

  if (c.e + 1 == c.v) {
    c.cycle_type = CycleType::tree;
  } else if (c.has_self_loop) {
    c.cycle_type = CycleType::self_loop;
  } else if (c.e == c.v) {
    const auto on_cycle = cycle_edges(c.edges, c.v);
    bool one_way = true;
    bool both_ways = true;
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      if (!on_cycle[i]) continue;
      const auto& ed = c.edges[i];
      one_way = one_way && ed.total() == 2 && (ed.forward == 0 || ed.backward == 0);
      both_ways = both_ways && ed.forward == 1 && ed.backward == 1;
    }
    c.cycle_type = one_way ? CycleType::cycle_one_way : both_ways ? CycleType::cycle_both_ways : CycleType::other;
  } else {
    c.cycle_type = CycleType::other;
  }
  return c;
}

std::vector<Word> canonical_prefixes(unsigned k, unsigned depth) {
  require_walk_length(k);
  depth = std::clamp(depth, 1u, k);
  std::vector<Word> out;
  for_each_canonical_word(depth, [&](std::span<const unsigned> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

std::vector<WalkClass> enumerate_canonical_words(unsigned k) {
  require_walk_length(k);
  std::vector<WalkClass> out;
  for_each_canonical_word(k, [&](std::span<const unsigned> w) { out.push_back(classify_walk(w)); });
  return out;
}

ClassCensus::ClassCensus(unsigned k) : k_(k) {
  require_walk_length(k);
  std::map<std::tuple<unsigned, unsigned, CycleType>, unsigned long> tally;
  unsigned long total = 0;
  for_each_canonical_word(k, [&](std::span<const unsigned> w) {
    const auto c = classify_walk(w);
    ++tally[{c.v, c.e, c.cycle_type}];
    ++total;
  });
  total_ = total;
  for (const auto& [key, n] : tally) counts_[key] = n;
}

Integer ClassCensus::count(unsigned v, unsigned e, std::optional<CycleType> filter) const {
  Integer sum;
  for (const auto& [key, n] : counts_) {
    const auto& [kv, ke, kt] = key;
    if (kv == v && ke == e && (!filter || *filter == kt)) sum += n;
  }
  return sum;
}

Integer count_classes(unsigned k, unsigned v, unsigned e, std::optional<CycleType> filter) {
  return ClassCensus(k).count(v, e, filter);
}

MomentModel MomentModel::real(std::vector<Rational> offdiag, std::vector<Rational> diag) {
  MomentModel m;
  m.is_real_ = true;
  m.real_offdiag_ = std::move(offdiag);
  m.diag_ = std::move(diag);
  return m;
}

MomentModel MomentModel::complex(std::vector<std::vector<Rational>> mixed, std::vector<Rational> diag) {
  MomentModel m;
  m.is_real_ = false;
  m.mixed_ = std::move(mixed);
  m.diag_ = std::move(diag);
  return m;
}

MomentModel MomentModel::goe(unsigned max_order) {
  return real(gaussian_moments(1, max_order), gaussian_moments(2, max_order));
}

MomentModel MomentModel::gue(unsigned max_order) {
  std::vector<std::vector<Rational>> mixed(max_order + 1);
  Integer fact = 1;
  for (unsigned a = 0; a <= max_order; ++a) {
    if (a > 0) fact *= a;
    mixed[a].resize(max_order - a + 1);
    if (a <= max_order - a) mixed[a][a] = Rational(fact);
  }
  return complex(std::move(mixed), gaussian_moments(1, max_order));
}

MomentModel MomentModel::rademacher(const Rational& sigma2, const Rational& s2, unsigned max_order) {
  return real(geometric_even_moments(1, sigma2, max_order), geometric_even_moments(1, s2, max_order));
}

MomentModel MomentModel::three_point(const EnsembleParams& params, unsigned max_order) {
  params.validate();
  const Rational p = params.sigma2 * params.sigma2 / params.alpha;
  const Rational c2 = params.alpha / params.sigma2;
  auto diag = gaussian_moments(params.s2, max_order);
  if (params.is_real()) return real(geometric_even_moments(p, c2, max_order), std::move(diag));

  std::vector<std::vector<Rational>> mixed(max_order + 1);
  Rational power = 1;
  for (unsigned a = 0; a <= max_order; ++a) {
    mixed[a].resize(max_order - a + 1);
    if (a <= max_order - a) mixed[a][a] = a == 0 ? Rational(1) : p * power;
    power *= c2;
  }
  return complex(std::move(mixed), std::move(diag));
}

MomentModel MomentModel::for_preset(Preset preset, const EnsembleParams& params, unsigned max_order) {
  switch (preset) {
    case Preset::goe: return goe(max_order);
    case Preset::gue: return gue(max_order);
    case Preset::rademacher: return rademacher(params.sigma2, params.s2, max_order);
    case Preset::custom: break;
  }
  return three_point(params, max_order);
}

unsigned MomentModel::max_order() const {
  std::size_t n = diag_.size();
  if (is_real_) {
    n = std::min(n, real_offdiag_.size());
  } else {
    std::size_t full = 0;
    while (true) {
      bool covered = true;
      for (std::size_t a = 0; a <= full && covered; ++a) covered = a < mixed_.size() && full - a < mixed_[a].size();
      if (!covered) break;
      ++full;
    }
    n = std::min(n, full);
  }
  return n == 0 ? 0 : static_cast<unsigned>(n - 1);
}

Rational MomentModel::offdiag(unsigned forward, unsigned backward) const {
  if (is_real_) {
    const unsigned m = forward + backward;
    if (m >= real_offdiag_.size())
      throw std::out_of_range("moment table lacks off-diagonal E[W^" + std::to_string(m) + "] (order " +
                              std::to_string(m) + ")");
    return real_offdiag_[m];
  }
  if (forward >= mixed_.size() || backward >= mixed_[forward].size())
    throw std::out_of_range("moment table lacks off-diagonal E[W^" + std::to_string(forward) + " conj(W)^" +
                            std::to_string(backward) + "] (order " + std::to_string(forward + backward) + ")");
  return mixed_[forward][backward];
}

Rational MomentModel::diag(unsigned m) const {
  if (m >= diag_.size())
    throw std::out_of_range("moment table lacks diagonal E[W_ii^" + std::to_string(m) + "] (order " +
                            std::to_string(m) + ")");
  return diag_[m];
}

EnsembleParams MomentModel::params() const {
  EnsembleParams p;
  p.r = is_real_ ? 1 : 0;
  p.sigma2 = offdiag(1, 1);
  p.alpha = offdiag(2, 2);
  p.s2 = diag(2);
  return p;
}

void MomentModel::validate() const {
  if (offdiag(1, 0) != 0 || offdiag(0, 1) != 0) throw std::invalid_argument("off-diagonal entries must be centered");
  if (diag(1) != 0) throw std::invalid_argument("diagonal entries must be centered");
  if (!is_real_ && offdiag(2, 0) != 0) throw std::invalid_argument("complex model requires E[W^2] = 0");
  params().validate();
}

Rational expected_word_product(const WalkClass& cls, const MomentModel& model) {
  if (!cls.admissible()) return 0;
  Rational out = 1;
  for (const auto& ed : cls.edges) {
    out *= ed.is_loop() ? model.diag(ed.total()) : model.offdiag(ed.forward, ed.backward);
    if (out == 0) return out;
  }
  return out;
}

Rational MomentPolynomial::evaluate(unsigned long n) const {
  if (n == 0) throw std::invalid_argument("matrix size n must be >= 1");
  Rational sum;
  Integer falling = 1;
  for (unsigned v = 1; v < by_vertices.size(); ++v) {
    falling *= Integer(n) - Integer(v - 1);
    if (falling == 0) break;
    sum += Rational(falling) * by_vertices[v];
  }
  Integer n_power;
  mpz_ui_pow_ui(n_power.get_mpz_t(), n, 1 + k / 2);
  Rational sigma_k = 1;
  for (unsigned i = 0; i < k / 2; ++i) sigma_k *= sigma2;
  return sum / (Rational(n_power) * sigma_k);
}

MomentPolynomial moment_polynomial(unsigned k, const MomentModel& model) {
  if (k % 2 != 0)
    throw std::invalid_argument("exact moments are supported for even k only (got k=" + std::to_string(k) + ")");
  require_walk_length(k);
  MomentPolynomial poly;
  poly.k = k;
  poly.sigma2 = model.offdiag(1, 1);
  poly.by_vertices.assign(k + 1, Rational(0));
  for_each_canonical_word(k, [&](std::span<const unsigned> w) {
    const auto c = classify_walk(w);
    if (!c.admissible()) return;
    poly.by_vertices[c.v] += expected_word_product(c, model);
  });
  return poly;
}

Rational exact_moment(unsigned k, unsigned long n, const MomentModel& model) {
  return moment_polynomial(k, model).evaluate(n);
}

}  // namespace wigner
