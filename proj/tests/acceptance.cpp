// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "wigner/combinatorics.hpp"
#include "wigner/measure.hpp"
#include "wigner/montecarlo.hpp"
#include "wigner/oracle.hpp"
#include "wigner/series.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace wigner;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

int failures = 0;
std::set<int> selected;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  if (!selected.empty() && !selected.count(id)) return;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.passed && elapsed > budget_seconds) {
    out.passed = false;
    out.detail = "runtime " + std::to_string(elapsed) + " s exceeds budget " + std::to_string(budget_seconds) + " s";
  }
  if (!out.passed) ++failures;
  std::printf("[%s] %d. %s (%.2f s / %.0f s)%s%s\n", out.passed ? "PASS" : "FAIL", id, title, elapsed,
              budget_seconds, out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

std::vector<EnsembleParams> preset_params() {
  return {EnsembleParams::goe(), EnsembleParams::gue(), EnsembleParams::rademacher(1, 1),
          EnsembleParams::rademacher(2, Rational(1, 2)), EnsembleParams{1, 2, 3, 10}, EnsembleParams{0, 1, 2, 5}};
}

MomentModel model_for(const EnsembleParams& p, unsigned order) {
  if (p == EnsembleParams::goe()) return MomentModel::goe(order);
  if (p == EnsembleParams::gue()) return MomentModel::gue(order);
  if (p.is_real() && p.alpha == p.sigma2 * p.sigma2) return MomentModel::rademacher(p.sigma2, p.s2, order);
  return MomentModel::three_point(p, order);
}

std::string at(const char* what, unsigned index) { return std::string(what) + " at " + std::to_string(index); }

}  // namespace

// Optional arguments select criteria by number; default runs all.
int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
  criterion(1, "GUE nullity: nu_2l = 0 and S(x) = 0 for l <= 20", 1.0, [] {
    Outcome o;
    const auto gue = EnsembleParams::gue();
    for (unsigned l = 0; l <= 20; ++l) o.require(nu_moment(2 * l, gue) == 0, at("nu moment l", l));
    const auto s = s_total(20, gue);
    if (auto i = s.first_nonzero()) o.require(false, at("S coefficient", *i));
    return o;
  });

  criterion(2, "GOE closed form: nu_2l = (4^l - C(2l,l))/2 for l <= 20", 1.0, [] {
    Outcome o;
    const auto goe = EnsembleParams::goe();
    for (unsigned l = 0; l <= 20; ++l)
      o.require(nu_moment(2 * l, goe) == wigner::testing::goe_reference(l), at("l", l));
    const std::vector<int> first{0, 1, 5, 22, 93};
    for (unsigned l = 0; l < first.size(); ++l) o.require(nu_moment(2 * l, goe) == first[l], at("listed value l", l));
    return o;
  });

  criterion(3, "three-way exact agreement, 50 random parameter sets, l <= 15", 10.0, [] {
    Outcome o;
    wigner::testing::ParamGenerator gen(50);
    for (int trial = 0; trial < 50; ++trial) {
      const auto p = gen.next();
      p.validate();
      const auto s = s_total(15, p);
      for (unsigned l = 0; l <= 15; ++l) {
        const Rational total = order_one_coeff(l, p).total;
        o.require(total == s[l] && total == nu_moment(2 * l, p), describe(p) + " " + at("l", l));
      }
    }
    return o;
  });

  criterion(4, "series identities at truncation order 40", 5.0, [] {
    Outcome o;
    const unsigned n = 40;
    const auto t = catalan_series(n);
    const auto one = TruncatedSeries::constant(1, n);
    const auto x = TruncatedSeries::monomial(1, n);
    const auto d = one - x * t * t;
    o.require((t - one - x * t * t).is_zero(), "T = 1 + xT^2");
    o.require(t * (one - x * t) == one, "T (1 - xT) = 1");
    o.require(t.derivative() * d.truncated(n - 1) == pow(t, 3).truncated(n - 1), "T' = T^3/(1 - xT^2)");
    const auto inv = one / d;
    const auto t5 = pow(t, 5);
    o.require(t.derivative().derivative() ==
                  (Rational(2) * t5 * inv * inv + Rational(2) * t5 * inv * inv * inv).truncated(n - 2),
              "T'' formula");
    o.require(verify_cancellation(n), "GUE cancellation identity");
    return o;
  });

  criterion(5, "enumeration counts match the four closed-form families, k <= 10", 120.0, [] {
    Outcome o;
    for (unsigned l = 1; l <= 5; ++l) {
      const ClassCensus c(2 * l);
      o.require(c.count(l + 1, l) == catalan(l), at("trees l", l));
      o.require(c.count(l, l - 1) == count_four_visit_trees(l), at("four-visit trees l", l));
      o.require(c.count(l, l, CycleType::self_loop) == count_self_loop_walks(l), at("self-loop l", l));
      o.require(c.count(l, l, CycleType::cycle_one_way) == count_one_way_cycle_walks(l), at("one-way l", l));
      o.require(c.count(l, l, CycleType::cycle_both_ways) == count_both_way_cycle_walks(l), at("both-ways l", l));
    }
    // Every admissible class with v = e is one of the three kinds.
    for (unsigned l = 1; l <= 5; ++l) {
      Integer unclassified = 0;
      for_each_canonical_word(2 * l, [&](std::span<const unsigned> w) {
        const auto c = classify_walk(w);
        if (c.v == l && c.e == l && c.admissible() && c.cycle_type == CycleType::other) ++unclassified;
      });
      o.require(unclassified == 0, at("unclassified admissible class l", l));
    }
    return o;
  });

  criterion(6, "exact finite-n moments and 1/n residual decay, k <= 8", 120.0, [] {
    Outcome o;
    auto inv = [](unsigned long n) -> Rational { return Rational(1) / Rational(Integer(n)); };
    for (const auto& p : preset_params()) {
      const auto m = model_for(p, 8);
      o.require(m.params() == p, "model parameters " + describe(p));
      const auto poly2 = moment_polynomial(2, m);
      for (unsigned long n : {1ul, 5ul, 64ul, 1000ul})
        o.require(poly2.evaluate(n) == 1 + (p.diagonal_ratio() - 1) * inv(n), "m2(n) " + describe(p));
    }
    const auto gue4 = moment_polynomial(4, MomentModel::gue(4));
    const auto goe4 = moment_polynomial(4, MomentModel::goe(4));
    for (unsigned long n : {1ul, 2ul, 10ul, 128ul, 12345ul}) {
      o.require(gue4.evaluate(n) == 2 + inv(n) * inv(n), at("GUE m4 n", n));
      o.require(goe4.evaluate(n) == 2 + 5 * inv(n) + 5 * inv(n) * inv(n), at("GOE m4 n", n));
    }
    for (const auto& p : preset_params()) {
      const auto m = model_for(p, 8);
      for (unsigned k = 2; k <= 8; k += 2) {
        const auto poly = moment_polynomial(k, m);
        Rational prev;
        for (unsigned long n : {100ul, 1000ul, 10000ul}) {
          Rational resid = abs(Rational(Integer(n)) * (poly.evaluate(n) - Rational(semicircle_moment(k))) -
                               nu_moment(k, p));
          if (n > 100) o.require(resid * 8 <= prev, describe(p) + " " + at("k", k));
          prev = resid;
        }
      }
    }
    return o;
  });

  criterion(7, "Monte Carlo: GOE/GUE n=128, 2e4 samples, k in {2,4,6}; Richardson 64/128", 600.0, [] {
    Outcome o;
    const std::size_t samples = 20000;
    const std::uint64_t seed = 20140417;
    std::ostringstream report;
    for (const auto& sampler : {EnsembleSampler::goe(), EnsembleSampler::gue()}) {
      const auto& p = sampler.params();
      const auto model = model_for(p, 6);
      const auto fine = sample_moments(128, 6, samples, sampler, seed);
      const auto coarse = sample_moments(64, 6, samples, sampler, seed);
      for (unsigned k : {2u, 4u, 6u}) {
        const auto est = correction_from_samples(fine, k, p);
        const double target =
            to_double(Rational(128) * (exact_moment(k, 128, model) - Rational(semicircle_moment(k))));
        const double z = est.z_score(target);
        const auto rich = richardson_from_estimates(correction_from_samples(coarse, k, p), est);
        const double zr = rich.z_score();
        report << ' ' << to_string(sampler.preset()) << " k=" << k << " z=" << z << " zR=" << zr;
        o.require(std::abs(z) <= 4.0, std::string(to_string(sampler.preset())) + " estimate " + at("k", k));
        o.require(std::abs(zr) <= 4.0, std::string(to_string(sampler.preset())) + " Richardson " + at("k", k));
      }
    }
    if (o.passed) o.detail = report.str();
    return o;
  });

  criterion(8, "Stieltjes transform consistency", 1.0, [] {
    Outcome o;
    for (const auto& p : preset_params()) {
      std::vector<double> moments(31);
      for (unsigned l = 0; l <= 30; ++l) moments[l] = to_double(nu_moment(2 * l, p));
      for (int j = 0; j < 16; ++j) {
        const Complex z = std::polar(4.0, 2.0 * kPi * j / 16.0);
        o.require(std::abs(nu_stieltjes(z, p) - stieltjes_from_moment_series(z, moments)) <= 1e-10,
                  describe(p) + " series on |z|=4, " + at("point", j));
      }
      o.require(std::abs(nu_stieltjes(3.0, p) - nu_stieltjes_quadrature(3.0, p, 400)) <= 1e-9,
                describe(p) + " quadrature at z=3");
    }
    for (double re = -5.0; re <= 5.0; re += 0.25)
      for (double im : {-3.0, -1.0, -0.1, -1e-3, 1e-3, 0.1, 1.0, 3.0}) {
        const Complex z(re, im);
        const Complex h = semicircle_stieltjes(z);
        o.require(std::abs(1.0 - h * h - h * sqrt_z2_minus_4(z)) <= 1e-12, "1 - H^2 = H sqrt(z^2-4)");
      }
    return o;
  });

  criterion(9, "quadrature (400 nodes) matches closed-form moments, k <= 12", 1.0, [] {
    Outcome o;
    for (const auto& p : preset_params())
      for (unsigned k = 0; k <= 12; ++k)
        o.require(std::abs(nu_quadrature_moment(k, p, 400) - to_double(nu_moment(k, p))) <= 1e-8,
                  describe(p) + " " + at("k", k));
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
