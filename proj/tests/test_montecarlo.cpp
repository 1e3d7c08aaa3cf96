#include "wigner/montecarlo.hpp"

#include "wigner/combinatorics.hpp"
#include "wigner/oracle.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace wigner;

namespace {

std::vector<EnsembleSampler> all_samplers() {
  return {EnsembleSampler::goe(), EnsembleSampler::gue(), EnsembleSampler::rademacher(Rational(1, 2), 3),
          EnsembleSampler::custom({1, 2, 1, 9}), EnsembleSampler::custom({0, 1, 2, 3})};
}

double oracle_correction(unsigned k, unsigned long n, const MomentModel& model) {
  return to_double(Rational(Integer(n)) * (exact_moment(k, n, model) - Rational(semicircle_moment(k))));
}

}  // namespace

TEST_CASE("seed derivation") {
  CHECK(sample_seed(1, 64, 0) == sample_seed(1, 64, 0));
  CHECK(sample_seed(1, 64, 0) != sample_seed(1, 64, 1));
  CHECK(sample_seed(1, 64, 0) != sample_seed(1, 128, 0));
  CHECK(sample_seed(1, 64, 0) != sample_seed(2, 64, 0));
}

TEST_CASE("sampled matrices are Hermitian and reproducible") {
  for (const auto& s : all_samplers()) {
    const auto a = sample_matrix(9, s, 42);
    const auto b = sample_matrix(9, s, 42);
    CHECK(a == b);
    std::visit(
        [](const auto& m) {
          CHECK(m.rows() == 9);
          CHECK(m == m.adjoint());
        },
        a);
    CHECK(std::holds_alternative<RealMatrix>(a) == s.is_real());
  }
  const auto one = std::get<RealMatrix>(sample_matrix(1, EnsembleSampler::rademacher(4, 1), 7));
  CHECK(std::abs(one(0, 0)) == doctest::Approx(0.5));  // +-s / sigma
}

TEST_CASE("preset parameter constraints") {
  CHECK_THROWS_AS(EnsembleSampler(Preset::goe, EnsembleParams::gue()), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleSampler(Preset::rademacher, EnsembleParams::goe()), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleSampler::custom({1, 1, 1, Rational(1, 2)}), std::invalid_argument);
}

TEST_CASE("entry moments match the parameters within 5 standard errors") {
  const std::size_t draws = 1'000'000;
  for (const auto& s : all_samplers()) {
    Rng rng(2024);
    std::vector<double> mean(5, 0.0), sq(5, 0.0);
    for (std::size_t i = 0; i < draws; ++i) {
      const auto w = s.draw_offdiag(rng);
      const double d = s.draw_diag(rng);
      const double m2 = std::norm(w);
      const double vals[5] = {w.real(), m2, m2 * m2, d * d, (w * w).real()};
      for (int j = 0; j < 5; ++j) {
        mean[j] += vals[j];
        sq[j] += vals[j] * vals[j];
      }
    }
    const auto& p = s.params();
    const double target[5] = {0.0, to_double(p.sigma2), to_double(p.alpha), to_double(p.s2),
                              s.is_real() ? to_double(p.sigma2) : 0.0};
    for (int j = 0; j < 5; ++j) {
      const double m = mean[j] / draws;
      const double se = std::sqrt(std::max(sq[j] / draws - m * m, 0.0) / draws);
      if (se == 0.0)
        CHECK(m == doctest::Approx(target[j]));
      else
        CHECK(std::abs(m - target[j]) <= 5.0 * se);
    }
  }
}

TEST_CASE("scaled off-diagonal second moment is 1/n") {
  const unsigned n = 16;
  std::vector<double> vals;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto x = std::get<ComplexMatrix>(sample_matrix(n, EnsembleSampler::gue(), seed));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) vals.push_back(std::norm(x(i, j)));
  }
  const auto st = mean_and_stderr(vals);
  CHECK(std::abs(st.mean - 1.0 / n) <= 3.0 * st.std_error);
}

TEST_CASE("empirical moments by trace powers") {
  const auto id = empirical_moments(RealMatrix(RealMatrix::Identity(4, 4)), 3);
  CHECK(id == std::vector<double>{1.0, 1.0, 1.0});
  RealMatrix d(2, 2);
  d << 2, 0, 0, -2;
  const auto dm = empirical_moments(d, 2);
  CHECK(dm[0] == 0.0);
  CHECK(dm[1] == 4.0);

  // Cross-check against eigenvalue power sums.
  for (const auto& s : all_samplers()) {
    const auto x = sample_matrix(12, s, 5);
    const auto m = empirical_moments(x, 9);
    std::visit(
        [&](const auto& mat) {
          Eigen::SelfAdjointEigenSolver<std::decay_t<decltype(mat)>> es(mat);
          const auto& ev = es.eigenvalues();
          for (unsigned k = 1; k <= 9; ++k) {
            double sum = 0.0;
            for (int i = 0; i < ev.size(); ++i) sum += std::pow(ev(i), k);
            CHECK(m[k - 1] == doctest::Approx(sum / 12.0).epsilon(1e-8).scale(1.0));
          }
        },
        x);
  }
  CHECK_THROWS_AS(empirical_moments(d, 0), std::invalid_argument);
}

TEST_CASE("results do not depend on the thread count") {
  const auto a = sample_moments(10, 4, 37, EnsembleSampler::gue(), 11, 1);
  const auto b = sample_moments(10, 4, 37, EnsembleSampler::gue(), 11, 3);
  CHECK(a.data == b.data);
  const auto e1 = estimate_correction(4, 10, 200, EnsembleSampler::goe(), 9, 1);
  const auto e2 = estimate_correction(4, 10, 200, EnsembleSampler::goe(), 9, 4);
  CHECK(e1.point == e2.point);
  CHECK(e1.std_error == e2.std_error);
}

TEST_CASE("mean and standard error") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto st = mean_and_stderr(v);
  CHECK(st.mean == 2.5);
  CHECK(st.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
}

TEST_CASE("GOE second moment at n = 64") {
  const unsigned n = 64;
  const auto run = sample_moments(n, 2, 3000, EnsembleSampler::goe(), 3);
  std::vector<double> m2(run.samples());
  for (std::size_t i = 0; i < m2.size(); ++i) m2[i] = run.moment(i, 2);
  const auto st = mean_and_stderr(m2);
  CHECK(std::abs(st.mean - (1.0 + 1.0 / n)) <= 3.0 * st.std_error);
}

TEST_CASE("correction estimates agree with the exact oracle") {
  const auto goe = estimate_correction(4, 32, 4000, EnsembleSampler::goe(), 17);
  CHECK(goe.reference == 5.0);
  CHECK(std::abs(goe.z_score(oracle_correction(4, 32, MomentModel::goe(4)))) <= 4.0);

  const auto gue = estimate_correction(4, 32, 2000, EnsembleSampler::gue(), 17);
  CHECK(gue.reference == 0.0);
  CHECK(std::abs(gue.z_score(1.0 / 32.0)) <= 4.0);

  const EnsembleParams custom{1, 2, 1, 9};
  const auto c = estimate_correction(6, 24, 4000, EnsembleSampler::custom(custom), 5);
  CHECK(std::abs(c.z_score(oracle_correction(6, 24, MomentModel::three_point(custom, 6)))) <= 4.0);

  // Rademacher with sigma = s = 1: tr(X^2)/n is exactly 1.
  const auto rad = estimate_correction(2, 20, 200, EnsembleSampler::rademacher(1, 1), 1);
  CHECK(std::abs(rad.point) < 1e-12);
  CHECK(rad.reference == 0.0);

  CHECK_THROWS_AS(estimate_correction(4, 16, 99, EnsembleSampler::goe(), 1), std::invalid_argument);
}

TEST_CASE("Richardson combination removes the 1/n bias") {
  const auto r = richardson_correction(4, 16, EnsembleSampler::goe(), 4000, 23);
  CHECK(r.reference == 5.0);
  CHECK(std::abs(r.z_score()) <= 4.0);
  CHECK(r.std_error == doctest::Approx(std::hypot(2.0 * r.fine.std_error, r.coarse.std_error)));

  const auto again = richardson_correction(4, 16, EnsembleSampler::goe(), 4000, 23);
  CHECK(again.point == r.point);

  for (unsigned k = 2; k <= 8; k += 2) {
    const auto g = richardson_correction(k, 12, EnsembleSampler::gue(), 1500, 31);
    CHECK(std::abs(g.z_score()) <= 4.0);
  }
  CHECK_THROWS_AS(richardson_from_estimates(r.coarse, r.coarse), std::invalid_argument);
}

TEST_CASE("odd moments vanish in mean for symmetric laws") {
  for (const auto& s : {EnsembleSampler::goe(), EnsembleSampler::rademacher(1, 1)}) {
    for (unsigned n : {32u, 64u}) {
      const auto run = sample_moments(n, 5, 600, s, 77);
      for (unsigned k : {3u, 5u}) {
        std::vector<double> scaled(run.samples());
        for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = std::pow(n, 1.5) * run.moment(i, k);
        const auto st = mean_and_stderr(scaled);
        CHECK(std::abs(st.mean) <= 4.0 * st.std_error);
      }
    }
  }
}
