#pragma once

// Monte Carlo estimation of the 1/n correction to E[tr(X^k)/n].
//
// Every sample index draws from its own generator keyed by (seed, n, index),
// and per-sample results are reduced in index order, so estimates are
// bit-identical for any thread count.

#include "wigner/params.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <variant>
#include <vector>

namespace wigner {

using Rng = std::mt19937_64;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
// Real symmetric for r = 1, complex Hermitian for r = 0.
using SampledMatrix = std::variant<RealMatrix, ComplexMatrix>;

std::uint64_t splitmix64(std::uint64_t x);
// Generator seed for sample `index` of a run at matrix size n.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t index);

// Entry distributions for the Wigner matrix W (before scaling).
//
//   goe         real N(0,1) off-diagonal, N(0,2) diagonal
//   gue         complex Gaussian, E|W|^2 = 1, real N(0,1) diagonal
//   rademacher  real +-sigma off-diagonal, +-s diagonal
//   custom      off-diagonal modulus sqrt(alpha)/sigma with probability
//               sigma^4/alpha and 0 otherwise, random sign (real) or uniform
//               phase (complex); diagonal N(0, s2)
class EnsembleSampler {
 public:
  EnsembleSampler(Preset preset, const EnsembleParams& params);

  static EnsembleSampler goe();
  static EnsembleSampler gue();
  static EnsembleSampler rademacher(const Rational& sigma2, const Rational& s2);
  static EnsembleSampler custom(const EnsembleParams& params);

  Preset preset() const { return preset_; }
  const EnsembleParams& params() const { return params_; }
  bool is_real() const { return params_.is_real(); }
  // Off-diagonal law symmetric under W -> -W (true for every preset).
  bool is_symmetric() const { return true; }

  // Imaginary part is zero for real ensembles.
  std::complex<double> draw_offdiag(Rng& rng) const;
  double draw_diag(Rng& rng) const;

 private:
  Preset preset_;
  EnsembleParams params_;
  double sigma_;
  double s_;
  double nonzero_prob_;  // custom only
  double modulus_;       // custom only
};

// X = W / (sigma sqrt(n)), upper triangle drawn row by row.
SampledMatrix sample_matrix(unsigned n, const EnsembleSampler& sampler, std::uint64_t seed);

// [tr(X^j)/n for j = 1..kmax].
std::vector<double> empirical_moments(const RealMatrix& x, unsigned kmax);
std::vector<double> empirical_moments(const ComplexMatrix& x, unsigned kmax);
std::vector<double> empirical_moments(const SampledMatrix& x, unsigned kmax);

// Per-sample moment vectors of a run; row i is sample i.
struct MomentSamples {
  unsigned n = 0;
  unsigned kmax = 0;
  std::vector<double> data;  // samples x kmax, row-major

  std::size_t samples() const { return kmax == 0 ? 0 : data.size() / kmax; }
  double moment(std::size_t sample, unsigned k) const { return data[sample * kmax + (k - 1)]; }
};

// threads == 0 uses the hardware concurrency.
MomentSamples sample_moments(unsigned n, unsigned kmax, std::size_t samples, const EnsembleSampler& sampler,
                             std::uint64_t seed, unsigned threads = 0);

struct SampleStats {
  double mean = 0.0;
  double std_error = 0.0;
};

// Mean and standard error (sample standard deviation / sqrt(count)).
SampleStats mean_and_stderr(std::span<const double> values);

struct CorrectionEstimate {
  unsigned k = 0;
  unsigned n = 0;
  std::size_t samples = 0;
  double point = 0.0;      // mean of n (tr(X^k)/n - sc_k)
  double std_error = 0.0;
  double reference = 0.0;  // nu_k

  double z_score() const { return z_score(reference); }
  double z_score(double target) const { return (point - target) / std_error; }
};

CorrectionEstimate correction_from_samples(const MomentSamples& run, unsigned k, const EnsembleParams& params);

// Requires samples >= 100.
CorrectionEstimate estimate_correction(unsigned k, unsigned n, std::size_t samples, const EnsembleSampler& sampler,
                                       std::uint64_t seed, unsigned threads = 0);

// 2 E(2n) - E(n): cancels the 1/n term in n (m_k(n) - sc_k).
struct RichardsonEstimate {
  CorrectionEstimate coarse;  // size n
  CorrectionEstimate fine;    // size 2n
  double point = 0.0;
  double std_error = 0.0;  // sqrt(4 se_fine^2 + se_coarse^2)
  double reference = 0.0;

  double z_score() const { return (point - reference) / std_error; }
};

RichardsonEstimate richardson_from_estimates(const CorrectionEstimate& coarse, const CorrectionEstimate& fine);

RichardsonEstimate richardson_correction(unsigned k, unsigned n, const EnsembleSampler& sampler, std::size_t samples,
                                         std::uint64_t seed, unsigned threads = 0);

}  // namespace wigner
