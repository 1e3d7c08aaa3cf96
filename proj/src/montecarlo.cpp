#include "wigner/montecarlo.hpp"

#include "wigner/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace wigner {

namespace {

constexpr double kPi = 3.14159265358979323846;

template <class Matrix>
std::vector<double> trace_powers(const Matrix& x, unsigned kmax) {
  if (kmax == 0) throw std::invalid_argument("empirical_moments: kmax must be >= 1");
  const double n = static_cast<double>(x.rows());
  const unsigned half = (kmax + 1) / 2;
  std::vector<Matrix> powers;
  powers.reserve(half);
  powers.push_back(x);
  for (unsigned j = 2; j <= half; ++j) powers.push_back(powers.back() * x);

  std::vector<double> out(kmax);
  for (unsigned j = 1; j <= kmax; ++j) {
    if (j <= half) {
      out[j - 1] = std::real(powers[j - 1].trace()) / n;
    } else {
      // tr(X^a X^b) = sum_ij (X^a)_ij (X^b)_ji
      const auto& pa = powers[half - 1];
      const auto& pb = powers[j - half - 1];
      out[j - 1] = std::real(pa.cwiseProduct(pb.transpose()).sum()) / n;
    }
  }
  return out;
}

template <class Matrix, class Draw>
Matrix fill_hermitian(unsigned n, Draw&& draw_offdiag, double scale, Rng& rng, const EnsembleSampler& sampler) {
  Matrix x(n, n);
  for (unsigned i = 0; i < n; ++i) {
    x(i, i) = sampler.draw_diag(rng) * scale;
    for (unsigned j = i + 1; j < n; ++j) {
      const auto w = draw_offdiag(rng) * scale;
      x(i, j) = w;
      if constexpr (std::is_same_v<typename Matrix::Scalar, double>)
        x(j, i) = w;
      else
        x(j, i) = std::conj(w);
    }
  }
  return x;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ n) ^ index);
}

EnsembleSampler::EnsembleSampler(Preset preset, const EnsembleParams& params)
    : preset_(preset), params_(params), nonzero_prob_(1.0), modulus_(0.0) {
  params_.validate();
  switch (preset_) {
    case Preset::goe:
    case Preset::gue:
      if (!(params_ == EnsembleParams::for_preset(preset_)))
        throw std::invalid_argument(std::string(to_string(preset_)) + " preset requires " +
                                    describe(EnsembleParams::for_preset(preset_)) + ", got " + describe(params_));
      break;
    case Preset::rademacher:
      if (!params_.is_real() || params_.alpha != params_.sigma2 * params_.sigma2)
        throw std::invalid_argument("rademacher preset requires r=1 and alpha = sigma2^2, got " + describe(params_));
      break;
    case Preset::custom:
      nonzero_prob_ = to_double(Rational(params_.sigma2 * params_.sigma2 / params_.alpha));
      modulus_ = std::sqrt(to_double(Rational(params_.alpha / params_.sigma2)));
      break;
  }
  sigma_ = std::sqrt(to_double(params_.sigma2));
  s_ = std::sqrt(to_double(params_.s2));
}

EnsembleSampler EnsembleSampler::goe() { return {Preset::goe, EnsembleParams::goe()}; }

EnsembleSampler EnsembleSampler::gue() { return {Preset::gue, EnsembleParams::gue()}; }

EnsembleSampler EnsembleSampler::rademacher(const Rational& sigma2, const Rational& s2) {
  return {Preset::rademacher, EnsembleParams::rademacher(sigma2, s2)};
}

EnsembleSampler EnsembleSampler::custom(const EnsembleParams& params) { return {Preset::custom, params}; }

std::complex<double> EnsembleSampler::draw_offdiag(Rng& rng) const {
  switch (preset_) {
    case Preset::goe: return std::normal_distribution<double>()(rng);
    case Preset::gue: {
      std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
      const double re = normal(rng);
      const double im = normal(rng);
      return {re, im};
    }
    case Preset::rademacher: return (rng() & 1U) ? sigma_ : -sigma_;
    case Preset::custom: break;
  }
  const double u = std::generate_canonical<double, 64>(rng);
  if (params_.is_real()) {
    const bool positive = rng() & 1U;
    if (u >= nonzero_prob_) return 0.0;
    return positive ? modulus_ : -modulus_;
  }
  const double phase = 2.0 * kPi * std::generate_canonical<double, 64>(rng);
  if (u >= nonzero_prob_) return 0.0;
  return std::polar(modulus_, phase);
}

double EnsembleSampler::draw_diag(Rng& rng) const {
  switch (preset_) {
    case Preset::goe: return std::normal_distribution<double>(0.0, std::sqrt(2.0))(rng);
    case Preset::gue: return std::normal_distribution<double>()(rng);
    case Preset::rademacher: return (rng() & 1U) ? s_ : -s_;
    case Preset::custom: break;
  }
  return s_ * std::normal_distribution<double>()(rng);
}

SampledMatrix sample_matrix(unsigned n, const EnsembleSampler& sampler, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_matrix: n must be >= 1");
  Rng rng(seed);
  const double scale = 1.0 / (std::sqrt(to_double(sampler.params().sigma2)) * std::sqrt(static_cast<double>(n)));
  if (sampler.is_real()) {
    auto draw = [&](Rng& g) { return sampler.draw_offdiag(g).real(); };
    return fill_hermitian<RealMatrix>(n, draw, scale, rng, sampler);
  }
  auto draw = [&](Rng& g) { return sampler.draw_offdiag(g); };
  return fill_hermitian<ComplexMatrix>(n, draw, scale, rng, sampler);
}

std::vector<double> empirical_moments(const RealMatrix& x, unsigned kmax) { return trace_powers(x, kmax); }

std::vector<double> empirical_moments(const ComplexMatrix& x, unsigned kmax) { return trace_powers(x, kmax); }

std::vector<double> empirical_moments(const SampledMatrix& x, unsigned kmax) {
  return std::visit([kmax](const auto& m) { return trace_powers(m, kmax); }, x);
}

MomentSamples sample_moments(unsigned n, unsigned kmax, std::size_t samples, const EnsembleSampler& sampler,
                             std::uint64_t seed, unsigned threads) {
  MomentSamples run;
  run.n = n;
  run.kmax = kmax;
  run.data.assign(samples * kmax, 0.0);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(samples, 1)));

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto m = empirical_moments(sample_matrix(n, sampler, sample_seed(seed, n, i)), kmax);
      std::copy(m.begin(), m.end(), run.data.begin() + static_cast<std::ptrdiff_t>(i * kmax));
    }
  };
  if (threads <= 1) {
    work(0, samples);
    return run;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (samples + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(samples, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  return run;
}

SampleStats mean_and_stderr(std::span<const double> values) {
  SampleStats st;
  if (values.empty()) return st;
  double sum = 0.0;
  for (double v : values) sum += v;
  st.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return st;
  double ss = 0.0;
  for (double v : values) ss += (v - st.mean) * (v - st.mean);
  const double var = ss / static_cast<double>(values.size() - 1);
  st.std_error = std::sqrt(var / static_cast<double>(values.size()));
  return st;
}

CorrectionEstimate correction_from_samples(const MomentSamples& run, unsigned k, const EnsembleParams& params) {
  if (k == 0 || k > run.kmax) throw std::invalid_argument("correction_from_samples: k outside sampled range");
  const double sc = to_double(Rational(semicircle_moment(k)));
  const double n = run.n;
  std::vector<double> scaled(run.samples());
  for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = n * (run.moment(i, k) - sc);
  const auto st = mean_and_stderr(scaled);

  CorrectionEstimate est;
  est.k = k;
  est.n = run.n;
  est.samples = run.samples();
  est.point = st.mean;
  est.std_error = st.std_error;
  est.reference = to_double(nu_moment(k, params));
  return est;
}

CorrectionEstimate estimate_correction(unsigned k, unsigned n, std::size_t samples, const EnsembleSampler& sampler,
                                       std::uint64_t seed, unsigned threads) {
  if (samples < 100) throw std::invalid_argument("estimate_correction: need at least 100 samples");
  if (k == 0) throw std::invalid_argument("estimate_correction: k must be >= 1");
  return correction_from_samples(sample_moments(n, k, samples, sampler, seed, threads), k, sampler.params());
}

RichardsonEstimate richardson_from_estimates(const CorrectionEstimate& coarse, const CorrectionEstimate& fine) {
  if (fine.n != 2 * coarse.n || fine.k != coarse.k)
    throw std::invalid_argument("richardson: need estimates of the same k at sizes n and 2n");
  RichardsonEstimate r;
  r.coarse = coarse;
  r.fine = fine;
  r.point = 2.0 * fine.point - coarse.point;
  r.std_error = std::sqrt(4.0 * fine.std_error * fine.std_error + coarse.std_error * coarse.std_error);
  r.reference = coarse.reference;
  return r;
}

RichardsonEstimate richardson_correction(unsigned k, unsigned n, const EnsembleSampler& sampler, std::size_t samples,
                                         std::uint64_t seed, unsigned threads) {
  return richardson_from_estimates(estimate_correction(k, n, samples, sampler, seed, threads),
                                   estimate_correction(k, 2 * n, samples, sampler, seed, threads));
}

}  // namespace wigner
