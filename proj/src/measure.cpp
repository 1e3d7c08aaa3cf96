#include "wigner/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wigner {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_off_cut(Complex z, const char* who) {
  if (z.imag() == 0.0 && std::abs(z.real()) <= 2.0)
    throw std::domain_error(std::string(who) + ": z = " + std::to_string(z.real()) +
                            " lies on the branch cut [-2, 2]");
}

}  // namespace

SignedMeasureNu::SignedMeasureNu(const EnsembleParams& params) {
  params.validate();
  const double a = to_double(params.kurtosis_ratio());
  const double s = to_double(params.diagonal_ratio());
  r_ = params.r;
  c4_ = a - (2.0 + r_);
  c2_ = s - 4.0 * a + 7.0 + 3.0 * r_;
  c0_ = 2.0 * (a - s - 1.0);
  atom_mass_ = r_ / 4.0;
  arcsine_coeff_ = -r_ / 2.0;
}

double SignedMeasureNu::density_over_arcsine(double x) const {
  const double x2 = x * x;
  return arcsine_coeff_ + 0.5 * ((c4_ * x2 + c2_) * x2 + c0_);
}

double SignedMeasureNu::density(double x) const {
  if (!(std::abs(x) < 2.0))
    throw std::domain_error("nu density is defined for |x| < 2 only (x = " + std::to_string(x) + ")");
  return density_over_arcsine(x) / (kPi * std::sqrt(4.0 - x * x));
}

std::vector<Atom> SignedMeasureNu::atoms() const {
  if (atom_mass_ == 0.0) return {};
  return {{2.0, atom_mass_}, {-2.0, atom_mass_}};
}

double semicircle_density(double x) {
  if (std::abs(x) >= 2.0) return 0.0;
  return std::sqrt(4.0 - x * x) / (2.0 * kPi);
}

double nu_density(double x, const EnsembleParams& params) { return SignedMeasureNu(params).density(x); }

std::vector<Atom> nu_atoms(const EnsembleParams& params) { return SignedMeasureNu(params).atoms(); }

double nu_quadrature_moment(unsigned k, const EnsembleParams& params, unsigned npoints) {
  if (npoints == 0) throw std::invalid_argument("nu_quadrature_moment: npoints must be >= 1");
  return SignedMeasureNu(params).integrate([k](double x) { return std::pow(x, static_cast<int>(k)); }, npoints);
}

Complex sqrt_z2_minus_4(Complex z) {
  require_off_cut(z, "sqrt(z^2 - 4)");
  return z * std::sqrt(1.0 - 4.0 / (z * z));
}

Complex semicircle_stieltjes(Complex z) {
  require_off_cut(z, "semicircle_stieltjes");
  return 0.5 * (z - sqrt_z2_minus_4(z));
}

Complex nu_stieltjes(Complex z, const EnsembleParams& params) {
  require_off_cut(z, "nu_stieltjes");
  params.validate();
  const double r = params.r;
  const double a = to_double(params.kurtosis_ratio());
  const double s = to_double(params.diagonal_ratio());
  const Complex root = sqrt_z2_minus_4(z);
  const Complex h = 0.5 * (z - root);
  const Complex h2 = h * h;
  const Complex arcsine_part = (r / 2.0) * (0.5 * (1.0 / (z - 2.0) + 1.0 / (z + 2.0)) - 1.0 / root);
  return arcsine_part + h2 / root * ((a - 2.0 - r) * h2 + s - 1.0 - r);
}

Complex nu_stieltjes_quadrature(Complex z, const EnsembleParams& params, unsigned npoints) {
  require_off_cut(z, "nu_stieltjes_quadrature");
  if (npoints == 0) throw std::invalid_argument("nu_stieltjes_quadrature: npoints must be >= 1");
  return SignedMeasureNu(params).integrate([z](double x) { return Complex(1.0) / (z - x); }, npoints);
}

Complex stieltjes_from_moment_series(Complex z, std::span<const double> even_moments) {
  const Complex w = 1.0 / (z * z);
  Complex acc = 0.0;
  // Horner in w.
  for (auto it = even_moments.rbegin(); it != even_moments.rend(); ++it) acc = acc * w + *it;
  return acc / z;
}

}  // namespace wigner
