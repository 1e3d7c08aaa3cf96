#pragma once

// The semicircle law and the signed correction measure as numerical
// objects: densities, atoms, quadrature moments and Stieltjes transforms.

#include "wigner/params.hpp"

#include <complex>
#include <span>
#include <vector>

namespace wigner {

using Complex = std::complex<double>;

struct Atom {
  double location = 0.0;
  double mass = 0.0;
};

// Correction measure
//
//   (r/2) ( (delta_2 + delta_{-2})/2 - w(x) dx )
//     + (1/2) (c4 x^4 + c2 x^2 + c0) w(x) dx,    w(x) = 1 / (pi sqrt(4 - x^2))
//
// with c4 = a - (2 + r), c2 = s - 4a + 7 + 3r, c0 = 2(a - s - 1).
class SignedMeasureNu {
 public:
  explicit SignedMeasureNu(const EnsembleParams& params);

  double c4() const { return c4_; }
  double c2() const { return c2_; }
  double c0() const { return c0_; }
  double atom_mass() const { return atom_mass_; }
  // Coefficient of the bare arcsine weight w(x).
  double arcsine_mass_coeff() const { return arcsine_coeff_; }

  // Density of the absolutely continuous part. Throws std::domain_error for
  // |x| >= 2.
  double density(double x) const;
  // Density divided by w(x): a polynomial, finite on the closed interval.
  double density_over_arcsine(double x) const;
  std::vector<Atom> atoms() const;

  // Integral of f against the measure: x = 2 cos(theta), midpoint rule with
  // `npoints` nodes on [0, pi], plus atoms.
  template <class F>
  auto integrate(F&& f, unsigned npoints) const -> decltype(f(0.0));

 private:
  double r_;
  double c4_, c2_, c0_;
  double atom_mass_;
  double arcsine_coeff_;
};

double semicircle_density(double x);

double nu_density(double x, const EnsembleParams& params);
std::vector<Atom> nu_atoms(const EnsembleParams& params);

// Integral of x^k against the correction measure by arcsine-substituted
// quadrature.
double nu_quadrature_moment(unsigned k, const EnsembleParams& params, unsigned npoints);

// sqrt(z^2 - 4) on the branch z sqrt(1 - 4/z^2), which behaves like z at
// infinity and is continuous off [-2, 2]. Throws std::domain_error on the cut.
Complex sqrt_z2_minus_4(Complex z);

// H(z) = (z - sqrt(z^2 - 4)) / 2, the decaying branch.
Complex semicircle_stieltjes(Complex z);

Complex nu_stieltjes(Complex z, const EnsembleParams& params);

// Integral of 1/(z - x) against the correction measure, by quadrature.
Complex nu_stieltjes_quadrature(Complex z, const EnsembleParams& params, unsigned npoints);

// (1/z) sum_l coeffs[l] z^{-2l}: the generating series of even moments
// evaluated at x = 1/z^2.
Complex stieltjes_from_moment_series(Complex z, std::span<const double> even_moments);

template <class F>
auto SignedMeasureNu::integrate(F&& f, unsigned npoints) const -> decltype(f(0.0)) {
  using Value = decltype(f(0.0));
  constexpr double pi = 3.14159265358979323846;
  Value acc{};
  for (unsigned j = 0; j < npoints; ++j) {
    const double theta = (j + 0.5) * pi / npoints;
    const double x = 2.0 * std::cos(theta);
    acc += f(x) * density_over_arcsine(x);
  }
  acc /= static_cast<double>(npoints);
  for (const auto& atom : atoms()) acc += f(atom.location) * atom.mass;
  return acc;
}

}  // namespace wigner
