#include "wigner/params.hpp"

#include <cstdio>
#include <stdexcept>

namespace wigner {

std::string to_fraction_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

std::string to_decimal_string(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", q.get_d());
  return buf;
}

std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::goe: return "goe";
    case Preset::gue: return "gue";
    case Preset::rademacher: return "rademacher";
    case Preset::custom: return "custom";
  }
  return "custom";
}

std::optional<Preset> parse_preset(std::string_view name) {
  if (name == "goe") return Preset::goe;
  if (name == "gue") return Preset::gue;
  if (name == "rademacher") return Preset::rademacher;
  if (name == "custom") return Preset::custom;
  return std::nullopt;
}

EnsembleParams EnsembleParams::goe() { return {1, 1, 2, 3}; }

EnsembleParams EnsembleParams::gue() { return {0, 1, 1, 2}; }

EnsembleParams EnsembleParams::rademacher(const Rational& sigma2, const Rational& s2) {
  return {1, sigma2, s2, sigma2 * sigma2};
}

EnsembleParams EnsembleParams::for_preset(Preset p) {
  switch (p) {
    case Preset::goe: return goe();
    case Preset::gue: return gue();
    case Preset::rademacher: return rademacher(1, 1);
    case Preset::custom: break;
  }
  return goe();
}

Rational EnsembleParams::kurtosis_ratio() const {
  Rational q = alpha / (sigma2 * sigma2);
  q.canonicalize();
  return q;
}

Rational EnsembleParams::diagonal_ratio() const {
  Rational q = s2 / sigma2;
  q.canonicalize();
  return q;
}

void EnsembleParams::validate() const {
  if (r != 0 && r != 1)
    throw std::invalid_argument("r must be 0 (complex) or 1 (real), got " + std::to_string(r));
  if (sigma2 <= 0)
    throw std::invalid_argument("sigma2 must be positive, got " + sigma2.get_str());
  if (s2 < 0)
    throw std::invalid_argument("s2 must be nonnegative, got " + s2.get_str());
  if (alpha < sigma2 * sigma2)
    throw std::invalid_argument("moment inequality violated: alpha = " + alpha.get_str() +
                                " < sigma2^2 = " + Rational(sigma2 * sigma2).get_str() +
                                " (E|W|^4 >= (E|W|^2)^2)");
}

std::string describe(const EnsembleParams& p) {
  return "r=" + std::to_string(p.r) + " sigma2=" + p.sigma2.get_str() + " s2=" + p.s2.get_str() +
         " alpha=" + p.alpha.get_str();
}

}  // namespace wigner
