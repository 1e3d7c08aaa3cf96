#pragma once

#include "wigner/exact.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace wigner {

// Distribution families with a concrete sampler and a full moment table.
enum class Preset { goe, gue, rademacher, custom };

std::string_view to_string(Preset p);
std::optional<Preset> parse_preset(std::string_view name);

// The four scalars that determine the 1/n correction.
//
//   r      1 for real symmetric entries, 0 for complex Hermitian entries
//   sigma2 off-diagonal variance E|W_ij|^2
//   s2     diagonal variance E[W_ii^2]
//   alpha  off-diagonal fourth moment E|W_ij|^4
struct EnsembleParams {
  int r = 1;
  Rational sigma2 = 1;
  Rational s2 = 2;
  Rational alpha = 3;

  static EnsembleParams goe();
  static EnsembleParams gue();
  // Real ±sigma off-diagonal entries, so alpha = sigma2^2.
  static EnsembleParams rademacher(const Rational& sigma2, const Rational& s2);
  static EnsembleParams for_preset(Preset p);

  bool is_real() const { return r == 1; }

  // alpha / sigma^4
  Rational kurtosis_ratio() const;
  // s^2 / sigma^2
  Rational diagonal_ratio() const;

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;

  friend bool operator==(const EnsembleParams&, const EnsembleParams&) = default;
};

std::string describe(const EnsembleParams& p);

}  // namespace wigner
