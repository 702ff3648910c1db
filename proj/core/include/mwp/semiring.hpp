#pragma once

// The mwp semiring extended with a failure element.
//
// Coefficients describe how an output variable depends on an input variable:
//   0  no dependency
//   m  maximum-like (the output is bounded by the input itself)
//   w  weak polynomial dependency
//   p  polynomial dependency
//   i  no polynomial bound (failure, kept local to the offending flow)

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mwp {

enum class Coefficient : std::uint8_t { Zero = 0, M = 1, W = 2, P = 3, Inf = 4 };

inline constexpr std::array<Coefficient, 5> kAllCoefficients = {
    Coefficient::Zero, Coefficient::M, Coefficient::W, Coefficient::P, Coefficient::Inf};

/// Semiring addition: the larger coefficient wins.
constexpr Coefficient join(Coefficient a, Coefficient b) noexcept {
  return std::max(a, b);
}

/// Semiring multiplication. Zero annihilates everything, including Inf;
/// otherwise flows compose by their worst class.
constexpr Coefficient times(Coefficient a, Coefficient b) noexcept {
  if (a == Coefficient::Zero || b == Coefficient::Zero) return Coefficient::Zero;
  return std::max(a, b);
}

constexpr std::string_view to_string(Coefficient c) noexcept {
  switch (c) {
    case Coefficient::Zero: return "0";
    case Coefficient::M: return "m";
    case Coefficient::W: return "w";
    case Coefficient::P: return "p";
    case Coefficient::Inf: return "i";
  }
  return "?";
}

constexpr std::optional<Coefficient> coefficient_from_string(std::string_view s) noexcept {
  for (auto c : kAllCoefficients) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

}  // namespace mwp
