#pragma once

#include <stdexcept>
#include <string>

namespace andent {

/// Thrown when a computed quantity violates an exact identity or bound that
/// should hold up to floating-point tolerance (broken projector, sandwich
/// violation, ...). Callers treat this as a defect, not as bad input.
struct NumericalDefect : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed configuration input (bad key, bad value, bad file).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace andent
