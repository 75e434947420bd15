#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fconv {

// The converter maps a 10-bit input code x (value x/1024 in [0,1)) to a
// 10-bit output code y (value y/1024).  One output LSB is 2^-10 of the
// unit interval; all error quantities below are expressed in these LSBs.
inline constexpr int kInputBits = 10;
inline constexpr int kDomainSize = 1 << kInputBits;  // 1024
inline constexpr int kCodeMax = kDomainSize - 1;

enum class Mode { Log, Antilog };

inline const char* to_string(Mode m) { return m == Mode::Log ? "log" : "antilog"; }

inline Mode mode_from_string(const std::string& s) {
  if (s == "log") return Mode::Log;
  if (s == "antilog") return Mode::Antilog;
  throw std::invalid_argument("unknown converter mode: \"" + s + "\"");
}

struct InputCode {
  int value = 0;

  InputCode() = default;
  explicit InputCode(int v) : value(v) {
    if (v < 0 || v > kCodeMax)
      throw std::out_of_range("input code " + std::to_string(v) + " outside [0,1023]");
  }
};

struct OutputCode {
  int value = 0;

  OutputCode() = default;
  explicit OutputCode(int v) : value(v) {
    if (v < 0 || v > kCodeMax)
      throw std::out_of_range("output code " + std::to_string(v) + " outside [0,1023]");
  }
};

// f(x) = log2(1+x) or 2^x - 1, both bijections of [0,1) onto [0,1).
// Evaluated in extended precision (x86 long double: 64-bit significand),
// which is exact enough that rounding f(x)*1024 to an integer is
// unambiguous on this grid (cross-checked against MPFR in the tests).
long double reference_function(Mode mode, long double x);

// d/dx of the reference function.
long double first_derivative(Mode mode, long double x);

// RN[f(i/1024) * 1024], round half away from zero.  The result always
// lands in [0,1023] for these functions; that is asserted, not clamped.
int reference_value(Mode mode, int input_code);

using ReferenceTable = std::array<int, kDomainSize>;

// All 1024 rounded reference outputs; cached per mode.
const ReferenceTable& reference_table(Mode mode);

// Round to nearest integer, half away from zero.  The module-wide RN
// tie rule; ties cannot occur on the reference grid but the rule is
// fixed so that MHE bounds are well defined for arbitrary inputs.
long long round_half_away(long double v);

}  // namespace fconv
