#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fconv {

// Slope coefficient in the tables' signed-digit form: an implicit +1
// integer bit plus a sparse set of signed fractional bits.  "(1, -3, 6)"
// denotes 1 + 2^-1 - 2^-3 + 2^-6.  Strict CSD adjacency is deliberately
// not enforced; the published tables themselves violate it.
struct SignedDigitCoefficient {
  struct Digit {
    int position = 1;  // fractional position p, weight 2^-p, 1 <= p <= width_m-1
    int sign = 1;      // +1 or -1
    friend bool operator==(const Digit&, const Digit&) = default;
  };

  int width_m = 14;
  std::vector<Digit> digits;  // sorted by position, no duplicates

  friend bool operator==(const SignedDigitCoefficient&, const SignedDigitCoefficient&) = default;
};

// Offset coefficient b as stored in an m-bit datapath word.  Values at or
// above 2^(m-1) encode negative offsets (two's complement); the published
// antilog tables rely on this.
struct OffsetCode {
  int width_m = 14;
  int value = 0;  // [0, 2^m)

  // Offset as a signed integer in units of 2^-m.
  long long signed_value() const {
    return value >= (1 << (width_m - 1)) ? value - (1LL << width_m) : value;
  }

  friend bool operator==(const OffsetCode&, const OffsetCode&) = default;
};

OffsetCode make_offset(int width_m, long long signed_units);

// Parses the table notation, e.g. "1,-3,6" or "(1, -3, 6)".  An empty
// list denotes the bare integer bit (value 1.0).  Duplicate positions and
// positions outside [1, width_m-1] are rejected.
SignedDigitCoefficient parse_coefficient(const std::string& text, int width_m);

// Canonical text form: comma-separated signed positions, no whitespace.
std::string format_coefficient(const SignedDigitCoefficient& c);

// Exact value 1 + sum sign(p) * 2^-p (a dyadic rational; exact in double).
double real_value(const SignedDigitCoefficient& c);

// Number of nonzero terms including the implicit integer bit; this is the
// quantity the adder-tree cost formulas depend on.
int nonzero_count(const SignedDigitCoefficient& c);

// All coefficients with |value - center| <= radius and
// nonzero_count <= max_nonzero, deduplicated by value (keeping the
// representation with fewest nonzero digits), sorted by distance from
// center.  Returns an empty vector when the radius is too small; callers
// widen and retry.
std::vector<SignedDigitCoefficient> enumerate_near(double center, int width_m,
                                                   int max_nonzero, double radius);

}  // namespace fconv
