#include "fconv/core_numerics.hpp"

#include <cassert>
#include <cmath>

namespace fconv {

long double reference_function(Mode mode, long double x) {
  if (mode == Mode::Log) return std::log2(1.0L + x);
  return std::exp2(x) - 1.0L;
}

long double first_derivative(Mode mode, long double x) {
  constexpr long double ln2 = 0.693147180559945309417L;
  if (mode == Mode::Log) return 1.0L / (ln2 * (1.0L + x));
  return ln2 * std::exp2(x);
}

long long round_half_away(long double v) {
  // llroundl rounds halfway cases away from zero regardless of the
  // current FP rounding mode, which is exactly the documented tie rule.
  return llroundl(v);
}

int reference_value(Mode mode, int input_code) {
  if (input_code < 0 || input_code > kCodeMax)
    throw std::out_of_range("input code " + std::to_string(input_code) + " outside [0,1023]");
  const long double x = static_cast<long double>(input_code) / kDomainSize;
  const long double scaled = reference_function(mode, x) * kDomainSize;
  const long long rn = round_half_away(scaled);
  assert(rn >= 0 && rn <= kCodeMax);
  return static_cast<int>(rn);
}

const ReferenceTable& reference_table(Mode mode) {
  static const ReferenceTable log_table = [] {
    ReferenceTable t;
    for (int i = 0; i < kDomainSize; ++i) t[i] = reference_value(Mode::Log, i);
    return t;
  }();
  static const ReferenceTable antilog_table = [] {
    ReferenceTable t;
    for (int i = 0; i < kDomainSize; ++i) t[i] = reference_value(Mode::Antilog, i);
    return t;
  }();
  return mode == Mode::Log ? log_table : antilog_table;
}

}  // namespace fconv
