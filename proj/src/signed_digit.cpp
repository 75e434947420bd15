#include "fconv/signed_digit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fconv {

OffsetCode make_offset(int width_m, long long signed_units) {
  const long long modulus = 1LL << width_m;
  long long v = signed_units % modulus;
  if (v < 0) v += modulus;
  return OffsetCode{width_m, static_cast<int>(v)};
}

SignedDigitCoefficient parse_coefficient(const std::string& text, int width_m) {
  if (width_m < 2 || width_m > 31)
    throw std::invalid_argument("coefficient width " + std::to_string(width_m) +
                                " outside supported range [2,31]");
  SignedDigitCoefficient c;
  c.width_m = width_m;

  std::string body = text;
  std::erase_if(body, [](char ch) { return ch == ' ' || ch == '\t' || ch == '(' || ch == ')'; });
  if (body.empty()) return c;  // bare integer bit

  std::stringstream ss(body);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty())
      throw std::invalid_argument("empty digit entry in coefficient \"" + text + "\"");
    int entry = 0;
    try {
      size_t pos = 0;
      entry = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad digit entry \"" + token + "\" in coefficient \"" + text + "\"");
    }
    if (entry == 0)
      throw std::invalid_argument("zero digit entry in coefficient \"" + text + "\"");
    const int position = std::abs(entry);
    if (position > width_m - 1)
      throw std::invalid_argument("digit position " + std::to_string(position) +
                                  " exceeds width m-1 = " + std::to_string(width_m - 1) +
                                  " in coefficient \"" + text + "\"");
    for (const auto& d : c.digits)
      if (d.position == position)
        throw std::invalid_argument("duplicate digit position " + std::to_string(position) +
                                    " in coefficient \"" + text + "\"");
    c.digits.push_back({position, entry > 0 ? 1 : -1});
  }
  std::sort(c.digits.begin(), c.digits.end(),
            [](const auto& a, const auto& b) { return a.position < b.position; });
  return c;
}

std::string format_coefficient(const SignedDigitCoefficient& c) {
  std::string out;
  for (const auto& d : c.digits) {
    if (!out.empty()) out += ',';
    out += std::to_string(d.sign * d.position);
  }
  return out;
}

double real_value(const SignedDigitCoefficient& c) {
  double v = 1.0;
  for (const auto& d : c.digits) v += d.sign * std::ldexp(1.0, -d.position);
  return v;
}

int nonzero_count(const SignedDigitCoefficient& c) {
  return 1 + static_cast<int>(c.digits.size());
}

namespace {

// Exact integer key: value in units of 2^-(width_m-1).
long long value_key(const SignedDigitCoefficient& c) {
  long long key = 1LL << (c.width_m - 1);
  for (const auto& d : c.digits) key += static_cast<long long>(d.sign) << (c.width_m - 1 - d.position);
  return key;
}

}  // namespace

std::vector<SignedDigitCoefficient> enumerate_near(double center, int width_m,
                                                   int max_nonzero, double radius) {
  if (!(center > 0.0 && center < 2.0))
    throw std::invalid_argument("enumerate_near: center must lie in (0,2)");
  if (max_nonzero < 1) throw std::invalid_argument("enumerate_near: max_nonzero must be >= 1");
  if (radius < 0.0) throw std::invalid_argument("enumerate_near: radius must be >= 0");

  // Key -> best representation seen (fewest digits wins; enumeration
  // order is position-lexicographic, so ties resolve deterministically).
  std::map<long long, SignedDigitCoefficient> found;
  SignedDigitCoefficient current;
  current.width_m = width_m;

  const int max_fractional = max_nonzero - 1;
  auto consider = [&] {
    const double v = real_value(current);
    if (std::abs(v - center) > radius) return;
    const long long key = value_key(current);
    auto it = found.find(key);
    if (it == found.end() || current.digits.size() < it->second.digits.size())
      found.insert_or_assign(key, current);
  };

  // DFS over positions; at each position place nothing, +1, or -1.
  auto recurse = [&](auto&& self, int position) -> void {
    consider();
    if (static_cast<int>(current.digits.size()) >= max_fractional) return;
    for (int p = position; p <= width_m - 1; ++p) {
      for (int sign : {+1, -1}) {
        current.digits.push_back({p, sign});
        self(self, p + 1);
        current.digits.pop_back();
      }
    }
  };
  recurse(recurse, 1);

  std::vector<SignedDigitCoefficient> out;
  out.reserve(found.size());
  for (auto& [key, coeff] : found) out.push_back(std::move(coeff));
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return std::abs(real_value(a) - center) < std::abs(real_value(b) - center);
  });
  return out;
}

}  // namespace fconv
