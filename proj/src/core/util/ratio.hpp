#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace rei::util {

// Exact non-negative rational, kept in lowest terms. Used for success and
// error rates so decomposition identities hold exactly before any formatting.
struct Ratio {
  int64_t num = 0;
  int64_t den = 1;

  static Ratio of(int64_t n, int64_t d) {
    Ratio r{n, d};
    r.reduce();
    return r;
  }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Ratio operator+(const Ratio& o) const { return of(num * o.den + o.num * den, den * o.den); }
  Ratio operator-(const Ratio& o) const { return of(num * o.den - o.num * den, den * o.den); }
  bool operator==(const Ratio& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Ratio& o) const { return !(*this == o); }

  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / den; }

  // Percent with one decimal, round half away from zero. "53.1" for 531/1000.
  std::string percent1() const {
    bool neg = num < 0;
    int64_t n = neg ? -num : num;
    int64_t tenths = (n * 2000 + den) / (2 * den);
    std::string s = (neg && tenths > 0 ? "-" : "");
    s += std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
    return s;
  }
};

}  // namespace rei::util
