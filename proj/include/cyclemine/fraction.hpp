#pragma once

#include <cstdint>
#include <string>

namespace cyclemine {

// Exact rational number on 64-bit integers, always kept normalized
// (denominator > 0, gcd(|num|, den) == 1). Thresholds and itemset weights
// are compared and serialized exactly; floating point only appears at the
// display layer.
class Fraction {
 public:
  Fraction() = default;
  Fraction(long long value) : num_(value) {}  // implicit integer promotion
  Fraction(long long num, long long den);

  // Accepts "2", "0.25", "50%", "1/2" (a '%' suffix scales by 1/100).
  static Fraction parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;  // InvalidArgument on zero divisor

  bool operator==(const Fraction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator<(const Fraction& o) const;
  bool operator>(const Fraction& o) const { return o < *this; }
  bool operator<=(const Fraction& o) const { return !(o < *this); }
  bool operator>=(const Fraction& o) const { return !(*this < o); }
  bool operator!=(const Fraction& o) const { return !(*this == o); }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  // Smallest integer >= value. Only meaningful for finite rationals.
  long long ceil_value() const;
  // ceil(value * k) without leaving exact arithmetic.
  long long ceil_scaled(long long k) const;
  // Nearest integer to value * k, halves rounded up. Requires value >= 0.
  long long round_scaled(long long k) const;

  double to_double() const;
  std::string str() const;  // always "num/den"

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace cyclemine
