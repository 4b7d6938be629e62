#include "cyclemine/fraction.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

#include "cyclemine/error.hpp"

namespace cyclemine {

namespace {

using Wide = __int128;

long long narrow(Wide v, const char* context) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
    fail(ErrorCode::InvalidArgument,
         std::string("rational overflow in ") + context);
  return static_cast<long long>(v);
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long long parse_integer(const std::string& s, const std::string& original) {
  if (s.empty())
    fail(ErrorCode::InvalidArgument, "bad rational literal '" + original + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    fail(ErrorCode::InvalidArgument, "bad rational literal '" + original + "'");
  Wide value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      fail(ErrorCode::InvalidArgument,
           "bad rational literal '" + original + "'");
    value = value * 10 + (s[i] - '0');
    if (value > Wide(INT64_MAX))
      fail(ErrorCode::InvalidArgument,
           "rational literal out of range '" + original + "'");
  }
  long long out = static_cast<long long>(value);
  return s[0] == '-' ? -out : out;
}

}  // namespace

Fraction::Fraction(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction Fraction::parse(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) fail(ErrorCode::InvalidArgument, "empty rational literal");
  bool percent = false;
  if (s.back() == '%') {
    percent = true;
    s = trim(s.substr(0, s.size() - 1));
    if (s.empty()) fail(ErrorCode::InvalidArgument, "empty rational literal");
  }

  Fraction out;
  std::size_t slash = s.find('/');
  std::size_t dot = s.find('.');
  if (slash != std::string::npos) {
    out = Fraction(parse_integer(s.substr(0, slash), text),
                   parse_integer(s.substr(slash + 1), text));
  } else if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (tail.size() > 12)
      fail(ErrorCode::InvalidArgument,
           "too many decimal digits in '" + text + "'");
    bool negative = !head.empty() && head[0] == '-';
    long long head_value =
        (head.empty() || head == "-" || head == "+") ? 0
                                                     : parse_integer(head, text);
    long long tail_value = tail.empty() ? 0 : parse_integer(tail, text);
    if (tail_value < 0)
      fail(ErrorCode::InvalidArgument, "bad rational literal '" + text + "'");
    long long scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    Wide numerator = Wide(head_value < 0 ? -head_value : head_value) * scale +
                     tail_value;
    if (negative || head_value < 0) numerator = -numerator;
    out = Fraction(narrow(numerator, "decimal parse"), scale);
  } else {
    out = Fraction(parse_integer(s, text), 1);
  }
  if (percent) out = out * Fraction(1, 100);
  return out;
}

Fraction Fraction::operator+(const Fraction& o) const {
  Wide n = Wide(num_) * o.den_ + Wide(o.num_) * den_;
  Wide d = Wide(den_) * o.den_;
  Wide g = 1;
  {
    Wide a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    g = a == 0 ? 1 : a;
  }
  return Fraction(narrow(n / g, "addition"), narrow(d / g, "addition"));
}

Fraction Fraction::operator-(const Fraction& o) const {
  return *this + Fraction(-o.num_, o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
  long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  Wide n = Wide(num_ / g1) * (o.num_ / g2);
  Wide d = Wide(den_ / g2) * (o.den_ / g1);
  return Fraction(narrow(n, "multiplication"), narrow(d, "multiplication"));
}

Fraction Fraction::operator/(const Fraction& o) const {
  if (o.num_ == 0) fail(ErrorCode::InvalidArgument, "division by zero rational");
  return *this * Fraction(o.den_, o.num_);
}

bool Fraction::operator<(const Fraction& o) const {
  return Wide(num_) * o.den_ < Wide(o.num_) * den_;
}

long long Fraction::ceil_value() const {
  if (num_ >= 0) return (num_ + den_ - 1) / den_;
  return num_ / den_;
}

long long Fraction::ceil_scaled(long long k) const {
  Wide n = Wide(num_) * k;
  Wide d = den_;
  Wide q = n >= 0 ? (n + d - 1) / d : n / d;
  return narrow(q, "ceil_scaled");
}

long long Fraction::round_scaled(long long k) const {
  if (num_ < 0)
    fail(ErrorCode::InvalidArgument, "round_scaled on negative rational");
  Wide n = Wide(num_) * k;
  Wide q = (2 * n + den_) / (2 * Wide(den_));
  return narrow(q, "round_scaled");
}

double Fraction::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Fraction::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace cyclemine
