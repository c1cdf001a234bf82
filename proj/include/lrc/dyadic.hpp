#pragma once

// Exact dyadic rationals: numerator / 2^exponent with an arbitrary-width
// numerator. Sums of 2^{-d} distance terms stay in this form, so closeness
// values compare by exact equality instead of floating-point tolerance.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace lrc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Dyadic {
 public:
  Dyadic() = default;

  Dyadic(long long value) : num_(value) {}  // NOLINT: implicit by design

  Dyadic(BigInt numerator, unsigned exponent)
      : num_(std::move(numerator)), exp_(exponent) {
    canonicalize();
  }

  // 2^e for any integer e (negative exponents give proper fractions).
  static Dyadic pow2(int e) {
    if (e >= 0) return Dyadic(BigInt(1) << e, 0);
    return Dyadic(BigInt(1), static_cast<unsigned>(-e));
  }

  const BigInt& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
  }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
  }
  Dyadic operator-() const {
    Dyadic r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  // Canonical form is unique, so equality is field-wise.
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    BigInt lhs = a.num_ << (e - a.exp_);
    BigInt rhs = b.num_ << (e - b.exp_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Dyadics always terminate in decimal; rendering is exact.
  std::string to_decimal_string() const {
    if (exp_ == 0) return num_.str();
    BigInt mag = boost::multiprecision::abs(num_);
    std::string digits =
        BigInt(mag * boost::multiprecision::pow(BigInt(5), exp_)).str();
    if (digits.size() <= exp_)
      digits.insert(0, exp_ + 1 - digits.size(), '0');
    digits.insert(digits.size() - exp_, ".");
    if (num_ < 0) digits.insert(0, "-");
    return digits;
  }

  double to_double() const {
    return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_));
  }

  BigRational to_rational() const {
    return BigRational(num_, BigInt(1) << exp_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
    return os << d.to_decimal_string();
  }

 private:
  // Minimal exponent: either exp_ == 0 or the numerator is odd.
  void canonicalize() {
    if (num_.is_zero()) {
      exp_ = 0;
      return;
    }
    if (exp_ == 0) return;
    unsigned tz = boost::multiprecision::lsb(boost::multiprecision::abs(num_));
    unsigned shift = std::min(tz, exp_);
    num_ >>= shift;
    exp_ -= shift;
  }

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

// Decimal rendering of an exact rational. Terminating expansions are printed
// exactly; anything else is rounded half-up at max_frac_digits.
inline std::string rational_decimal(const BigRational& q,
                                    unsigned max_frac_digits = 12) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string frac;
  bool exact = rem.is_zero();
  while (!rem.is_zero() && frac.size() < max_frac_digits) {
    rem *= 10;
    frac.push_back(static_cast<char>('0' + (rem / den).convert_to<int>()));
    rem %= den;
    exact = rem.is_zero();
  }
  if (!exact) {
    rem *= 10;
    if (rem / den >= 5) {  // round half-up with carry
      int i = static_cast<int>(frac.size()) - 1;
      for (; i >= 0; --i) {
        if (frac[i] != '9') {
          ++frac[i];
          break;
        }
        frac[i] = '0';
      }
      if (i < 0) ++whole;
    }
  }
  std::string out = whole.str();
  if (!frac.empty()) out += "." + frac;
  if (negative && (whole != 0 || !frac.empty())) out.insert(0, "-");
  return out;
}

}  // namespace lrc
