#pragma once

#include <cmath>
#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace raca {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element a + b√2 + c√3 + d√6 of the ring ℤ[√2, √3].
class SurdInteger {
public:
  SurdInteger() = default;
  SurdInteger(BigInt a, BigInt b = 0, BigInt c = 0, BigInt d = 0)  // NOLINT(google-explicit-constructor)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  SurdInteger(long long a)  // NOLINT(google-explicit-constructor)
      : a_(a) {}

  static SurdInteger sqrt2() { return {0, 1, 0, 0}; }
  static SurdInteger sqrt3() { return {0, 0, 1, 0}; }
  static SurdInteger sqrt6() { return {0, 0, 0, 1}; }

  const BigInt& rational() const { return a_; }
  const BigInt& coeff_sqrt2() const { return b_; }
  const BigInt& coeff_sqrt3() const { return c_; }
  const BigInt& coeff_sqrt6() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational_integer() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  double to_double() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(2.0) +
           c_.convert_to<double>() * std::sqrt(3.0) + d_.convert_to<double>() * std::sqrt(6.0);
  }

  SurdInteger operator-() const { return {-a_, -b_, -c_, -d_}; }

  friend SurdInteger operator+(const SurdInteger& x, const SurdInteger& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
  }
  friend SurdInteger operator-(const SurdInteger& x, const SurdInteger& y) { return x + (-y); }

  // √2√3 = √6, √2√6 = 2√3, √3√6 = 3√2.
  friend SurdInteger operator*(const SurdInteger& x, const SurdInteger& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_ + 3 * x.c_ * y.c_ + 6 * x.d_ * y.d_,
            x.a_ * y.b_ + x.b_ * y.a_ + 3 * (x.c_ * y.d_ + x.d_ * y.c_),
            x.a_ * y.c_ + x.c_ * y.a_ + 2 * (x.b_ * y.d_ + x.d_ * y.b_),
            x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_};
  }

  SurdInteger& operator+=(const SurdInteger& y) { return *this = *this + y; }
  SurdInteger& operator*=(const SurdInteger& y) { return *this = *this * y; }

  friend bool operator==(const SurdInteger& x, const SurdInteger& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  // Coefficient-wise lexicographic order, for use in ordered containers.
  friend bool operator<(const SurdInteger& x, const SurdInteger& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    if (x.c_ != y.c_) return x.c_ < y.c_;
    return x.d_ < y.d_;
  }

  /// e.g. "2", "-sqrt(2)", "1 + 2*sqrt(6)".
  std::string to_string() const {
    std::string out;
    const auto append = [&out](const BigInt& coeff, const char* unit) {
      if (coeff == 0) return;
      const bool negative = coeff < 0;
      const BigInt magnitude = negative ? BigInt(-coeff) : coeff;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (*unit == '\0') {
        out += magnitude.str();
      } else {
        if (magnitude != 1) out += magnitude.str() + "*";
        out += unit;
      }
    };
    append(a_, "");
    append(b_, "sqrt(2)");
    append(c_, "sqrt(3)");
    append(d_, "sqrt(6)");
    return out.empty() ? "0" : out;
  }

private:
  BigInt a_ = 0;
  BigInt b_ = 0;
  BigInt c_ = 0;
  BigInt d_ = 0;
};

}  // namespace raca
