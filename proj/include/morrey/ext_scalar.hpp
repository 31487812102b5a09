#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace morrey {

/// Exact rational extended with +infinity.
///
/// All space parameters and decision thresholds are ExtScalar so that strict
/// inequalities ("> threshold") and boundary detection ("== threshold") are
/// decided exactly. Floating point appears only in the numerical engines.
///
/// Conventions: 1/inf = 0 and 1/0 = inf (reciprocal); inf + x = inf;
/// inf * x = inf for x > 0. Indeterminate forms (inf - inf, inf * 0, inf/inf)
/// throw; the parameter-level conventions (e.g. p/p = 1 when both are inf)
/// live in params.hpp where the context justifies them.
class ExtScalar {
 public:
  using Rat = boost::rational<long long>;

  constexpr ExtScalar() = default;
  ExtScalar(long long n) : r_(n) {}  // implicit: integers promote to rationals
  ExtScalar(long long num, long long den) : r_(num, den) {}
  explicit ExtScalar(Rat r) : r_(std::move(r)) {}

  static ExtScalar inf() {
    ExtScalar x;
    x.inf_ = true;
    return x;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }

  const Rat& rat() const {
    if (inf_) throw std::domain_error("ExtScalar: rat() on infinity");
    return r_;
  }
  long long num() const { return rat().numerator(); }
  long long den() const { return rat().denominator(); }

  friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
    if (a.inf_ || b.inf_) return inf();
    return ExtScalar(a.r_ + b.r_);
  }
  friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
    if (b.inf_) throw std::domain_error("ExtScalar: x - inf is not defined");
    if (a.inf_) return inf();
    return ExtScalar(a.r_ - b.r_);
  }
  friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
    if (a.inf_ || b.inf_) {
      const ExtScalar& fin = a.inf_ ? b : a;
      if (fin.inf_ || fin.r_.numerator() > 0) return inf();
      throw std::domain_error("ExtScalar: inf * x needs x > 0");
    }
    return ExtScalar(a.r_ * b.r_);
  }
  friend ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) {
    if (b.inf_) {
      if (a.inf_) throw std::domain_error("ExtScalar: inf/inf is not defined");
      return ExtScalar(0);
    }
    if (b.r_.numerator() == 0) throw std::domain_error("ExtScalar: division by zero");
    if (a.inf_) {
      if (b.r_.numerator() > 0) return inf();
      throw std::domain_error("ExtScalar: inf / x needs x > 0");
    }
    return ExtScalar(a.r_ / b.r_);
  }
  ExtScalar operator-() const {
    if (inf_) throw std::domain_error("ExtScalar: negation of infinity");
    return ExtScalar(-r_);
  }
  ExtScalar& operator+=(const ExtScalar& b) { return *this = *this + b; }
  ExtScalar& operator-=(const ExtScalar& b) { return *this = *this - b; }
  ExtScalar& operator*=(const ExtScalar& b) { return *this = *this * b; }
  ExtScalar& operator/=(const ExtScalar& b) { return *this = *this / b; }

  /// 1/x with 1/inf = 0 and 1/0 = inf.
  ExtScalar reciprocal() const {
    if (inf_) return ExtScalar(0);
    if (r_.numerator() == 0) return inf();
    return ExtScalar(Rat(1) / r_);
  }

  /// max(x, 0); the (.)_+ operation.
  ExtScalar positive_part() const {
    if (inf_) return inf();
    return r_.numerator() > 0 ? *this : ExtScalar(0);
  }

  // Comparisons go through the normalized components: boost 1.74's
  // heterogeneous rational comparisons self-recurse under C++20 rewriting.
  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ ||
           (a.r_.numerator() == b.r_.numerator() && a.r_.denominator() == b.r_.denominator());
  }
  friend std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    // denominators are positive, so cross-multiplication preserves order
    const long long lhs = a.r_.numerator() * b.r_.denominator();
    const long long rhs = b.r_.numerator() * a.r_.denominator();
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const;

  /// Canonical text form: "inf", "n", or "n/d" (d > 0, gcd-reduced).
  std::string str() const;

  /// Parses the canonical forms accepted by the CLI grammar: "inf",
  /// optionally signed integers, and fractions "a/b". Throws
  /// std::invalid_argument with a description on malformed input.
  static ExtScalar parse(std::string_view text);

 private:
  Rat r_{0};
  bool inf_ = false;
};

inline ExtScalar min(const ExtScalar& a, const ExtScalar& b) { return a < b ? a : b; }
inline ExtScalar max(const ExtScalar& a, const ExtScalar& b) { return a < b ? b : a; }

}  // namespace morrey
