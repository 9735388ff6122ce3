#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace homalg {

// Exact rational number, always in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}                  // NOLINT(google-explicit-constructor)
  Scalar(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p" or "p/q" with optional leading sign; no decimals, no whitespace.
  static Scalar parse(std::string_view text);

  std::string str() const;
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(mpq_class(-q_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.q_ != b.q_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace homalg
