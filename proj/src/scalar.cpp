#include "homalg/scalar.hpp"

#include <ostream>

#include "homalg/error.hpp"

namespace homalg {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error("division by zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParseError("rational", "malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw ParseError("rational", "zero denominator in '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Scalar(q);
}

std::string Scalar::str() const { return q_.get_str(10); }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace homalg
