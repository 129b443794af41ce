#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "atlas/errors.hpp"

namespace atlas {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/*
  Elements of the real quadratic field Q(sqrt 2), stored as a + b*sqrt(2)
  with exact rational coordinates.  This is the ground field of every
  matrix and vector in the library: all pivoting, rank and zero decisions
  are exact, and sqrt(2) is the only irrationality that ever enters.
*/
struct QSqrt2 {
  Rational a; // rational part
  Rational b; // coefficient of sqrt(2)

  QSqrt2() : a(0), b(0) {}
  QSqrt2(int v) : a(v), b(0) {}                 // NOLINT: implicit on purpose
  QSqrt2(Rational v) : a(std::move(v)), b(0) {} // NOLINT
  QSqrt2(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static QSqrt2 sqrt2(int coeff = 1) { return QSqrt2(Rational(0), Rational(coeff)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  QSqrt2 conj() const { return QSqrt2(a, -b); } // a - b*sqrt(2)

  // Field norm a^2 - 2 b^2; zero iff the element is zero.
  Rational norm() const { return a * a - 2 * b * b; }

  QSqrt2 operator-() const { return QSqrt2(-a, -b); }

  QSqrt2& operator+=(const QSqrt2& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  QSqrt2& operator-=(const QSqrt2& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  QSqrt2& operator*=(const QSqrt2& o) {
    Rational na = a * o.a + 2 * b * o.b;
    Rational nb = a * o.b + b * o.a;
    a = std::move(na);
    b = std::move(nb);
    return *this;
  }

  QSqrt2 inverse() const {
    if (is_zero()) throw DomainError("QSqrt2: inversion of zero");
    Rational n = norm();
    return QSqrt2(a / n, -b / n);
  }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }
  // Lexicographic key order (not numeric order); used only for canonical maps.
  friend bool operator<(const QSqrt2& x, const QSqrt2& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }

  std::string str() const;
};

// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& r);

// Exact square root within Q(sqrt 2), if one exists.
std::optional<QSqrt2> qsqrt2_sqrt(const QSqrt2& x);

inline std::string QSqrt2::str() const {
  if (b == 0) return a.str();
  std::string s;
  if (a != 0) s = a.str() + (b > 0 ? "+" : "");
  if (b == 1)
    s += "r2";
  else if (b == -1)
    s += "-r2";
  else
    s += b.str() + "r2";
  return s;
}

inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rational(0);
  Integer num = numerator(r), den = denominator(r);
  Integer sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

inline std::optional<QSqrt2> qsqrt2_sqrt(const QSqrt2& x) {
  // (p + q*sqrt2)^2 = p^2 + 2q^2 + 2pq*sqrt2.
  if (x.is_zero()) return QSqrt2(0);
  if (x.b == 0) {
    if (auto s = rational_sqrt(x.a)) return QSqrt2(*s);
    // x.a = 2*c^2 gives sqrt = c*sqrt2.
    if (auto s = rational_sqrt(x.a / 2)) return QSqrt2::sqrt2() * QSqrt2(*s);
    return std::nullopt;
  }
  // Solve p^2 + 2q^2 = a, 2pq = b: p^2 is a root of 2t^2 - 2at + b^2 = 0.
  auto disc = rational_sqrt(x.a * x.a - 2 * x.b * x.b);
  if (!disc) return std::nullopt;
  for (int sign : {+1, -1}) {
    Rational p2 = (x.a + sign * *disc) / 2;
    auto p = rational_sqrt(p2);
    if (!p || *p == 0) continue;
    Rational q = x.b / (2 * *p);
    QSqrt2 cand(*p, q);
    if (cand * cand == x) return cand;
    cand = -cand;
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

} // namespace atlas
