#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "qrep/error.hpp"

namespace qrep {

// Coefficient field: Q or F_p with p prime. characteristic() is 0 for Q.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);  // throws UnsupportedType if p is not prime

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  unsigned long characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  // "q" or "fp:<p>"; parse() accepts the same syntax.
  std::string to_string() const;
  static Field parse(const std::string& s);

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

// Exact field element. Invariants: over Q the value is gcd-normalized with
// positive denominator (mpq canonical form); over F_p it is the integer
// residue in [0, p) with denominator 1.
class Scalar {
 public:
  Scalar() : f_(Field::rationals()), v_(0) {}  // rational zero

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  static Scalar from_long(long x, const Field& f);
  static Scalar from_mpq(const mpq_class& x, const Field& f);  // reduces mod p as needed
  // Accepts "n" or "n/d" (canonicalized); throws ParseError on malformed input
  // and FieldMismatch if a fraction with d not invertible is given over F_p.
  static Scalar parse(const std::string& s, const Field& f);

  const Field& field() const { return f_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws Error on division by zero
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "n" when the denominator is 1, else "n/d"; round-trips through parse().
  std::string to_string() const;

 private:
  Scalar(const Field& f, long x);
  Field f_;
  mpq_class v_;

  static void check_same_field(const Scalar& a, const Scalar& b);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qrep
