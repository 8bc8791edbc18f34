#include "qrep/scalar.hpp"

#include <ostream>

namespace qrep {

namespace {

bool is_prime_ul(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Canonical residue of an integer in [0, p).
mpz_class mod_p(const mpz_class& x, unsigned long p) {
  mpz_class r;
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return r;
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_prime_ul(p)) throw UnsupportedType("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rationals() ? "q" : "fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& s) {
  if (s == "q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad field spec: " + s);
    return prime(std::stoul(digits));
  }
  throw ParseError("bad field spec: " + s + " (expected q or fp:<p>)");
}

Scalar::Scalar(const Field& f, long x) : f_(f), v_(x) {
  if (f_.is_prime_field()) v_ = mpq_class(mod_p(v_.get_num(), f_.characteristic()));
}

Scalar Scalar::from_long(long x, const Field& f) { return Scalar(f, x); }

Scalar Scalar::from_mpq(const mpq_class& x, const Field& f) {
  Scalar s(f, 0);
  if (f.is_rationals()) {
    s.v_ = x;
    s.v_.canonicalize();
    return s;
  }
  const unsigned long p = f.characteristic();
  mpz_class den = mod_p(x.get_den(), p);
  if (sgn(den) == 0) throw FieldMismatch("denominator not invertible in " + f.to_string());
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
    throw FieldMismatch("denominator not invertible in " + f.to_string());
  s.v_ = mpq_class(mod_p(x.get_num() * inv, p));
  return s;
}

Scalar Scalar::parse(const std::string& s, const Field& f) {
  if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos)
    throw ParseError("bad scalar literal: '" + s + "'");
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("bad scalar literal: '" + s + "'");
  if (sgn(v.get_den()) == 0) throw ParseError("zero denominator in scalar literal: '" + s + "'");
  v.canonicalize();
  return from_mpq(v, f);
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_)
    throw FieldMismatch("scalar fields differ: " + a.f_.to_string() + " vs " + b.f_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(*this, o);
  Scalar r(f_, 0);
  if (f_.is_rationals()) {
    r.v_ = v_ + o.v_;
  } else {
    r.v_ = mpq_class(mod_p(v_.get_num() + o.v_.get_num(), f_.characteristic()));
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(*this, o);
  Scalar r(f_, 0);
  if (f_.is_rationals()) {
    r.v_ = v_ - o.v_;
  } else {
    r.v_ = mpq_class(mod_p(v_.get_num() - o.v_.get_num(), f_.characteristic()));
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(*this, o);
  Scalar r(f_, 0);
  if (f_.is_rationals()) {
    r.v_ = v_ * o.v_;
  } else {
    r.v_ = mpq_class(mod_p(v_.get_num() * o.v_.get_num(), f_.characteristic()));
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(f_, 0);
  if (f_.is_rationals()) {
    r.v_ = -v_;
  } else if (sgn(v_) != 0) {
    r.v_ = mpq_class(mpz_class(f_.characteristic()) - v_.get_num());
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  Scalar r(f_, 0);
  if (f_.is_rationals()) {
    r.v_ = 1 / v_;
  } else {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(f_.characteristic()).get_mpz_t());
    r.v_ = mpq_class(mod_p(inv, f_.characteristic()));
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(*this, o);
  if (o.is_zero()) throw Error("division by zero");
  return *this * o.inverse();
}

std::string Scalar::to_string() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qrep
