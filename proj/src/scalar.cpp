#include "lpa/scalar.hpp"

#include <charconv>

namespace lpa {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 62)) throw Error("field modulus too large");
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rational();
  if (text.rfind("gf:", 0) == 0) {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error("bad field modulus in '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw Error("unknown field mode '" + std::string(text) + "' (expected rational or gf:<p>)");
}

std::string Field::name() const {
  return is_rational() ? "rational" : "gf:" + std::to_string(modulus_);
}

Scalar::Scalar(const mpq_class& value, Field field) : value_(value), modulus_(field.modulus()) {
  value_.canonicalize();
  reduce();
}

Scalar Scalar::parse(std::string_view text, Field field) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw Error("empty scalar literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error("bad scalar literal '" + std::string(text) + "'");
  }
  return Scalar(q, field);
}

Field Scalar::field() const {
  return modulus_ == 0 ? Field::rational() : Field::prime(modulus_);
}

void Scalar::reduce() {
  if (modulus_ == 0) return;
  mpz_class p(static_cast<unsigned long>(modulus_));
  mpz_class num = value_.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value_.get_den() % p;
  if (den == 0) throw Error("denominator vanishes modulo " + std::to_string(modulus_));
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  value_ = mpq_class(num);
}

void Scalar::adopt_field(const Scalar& other) {
  if (modulus_ == other.modulus_) return;
  if (modulus_ == 0) {
    modulus_ = other.modulus_;
    reduce();
    return;
  }
  if (other.modulus_ != 0) throw Error("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  adopt_field(rhs);
  if (modulus_ != 0 && rhs.modulus_ == 0) {
    Scalar tmp = rhs;
    tmp.adopt_field(*this);
    value_ += tmp.value_;
  } else {
    value_ += rhs.value_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  adopt_field(rhs);
  if (modulus_ != 0 && rhs.modulus_ == 0) {
    Scalar tmp = rhs;
    tmp.adopt_field(*this);
    value_ *= tmp.value_;
  } else {
    value_ *= rhs.value_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw Error("division by zero");
  adopt_field(rhs);
  Scalar divisor = rhs;
  divisor.adopt_field(*this);
  if (modulus_ == 0) {
    value_ /= divisor.value_;
  } else {
    mpz_class p(static_cast<unsigned long>(modulus_));
    mpz_class inv;
    mpz_class d = divisor.value_.get_num();
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    value_ *= mpq_class(inv);
  }
  reduce();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
  Scalar x = a;
  Scalar y = b;
  x.adopt_field(b);
  y.adopt_field(x);
  return x.value_ == y.value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace lpa
