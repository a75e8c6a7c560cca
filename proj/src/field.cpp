#include "qcm/field.hpp"

#include <cctype>

namespace qcm {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw Error("division by zero in F" + std::to_string(p));
  // extended Euclid
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw Error("prime modulus too large (need p < 2^31): " + std::to_string(p));
  if (!is_prime_u32(p)) throw Error("modulus is not prime: " + std::to_string(p));
  return Field{FieldKind::Prime, p};
}

std::string Field::name() const {
  return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
}

Field parse_field(const std::string& s) {
  if (s == "Q" || s == "q") return Field::rationals();
  if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) {
    const std::string digits = s.substr(1);
    if (digits.empty()) throw Error("bad field name: " + s);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad field name: " + s);
    unsigned long p = std::stoul(digits);
    if (p >= (1ul << 31)) throw Error("prime modulus too large (need p < 2^31): " + digits);
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  throw Error("bad field name: " + s + " (expected Q or F<p>)");
}

FieldElement::FieldElement(const Field& f, long v) : field_(f) {
  if (f.kind == FieldKind::Rationals) {
    q_ = mpq_class(v);
  } else {
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += f.p;
    r_ = static_cast<std::uint64_t>(m);
  }
}

FieldElement FieldElement::from_rational(const Field& f, const mpq_class& q) {
  FieldElement x(f);
  if (f.kind == FieldKind::Rationals) {
    x.q_ = q;
    x.q_.canonicalize();
  } else {
    mpz_class num = q.get_num() % f.p;
    mpz_class den = q.get_den() % f.p;
    if (num < 0) num += f.p;
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    if (d == 0)
      throw Error("entry " + q.get_str() + " is not in " + f.name() + " (denominator divisible by " +
                  std::to_string(f.p) + ")");
    x.r_ = mod_mul(n, mod_inv(d, f.p), f.p);
  }
  return x;
}

FieldElement FieldElement::parse(const Field& f, const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_s = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_s = slash == std::string::npos ? "1" : text.substr(slash + 1);
  mpz_class num, den;
  try {
    num = mpz_class(num_s);
    den = mpz_class(den_s);
  } catch (const std::invalid_argument&) {
    throw Error("malformed number: '" + text + "'");
  }
  if (den == 0) throw Error("zero denominator in '" + text + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(f, q);
}

bool FieldElement::is_zero() const {
  return field_.kind == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool FieldElement::is_one() const {
  return field_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

const mpq_class& FieldElement::rational() const {
  if (field_.kind != FieldKind::Rationals) throw Error("rational() on a prime-field element");
  return q_;
}

void FieldElement::check_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_))
    throw Error("field mismatch: " + a.field_.name() + " vs " + b.field_.name());
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same_field(a, b);
  FieldElement x(a.field_);
  if (a.field_.kind == FieldKind::Rationals) x.q_ = a.q_ + b.q_;
  else x.r_ = mod_add(a.r_, b.r_, a.field_.p);
  return x;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same_field(a, b);
  FieldElement x(a.field_);
  if (a.field_.kind == FieldKind::Rationals) x.q_ = a.q_ - b.q_;
  else x.r_ = mod_sub(a.r_, b.r_, a.field_.p);
  return x;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same_field(a, b);
  FieldElement x(a.field_);
  if (a.field_.kind == FieldKind::Rationals) x.q_ = a.q_ * b.q_;
  else x.r_ = mod_mul(a.r_, b.r_, a.field_.p);
  return x;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same_field(a, b);
  FieldElement x(a.field_);
  if (a.field_.kind == FieldKind::Rationals) {
    if (b.q_ == 0) throw Error("division by zero in Q");
    x.q_ = a.q_ / b.q_;
  } else {
    x.r_ = mod_mul(a.r_, mod_inv(b.r_, a.field_.p), a.field_.p);
  }
  return x;
}

FieldElement FieldElement::operator-() const {
  FieldElement x(field_);
  if (field_.kind == FieldKind::Rationals) x.q_ = -q_;
  else x.r_ = r_ == 0 ? 0 : field_.p - r_;
  return x;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same_field(*this, o);
  return field_.kind == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

FieldElement FieldElement::inverse() const {
  return FieldElement(field_, 1) / *this;
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this;
  FieldElement acc(field_, 1);
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string FieldElement::str() const {
  return field_.kind == FieldKind::Rationals ? q_.get_str() : std::to_string(r_);
}

}  // namespace qcm
