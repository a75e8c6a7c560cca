#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qcm/error.hpp"

namespace qcm {

enum class FieldKind { Rationals, Prime };

// Coefficient field: the rationals, or Z/p for a prime p < 2^31.
struct Field {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;

  static Field rationals() { return Field{FieldKind::Rationals, 0}; }
  static Field prime(std::uint32_t p);

  bool operator==(const Field&) const = default;
  std::string name() const;  // "Q" or "F<p>"
};

// Parses "Q" / "q" or "F<p>" / "f<p>".
Field parse_field(const std::string& s);

class FieldElement;
FieldElement operator+(const FieldElement&, const FieldElement&);
FieldElement operator-(const FieldElement&, const FieldElement&);
FieldElement operator*(const FieldElement&, const FieldElement&);
FieldElement operator/(const FieldElement&, const FieldElement&);

// Exact scalar over a Field. All arithmetic is exact; division by zero and
// cross-field operations throw.
class FieldElement {
 public:
  FieldElement() : field_(Field::rationals()) {}
  explicit FieldElement(const Field& f) : field_(f) {}
  FieldElement(const Field& f, long v);
  static FieldElement from_rational(const Field& f, const mpq_class& q);
  // Accepts "a" or "a/b" with optional sign.
  static FieldElement parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  std::string str() const;

  // Rationals only.
  const mpq_class& rational() const;
  // Prime field only; value in [0, p).
  std::uint64_t residue() const { return r_; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  friend FieldElement operator+(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&, const FieldElement&);
  friend FieldElement operator*(const FieldElement&, const FieldElement&);
  friend FieldElement operator/(const FieldElement&, const FieldElement&);

  static void check_same_field(const FieldElement& a, const FieldElement& b);

  Field field_;
  mpq_class q_ = 0;       // payload for Rationals
  std::uint64_t r_ = 0;   // payload for Prime, reduced mod p
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement exact_div(const FieldElement& a, const FieldElement& b) { return a / b; }

}  // namespace qcm
