#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qcm/field.hpp"
#include "qcm/matrix.hpp"

namespace qcm {

// Monomial as an exponent vector with cached total degree.
struct Mono {
  std::vector<std::uint16_t> e;
  int deg = 0;

  bool operator==(const Mono&) const = default;
};

Mono mono_one(int nvars);
Mono mono_var(int nvars, int i);
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_div(const Mono& b, const Mono& a);      // b / a, requires a | b
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

enum class MonoOrder { DegRevLex, DegLex, Lex };

MonoOrder parse_mono_order(const std::string& name);

// +1 when a > b, 0 when equal, -1 when a < b.
int mono_cmp(const Mono& a, const Mono& b, MonoOrder o);

struct PolyRing {
  std::vector<std::string> vars;
  Field field;
  MonoOrder order = MonoOrder::DegRevLex;

  int nvars() const { return static_cast<int>(vars.size()); }
  int var_index(const std::string& name) const;  // throws on unknown
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_ring(std::vector<std::string> vars, const Field& f,
                      MonoOrder order = MonoOrder::DegRevLex);

struct Term {
  Mono m;
  FieldElement c;
};

// Polynomial with terms sorted descending in the ring's monomial order.
// Carries its ring so arithmetic operators are self-contained.
class Poly {
 public:
  Poly() = default;  // zero of no ring; usable only as a placeholder
  static Poly zero(PolyRingPtr r);
  static Poly constant(PolyRingPtr r, const FieldElement& c);
  static Poly constant(PolyRingPtr r, long c);
  static Poly variable(PolyRingPtr r, int i);
  static Poly from_terms(PolyRingPtr r, std::vector<Term> terms);  // normalizes

  const PolyRingPtr& ring() const { return ring_; }
  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& leading() const;
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.deg == 0); }

  Poly monic() const;
  Poly scaled(const FieldElement& c) const;
  Poly term_mul(const Mono& m, const FieldElement& c) const;

  Poly operator-() const;
  bool operator==(const Poly& o) const { return t_ == o.t_; }

  std::string str() const;

 private:
  friend Poly operator+(const Poly&, const Poly&);
  friend Poly operator-(const Poly&, const Poly&);
  friend Poly operator*(const Poly&, const Poly&);

  PolyRingPtr ring_;
  std::vector<Term> t_;
};

inline bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

inline bool is_zero(const Poly& p) { return p.is_zero(); }

// Exact polynomial division: throws if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);

// Parses the `+`/`-` separated term format, e.g. "x_a_1_1^2 - 2/3*x_b_1_1".
Poly poly_parse(PolyRingPtr r, const std::string& text);

// Maps variable i of p's ring to variable var_map[i] of the target ring.
Poly map_vars(const Poly& p, PolyRingPtr target, const std::vector<int>& var_map);

// Determinant of a square polynomial matrix (Laplace expansion with column
// masks; fine for the small sizes used here).
Poly poly_det(const Matrix<Poly>& m, PolyRingPtr r);

}  // namespace qcm
