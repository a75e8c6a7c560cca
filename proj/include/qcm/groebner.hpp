#pragma once

#include <vector>

#include "qcm/poly.hpp"

namespace qcm {

struct Ideal {
  std::vector<Poly> gens;  // nonzero, deduplicated
  bool homogeneous = false;
};

Ideal make_ideal(std::vector<Poly> gens);

// Remainder of f on division by G (full multivariate division).
Poly normal_form(Poly f, const std::vector<Poly>& g);

// Division with quotient tracking: f = sum q_i g_i + r.
struct Division {
  std::vector<Poly> quotients;
  Poly remainder;
};
Division divide(Poly f, const std::vector<Poly>& g);

// Reduced Groebner basis in the generators' ring: monic, pairwise tail-
// reduced, sorted by descending leading monomial. Deterministic.
std::vector<Poly> buchberger(const std::vector<Poly>& gens);

// Krull dimension of R/I from a reduced basis: the largest independent set
// of variables modulo the initial ideal. dim = nvars for the zero ideal;
// throws on the unit ideal.
long hilbert_dimension(const std::vector<Poly>& gb, const PolyRingPtr& ring);

}  // namespace qcm
