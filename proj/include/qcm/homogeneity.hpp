#pragma once

#include <optional>

#include "qcm/homology.hpp"
#include "qcm/poly.hpp"

namespace qcm {

// Per-vertex exponents r_v with r_{t(a)} = r_{s(a)} + 1 for every arrow, so
// conjugating by lambda^{r_v} Id rescales every arrow matrix by lambda.
struct VertexScaling {
  std::vector<long> exponents;
  FieldElement lambda;
};

// Tree quivers only; lambda must be nonzero (exponents can be negative).
VertexScaling scaling_isomorphism(const Quiver& q, const DimVector& d, const FieldElement& lambda);

// Conjugates m by the diagonal tuple (lambda^{r_v} Id).
Representation apply_scaling(const VertexScaling& s, const Representation& m);

// True iff a generic element of Hom(m, n) is invertible at every vertex,
// i.e. m and n are isomorphic over the algebraic closure. Decided by the
// symbolic determinant of a generic member of the hom space.
bool is_isomorphic_generic(const Representation& m, const Representation& n);

enum class HomogeneityKind {
  TreeCone,           // tree quiver: scaling conjugation always exists
  GenericScaling,     // lambda*m generically isomorphic to m over k(lambda)
  NotHomogeneous,     // concrete witness lambda found
  InconclusiveGenericFalse  // generic test failed, no witness among small primes
};

struct HomogeneityVerdict {
  HomogeneityKind kind;
  bool homogeneous = false;
  std::optional<long> witness_lambda;
  std::string detail;
};

HomogeneityVerdict is_homogeneous(const Representation& m);

}  // namespace qcm
