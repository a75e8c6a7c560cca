#pragma once

#include <string>

#include "qcm/dynkin.hpp"
#include "qcm/resolution.hpp"

namespace qcm {

// Coordinate ring of rep(Q,d): one variable x_<arrow>_<i>_<j> per matrix
// entry, arrows in quiver order, entries row-major, 1-based indices.
PolyRingPtr rep_space_ring(const Quiver& q, const DimVector& d, const Field& f,
                           MonoOrder order = MonoOrder::DegRevLex);

// The generic matrix of an arrow inside the rep-space ring.
Matrix<Poly> generic_arrow_matrix(const Quiver& q, const DimVector& d, int arrow,
                                  const PolyRingPtr& ring);

// Orbit-closure ideal of m for an equioriented A_n quiver: for every path
// interval with a non-generic composite rank r, all (r+1)-minors of the
// generic composite matrix. Conditions implied by a sub-interval are pruned.
Ideal rank_condition_ideal(const Representation& m, const PolyRingPtr& ring);
Ideal rank_condition_ideal(const Representation& m);

// Desk-scale guardrails for the Groebner pipeline.
inline constexpr long kMaxRepSpaceVars = 12;
inline constexpr long kMaxIdealGens = 200;

struct CmReport {
  long l = 0;
  int pd_resolution = 0;
  long pd_predicted = 0;  // l + dim End - sum d_i^2
  long dim = 0;           // Krull dimension of R/I
  long depth = 0;         // l - pd (Auslander-Buchsbaum)
  long height = 0;        // l - dim
  long grade = 0;         // = height over the polynomial ring
  long orbit_dim = 0;     // from linear algebra; must equal dim
  bool cm = false;                  // depth == dim
  bool perfect = false;             // grade == pd
  bool cm_iff_formula = false;      // cm <-> (pd_resolution == pd_predicted)
  bool auslander_buchsbaum = false; // pd + depth == l
  BettiTable betti;
  std::string field_name;
  std::string assumption;  // standing assumption recorded in every report
};

// End-to-end Cohen-Macaulay check for an equioriented A_n representation:
// ideal -> Groebner -> Krull dimension -> minimal resolution, then the
// homological identities. The Krull dimension is cross-checked against the
// orbit dimension from linear algebra; a mismatch aborts.
CmReport verify_cm(const Representation& m, const Field& groebner_field,
                   MonoOrder order = MonoOrder::DegRevLex);
CmReport verify_cm(const Representation& m);

struct SurveyRow {
  OrbitLabel label;
  long orbit_dim = 0;
  long pd = 0;
  bool open = false;
  bool closed = false;
};

// Formula-side survey over all orbits of (q, d): no resolutions computed.
std::vector<SurveyRow> pd_formula_survey(QuiverPtr q, const DimVector& d, const Field& f);

}  // namespace qcm
