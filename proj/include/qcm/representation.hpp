#pragma once

#include <string>
#include <vector>

#include "qcm/linalg.hpp"
#include "qcm/quiver.hpp"

namespace qcm {

// A point of rep(Q,d): one exact matrix per arrow, where an arrow a: i -> j
// carries a d_j x d_i matrix acting on column vectors.
class Representation {
 public:
  Representation(QuiverPtr q, Field f, DimVector d, std::vector<Mat> mats);

  static Representation zero(QuiverPtr q, const Field& f, DimVector d);
  // Vertex simple S_v: dimension 1 at v, zero elsewhere.
  static Representation simple(QuiverPtr q, const Field& f, int v);

  // Parses the representation file format; lines starting with `quiver` are
  // ignored here (they are a loader hint).
  static Representation parse(const std::string& text, QuiverPtr q);
  std::string serialize() const;

  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const Quiver& quiver() const { return *quiver_; }
  const Field& field() const { return field_; }
  const DimVector& dims() const { return dims_; }
  const Mat& matrix(int arrow) const { return mats_[arrow]; }
  const std::vector<Mat>& matrices() const { return mats_; }

  long total_dim() const;
  bool all_maps_zero() const;

  Representation scale(const FieldElement& lambda) const;
  // Conjugate by per-vertex invertible matrices: a: i -> j maps to
  // g_j f_a g_i^{-1}.
  Representation conjugate(const std::vector<Mat>& g) const;

  bool operator==(const Representation& o) const;

 private:
  QuiverPtr quiver_;
  Field field_;
  DimVector dims_;
  std::vector<Mat> mats_;
};

Representation direct_sum(const Representation& a, const Representation& b);

// Checks both live over equal quivers (structural) and the same field.
void check_compatible(const Representation& a, const Representation& b);

}  // namespace qcm
