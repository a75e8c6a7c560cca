#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcm/homology.hpp"
#include "qcm/representation.hpp"

namespace qcm {

// A positive root of the underlying diagram, as a dimension vector.
using Root = DimVector;

// Canonical root order: total dimension, then lexicographic.
bool root_less(const Root& a, const Root& b);

// All positive roots of a Dynkin quiver, enumerated by closing the simple
// roots under the simple reflections; sorted canonically.
std::vector<Root> positive_roots(const Quiver& q);

// Simple reflection at vertex v for the symmetrized form of the underlying
// graph: s_v(d)_v = sum_{neighbors u} d_u - d_v.
Root simple_reflection(const Quiver& q, int v, const Root& d);

// Isomorphism class of a representation: multiset of positive roots.
struct OrbitLabel {
  std::vector<std::pair<Root, int>> parts;  // sorted descending, mult > 0
  DimVector total;

  bool semisimple() const;  // every part a simple root
  std::string str() const;
  bool operator==(const OrbitLabel&) const = default;
};

OrbitLabel make_label(const Quiver& q, std::vector<std::pair<Root, int>> parts);
bool label_less(const OrbitLabel& a, const OrbitLabel& b);

// All multisets of positive roots summing to d, canonically ordered.
std::vector<OrbitLabel> enumerate_orbits(const Quiver& q, const DimVector& d);

// BGP reflection at a sink (kernel construction) or source (cokernel
// construction); the result lives over the quiver with arrows at v reversed.
Representation reflection_functor(const Representation& m, int v);

bool is_sink(const Quiver& q, int v);
bool is_source(const Quiver& q, int v);

// Indecomposable representation with dimension vector r, built by reflecting
// a simple along an admissible sink sequence.
Representation indecomposable(QuiverPtr q, const Root& r, const Field& f);

// Per-quiver cache of roots, indecomposables and the hom-dimension table
// H[r][s] = dim Hom(X_r, X_s).
class DynkinCache {
 public:
  DynkinCache(QuiverPtr q, const Field& f);

  const QuiverPtr& quiver_ptr() const { return q_; }
  const std::vector<Root>& roots() const { return roots_; }
  const Representation& indec(int r) const { return indecs_[r]; }
  long hom_table(int r, int s) const { return h_[r][s]; }
  int root_index(const Root& r) const;  // throws if not a root

  // dim Hom(X_r, M) for M assembled from the label, for every root r.
  std::vector<long> hom_vector(const OrbitLabel& label) const;
  long end_dim_of(const OrbitLabel& label) const;
  Representation assemble(const OrbitLabel& label) const;

 private:
  QuiverPtr q_;
  Field field_;
  std::vector<Root> roots_;
  std::vector<Representation> indecs_;
  std::vector<std::vector<long>> h_;
};

// Multiplicities of indecomposable summands, solved exactly from the linear
// system H mu = (dim Hom(X_r, m))_r.
OrbitLabel decompose(const Representation& m, const DynkinCache& cache);
OrbitLabel decompose(const Representation& m);

}  // namespace qcm
