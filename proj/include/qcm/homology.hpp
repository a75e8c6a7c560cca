#pragma once

#include <optional>
#include <vector>

#include "qcm/representation.hpp"

namespace qcm {

// Basis of the space of morphisms M -> N: tuples (h_v) with
// h_{t(a)} f_a = g_a h_{s(a)} for every arrow a.
struct HomSpace {
  Representation source;
  Representation target;
  long dimension = 0;
  // basis[k][v] is the vertex-v component of the k-th basis morphism,
  // of shape dims(N)[v] x dims(M)[v].
  std::vector<std::vector<Mat>> basis;
};

HomSpace hom_space(const Representation& m, const Representation& n);

long hom_dim(const Representation& m, const Representation& n);
long end_dim(const Representation& m);
long vertex_end_dim(const DimVector& d);  // sum d_i^2

// dim Ext^1(M,M) = l - sum d_i^2 + dim End(M); acyclic quivers only.
long ext1_dim(const Representation& m);
// dim Ext^1(M,N) = dim Hom(M,N) - <dim M, dim N>; acyclic quivers only.
long ext1_dim_pair(const Representation& m, const Representation& n);

// dim of the conjugation orbit through m; acyclic quivers only.
long orbit_dim(const Representation& m);

// l + dim End(M) - sum d_i^2 (the predicted projective dimension of the
// orbit-closure coordinate ring); always defined arithmetically.
long pd_formula(const Representation& m);

bool is_orbit_open(const Representation& m);    // ext1 = 0; acyclic only
bool is_orbit_closed(const Representation& m);  // all maps zero; acyclic only

struct InvariantReport {
  long l = 0;
  long sum_d_sq = 0;
  long end = 0;
  long pd = 0;  // pd_formula value
  bool tree = false;
  bool acyclic = false;
  // present only for acyclic quivers
  std::optional<long> ext1;
  std::optional<long> orbit;
  std::optional<bool> open;
  std::optional<bool> closed;
};

InvariantReport invariant_report(const Representation& m);

}  // namespace qcm
