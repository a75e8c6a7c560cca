#pragma once

#include <string>
#include <vector>

#include "qcm/dynkin.hpp"

namespace qcm {

struct PosetNode {
  OrbitLabel label;
  long orbit_dim = 0;
  long ext1 = 0;
  long pd = 0;  // pd-formula value
  bool open = false;
  bool closed = false;
};

// Degeneration order for a fixed (Q, d): leq[i][j] holds when node j lies in
// the orbit closure of node i (j is a degeneration of i). The dense orbit is
// the unique node below all others, the semisimple one is above all others.
struct DegenerationPoset {
  QuiverPtr quiver;
  DimVector d;
  std::vector<PosetNode> nodes;             // canonical label order
  std::vector<std::vector<bool>> leq;       // leq[i][j]: i <=_deg j
  std::vector<std::pair<int, int>> covers;  // (i, j): immediate degeneration i -> j

  int dense_index() const;       // node with everything in its up-set
  int semisimple_index() const;  // node in everyone's up-set
};

// Hom-order criterion: M <=_deg N iff dim Hom(X, M) <= dim Hom(X, N) for
// every indecomposable X. Valid as the degeneration order on Dynkin quivers.
bool hom_leq(const OrbitLabel& m, const OrbitLabel& n, const DynkinCache& cache);

DegenerationPoset degeneration_poset(QuiverPtr q, const DimVector& d, const Field& f);
DegenerationPoset degeneration_poset(const DynkinCache& cache, const DimVector& d);

// Checks, per node M: the pd value is the minimum over its degenerations
// {N : M <=_deg N} and is attained at M itself; and M is closed (semisimple)
// exactly when pd is constant on that set. Violations are report content.
struct DegenerationPdReport {
  struct Violation {
    int node = 0;
    std::string what;
  };
  std::vector<Violation> violations;
  std::vector<int> closed_nodes;  // nodes whose up-set pd is constant
  bool passed() const { return violations.empty(); }
};

DegenerationPdReport check_degeneration_pd(const DegenerationPoset& p);

// Hasse diagram in DOT text; deterministic node order, dense orbit on top.
std::string export_dot(const DegenerationPoset& p);

}  // namespace qcm
