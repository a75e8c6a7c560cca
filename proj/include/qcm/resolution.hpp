#pragma once

#include <map>

#include "qcm/groebner.hpp"

namespace qcm {

// Graded Betti numbers of a minimal free resolution of R/I.
struct BettiTable {
  std::map<std::pair<int, int>, long> b;  // (homological index, internal degree) -> rank
  int pd = 0;

  long total(int i) const;
  long entry(int i, int j) const;
};

// Minimal free resolution of R/I for a homogeneous ideal: reduced Groebner
// basis, iterated Schreyer syzygies, then cancellation of constant entries.
BettiTable minimal_free_resolution(const Ideal& ideal, const PolyRingPtr& ring);

}  // namespace qcm
