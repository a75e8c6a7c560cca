#include <algorithm>
#include <random>

#include "doctest.h"
#include "qcm/degeneration.hpp"
#include "test_util.hpp"

using namespace qcm;
using namespace qcm::testutil;

namespace {
const Field kQ = Field::rationals();
}

TEST_CASE("a2 d=(1,1): the interval degenerates to the semisimple, not back") {
  DynkinCache cache(a2(), kQ);
  auto interval = make_label(*cache.quiver_ptr(), {{{1, 1}, 1}});
  auto ss = make_label(*cache.quiver_ptr(), {{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(hom_leq(interval, ss, cache));
  CHECK(!hom_leq(ss, interval, cache));
  CHECK(hom_leq(interval, interval, cache));
  CHECK(hom_leq(ss, ss, cache));
  auto other = make_label(*cache.quiver_ptr(), {{{1, 0}, 2}});
  CHECK_THROWS_AS(hom_leq(interval, other, cache), Error);
}

TEST_CASE("a2 d=(1,1) poset is a 2-chain with pd 0 and 1") {
  auto p = degeneration_poset(a2(), {1, 1}, kQ);
  REQUIRE(p.nodes.size() == 2);
  CHECK(p.covers.size() == 1);
  const int top = p.dense_index();
  const int bot = p.semisimple_index();
  CHECK(top != bot);
  CHECK(p.nodes[top].pd == 0);
  CHECK(p.nodes[bot].pd == 1);
  CHECK(p.nodes[top].open);
  CHECK(!p.nodes[top].closed);
  CHECK(p.nodes[bot].closed);
  CHECK(p.covers[0] == std::pair<int, int>(top, bot));
}

TEST_CASE("a2 d=(2,2) poset is the rank chain 2 > 1 > 0") {
  auto p = degeneration_poset(a2(), {2, 2}, kQ);
  REQUIRE(p.nodes.size() == 3);
  CHECK(p.covers.size() == 2);
  std::vector<long> dims;
  for (const auto& n : p.nodes) dims.push_back(n.orbit_dim);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<long>{0, 3, 4});
  std::vector<long> pds;
  for (const auto& n : p.nodes) pds.push_back(n.pd);
  std::sort(pds.begin(), pds.end());
  CHECK(pds == std::vector<long>{0, 1, 4});
}

TEST_CASE("a3 d=(1,1,1) poset is the 4-element diamond") {
  auto p = degeneration_poset(a3_equi(), {1, 1, 1}, kQ);
  REQUIRE(p.nodes.size() == 4);
  CHECK(p.covers.size() == 4);  // top -> two middles -> bottom
  const int top = p.dense_index();
  const int bot = p.semisimple_index();
  CHECK(p.nodes[top].pd == 0);
  CHECK(p.nodes[bot].pd == 2);
  std::vector<int> mid;
  for (int i = 0; i < 4; ++i)
    if (p.nodes[i].pd == 1) mid.push_back(i);
  REQUIRE(mid.size() == 2);
  CHECK(!p.leq[mid[0]][mid[1]]);
  CHECK(!p.leq[mid[1]][mid[0]]);
}

TEST_CASE("a2 d=(n,n) posets are chains ordered by rank, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    auto p = degeneration_poset(a2(), {n, n}, kQ);
    REQUIRE(static_cast<int>(p.nodes.size()) == n + 1);
    CHECK(p.covers.size() == p.nodes.size() - 1);
    // total order: every pair comparable
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
      for (std::size_t j = 0; j < p.nodes.size(); ++j)
        CHECK((p.leq[i][j] || p.leq[j][i]));
  }
}

TEST_CASE("exactly one dense orbit per Dynkin pair") {
  std::mt19937 rng(55);
  for (auto q : {a2(), a3_equi(), a3_sink(), d4()}) {
    for (int iter = 0; iter < 3; ++iter) {
      auto d = random_dims(rng, q->vertex_count(), 2);
      auto p = degeneration_poset(q, d, kQ);
      int dense = 0;
      for (const auto& n : p.nodes) dense += n.ext1 == 0;
      CHECK(dense == 1);
    }
  }
}

TEST_CASE("degenerate dimension vector gives a singleton poset") {
  auto p = degeneration_poset(a2(), {0, 0}, kQ);
  CHECK(p.nodes.size() == 1);
  CHECK(p.covers.empty());
  CHECK(p.dense_index() == 0);
  CHECK(p.semisimple_index() == 0);
  CHECK(p.nodes[0].pd == 0);
}

TEST_CASE("hom order is a partial order at small scale") {
  std::mt19937 rng(17);
  for (auto q : {a2(), a3_equi(), a3_sink()}) {
    DynkinCache cache(q, kQ);
    for (int iter = 0; iter < 4; ++iter) {
      auto d = random_dims(rng, q->vertex_count(), 2);
      auto labels = enumerate_orbits(*q, d);
      const int n = static_cast<int>(labels.size());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const bool ij = hom_leq(labels[i], labels[j], cache);
          if (i == j) CHECK(ij);
          if (i != j && ij) CHECK(!hom_leq(labels[j], labels[i], cache));  // antisymmetry
          for (int k = 0; k < n; ++k)
            if (ij && hom_leq(labels[j], labels[k], cache))
              CHECK(hom_leq(labels[i], labels[k], cache));  // transitivity
        }
    }
  }
}

TEST_CASE("poset structure invariants on the standard instances") {
  struct Case {
    QuiverPtr q;
    DimVector d;
  };
  std::vector<Case> cases = {
      {a2(), {1, 1}}, {a2(), {2, 2}}, {a3_equi(), {1, 1, 1}}, {d4(), {2, 1, 1, 1}}};
  for (const auto& c : cases) {
    auto p = degeneration_poset(c.q, c.d, kQ);
    const int top = p.dense_index();
    const int bot = p.semisimple_index();
    CHECK(p.nodes[top].ext1 == 0);
    CHECK(p.nodes[bot].label.semisimple());
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
      for (std::size_t j = 0; j < p.nodes.size(); ++j)
        if (i != j && p.leq[i][j]) CHECK(p.nodes[i].orbit_dim > p.nodes[j].orbit_dim);
    for (const auto& [i, j] : p.covers) CHECK(p.nodes[i].pd < p.nodes[j].pd);
    // annotations agree with the matrix-level homology computations
    DynkinCache cache(c.q, kQ);
    for (const auto& node : p.nodes) {
      auto rep = cache.assemble(node.label);
      CHECK(node.ext1 == ext1_dim(rep));
      CHECK(node.orbit_dim == orbit_dim(rep));
      CHECK(node.pd == pd_formula(rep));
      CHECK(node.open == is_orbit_open(rep));
      CHECK(node.closed == is_orbit_closed(rep));
    }
  }
}

TEST_CASE("pd is minimal over degenerations and detects closed orbits") {
  struct Case {
    QuiverPtr q;
    DimVector d;
  };
  std::vector<Case> cases = {
      {a2(), {1, 1}}, {a2(), {2, 2}}, {a3_equi(), {1, 1, 1}}, {d4(), {2, 1, 1, 1}}};
  for (const auto& c : cases) {
    auto p = degeneration_poset(c.q, c.d, kQ);
    auto rep = check_degeneration_pd(p);
    CHECK(rep.passed());
    REQUIRE(rep.closed_nodes.size() == 1);
    CHECK(rep.closed_nodes[0] == p.semisimple_index());
  }
}

TEST_CASE("singleton poset passes the pd checks trivially") {
  auto p = degeneration_poset(a2(), {0, 0}, kQ);
  auto rep = check_degeneration_pd(p);
  CHECK(rep.passed());
  CHECK(rep.closed_nodes == std::vector<int>{0});
}

TEST_CASE("dot export shapes") {
  auto p2 = degeneration_poset(a2(), {1, 1}, kQ);
  auto dot2 = export_dot(p2);
  CHECK(dot2.find("n0") != std::string::npos);
  CHECK(std::count(dot2.begin(), dot2.end(), '>') == 1);  // one edge

  auto p3 = degeneration_poset(a2(), {2, 2}, kQ);
  auto dot3 = export_dot(p3);
  CHECK(std::count(dot3.begin(), dot3.end(), '>') == 2);

  auto p0 = degeneration_poset(a2(), {0, 0}, kQ);
  auto dot0 = export_dot(p0);
  CHECK(dot0.find("n0") != std::string::npos);
  CHECK(std::count(dot0.begin(), dot0.end(), '>') == 0);
  CHECK(export_dot(p3) == dot3);  // deterministic
}
