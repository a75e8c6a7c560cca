// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact integer arithmetic; no tolerances.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "qcm/cli.hpp"
#include "qcm/degeneration.hpp"
#include "qcm/homogeneity.hpp"
#include "qcm/verify.hpp"

using namespace qcm;

namespace {

const Field kQ = Field::rationals();
int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

QuiverPtr make_quiver(const std::string& text) {
  return std::make_shared<Quiver>(Quiver::parse(text));
}

QuiverPtr a2() { return make_quiver("vertex 1\nvertex 2\narrow a: 1 -> 2\n"); }

QuiverPtr a3() {
  return make_quiver("vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
}

QuiverPtr d4() {
  return make_quiver(
      "vertex c\nvertex 1\nvertex 2\nvertex 3\n"
      "arrow a: 1 -> c\narrow b: 2 -> c\narrow e: 3 -> c\n");
}

QuiverPtr e_type(int n) {
  std::string t;
  for (int i = 1; i <= n - 1; ++i) t += "vertex " + std::to_string(i) + "\n";
  t += "vertex top\n";
  for (int i = 1; i <= n - 2; ++i)
    t += "arrow a" + std::to_string(i) + ": " + std::to_string(i) + " -> " +
         std::to_string(i + 1) + "\n";
  t += "arrow atop: top -> 3\n";
  return make_quiver(t);
}

// random orientation of a path (type A) or of the D4 star
QuiverPtr random_dynkin(std::mt19937& rng) {
  const int pick = static_cast<int>(rng() % 4);
  auto q = std::make_shared<Quiver>();
  std::uniform_int_distribution<int> coin(0, 1);
  if (pick < 3) {
    const int n = 2 + pick;  // A2..A4
    for (int i = 0; i < n; ++i) q->add_vertex("v" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) {
      if (coin(rng))
        q->add_arrow("a" + std::to_string(i), i, i + 1);
      else
        q->add_arrow("a" + std::to_string(i), i + 1, i);
    }
  } else {
    q->add_vertex("c");
    for (int i = 1; i <= 3; ++i) q->add_vertex("v" + std::to_string(i));
    for (int i = 1; i <= 3; ++i) {
      if (coin(rng))
        q->add_arrow("a" + std::to_string(i), i, 0);
      else
        q->add_arrow("a" + std::to_string(i), 0, i);
    }
  }
  return q;
}

QuiverPtr random_tree(std::mt19937& rng, int n) {
  auto q = std::make_shared<Quiver>();
  for (int i = 0; i < n; ++i) q->add_vertex("v" + std::to_string(i));
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    const int p = parent(rng);
    if (coin(rng))
      q->add_arrow("a" + std::to_string(i), p, i);
    else
      q->add_arrow("a" + std::to_string(i), i, p);
  }
  return q;
}

Representation random_rep(std::mt19937& rng, QuiverPtr q, const DimVector& d) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<Mat> mats;
  for (const auto& a : q->arrows()) {
    Mat m(d[a.tgt], d[a.src], FieldElement(kQ));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = FieldElement(kQ, entry(rng));
    mats.push_back(std::move(m));
  }
  return Representation(std::move(q), kQ, d, std::move(mats));
}

Representation two_loop_point() {
  auto q = make_quiver("vertex 1\narrow al: 1 -> 1\narrow be: 1 -> 1\n");
  Mat ma(3, 3, FieldElement(kQ));
  ma.at(1, 0) = FieldElement(kQ, 1);
  ma.at(2, 1) = FieldElement(kQ, 1);
  Mat mb(3, 3, FieldElement(kQ));
  mb.at(2, 0) = FieldElement(kQ, 1);
  return Representation(q, kQ, {3}, {ma, mb});
}

Representation kronecker_point() {
  auto q = make_quiver("vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n");
  Mat ma(3, 3, FieldElement(kQ));
  ma.at(1, 0) = FieldElement(kQ, 1);
  ma.at(2, 1) = FieldElement(kQ, 1);
  Mat mb(3, 3, FieldElement(kQ));
  mb.at(0, 0) = FieldElement(kQ, 1);
  mb.at(2, 2) = FieldElement(kQ, 1);
  return Representation(q, kQ, {3, 3}, {ma, mb});
}

// all dimension vectors with entries in [0, cap]
std::vector<DimVector> all_dims(int nverts, int cap) {
  std::vector<DimVector> out;
  DimVector d(nverts, 0);
  while (true) {
    out.push_back(d);
    int i = 0;
    while (i < nverts && d[i] == cap) d[i++] = 0;
    if (i == nverts) break;
    ++d[i];
  }
  return out;
}

void criteria_1_2_4() {
  const auto start = std::chrono::steady_clock::now();
  long orbits = 0;
  bool cm_ok = true, formula_ok = true, ab_ok = true, dim_ok = true;
  std::string detail;
  for (auto q : {a2(), a3()}) {
    DynkinCache cache(q, kQ);
    for (const auto& d : all_dims(q->vertex_count(), 2)) {
      if (rep_space_dim(*q, d) > 8) continue;
      for (const auto& label : enumerate_orbits(*q, d)) {
        const Representation m = cache.assemble(label);
        const CmReport rep = verify_cm(m, kQ);
        ++orbits;
        if (!rep.cm) cm_ok = false;
        if (rep.pd_resolution != rep.pd_predicted) formula_ok = false;
        if (rep.pd_resolution + rep.depth != rep.l || rep.dim != rep.depth) ab_ok = false;
        if (rep.dim != rep.orbit_dim) dim_ok = false;
        if (!rep.cm || rep.pd_resolution != rep.pd_predicted) detail += " bad:" + label.str();
      }
    }
  }
  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  report(1, "every equioriented A2/A3 orbit (entries <= 2, l <= 8) is CM with pd = formula",
         cm_ok && formula_ok && orbits >= 15,
         std::to_string(orbits) + " orbits in " + std::to_string(secs.count()) + "s" + detail);
  report(2, "Auslander-Buchsbaum pd + depth = l with dim = depth on every instance", ab_ok);
  report(4, "Krull dimension equals the linear-algebra orbit dimension on every instance", dim_ok);
}

void criterion_3() {
  std::mt19937 rng(20250809);
  int done = 0;
  bool ok = true;
  while (done < 200) {
    auto q = random_dynkin(rng);
    DimVector d(q->vertex_count());
    std::uniform_int_distribution<int> dim(0, 3);
    for (auto& x : d) x = dim(rng);
    auto m = random_rep(rng, q, d);
    const long l = rep_space_dim(*q, d);
    const long dsq = sum_of_squares(d);
    const long end = end_dim(m);
    const long ext = ext1_dim(m);
    if (ext != l - dsq + end) ok = false;
    if (orbit_dim(m) != l - ext) ok = false;
    if (orbit_dim(m) != dsq - end) ok = false;
    if (pd_formula(m) != ext) ok = false;
    ++done;
  }
  report(3, "orbit dimension agrees through ext1 and stabilizer forms on 200 random reps", ok);
}

void criterion_5() {
  std::mt19937 rng(777);
  int done = 0;
  bool ok = true;
  while (done < 100) {
    auto q = random_tree(rng, 1 + static_cast<int>(rng() % 6));
    DimVector d(q->vertex_count());
    std::uniform_int_distribution<int> dim(0, 3);
    for (auto& x : d) x = dim(rng);
    auto m = random_rep(rng, q, d);
    for (long lv : {2L, 3L, 5L}) {
      const FieldElement lam(kQ, lv);
      const auto s = scaling_isomorphism(*q, d, lam);
      if (!(apply_scaling(s, m) == m.scale(lam))) ok = false;
    }
    ++done;
  }
  report(5, "vertex scaling conjugation reproduces lambda*m exactly on 100 random tree reps", ok);
}

void criterion_6() {
  const auto start = std::chrono::steady_clock::now();
  const auto m = two_loop_point();
  const auto v = is_homogeneous(m);
  const bool not_homog = !v.homogeneous && v.witness_lambda && *v.witness_lambda == 2;
  const bool self_iso = is_isomorphic_generic(m, m.scale(FieldElement(kQ, 1)));
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  report(6, "two-loop point: not homogeneous with witness lambda = 2; isomorphic to 1*m",
         not_homog && self_iso, std::to_string(ms.count()) + "ms");
}

void criterion_7() {
  const auto m = kronecker_point();
  const auto rep = invariant_report(m);
  bool ok = rep.l == 18 && rep.end == 4 && rep.pd == 4 && !rep.tree;
  // the CLI report must carry the certification caveat for this non-tree input
  std::ostringstream out, err;
  std::string data_dir = QCM_DATA_DIR;
  const int code = cli_run({"pd-formula", data_dir + "/kronecker_d33.rep"}, out, err);
  ok = ok && code == 0 && out.str().find("note:") != std::string::npos &&
       out.str().find("not certified") != std::string::npos;
  report(7, "kronecker d=(3,3): l = 18, end_dim = 4 (independent solve), caveat attached", ok,
         "pd_formula = " + std::to_string(rep.pd));
}

void criteria_8_10() {
  const auto start = std::chrono::steady_clock::now();
  struct Case {
    QuiverPtr q;
    DimVector d;
  };
  std::vector<Case> cases = {
      {a2(), {1, 1}}, {a2(), {2, 2}}, {a3(), {1, 1, 1}}, {d4(), {2, 1, 1, 1}}};
  bool check_ok = true, closed_ok = true, roundtrip_ok = true;
  for (const auto& c : cases) {
    DynkinCache cache(c.q, kQ);
    const auto p = degeneration_poset(cache, c.d);
    const auto rep = check_degeneration_pd(p);
    if (!rep.passed()) check_ok = false;
    // the pd-constancy criterion must single out exactly the semisimple label
    if (rep.closed_nodes.size() != 1) closed_ok = false;
    else if (!p.nodes[rep.closed_nodes[0]].label.semisimple()) closed_ok = false;
    for (const auto& node : p.nodes) {
      const auto back = decompose(cache.assemble(node.label), cache);
      if (!(back == node.label)) roundtrip_ok = false;
    }
  }
  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  report(8, "degeneration pd checks pass with no violations on the four standard posets",
         check_ok && closed_ok, std::to_string(secs.count()) + "s");
  report(10, "direct sum then decompose returns the original label on every orbit", roundtrip_ok);
}

void criterion_9() {
  struct Case {
    QuiverPtr q;
    std::size_t count;
  };
  std::vector<Case> cases = {{a2(), 3},       {a3(), 6},       {d4(), 12},
                             {e_type(6), 36}, {e_type(7), 63}, {e_type(8), 120}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto roots = positive_roots(*c.q);
    if (roots.size() != c.count) ok = false;
    for (const auto& r : roots)
      if (tits_form(*c.q, r) != 1) ok = false;
    detail += (detail.empty() ? "" : "/") + std::to_string(roots.size());
  }
  report(9, "positive root counts 3/6/12/36/63/120 with Tits form 1 throughout", ok, detail);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criteria_1_2_4();
  criterion_3();
  criterion_5();
  criterion_6();
  criterion_7();
  criteria_8_10();
  criterion_9();
  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  std::cout << (g_failures ? "FAILED" : "OK") << " (" << secs.count() << "s total)\n";
  return g_failures ? 1 : 0;
}
