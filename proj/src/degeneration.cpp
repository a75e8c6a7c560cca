#include "qcm/degeneration.hpp"

#include <sstream>

namespace qcm {

bool hom_leq(const OrbitLabel& m, const OrbitLabel& n, const DynkinCache& cache) {
  if (m.total != n.total) throw Error("hom_leq: labels have different dimension vectors");
  const auto hm = cache.hom_vector(m);
  const auto hn = cache.hom_vector(n);
  for (std::size_t i = 0; i < hm.size(); ++i)
    if (hm[i] > hn[i]) return false;
  return true;
}

int DegenerationPoset::dense_index() const {
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    bool below_all = true;
    for (int j = 0; j < static_cast<int>(nodes.size()) && below_all; ++j)
      if (!leq[i][j]) below_all = false;
    if (below_all) return i;
  }
  throw Error("internal: no dense orbit in the poset");
}

int DegenerationPoset::semisimple_index() const {
  for (int j = 0; j < static_cast<int>(nodes.size()); ++j) {
    bool above_all = true;
    for (int i = 0; i < static_cast<int>(nodes.size()) && above_all; ++i)
      if (!leq[i][j]) above_all = false;
    if (above_all) return j;
  }
  throw Error("internal: no semisimple orbit in the poset");
}

DegenerationPoset degeneration_poset(const DynkinCache& cache, const DimVector& d) {
  const Quiver& q = *cache.quiver_ptr();
  DegenerationPoset p;
  p.quiver = cache.quiver_ptr();
  p.d = d;

  const long l = rep_space_dim(q, d);
  const long dsq = sum_of_squares(d);
  for (const auto& label : enumerate_orbits(q, d)) {
    PosetNode node;
    node.label = label;
    const long end = cache.end_dim_of(label);
    node.ext1 = l - dsq + end;
    node.orbit_dim = dsq - end;
    node.pd = node.ext1;
    node.open = node.ext1 == 0;
    node.closed = label.semisimple();
    p.nodes.push_back(std::move(node));
  }

  const int n = static_cast<int>(p.nodes.size());
  std::vector<std::vector<long>> homvec;
  homvec.reserve(n);
  for (const auto& node : p.nodes) homvec.push_back(cache.hom_vector(node.label));

  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t r = 0; r < homvec[i].size() && le; ++r)
        if (homvec[i][r] > homvec[j][r]) le = false;
      p.leq[i][j] = le;
    }

  // transitive reduction (the relation is already a partial order)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !p.leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) cover = false;
      if (cover) p.covers.emplace_back(i, j);
    }
  return p;
}

DegenerationPoset degeneration_poset(QuiverPtr q, const DimVector& d, const Field& f) {
  check_dim_vector(*q, d);
  DynkinCache cache(std::move(q), f);
  return degeneration_poset(cache, d);
}

DegenerationPdReport check_degeneration_pd(const DegenerationPoset& p) {
  DegenerationPdReport rep;
  const int n = static_cast<int>(p.nodes.size());
  for (int i = 0; i < n; ++i) {
    long minpd = p.nodes[i].pd;
    bool constant = true;
    for (int j = 0; j < n; ++j) {
      if (!p.leq[i][j]) continue;
      if (p.nodes[j].pd < minpd) minpd = p.nodes[j].pd;
      if (p.nodes[j].pd != p.nodes[i].pd) constant = false;
    }
    if (minpd != p.nodes[i].pd)
      rep.violations.push_back({i, "pd " + std::to_string(p.nodes[i].pd) + " is not the minimum " +
                                       std::to_string(minpd) + " over its degenerations"});
    if (constant) rep.closed_nodes.push_back(i);
    if (constant != p.nodes[i].closed)
      rep.violations.push_back({i, std::string("closed-orbit criterion mismatch: pd constant=") +
                                       (constant ? "yes" : "no") + " but semisimple=" +
                                       (p.nodes[i].closed ? "yes" : "no")});
  }
  return rep;
}

std::string export_dot(const DegenerationPoset& p) {
  std::ostringstream out;
  out << "digraph degeneration {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& nd = p.nodes[i];
    out << "  n" << i << " [label=\"" << nd.label.str() << "\\norbit dim " << nd.orbit_dim
        << ", pd " << nd.pd << "\"];\n";
  }
  for (const auto& [i, j] : p.covers) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qcm
