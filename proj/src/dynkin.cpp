#include "qcm/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace qcm {

namespace {

long root_total(const Root& r) { return std::accumulate(r.begin(), r.end(), 0L); }

void require_dynkin(const Quiver& q, const char* what) {
  if (!classify(q).is_dynkin()) throw Error(std::string(what) + " requires a Dynkin quiver");
}

}  // namespace

bool root_less(const Root& a, const Root& b) {
  const long ta = root_total(a), tb = root_total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

Root simple_reflection(const Quiver& q, int v, const Root& d) {
  Root r = d;
  long s = 0;
  for (const auto& a : q.arrows()) {
    if (a.src == v) s += d[a.tgt];
    if (a.tgt == v) s += d[a.src];
  }
  r[v] = static_cast<int>(s - d[v]);
  return r;
}

std::vector<Root> positive_roots(const Quiver& q) {
  require_dynkin(q, "positive_roots");
  const int n = q.vertex_count();
  std::set<Root> seen;
  std::vector<Root> queue;
  for (int v = 0; v < n; ++v) {
    Root e(n, 0);
    e[v] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Root r = queue.back();
    queue.pop_back();
    for (int v = 0; v < n; ++v) {
      Root s = simple_reflection(q, v, r);
      if (std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; }) && !seen.count(s)) {
        seen.insert(s);
        queue.push_back(s);
      }
    }
  }
  std::vector<Root> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), root_less);
  return roots;
}

bool OrbitLabel::semisimple() const {
  for (const auto& [r, mult] : parts)
    if (root_total(r) != 1) return false;
  return true;
}

std::string OrbitLabel::str() const {
  std::ostringstream out;
  if (parts.empty()) return "0";
  bool first = true;
  for (const auto& [r, mult] : parts) {
    if (!first) out << " + ";
    first = false;
    if (mult > 1) out << mult << "*";
    out << "(";
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << ")";
  }
  return out.str();
}

OrbitLabel make_label(const Quiver& q, std::vector<std::pair<Root, int>> parts) {
  OrbitLabel l;
  std::map<Root, int> acc;
  for (auto& [r, m] : parts) {
    if (m <= 0) throw Error("label multiplicities must be positive");
    if (static_cast<int>(r.size()) != q.vertex_count()) throw Error("root length mismatch");
    acc[r] += m;
  }
  l.parts.assign(acc.begin(), acc.end());
  std::sort(l.parts.begin(), l.parts.end(),
            [](const auto& a, const auto& b) { return root_less(b.first, a.first); });
  l.total.assign(q.vertex_count(), 0);
  for (const auto& [r, m] : l.parts)
    for (int v = 0; v < q.vertex_count(); ++v) l.total[v] += m * r[v];
  return l;
}

bool label_less(const OrbitLabel& a, const OrbitLabel& b) {
  // graded-lexicographic on the expanded, descending root lists
  auto expand = [](const OrbitLabel& l) {
    std::vector<Root> v;
    for (const auto& [r, m] : l.parts)
      for (int i = 0; i < m; ++i) v.push_back(r);
    return v;
  };
  const auto ea = expand(a), eb = expand(b);
  if (ea.size() != eb.size()) return ea.size() < eb.size();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return root_less(eb[i], ea[i]);
  return false;
}

std::vector<OrbitLabel> enumerate_orbits(const Quiver& q, const DimVector& d) {
  require_dynkin(q, "enumerate_orbits");
  check_dim_vector(q, d);
  const auto roots = positive_roots(q);
  std::vector<OrbitLabel> out;
  std::vector<std::pair<Root, int>> stack;
  DimVector rem = d;

  auto all_zero = [](const DimVector& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  };

  // choose roots in descending canonical order so each multiset appears once
  std::vector<Root> ordered(roots.rbegin(), roots.rend());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (all_zero(rem)) {
      out.push_back(make_label(q, stack));
      return;
    }
    if (i == ordered.size()) return;
    const Root& r = ordered[i];
    int maxmult = -1;
    for (std::size_t v = 0; v < rem.size(); ++v)
      if (r[v] > 0) {
        int m = rem[v] / r[v];
        maxmult = maxmult < 0 ? m : std::min(maxmult, m);
      }
    if (maxmult < 0) maxmult = 0;  // zero root cannot occur
    for (int m = maxmult; m >= 1; --m) {
      for (std::size_t v = 0; v < rem.size(); ++v) rem[v] -= m * r[v];
      stack.emplace_back(r, m);
      rec(i + 1);
      stack.pop_back();
      for (std::size_t v = 0; v < rem.size(); ++v) rem[v] += m * r[v];
    }
    rec(i + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

bool is_sink(const Quiver& q, int v) {
  for (const auto& a : q.arrows())
    if (a.src == v) return false;
  return true;
}

bool is_source(const Quiver& q, int v) {
  for (const auto& a : q.arrows())
    if (a.tgt == v) return false;
  return true;
}

namespace {

QuiverPtr reverse_arrows_at(const Quiver& q, int v) {
  auto out = std::make_shared<Quiver>();
  for (int i = 0; i < q.vertex_count(); ++i) out->add_vertex(q.vertex_name(i));
  for (const auto& a : q.arrows()) {
    if (a.src == v || a.tgt == v)
      out->add_arrow(a.name, a.tgt, a.src);
    else
      out->add_arrow(a.name, a.src, a.tgt);
  }
  return out;
}

}  // namespace

Representation reflection_functor(const Representation& m, int v) {
  const Quiver& q = m.quiver();
  const Field& f = m.field();
  const DimVector& d = m.dims();
  const bool sink = is_sink(q, v);
  const bool source = is_source(q, v);
  if (!sink && !source)
    throw Error("reflection vertex " + q.vertex_name(v) + " is neither a sink nor a source");
  QuiverPtr rq = reverse_arrows_at(q, v);

  // incident arrows in quiver order
  std::vector<int> inc;
  for (int a = 0; a < q.arrow_count(); ++a)
    if (q.arrow(a).src == v || q.arrow(a).tgt == v) inc.push_back(a);

  long nsum = 0;
  std::vector<long> block(inc.size() + 1, 0);
  for (std::size_t k = 0; k < inc.size(); ++k) {
    const Arrow& a = q.arrow(inc[k]);
    const int other = sink ? a.src : a.tgt;
    block[k + 1] = block[k] + d[other];
    nsum += d[other];
  }

  DimVector nd = d;
  std::vector<Mat> mats = m.matrices();

  if (sink) {
    // kernel of the summed map (+)_a M_{s(a)} -> M_v
    Mat xi(d[v], nsum, FieldElement(f));
    for (std::size_t k = 0; k < inc.size(); ++k) {
      const Mat& fa = m.matrix(inc[k]);
      for (std::size_t i = 0; i < fa.rows(); ++i)
        for (std::size_t j = 0; j < fa.cols(); ++j) xi.at(i, block[k] + j) = fa.at(i, j);
    }
    const auto ker = kernel_basis(xi);
    const long kdim = static_cast<long>(ker.size());
    nd[v] = static_cast<int>(kdim);
    // new arrow v -> s(a): rows of the kernel basis in block k
    for (std::size_t k = 0; k < inc.size(); ++k) {
      const Arrow& a = q.arrow(inc[k]);
      Mat na(d[a.src], kdim, FieldElement(f));
      for (long c = 0; c < kdim; ++c)
        for (int i = 0; i < d[a.src]; ++i) na.at(i, c) = ker[c][block[k] + i];
      mats[inc[k]] = std::move(na);
    }
  } else {
    // cokernel of the stacked map M_v -> (+)_a M_{t(a)}
    Mat eta(nsum, d[v], FieldElement(f));
    for (std::size_t k = 0; k < inc.size(); ++k) {
      const Mat& fa = m.matrix(inc[k]);
      for (std::size_t i = 0; i < fa.rows(); ++i)
        for (std::size_t j = 0; j < fa.cols(); ++j) eta.at(block[k] + i, j) = fa.at(i, j);
    }
    // extend a column basis of im(eta) by standard vectors, via [eta | I]
    Mat ext(nsum, d[v] + nsum, FieldElement(f));
    for (long i = 0; i < nsum; ++i) {
      for (int j = 0; j < d[v]; ++j) ext.at(i, j) = eta.at(i, j);
      ext.at(i, d[v] + i) = FieldElement(f, 1);
    }
    auto ech = fraction_free_gauss_jordan(ext, FieldElement(f, 1));
    std::vector<long> completing;  // indices of chosen standard vectors
    long rk = 0;
    for (auto c : ech.pivot_cols) {
      if (static_cast<long>(c) >= d[v]) completing.push_back(static_cast<long>(c) - d[v]);
      else ++rk;
    }
    const long kdim = static_cast<long>(completing.size());
    nd[v] = static_cast<int>(kdim);
    // U = [im-basis | chosen e_i]; projection = last kdim rows of U^{-1}
    Mat u(nsum, nsum, FieldElement(f));
    {
      long col = 0;
      std::vector<long> impiv;
      for (auto c : ech.pivot_cols)
        if (static_cast<long>(c) < d[v]) impiv.push_back(static_cast<long>(c));
      for (long c : impiv) {
        for (long i = 0; i < nsum; ++i) u.at(i, col) = eta.at(i, c);
        ++col;
      }
      for (long e : completing) {
        u.at(e, col) = FieldElement(f, 1);
        ++col;
      }
    }
    auto uinv = inverse(u);
    if (!uinv) throw Error("internal: cokernel completion not invertible");
    // projection applied to block k gives the new arrow t(a) -> v
    for (std::size_t k = 0; k < inc.size(); ++k) {
      const Arrow& a = q.arrow(inc[k]);
      Mat na(kdim, d[a.tgt], FieldElement(f));
      for (long i = 0; i < kdim; ++i)
        for (int j = 0; j < d[a.tgt]; ++j) na.at(i, j) = uinv->at(nsum - kdim + i, block[k] + j);
      mats[inc[k]] = std::move(na);
    }
  }
  return Representation(rq, f, std::move(nd), std::move(mats));
}

namespace {

// Admissible sink sequence: peel sinks of Q, reflecting as we go; after all
// n vertices the quiver returns to Q.
std::vector<int> admissible_sink_order(const Quiver& q) {
  std::vector<int> order;
  Quiver cur = q;
  std::vector<bool> used(q.vertex_count(), false);
  for (int step = 0; step < q.vertex_count(); ++step) {
    int pick = -1;
    for (int v = 0; v < q.vertex_count() && pick < 0; ++v)
      if (!used[v] && is_sink(cur, v)) pick = v;
    if (pick < 0) throw Error("internal: no admissible sink order (quiver not acyclic?)");
    used[pick] = true;
    order.push_back(pick);
    cur = *reverse_arrows_at(cur, pick);
  }
  return order;
}

}  // namespace

Representation indecomposable(QuiverPtr q, const Root& r, const Field& f) {
  require_dynkin(*q, "indecomposable");
  check_dim_vector(*q, r);
  if (tits_form(*q, r) != 1)
    throw Error("not a root: Tits form value is not 1");

  const auto order = admissible_sink_order(*q);
  const int n = q->vertex_count();

  // walk r down to a simple root along the admissible sequence
  std::vector<int> applied;
  Root cur = r;
  QuiverPtr cq = q;
  int simple_at = -1;
  const int cap = 64 * (n + 1) * (n + 1);
  for (int step = 0; simple_at < 0; ++step) {
    if (step > cap) throw Error("internal: reflection walk did not terminate");
    const int v = order[step % n];
    Root nxt = simple_reflection(*cq, v, cur);
    const bool negative = std::any_of(nxt.begin(), nxt.end(), [](int x) { return x < 0; });
    if (negative) {
      Root ev(n, 0);
      ev[v] = 1;
      if (cur != ev) throw Error("internal: reflection made a non-simple root negative");
      simple_at = v;
      break;
    }
    applied.push_back(v);
    cur = nxt;
    cq = reverse_arrows_at(*cq, v);
  }

  Representation x = Representation::simple(cq, f, simple_at);
  for (auto it = applied.rbegin(); it != applied.rend(); ++it)
    x = reflection_functor(x, *it);  // source reflection, walks back to q

  if (x.dims() != r) throw Error("internal: indecomposable has wrong dimension vector");
  // re-anchor on the caller's quiver pointer (structurally equal)
  if (!(x.quiver() == *q)) throw Error("internal: reflection chain did not return to the quiver");
  return Representation(q, f, x.dims(), x.matrices());
}

DynkinCache::DynkinCache(QuiverPtr q, const Field& f) : q_(std::move(q)), field_(f) {
  require_dynkin(*q_, "DynkinCache");
  roots_ = positive_roots(*q_);
  for (const auto& r : roots_) indecs_.push_back(indecomposable(q_, r, field_));
  const int nr = static_cast<int>(roots_.size());
  h_.assign(nr, std::vector<long>(nr, 0));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) h_[i][j] = hom_dim(indecs_[i], indecs_[j]);
}

int DynkinCache::root_index(const Root& r) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), r, root_less);
  if (it == roots_.end() || *it != r) throw Error("not a positive root of this quiver");
  return static_cast<int>(it - roots_.begin());
}

std::vector<long> DynkinCache::hom_vector(const OrbitLabel& label) const {
  std::vector<long> v(roots_.size(), 0);
  for (const auto& [r, mult] : label.parts) {
    const int s = root_index(r);
    for (std::size_t i = 0; i < roots_.size(); ++i) v[i] += mult * h_[i][s];
  }
  return v;
}

long DynkinCache::end_dim_of(const OrbitLabel& label) const {
  long e = 0;
  for (const auto& [r, mr] : label.parts)
    for (const auto& [s, ms] : label.parts)
      e += static_cast<long>(mr) * ms * h_[root_index(r)][root_index(s)];
  return e;
}

Representation DynkinCache::assemble(const OrbitLabel& label) const {
  Representation acc = Representation::zero(q_, field_, DimVector(q_->vertex_count(), 0));
  for (const auto& [r, mult] : label.parts)
    for (int i = 0; i < mult; ++i) acc = direct_sum(acc, indecs_[root_index(r)]);
  return acc;
}

OrbitLabel decompose(const Representation& m, const DynkinCache& cache) {
  if (!(m.quiver() == *cache.quiver_ptr())) throw Error("decompose: cache built for another quiver");
  const auto& roots = cache.roots();
  const int nr = static_cast<int>(roots.size());

  const Field rat = Field::rationals();
  Mat h(nr, nr, FieldElement(rat));
  Vec rhs(nr, FieldElement(rat));
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nr; ++j) h.at(i, j) = FieldElement(rat, cache.hom_table(i, j));
    rhs[i] = FieldElement(rat, hom_dim(cache.indec(i), m));
  }
  auto mu = solve_square(h, rhs);
  if (!mu) throw Error("internal: hom table is singular");
  std::vector<std::pair<Root, int>> parts;
  for (int i = 0; i < nr; ++i) {
    const mpq_class& v = (*mu)[i].rational();
    if (v.get_den() != 1 || v < 0)
      throw Error("internal: non-integral or negative multiplicity in decompose");
    const long mult = v.get_num().get_si();
    if (mult > 0) parts.emplace_back(roots[i], static_cast<int>(mult));
  }
  OrbitLabel label = make_label(*cache.quiver_ptr(), std::move(parts));
  if (label.total != m.dims()) throw Error("internal: decompose multiplicities do not sum to d");
  return label;
}

OrbitLabel decompose(const Representation& m) {
  DynkinCache cache(m.quiver_ptr(), m.field());
  return decompose(m, cache);
}

}  // namespace qcm
