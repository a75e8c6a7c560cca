#include "qcm/resolution.hpp"

#include <algorithm>

namespace qcm {

long BettiTable::total(int i) const {
  long s = 0;
  for (const auto& [key, v] : b)
    if (key.first == i) s += v;
  return s;
}

long BettiTable::entry(int i, int j) const {
  auto it = b.find({i, j});
  return it == b.end() ? 0 : it->second;
}

namespace {

struct ModTerm {
  int pos;
  Mono m;
  FieldElement c;
};

using ModVec = std::vector<ModTerm>;  // sorted descending in the level order

// Term order on a free module level. Level 0 is the ring order on R^1; a
// Schreyer level compares u e_i vs v e_j by the leading terms of the images
// u g_i, v g_j one level down, ties broken by smaller position.
class ModOrder {
 public:
  explicit ModOrder(PolyRingPtr ring) : ring_(std::move(ring)) {}
  ModOrder(const ModOrder* below, std::vector<int> lt_pos, std::vector<Mono> lt_mono)
      : ring_(below->ring_), below_(below), lt_pos_(std::move(lt_pos)), lt_mono_(std::move(lt_mono)) {}

  int cmp(int pa, const Mono& ma, int pb, const Mono& mb) const {
    if (below_) {
      const int c = below_->cmp(lt_pos_[pa], mono_mul(ma, lt_mono_[pa]), lt_pos_[pb],
                                mono_mul(mb, lt_mono_[pb]));
      if (c != 0) return c;
    } else {
      const int c = mono_cmp(ma, mb, ring_->order);
      if (c != 0) return c;
    }
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }

  const PolyRingPtr& ring() const { return ring_; }

 private:
  PolyRingPtr ring_;
  const ModOrder* below_ = nullptr;
  std::vector<int> lt_pos_;
  std::vector<Mono> lt_mono_;
};

ModVec mv_normalize(ModVec t, const ModOrder& ord) {
  std::sort(t.begin(), t.end(), [&ord](const ModTerm& a, const ModTerm& b) {
    return ord.cmp(a.pos, a.m, b.pos, b.m) > 0;
  });
  ModVec out;
  for (auto& x : t) {
    if (x.c.is_zero()) continue;
    if (!out.empty() && out.back().pos == x.pos && out.back().m == x.m) {
      out.back().c += x.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else {
      out.push_back(std::move(x));
    }
  }
  return out;
}

ModVec mv_sub(const ModVec& a, const ModVec& b, const ModOrder& ord) {
  ModVec t = a;
  for (const auto& x : b) t.push_back({x.pos, x.m, -x.c});
  return mv_normalize(std::move(t), ord);
}

// multiplying every term by the same monomial preserves the order
ModVec mv_term_mul(const ModVec& v, const Mono& m, const FieldElement& c) {
  ModVec out;
  if (c.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back({x.pos, mono_mul(x.m, m), x.c * c});
  return out;
}

// Division in the free module: f = sum q_k g_k + r with poly quotients.
struct ModDivision {
  std::vector<Poly> quotients;
  ModVec remainder;
};

ModDivision mv_divide(ModVec f, const std::vector<ModVec>& g, const ModOrder& ord) {
  ModDivision d;
  d.quotients.assign(g.size(), Poly::zero(ord.ring()));
  while (!f.empty()) {
    const ModTerm& lt = f.front();
    bool reduced = false;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k].empty()) continue;
      const ModTerm& lg = g[k].front();
      if (lg.pos != lt.pos || !mono_divides(lg.m, lt.m)) continue;
      const Mono qm = mono_div(lt.m, lg.m);
      const FieldElement qc = lt.c / lg.c;
      d.quotients[k] = d.quotients[k] + Poly::from_terms(ord.ring(), {{qm, qc}});
      f = mv_sub(f, mv_term_mul(g[k], qm, qc), ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      d.remainder.push_back(lt);
      f.erase(f.begin());
    }
  }
  return d;
}

long mv_shifted_degree(const ModVec& v, const std::vector<long>& shifts) {
  if (v.empty()) throw Error("internal: degree of a zero module element");
  const long d = v[0].m.deg + shifts[v[0].pos];
  for (const auto& t : v)
    if (t.m.deg + shifts[t.pos] != d) throw Error("internal: inhomogeneous module element");
  return d;
}

// All Schreyer syzygies of the Groebner basis g (sorted descending leading
// terms at their level); the result is a Groebner basis of ker(R^|g| -> F)
// for the Schreyer order next_ord, with leading term (lcm/LT_i) e_i.
std::vector<ModVec> schreyer_syzygies(const std::vector<ModVec>& g, const ModOrder& ord,
                                      const ModOrder& next_ord) {
  std::vector<ModVec> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const ModTerm& li = g[i].front();
      const ModTerm& lj = g[j].front();
      if (li.pos != lj.pos) continue;
      const Mono l = mono_lcm(li.m, lj.m);
      const Mono ui = mono_div(l, li.m);
      const Mono uj = mono_div(l, lj.m);
      ModVec spair = mv_sub(mv_term_mul(g[i], ui, li.c.inverse()),
                            mv_term_mul(g[j], uj, lj.c.inverse()), ord);
      auto div = mv_divide(std::move(spair), g, ord);
      if (!div.remainder.empty())
        throw Error("internal: S-pair of a Groebner basis did not reduce to zero");
      ModVec syz;
      syz.push_back({static_cast<int>(i), ui, li.c.inverse()});
      syz.push_back({static_cast<int>(j), uj, -lj.c.inverse()});
      for (std::size_t k = 0; k < g.size(); ++k)
        for (const auto& t : div.quotients[k].terms()) syz.push_back({static_cast<int>(k), t.m, -t.c});
      syz = mv_normalize(std::move(syz), next_ord);
      if (syz.empty()) throw Error("internal: zero Schreyer syzygy");
      if (syz.front().pos != static_cast<int>(i) || !(syz.front().m == ui))
        throw Error("internal: Schreyer leading-term property failed");
      out.push_back(std::move(syz));
    }
  return out;
}

// Minimal leading terms + tail reduction; keeps Groebner-basis property and
// the generated submodule. Sorted by (position, descending monomial).
std::vector<ModVec> reduce_module_basis(std::vector<ModVec> g, const ModOrder& ord) {
  std::vector<ModVec> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < g.size() && keep; ++j) {
      if (i == j) continue;
      const ModTerm& li = g[i].front();
      const ModTerm& lj = g[j].front();
      if (lj.pos != li.pos || !mono_divides(lj.m, li.m)) continue;
      if (lj.m == li.m && i < j) continue;
      keep = false;
    }
    if (keep) minimal.push_back(g[i]);
  }
  std::vector<ModVec> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModVec> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    auto div = mv_divide(minimal[i], others, ord);
    // re-normalize: remainder terms were collected in order
    ModVec nf = mv_normalize(std::move(div.remainder), ord);
    if (nf.empty()) continue;
    // monic
    const FieldElement inv = nf.front().c.inverse();
    for (auto& t : nf) t.c *= inv;
    reduced.push_back(std::move(nf));
  }
  const PolyRingPtr& r = ord.ring();
  std::sort(reduced.begin(), reduced.end(), [&r](const ModVec& a, const ModVec& b) {
    if (a.front().pos != b.front().pos) return a.front().pos < b.front().pos;
    return mono_cmp(a.front().m, b.front().m, r->order) > 0;
  });
  return reduced;
}

struct Complex {
  // matrices[t]: rank(F_t) columns, rank(F_{t-1}) rows, entries in R
  std::vector<std::vector<std::vector<Poly>>> matrices;
  std::vector<std::vector<long>> shifts;  // shifts[t][k] = degree of basis k of F_t
};

// Cancel all constant entries: each one splits off a trivial R -> R summand.
void minimalize(Complex& cx) {
  auto is_unit = [](const Poly& p) { return !p.is_zero() && p.degree() == 0; };
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t t = 0; t < cx.matrices.size() && !again; ++t) {
      auto& a = cx.matrices[t];
      const std::size_t rows = cx.shifts[t].size();
      const std::size_t cols = cx.shifts[t + 1].size();
      for (std::size_t r0 = 0; r0 < rows && !again; ++r0)
        for (std::size_t c0 = 0; c0 < cols && !again; ++c0) {
          if (!is_unit(a[r0][c0])) continue;
          again = true;
          const FieldElement u = a[r0][c0].leading().c;
          // clear row r0 by column operations, mirrored on the next matrix
          for (std::size_t c = 0; c < cols; ++c) {
            if (c == c0 || a[r0][c].is_zero()) continue;
            const Poly alpha = a[r0][c].scaled(u.inverse());
            for (std::size_t r = 0; r < rows; ++r) a[r][c] = a[r][c] - alpha * a[r][c0];
            if (t + 1 < cx.matrices.size()) {
              auto& nxt = cx.matrices[t + 1];
              for (std::size_t cc = 0; cc < cx.shifts[t + 2].size(); ++cc)
                nxt[c0][cc] = nxt[c0][cc] + alpha * nxt[c][cc];
            }
          }
          // clear column c0 by row operations, mirrored on the previous matrix
          for (std::size_t r = 0; r < rows; ++r) {
            if (r == r0 || a[r][c0].is_zero()) continue;
            const Poly beta = a[r][c0].scaled(u.inverse());
            for (std::size_t c = 0; c < cols; ++c) a[r][c] = a[r][c] - beta * a[r0][c];
            if (t > 0) {
              auto& prv = cx.matrices[t - 1];
              for (std::size_t rr = 0; rr < cx.shifts[t - 1].size(); ++rr)
                prv[rr][r0] = prv[rr][r0] + prv[rr][r] * beta;
            }
          }
          // the mirrored updates must have zeroed the dropped row/column
          if (t + 1 < cx.matrices.size())
            for (const auto& e : cx.matrices[t + 1][c0])
              if (!e.is_zero()) throw Error("internal: minimalization left a nonzero row");
          if (t > 0)
            for (auto& row : cx.matrices[t - 1])
              if (!row[r0].is_zero()) throw Error("internal: minimalization left a nonzero column");
          // delete basis r0 of F_t-1 and basis c0 of F_t
          for (auto& row : a) row.erase(row.begin() + static_cast<long>(c0));
          a.erase(a.begin() + static_cast<long>(r0));
          cx.shifts[t + 1].erase(cx.shifts[t + 1].begin() + static_cast<long>(c0));
          cx.shifts[t].erase(cx.shifts[t].begin() + static_cast<long>(r0));
          if (t + 1 < cx.matrices.size())
            cx.matrices[t + 1].erase(cx.matrices[t + 1].begin() + static_cast<long>(c0));
          if (t > 0)
            for (auto& row : cx.matrices[t - 1]) row.erase(row.begin() + static_cast<long>(r0));
        }
    }
  }
}

}  // namespace

BettiTable minimal_free_resolution(const Ideal& ideal, const PolyRingPtr& ring) {
  for (const auto& g : ideal.gens)
    if (!g.is_homogeneous())
      throw Error("minimal_free_resolution requires homogeneous generators");

  BettiTable table;
  const auto gb = buchberger(ideal.gens);
  if (gb.empty()) {
    table.pd = 0;
    table.b[{0, 0}] = 1;
    return table;
  }
  for (const auto& g : gb)
    if (g.degree() == 0) throw Error("minimal_free_resolution: unit ideal");

  // levels of module orders must outlive the mod vectors; keep them stable
  std::vector<std::unique_ptr<ModOrder>> orders;
  orders.push_back(std::make_unique<ModOrder>(ring));

  Complex cx;
  cx.shifts.push_back({0});  // F_0 = R

  std::vector<ModVec> cur;
  for (const auto& g : gb) {
    ModVec v;
    for (const auto& t : g.terms()) v.push_back({0, t.m, t.c});
    cur.push_back(std::move(v));
  }

  const int max_levels = ring->nvars() + 8;
  for (int level = 1;; ++level) {
    if (level > max_levels) throw Error("internal: resolution exceeded the syzygy-level cap");
    // record shifts and the matrix F_level -> F_{level-1}
    std::vector<long> shifts;
    for (const auto& v : cur) shifts.push_back(mv_shifted_degree(v, cx.shifts[level - 1]));
    std::vector<std::vector<Poly>> mat(cx.shifts[level - 1].size(),
                                       std::vector<Poly>(cur.size(), Poly::zero(ring)));
    for (std::size_t c = 0; c < cur.size(); ++c)
      for (const auto& t : cur[c])
        mat[t.pos][c] = mat[t.pos][c] + Poly::from_terms(ring, {{t.m, t.c}});
    cx.matrices.push_back(std::move(mat));
    cx.shifts.push_back(std::move(shifts));

    // next level: Schreyer syzygies of the current basis
    std::vector<int> lt_pos;
    std::vector<Mono> lt_mono;
    for (const auto& v : cur) {
      lt_pos.push_back(v.front().pos);
      lt_mono.push_back(v.front().m);
    }
    orders.push_back(std::make_unique<ModOrder>(orders.back().get(), std::move(lt_pos), std::move(lt_mono)));
    const ModOrder& ord = *orders[orders.size() - 2];
    const ModOrder& next_ord = *orders.back();

    auto syz = schreyer_syzygies(cur, ord, next_ord);
    syz = reduce_module_basis(std::move(syz), next_ord);
    if (syz.empty()) break;
    cur = std::move(syz);
  }

  minimalize(cx);

  table.pd = 0;
  for (std::size_t t = 0; t < cx.shifts.size(); ++t) {
    if (cx.shifts[t].empty()) continue;
    table.pd = static_cast<int>(t);
    for (long d : cx.shifts[t]) ++table.b[{static_cast<int>(t), static_cast<int>(d)}];
  }
  // a minimal resolution of a cyclic module keeps F_0 = R
  if (cx.shifts[0].size() != 1) throw Error("internal: minimalization damaged F_0");
  return table;
}

}  // namespace qcm
