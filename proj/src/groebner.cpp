#include "qcm/groebner.hpp"

#include <algorithm>
#include <set>

namespace qcm {

Ideal make_ideal(std::vector<Poly> gens) {
  Ideal ideal;
  ideal.homogeneous = true;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (std::find(ideal.gens.begin(), ideal.gens.end(), g) != ideal.gens.end()) continue;
    if (!g.is_homogeneous()) ideal.homogeneous = false;
    ideal.gens.push_back(std::move(g));
  }
  return ideal;
}

Poly normal_form(Poly f, const std::vector<Poly>& g) {
  if (f.is_zero() || g.empty()) return f;
  PolyRingPtr r = f.ring();
  Poly rem = Poly::zero(r);
  while (!f.is_zero()) {
    const Term& lt = f.leading();
    bool reduced = false;
    for (const auto& gi : g) {
      if (gi.is_zero()) continue;
      const Term& lg = gi.leading();
      if (mono_divides(lg.m, lt.m)) {
        f = f - gi.term_mul(mono_div(lt.m, lg.m), lt.c / lg.c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem = rem + Poly::from_terms(r, {lt});
      f = f - Poly::from_terms(r, {lt});
    }
  }
  return rem;
}

Division divide(Poly f, const std::vector<Poly>& g) {
  PolyRingPtr r = f.ring();
  Division d;
  d.quotients.assign(g.size(), Poly::zero(r));
  d.remainder = Poly::zero(r);
  while (!f.is_zero()) {
    const Term& lt = f.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].is_zero()) continue;
      const Term& lg = g[i].leading();
      if (mono_divides(lg.m, lt.m)) {
        const Mono qm = mono_div(lt.m, lg.m);
        const FieldElement qc = lt.c / lg.c;
        d.quotients[i] = d.quotients[i] + Poly::from_terms(r, {{qm, qc}});
        f = f - g[i].term_mul(qm, qc);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      d.remainder = d.remainder + Poly::from_terms(r, {lt});
      f = f - Poly::from_terms(r, {lt});
    }
  }
  return d;
}

namespace {

Poly s_poly(const Poly& f, const Poly& g) {
  const Term& lf = f.leading();
  const Term& lg = g.leading();
  const Mono l = mono_lcm(lf.m, lg.m);
  return f.term_mul(mono_div(l, lf.m), lf.c.inverse()) -
         g.term_mul(mono_div(l, lg.m), lg.c.inverse());
}

// Inter-reduce a basis: minimal leading terms, fully reduced tails, monic,
// sorted by descending leading monomial.
std::vector<Poly> reduce_basis(std::vector<Poly> g) {
  if (g.empty()) return g;
  const MonoOrder o = g[0].ring()->order;
  // drop elements whose LT is divisible by another's LT
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < g.size() && keep; ++j) {
      if (i == j) continue;
      if (!mono_divides(g[j].leading().m, g[i].leading().m)) continue;
      // break ties (equal LMs) by keeping the earlier element
      if (g[i].leading().m == g[j].leading().m && i < j) continue;
      keep = false;
    }
    if (keep) minimal.push_back(g[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly nf = normal_form(minimal[i], others);
    if (!nf.is_zero()) reduced.push_back(nf.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [o](const Poly& a, const Poly& b) {
    return mono_cmp(a.leading().m, b.leading().m, o) > 0;
  });
  return reduced;
}

}  // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& gens) {
  std::vector<Poly> g;
  for (const auto& f : gens)
    if (!f.is_zero()) g.push_back(f.monic());
  if (g.empty()) return g;

  // pair queue ordered by lcm degree (normal selection)
  struct Pair {
    int deg;
    std::size_t i, j;
    bool operator<(const Pair& o) const { return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j); }
  };
  std::set<Pair> pairs;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      const Mono l = mono_lcm(g[i].leading().m, g[k].leading().m);
      pairs.insert({l.deg, i, k});
    }
  };
  for (std::size_t k = 1; k < g.size(); ++k) push_pairs(k);

  while (!pairs.empty()) {
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const Poly& fi = g[p.i];
    const Poly& fj = g[p.j];
    // product criterion: coprime leading monomials reduce to zero
    if (mono_coprime(fi.leading().m, fj.leading().m)) continue;
    Poly s = normal_form(s_poly(fi, fj), g);
    if (s.is_zero()) continue;
    g.push_back(s.monic());
    push_pairs(g.size() - 1);
  }
  return reduce_basis(std::move(g));
}

long hilbert_dimension(const std::vector<Poly>& gb, const PolyRingPtr& ring) {
  const int n = ring->nvars();
  if (n > 20) throw ScaleLimit("hilbert_dimension: too many variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    std::uint32_t s = 0;
    const Mono& m = g.leading().m;
    for (int i = 0; i < n; ++i)
      if (m.e[i]) s |= 1u << i;
    if (s == 0) throw Error("hilbert_dimension: unit ideal has an empty variety");
    supports.push_back(s);
  }
  long best = -1;
  for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
    bool independent = true;
    for (auto s : supports)
      if ((s & ~sub) == 0) { independent = false; break; }
    if (independent) best = std::max<long>(best, __builtin_popcount(sub));
  }
  if (best < 0) throw Error("hilbert_dimension: unit ideal has an empty variety");
  return best;
}

}  // namespace qcm
