#include "qcm/homogeneity.hpp"

#include <algorithm>

#include "qcm/linalg.hpp"

namespace qcm {

VertexScaling scaling_isomorphism(const Quiver& q, const DimVector& d, const FieldElement& lambda) {
  check_dim_vector(q, d);
  if (lambda.is_zero()) throw Error("scaling_isomorphism: lambda must be nonzero");
  if (!classify(q).tree) throw Error("scaling_isomorphism requires a tree quiver");

  const int n = q.vertex_count();
  std::vector<long> exp(n, 0);
  std::vector<bool> seen(n, false);
  // walk the underlying tree; +1 along an arrow, -1 against it
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows()) {
      if (a.src == v && !seen[a.tgt]) {
        exp[a.tgt] = exp[v] + 1;
        seen[a.tgt] = true;
        stack.push_back(a.tgt);
      } else if (a.tgt == v && !seen[a.src]) {
        exp[a.src] = exp[v] - 1;
        seen[a.src] = true;
        stack.push_back(a.src);
      }
    }
  }
  for (const auto& a : q.arrows())
    if (exp[a.tgt] != exp[a.src] + 1) throw Error("internal: inconsistent scaling exponents");
  return VertexScaling{std::move(exp), lambda};
}

Representation apply_scaling(const VertexScaling& s, const Representation& m) {
  const Quiver& q = m.quiver();
  if (static_cast<int>(s.exponents.size()) != q.vertex_count())
    throw Error("apply_scaling: exponent count mismatch");
  std::vector<Mat> g;
  for (int v = 0; v < q.vertex_count(); ++v) {
    Mat gv = identity_matrix(m.dims()[v], m.field());
    const FieldElement c = s.lambda.pow(s.exponents[v]);
    for (std::size_t i = 0; i < gv.rows(); ++i) gv.at(i, i) = c;
    g.push_back(std::move(gv));
  }
  return m.conjugate(g);
}

namespace {

// det(sum_j t_j b_j^{(v)}) != 0 for every vertex with d_v > 0
bool generic_member_invertible(const HomSpace& hom, const Representation& m) {
  const Quiver& q = m.quiver();
  const long k = hom.dimension;
  std::vector<std::string> vars;
  for (long j = 0; j < k; ++j) vars.push_back("t" + std::to_string(j + 1));
  auto ring = make_ring(std::move(vars), m.field());
  for (int v = 0; v < q.vertex_count(); ++v) {
    const int dv = m.dims()[v];
    if (dv == 0) continue;
    if (k == 0) return false;
    Matrix<Poly> gv(dv, dv, Poly::zero(ring));
    for (long j = 0; j < k; ++j) {
      const Mat& b = hom.basis[j][v];
      for (int i = 0; i < dv; ++i)
        for (int c = 0; c < dv; ++c)
          if (!b.at(i, c).is_zero())
            gv.at(i, c) = gv.at(i, c) + Poly::from_terms(ring, {{mono_var(static_cast<int>(k),
                                                                          static_cast<int>(j)),
                                                                 b.at(i, c)}});
    }
    if (poly_det(gv, ring).is_zero()) return false;
  }
  return true;
}

}  // namespace

bool is_isomorphic_generic(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  if (m.dims() != n.dims()) throw Error("is_isomorphic_generic: dimension vectors differ");
  for (int dv : m.dims())
    if (dv > 10) throw ScaleLimit("is_isomorphic_generic: vertex dimension above the desk-scale bound 10");
  return generic_member_invertible(hom_space(m, n), m);
}

namespace {

// Hom(M, lambda M) over k[lambda]: kernel of the intertwiner system whose
// entries are linear in lambda, computed fraction-free.
std::vector<std::vector<Poly>> symbolic_scaling_hom_basis(const Representation& m,
                                                          const PolyRingPtr& lring) {
  const Quiver& q = m.quiver();
  const DimVector& d = m.dims();
  std::vector<long> offset(q.vertex_count() + 1, 0);
  for (int v = 0; v < q.vertex_count(); ++v)
    offset[v + 1] = offset[v] + static_cast<long>(d[v]) * d[v];
  const long unknowns = offset[q.vertex_count()];
  long rows = 0;
  for (const auto& a : q.arrows()) rows += static_cast<long>(d[a.tgt]) * d[a.src];

  const Poly lam = Poly::variable(lring, 0);
  Matrix<Poly> sys(rows, unknowns, Poly::zero(lring));
  long r = 0;
  for (int ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& a = q.arrow(ai);
    const Mat& fm = m.matrix(ai);
    for (int i = 0; i < d[a.tgt]; ++i)
      for (int j = 0; j < d[a.src]; ++j) {
        for (int k = 0; k < d[a.tgt]; ++k)
          if (!fm.at(k, j).is_zero()) {
            const long col = offset[a.tgt] + static_cast<long>(i) * d[a.tgt] + k;
            sys.at(r, col) = sys.at(r, col) + Poly::constant(lring, fm.at(k, j));
          }
        for (int k = 0; k < d[a.src]; ++k)
          if (!fm.at(i, k).is_zero()) {
            const long col = offset[a.src] + static_cast<long>(k) * d[a.src] + j;
            sys.at(r, col) = sys.at(r, col) - lam.scaled(fm.at(i, k));
          }
        ++r;
      }
  }
  auto ech = fraction_free_gauss_jordan(std::move(sys), Poly::constant(lring, 1));
  return kernel_basis_from_echelon(ech);
}

}  // namespace

HomogeneityVerdict is_homogeneous(const Representation& m) {
  const auto cls = classify(m.quiver());
  if (cls.tree)
    return {HomogeneityKind::TreeCone, true, std::nullopt,
            "tree quiver: a vertex scaling conjugates m to lambda*m for every lambda"};

  const Quiver& q = m.quiver();
  const DimVector& d = m.dims();
  auto lring = make_ring({"lam"}, m.field());
  const auto basis = symbolic_scaling_hom_basis(m, lring);
  const long k = static_cast<long>(basis.size());

  std::vector<long> offset(q.vertex_count() + 1, 0);
  for (int v = 0; v < q.vertex_count(); ++v)
    offset[v + 1] = offset[v] + static_cast<long>(d[v]) * d[v];

  // generic intertwiner in k[t_1..t_k, lam]
  bool generic_ok = true;
  std::vector<std::string> vars;
  for (long j = 0; j < k; ++j) vars.push_back("t" + std::to_string(j + 1));
  vars.push_back("lam");
  auto bigring = make_ring(std::move(vars), m.field());
  std::vector<int> lift{static_cast<int>(k)};  // lam -> last variable
  for (int v = 0; v < q.vertex_count() && generic_ok; ++v) {
    const int dv = d[v];
    if (dv == 0) continue;
    if (k == 0) {
      generic_ok = false;
      break;
    }
    Matrix<Poly> gv(dv, dv, Poly::zero(bigring));
    for (long j = 0; j < k; ++j) {
      const Poly tj = Poly::variable(bigring, static_cast<int>(j));
      for (int i = 0; i < dv; ++i)
        for (int c = 0; c < dv; ++c) {
          const Poly& entry = basis[j][offset[v] + static_cast<long>(i) * dv + c];
          if (!entry.is_zero()) gv.at(i, c) = gv.at(i, c) + tj * map_vars(entry, bigring, lift);
        }
    }
    if (poly_det(gv, bigring).is_zero()) generic_ok = false;
  }
  if (generic_ok)
    return {HomogeneityKind::GenericScaling, true, std::nullopt,
            "a generic member of Hom(m, lambda*m) over k(lambda) is invertible"};

  // concrete witness search over small primes
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L, 53L,
                 59L, 61L, 67L, 71L, 73L, 79L, 83L, 89L, 97L}) {
    const FieldElement lam(m.field(), p);
    if (lam.is_zero() || lam.is_one()) continue;  // degenerate in small prime fields
    if (!is_isomorphic_generic(m, m.scale(lam)))
      return {HomogeneityKind::NotHomogeneous, false, p,
              "lambda*m is not isomorphic to m at lambda = " + std::to_string(p)};
  }
  return {HomogeneityKind::InconclusiveGenericFalse, false, std::nullopt,
          "generic scaling test failed but no witness found among primes up to 97"};
}

}  // namespace qcm
