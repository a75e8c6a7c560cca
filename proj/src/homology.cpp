#include "qcm/homology.hpp"

namespace qcm {

namespace {

void require_acyclic(const Representation& m, const char* what) {
  if (!classify(m.quiver()).acyclic)
    throw Error(std::string(what) + " requires an acyclic quiver");
}

}  // namespace

HomSpace hom_space(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  const Quiver& q = m.quiver();
  const Field& f = m.field();
  const DimVector& dm = m.dims();
  const DimVector& dn = n.dims();

  // unknowns: entries of h_v (dn[v] x dm[v]), vertex-major, row-major
  std::vector<long> offset(q.vertex_count() + 1, 0);
  for (int v = 0; v < q.vertex_count(); ++v)
    offset[v + 1] = offset[v] + static_cast<long>(dn[v]) * dm[v];
  const long unknowns = offset[q.vertex_count()];

  long rows = 0;
  for (const auto& a : q.arrows()) rows += static_cast<long>(dn[a.tgt]) * dm[a.src];

  Mat sys(rows, unknowns, FieldElement(f));
  long r = 0;
  for (int ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& a = q.arrow(ai);
    const Mat& fm = m.matrix(ai);
    const Mat& gn = n.matrix(ai);
    // (h_t f - g h_s)_{ij} = sum_k h_t[i,k] f[k,j] - sum_k g[i,k] h_s[k,j]
    for (int i = 0; i < dn[a.tgt]; ++i)
      for (int j = 0; j < dm[a.src]; ++j) {
        for (int k = 0; k < dm[a.tgt]; ++k)
          sys.at(r, offset[a.tgt] + static_cast<long>(i) * dm[a.tgt] + k) += fm.at(k, j);
        for (int k = 0; k < dn[a.src]; ++k)
          sys.at(r, offset[a.src] + static_cast<long>(k) * dm[a.src] + j) -= gn.at(i, k);
        ++r;
      }
  }

  HomSpace hs{m, n, 0, {}};
  for (const auto& vec : kernel_basis(sys)) {
    std::vector<Mat> tuple;
    for (int v = 0; v < q.vertex_count(); ++v) {
      Mat h(dn[v], dm[v], FieldElement(f));
      for (int i = 0; i < dn[v]; ++i)
        for (int j = 0; j < dm[v]; ++j)
          h.at(i, j) = vec[offset[v] + static_cast<long>(i) * dm[v] + j];
      tuple.push_back(std::move(h));
    }
    hs.basis.push_back(std::move(tuple));
  }
  hs.dimension = static_cast<long>(hs.basis.size());
  return hs;
}

long hom_dim(const Representation& m, const Representation& n) {
  return hom_space(m, n).dimension;
}

long end_dim(const Representation& m) { return hom_dim(m, m); }

long vertex_end_dim(const DimVector& d) { return sum_of_squares(d); }

long ext1_dim(const Representation& m) {
  require_acyclic(m, "ext1_dim");
  const long l = rep_space_dim(m.quiver(), m.dims());
  const long e = l - sum_of_squares(m.dims()) + end_dim(m);
  if (e < 0) throw Error("internal: negative ext1 dimension");
  return e;
}

long ext1_dim_pair(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  return hom_dim(m, n) - euler_form(m.quiver(), m.dims(), n.dims());
}

long orbit_dim(const Representation& m) {
  require_acyclic(m, "orbit_dim");
  const long l = rep_space_dim(m.quiver(), m.dims());
  const long via_ext = l - ext1_dim(m);
  const long via_stab = sum_of_squares(m.dims()) - end_dim(m);
  if (via_ext != via_stab) throw Error("internal: orbit dimension cross-check failed");
  return via_ext;
}

long pd_formula(const Representation& m) {
  return rep_space_dim(m.quiver(), m.dims()) + end_dim(m) - sum_of_squares(m.dims());
}

bool is_orbit_open(const Representation& m) { return ext1_dim(m) == 0; }

bool is_orbit_closed(const Representation& m) {
  require_acyclic(m, "is_orbit_closed");
  return m.all_maps_zero();
}

InvariantReport invariant_report(const Representation& m) {
  InvariantReport rep;
  const auto cls = classify(m.quiver());
  rep.l = rep_space_dim(m.quiver(), m.dims());
  rep.sum_d_sq = sum_of_squares(m.dims());
  rep.end = end_dim(m);
  rep.pd = rep.l + rep.end - rep.sum_d_sq;
  rep.tree = cls.tree;
  rep.acyclic = cls.acyclic;
  if (cls.acyclic) {
    rep.ext1 = rep.l - rep.sum_d_sq + rep.end;
    rep.orbit = rep.sum_d_sq - rep.end;
    rep.open = *rep.ext1 == 0;
    rep.closed = m.all_maps_zero();
  }
  return rep;
}

}  // namespace qcm
