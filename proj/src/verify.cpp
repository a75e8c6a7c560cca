#include "qcm/verify.hpp"

#include <algorithm>
#include <functional>

namespace qcm {

PolyRingPtr rep_space_ring(const Quiver& q, const DimVector& d, const Field& f, MonoOrder order) {
  check_dim_vector(q, d);
  std::vector<std::string> vars;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    for (int i = 1; i <= d[ar.tgt]; ++i)
      for (int j = 1; j <= d[ar.src]; ++j)
        vars.push_back("x_" + ar.name + "_" + std::to_string(i) + "_" + std::to_string(j));
  }
  return make_ring(std::move(vars), f, order);
}

Matrix<Poly> generic_arrow_matrix(const Quiver& q, const DimVector& d, int arrow,
                                  const PolyRingPtr& ring) {
  long base = 0;
  for (int a = 0; a < arrow; ++a) {
    const Arrow& ar = q.arrow(a);
    base += static_cast<long>(d[ar.tgt]) * d[ar.src];
  }
  const Arrow& ar = q.arrow(arrow);
  Matrix<Poly> m(d[ar.tgt], d[ar.src], Poly::zero(ring));
  for (int i = 0; i < d[ar.tgt]; ++i)
    for (int j = 0; j < d[ar.src]; ++j)
      m.at(i, j) = Poly::variable(ring, static_cast<int>(base + static_cast<long>(i) * d[ar.src] + j));
  return m;
}

namespace {

// minors of the given size, as polynomials
void append_minors(const Matrix<Poly>& m, int size, const PolyRingPtr& ring,
                   std::vector<Poly>& out) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (size > rows || size > cols) return;
  std::vector<int> ri(size), ci(size);
  std::function<void(int, int)> pick_cols = [&](int idx, int from) {
    if (idx == size) {
      Matrix<Poly> sub(size, size, Poly::zero(ring));
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
      Poly det = poly_det(sub, ring);
      if (!det.is_zero()) out.push_back(det.monic());
      return;
    }
    for (int c = from; c < cols; ++c) {
      ci[idx] = c;
      pick_cols(idx + 1, c + 1);
    }
  };
  std::function<void(int, int)> pick_rows = [&](int idx, int from) {
    if (idx == size) {
      pick_cols(0, 0);
      return;
    }
    for (int r = from; r < rows; ++r) {
      ri[idx] = r;
      pick_rows(idx + 1, r + 1);
    }
  };
  pick_rows(0, 0);
}

struct PathData {
  std::vector<int> vertices;  // path order, arrows pointing forward
  std::vector<int> arrows;    // arrows[t]: vertices[t] -> vertices[t+1]
};

PathData equioriented_path(const Quiver& q) {
  const auto cls = classify(q);
  if (!cls.equioriented_a)
    throw Error("rank-condition generators are only certified for equioriented A_n quivers");
  PathData p;
  p.vertices = cls.a_path;
  for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t) {
    int found = -1;
    for (int a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).src == p.vertices[t] && q.arrow(a).tgt == p.vertices[t + 1]) found = a;
    if (found < 0) throw Error("internal: equioriented path has a gap");
    p.arrows.push_back(found);
  }
  return p;
}

}  // namespace

Ideal rank_condition_ideal(const Representation& m, const PolyRingPtr& ring) {
  const Quiver& q = m.quiver();
  const DimVector& d = m.dims();
  const PathData path = equioriented_path(q);
  const int n = static_cast<int>(path.vertices.size());

  // actual ranks of the composite maps f_{j-1} ... f_i along the path, and
  // cap[i][j] = min dimension over the interval (the generic composite rank)
  std::vector<std::vector<long>> rk(n, std::vector<long>(n, 0));
  std::vector<std::vector<long>> cap(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    Mat acc = identity_matrix(d[path.vertices[i]], m.field());
    long c = d[path.vertices[i]];
    for (int j = i + 1; j < n; ++j) {
      acc = m.matrix(path.arrows[j - 1]) * acc;
      c = std::min<long>(c, d[path.vertices[j]]);
      rk[i][j] = static_cast<long>(rank(acc));
      cap[i][j] = c;
    }
  }

  std::vector<Poly> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rk[i][j] >= cap[i][j]) continue;  // generic rank; no condition
      // prune conditions implied by a sub-interval with rank <= this one
      bool implied = false;
      for (int i2 = i; i2 < j && !implied; ++i2)
        for (int j2 = i2 + 1; j2 <= j && !implied; ++j2) {
          if (i2 == i && j2 == j) continue;
          if (rk[i2][j2] <= rk[i][j]) implied = true;
        }
      if (implied) continue;
      Matrix<Poly> comp = generic_arrow_matrix(q, d, path.arrows[i], ring);
      for (int t = i + 1; t < j; ++t)
        comp = generic_arrow_matrix(q, d, path.arrows[t], ring) * comp;
      append_minors(comp, static_cast<int>(rk[i][j]) + 1, ring, gens);
    }
  Ideal ideal = make_ideal(std::move(gens));
  if (static_cast<long>(ideal.gens.size()) > kMaxIdealGens)
    throw ScaleLimit("rank-condition ideal has " + std::to_string(ideal.gens.size()) +
                     " generators (limit " + std::to_string(kMaxIdealGens) + ")");
  return ideal;
}

Ideal rank_condition_ideal(const Representation& m) {
  return rank_condition_ideal(m, rep_space_ring(m.quiver(), m.dims(), m.field()));
}

CmReport verify_cm(const Representation& m, const Field& groebner_field, MonoOrder order) {
  const Quiver& q = m.quiver();
  const DimVector& d = m.dims();
  const long l = rep_space_dim(q, d);
  if (l > kMaxRepSpaceVars)
    throw ScaleLimit("rep space has " + std::to_string(l) + " variables (limit " +
                     std::to_string(kMaxRepSpaceVars) + "); this engine is a desk-scale oracle");

  auto ring = rep_space_ring(q, d, groebner_field, order);
  const Ideal ideal = rank_condition_ideal(m, ring);

  CmReport rep;
  rep.l = l;
  rep.field_name = groebner_field.name();
  rep.pd_predicted = pd_formula(m);
  rep.orbit_dim = orbit_dim(m);
  rep.assumption =
      "assumes the rank-condition generators cut out the orbit closure; "
      "the Krull dimension is cross-checked against the orbit dimension";

  const auto gb = buchberger(ideal.gens);
  rep.dim = hilbert_dimension(gb, ring);
  if (rep.dim != rep.orbit_dim)
    throw Error("verify_cm: Krull dimension " + std::to_string(rep.dim) +
                " does not match the orbit dimension " + std::to_string(rep.orbit_dim) +
                "; the ideal generators are wrong for this input");

  rep.betti = minimal_free_resolution(ideal, ring);
  rep.pd_resolution = rep.betti.pd;
  rep.depth = l - rep.pd_resolution;
  rep.height = l - rep.dim;
  rep.grade = rep.height;  // the ambient polynomial ring is Cohen-Macaulay
  rep.cm = rep.depth == rep.dim;
  rep.perfect = rep.grade == rep.pd_resolution;
  rep.cm_iff_formula = rep.cm == (rep.pd_resolution == rep.pd_predicted);
  rep.auslander_buchsbaum = rep.pd_resolution + rep.depth == l;
  return rep;
}

CmReport verify_cm(const Representation& m) { return verify_cm(m, m.field()); }

std::vector<SurveyRow> pd_formula_survey(QuiverPtr q, const DimVector& d, const Field& f) {
  check_dim_vector(*q, d);
  DynkinCache cache(std::move(q), f);
  const Quiver& quiver = *cache.quiver_ptr();
  const long l = rep_space_dim(quiver, d);
  const long dsq = sum_of_squares(d);
  std::vector<SurveyRow> rows;
  for (const auto& label : enumerate_orbits(quiver, d)) {
    SurveyRow row;
    row.label = label;
    const long end = cache.end_dim_of(label);
    row.orbit_dim = dsq - end;
    row.pd = l - dsq + end;
    row.open = row.pd == 0;
    row.closed = label.semisimple();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qcm
