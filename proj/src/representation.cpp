#include "qcm/representation.hpp"

#include <sstream>

namespace qcm {

Representation::Representation(QuiverPtr q, Field f, DimVector d, std::vector<Mat> mats)
    : quiver_(std::move(q)), field_(f), dims_(std::move(d)), mats_(std::move(mats)) {
  check_dim_vector(*quiver_, dims_);
  if (static_cast<int>(mats_.size()) != quiver_->arrow_count())
    throw Error("expected one matrix per arrow");
  for (int a = 0; a < quiver_->arrow_count(); ++a) {
    const Arrow& ar = quiver_->arrow(a);
    const Mat& m = mats_[a];
    if (m.rows() != static_cast<std::size_t>(dims_[ar.tgt]) ||
        m.cols() != static_cast<std::size_t>(dims_[ar.src]))
      throw Error("matrix for arrow " + ar.name + " has shape " + std::to_string(m.rows()) + "x" +
                  std::to_string(m.cols()) + ", expected " + std::to_string(dims_[ar.tgt]) + "x" +
                  std::to_string(dims_[ar.src]));
    if (!(m.zero().field() == field_)) throw Error("matrix field mismatch for arrow " + ar.name);
  }
}

Representation Representation::zero(QuiverPtr q, const Field& f, DimVector d) {
  check_dim_vector(*q, d);
  std::vector<Mat> mats;
  for (const auto& a : q->arrows())
    mats.emplace_back(d[a.tgt], d[a.src], FieldElement(f));
  return Representation(std::move(q), f, std::move(d), std::move(mats));
}

Representation Representation::simple(QuiverPtr q, const Field& f, int v) {
  DimVector d(q->vertex_count(), 0);
  d[v] = 1;
  return zero(std::move(q), f, std::move(d));
}

Representation Representation::parse(const std::string& text, QuiverPtr q) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_field = false;
  Field f = Field::rationals();
  std::vector<int> dims(q->vertex_count(), -1);
  std::vector<bool> have_mat(q->arrow_count(), false);
  std::vector<Mat> mats(q->arrow_count());

  auto err = [&lineno](const std::string& msg) {
    return Error("representation file line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "quiver") continue;  // loader hint
    if (kw == "field") {
      std::string name;
      if (!(ls >> name)) throw err("expected 'field Q' or 'field F<p>'");
      try {
        f = parse_field(name);
      } catch (const Error& e) {
        throw err(e.what());
      }
      have_field = true;
    } else if (kw == "dim") {
      if (!have_field) throw err("'field' must precede 'dim'");
      std::string v;
      long n;
      if (!(ls >> v >> n)) throw err("expected 'dim <vertex> <n>'");
      int vi;
      try {
        vi = q->vertex_index(v);
      } catch (const Error& e) {
        throw err(e.what());
      }
      if (dims[vi] >= 0) throw err("dimension of vertex " + v + " declared twice");
      if (n < 0) throw err("negative dimension");
      dims[vi] = static_cast<int>(n);
    } else if (kw == "map") {
      if (!have_field) throw err("'field' must precede 'map'");
      std::string a;
      long rows, cols;
      if (!(ls >> a >> rows >> cols)) throw err("expected 'map <arrow> <rows> <cols>'");
      int ai;
      try {
        ai = q->arrow_index(a);
      } catch (const Error& e) {
        throw err(e.what());
      }
      const Arrow& ar = q->arrow(ai);
      if (dims[ar.src] < 0 || dims[ar.tgt] < 0)
        throw err("map " + a + " given before the dimensions of its endpoints");
      if (rows != dims[ar.tgt] || cols != dims[ar.src])
        throw err("map " + a + " declared " + std::to_string(rows) + "x" + std::to_string(cols) +
                  " but dims require " + std::to_string(dims[ar.tgt]) + "x" +
                  std::to_string(dims[ar.src]));
      if (have_mat[ai]) throw err("map " + a + " given twice");
      Mat m(rows, cols, FieldElement(f));
      for (long i = 0; i < rows; ++i) {
        if (!std::getline(in, line)) throw err("unexpected end of file inside map " + a);
        ++lineno;
        std::istringstream es(line);
        std::string tok;
        for (long j = 0; j < cols; ++j) {
          if (!(es >> tok))
            throw err("row " + std::to_string(i + 1) + " of map " + a + " has too few entries");
          try {
            m.at(i, j) = FieldElement::parse(f, tok);
          } catch (const Error& e) {
            throw err(e.what());
          }
        }
        if (es >> tok) throw err("row " + std::to_string(i + 1) + " of map " + a + " has too many entries");
      }
      mats[ai] = std::move(m);
      have_mat[ai] = true;
    } else {
      throw err("unknown directive '" + kw + "'");
    }
  }
  if (!have_field) throw Error("representation file: missing 'field' declaration");
  for (int v = 0; v < q->vertex_count(); ++v)
    if (dims[v] < 0) throw Error("representation file: missing dimension of vertex " + q->vertex_name(v));
  for (int a = 0; a < q->arrow_count(); ++a)
    if (!have_mat[a]) throw Error("representation file: missing matrix for arrow " + q->arrow(a).name);
  return Representation(q, f, DimVector(dims.begin(), dims.end()), std::move(mats));
}

std::string Representation::serialize() const {
  std::ostringstream out;
  out << "field " << field_.name() << "\n";
  for (int v = 0; v < quiver_->vertex_count(); ++v)
    out << "dim " << quiver_->vertex_name(v) << " " << dims_[v] << "\n";
  for (int a = 0; a < quiver_->arrow_count(); ++a) {
    const Mat& m = mats_[a];
    out << "map " << quiver_->arrow(a).name << " " << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j).str();
      out << "\n";
    }
  }
  return out.str();
}

long Representation::total_dim() const {
  long s = 0;
  for (int x : dims_) s += x;
  return s;
}

bool Representation::all_maps_zero() const {
  for (const auto& m : mats_)
    if (!is_zero_matrix(m)) return false;
  return true;
}

Representation Representation::scale(const FieldElement& lambda) const {
  std::vector<Mat> mats;
  mats.reserve(mats_.size());
  for (const auto& m : mats_) mats.push_back(scalar_mul(lambda, m));
  return Representation(quiver_, field_, dims_, std::move(mats));
}

Representation Representation::conjugate(const std::vector<Mat>& g) const {
  if (static_cast<int>(g.size()) != quiver_->vertex_count())
    throw Error("conjugate: expected one matrix per vertex");
  std::vector<Mat> ginv;
  for (const auto& gi : g) {
    auto inv = inverse(gi);
    if (!inv) throw Error("conjugate: singular vertex matrix");
    ginv.push_back(std::move(*inv));
  }
  std::vector<Mat> mats;
  for (int a = 0; a < quiver_->arrow_count(); ++a) {
    const Arrow& ar = quiver_->arrow(a);
    mats.push_back(g[ar.tgt] * mats_[a] * ginv[ar.src]);
  }
  return Representation(quiver_, field_, dims_, std::move(mats));
}

bool Representation::operator==(const Representation& o) const {
  return *quiver_ == *o.quiver_ && field_ == o.field_ && dims_ == o.dims_ && mats_ == o.mats_;
}

void check_compatible(const Representation& a, const Representation& b) {
  if (!(a.quiver() == b.quiver())) throw Error("representations live over different quivers");
  if (!(a.field() == b.field()))
    throw Error("representations live over different fields: " + a.field().name() + " vs " + b.field().name());
}

Representation direct_sum(const Representation& a, const Representation& b) {
  check_compatible(a, b);
  const Quiver& q = a.quiver();
  DimVector d(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) d[v] = a.dims()[v] + b.dims()[v];
  std::vector<Mat> mats;
  for (int ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& ar = q.arrow(ai);
    Mat m(d[ar.tgt], d[ar.src], FieldElement(a.field()));
    const Mat& ma = a.matrix(ai);
    const Mat& mb = b.matrix(ai);
    for (std::size_t i = 0; i < ma.rows(); ++i)
      for (std::size_t j = 0; j < ma.cols(); ++j) m.at(i, j) = ma.at(i, j);
    for (std::size_t i = 0; i < mb.rows(); ++i)
      for (std::size_t j = 0; j < mb.cols(); ++j)
        m.at(ma.rows() + i, ma.cols() + j) = mb.at(i, j);
    mats.push_back(std::move(m));
  }
  return Representation(a.quiver_ptr(), a.field(), std::move(d), std::move(mats));
}

}  // namespace qcm
