#include "qcm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace qcm {

Mono mono_one(int nvars) { return Mono{std::vector<std::uint16_t>(nvars, 0), 0}; }

Mono mono_var(int nvars, int i) {
  Mono m = mono_one(nvars);
  m.e[i] = 1;
  m.deg = 1;
  return m;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
  m.deg = a.deg + b.deg;
  return m;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
  Mono m = b;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (a.e[i] > b.e[i]) throw Error("monomial division is not exact");
    m.e[i] -= a.e[i];
  }
  m.deg = b.deg - a.deg;
  return m;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono m = a;
  m.deg = 0;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

MonoOrder parse_mono_order(const std::string& name) {
  if (name == "degrevlex") return MonoOrder::DegRevLex;
  if (name == "deglex") return MonoOrder::DegLex;
  if (name == "lex") return MonoOrder::Lex;
  throw Error("unknown monomial order: " + name);
}

int mono_cmp(const Mono& a, const Mono& b, MonoOrder o) {
  switch (o) {
    case MonoOrder::DegRevLex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (std::size_t i = a.e.size(); i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      return 0;
    case MonoOrder::DegLex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      [[fallthrough]];
    case MonoOrder::Lex:
      for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
  }
  return 0;
}

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i] == name) return i;
  throw Error("unknown variable: " + name);
}

PolyRingPtr make_ring(std::vector<std::string> vars, const Field& f, MonoOrder order) {
  auto r = std::make_shared<PolyRing>();
  r->vars = std::move(vars);
  r->field = f;
  r->order = order;
  return r;
}

Poly Poly::zero(PolyRingPtr r) {
  Poly p;
  p.ring_ = std::move(r);
  return p;
}

Poly Poly::constant(PolyRingPtr r, const FieldElement& c) {
  Poly p = zero(std::move(r));
  if (!c.is_zero()) p.t_.push_back({mono_one(p.ring_->nvars()), c});
  return p;
}

Poly Poly::constant(PolyRingPtr r, long c) {
  const Field f = r->field;
  return constant(std::move(r), FieldElement(f, c));
}

Poly Poly::variable(PolyRingPtr r, int i) {
  Poly p = zero(std::move(r));
  p.t_.push_back({mono_var(p.ring_->nvars(), i), FieldElement(p.ring_->field, 1)});
  return p;
}

Poly Poly::from_terms(PolyRingPtr r, std::vector<Term> terms) {
  const MonoOrder o = r->order;
  std::sort(terms.begin(), terms.end(),
            [o](const Term& a, const Term& b) { return mono_cmp(a.m, b.m, o) > 0; });
  Poly p = zero(std::move(r));
  for (auto& t : terms) {
    if (t.c.is_zero()) continue;
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Poly::leading() const {
  if (t_.empty()) throw Error("leading term of the zero polynomial");
  return t_[0];
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.m.deg);
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : t_)
    if (t.m.deg != t_[0].m.deg) return false;
  return true;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(t_[0].c.inverse());
}

Poly Poly::scaled(const FieldElement& c) const {
  Poly p = *this;
  if (c.is_zero()) {
    p.t_.clear();
    return p;
  }
  for (auto& t : p.t_) t.c *= c;
  return p;
}

Poly Poly::term_mul(const Mono& m, const FieldElement& c) const {
  Poly p = Poly::zero(ring_);
  if (c.is_zero()) return p;
  p.t_.reserve(t_.size());
  for (const auto& t : t_) p.t_.push_back({mono_mul(t.m, m), t.c * c});
  return p;  // multiplying by a fixed monomial preserves the term order
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.t_) t.c = -t.c;
  return p;
}

namespace {

PolyRingPtr common_ring(const Poly& a, const Poly& b) {
  PolyRingPtr r = a.ring() ? a.ring() : b.ring();
  if (!r) throw Error("operation on polynomials without a ring");
  if (a.ring() && b.ring() && a.ring() != b.ring() &&
      !(a.ring()->vars == b.ring()->vars && a.ring()->field == b.ring()->field &&
        a.ring()->order == b.ring()->order))
    throw Error("polynomial ring mismatch");
  return r;
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  PolyRingPtr r = common_ring(a, b);
  const MonoOrder o = r->order;
  Poly out = Poly::zero(r);
  auto ia = a.t_.begin();
  auto ib = b.t_.begin();
  while (ia != a.t_.end() || ib != b.t_.end()) {
    if (ib == b.t_.end()) {
      out.t_.push_back(*ia++);
    } else if (ia == a.t_.end()) {
      out.t_.push_back(*ib++);
    } else {
      const int c = mono_cmp(ia->m, ib->m, o);
      if (c > 0) {
        out.t_.push_back(*ia++);
      } else if (c < 0) {
        out.t_.push_back(*ib++);
      } else {
        FieldElement s = ia->c + ib->c;
        if (!s.is_zero()) out.t_.push_back({ia->m, std::move(s)});
        ++ia;
        ++ib;
      }
    }
  }
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  PolyRingPtr r = common_ring(a, b);
  const MonoOrder o = r->order;
  auto cmp = [o](const Mono& x, const Mono& y) { return mono_cmp(x, y, o) > 0; };
  std::map<Mono, FieldElement, decltype(cmp)> acc(cmp);
  for (const auto& ta : a.t_)
    for (const auto& tb : b.t_) {
      Mono m = mono_mul(ta.m, tb.m);
      FieldElement c = ta.c * tb.c;
      auto it = acc.find(m);
      if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
      else it->second += c;
    }
  Poly out = Poly::zero(r);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.t_.push_back({m, c});
  return out;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  PolyRingPtr r = b.ring();
  Poly rem = a;
  Poly quot = Poly::zero(r);
  const Term& lb = b.leading();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    if (!mono_divides(lb.m, lr.m)) throw Error("polynomial division is not exact");
    const Mono qm = mono_div(lr.m, lb.m);
    const FieldElement qc = lr.c / lb.c;
    quot = quot + Poly::from_terms(r, {{qm, qc}});
    rem = rem - b.term_mul(qm, qc);
  }
  return quot;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  const Field& f = ring_->field;
  for (const auto& t : t_) {
    std::string coef = t.c.str();
    bool neg = false;
    if (f.kind == FieldKind::Rationals && coef.size() && coef[0] == '-') {
      neg = true;
      coef = coef.substr(1);
    }
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string monos;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (!monos.empty()) monos += "*";
      monos += ring_->vars[i];
      if (t.m.e[i] > 1) monos += "^" + std::to_string(t.m.e[i]);
    }
    if (monos.empty()) {
      out << coef;
    } else if (coef == "1") {
      out << monos;
    } else {
      out << coef << "*" << monos;
    }
  }
  return out.str();
}

Poly poly_parse(PolyRingPtr r, const std::string& text) {
  // split into signed term strings
  std::vector<std::pair<int, std::string>> parts;  // sign, body
  std::string cur;
  int sign = 1;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '+' || ch == '-') {
      if (!cur.empty()) {
        parts.push_back({sign, cur});
        cur.clear();
      } else if (any && cur.empty()) {
        // consecutive signs not allowed
        throw Error("malformed polynomial: dangling sign");
      }
      sign = ch == '-' ? -1 : 1;
      any = true;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
      any = true;
    }
  }
  if (!cur.empty()) parts.push_back({sign, cur});
  std::vector<Term> terms;
  for (const auto& [sgn, body] : parts) {
    if (body.empty()) throw Error("malformed polynomial: empty term");
    Mono m = mono_one(r->nvars());
    FieldElement c(r->field, sgn);
    std::istringstream fs(body);
    std::string factor;
    while (std::getline(fs, factor, '*')) {
      if (factor.empty()) throw Error("malformed polynomial: empty factor in '" + body + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        c *= FieldElement::parse(r->field, factor);
      } else {
        const auto caret = factor.find('^');
        const std::string name = caret == std::string::npos ? factor : factor.substr(0, caret);
        long e = 1;
        if (caret != std::string::npos) {
          try {
            e = std::stol(factor.substr(caret + 1));
          } catch (...) {
            throw Error("malformed exponent in '" + factor + "'");
          }
          if (e < 0) throw Error("negative exponent in '" + factor + "'");
        }
        const int vi = r->var_index(name);
        m.e[vi] = static_cast<std::uint16_t>(m.e[vi] + e);
        m.deg += static_cast<int>(e);
      }
    }
    terms.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(std::move(r), std::move(terms));
}

Poly map_vars(const Poly& p, PolyRingPtr target, const std::vector<int>& var_map) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Mono m = mono_one(target->nvars());
    for (std::size_t i = 0; i < t.m.e.size(); ++i) {
      m.e[var_map[i]] = static_cast<std::uint16_t>(m.e[var_map[i]] + t.m.e[i]);
    }
    m.deg = t.m.deg;
    terms.push_back({std::move(m), t.c});
  }
  return Poly::from_terms(std::move(target), std::move(terms));
}

Poly poly_det(const Matrix<Poly>& m, PolyRingPtr r) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(r, 1);
  if (n > 12) throw ScaleLimit("determinant size " + std::to_string(n) + " exceeds the desk-scale bound 12");
  // D[mask] = det of the submatrix on rows 0..popcount-1 and columns in mask
  std::vector<Poly> d(std::size_t(1) << n);
  d[0] = Poly::constant(r, 1);
  for (std::size_t mask = 1; mask < d.size(); ++mask) {
    const int row = __builtin_popcount(static_cast<unsigned>(mask)) - 1;
    Poly acc = Poly::zero(r);
    int idx = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) continue;
      const Poly& entry = m.at(row, c);
      if (!entry.is_zero()) {
        Poly contrib = d[mask ^ (std::size_t(1) << c)] * entry;
        acc = ((row + idx) % 2 == 0) ? acc + contrib : acc - contrib;
      }
      ++idx;
    }
    d[mask] = std::move(acc);
  }
  return d.back();
}

}  // namespace qcm
