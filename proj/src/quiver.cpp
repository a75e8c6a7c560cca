#include "qcm/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace qcm {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

int Quiver::add_vertex(const std::string& name) {
  for (const auto& v : vertices_)
    if (v == name) throw Error("duplicate vertex identifier: " + name);
  vertices_.push_back(name);
  return vertex_count() - 1;
}

int Quiver::add_arrow(const std::string& name, const std::string& src, const std::string& tgt) {
  return add_arrow(name, vertex_index(src), vertex_index(tgt));
}

int Quiver::add_arrow(const std::string& name, int src, int tgt) {
  for (const auto& a : arrows_)
    if (a.name == name) throw Error("duplicate arrow identifier: " + name);
  if (src < 0 || src >= vertex_count() || tgt < 0 || tgt >= vertex_count())
    throw Error("arrow endpoint out of range for arrow " + name);
  arrows_.push_back(Arrow{name, src, tgt});
  return arrow_count() - 1;
}

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices_[i] == name) return i;
  throw Error("unknown vertex: " + name);
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[i].name == name) return i;
  throw Error("unknown arrow: " + name);
}

Quiver Quiver::parse(const std::string& text) {
  Quiver q;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(strip_comment(line));
    if (toks.empty()) continue;
    try {
      if (toks[0] == "vertex") {
        if (toks.size() != 2) throw Error("expected 'vertex <id>'");
        q.add_vertex(toks[1]);
      } else if (toks[0] == "arrow") {
        // arrow <id>: <src> -> <tgt>
        if (toks.size() != 5 || toks[3] != "->" || toks[1].empty() || toks[1].back() != ':')
          throw Error("expected 'arrow <id>: <src> -> <tgt>'");
        q.add_arrow(toks[1].substr(0, toks[1].size() - 1), toks[2], toks[4]);
      } else {
        throw Error("unknown directive '" + toks[0] + "'");
      }
    } catch (const Error& e) {
      throw Error("quiver file line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return q;
}

std::string Quiver::serialize() const {
  std::ostringstream out;
  for (const auto& v : vertices_) out << "vertex " << v << "\n";
  for (const auto& a : arrows_)
    out << "arrow " << a.name << ": " << vertices_[a.src] << " -> " << vertices_[a.tgt] << "\n";
  return out.str();
}

std::string QuiverClass::dynkin_name() const {
  switch (dynkin) {
    case DynkinType::A: return "A" + std::to_string(rank);
    case DynkinType::D: return "D" + std::to_string(rank);
    case DynkinType::E: return "E" + std::to_string(rank);
    default: return "none";
  }
}

namespace {

// Length (in edges) of the arm starting at `next` walking away from `branch`
// in a tree given by adjacency lists; -1 if a vertex of degree > 2 is met.
int arm_length(const std::vector<std::vector<int>>& adj, int branch, int next) {
  int len = 1, prev = branch, cur = next;
  while (true) {
    if (adj[cur].size() > 2) return -1;
    if (adj[cur].size() == 1) return len;
    int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    ++len;
  }
}

}  // namespace

QuiverClass classify(const Quiver& q) {
  QuiverClass c;
  const int n = q.vertex_count();
  const int m = q.arrow_count();

  // undirected adjacency (with multiplicity; loops appear twice)
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : q.arrows()) {
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }

  // connectivity
  if (n == 0) {
    c.connected = true;
  } else {
    std::vector<bool> seen(n, false);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    int count = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : adj[v])
        if (!seen[w]) { seen[w] = true; ++count; bfs.push(w); }
    }
    c.connected = count == n;
  }

  // acyclicity of the directed graph (Kahn)
  {
    std::vector<int> indeg(n, 0);
    for (const auto& a : q.arrows()) ++indeg[a.tgt];
    std::queue<int> ready;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) ready.push(v);
    int removed = 0;
    while (!ready.empty()) {
      int v = ready.front();
      ready.pop();
      ++removed;
      for (const auto& a : q.arrows())
        if (a.src == v && --indeg[a.tgt] == 0) ready.push(a.tgt);
    }
    c.acyclic = removed == n;
  }

  // tree: connected and |arrows| = |vertices| - 1 (multigraph edge count)
  c.tree = c.connected && n >= 1 && m == n - 1;
  if (!c.tree) return c;

  // Dynkin shape analysis on the underlying tree
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  const int maxdeg = n ? *std::max_element(deg.begin(), deg.end()) : 0;

  if (maxdeg <= 2) {
    c.dynkin = DynkinType::A;
    c.rank = n;
    // path order: walk from an endpoint
    if (n == 1) {
      c.a_path = {0};
      c.equioriented_a = true;
    } else {
      int start = 0;
      while (deg[start] != 1) ++start;
      std::vector<int> path{start};
      int prev = -1, cur = start;
      while (static_cast<int>(path.size()) < n) {
        int nxt = -1;
        for (int w : adj[cur])
          if (w != prev) { nxt = w; break; }
        // bounce on 2-vertex path: adj lists may repeat
        if (nxt == -1) nxt = adj[cur][0];
        prev = cur;
        cur = nxt;
        path.push_back(cur);
      }
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[path[i]] = i;
      bool all_fwd = true, all_bwd = true;
      for (const auto& a : q.arrows()) {
        if (pos[a.tgt] != pos[a.src] + 1) all_fwd = false;
        if (pos[a.src] != pos[a.tgt] + 1) all_bwd = false;
      }
      if (all_bwd && !all_fwd) std::reverse(path.begin(), path.end());
      c.equioriented_a = all_fwd || all_bwd;
      c.a_path = path;
    }
    return c;
  }

  if (maxdeg == 3) {
    int branch = -1, branch_count = 0;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 3) { branch = v; ++branch_count; }
    if (branch_count == 1) {
      std::vector<int> arms;
      for (int w : adj[branch]) {
        int len = arm_length(adj, branch, w);
        if (len < 0) return c;  // second branch vertex on the arm
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        c.dynkin = DynkinType::D;
        c.rank = n;  // arms (1,1,n-3)
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        c.dynkin = DynkinType::E;
        c.rank = n;  // 6, 7 or 8
      }
    }
  }
  return c;
}

void check_dim_vector(const Quiver& q, const DimVector& d) {
  if (static_cast<int>(d.size()) != q.vertex_count())
    throw Error("dimension vector length " + std::to_string(d.size()) + " does not match vertex count " +
                std::to_string(q.vertex_count()));
  for (int x : d)
    if (x < 0) throw Error("negative entry in dimension vector");
}

long rep_space_dim(const Quiver& q, const DimVector& d) {
  check_dim_vector(q, d);
  long l = 0;
  for (const auto& a : q.arrows()) l += static_cast<long>(d[a.src]) * d[a.tgt];
  return l;
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  check_dim_vector(q, d);
  check_dim_vector(q, e);
  if (!classify(q).acyclic) throw Error("euler form requires an acyclic quiver");
  long s = 0;
  for (int i = 0; i < q.vertex_count(); ++i) s += static_cast<long>(d[i]) * e[i];
  for (const auto& a : q.arrows()) s -= static_cast<long>(d[a.src]) * e[a.tgt];
  return s;
}

long tits_form(const Quiver& q, const DimVector& d) {
  check_dim_vector(q, d);
  long s = 0;
  for (int i = 0; i < q.vertex_count(); ++i) s += static_cast<long>(d[i]) * d[i];
  for (const auto& a : q.arrows()) s -= static_cast<long>(d[a.src]) * d[a.tgt];
  return s;
}

long sum_of_squares(const DimVector& d) {
  long s = 0;
  for (int x : d) s += static_cast<long>(x) * x;
  return s;
}

}  // namespace qcm
