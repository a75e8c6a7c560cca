#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qcm/error.hpp"

namespace qcm {

// Per-vertex dimensions, indexed in vertex file order.
using DimVector = std::vector<int>;

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
  bool operator==(const Arrow&) const = default;
};

// Finite directed multigraph with named vertices and arrows. Loops and
// parallel arrows are permitted. File order of vertices/arrows is canonical
// and used for all matrix indexing downstream.
class Quiver {
 public:
  Quiver() = default;

  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, const std::string& src, const std::string& tgt);
  int add_arrow(const std::string& name, int src, int tgt);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int i) const { return vertices_[i]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int vertex_index(const std::string& name) const;  // throws on unknown
  int arrow_index(const std::string& name) const;   // throws on unknown

  static Quiver parse(const std::string& text);
  std::string serialize() const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

enum class DynkinType { None, A, D, E };

struct QuiverClass {
  bool connected = false;
  bool acyclic = false;
  bool tree = false;
  DynkinType dynkin = DynkinType::None;
  int rank = 0;                  // n in A_n / D_n / E_n
  bool equioriented_a = false;
  // For type A: vertex indices along the path. If equioriented the order is
  // chosen so every arrow points forward.
  std::vector<int> a_path;

  bool is_dynkin() const { return dynkin != DynkinType::None; }
  std::string dynkin_name() const;
};

// Structural flags of the underlying (multi)graph; Dynkin detection is up to
// graph isomorphism with the A/D/E diagrams.
QuiverClass classify(const Quiver& q);

void check_dim_vector(const Quiver& q, const DimVector& d);

// l = sum over arrows of d_src * d_tgt.
long rep_space_dim(const Quiver& q, const DimVector& d);

// <d,e> = sum_i d_i e_i - sum_a d_{s(a)} e_{t(a)}; acyclic quivers only.
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// Symmetrized quadratic form sum d_i^2 - sum over arrows d_src d_tgt;
// orientation-independent, defined for any quiver.
long tits_form(const Quiver& q, const DimVector& d);

long sum_of_squares(const DimVector& d);

}  // namespace qcm
