#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qrep/error.hpp"

namespace qrep {

using DimVector = std::vector<int>;

struct Arrow {
  int source;
  int target;
  std::string label;
};

// Finite quiver. Vertices are dense indices 0..vertex_count()-1 carrying
// display names (the conventional labels: primes, "inf", shifted numbering).
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::string& vertex_name(int v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  int vertex_by_name(const std::string& name) const;  // -1 if absent

  Quiver reversed() const;  // all arrows flipped, orders preserved

  bool operator==(const Quiver& o) const;
  bool operator!=(const Quiver& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  std::vector<Arrow> arrows_;
};

// The canonical relation data: one arm path per arm, each as the arrow index
// list from the source vertex to the sink vertex. The relation is
//   gamma_path = alpha_path + beta_path
// as composed linear maps. source/sink record which vertices play the roles
// of 0 and infinity (they swap under duality).
struct CanonicalShape {
  int p = 0, q = 0, s = 0;
  int source = 0;  // the vertex all three paths start at
  int sink = 0;    // the vertex all three paths end at
  std::vector<int> alpha_arrows, beta_arrows, gamma_arrows;  // composition order
};

// Path algebra of a quiver, optionally with the canonical relation.
class QuiverAlgebra {
 public:
  explicit QuiverAlgebra(Quiver q) : quiver_(std::move(q)) {}
  QuiverAlgebra(Quiver q, CanonicalShape c) : quiver_(std::move(q)), canonical_(std::move(c)) {}

  const Quiver& quiver() const { return quiver_; }
  bool has_relation() const { return canonical_.has_value(); }
  const CanonicalShape& canonical() const;

  bool operator==(const QuiverAlgebra& o) const;
  bool operator!=(const QuiverAlgebra& o) const { return !(*this == o); }

 private:
  Quiver quiver_;
  std::optional<CanonicalShape> canonical_;
};

using AlgebraPtr = std::shared_ptr<const QuiverAlgebra>;

// Relation-free algebra on the given quiver.
AlgebraPtr path_algebra(Quiver q);

// Canonical algebra of type (p,q,s), p,q,s >= 1: star with three arms
//   0 -a1-> 1 -> ... -a_p-> inf,  0 -b1-> 1' ... , 0 -g1-> 1'' ...
// and relation g_s...g_1 = a_p...a_1 + b_q...b_1. Vertex order: 0, the upper
// arm, the middle arm, the lower arm, inf.
AlgebraPtr build_canonical(int p, int q, int s);

// True for the types whose module category is tame domestic:
// (p,q,1), (p,2,2) with p >= 2, (3,3,2), (4,3,2), (5,3,2), up to arm order.
bool is_domestic(int p, int q, int s);

// Extended Dynkin quiver D~_n (n >= 4), n+1 vertices named "1".."n+1"
// (vertex index = label-1): arrows 3->1, 3->2, k->k-1 for 4 <= k <= n-1,
// n->n-1, n+1->n-1.
Quiver build_dn(int n);

// Extended Dynkin quiver E~_6, 7 vertices named "0".."6":
// arrows 2->1, 1->0, 3->4, 4->0, 5->0, 6->5.
Quiver build_e6();

// Euler form of the path algebra (no relation):
//   <x,y> = sum_v x_v y_v - sum_{a:u->v} x_u y_v.
long euler_form_hereditary(const Quiver& q, const DimVector& x, const DimVector& y);

// Number of paths from vertex `from` to each vertex; entry [to]. This is the
// dimension vector of the indecomposable projective at `from` when the quiver
// has no oriented cycles.
DimVector path_counts_from(const Quiver& q, int from);

std::string describe(const Quiver& q);
std::string describe(const QuiverAlgebra& a);

}  // namespace qrep
