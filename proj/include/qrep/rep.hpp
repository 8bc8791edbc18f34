#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qrep/linalg.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

// Finite-dimensional representation: a vector space dimension per vertex and
// a dims[target] x dims[source] matrix per arrow, all over one field.
class Representation {
 public:
  Representation(AlgebraPtr alg, Field f, DimVector dims);  // all maps zero
  Representation(AlgebraPtr alg, Field f, DimVector dims, std::vector<ExactMatrix> maps);

  const AlgebraPtr& algebra() const { return alg_; }
  const Quiver& quiver() const { return alg_->quiver(); }
  const Field& field() const { return field_; }
  const DimVector& dims() const { return dims_; }
  int dim(int v) const { return dims_.at(v); }
  int total_dim() const;

  const ExactMatrix& map(int arrow) const { return maps_.at(arrow); }
  void set_map(int arrow, ExactMatrix m);  // shape- and field-checked

  bool operator==(const Representation& o) const;  // same algebra content, dims, maps

 private:
  AlgebraPtr alg_;
  Field field_;
  DimVector dims_;
  std::vector<ExactMatrix> maps_;
};

// Composite of the representation's maps along a path given as arrow indices
// in composition order (first applied first).
ExactMatrix path_map(const Representation& m, const std::vector<int>& path);

// Empty iff every map has the declared shape and field and, when the algebra
// carries the canonical relation, gamma = alpha + beta holds exactly.
std::vector<std::string> validate(const Representation& m);

// dim M(inf) - dim M(0); requires the canonical relation data.
int rank(const Representation& m);

bool same_algebra(const Representation& a, const Representation& b);

Representation direct_sum(const Representation& a, const Representation& b);

// Representation of the opposite algebra: arrows reversed in place, matrices
// transposed, canonical source/sink roles swapped. Involution on the nose.
Representation dualize(const Representation& m);

// Transport along a quiver automorphism given as a vertex permutation
// (perm[v] = image). Every arrow u->v must map to a unique arrow
// perm[u]->perm[v]. The result is over the same algebra.
Representation apply_graph_symmetry(const Representation& m, const std::vector<int>& perm);

// Vertex permutations of build_dn(n): swap the two left spikes (1,2), the two
// right spikes (n,n+1), or both at once.
enum class DnSymmetry { SwapLeft, SwapRight, SwapBoth };
std::vector<int> dn_symmetry(DnSymmetry kind, int n);

// Morphism of representations over a common algebra: one
// dims_target[v] x dims_source[v] matrix per vertex, commuting with all maps.
struct Morphism {
  std::shared_ptr<const Representation> source, target;
  std::vector<ExactMatrix> comps;  // per vertex

  bool is_valid() const;        // all squares commute, shapes/fields match
  bool is_isomorphism() const;  // valid with every component invertible
};

Morphism compose(const Morphism& g, const Morphism& h);  // g after h

}  // namespace qrep
