#pragma once

#include <vector>

#include "qrep/hom.hpp"
#include "qrep/series.hpp"

namespace qrep {

// Hom(T, M) realized as a representation of `gamma`: vertex v carries
// Hom(T_{vertex_map[v]}, M) in the stored basis, and an arrow u -> v acts by
// precomposition with the generator T_{vertex_map[v]} -> T_{vertex_map[u]}.
struct FunctorOutput {
  Representation rep;
  std::vector<HomBasis> bases;               // one per gamma vertex
  std::vector<std::string> vertex_summands;  // summand name realized at each vertex
  std::string input_id, tilting_id;          // caller-supplied provenance
};

// Which tilting summand sits at each gamma vertex. For build_dn(n) the
// summand indices line up with the vertex indices; for build_e6() the two
// middle-arm vertices trade places.
std::vector<int> dn_vertex_map(int n);
std::vector<int> e6_vertex_map();

// Matrix of f -> f o g from the span of `from` to the span of `to`. Both
// bases must target the same module, and g must run from to's source module
// into from's source module.
ExactMatrix precomposition_matrix(const Morphism& g, const HomBasis& from, const HomBasis& to);

FunctorOutput apply_functor(const TiltingData& tilting, const Representation& m,
                            const AlgebraPtr& gamma, const std::vector<int>& vertex_map);

}  // namespace qrep
