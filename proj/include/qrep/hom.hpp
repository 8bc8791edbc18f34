#pragma once

#include <optional>
#include <string>

#include "qrep/rep.hpp"

namespace qrep {

// Basis of Hom(source, target), produced by the RREF kernel of the full
// intertwining system (one block of equations per arrow; a canonical relation
// imposes no extra condition on morphisms). Deterministic: element k has a 1
// in free coordinate free_positions[k] and 0 in the other free coordinates,
// free positions ascending in the flattened (vertex, row, col) order.
class HomBasis {
 public:
  HomBasis(std::shared_ptr<const Representation> source,
           std::shared_ptr<const Representation> target,
           std::vector<std::vector<ExactMatrix>> elements, std::vector<int> free_positions);

  int dim() const { return static_cast<int>(elements_.size()); }
  const Representation& source() const { return *source_; }
  const Representation& target() const { return *target_; }
  const std::vector<ExactMatrix>& element(int k) const { return elements_.at(k); }
  Morphism morphism(int k) const;
  const std::vector<int>& free_positions() const { return free_positions_; }

  // Coordinates of a morphism (given by vertex components) in this basis;
  // nullopt if it is not in the span.
  std::optional<std::vector<Scalar>> coordinates(const std::vector<ExactMatrix>& comps) const;

  // The member with the given coefficients.
  Morphism combination(const std::vector<Scalar>& coeffs) const;

 private:
  std::shared_ptr<const Representation> source_, target_;
  std::vector<std::vector<ExactMatrix>> elements_;
  std::vector<int> free_positions_;
};

HomBasis hom_basis(const Representation& x, const Representation& y);

int hom_dim(const Representation& x, const Representation& y);

int end_dim(const Representation& x);

// dim Ext^1(X,Y) = dim Hom(X,Y) - <dim X, dim Y>; path algebras only
// (throws UnsupportedAlgebra when the algebra carries a relation).
int ext1_dim_hereditary(const Representation& x, const Representation& y);

// True iff the evaluation map from copies of the given modules onto m is
// surjective at every vertex: the vertex components of all hom basis elements
// from every t in ts jointly span m's space at each vertex.
bool gen_membership(const std::vector<Representation>& ts, const Representation& m);

enum class IsoVerdict { Found, NotFound, ProvenNonIsomorphic };

struct IsoResult {
  IsoVerdict verdict;
  std::optional<Morphism> iso;  // set iff Found
  std::string detail;
};

// Searches Hom(X,Y) for an isomorphism: dimension-vector reject first; the
// single basis element when dim Hom = 1; then 64 seeded pseudo-random
// coefficient combinations; then all 0/1 coefficient vectors when
// dim Hom <= 12. "NotFound" is not a proof; "ProvenNonIsomorphic" is
// (distinct dimension vectors, or no nonzero morphism at all).
IsoResult find_iso(const Representation& x, const Representation& y);

}  // namespace qrep
