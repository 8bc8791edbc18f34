#include "qrep/tilt.hpp"

namespace qrep {

std::vector<int> dn_vertex_map(int n) {
  if (n < 4) throw UnsupportedType("D~_n needs n >= 4");
  std::vector<int> map(n + 1);
  for (int v = 0; v <= n; ++v) map[v] = v;
  return map;
}

std::vector<int> e6_vertex_map() { return {0, 1, 2, 4, 3, 5, 6}; }

ExactMatrix precomposition_matrix(const Morphism& g, const HomBasis& from, const HomBasis& to) {
  const Representation& mid = from.source();
  if (!(*g.target == mid) || !(*g.source == to.source()))
    throw TiltingMismatch("generator does not connect the two hom spaces");
  const int nv = mid.quiver().vertex_count();
  const Field f = mid.field();
  ExactMatrix result(to.dim(), from.dim(), f);
  for (int c = 0; c < from.dim(); ++c) {
    std::vector<ExactMatrix> composed;
    composed.reserve(nv);
    for (int v = 0; v < nv; ++v) composed.push_back(from.element(c)[v] * g.comps.at(v));
    const auto coords = to.coordinates(composed);
    if (!coords) throw InternalInconsistency("precomposition left the span of the hom basis");
    for (int r = 0; r < to.dim(); ++r) result.set(r, c, (*coords)[r]);
  }
  return result;
}

FunctorOutput apply_functor(const TiltingData& tilting, const Representation& m,
                            const AlgebraPtr& gamma, const std::vector<int>& vertex_map) {
  if (tilting.summands.empty()) throw TiltingMismatch("tilting data has no summands");
  if (!same_algebra(tilting.summands.front(), m))
    throw TiltingMismatch("module lives over a different algebra than the tilting summands");
  if (m.field() != tilting.summands.front().field())
    throw FieldMismatch("module and tilting summands carry different fields");
  const Quiver& q = gamma->quiver();
  if (static_cast<int>(vertex_map.size()) != q.vertex_count())
    throw TiltingMismatch("vertex map does not cover the target quiver");

  std::vector<HomBasis> bases;
  bases.reserve(q.vertex_count());
  std::vector<std::string> vertex_summands;
  vertex_summands.reserve(q.vertex_count());
  DimVector dims(q.vertex_count(), 0);
  for (int v = 0; v < q.vertex_count(); ++v) {
    const int s = vertex_map[v];
    if (s < 0 || s >= static_cast<int>(tilting.summands.size()))
      throw TiltingMismatch("vertex map points outside the summand list");
    bases.push_back(hom_basis(tilting.summands[s], m));
    dims[v] = bases.back().dim();
    vertex_summands.push_back(s < static_cast<int>(tilting.summand_names.size())
                                  ? tilting.summand_names[s]
                                  : "T" + std::to_string(s));
  }

  Representation rep(gamma, m.field(), dims);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const Morphism* g = tilting.generator(vertex_map[ar.target], vertex_map[ar.source]);
    if (!g)
      throw TiltingMismatch("no generator backs arrow " + ar.label);
    rep.set_map(a, precomposition_matrix(*g, bases[ar.source], bases[ar.target]));
  }
  return FunctorOutput{std::move(rep), std::move(bases), std::move(vertex_summands), "", ""};
}

}  // namespace qrep
