#include "qrep/hom.hpp"

#include <cstdint>

namespace qrep {

namespace {

// Flattened unknown index of component entry (v, i, j): offsets[v] + i*cols_v + j,
// where the component at v is dim_Y(v) x dim_X(v).
std::vector<int> component_offsets(const Representation& x, const Representation& y) {
  std::vector<int> off(x.quiver().vertex_count() + 1, 0);
  for (int v = 0; v < x.quiver().vertex_count(); ++v)
    off[v + 1] = off[v] + y.dim(v) * x.dim(v);
  return off;
}

std::vector<ExactMatrix> unflatten(const Representation& x, const Representation& y,
                                   const ExactMatrix& column, const std::vector<int>& off) {
  std::vector<ExactMatrix> comps;
  for (int v = 0; v < x.quiver().vertex_count(); ++v) {
    ExactMatrix c(y.dim(v), x.dim(v), x.field());
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) c.set(i, j, column.at(off[v] + i * c.cols() + j, 0));
    comps.push_back(std::move(c));
  }
  return comps;
}

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

HomBasis::HomBasis(std::shared_ptr<const Representation> source,
                   std::shared_ptr<const Representation> target,
                   std::vector<std::vector<ExactMatrix>> elements, std::vector<int> free_positions)
    : source_(std::move(source)),
      target_(std::move(target)),
      elements_(std::move(elements)),
      free_positions_(std::move(free_positions)) {}

Morphism HomBasis::morphism(int k) const { return Morphism{source_, target_, elements_.at(k)}; }

std::optional<std::vector<Scalar>> HomBasis::coordinates(
    const std::vector<ExactMatrix>& comps) const {
  // Basis elements are 1 at their own free position and 0 at the others, so
  // candidate coordinates can be read off; reconstructing and comparing then
  // certifies span membership.
  const std::vector<int> off = component_offsets(*source_, *target_);
  auto entry = [&](const std::vector<ExactMatrix>& cs, int flat) -> const Scalar& {
    int v = 0;
    while (off[v + 1] <= flat) ++v;
    const int local = flat - off[v];
    const int cols = cs[v].cols();
    return cs[v].at(local / cols, local % cols);
  };
  std::vector<Scalar> coords;
  coords.reserve(elements_.size());
  for (size_t k = 0; k < elements_.size(); ++k) coords.push_back(entry(comps, free_positions_[k]));
  for (int v = 0; v < source_->quiver().vertex_count(); ++v) {
    ExactMatrix acc(target_->dim(v), source_->dim(v), source_->field());
    for (size_t k = 0; k < elements_.size(); ++k)
      if (!coords[k].is_zero()) acc = acc + elements_[k][v].scaled(coords[k]);
    if (acc != comps[v]) return std::nullopt;
  }
  return coords;
}

Morphism HomBasis::combination(const std::vector<Scalar>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != dim()) throw Error("coefficient count mismatch");
  Morphism out{source_, target_, {}};
  for (int v = 0; v < source_->quiver().vertex_count(); ++v) {
    ExactMatrix acc(target_->dim(v), source_->dim(v), source_->field());
    for (int k = 0; k < dim(); ++k)
      if (!coeffs[k].is_zero()) acc = acc + elements_[k][v].scaled(coeffs[k]);
    out.comps.push_back(std::move(acc));
  }
  return out;
}

HomBasis hom_basis(const Representation& x, const Representation& y) {
  if (!same_algebra(x, y)) throw Error("hom over different algebras");
  if (x.field() != y.field()) throw FieldMismatch("hom over mixed fields");
  const Quiver& q = x.quiver();
  const std::vector<int> off = component_offsets(x, y);
  const int unknowns = off.back();
  int eqs = 0;
  for (const Arrow& a : q.arrows()) eqs += y.dim(a.target) * x.dim(a.source);

  // Equations: for arrow a: u->w, all (r,c): sum_j f_w[r][j] X(a)[j][c]
  //                                       - sum_i Y(a)[r][i] f_u[i][c] = 0.
  ExactMatrix sys(eqs, unknowns, x.field());
  int row = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const int u = ar.source, w = ar.target;
    const ExactMatrix& xa = x.map(a);
    const ExactMatrix& ya = y.map(a);
    for (int r = 0; r < y.dim(w); ++r)
      for (int c = 0; c < x.dim(u); ++c) {
        for (int j = 0; j < x.dim(w); ++j)
          if (!xa.at(j, c).is_zero()) sys.set(row, off[w] + r * x.dim(w) + j, xa.at(j, c));
        for (int i = 0; i < y.dim(u); ++i)
          if (!ya.at(r, i).is_zero()) {
            const int col = off[u] + i * x.dim(u) + c;
            sys.set(row, col, sys.at(row, col) - ya.at(r, i));
          }
        ++row;
      }
  }

  Kernel kernel = kernel_with_free_columns(sys);
  auto xs = std::make_shared<Representation>(x);
  auto ys = std::make_shared<Representation>(y);
  std::vector<std::vector<ExactMatrix>> elements;
  elements.reserve(kernel.basis.size());
  for (const ExactMatrix& col : kernel.basis) elements.push_back(unflatten(x, y, col, off));
  return HomBasis(std::move(xs), std::move(ys), std::move(elements),
                  std::move(kernel.free_cols));
}

int hom_dim(const Representation& x, const Representation& y) { return hom_basis(x, y).dim(); }

int end_dim(const Representation& x) { return hom_dim(x, x); }

int ext1_dim_hereditary(const Representation& x, const Representation& y) {
  if (x.algebra()->has_relation() || y.algebra()->has_relation())
    throw UnsupportedAlgebra("Ext dimension via the Euler form needs a relation-free algebra");
  const long euler = euler_form_hereditary(x.quiver(), x.dims(), y.dims());
  const long ext = hom_dim(x, y) - euler;
  if (ext < 0) throw InternalInconsistency("negative Ext dimension");
  return static_cast<int>(ext);
}

bool gen_membership(const std::vector<Representation>& ts, const Representation& m) {
  const Quiver& q = m.quiver();
  // Image at vertex v = span of all columns of all basis-morphism components.
  std::vector<ExactMatrix> stacked;
  for (int v = 0; v < q.vertex_count(); ++v)
    stacked.emplace_back(m.dim(v), 0, m.field());
  for (const Representation& t : ts) {
    const HomBasis basis = hom_basis(t, m);
    for (int k = 0; k < basis.dim(); ++k)
      for (int v = 0; v < q.vertex_count(); ++v)
        stacked[v] = hstack(stacked[v], basis.element(k)[v]);
  }
  for (int v = 0; v < q.vertex_count(); ++v)
    if (rank(stacked[v]) < m.dim(v)) return false;
  return true;
}

IsoResult find_iso(const Representation& x, const Representation& y) {
  if (!same_algebra(x, y)) throw Error("isomorphism test over different algebras");
  if (x.field() != y.field()) throw FieldMismatch("isomorphism test over mixed fields");
  if (x.dims() != y.dims())
    return {IsoVerdict::ProvenNonIsomorphic, std::nullopt, "dimension vectors differ"};
  if (x.total_dim() == 0) {
    Morphism id{std::make_shared<Representation>(x), std::make_shared<Representation>(y), {}};
    for (int v = 0; v < x.quiver().vertex_count(); ++v)
      id.comps.emplace_back(0, 0, x.field());
    return {IsoVerdict::Found, std::move(id), "zero representations"};
  }

  const HomBasis basis = hom_basis(x, y);
  if (basis.dim() == 0)
    return {IsoVerdict::ProvenNonIsomorphic, std::nullopt, "no nonzero morphisms"};

  auto invertible_everywhere = [&](const Morphism& h) {
    for (const ExactMatrix& c : h.comps)
      if (!is_invertible(c)) return false;
    return true;
  };

  if (basis.dim() == 1) {
    Morphism h = basis.morphism(0);
    if (invertible_everywhere(h)) return {IsoVerdict::Found, std::move(h), "basis element"};
    return {IsoVerdict::NotFound, std::nullopt,
            "hom space is one-dimensional and its generator is singular"};
  }

  // Seeded pseudo-random coefficient vectors; small integers keep rational
  // arithmetic cheap and hit the complement of the singular locus quickly.
  uint64_t state = 0x5eed0f2e8c1d4b37ull;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(basis.dim());
    for (int k = 0; k < basis.dim(); ++k) {
      long c;
      if (x.field().is_rationals()) {
        c = static_cast<long>(splitmix64(state) % 7) - 3;  // -3..3
      } else {
        c = static_cast<long>(splitmix64(state) % x.field().characteristic());
      }
      coeffs.push_back(Scalar::from_long(c, x.field()));
    }
    Morphism h = basis.combination(coeffs);
    if (invertible_everywhere(h))
      return {IsoVerdict::Found, std::move(h),
              "random combination, attempt " + std::to_string(attempt)};
  }

  if (basis.dim() <= 12) {
    for (uint64_t mask = 1; mask < (1ull << basis.dim()); ++mask) {
      std::vector<Scalar> coeffs;
      for (int k = 0; k < basis.dim(); ++k)
        coeffs.push_back((mask >> k) & 1 ? Scalar::one(x.field()) : Scalar::zero(x.field()));
      Morphism h = basis.combination(coeffs);
      if (invertible_everywhere(h))
        return {IsoVerdict::Found, std::move(h), "0/1 combination"};
    }
    return {IsoVerdict::NotFound, std::nullopt,
            "no invertible combination among random and 0/1 coefficient vectors"};
  }
  return {IsoVerdict::NotFound, std::nullopt, "no invertible random combination"};
}

}  // namespace qrep
