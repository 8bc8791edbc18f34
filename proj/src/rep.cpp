#include "qrep/rep.hpp"

#include <algorithm>
#include <sstream>

namespace qrep {

namespace {

void check_dims(const AlgebraPtr& alg, const DimVector& dims) {
  if (!alg) throw Error("null algebra");
  if (static_cast<int>(dims.size()) != alg->quiver().vertex_count())
    throw Error("dimension vector length mismatch");
  for (int d : dims)
    if (d < 0) throw Error("negative vertex dimension");
}

}  // namespace

Representation::Representation(AlgebraPtr alg, Field f, DimVector dims)
    : alg_(std::move(alg)), field_(f), dims_(std::move(dims)) {
  check_dims(alg_, dims_);
  for (const Arrow& a : alg_->quiver().arrows())
    maps_.emplace_back(dims_[a.target], dims_[a.source], field_);
}

Representation::Representation(AlgebraPtr alg, Field f, DimVector dims,
                               std::vector<ExactMatrix> maps)
    : Representation(std::move(alg), f, std::move(dims)) {
  if (maps.size() != maps_.size()) throw Error("arrow map count mismatch");
  for (size_t a = 0; a < maps.size(); ++a) set_map(static_cast<int>(a), std::move(maps[a]));
}

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims_) t += d;
  return t;
}

void Representation::set_map(int arrow, ExactMatrix m) {
  const Arrow& a = alg_->quiver().arrow(arrow);
  if (m.field() != field_)
    throw FieldMismatch("arrow map field differs from representation field");
  if (m.rows() != dims_[a.target] || m.cols() != dims_[a.source])
    throw Error("arrow map " + a.label + " has shape " + std::to_string(m.rows()) + "x" +
                std::to_string(m.cols()) + ", expected " + std::to_string(dims_[a.target]) + "x" +
                std::to_string(dims_[a.source]));
  maps_.at(arrow) = std::move(m);
}

bool Representation::operator==(const Representation& o) const {
  return *alg_ == *o.alg_ && field_ == o.field_ && dims_ == o.dims_ && maps_ == o.maps_;
}

ExactMatrix path_map(const Representation& m, const std::vector<int>& path) {
  if (path.empty()) throw Error("empty path");
  ExactMatrix acc = m.map(path[0]);
  for (size_t t = 1; t < path.size(); ++t) acc = m.map(path[t]) * acc;
  return acc;
}

std::vector<std::string> validate(const Representation& m) {
  std::vector<std::string> issues;
  const Quiver& q = m.quiver();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const ExactMatrix& mat = m.map(a);
    if (mat.field() != m.field()) issues.push_back("map " + ar.label + ": field tag mismatch");
    if (mat.rows() != m.dim(ar.target) || mat.cols() != m.dim(ar.source))
      issues.push_back("map " + ar.label + ": shape " + std::to_string(mat.rows()) + "x" +
                       std::to_string(mat.cols()) + " does not match dims");
  }
  if (!issues.empty()) return issues;
  if (m.algebra()->has_relation()) {
    const CanonicalShape& c = m.algebra()->canonical();
    const ExactMatrix lhs = path_map(m, c.gamma_arrows);
    const ExactMatrix rhs = path_map(m, c.alpha_arrows) + path_map(m, c.beta_arrows);
    if (lhs != rhs) issues.push_back("canonical relation violated: gamma != alpha + beta");
  }
  return issues;
}

int rank(const Representation& m) {
  const CanonicalShape& c = m.algebra()->canonical();
  return m.dim(c.sink) - m.dim(c.source);
}

bool same_algebra(const Representation& a, const Representation& b) {
  return a.algebra() == b.algebra() || *a.algebra() == *b.algebra();
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!same_algebra(a, b)) throw Error("direct sum over different algebras");
  if (a.field() != b.field()) throw FieldMismatch("direct sum over mixed fields");
  DimVector dims(a.dims());
  for (size_t v = 0; v < dims.size(); ++v) dims[v] += b.dims()[v];
  Representation out(a.algebra(), a.field(), dims);
  const Quiver& q = a.quiver();
  for (int ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arr = q.arrow(ar);
    ExactMatrix blk(dims[arr.target], dims[arr.source], a.field());
    blk.place_block(0, 0, a.map(ar));
    blk.place_block(a.dim(arr.target), a.dim(arr.source), b.map(ar));
    out.set_map(ar, std::move(blk));
  }
  return out;
}

Representation dualize(const Representation& m) {
  const QuiverAlgebra& alg = *m.algebra();
  AlgebraPtr dual;
  if (alg.has_relation()) {
    CanonicalShape c = alg.canonical();
    std::swap(c.source, c.sink);
    std::reverse(c.alpha_arrows.begin(), c.alpha_arrows.end());
    std::reverse(c.beta_arrows.begin(), c.beta_arrows.end());
    std::reverse(c.gamma_arrows.begin(), c.gamma_arrows.end());
    dual = std::make_shared<QuiverAlgebra>(alg.quiver().reversed(), std::move(c));
  } else {
    dual = std::make_shared<QuiverAlgebra>(alg.quiver().reversed());
  }
  Representation out(dual, m.field(), m.dims());
  for (int a = 0; a < alg.quiver().arrow_count(); ++a) out.set_map(a, m.map(a).transpose());
  return out;
}

Representation apply_graph_symmetry(const Representation& m, const std::vector<int>& perm) {
  const Quiver& q = m.quiver();
  if (static_cast<int>(perm.size()) != q.vertex_count())
    throw Error("permutation length mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= q.vertex_count() || seen[v]) throw Error("not a vertex permutation");
    seen[v] = true;
  }
  // arrow_image[a] = the unique arrow perm[source] -> perm[target]
  std::vector<int> arrow_image(q.arrow_count(), -1);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    for (int b = 0; b < q.arrow_count(); ++b) {
      if (q.arrow(b).source == perm[ar.source] && q.arrow(b).target == perm[ar.target]) {
        if (arrow_image[a] != -1)
          throw Error("vertex permutation ambiguous on parallel arrows");
        arrow_image[a] = b;
      }
    }
    if (arrow_image[a] == -1)
      throw Error("vertex permutation is not a quiver automorphism (arrow " + ar.label +
                  " has no image)");
  }
  DimVector dims(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) dims[perm[v]] = m.dim(v);
  Representation out(m.algebra(), m.field(), dims);
  for (int a = 0; a < q.arrow_count(); ++a) out.set_map(arrow_image[a], m.map(a));
  return out;
}

std::vector<int> dn_symmetry(DnSymmetry kind, int n) {
  if (n < 4) throw UnsupportedType("D~_n needs n >= 4");
  std::vector<int> perm(n + 1);
  for (int v = 0; v <= n; ++v) perm[v] = v;
  if (kind == DnSymmetry::SwapLeft || kind == DnSymmetry::SwapBoth) std::swap(perm[0], perm[1]);
  if (kind == DnSymmetry::SwapRight || kind == DnSymmetry::SwapBoth)
    std::swap(perm[n - 1], perm[n]);
  return perm;
}

bool Morphism::is_valid() const {
  if (!source || !target || !same_algebra(*source, *target)) return false;
  const Quiver& q = source->quiver();
  if (static_cast<int>(comps.size()) != q.vertex_count()) return false;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (comps[v].field() != source->field()) return false;
    if (comps[v].rows() != target->dim(v) || comps[v].cols() != source->dim(v)) return false;
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (comps[ar.target] * source->map(a) != target->map(a) * comps[ar.source]) return false;
  }
  return true;
}

bool Morphism::is_isomorphism() const {
  if (!is_valid()) return false;
  for (const ExactMatrix& c : comps)
    if (!is_invertible(c)) return false;
  return true;
}

Morphism compose(const Morphism& g, const Morphism& h) {
  if (!g.source || !h.target || !same_algebra(*g.source, *h.target))
    throw Error("morphism composition over different algebras");
  if (g.source->dims() != h.target->dims()) throw Error("morphism composition shape mismatch");
  Morphism out;
  out.source = h.source;
  out.target = g.target;
  for (size_t v = 0; v < g.comps.size(); ++v) out.comps.push_back(g.comps[v] * h.comps[v]);
  return out;
}

}  // namespace qrep
