#include "qrep/series.hpp"

namespace qrep {

ExactMatrix x_block(int n, int i, const Field& f) {
  if (n < 0 || i < 0) throw Error("x_block needs n, i >= 0");
  ExactMatrix m(n + i, n, f);
  m.place_identity(0, 0, n);
  return m;
}

ExactMatrix y_block(int n, int i, const Field& f) {
  if (n < 0 || i < 0) throw Error("y_block needs n, i >= 0");
  ExactMatrix m(n + i, n, f);
  m.place_identity(i, 0, n);
  return m;
}

ExactMatrix enlargement(const ExactMatrix& zp, int m) {
  if (m < 0) throw Error("enlargement needs m >= 0");
  const int r = zp.rows(), c = zp.cols();
  ExactMatrix z(r + m, c + m, zp.field());
  z.place_block(0, 0, zp);
  z.place_identity(0, c, m);
  z.place_identity(r, c, m);
  return z;
}

Representation build_rank2(int p, int i, int j, int m, const Field& f) {
  if (p < 2) throw UnsupportedType("rank-2 series needs p >= 2");
  if (!(1 <= i && i < j && j <= p)) throw UnsupportedType("rank-2 series needs 1 <= i < j <= p");
  if (m < 0) throw UnsupportedType("rank-2 series needs m >= 0");
  AlgebraPtr alg = build_canonical(p, 2, 2);
  const CanonicalShape& shape = alg->canonical();

  DimVector dims(alg->quiver().vertex_count(), 0);
  dims[0] = m;
  for (int t = 1; t < p; ++t) dims[t] = m + (t >= i ? 1 : 0) + (t >= j ? 1 : 0);
  const int v1p = p - 1 + 1;   // vertex 1'
  const int v1pp = p - 1 + 2;  // vertex 1''
  const int inf = p - 1 + 3;
  dims[v1p] = m + 1;
  dims[v1pp] = m + 1;
  dims[inf] = m + 2;

  Representation rep(alg, f, dims);
  for (int t = 1; t <= p; ++t) {
    const int arrow = shape.alpha_arrows[t - 1];
    const int d = dims[t - 1];  // upper-arm vertex t-1 is dense index t-1 (0 is the star)
    if (t == i || t == j)
      rep.set_map(arrow, x_block(d, 1, f));
    else
      rep.set_map(arrow, ExactMatrix::identity(d, f));
  }
  rep.set_map(shape.beta_arrows[0], y_block(m, 1, f));
  rep.set_map(shape.beta_arrows[1], y_block(m + 1, 1, f));
  rep.set_map(shape.gamma_arrows[0], y_block(m, 1, f));
  rep.set_map(shape.gamma_arrows[1], enlargement(ExactMatrix::from_rows({{1}, {1}}, f), m));
  return rep;
}

Representation build_e6_rank3_series1(int m, const Field& f) {
  if (m < 0) throw UnsupportedType("rank-3 series needs m >= 0");
  AlgebraPtr alg = build_canonical(3, 3, 2);
  const CanonicalShape& shape = alg->canonical();
  // Vertex order: 0, 1, 2 (upper), 1', 2' (middle), 1'' (lower), inf.
  DimVector dims = {m, m + 1, m + 2, m + 1, m + 2, m + 1, m + 3};
  Representation rep(alg, f, dims);
  for (int t = 0; t < 3; ++t) rep.set_map(shape.alpha_arrows[t], x_block(m + t, 1, f));
  for (int t = 0; t < 3; ++t) rep.set_map(shape.beta_arrows[t], y_block(m + t, 1, f));
  rep.set_map(shape.gamma_arrows[0], y_block(m, 1, f));
  rep.set_map(shape.gamma_arrows[1], enlargement(ExactMatrix::from_rows({{1}, {1}, {1}}, f), m));
  return rep;
}

const Morphism* TiltingData::generator(int from, int to) const {
  for (const Generator& g : generators)
    if (g.from == from && g.to == to) return &g.g;
  return nullptr;
}

namespace {

// The hom space between distinct tilting summands here is at most
// one-dimensional; rescale its generator so the component at `vertex` equals
// `want` exactly.
Morphism scaled_generator(const Representation& a, const Representation& b, int vertex,
                          const ExactMatrix& want) {
  const HomBasis basis = hom_basis(a, b);
  if (basis.dim() != 1)
    throw InternalInconsistency("tilting generator space has dimension " +
                                std::to_string(basis.dim()) + ", expected 1");
  Morphism h = basis.morphism(0);
  const ExactMatrix& have = h.comps.at(vertex);
  if (have.rows() != want.rows() || have.cols() != want.cols())
    throw InternalInconsistency("tilting generator has unexpected shape");
  Scalar c = Scalar::zero(want.field());
  for (int r = 0; r < want.rows() && c.is_zero(); ++r)
    for (int col = 0; col < want.cols() && c.is_zero(); ++col)
      if (!have.at(r, col).is_zero()) c = want.at(r, col) / have.at(r, col);
  if (c.is_zero()) throw InternalInconsistency("tilting generator vanishes at the anchor vertex");
  for (ExactMatrix& comp : h.comps) comp = comp.scaled(c);
  if (h.comps.at(vertex) != want)
    throw InternalInconsistency("prescribed generator component is not in the hom space");
  return h;
}

}  // namespace

TiltingData build_tilting_dn(int n, const Field& f) {
  if (n < 4) throw UnsupportedType("D~_n tilting needs n >= 4");
  const int p = n - 2;
  AlgebraPtr alg = build_canonical(p, 2, 2);
  const CanonicalShape& shape = alg->canonical();
  const int v1p = p - 1 + 1, v1pp = p - 1 + 2, inf = p - 1 + 3;

  TiltingData data;
  data.algebra = alg;

  auto make = [&](const DimVector& dims) { return Representation(alg, f, dims); };
  DimVector zero(alg->quiver().vertex_count(), 0);

  {  // T_1: K at 1' and inf, b2 = identity
    DimVector d = zero;
    d[v1p] = 1;
    d[inf] = 1;
    Representation t = make(d);
    t.set_map(shape.beta_arrows[1], ExactMatrix::identity(1, f));
    data.summands.push_back(std::move(t));
  }
  {  // T_2: K at 1'' and inf, g2 = identity
    DimVector d = zero;
    d[v1pp] = 1;
    d[inf] = 1;
    Representation t = make(d);
    t.set_map(shape.gamma_arrows[1], ExactMatrix::identity(1, f));
    data.summands.push_back(std::move(t));
  }
  for (int k = 3; k <= n - 1; ++k) {
    // T_k: upper arm 0 at vertices 1..n-k-1 and K at n-k..n-3, K at 1' and
    // 1'', K^2 at inf; a_p = [1;0], b2 = [0;1], g2 = [1;1].
    DimVector d = zero;
    for (int t = 1; t <= p - 1; ++t) d[t] = (t >= n - k) ? 1 : 0;
    d[v1p] = 1;
    d[v1pp] = 1;
    d[inf] = 2;
    Representation t = make(d);
    for (int a = 1; a <= p; ++a) {
      const int lo = d[a - 1], hi = (a == p) ? 2 : d[a];
      if (lo == hi && lo > 0)
        t.set_map(shape.alpha_arrows[a - 1], ExactMatrix::identity(lo, f));
      else if (a == p)
        t.set_map(shape.alpha_arrows[a - 1], x_block(1, 1, f));
    }
    t.set_map(shape.beta_arrows[1], y_block(1, 1, f));
    t.set_map(shape.gamma_arrows[1], ExactMatrix::from_rows({{1}, {1}}, f));
    data.summands.push_back(std::move(t));
  }
  {  // T_n: K at 1', 1'' and inf, both second arm maps identities
    DimVector d = zero;
    d[v1p] = 1;
    d[v1pp] = 1;
    d[inf] = 1;
    Representation t = make(d);
    t.set_map(shape.beta_arrows[1], ExactMatrix::identity(1, f));
    t.set_map(shape.gamma_arrows[1], ExactMatrix::identity(1, f));
    data.summands.push_back(std::move(t));
  }
  {  // T_{n+1}: K everywhere, K^2 at inf; a_p = [1;0], b2 = [0;1], g2 = [1;1]
    DimVector d(alg->quiver().vertex_count(), 1);
    d[inf] = 2;
    Representation t = make(d);
    for (int a = 1; a <= p - 1; ++a)
      t.set_map(shape.alpha_arrows[a - 1], ExactMatrix::identity(1, f));
    t.set_map(shape.alpha_arrows[p - 1], x_block(1, 1, f));
    t.set_map(shape.beta_arrows[0], ExactMatrix::identity(1, f));
    t.set_map(shape.beta_arrows[1], y_block(1, 1, f));
    t.set_map(shape.gamma_arrows[0], ExactMatrix::identity(1, f));
    t.set_map(shape.gamma_arrows[1], ExactMatrix::from_rows({{1}, {1}}, f));
    data.summands.push_back(std::move(t));
  }
  for (int k = 1; k <= n + 1; ++k) data.summand_names.push_back("T" + std::to_string(k));

  auto add_gen = [&](int from, int to, const ExactMatrix& at_inf) {
    data.generators.push_back(TiltingData::Generator{
        from - 1, to - 1,
        scaled_generator(data.summands[from - 1], data.summands[to - 1], inf, at_inf)});
  };
  add_gen(1, 3, ExactMatrix::from_rows({{0}, {1}}, f));
  add_gen(2, 3, ExactMatrix::from_rows({{1}, {1}}, f));
  for (int k = 3; k <= n - 2; ++k) add_gen(k, k + 1, ExactMatrix::identity(2, f));
  add_gen(n - 1, n, ExactMatrix::from_rows({{0, 1}}, f));
  add_gen(n - 1, n + 1, ExactMatrix::identity(2, f));
  return data;
}

TiltingData build_tilting_e6(const Field& f) {
  AlgebraPtr alg = build_canonical(3, 3, 2);
  const CanonicalShape& shape = alg->canonical();
  // Vertex order: 0, u1, u2, m1, m2, l1, inf.
  const int inf = 6;

  TiltingData data;
  data.algebra = alg;
  auto make = [&](const DimVector& dims) { return Representation(alg, f, dims); };
  auto ident = [&](int k) { return ExactMatrix::identity(k, f); };

  {  // T_0 = (0; 1,2; 1,2; 1; 3): X/Y blocks up the arms, [1;1;1] on g2
    Representation t = make({0, 1, 2, 1, 2, 1, 3});
    t.set_map(shape.alpha_arrows[1], x_block(1, 1, f));
    t.set_map(shape.alpha_arrows[2], x_block(2, 1, f));
    t.set_map(shape.beta_arrows[1], y_block(1, 1, f));
    t.set_map(shape.beta_arrows[2], y_block(2, 1, f));
    t.set_map(shape.gamma_arrows[1], ExactMatrix::from_rows({{1}, {1}, {1}}, f));
    data.summands.push_back(std::move(t));
  }
  {  // T_1 = (0; 0,1; 1,2; 1; 2)
    Representation t = make({0, 0, 1, 1, 2, 1, 2});
    t.set_map(shape.alpha_arrows[2], x_block(1, 1, f));
    t.set_map(shape.beta_arrows[1], y_block(1, 1, f));
    t.set_map(shape.beta_arrows[2], ident(2));
    t.set_map(shape.gamma_arrows[1], ExactMatrix::from_rows({{1}, {1}}, f));
    data.summands.push_back(std::move(t));
  }
  {  // T_2 = (0; 0,1; 1,1; 0; 1)
    Representation t = make({0, 0, 1, 1, 1, 0, 1});
    t.set_map(shape.alpha_arrows[2], ident(1));
    t.set_map(shape.beta_arrows[1], ident(1));
    t.set_map(shape.beta_arrows[2], ident(1));
    data.summands.push_back(std::move(t));
  }
  {  // T_3 = (0; 1,2; 0,1; 1; 2)
    Representation t = make({0, 1, 2, 0, 1, 1, 2});
    t.set_map(shape.alpha_arrows[1], x_block(1, 1, f));
    t.set_map(shape.alpha_arrows[2], ident(2));
    t.set_map(shape.beta_arrows[2], y_block(1, 1, f));
    t.set_map(shape.gamma_arrows[1], ExactMatrix::from_rows({{1}, {1}}, f));
    data.summands.push_back(std::move(t));
  }
  {  // T_4 = (0; 1,1; 0,1; 0; 1)
    Representation t = make({0, 1, 1, 0, 1, 0, 1});
    t.set_map(shape.alpha_arrows[1], ident(1));
    t.set_map(shape.alpha_arrows[2], ident(1));
    t.set_map(shape.beta_arrows[2], ident(1));
    data.summands.push_back(std::move(t));
  }
  {  // T_5 = (0; 1,1; 1,1; 1; 2)
    Representation t = make({0, 1, 1, 1, 1, 1, 2});
    t.set_map(shape.alpha_arrows[1], ident(1));
    t.set_map(shape.alpha_arrows[2], x_block(1, 1, f));
    t.set_map(shape.beta_arrows[1], ident(1));
    t.set_map(shape.beta_arrows[2], y_block(1, 1, f));
    t.set_map(shape.gamma_arrows[1], ExactMatrix::from_rows({{1}, {1}}, f));
    data.summands.push_back(std::move(t));
  }
  {  // T_6 = (1; 1,1; 1,1; 1; 2)
    Representation t = make({1, 1, 1, 1, 1, 1, 2});
    t.set_map(shape.alpha_arrows[0], ident(1));
    t.set_map(shape.alpha_arrows[1], ident(1));
    t.set_map(shape.alpha_arrows[2], x_block(1, 1, f));
    t.set_map(shape.beta_arrows[0], ident(1));
    t.set_map(shape.beta_arrows[1], ident(1));
    t.set_map(shape.beta_arrows[2], y_block(1, 1, f));
    t.set_map(shape.gamma_arrows[0], ident(1));
    t.set_map(shape.gamma_arrows[1], ExactMatrix::from_rows({{1}, {1}}, f));
    data.summands.push_back(std::move(t));
  }
  for (int k = 0; k <= 6; ++k) data.summand_names.push_back("T" + std::to_string(k));

  auto add_gen = [&](int from, int to, const ExactMatrix& at_inf) {
    data.generators.push_back(TiltingData::Generator{
        from, to, scaled_generator(data.summands[from], data.summands[to], inf, at_inf)});
  };
  add_gen(0, 1, ExactMatrix::from_rows({{0, 1, 0}, {0, 0, 1}}, f));
  add_gen(1, 2, ExactMatrix::from_rows({{1, -1}}, f));
  add_gen(0, 3, ExactMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}, f));
  add_gen(3, 4, ExactMatrix::from_rows({{1, -1}}, f));
  add_gen(0, 5, ExactMatrix::from_rows({{1, 0, 0}, {0, 0, 1}}, f));
  add_gen(5, 6, ExactMatrix::identity(2, f));
  return data;
}

}  // namespace qrep
