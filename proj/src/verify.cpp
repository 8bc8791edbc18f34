#include "qrep/verify.hpp"

#include <cstdint>
#include <functional>
#include <sstream>

#include "qrep/closedform.hpp"
#include "qrep/hom.hpp"
#include "qrep/linalg.hpp"
#include "qrep/tilt.hpp"

namespace qrep {

namespace {

std::string dimvec_str(const DimVector& d) {
  std::string s = "(";
  for (size_t t = 0; t < d.size(); ++t) {
    if (t > 0) s += ",";
    s += std::to_string(d[t]);
  }
  return s + ")";
}

void record(CheckResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok) {
    ++r.failures;
    if (r.notes.size() < 12) r.notes.push_back("fail: " + what);
  }
}

// Deterministic generator, independent of the library's random paths.
struct SplitMix {
  uint64_t s;
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

// Expected dim Hom(T_k, M) for the rank-2 series over D~_n, k = 1..n+1.
int dn_expected_hom(int n, int i, int j, int m, int k) {
  if (k <= 2) return m + 1;
  if (k <= n - 1) {
    if (k <= n - j) return 2 * m + 2;
    if (k <= n - i) return 2 * m + 1;
    return 2 * m;
  }
  return m;
}

std::string dn_case_id(int n, int i, int j, int m) {
  return "dn-rank2 n=" + std::to_string(n) + " i=" + std::to_string(i) +
         " j=" + std::to_string(j) + " m=" + std::to_string(m);
}

CheckResult check_dn_iso(const VerifyOptions& opt) {
  CheckResult r{"dn-iso", "functor image matches the closed form over D~_n", 0, 0, {}};
  const Field f = Field::rationals();
  for (int n = 4; n <= opt.max_n; ++n) {
    const TiltingData t = build_tilting_dn(n, f);
    const AlgebraPtr gamma = path_algebra(build_dn(n));
    const std::vector<int> vmap = dn_vertex_map(n);
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 2; ++j)
        for (int m = 0; m <= opt.max_m; ++m) {
          const std::string id = dn_case_id(n, i, j, m);
          const FunctorOutput out = apply_functor(t, build_rank2(n - 2, i, j, m, f), gamma, vmap);
          const Representation closed = dn_rank2(n, i, j, m, f);
          if (out.rep.dims() != closed.dims()) {
            record(r, false, id + ": functor dims " + dimvec_str(out.rep.dims()) +
                                 " differ from closed form " + dimvec_str(closed.dims()));
            continue;
          }
          const IsoResult iso = find_iso(out.rep, closed);
          const bool ok = iso.verdict == IsoVerdict::Found && iso.iso && iso.iso->is_isomorphism();
          record(r, ok, id + ": " + (iso.detail.empty() ? "no isomorphism found" : iso.detail));
        }
  }
  return r;
}

CheckResult check_dn_homdims(const VerifyOptions& opt) {
  CheckResult r{"dn-homdims", "hom dimensions over D~_n follow the case table", 0, 0, {}};
  r.notes.push_back(
      "note: three narrated chain dimensions disagree with the displayed matrices; "
      "the displayed values are the ones checked here");
  const Field f = Field::rationals();
  for (int n = 4; n <= opt.max_n; ++n) {
    const TiltingData t = build_tilting_dn(n, f);
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 2; ++j)
        for (int m = 0; m <= opt.max_m; ++m) {
          const Representation mod = build_rank2(n - 2, i, j, m, f);
          for (int k = 1; k <= n + 1; ++k) {
            const int expected = dn_expected_hom(n, i, j, m, k);
            const int got = hom_dim(t.summands[k - 1], mod);
            record(r, got == expected,
                   dn_case_id(n, i, j, m) + " k=" + std::to_string(k) + ": hom dim " +
                       std::to_string(got) + ", expected " + std::to_string(expected));
          }
        }
  }
  return r;
}

CheckResult check_gen_end(const VerifyOptions& opt) {
  CheckResult r{"gen-end", "series modules are generated by T and map to bricks", 0, 0, {}};
  const Field f = Field::rationals();
  for (int n = 4; n <= opt.max_n; ++n) {
    const TiltingData t = build_tilting_dn(n, f);
    const AlgebraPtr gamma = path_algebra(build_dn(n));
    const std::vector<int> vmap = dn_vertex_map(n);
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 2; ++j)
        for (int m = 0; m <= opt.max_m; ++m) {
          const std::string id = dn_case_id(n, i, j, m);
          const Representation mod = build_rank2(n - 2, i, j, m, f);
          record(r, gen_membership(t.summands, mod), id + ": not generated by T");
          const int e = end_dim(apply_functor(t, mod, gamma, vmap).rep);
          record(r, e == 1, id + ": End(F(M)) has dimension " + std::to_string(e));
        }
  }
  {
    const TiltingData t = build_tilting_e6(f);
    const AlgebraPtr gamma = path_algebra(build_e6());
    const std::vector<int> vmap = e6_vertex_map();
    const int mmax = std::max(1, opt.max_m + 1);
    for (int m = 0; m <= mmax; ++m) {
      const std::string id = "e6-rank3 series=1 m=" + std::to_string(m);
      const Representation mod = build_e6_rank3_series1(m, f);
      record(r, gen_membership(t.summands, mod), id + ": not generated by T");
      const int e = end_dim(apply_functor(t, mod, gamma, vmap).rep);
      record(r, e == 1, id + ": End(F(M)) has dimension " + std::to_string(e));
    }
  }
  return r;
}

// A generic rank-3 source module over the (3,3,2) canonical algebra with
// dimension vector (m; m+1,m+2; m+1,m+2; m+2; m+3): random arm maps, with the
// final short-arm map solved so the defining relation holds, retried until the
// result is a brick inside the torsion class. Every such module is isomorphic
// to the unique indecomposable of that size, so it is a valid functor source
// for the second rank-3 family.
std::optional<Representation> generic_second_rank3_source(const TiltingData& t, int m,
                                                          const Field& f, uint64_t seed) {
  const AlgebraPtr lambda = t.algebra;
  const CanonicalShape& shape = lambda->canonical();
  const DimVector dims = {m, m + 1, m + 2, m + 1, m + 2, m + 2, m + 3};
  SplitMix rng{seed};
  auto rnd = [&](int rows, int cols) {
    ExactMatrix x(rows, cols, f);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        x.set(i, j, Scalar::from_long(static_cast<long>(rng.next() % 5) - 2, f));
    return x;
  };
  for (int attempt = 0; attempt < 40; ++attempt) {
    Representation mod(lambda, f, dims);
    const ExactMatrix a0 = rnd(m + 1, m), a1 = rnd(m + 2, m + 1), a2 = rnd(m + 3, m + 2);
    const ExactMatrix b0 = rnd(m + 1, m), b1 = rnd(m + 2, m + 1), b2 = rnd(m + 3, m + 2);
    const ExactMatrix g1 = rnd(m + 2, m);
    const ExactMatrix sum = a2 * a1 * a0 + b2 * b1 * b0;
    const auto part = solve_all(g1.transpose(), sum.transpose());
    if (!part) continue;
    ExactMatrix g2 = part->transpose();
    for (const ExactMatrix& v : kernel_basis(g1.transpose())) g2 = g2 + (v * rnd(1, m + 3)).transpose();
    if (!(g2 * g1 == sum)) continue;
    mod.set_map(shape.alpha_arrows[0], a0);
    mod.set_map(shape.alpha_arrows[1], a1);
    mod.set_map(shape.alpha_arrows[2], a2);
    mod.set_map(shape.beta_arrows[0], b0);
    mod.set_map(shape.beta_arrows[1], b1);
    mod.set_map(shape.beta_arrows[2], b2);
    mod.set_map(shape.gamma_arrows[0], g1);
    mod.set_map(shape.gamma_arrows[1], g2);
    if (!validate(mod).empty()) continue;
    if (end_dim(mod) != 1) continue;
    if (!gen_membership(t.summands, mod)) continue;
    return mod;
  }
  return std::nullopt;
}

CheckResult check_e6_iso(const VerifyOptions& opt) {
  CheckResult r{"e6-iso", "functor image matches the closed form over E~_6", 0, 0, {}};
  const Field f = Field::rationals();
  const TiltingData t = build_tilting_e6(f);
  const AlgebraPtr gamma = path_algebra(build_e6());
  const std::vector<int> vmap = e6_vertex_map();
  const int mmax = std::max(1, opt.max_m + 1);
  for (int m = 1; m <= mmax; ++m) {
    const std::string id = "e6-rank3 series=1 m=" + std::to_string(m);
    const Representation mod = build_e6_rank3_series1(m, f);
    const int expected_hom[7] = {3 * m + 1, 2 * m, m, 2 * m, m, 2 * m, m};
    for (int k = 0; k <= 6; ++k) {
      const int got = hom_dim(t.summands[k], mod);
      record(r, got == expected_hom[k],
             id + " k=" + std::to_string(k) + ": hom dim " + std::to_string(got) + ", expected " +
                 std::to_string(expected_hom[k]));
    }
    const FunctorOutput out = apply_functor(t, mod, gamma, vmap);
    const Representation closed = e6_rank3(1, m, f);
    if (out.rep.dims() != closed.dims()) {
      record(r, false, id + ": functor dims " + dimvec_str(out.rep.dims()) +
                           " differ from closed form " + dimvec_str(closed.dims()));
    } else {
      const IsoResult iso = find_iso(out.rep, closed);
      const bool ok = iso.verdict == IsoVerdict::Found && iso.iso && iso.iso->is_isomorphism();
      record(r, ok, id + ": " + (iso.detail.empty() ? "no isomorphism found" : iso.detail));
    }
    const std::string id2 = "e6-rank3 series=2 m=" + std::to_string(m);
    const Representation second = e6_rank3(2, m, f);
    const int e = end_dim(second);
    record(r, e == 1, id2 + ": End has dimension " + std::to_string(e));
    const int x = ext1_dim_hereditary(second, second);
    record(r, x == 0, id2 + ": Ext^1 with itself has dimension " + std::to_string(x));
    const DimVector want2 = {3 * m + 2, 2 * m + 1, m, m, 2 * m + 1, 2 * m + 1, m};
    record(r, second.dims() == want2,
           id2 + ": dims " + dimvec_str(second.dims()) + ", expected " + dimvec_str(want2));
    // Defect against the null root (hub 3, middles 2, outers 1): the family
    // must sit at -3 (three tilting steps per layer); the same arm dimensions
    // with a hub one smaller sit at 0, which rules out an exceptional module
    // of that size altogether.
    const DimVector delta = {3, 2, 1, 1, 2, 2, 1};
    DimVector lowered = want2;
    lowered[0] -= 1;
    const long defect_family = euler_form_hereditary(gamma->quiver(), delta, second.dims());
    const long defect_lowered = euler_form_hereditary(gamma->quiver(), delta, lowered);
    record(r, defect_family == -3,
           id2 + ": defect " + std::to_string(defect_family) + ", expected -3");
    record(r, defect_lowered == 0,
           id2 + ": defect with hub lowered by one is " + std::to_string(defect_lowered) +
               ", expected 0 (no exceptional module of that size)");
    // Cross-validation through the functor: a generic brick source of the
    // solved dimension vector must land exactly on the closed form.
    const auto source = generic_second_rank3_source(t, m, f, 0x5b7a9d31c4e2f680ull + 97u * m);
    if (!source) {
      record(r, false, id2 + ": no generic source module found");
    } else {
      const FunctorOutput out2 = apply_functor(t, *source, gamma, vmap);
      if (out2.rep.dims() != second.dims()) {
        record(r, false, id2 + ": functor dims " + dimvec_str(out2.rep.dims()) +
                             " differ from closed form " + dimvec_str(second.dims()));
      } else {
        const IsoResult iso2 = find_iso(out2.rep, second);
        const bool ok2 =
            iso2.verdict == IsoVerdict::Found && iso2.iso && iso2.iso->is_isomorphism();
        record(r, ok2, id2 + ": " + (iso2.detail.empty() ? "no isomorphism found" : iso2.detail));
      }
    }
  }
  r.notes.push_back(
      "note: the second family is built with hub dimension 3m+2; the alternative reading 3m+1 "
      "gives a defect-0 dimension vector admitting no exceptional module, and the functor "
      "cross-check above certifies 3m+2 as the value realized by rank-3 sources");
  return r;
}

// The four rank-1 dimension vectors over build_dn(n) and the matching source
// dimension vectors over the star algebra.
DimVector rank1_expected_dims(int n, int type, int i, int m) {
  int v1 = 0, v2 = 0, hi = 0, vn = 0;
  switch (type) {
    case 1: v1 = m, v2 = m + 1, hi = 2 * m + 1, vn = m; break;
    case 2: v1 = m + 1, v2 = m + 1, hi = 2 * m + 2, vn = m + 1; break;
    case 3: v1 = m, v2 = m, hi = 2 * m, vn = m - 1; break;
    case 4: v1 = m + 1, v2 = m, hi = 2 * m + 1, vn = m; break;
    default: throw Error("rank-1 type must be 1..4");
  }
  DimVector d(n + 1, 0);
  d[0] = v1;
  d[1] = v2;
  for (int k = 3; k <= n - 1; ++k) d[k - 1] = (k <= n - i) ? hi : hi - 1;
  d[n - 1] = vn;
  d[n] = m;
  return d;
}

DimVector rank1_source_dims(int n, int type, int i, int m) {
  const int p = n - 2;
  DimVector a(p + 3, 0);
  a[0] = m;
  for (int t = 1; t <= p - 1; ++t) a[t] = m + (t >= i ? 1 : 0);
  switch (type) {
    case 1: a[p] = m, a[p + 1] = m + 1; break;
    case 2: a[p] = m + 1, a[p + 1] = m + 1; break;
    case 3: a[p] = m, a[p + 1] = m; break;
    case 4: a[p] = m + 1, a[p + 1] = m; break;
    default: throw Error("rank-1 type must be 1..4");
  }
  a[p + 2] = m + 1;
  return a;
}

CheckResult check_rank1_dims(const VerifyOptions& opt) {
  CheckResult r{"rank1-dims", "rank-1 families: dimensions, exceptionality, transport", 0, 0, {}};
  const Field f = Field::rationals();
  const int nmax = std::min(opt.max_n, 6);
  for (int n = 4; n <= nmax; ++n)
    for (int type = 1; type <= 4; ++type)
      for (int i = 1; i <= n - 2; ++i)
        for (int m = 1; m <= std::max(1, opt.max_m); ++m) {
          const std::string id = "dn-rank1 n=" + std::to_string(n) + " type=" +
                                 std::to_string(type) + " i=" + std::to_string(i) +
                                 " m=" + std::to_string(m);
          const DimVector expected = rank1_expected_dims(n, type, i, m);
          const Representation mod = dn_rank1(n, type, i, m, f);
          record(r, mod.dims() == expected,
                 id + ": dims " + dimvec_str(mod.dims()) + ", expected " + dimvec_str(expected));
          const int e = end_dim(mod);
          record(r, e == 1, id + ": End has dimension " + std::to_string(e));
          const int x = ext1_dim_hereditary(mod, mod);
          record(r, x == 0, id + ": Ext^1 with itself has dimension " + std::to_string(x));
          const DimVector image = dimvec_map_f(n, rank1_source_dims(n, type, i, m));
          record(r, image == expected,
                 id + ": transported dims " + dimvec_str(image) + ", expected " +
                     dimvec_str(expected));
        }
  return r;
}

// Bit-level F_2 representation: one row bitmask per matrix row.
struct BitRep {
  DimVector dims;
  std::vector<std::vector<uint32_t>> maps;  // per arrow: dims[target] rows over dims[source] bits
};

std::vector<uint32_t> bit_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> c(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t t = 0; t < b.size(); ++t)
      if (a[i] >> t & 1u) c[i] ^= b[t];
  return c;
}

uint64_t count_intertwiners(const Quiver& q, const BitRep& x, const BitRep& y) {
  const int nv = q.vertex_count();
  std::vector<std::vector<int>> ready(nv);
  for (int a = 0; a < q.arrow_count(); ++a)
    ready[std::max(q.arrow(a).source, q.arrow(a).target)].push_back(a);
  std::vector<std::vector<uint32_t>> g(nv);
  uint64_t count = 0;
  std::function<void(int)> assign = [&](int v) {
    if (v == nv) {
      ++count;
      return;
    }
    const int bits = y.dims[v] * x.dims[v];
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
      std::vector<uint32_t> mat(y.dims[v], 0);
      for (int row = 0; row < y.dims[v]; ++row)
        mat[row] = (mask >> (row * x.dims[v])) & ((1u << x.dims[v]) - 1u);
      g[v] = std::move(mat);
      bool ok = true;
      for (int a : ready[v]) {
        const Arrow& ar = q.arrow(a);
        if (bit_mul(g[ar.target], x.maps[a]) != bit_mul(y.maps[a], g[ar.source])) {
          ok = false;
          break;
        }
      }
      if (ok) assign(v + 1);
    }
  };
  assign(0);
  return count;
}

BitRep random_bitrep(const Quiver& q, SplitMix& rng) {
  BitRep rep;
  rep.dims.resize(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) rep.dims[v] = static_cast<int>(rng.next() % 3);
  rep.maps.resize(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    rep.maps[a].assign(rep.dims[ar.target], 0);
    for (int row = 0; row < rep.dims[ar.target]; ++row)
      rep.maps[a][row] = static_cast<uint32_t>(rng.next()) & ((1u << rep.dims[ar.source]) - 1u);
  }
  return rep;
}

Representation to_representation(const BitRep& rep, const AlgebraPtr& alg, const Field& f) {
  Representation out(alg, f, rep.dims);
  const Quiver& q = alg->quiver();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    ExactMatrix mat(rep.dims[ar.target], rep.dims[ar.source], f);
    for (int i = 0; i < mat.rows(); ++i)
      for (int j = 0; j < mat.cols(); ++j)
        if (rep.maps[a][i] >> j & 1u) mat.set(i, j, Scalar::one(f));
    out.set_map(a, mat);
  }
  return out;
}

CheckResult check_f2_oracle(const VerifyOptions& opt) {
  CheckResult r{"f2-oracle", "bit-level intertwiner count equals 2^dim over F_2", 0, 0, {}};
  const Field f2 = Field::prime(2);
  const AlgebraPtr gamma = path_algebra(build_dn(4));
  const Quiver& q = gamma->quiver();
  SplitMix rng{0x8d2f5c1b7ae94603ull};
  for (int pair = 0; pair < opt.oracle_pairs; ++pair) {
    const BitRep x = random_bitrep(q, rng);
    const BitRep y = random_bitrep(q, rng);
    const uint64_t counted = count_intertwiners(q, x, y);
    const int dim = hom_dim(to_representation(x, gamma, f2), to_representation(y, gamma, f2));
    const bool ok = dim >= 0 && dim < 63 && counted == (uint64_t{1} << dim);
    record(r, ok, "pair " + std::to_string(pair) + ": counted " + std::to_string(counted) +
                      " maps, solver dimension " + std::to_string(dim));
  }
  return r;
}

CheckResult check_ktheory_proj(const VerifyOptions& opt) {
  CheckResult r{"ktheory-proj", "summand dimension vectors transport to the projectives", 0, 0, {}};
  const Field f = Field::rationals();
  const int nmax = std::min(opt.max_n, 6);
  for (int n = 4; n <= nmax; ++n) {
    const TiltingData t = build_tilting_dn(n, f);
    const Quiver gamma = build_dn(n);
    for (int k = 1; k <= n + 1; ++k) {
      const DimVector image = dimvec_map_f(n, t.summands[k - 1].dims());
      const DimVector projective = path_counts_from(gamma, k - 1);
      record(r, image == projective,
             "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": transported " +
                 dimvec_str(image) + ", projective " + dimvec_str(projective));
    }
  }
  return r;
}

CheckResult check_duality(const VerifyOptions& opt) {
  CheckResult r{"duality", "dualize is an involution with one-dimensional End", 0, 0, {}};
  const Field f = Field::rationals();
  std::vector<std::pair<std::string, Representation>> members;
  const int mmax = std::min(2, std::max(1, opt.max_m));
  for (int n = 4; n <= std::min(opt.max_n, 6); ++n)
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 2; ++j)
        for (int m = 0; m <= mmax; ++m)
          members.emplace_back(dn_case_id(n, i, j, m), dn_rank2(n, i, j, m, f));
  for (int type = 1; type <= 4; ++type)
    for (int i = 1; i <= 3; ++i)
      for (int m = 1; m <= mmax; ++m)
        members.emplace_back("dn-rank1 n=5 type=" + std::to_string(type) +
                                 " i=" + std::to_string(i) + " m=" + std::to_string(m),
                             dn_rank1(5, type, i, m, f));
  for (int series = 1; series <= 2; ++series)
    for (int m = 1; m <= mmax + 1; ++m)
      members.emplace_back("e6-rank3 series=" + std::to_string(series) + " m=" + std::to_string(m),
                           e6_rank3(series, m, f));
  for (const auto& [id, mod] : members) {
    const Representation dual = dualize(mod);
    const int e = end_dim(dual);
    record(r, e == 1, id + ": End of the dual has dimension " + std::to_string(e));
    record(r, dualize(dual) == mod, id + ": double dual differs from the original");
  }
  return r;
}

CheckResult check_pairwise_distinct(const VerifyOptions& opt) {
  CheckResult r{"pairwise-distinct", "rank-2 members at n=5 are pairwise non-isomorphic", 0, 0, {}};
  const Field f = Field::rationals();
  const int mmax = std::min(2, opt.max_m);
  std::vector<std::pair<std::string, Representation>> members;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      for (int m = 0; m <= mmax; ++m)
        members.emplace_back(dn_case_id(5, i, j, m), dn_rank2(5, i, j, m, f));
  for (size_t a = 0; a < members.size(); ++a)
    for (size_t b = a + 1; b < members.size(); ++b) {
      const std::string id = members[a].first + " vs " + members[b].first;
      if (members[a].second.dims() != members[b].second.dims()) {
        record(r, true, id);
        continue;
      }
      const IsoResult iso = find_iso(members[a].second, members[b].second);
      record(r, iso.verdict == IsoVerdict::ProvenNonIsomorphic,
             id + ": equal dims and no proof of non-isomorphy (" + iso.detail + ")");
    }
  return r;
}

}  // namespace

const std::vector<std::string>& verify_check_ids() {
  static const std::vector<std::string> ids = {
      "dn-iso",    "dn-homdims",   "gen-end", "e6-iso",           "rank1-dims",
      "f2-oracle", "ktheory-proj", "duality", "pairwise-distinct"};
  return ids;
}

CheckResult run_check(const std::string& id, const VerifyOptions& opt) {
  if (opt.max_n < 4 || opt.max_m < 0 || opt.oracle_pairs < 1)
    throw Error("verification options out of range");
  if (id == "dn-iso") return check_dn_iso(opt);
  if (id == "dn-homdims") return check_dn_homdims(opt);
  if (id == "gen-end") return check_gen_end(opt);
  if (id == "e6-iso") return check_e6_iso(opt);
  if (id == "rank1-dims") return check_rank1_dims(opt);
  if (id == "f2-oracle") return check_f2_oracle(opt);
  if (id == "ktheory-proj") return check_ktheory_proj(opt);
  if (id == "duality") return check_duality(opt);
  if (id == "pairwise-distinct") return check_pairwise_distinct(opt);
  throw Error("unknown check id: " + id);
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
  std::vector<CheckResult> results;
  for (const std::string& id : verify_check_ids()) results.push_back(run_check(id, opt));
  return results;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "CHECK              CASES  RESULT\n";
  for (const CheckResult& r : results) {
    std::string id = r.id;
    if (id.size() < 18) id.resize(18, ' ');
    std::string cases = std::to_string(r.cases);
    if (cases.size() < 5) cases.insert(0, 5 - cases.size(), ' ');
    os << id << cases << "  " << (r.passed() ? "PASS" : "FAIL") << "\n";
  }
  for (const CheckResult& r : results)
    for (const std::string& note : r.notes) os << r.id << ": " << note << "\n";
  return os.str();
}

}  // namespace qrep
