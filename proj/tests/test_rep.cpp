#include <doctest.h>

#include "qrep/closedform.hpp"
#include "qrep/series.hpp"

using namespace qrep;

TEST_SUITE("rep") {
  TEST_CASE("construction starts with zero maps of the declared shapes") {
    const AlgebraPtr alg = path_algebra(build_dn(4));
    const Representation m(alg, Field::rationals(), {1, 1, 2, 1, 1});
    CHECK(m.total_dim() == 6);
    CHECK(m.dim(2) == 2);
    for (int a = 0; a < alg->quiver().arrow_count(); ++a) {
      const Arrow& ar = alg->quiver().arrow(a);
      CHECK(m.map(a).rows() == m.dim(ar.target));
      CHECK(m.map(a).cols() == m.dim(ar.source));
      CHECK(m.map(a).is_zero());
    }
    CHECK(validate(m).empty());
    CHECK_THROWS_AS(Representation(alg, Field::rationals(), {1, 1}), Error);
    CHECK_THROWS_AS(Representation(alg, Field::rationals(), {1, 1, -2, 1, 1}), Error);
  }

  TEST_CASE("set_map checks shape and field") {
    const AlgebraPtr alg = path_algebra(build_dn(4));
    Representation m(alg, Field::rationals(), {1, 1, 1, 1, 1});
    CHECK_THROWS_AS(m.set_map(0, ExactMatrix(2, 1, Field::rationals())), Error);
    CHECK_THROWS_AS(m.set_map(0, ExactMatrix(1, 1, Field::prime(5))), FieldMismatch);
    m.set_map(0, ExactMatrix::identity(1, Field::rationals()));
    CHECK(m.map(0).at(0, 0).is_one());
  }

  TEST_CASE("equality compares dims and maps over the same algebra") {
    const Field f = Field::rationals();
    const AlgebraPtr alg = path_algebra(build_dn(4));
    Representation a(alg, f, {1, 1, 1, 0, 0});
    Representation b(alg, f, {1, 1, 1, 0, 0});
    CHECK(a == b);
    b.set_map(0, ExactMatrix::identity(1, f));
    CHECK_FALSE(a == b);
  }

  TEST_CASE("path_map composes along arrow lists") {
    const Field f = Field::rationals();
    const Representation m = build_rank2(2, 1, 2, 1, f);
    const CanonicalShape& c = m.algebra()->canonical();
    const ExactMatrix expected = m.map(c.alpha_arrows[1]) * m.map(c.alpha_arrows[0]);
    CHECK(path_map(m, c.alpha_arrows) == expected);
    CHECK_THROWS_AS(path_map(m, {}), Error);
  }

  TEST_CASE("validate enforces the arm relation exactly") {
    const Field f = Field::rationals();
    Representation m = build_rank2(2, 1, 2, 1, f);
    REQUIRE(validate(m).empty());
    const CanonicalShape& c = m.algebra()->canonical();
    CHECK(path_map(m, c.gamma_arrows) ==
          path_map(m, c.alpha_arrows) + path_map(m, c.beta_arrows));
    // Zeroing one arm map breaks the relation and validate says so.
    const int a2 = c.alpha_arrows[1];
    m.set_map(a2, ExactMatrix(m.map(a2).rows(), m.map(a2).cols(), f));
    const auto errors = validate(m);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].find("relation") != std::string::npos);
  }

  TEST_CASE("rank needs the relation data and reads the two ends") {
    const Field f = Field::rationals();
    CHECK(rank(build_rank2(3, 1, 2, 1, f)) == 2);
    CHECK(rank(build_e6_rank3_series1(2, f)) == 3);
    const Representation plain(path_algebra(build_dn(4)), f, {1, 1, 1, 1, 1});
    CHECK_THROWS_AS(rank(plain), UnsupportedAlgebra);
  }

  TEST_CASE("direct sums are blockwise") {
    const Field f = Field::rationals();
    const Representation a = build_rank2(2, 1, 2, 0, f);
    const Representation b = build_rank2(2, 1, 2, 1, f);
    const Representation s = direct_sum(a, b);
    REQUIRE(s.dims().size() == a.dims().size());
    for (size_t v = 0; v < s.dims().size(); ++v)
      CHECK(s.dims()[v] == a.dims()[v] + b.dims()[v]);
    CHECK(validate(s).empty());
    CHECK(rank(s) == rank(a) + rank(b));
    // Off-diagonal blocks vanish; diagonal blocks are the summands' maps.
    const CanonicalShape& c = s.algebra()->canonical();
    const int g1 = c.gamma_arrows[0];
    const ExactMatrix& block = s.map(g1);
    const ExactMatrix& top = a.map(g1);
    for (int i = 0; i < top.rows(); ++i)
      for (int j = 0; j < top.cols(); ++j) CHECK(block.at(i, j) == top.at(i, j));
    for (int i = 0; i < top.rows(); ++i)
      for (int j = top.cols(); j < block.cols(); ++j) CHECK(block.at(i, j).is_zero());
    const Representation other(path_algebra(build_dn(4)), f, {1, 1, 1, 1, 1});
    CHECK_THROWS_AS(direct_sum(a, other), Error);
  }

  TEST_CASE("dualize is an involution and swaps the module's ends") {
    const Field f = Field::rationals();
    const Representation m = build_rank2(2, 1, 2, 1, f);
    const Representation d = dualize(m);
    CHECK(validate(d).empty());
    CHECK(d.quiver() == m.quiver().reversed());
    CHECK(rank(m) == 2);
    CHECK(rank(d) == -2);  // source and sink trade roles
    CHECK(dualize(d) == m);
    // Matrices are transposed arrow by arrow.
    for (int a = 0; a < m.quiver().arrow_count(); ++a)
      CHECK(d.map(a) == m.map(a).transpose());
    // Also an involution over the hereditary side.
    const Representation n = dn_rank2(5, 1, 2, 1, f);
    CHECK(dualize(dualize(n)) == n);
  }

  TEST_CASE("graph symmetries permute spike pairs") {
    CHECK(dn_symmetry(DnSymmetry::SwapLeft, 4) == std::vector<int>{1, 0, 2, 3, 4});
    CHECK(dn_symmetry(DnSymmetry::SwapRight, 4) == std::vector<int>{0, 1, 2, 4, 3});
    CHECK(dn_symmetry(DnSymmetry::SwapBoth, 4) == std::vector<int>{1, 0, 2, 4, 3});
    const Field f = Field::rationals();
    const Representation m = dn_rank2(4, 1, 2, 1, f);
    const auto perm = dn_symmetry(DnSymmetry::SwapLeft, 4);
    const Representation t = apply_graph_symmetry(m, perm);
    CHECK(validate(t).empty());
    CHECK(t.dim(0) == m.dim(1));
    CHECK(apply_graph_symmetry(t, perm) == m);
    // A vertex swap that is not a quiver automorphism is rejected.
    CHECK_THROWS_AS(apply_graph_symmetry(m, std::vector<int>{2, 1, 0, 3, 4}), Error);
    CHECK_THROWS_AS(apply_graph_symmetry(m, std::vector<int>{0, 1}), Error);
  }

  TEST_CASE("morphism validity and composition") {
    const Field f = Field::rationals();
    const auto m = std::make_shared<const Representation>(build_rank2(2, 1, 2, 1, f));
    Morphism id;
    id.source = m;
    id.target = m;
    for (int d : m->dims()) id.comps.push_back(ExactMatrix::identity(d, f));
    CHECK(id.is_valid());
    CHECK(id.is_isomorphism());
    const Morphism twice = compose(id, id);
    for (size_t v = 0; v < id.comps.size(); ++v) CHECK(twice.comps[v] == id.comps[v]);
    // Scaling one component only breaks commutativity.
    Morphism bad = id;
    bad.comps[0] = bad.comps[0].scaled(Scalar::from_long(2, f));
    CHECK_FALSE(bad.is_valid());
    CHECK_FALSE(bad.is_isomorphism());
  }
}
