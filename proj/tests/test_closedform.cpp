#include <doctest.h>

#include "qrep/closedform.hpp"
#include "qrep/hom.hpp"
#include "qrep/series.hpp"

using namespace qrep;

TEST_SUITE("closedform") {
  TEST_CASE("periodic sign vectors repeat their documented patterns") {
    CHECK(periodic_sign_vector(SignPattern::FourCycle, 6) ==
          std::vector<long>{-1, 1, 1, -1, -1, 1});
    CHECK(periodic_sign_vector(SignPattern::SixCycleA, 7) ==
          std::vector<long>{-1, 1, 0, 1, -1, 0, -1});
    CHECK(periodic_sign_vector(SignPattern::SixCycleB, 7) ==
          std::vector<long>{-1, 0, 1, 1, 0, -1, -1});
    CHECK(periodic_sign_vector(SignPattern::Alternating, 5) ==
          std::vector<long>{1, -1, 1, -1, 1});
    CHECK(periodic_sign_vector(SignPattern::FourCycle, 0).empty());
  }

  TEST_CASE("rank-2 closed forms are exceptional with the pinned dimensions") {
    const Field f = Field::rationals();
    CHECK(dn_rank2(5, 1, 2, 1, f).dims() == DimVector{2, 2, 4, 3, 1, 1});
    CHECK(dn_rank2(5, 2, 3, 0, f).dims() == DimVector{1, 1, 1, 0, 0, 0});
    for (int m = 0; m <= 2; ++m) {
      const Representation mod = dn_rank2(4, 1, 2, m, f);
      CHECK(end_dim(mod) == 1);
      CHECK(ext1_dim_hereditary(mod, mod) == 0);
      CHECK(mod.dim(3) == m);
      CHECK(mod.dim(4) == m);
    }
    CHECK_THROWS_AS(dn_rank2(3, 1, 2, 1, f), UnsupportedType);
    CHECK_THROWS_AS(dn_rank2(5, 2, 2, 1, f), UnsupportedType);
    CHECK_THROWS_AS(dn_rank2(5, 1, 2, -1, f), UnsupportedType);
  }

  TEST_CASE("rank-2 dimension vectors agree with the transported source dimensions") {
    const Field f = Field::rationals();
    for (int n = 4; n <= 6; ++n)
      for (int i = 1; i + 1 <= n - 2; ++i)
        for (int m = 0; m <= 1; ++m) {
          const int j = i + 1;
          CHECK(dn_rank2(n, i, j, m, f).dims() ==
                dimvec_map_f(n, build_rank2(n - 2, i, j, m, f).dims()));
        }
  }

  TEST_CASE("rank-1 closed forms cover the four types") {
    const Field f = Field::rationals();
    CHECK(dn_rank1(5, 1, 1, 1, f).dims() == DimVector{1, 2, 3, 3, 1, 1});
    for (int type = 1; type <= 4; ++type) {
      const Representation mod = dn_rank1(5, type, 2, 1, f);
      CHECK(validate(mod).empty());
      CHECK(end_dim(mod) == 1);
      CHECK(ext1_dim_hereditary(mod, mod) == 0);
    }
    CHECK_THROWS_AS(dn_rank1(5, 3, 1, 0, f), UnsupportedType);  // type 3 starts at m = 1
    CHECK_THROWS_AS(dn_rank1(5, 0, 1, 1, f), UnsupportedType);
    CHECK_THROWS_AS(dn_rank1(5, 5, 1, 1, f), UnsupportedType);
    CHECK_THROWS_AS(dn_rank1(5, 1, 4, 1, f), UnsupportedType);
  }

  TEST_CASE("types 3 and 4 are graph-symmetry transports of types 2 and 1") {
    const Field f = Field::rationals();
    const auto perm = dn_symmetry(DnSymmetry::SwapBoth, 5);
    for (int i = 1; i <= 3; ++i) {
      CHECK(dn_rank1(5, 4, i, 2, f) == apply_graph_symmetry(dn_rank1(5, 1, i, 2, f), perm));
      CHECK(dn_rank1(5, 3, i, 2, f) == apply_graph_symmetry(dn_rank1(5, 2, i, 1, f), perm));
    }
  }

  TEST_CASE("rank-3 closed forms: both series are bricks without self-extensions") {
    const Field f = Field::rationals();
    for (int m = 1; m <= 2; ++m) {
      const Representation one = e6_rank3(1, m, f);
      CHECK(one.dims() == DimVector{3 * m + 1, 2 * m, m, m, 2 * m, 2 * m, m});
      CHECK(end_dim(one) == 1);
      CHECK(ext1_dim_hereditary(one, one) == 0);
      const Representation two = e6_rank3(2, m, f);
      CHECK(two.dims() == DimVector{3 * m + 2, 2 * m + 1, m, m, 2 * m + 1, 2 * m + 1, m});
      CHECK(end_dim(two) == 1);
      CHECK(ext1_dim_hereditary(two, two) == 0);
    }
    CHECK_THROWS_AS(e6_rank3(3, 1, f), UnsupportedType);
    CHECK_THROWS_AS(e6_rank3(1, 0, f), UnsupportedType);
  }

  TEST_CASE("rank-3 dimension vectors pair to -3 against the null root") {
    // Three tilting layers per step: both series must sit at defect -3, and
    // the second series with its hub lowered by one would sit at 0 -- the
    // regular stratum, where no brick of that size exists.
    const Quiver q = build_e6();
    const DimVector delta = {3, 2, 1, 1, 2, 2, 1};
    for (int m = 1; m <= 3; ++m) {
      const Field f = Field::rationals();
      CHECK(euler_form_hereditary(q, delta, e6_rank3(1, m, f).dims()) == -3);
      DimVector d2 = e6_rank3(2, m, f).dims();
      CHECK(euler_form_hereditary(q, delta, d2) == -3);
      d2[0] -= 1;
      CHECK(euler_form_hereditary(q, delta, d2) == 0);
    }
  }

  TEST_CASE("dimension transport follows the corner rules") {
    const Field f = Field::rationals();
    CHECK(dimvec_map_f(5, {1, 2, 3, 4, 5, 6}) == DimVector{4, 5, 6, 5, 3, 1});
    // Length must fit the (n-2,2,2) star.
    CHECK_THROWS_AS(dimvec_map_f(5, {1, 2, 3}), Error);
    CHECK_THROWS_AS(dimvec_map_f(3, {1, 2, 3, 4, 5}), UnsupportedType);
    // Transport is additive.
    const DimVector a = build_rank2(3, 1, 2, 1, f).dims();
    const DimVector b = build_rank2(3, 1, 3, 2, f).dims();
    DimVector sum(a.size());
    for (size_t k = 0; k < a.size(); ++k) sum[k] = a[k] + b[k];
    const DimVector fa = dimvec_map_f(5, a);
    const DimVector fb = dimvec_map_f(5, b);
    DimVector fsum(fa.size());
    for (size_t k = 0; k < fa.size(); ++k) fsum[k] = fa[k] + fb[k];
    CHECK(dimvec_map_f(5, sum) == fsum);
  }

  TEST_CASE("closed forms live on the hereditary star and validate cleanly") {
    const Field f = Field::rationals();
    for (const Representation& mod :
         {dn_rank2(6, 2, 4, 2, f), dn_rank1(6, 2, 3, 2, f), e6_rank3(2, 3, f)}) {
      CHECK_FALSE(mod.algebra()->has_relation());
      CHECK(validate(mod).empty());
    }
  }
}
