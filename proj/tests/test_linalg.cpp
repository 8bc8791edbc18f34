#include <doctest.h>

#include <cstdint>

#include "qrep/linalg.hpp"

using namespace qrep;

namespace {

// Deterministic generator for reproducible pseudo-random fixtures.
struct Mix {
  uint64_t s;
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

ExactMatrix random_matrix(int rows, int cols, const Field& f, Mix& rng, long spread) {
  ExactMatrix m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.set(i, j, Scalar::from_long(static_cast<long>(rng.next() % (2 * spread + 1)) - spread, f));
  return m;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rational scalars normalize to lowest terms with positive denominator") {
    const Field f = Field::rationals();
    CHECK(Scalar::parse("2/4", f).to_string() == "1/2");
    CHECK(Scalar::parse("-3/6", f).to_string() == "-1/2");
    CHECK(Scalar::parse("4/2", f).to_string() == "2");
    CHECK(Scalar::parse("0/7", f).is_zero());
    CHECK(Scalar::from_long(-5, f).to_string() == "-5");
    // to_string round trips through parse bit-exactly.
    for (const char* s : {"-7/3", "22", "0", "1/9"}) {
      const Scalar v = Scalar::parse(s, f);
      CHECK(Scalar::parse(v.to_string(), f) == v);
    }
  }

  TEST_CASE("rational arithmetic is exact") {
    const Field f = Field::rationals();
    const Scalar a = Scalar::parse("1/3", f);
    const Scalar b = Scalar::parse("1/6", f);
    CHECK((a + b).to_string() == "1/2");
    CHECK((a - b).to_string() == "1/6");
    CHECK((a * b).to_string() == "1/18");
    CHECK((a / b).to_string() == "2");
    CHECK((-a).to_string() == "-1/3");
    CHECK(a.inverse().to_string() == "3");
    CHECK_THROWS_AS(a / Scalar::zero(f), Error);
    CHECK_THROWS_AS(Scalar::zero(f).inverse(), Error);
  }

  TEST_CASE("prime-field scalars reduce into [0, p)") {
    const Field f5 = Field::prime(5);
    CHECK(Scalar::from_long(-3, f5).to_string() == "2");
    CHECK(Scalar::from_long(7, f5).to_string() == "2");
    CHECK(Scalar::from_long(2, f5).inverse() == Scalar::from_long(3, f5));
    // Fractions are resolved by modular inversion of the denominator.
    CHECK(Scalar::parse("1/2", f5) == Scalar::from_long(3, f5));
    CHECK_THROWS_AS(Scalar::parse("1/5", f5), FieldMismatch);
    CHECK_THROWS_AS(Field::prime(4), UnsupportedType);
    CHECK_THROWS_AS(Field::prime(1), UnsupportedType);
    CHECK(Field::parse("fp:7").characteristic() == 7);
    CHECK(Field::parse("q").is_rationals());
    CHECK(Field::prime(2).to_string() == "fp:2");
  }

  TEST_CASE("malformed scalar strings are rejected") {
    const Field f = Field::rationals();
    for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.5", "2 3"})
      CHECK_THROWS_AS(Scalar::parse(bad, f), Error);
  }

  TEST_CASE("mixing fields is rejected") {
    const Scalar q = Scalar::one(Field::rationals());
    const Scalar p = Scalar::one(Field::prime(3));
    CHECK_THROWS_AS(q + p, FieldMismatch);
    CHECK_THROWS_AS(q * p, FieldMismatch);
    ExactMatrix m(1, 1, Field::rationals());
    CHECK_THROWS_AS(m.set(0, 0, p), FieldMismatch);
    CHECK_THROWS_AS(ExactMatrix::identity(1, Field::rationals()) *
                        ExactMatrix::identity(1, Field::prime(3)),
                    FieldMismatch);
  }

  TEST_CASE("matrix blocks, stacking and transpose") {
    const Field f = Field::rationals();
    ExactMatrix m(3, 3, f);
    m.place_identity(1, 0, 2, -1);
    CHECK(m == ExactMatrix::from_rows({{0, 0, 0}, {-1, 0, 0}, {0, -1, 0}}, f));
    ExactMatrix b(2, 1, f);
    b.set(0, 0, 5L);
    m.place_block(0, 2, b);
    CHECK(m.at(0, 2) == Scalar::from_long(5, f));
    CHECK(m.at(1, 2).is_zero());
    const ExactMatrix h = hstack(ExactMatrix::identity(2, f), ExactMatrix(2, 1, f));
    CHECK(h == ExactMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}, f));
    const ExactMatrix v = vstack(ExactMatrix::identity(2, f), ExactMatrix(1, 2, f));
    CHECK(v == h.transpose());
    CHECK(v.transpose().transpose() == v);
    CHECK_THROWS_AS(hstack(ExactMatrix(2, 1, f), ExactMatrix(3, 1, f)), Error);
    CHECK_THROWS_AS(vstack(ExactMatrix(1, 2, f), ExactMatrix(1, 3, f)), Error);
  }

  TEST_CASE("empty shapes compose without special cases") {
    const Field f = Field::rationals();
    const ExactMatrix a(2, 0, f);
    const ExactMatrix b(0, 3, f);
    const ExactMatrix p = a * b;
    CHECK(p.rows() == 2);
    CHECK(p.cols() == 3);
    CHECK(p.is_zero());
    CHECK(is_invertible(ExactMatrix(0, 0, f)));
    CHECK(rank(a) == 0);
    CHECK(kernel_basis(b).size() == 3);
    CHECK(rref(a).rank() == 0);
  }

  TEST_CASE("rref produces the canonical reduced form") {
    const Field f = Field::rationals();
    const ExactMatrix a = ExactMatrix::from_rows({{0, 2, 4}, {1, 1, 1}}, f);
    const Rref r = rref(a);
    CHECK(r.mat == ExactMatrix::from_rows({{1, 0, -1}, {0, 1, 2}}, f));
    CHECK(r.pivot_cols == std::vector<int>{0, 1});
    CHECK(r.rank() == 2);
    // RREF is idempotent, hence deterministic output == fixed point.
    CHECK(rref(r.mat).mat == r.mat);
  }

  TEST_CASE("rank and invertibility") {
    const Field f = Field::rationals();
    CHECK(rank(ExactMatrix::from_rows({{1, 2}, {2, 4}}, f)) == 1);
    CHECK(rank(ExactMatrix::identity(3, f)) == 3);
    CHECK(is_invertible(ExactMatrix::from_rows({{1, 1}, {0, 1}}, f)));
    CHECK_FALSE(is_invertible(ExactMatrix::from_rows({{1, 1}, {1, 1}}, f)));
    CHECK_FALSE(is_invertible(ExactMatrix(2, 3, f)));  // not square
    Mix rng{11};
    for (int trial = 0; trial < 10; ++trial) {
      const ExactMatrix x = random_matrix(3, 4, Field::rationals(), rng, 3);
      const ExactMatrix y = random_matrix(4, 3, Field::rationals(), rng, 3);
      CHECK(rank(x * y) <= std::min(rank(x), rank(y)));
      CHECK(rank(x.transpose()) == rank(x));
    }
  }

  TEST_CASE("kernel basis is normalized on the free columns") {
    const Field f = Field::rationals();
    const auto kb = kernel_basis(ExactMatrix::from_rows({{1, 1}}, f));
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == ExactMatrix::from_rows({{-1}, {1}}, f));
    const Kernel k = kernel_with_free_columns(ExactMatrix::from_rows({{1, 2, 3}, {0, 0, 1}}, f));
    REQUIRE(k.basis.size() == 1);
    CHECK(k.free_cols == std::vector<int>{1});
    CHECK(k.basis[0] == ExactMatrix::from_rows({{-2}, {1}, {0}}, f));
  }

  TEST_CASE("solve fixes free variables to zero") {
    const Field f = Field::rationals();
    const auto sol = solve(ExactMatrix::from_rows({{1, 1}}, f), ExactMatrix::from_rows({{1}}, f));
    REQUIRE(sol.has_value());
    CHECK(*sol == ExactMatrix::from_rows({{1}, {0}}, f));
    // Inconsistent system.
    CHECK_FALSE(solve(ExactMatrix::from_rows({{1, 1}, {1, 1}}, f),
                      ExactMatrix::from_rows({{0}, {1}}, f))
                    .has_value());
  }

  TEST_CASE("solve and solve_all reproduce random right-hand sides") {
    Mix rng{991};
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
      for (int trial = 0; trial < 8; ++trial) {
        const ExactMatrix a = random_matrix(4, 3, f, rng, 4);
        const ExactMatrix x = random_matrix(3, 2, f, rng, 4);
        const ExactMatrix b = a * x;
        const auto back = solve_all(a, b);
        REQUIRE(back.has_value());
        CHECK(a * *back == b);
        for (const ExactMatrix& v : kernel_basis(a)) CHECK((a * v).is_zero());
      }
    }
  }

  TEST_CASE("rank-nullity against brute-force counting over F_2") {
    const Field f2 = Field::prime(2);
    Mix rng{2024};
    for (int trial = 0; trial < 12; ++trial) {
      const int rows = 1 + static_cast<int>(rng.next() % 3);
      const int cols = 1 + static_cast<int>(rng.next() % 4);
      ExactMatrix a(rows, cols, f2);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          a.set(i, j, Scalar::from_long(static_cast<long>(rng.next() % 2), f2));
      // Enumerate every vector in F_2^cols and count solutions of a x = 0.
      int solutions = 0;
      for (unsigned mask = 0; mask < (1u << cols); ++mask) {
        ExactMatrix x(cols, 1, f2);
        for (int j = 0; j < cols; ++j)
          if (mask >> j & 1u) x.set(j, 0, 1L);
        if ((a * x).is_zero()) ++solutions;
      }
      CHECK(solutions == 1 << (cols - rank(a)));
      CHECK(static_cast<int>(kernel_basis(a).size()) == cols - rank(a));
    }
  }
}
