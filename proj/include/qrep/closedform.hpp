#pragma once

#include "qrep/rep.hpp"

namespace qrep {

// Infinite periodic sign patterns, truncated to the first len entries.
enum class SignPattern {
  FourCycle,   // -1, 1, 1, -1 repeating
  SixCycleA,   // -1, 1, 0, 1, -1, 0 repeating
  SixCycleB,   // -1, 0, 1, 1, 0, -1 repeating
  Alternating  // 1, -1 repeating
};
std::vector<long> periodic_sign_vector(SignPattern kind, int len);

// Indecomposable representation of build_dn(n) with dimension m at both
// right-hand spikes, built directly from block matrices. 1 <= i < j <= n-2,
// m >= 0.
Representation dn_rank2(int n, int i, int j, int m, const Field& f);

// Indecomposable representation of build_dn(n) with dimension m at exactly
// one right-hand spike and either m or m+1 at the left-hand ones; the four
// types pick the spike asymmetry. 1 <= type <= 4, 1 <= i <= n-2, m >= 0
// (type 3 needs m >= 1). Types 3 and 4 are the types 2 and 1 constructions
// transported along the swap of both spike pairs, with type 3 at m built
// from type 2 at m-1.
Representation dn_rank1(int n, int type, int i, int m, const Field& f);

// Indecomposable representation of build_e6(); series 1 has dimensions
// (3m+1 at the hub; 2m at vertices 1, 4, 5; m at 2, 3, 6), series 2 has
// (3m+2; 2m+1 at 1, 4, 5; m at 2, 3, 6). series in {1, 2}, m >= 1. The
// series-2 hub must be 3m+2: with 3m+1 the dimension vector pairs to zero
// against the null root and no exceptional module of that size exists.
Representation e6_rank3(int series, int m, const Field& f);

// Dimension-vector transport from the canonical algebra (n-2,2,2) to
// build_dn(n): input indexed (0; arm 1..n-3; 1'; 1''; inf), output indexed
// by gamma vertices. With x = a(1') + a(1'') - a(inf):
//   N(1) = a(1'), N(2) = a(1''), N(k) = a(n-k) + x for 3 <= k <= n-1,
//   N(n) = x, N(n+1) = a(0).
DimVector dimvec_map_f(int n, const DimVector& a);

}  // namespace qrep
