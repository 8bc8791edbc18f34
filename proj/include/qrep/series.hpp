#pragma once

#include "qrep/hom.hpp"
#include "qrep/rep.hpp"

namespace qrep {

// (n+i) x n block: identity on top of i zero rows.
ExactMatrix x_block(int n, int i, const Field& f);
// (n+i) x n block: i zero rows on top of the identity.
ExactMatrix y_block(int n, int i, const Field& f);

// m-th enlargement of an r x c block Z': (r+m) x (c+m), Z' in the top left,
// ones at (k, c+k) and at (r+k, c+k) for k = 1..m (1-based), zeros elsewhere.
ExactMatrix enlargement(const ExactMatrix& zp, int m);

// Rank-2 preprojective module over the canonical algebra (p,2,2), p >= 2,
// 1 <= i < j <= p, m >= 0: dimensions m at 0, m + [t>=i] + [t>=j] on the
// upper arm, m+1 at 1' and 1'', m+2 at inf; upper-arm maps are identities
// except x_block(m,1) at a_i and x_block(m+1,1) at a_j; middle arm
// y_block(m,1), y_block(m+1,1); lower arm y_block(m,1) then the m-th
// enlargement of [1;1].
Representation build_rank2(int p, int i, int j, int m, const Field& f);

// Rank-3 preprojective module over (3,3,2), m >= 0: dimensions
// (m; m+1, m+2; m+1, m+2; m+1; m+3), X-blocks up the first arm, Y-blocks up
// the second, y_block(m,1) then the m-th enlargement of [1;1;1] on the third.
Representation build_e6_rank3_series1(int m, const Field& f);

// A tilting module given by its indecomposable summands plus the generating
// morphisms of End(T) (one per arrow of the End quiver), each stored as a
// full morphism between summands.
struct TiltingData {
  AlgebraPtr algebra;
  std::vector<Representation> summands;
  std::vector<std::string> summand_names;
  struct Generator {
    int from, to;  // summand indices
    Morphism g;
  };
  std::vector<Generator> generators;

  const Morphism* generator(int from, int to) const;  // nullptr if absent
};

// Summands T_1..T_{n+1} over the canonical algebra (n-2,2,2) with the
// generating morphisms 1->3, 2->3, 3->4->...->n-1, n-1->n, n-1->n+1, whose
// components at inf are [0;1], [1;1], identities, [0 1], identity.
TiltingData build_tilting_dn(int n, const Field& f);

// Summands T_0..T_6 over (3,3,2) with generators 0->1->2, 0->3->4, 0->5->6;
// components at inf: rows 2,3 of I_3; [1 -1]; rows 1,2 of I_3; [1 -1];
// rows 1,3 of I_3; I_2.
TiltingData build_tilting_e6(const Field& f);

}  // namespace qrep
