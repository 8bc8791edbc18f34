// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if all pass.
// Criteria are checked exactly as stated in the project's acceptance list,
// including expectations that the mathematics refutes; those fail here with
// an explanation rather than being silently adjusted.

#include <iostream>
#include <string>
#include <vector>

#include "qrep/closedform.hpp"
#include "qrep/tilt.hpp"
#include "qrep/verify.hpp"

using namespace qrep;

namespace {

struct Criterion {
  std::string id;
  std::string title;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> detail;
};

Criterion from_check(const std::string& id, const std::string& title, const CheckResult& r) {
  Criterion c{id, title, r.cases, r.failures, {}};
  for (const std::string& note : r.notes)
    if (note.rfind("fail:", 0) == 0) c.detail.push_back(note);
  return c;
}

// Criterion: for m in 1..4, the hom dimensions of the tilting summands
// against the rank-3 source are (3m+1; 2m, m; 2m, m; 2m, m); the functor
// image is isomorphic to the first closed-form family; and the second
// closed-form family member has End of dimension 1, no self-extensions, and
// hub dimension 3m+1. The last value is checked literally as stated.
Criterion rank3_criterion() {
  Criterion c{"A4", "rank-3 families over E~_6: functor match, hom table, second series", 0, 0, {}};
  const Field f = Field::rationals();
  const TiltingData t = build_tilting_e6(f);
  const AlgebraPtr gamma = path_algebra(build_e6());
  const std::vector<int> vmap = e6_vertex_map();
  auto record = [&c](bool ok, const std::string& what) {
    ++c.cases;
    if (!ok) {
      ++c.failures;
      c.detail.push_back("fail: " + what);
    }
  };
  bool hub_failed = false;
  for (int m = 1; m <= 4; ++m) {
    const std::string id = "m=" + std::to_string(m);
    const Representation source = build_e6_rank3_series1(m, f);
    const int expected_hom[7] = {3 * m + 1, 2 * m, m, 2 * m, m, 2 * m, m};
    for (int k = 0; k <= 6; ++k)
      record(hom_dim(t.summands[k], source) == expected_hom[k],
             id + ": hom dimension against summand " + std::to_string(k));
    const FunctorOutput out = apply_functor(t, source, gamma, vmap);
    const Representation closed = e6_rank3(1, m, f);
    bool iso_ok = out.rep.dims() == closed.dims();
    if (iso_ok) {
      const IsoResult iso = find_iso(out.rep, closed);
      iso_ok = iso.verdict == IsoVerdict::Found && iso.iso && iso.iso->is_isomorphism();
    }
    record(iso_ok, id + ": functor image isomorphic to the first closed form");

    const Representation second = e6_rank3(2, m, f);
    record(end_dim(second) == 1, id + ": second series End dimension 1");
    record(ext1_dim_hereditary(second, second) == 0, id + ": second series self-extensions");
    const bool hub_ok = second.dim(0) == 3 * m + 1;
    if (!hub_ok) hub_failed = true;
    record(hub_ok, id + ": second series hub dimension " + std::to_string(second.dim(0)) +
                       ", stated expectation " + std::to_string(3 * m + 1));
  }
  if (hub_failed) {
    c.detail.push_back(
        "analysis: the stated hub value 3m+1 contradicts the brick conditions checked above. "
        "With hub 3m+1 the dimension vector (3m+1; 2m+1,2m+1,2m+1; m,m,m) pairs to zero "
        "against the null root (3,2,1,1,2,2,1); it splits as m copies of the null root plus "
        "the root (1,1,0,0,1,1,0), so every module of that size has endomorphism dimension "
        "at least m+1 and is decomposable for m >= 1. The unique hub making the arm "
        "dimensions a rank-3 (defect -3) exceptional size is 3m+2; the library builds the "
        "family with hub 3m+2, and the verification engine (check e6-iso) certifies it "
        "against the tilting-functor image of rank-3 source modules.");
  }
  return c;
}

}  // namespace

int main() {
  VerifyOptions full;  // n up to 7, m up to 3, 50 oracle pairs
  std::vector<Criterion> criteria;

  criteria.push_back(from_check(
      "A1", "functor images match the rank-2 closed forms (n in 4..7, m in 0..3)",
      run_check("dn-iso", full)));
  criteria.push_back(from_check("A2", "hom-dimension table over D~_n matches the displays",
                                run_check("dn-homdims", full)));
  criteria.push_back(from_check(
      "A3", "series modules are generated by T; functor images have End = K",
      run_check("gen-end", full)));
  criteria.push_back(rank3_criterion());
  criteria.push_back(from_check(
      "A5", "rank-1 families: dimension vectors, exceptionality, transport (n in 4..6)",
      run_check("rank1-dims", full)));
  criteria.push_back(from_check("A6", "intertwiner counting matches 2^dim over F_2 (50 pairs)",
                                run_check("f2-oracle", full)));
  criteria.push_back(from_check(
      "A7", "summand dimension vectors transport onto the projectives (n in 4..6)",
      run_check("ktheory-proj", full)));
  criteria.push_back(from_check(
      "A8", "dualize is an involution and duals stay exceptional", run_check("duality", full)));
  criteria.push_back(from_check(
      "A9", "rank-2 members at n = 5, m <= 2 are pairwise non-isomorphic",
      run_check("pairwise-distinct", full)));

  int failed = 0;
  for (const Criterion& c : criteria) {
    const bool ok = c.failures == 0 && c.cases > 0;
    if (!ok) ++failed;
    std::cout << c.id << "  " << (ok ? "PASS" : "FAIL") << "  " << c.title << " ["
              << (c.cases - c.failures) << "/" << c.cases << " conditions]\n";
    if (!ok)
      for (const std::string& d : c.detail) std::cout << "      " << d << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
