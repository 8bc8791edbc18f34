#pragma once

#include <string>
#include <vector>

namespace qrep {

struct CheckResult {
  std::string id;
  std::string title;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> notes;  // first failures and standing caveats

  bool passed() const { return failures == 0 && cases > 0; }
};

// Defaults cover the full documented ranges; the CLI can narrow them.
struct VerifyOptions {
  int max_n = 7;          // largest D~_n checked (>= 4)
  int max_m = 3;          // largest m in the D~ series (>= 0)
  int oracle_pairs = 50;  // pseudo-random pairs in the counting oracle
};

// Check ids in report order:
//   dn-iso            functor image vs closed form over D~_n
//   dn-homdims        hom-space dimension table over D~_n
//   gen-end           generation by T and End(F(M)) = K
//   e6-iso            functor image vs closed form over E~_6, plus series 2
//   rank1-dims        rank-1 families: dimensions, exceptionality, transport
//   f2-oracle         bit-level intertwiner count vs 2^dim over F_2
//   ktheory-proj      summand dimension vectors land on the projectives
//   duality           dualize is an involution with simple endomorphisms
//   pairwise-distinct no two series members at n=5 are isomorphic
const std::vector<std::string>& verify_check_ids();

CheckResult run_check(const std::string& id, const VerifyOptions& opt);
std::vector<CheckResult> run_all_checks(const VerifyOptions& opt);

// Fixed-width PASS/FAIL table plus any notes.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace qrep
