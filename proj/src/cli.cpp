#include "qrep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "qrep/closedform.hpp"
#include "qrep/json_io.hpp"
#include "qrep/text_render.hpp"
#include "qrep/tilt.hpp"
#include "qrep/verify.hpp"

namespace qrep {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int t = 15; t >= 0; --t) {
    s[t] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::string dimvec_str(const DimVector& d) {
  std::string s = "(";
  for (size_t t = 0; t < d.size(); ++t) {
    if (t > 0) s += ",";
    s += std::to_string(d[t]);
  }
  return s + ")";
}

struct Params {
  std::string family, target, check = "all";
  std::string field = "q", format = "text";
  int n = 5, i = 1, j = 2, m = 1, type = 1, series = 1;
  int p = 3, q = 2, s = 2;
  int max_n = 7, max_m = 3, pairs = 50;
};

Representation build_family(const Params& pr, const Field& f) {
  if (pr.family == "dn-rank2") return dn_rank2(pr.n, pr.i, pr.j, pr.m, f);
  if (pr.family == "dn-rank1") return dn_rank1(pr.n, pr.type, pr.i, pr.m, f);
  if (pr.family == "e6-rank3") return e6_rank3(pr.series, pr.m, f);
  if (pr.family == "star-rank2") return build_rank2(pr.p, pr.i, pr.j, pr.m, f);
  if (pr.family == "star-rank3") return build_e6_rank3_series1(pr.m, f);
  throw UnsupportedType("unknown family " + pr.family +
                        "; known: dn-rank2, dn-rank1, e6-rank3, star-rank2, star-rank3");
}

FunctorOutput run_functor(const Params& pr, const Field& f) {
  if (pr.target == "dn") {
    FunctorOutput out = apply_functor(build_tilting_dn(pr.n, f),
                                      build_rank2(pr.n - 2, pr.i, pr.j, pr.m, f),
                                      path_algebra(build_dn(pr.n)), dn_vertex_map(pr.n));
    out.input_id = "star-rank2 p=" + std::to_string(pr.n - 2) + " i=" + std::to_string(pr.i) +
                   " j=" + std::to_string(pr.j) + " m=" + std::to_string(pr.m);
    out.tilting_id = "dn n=" + std::to_string(pr.n);
    return out;
  }
  if (pr.target == "e6") {
    FunctorOutput out = apply_functor(build_tilting_e6(f), build_e6_rank3_series1(pr.m, f),
                                      path_algebra(build_e6()), e6_vertex_map());
    out.input_id = "star-rank3 m=" + std::to_string(pr.m);
    out.tilting_id = "e6";
    return out;
  }
  throw UnsupportedType("unknown functor target " + pr.target + "; known: dn, e6");
}

void print_rep(const Representation& rep, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << rep_to_json(rep).dump(2) << "\n";
  else
    out << render_representation(rep);
}

int cmd_describe(const Params& pr, std::ostream& out) {
  if (pr.target == "canonical")
    out << describe(*build_canonical(pr.p, pr.q, pr.s));
  else if (pr.target == "dn")
    out << describe(build_dn(pr.n));
  else if (pr.target == "e6")
    out << describe(build_e6());
  else
    throw UnsupportedType("unknown describe target " + pr.target +
                          "; known: canonical, dn, e6");
  return 0;
}

int cmd_build(const Params& pr, std::ostream& out) {
  print_rep(build_family(pr, Field::parse(pr.field)), pr.format, out);
  return 0;
}

int cmd_functor(const Params& pr, std::ostream& out) {
  const FunctorOutput fo = run_functor(pr, Field::parse(pr.field));
  if (pr.format == "json") {
    out << functor_output_to_json(fo).dump(2) << "\n";
    return 0;
  }
  out << "input: " << fo.input_id << "\n";
  out << "tilting: " << fo.tilting_id << "\n";
  out << "realized:";
  for (int v = 0; v < fo.rep.quiver().vertex_count(); ++v)
    out << ' ' << fo.rep.quiver().vertex_name(v) << ':' << fo.vertex_summands[v];
  out << "\n";
  out << render_representation(fo.rep);
  return 0;
}

int cmd_export(const Params& pr, std::ostream& out) {
  const Representation rep = build_family(pr, Field::parse(pr.field));
  const nlohmann::json j = rep_to_json(rep);
  const Representation back = rep_from_json(j, rep.algebra());
  if (!(back == rep) || rep_to_json(back) != j)
    throw InternalInconsistency("export did not round trip");
  print_rep(back, pr.format, out);
  return 0;
}

int cmd_compare(const Params& pr, std::ostream& out) {
  const Field f = Field::parse(pr.field);
  Params fp = pr;
  std::optional<Representation> closed;
  if (pr.family == "dn-rank2") {
    fp.target = "dn";
    closed = dn_rank2(pr.n, pr.i, pr.j, pr.m, f);
  } else if (pr.family == "e6-rank3") {
    fp.target = "e6";
    closed = e6_rank3(1, pr.m, f);
  } else {
    throw UnsupportedType("unknown comparison family " + pr.family +
                          "; known: dn-rank2, e6-rank3 (series 1)");
  }
  const FunctorOutput fo = run_functor(fp, f);
  if (fo.rep.dims() != closed->dims()) {
    out << "NOT ISOMORPHIC\n";
    out << "functor dims " << dimvec_str(fo.rep.dims()) << ", closed form "
        << dimvec_str(closed->dims()) << "\n";
    return 1;
  }
  const IsoResult iso = find_iso(fo.rep, *closed);
  if (iso.verdict != IsoVerdict::Found || !iso.iso || !iso.iso->is_isomorphism()) {
    out << "NOT ISOMORPHIC\n";
    out << iso.detail << "\n";
    return 1;
  }
  std::string cert = dimvec_str(closed->dims());
  for (const ExactMatrix& comp : iso.iso->comps) cert += "|" + comp.to_string();
  out << "ISOMORPHIC\n";
  out << "dims " << dimvec_str(closed->dims()) << "\n";
  out << "certificate fnv1a=" << hex64(fnv1a(cert)) << "\n";
  return 0;
}

int cmd_verify(const Params& pr, std::ostream& out) {
  VerifyOptions opt;
  opt.max_n = pr.max_n;
  opt.max_m = pr.max_m;
  opt.oracle_pairs = pr.pairs;
  std::vector<CheckResult> results;
  if (pr.check == "all") {
    results = run_all_checks(opt);
  } else {
    const auto& ids = verify_check_ids();
    if (std::find(ids.begin(), ids.end(), pr.check) == ids.end()) {
      std::string known;
      for (const std::string& id : ids) known += (known.empty() ? "" : ", ") + id;
      throw UnsupportedType("unknown check " + pr.check + "; known: all, " + known);
    }
    results.push_back(run_check(pr.check, opt));
  }
  out << format_report(results);
  for (const CheckResult& r : results)
    if (!r.passed()) return 1;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact constructions of preprojective representations over extended "
               "Dynkin quivers, via a tilting functor and via closed-form matrices"};
  app.require_subcommand(1);
  Params pr;

  CLI::App* describe_cmd = app.add_subcommand("describe", "print an algebra or quiver");
  describe_cmd->add_option("target", pr.target, "canonical, dn or e6")->required();
  describe_cmd->add_option("--p", pr.p, "first arm length (canonical)");
  describe_cmd->add_option("--q", pr.q, "second arm length (canonical)");
  describe_cmd->add_option("--s", pr.s, "third arm length (canonical)");
  describe_cmd->add_option("--n", pr.n, "index of D~_n");

  auto add_family_options = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("family", pr.family,
                    "dn-rank2, dn-rank1, e6-rank3, star-rank2 or star-rank3")
        ->required();
    cmd->add_option("--n", pr.n, "index of D~_n");
    cmd->add_option("--i", pr.i, "first arm position");
    cmd->add_option("--j", pr.j, "second arm position");
    cmd->add_option("--m", pr.m, "series index");
    cmd->add_option("--type", pr.type, "rank-1 type, 1..4");
    cmd->add_option("--series", pr.series, "rank-3 series, 1 or 2");
    cmd->add_option("--p", pr.p, "arm length of the star algebra");
    cmd->add_option("--field", pr.field, "q or fp:<prime>");
    if (with_format)
      cmd->add_option("--format", pr.format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* build_cmd = app.add_subcommand("build", "construct one family member");
  add_family_options(build_cmd, true);

  CLI::App* functor_cmd =
      app.add_subcommand("functor", "apply the tilting functor to a series module");
  functor_cmd->add_option("target", pr.target, "dn or e6")->required();
  functor_cmd->add_option("--n", pr.n, "index of D~_n");
  functor_cmd->add_option("--i", pr.i, "first arm position");
  functor_cmd->add_option("--j", pr.j, "second arm position");
  functor_cmd->add_option("--m", pr.m, "series index");
  functor_cmd->add_option("--field", pr.field, "q or fp:<prime>");
  functor_cmd->add_option("--format", pr.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run consistency checks");
  verify_cmd->add_option("check", pr.check, "check id or all");
  verify_cmd->add_option("--max-n", pr.max_n, "largest D~_n index")->check(CLI::Range(4, 12));
  verify_cmd->add_option("--max-m", pr.max_m, "largest series index")->check(CLI::Range(0, 8));
  verify_cmd->add_option("--pairs", pr.pairs, "counting-oracle sample size")
      ->check(CLI::Range(1, 500));

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "check functor image against the closed form");
  compare_cmd->add_option("family", pr.family, "dn-rank2 or e6-rank3")->required();
  compare_cmd->add_option("--n", pr.n, "index of D~_n");
  compare_cmd->add_option("--i", pr.i, "first arm position");
  compare_cmd->add_option("--j", pr.j, "second arm position");
  compare_cmd->add_option("--m", pr.m, "series index");
  compare_cmd->add_option("--field", pr.field, "q or fp:<prime>");

  CLI::App* export_cmd =
      app.add_subcommand("export", "serialize a family member through the import path");
  add_family_options(export_cmd, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    if (app.got_subcommand(describe_cmd)) return cmd_describe(pr, out);
    if (app.got_subcommand(build_cmd)) return cmd_build(pr, out);
    if (app.got_subcommand(functor_cmd)) return cmd_functor(pr, out);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(pr, out);
    if (app.got_subcommand(compare_cmd)) return cmd_compare(pr, out);
    if (app.got_subcommand(export_cmd)) return cmd_export(pr, out);
    err << "usage error: no command given\n";
    return 2;
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedType& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qrep
