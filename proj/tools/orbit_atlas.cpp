// orbit-atlas: enumeration, canonicalization, graphs and verification for
// Borel orbits on flag varieties.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "atlas/verify.hpp"

namespace {

using namespace atlas;

struct CommonArgs {
  std::string family = "A";
  int n = 3;
  std::uint64_t seed = 20220205;
  int samples = 8;
  std::string output;
};

Family parse_family(const std::string& s) {
  if (s.size() != 1) throw DomainError("family must be one of A, D, B");
  return family_from_char(s[0]);
}

std::ostream& open_output(const CommonArgs& args, std::ofstream& file) {
  if (args.output.empty()) return std::cout;
  file.open(args.output);
  if (!file) throw DomainError("cannot open output file " + args.output);
  return file;
}

int run_count(const CommonArgs& args, const std::string& method, bool per_korbit) {
  Family fam = parse_family(args.family);
  int ell = rank_from_ambient(fam, args.n);
  CountMethod m = CountMethod::Formula;
  if (method == "enumerate") m = CountMethod::Enumerate;
  else if (method == "recursion") m = CountMethod::Recursion;
  else if (method == "egf") m = CountMethod::Egf;
  else if (method != "formula") throw DomainError("unknown method " + method);

  std::ofstream file;
  std::ostream& out = open_output(args, file);
  if (!per_korbit) {
    out << count_orbits(fam, ell, m) << "\n";
    return 0;
  }
  std::map<std::string, Integer> census;
  std::vector<std::string> order;
  for (const auto& f : enumerate_standard(fam, ell)) {
    std::string k = korbit_symbolic(f).str();
    if (!census.count(k)) order.push_back(k);
    census[k] += 1;
  }
  Integer total = 0;
  for (const auto& k : order) {
    out << k << " " << census[k] << "\n";
    total += census[k];
  }
  out << "total " << total << "\n";
  return 0;
}

int run_enumerate(const CommonArgs& args, const std::string& what, const std::string& format) {
  Family fam = parse_family(args.family);
  int ell = rank_from_ambient(fam, args.n);
  std::ofstream file;
  std::ostream& out = open_output(args, file);
  bool json = format != "text";
  if (what == "pils") {
    if (fam != Family::A) throw DomainError("PILs exist only in family A");
    std::vector<int> g(ell);
    for (int i = 0; i < ell; ++i) g[i] = i + 1;
    if (json) {
      out << "[";
      bool first = true;
      for (const auto& p : enumerate_pil(g)) {
        out << (first ? "" : ",") << to_json(p);
        first = false;
      }
      out << "]\n";
    } else {
      for (const auto& p : enumerate_pil(g)) out << to_json(p) << "\n";
    }
    return 0;
  }
  if (what == "spils") {
    if (fam == Family::A) throw DomainError("SPILs exist only in families D and B");
    if (json) {
      out << "[";
      bool first = true;
      for (const auto& s : enumerate_spil(ell, fam == Family::B)) {
        out << (first ? "" : ",") << to_json(s);
        first = false;
      }
      out << "]\n";
    } else {
      for (const auto& s : enumerate_spil(ell, fam == Family::B)) out << to_json(s) << "\n";
    }
    return 0;
  }
  if (what == "flags") {
    auto flags = enumerate_standard(fam, ell);
    if (json) {
      out << "[";
      bool first = true;
      for (const auto& f : flags) {
        out << (first ? "" : ",") << flag_to_json(f);
        first = false;
      }
      out << "]\n";
    } else {
      for (const auto& f : flags) out << f.str() << "\n";
    }
    return 0;
  }
  throw DomainError("unknown enumeration target " + what);
}

int run_graph(const CommonArgs& args, const std::string& order, const std::string& format) {
  Family fam = parse_family(args.family);
  EngineOptions eo;
  eo.samples = args.samples;
  eo.seed = args.seed;
  Atlas atlas(fam, args.n, eo);
  OrbitGraph graph(atlas);
  ExportOptions xo;
  if (order == "standard") {
    graph.compute_standard_order();
    xo.include_standard = true;
  } else if (order != "weak") {
    throw DomainError("unknown order " + order);
  }
  std::ofstream file;
  std::ostream& out = open_output(args, file);
  out << (format == "json" ? export_json(graph, xo) : export_dot(graph, xo));
  return 0;
}

ExactMatrix parse_matrix_flag(const nlohmann::json& j, const GroupContext& ctx) {
  const auto& cols = j.at("columns");
  ExactMatrix m(ctx.n, static_cast<int>(cols.size()));
  int c = 0;
  for (const auto& col : cols) {
    if (static_cast<int>(col.size()) != ctx.n)
      throw DomainError("flag-file: column has wrong length");
    for (int r = 0; r < ctx.n; ++r) {
      const auto& q = col.at(r);
      if (!q.is_array() || q.size() != 4) throw DomainError("flag-file: entry is not [an,ad,bn,bd]");
      Rational a(Integer(q[0].get<long long>()), Integer(q[1].get<long long>()));
      Rational b(Integer(q[2].get<long long>()), Integer(q[3].get<long long>()));
      m.at(r, c) = QSqrt2(a, b);
    }
    ++c;
  }
  return m;
}

int run_canonicalize(const CommonArgs& args, const std::string& flag_file) {
  std::ifstream in(flag_file);
  if (!in) throw DomainError("cannot open flag file " + flag_file);
  nlohmann::json j = nlohmann::json::parse(in);
  Family fam = j.contains("family") ? parse_family(j.at("family").get<std::string>())
                                    : parse_family(args.family);
  int n = j.contains("n") ? j.at("n").get<int>() : args.n;
  EngineOptions eo;
  eo.samples = args.samples;
  eo.seed = args.seed;
  Atlas atlas(fam, n, eo);
  ExactMatrix m = parse_matrix_flag(j, atlas.ctx());
  const OrbitRef& orbit = atlas.canonicalize(m);
  std::ofstream file;
  std::ostream& out = open_output(args, file);
  nlohmann::json res;
  res["flag"] = orbit.flag.str();
  res["flag_json"] = nlohmann::json::parse(flag_to_json(orbit.flag));
  res["dim"] = orbit.dim;
  res["korbit"] = orbit.korbit.str();
  out << res.dump(2) << "\n";
  return 0;
}

int run_verify(const CommonArgs& args, const std::string& suite, int max_n) {
  VerifyOptions opt;
  opt.max_n = max_n;
  opt.seed = args.seed;
  opt.samples = args.samples;
  std::vector<CheckResult> results = run_suite(suite, opt);
  std::ofstream file;
  std::ostream& out = open_output(args, file);
  bool ok = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << " -- " << r.detail;
    out << "\n";
    ok &= r.pass;
  }
  out << (ok ? "all checks passed" : "CHECKS FAILED") << " (" << results.size() << " checks)\n";
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit-atlas: Borel orbits on flag varieties"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string method = "formula", what = "flags", order = "weak", format = "dot";
  std::string suite = "all", flag_file;
  bool per_korbit = false;
  int max_n = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_family = true) {
    if (needs_family) {
      cmd->add_option("--family", args.family, "A, D or B")->required();
      cmd->add_option("--n", args.n, "ambient dimension")->required();
    }
    cmd->add_option("--seed", args.seed, "random seed");
    cmd->add_option("--samples", args.samples, "fiber sample count")->check(CLI::Range(4, 16));
    cmd->add_option("-o,--output", args.output, "output file (default stdout)");
  };

  CLI::App* count = app.add_subcommand("count", "orbit counts");
  add_common(count);
  count->add_option("--method", method, "formula|enumerate|recursion|egf");
  count->add_flag("--per-korbit", per_korbit, "break the count down by K-orbit");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list PILs, SPILs or standard flags");
  add_common(enumerate);
  enumerate->add_option("--what", what, "pils|spils|flags");
  enumerate->add_option("--format", format, "json|text");

  CLI::App* graph = app.add_subcommand("graph", "weak or standard order graph");
  add_common(graph);
  graph->add_option("--order", order, "weak|standard");
  graph->add_option("--format", format, "dot|json");

  CLI::App* canon = app.add_subcommand("canonicalize", "canonical form of a matrix flag");
  add_common(canon, false);
  canon->add_option("--family", args.family, "A, D or B (overridden by the file)");
  canon->add_option("--n", args.n, "ambient dimension (overridden by the file)");
  canon->add_option("--flag-file", flag_file, "JSON matrix flag")->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, false);
  verify->add_option("--suite", suite, "all|counts|bijections|labels|monoid|graphs|duality");
  verify->add_option("--max-n", max_n, "cap the ambient dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return run_count(args, method, per_korbit);
    if (enumerate->parsed()) {
      if (format == "dot") format = "json";
      return run_enumerate(args, what, format);
    }
    if (graph->parsed()) return run_graph(args, order, format);
    if (canon->parsed()) return run_canonicalize(args, flag_file);
    if (verify->parsed()) return run_verify(args, suite, max_n);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad input JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
