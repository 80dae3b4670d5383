// Command-line front end: classify sets, verify claims, mine counterexamples,
// enumerate topologies and query the symbolic catalog.
//
// Exit codes: 0 pass / nothing found, 1 claim violation or counterexample
// found, 2 malformed input or configuration.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sgtop/claims.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sgtop;

PtSet parse_point_list(const std::string& text, int n) {
  PtSet s(n);
  std::string body = text;
  std::erase_if(body, [](char c) { return c == '{' || c == '}' || c == ' '; });
  std::size_t start = 0;
  while (start < body.size()) {
    auto comma = body.find(',', start);
    std::string item =
        body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) s.set(std::stoi(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

FinTopology load_space(const std::string& arg) {
  std::ifstream in(arg);
  if (in.good()) {
    nlohmann::json j;
    in >> j;
    return topology_from_json(j);
  }
  // Not a readable file: try a catalog name like "p4" or "discrete:3".
  return catalog(arg);
}

int cmd_classify(const std::string& space_arg, const std::string& set_arg,
                 const std::string& format) {
  FinTopology t = load_space(space_arg);
  PtSet a = parse_point_list(set_arg, t.carrier_size());
  SetClass c = classify_set(t, a);
  SpaceDecomp d = decompose(t);

  ordered_json j;
  j["space"] = topology_to_json(t);
  j["set"] = a.members();
  j["classes"] = {{"open", c.open},
                  {"closed", c.closed},
                  {"semi_open", c.semi_open},
                  {"semi_closed", c.semi_closed},
                  {"preopen", c.preopen},
                  {"nowhere_dense", c.nowhere_dense},
                  {"dense", c.dense},
                  {"regular_open", c.regular_open},
                  {"regular_closed", c.regular_closed},
                  {"alpha_open", c.alpha_open},
                  {"beta_open", c.beta_open},
                  {"delta_open", c.delta_open}};
  j["sg_open"] = is_sg_open(t, d, a);
  j["sg_closed"] = is_sg_closed(t, d, a);
  j["hsg_closed"] = is_hsg_closed(t, d, a);
  j["x1"] = d.x1.members();
  j["x2"] = d.x2.members();

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "set " << a.to_string() << " in " << t.to_string() << "\n";
    std::cout << "  classes: " << c.to_string() << "\n";
    std::cout << "  sg_open=" << (is_sg_open(t, d, a) ? "true" : "false")
              << " sg_closed=" << (is_sg_closed(t, d, a) ? "true" : "false")
              << " hsg_closed=" << (is_hsg_closed(t, d, a) ? "true" : "false") << "\n";
    std::cout << "  x1=" << d.x1.to_string() << " x2=" << d.x2.to_string() << "\n";
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& claims, int max_n, bool no_symbolic,
               std::uint64_t seed, int workers, const std::string& mutation,
               const std::string& report_path, const std::string& format) {
  SuiteConfig cfg;
  cfg.claims = claims;
  cfg.max_n = max_n;
  cfg.symbolic = !no_symbolic;
  cfg.seed = seed;
  cfg.workers = workers;
  cfg.mutation = mutation;

  SuiteResult result = run_suite(cfg);
  ordered_json report = suite_report_json(cfg, result.reports);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << report.dump(2) << "\n";
  }
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& r : result.reports) {
      const char* tag = r.result == ClaimResult::Pass   ? "PASS"
                        : r.result == ClaimResult::Fail ? "FAIL"
                                                        : "SKIP";
      std::cout << tag << " " << r.id << " (instances=" << r.instances << ", "
                << static_cast<long>(r.wall_ms) << " ms)\n";
      if (r.result == ClaimResult::Fail) std::cout << "  witness: " << r.witness.dump() << "\n";
    }
    const auto& s = report["summary"];
    std::cout << "summary: " << s["passed"] << " passed, " << s["failed"] << " failed, "
              << s["skipped"] << " skipped\n";
  }
  return result.exit_code;
}

int cmd_search(const std::string& target, int max_n, const std::string& format) {
  auto rec = search_counterexample(target, max_n);
  if (!rec) {
    std::cout << "no counterexample found for \"" << target << "\" up to n=" << max_n << "\n";
    return 0;
  }
  if (format == "json") {
    std::cout << rec->to_json().dump(2) << "\n";
  } else {
    std::cout << "counterexample for \"" << target << "\" at n=" << rec->carrier_size << "\n";
    std::cout << "  space: " << rec->space.to_string() << "\n";
    for (const auto& line : rec->transcript) std::cout << "  " << line << "\n";
  }
  return 1;
}

int cmd_enumerate(int n, bool count_only, bool dedup) {
  EnumMode mode = dedup ? EnumMode::UpToHomeomorphism : EnumMode::Labeled;
  // Typing --n 5 is the explicit opt-in for the larger run.
  if (count_only) {
    std::cout << count_topologies(n, mode, /*allow_large=*/true) << "\n";
    return 0;
  }
  EnumerationStream stream(n, mode, /*allow_large=*/true);
  while (auto t = stream.next()) std::cout << topology_to_json(*t).dump() << "\n";
  return 0;
}

int cmd_sym(const std::string& space_name, const std::string& op, const std::string& set_expr) {
  SymSpace sp = SymSpace::by_name(space_name);
  auto need_set = [&]() {
    if (set_expr.empty()) throw BadParameter("--set is required for op \"" + op + "\"");
    return SymSet::parse(set_expr, sp.extra_names());
  };
  auto show = [&](const SymSet& s) { return s.to_string(sp.extra_names()); };

  if (op == "interior") {
    std::cout << show(sym_interior(sp, need_set())) << "\n";
  } else if (op == "closure") {
    std::cout << show(sym_closure(sp, need_set())) << "\n";
  } else if (op == "decompose") {
    SymDecomp d = sym_decompose(sp);
    std::cout << "x1=" << show(d.x1) << " x2=" << show(d.x2) << "\n";
  } else if (op == "nowhere-dense") {
    std::cout << (sym_is_nowhere_dense(sp, need_set()) ? "true" : "false") << "\n";
  } else if (op == "semi-closed") {
    std::cout << (sym_is_semi_closed(sp, need_set()) ? "true" : "false") << "\n";
  } else if (op == "sg-closed") {
    std::cout << (sym_is_sg_closed(sp, need_set()) ? "true" : "false") << "\n";
  } else if (op == "hsg-closed") {
    std::cout << (sym_is_hsg_closed(sp, need_set()) ? "true" : "false") << "\n";
  } else if (op == "c2" || op == "c3") {
    SymVerdict v = (op == "c2") ? sym_is_c2(sp) : sym_is_c3(sp);
    std::cout << (v.value ? "true" : "false") << "  (" << v.justification << ")\n";
    if (v.witness) std::cout << "  witness: " << show(*v.witness) << "\n";
    if (!v.witness_family.empty()) std::cout << "  witness family: " << v.witness_family << "\n";
  } else if (op == "sg-compact") {
    std::cout << (sym_is_sg_compact(sp) ? "true" : "false") << "\n";
  } else if (op == "semi-compact") {
    std::cout << (sym_is_semi_compact(sp) ? "true" : "false") << "\n";
  } else if (op == "cellular") {
    auto w = sym_cellular_witness(sp);
    if (!w) {
      std::cout << "no infinite cellular family\n";
    } else {
      std::cout << w->description << ", union=" << show(w->subfamily_union)
                << ", union_in_x2=" << (w->union_in_x2 ? "true" : "false") << "\n";
    }
  } else {
    throw BadParameter("unknown symbolic op \"" + op + "\"");
  }
  return 0;
}

int cmd_report(const std::string& in_path, const std::string& format) {
  std::ifstream in(in_path);
  if (!in.good()) throw BadParameter("cannot read report file \"" + in_path + "\"");
  nlohmann::json j;
  in >> j;
  if (!j.contains("schema_version") || j["schema_version"].get<int>() != 1)
    throw BadParameter("unsupported report schema");
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& claim : j["claims"]) {
    std::string result = claim["result"].get<std::string>();
    std::cout << (result == "pass" ? "PASS" : result == "fail" ? "FAIL" : "SKIP") << " "
              << claim["id"].get<std::string>() << " instances=" << claim["instances"] << "\n";
  }
  const auto& s = j["summary"];
  std::cout << "summary: " << s["passed"] << " passed, " << s["failed"] << " failed, "
            << s["skipped"] << " skipped\n";
  return j["summary"]["failed"].get<int>() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite and symbolic topology engine for sg-closed set machinery"};
  app.require_subcommand(1);

  std::string space_arg, set_arg, format = "text";
  auto* classify = app.add_subcommand("classify", "classify a set within a space");
  classify->add_option("--space", space_arg, "topology JSON file or catalog name")->required();
  classify->add_option("--set", set_arg, "comma-separated point list, e.g. 0,2")->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> claims;
  int max_n = 4;
  bool all_claims = false, no_symbolic = false;
  std::uint64_t seed = ClaimConfig{}.seed;
  int workers = 1;
  std::string mutation, report_path;
  auto* verify = app.add_subcommand("verify", "verify claims over enumerated and symbolic spaces");
  verify->add_option("--claim", claims, "claim ids (repeatable)");
  verify->add_flag("--all", all_claims, "verify the whole registry (default)");
  verify->add_option("--max-n", max_n, "largest carrier size to enumerate");
  verify->add_flag("--no-symbolic", no_symbolic, "skip symbolic-catalog claims");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--workers", workers, "parallel claim jobs");
  verify->add_option("--mutate", mutation, "fault-injection hook (testing)");
  verify->add_option("--report", report_path, "write the JSON report to this file");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string target;
  auto* search = app.add_subcommand("search", "search for a minimal counterexample");
  search->add_option("--target", target, "known-false universal to refute")->required();
  search->add_option("--max-n", max_n, "largest carrier size to scan");
  search->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  int enum_n = 3;
  bool count_only = false, dedup = false;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate topologies on n points");
  enumerate->add_option("--n", enum_n, "carrier size (1..5)")->required();
  enumerate->add_flag("--count", count_only, "print only the count");
  enumerate->add_flag("--dedup", dedup, "one representative per homeomorphism class");

  std::string sym_space, sym_op, sym_set;
  auto* sym = app.add_subcommand("sym", "evaluate symbolic-space operations");
  sym->add_option("--space", sym_space, "cofinite-nat | indiscrete-nat | e1-infinite | opc-discrete")
      ->required();
  sym->add_option("--op", sym_op,
                  "interior|closure|decompose|nowhere-dense|semi-closed|sg-closed|hsg-closed|"
                  "c2|c3|sg-compact|semi-compact|cellular")
      ->required();
  sym->add_option("--set", sym_set, "symbolic set, e.g. fin{1,2}+p or cof{0}");

  std::string report_in;
  auto* report = app.add_subcommand("report", "render a previously written JSON report");
  report->add_option("--in", report_in, "report file")->required();
  report->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
    if (classify->parsed()) return cmd_classify(space_arg, set_arg, format);
    if (verify->parsed())
      return cmd_verify(claims, max_n, no_symbolic, seed, workers, mutation, report_path, format);
    if (search->parsed()) return cmd_search(target, max_n, format);
    if (enumerate->parsed()) return cmd_enumerate(enum_n, count_only, dedup);
    if (sym->parsed()) return cmd_sym(sym_space, sym_op, sym_set);
    if (report->parsed()) return cmd_report(report_in, format);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const sgtop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
