#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "regset/catalog.hpp"
#include "regset/group_io.hpp"
#include "regset/perfect_code.hpp"
#include "regset/regular_sets.hpp"
#include "regset/sweep.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInconsistent = 4;

struct GlobalOptions {
  std::string json_path;
  std::string dot_path;
  long long budget = -1;
  int threads = 1;
  bool seedless = false;  // accepted for documentation; nothing is random
};

void emit_json(const GlobalOptions& opts, const ordered_json& payload) {
  if (!opts.json_path.empty()) {
    std::ofstream out(opts.json_path);
    if (!out) throw regset::Error(regset::Errc::ParseError, "cannot write " + opts.json_path);
    out << payload.dump(2) << "\n";
    std::cerr << "wrote " << opts.json_path << "\n";
  } else {
    std::cout << payload.dump(2) << "\n";
  }
}

void maybe_emit_dot(const GlobalOptions& opts, const regset::GroupTable& g,
                    const regset::Subgroup& h) {
  if (opts.dot_path.empty()) return;
  auto dec = regset::right_cosets(g, h);
  auto comps = regset::components(g, h, dec);
  std::ofstream out(opts.dot_path);
  if (!out) throw regset::Error(regset::Errc::ParseError, "cannot write " + opts.dot_path);
  out << regset::coset_graph_dot(g, h, dec, comps);
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(csv);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

int exit_code_for(const regset::Error& e) {
  if (dynamic_cast<const regset::ConsistencyError*>(&e)) return kExitInconsistent;
  if (regset::is_budget_error(e.code())) return kExitBudget;
  if (regset::is_negative_decision(e.code())) return kExitNegative;
  return kExitUsage;
}

ordered_json certificate_json(const std::string& group_id, const regset::Subgroup& h,
                              const regset::RegularSetCertificate& cert) {
  ordered_json j;
  j["group"] = group_id;
  j["subgroup"] = h.elements();
  j["a"] = cert.a;
  j["b"] = cert.b;
  j["k"] = cert.k;
  j["connection_set"] = cert.connection_set.elements;
  j["quotient"] = {{cert.quotient[0][0], cert.quotient[0][1]},
                   {cert.quotient[1][0], cert.quotient[1][1]}};
  j["eigenvalue"] = cert.eigenvalue;
  j["eigenvector"] = cert.eigenvector;
  ordered_json methods = ordered_json::array();
  for (auto m : cert.methods_used) methods.push_back(regset::bundle_method_name(m));
  j["methods_used"] = std::move(methods);
  j["verified"] = true;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regset: subgroup perfect codes and (a,b)-regular sets in Cayley graphs"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--json", opts.json_path, "write JSON output to this path instead of stdout");
  app.add_option("--emit-dot", opts.dot_path, "write the coset relation graph in DOT format");
  app.add_option("--budget", opts.budget,
                 "search budget in nodes (REGSET_BUDGET overrides the default)")
      ->envname("REGSET_BUDGET");
  app.add_option("--threads", opts.threads, "worker threads for the sweep");
  app.add_flag("--seedless", opts.seedless,
               "document determinism; the tool never uses randomness");

  std::string group_spec, subgroup_csv, connection_csv, catalog_dir;
  int opt_a = 0, opt_b = 0, max_order = 24;
  bool with_timing = false;

  auto add_group_opts = [&](CLI::App* cmd, bool with_subgroup) {
    cmd->fallthrough();  // let --json and friends sit after the subcommand
    cmd->add_option("--group", group_spec, "builtin spec (cyclic:6, gendihedral:2x4, ...) or file")
        ->required();
    if (with_subgroup)
      cmd->add_option("--subgroup", subgroup_csv, "comma-separated generators; closure is used")
          ->required();
  };

  auto* cmd_build = app.add_subcommand("build", "construct a group and dump its table");
  add_group_opts(cmd_build, false);

  auto* cmd_subgroups = app.add_subcommand("subgroups", "enumerate all subgroups");
  add_group_opts(cmd_subgroups, false);

  auto* cmd_pc = app.add_subcommand("perfect-code", "decide perfect/total perfect code status");
  add_group_opts(cmd_pc, true);

  auto* cmd_construct =
      app.add_subcommand("construct", "construct and verify an (a,b)-regular connection set");
  add_group_opts(cmd_construct, true);
  cmd_construct->add_option("-a", opt_a, "neighbors inside H")->required();
  cmd_construct->add_option("-b", opt_b, "neighbors from outside H")->required();

  auto* cmd_verify = app.add_subcommand("verify", "verify a given connection set");
  add_group_opts(cmd_verify, true);
  cmd_verify->add_option("--connection-set", connection_csv, "comma-separated elements")
      ->required();
  cmd_verify->add_option("-a", opt_a, "neighbors inside H")->required();
  cmd_verify->add_option("-b", opt_b, "neighbors from outside H")->required();

  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "construct an (a,b)-regular set and print its eigenvector");
  add_group_opts(cmd_spectrum, true);
  cmd_spectrum->add_option("-a", opt_a, "neighbors inside H")->required();
  cmd_spectrum->add_option("-b", opt_b, "neighbors from outside H")->required();

  auto* cmd_sweep = app.add_subcommand("sweep", "run the catalog sweep");
  cmd_sweep->fallthrough();
  cmd_sweep->add_option("--max-order", max_order, "largest group order in the catalog");
  cmd_sweep->add_option("--catalog-dir", catalog_dir, "directory of extra group files");
  cmd_sweep->add_flag("--with-timing", with_timing,
                      "include wall-clock timings (breaks byte determinism)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (cmd_build->parsed()) {
      auto g = regset::group_from_spec(group_spec);
      if (!opts.json_path.empty()) {
        ordered_json j;
        j["group"] = group_spec;
        j["order"] = g.order;
        ordered_json rows = ordered_json::array();
        for (int r = 0; r < g.order; ++r) {
          std::vector<int> row(g.order);
          for (int c = 0; c < g.order; ++c) row[c] = g.mult(r, c);
          rows.push_back(row);
        }
        j["table"] = std::move(rows);
        emit_json(opts, j);
      } else {
        std::cout << regset::format_group_table(g);
      }
      return kExitSuccess;
    }

    if (cmd_subgroups->parsed()) {
      auto g = regset::group_from_spec(group_spec);
      auto subs = regset::enumerate_subgroups(g);
      ordered_json j;
      j["group"] = group_spec;
      j["order"] = g.order;
      ordered_json list = ordered_json::array();
      for (const auto& h : subs) {
        ordered_json e;
        e["order"] = h.order();
        e["elements"] = h.elements();
        e["normal"] = regset::is_normal(g, h);
        list.push_back(std::move(e));
      }
      j["subgroups"] = std::move(list);
      emit_json(opts, j);
      return kExitSuccess;
    }

    if (cmd_pc->parsed()) {
      auto g = regset::group_from_spec(group_spec);
      auto h = regset::subgroup_closure(g, parse_int_list(subgroup_csv));
      maybe_emit_dot(opts, g, h);
      auto decision = regset::is_perfect_code(g, h);
      ordered_json j;
      j["group"] = group_spec;
      j["subgroup"] = h.elements();
      j["is_perfect_code"] = decision.is_perfect_code;
      j["is_total_perfect_code"] = decision.is_total_perfect_code;
      j["witness"] = decision.witness_transversal ? ordered_json(*decision.witness_transversal)
                                                  : ordered_json(nullptr);
      j["failing_coset"] = decision.failing_coset ? ordered_json(*decision.failing_coset)
                                                  : ordered_json(nullptr);
      emit_json(opts, j);
      return decision.is_perfect_code ? kExitSuccess : kExitNegative;
    }

    if (cmd_construct->parsed() || cmd_spectrum->parsed()) {
      auto g = regset::group_from_spec(group_spec);
      auto h = regset::subgroup_closure(g, parse_int_list(subgroup_csv));
      maybe_emit_dot(opts, g, h);
      std::vector<regset::BundleMethod> methods;
      auto s = regset::construct_regular_set(g, h, opt_a, opt_b, &methods, opts.budget);
      auto cert = regset::verify_regular_set(g, h, s, opt_a, opt_b);
      cert.methods_used = methods;
      emit_json(opts, certificate_json(group_spec, h, cert));
      return kExitSuccess;
    }

    if (cmd_verify->parsed()) {
      auto g = regset::group_from_spec(group_spec);
      auto h = regset::subgroup_closure(g, parse_int_list(subgroup_csv));
      maybe_emit_dot(opts, g, h);
      auto s = regset::ConnectionSet::checked(g, parse_int_list(connection_csv));
      auto cert = regset::verify_regular_set(g, h, s, opt_a, opt_b);
      emit_json(opts, certificate_json(group_spec, h, cert));
      return kExitSuccess;
    }

    if (cmd_sweep->parsed()) {
      regset::SweepOptions sweep_opts;
      sweep_opts.max_order = max_order;
      sweep_opts.threads = opts.threads;
      sweep_opts.with_timing = with_timing;
      sweep_opts.catalog_dir = catalog_dir;
      sweep_opts.budget = opts.budget;
      auto report = regset::sweep(sweep_opts);
      emit_json(opts, report.to_json());
      std::cerr << "sweep: " << report.scope.size() << " groups, " << report.pairs.size()
                << " pairs, " << report.counterexamples.size() << " counterexamples\n";
      if (report.has_consistency_failure() || !report.counterexamples.empty())
        return kExitInconsistent;
      return kExitSuccess;
    }
  } catch (const regset::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    ordered_json j;
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
