// rcfd: construct, decide and verify regular row-column factorial designs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rcfd/fixtures.hpp"
#include "rcfd/io.hpp"
#include "rcfd/oracle.hpp"
#include "rcfd/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoDesign = 1;  // nonexistent, not found, or failed verification
constexpr int kExitUsage = 2;
constexpr int kExitKernelUnavailable = 3;
constexpr int kExitTimeout = 4;

rcfd::Format parse_format(const std::string& name) {
  if (name == "text") return rcfd::Format::Text;
  if (name == "json") return rcfd::Format::Json;
  if (name == "csv") return rcfd::Format::Csv;
  throw CLI::ValidationError("--format", "expected text, json or csv");
}

void emit(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
  } else {
    rcfd::write_file(out_path, bytes);
  }
}

int cmd_exists(int k, int m, int n, int q) {
  const auto verdict = rcfd::exists(k, m, n, q);
  std::cout << verdict.describe() << "\n";
  return verdict.exists ? kExitOk : kExitNoDesign;
}

int cmd_generate(int k, int m, int n, int q, const std::string& format,
                 const std::string& out_path, const std::string& plan_path,
                 const rcfd::KernelOptions& kernel) {
  const auto result = rcfd::generate(k, m, n, q, kernel);
  emit(rcfd::write_design(result.design, parse_format(format)), out_path);
  if (!plan_path.empty()) {
    rcfd::write_file(plan_path, rcfd::plan_to_json(result.plan));
  }
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  rcfd::Design d = rcfd::read_design_file(path);
  const auto report = rcfd::verify_design(d);
  std::cout << d.params.str() << " candidate\n";
  if (report.pass) {
    std::cout << "PASS verify_design\n";
  } else {
    std::cout << "FAIL verify_design: " << report.violations.size()
              << " violation(s)\n";
    const size_t shown = std::min<size_t>(report.violations.size(), 20);
    for (size_t i = 0; i < shown; ++i) {
      const auto& v = report.violations[i];
      std::cout << "  " << v.check << ": " << v.location << " (expected "
                << v.expected << ", got " << v.actual << ")\n";
    }
    if (shown < report.violations.size()) {
      std::cout << "  ... " << report.violations.size() - shown << " more\n";
    }
  }
  if (d.params.k >= 2) {
    std::cout << "pairwise orthogonality:";
    for (int a = 0; a < d.params.k; ++a) {
      for (int b = a + 1; b < d.params.k; ++b) {
        const bool ortho = rcfd::verify_orthogonal(rcfd::component(d, a),
                                                   rcfd::component(d, b));
        std::cout << " (" << a << "," << b << ")=" << (ortho ? "yes" : "no");
      }
    }
    std::cout << "\n";
  }
  return report.pass ? kExitOk : kExitNoDesign;
}

int cmd_oracle(int k, int m, int n, int q, unsigned long long nodes,
               double seconds, bool store) {
  rcfd::Budget budget;
  if (nodes > 0) budget.max_nodes = nodes;
  if (seconds > 0) budget.max_seconds = seconds;
  const rcfd::DesignParams spec{k, m, n, q};
  const auto out = store
                       ? rcfd::find_seed(spec, budget, rcfd::default_seed_cache_dir())
                       : rcfd::find_seed(spec, budget, "");
  switch (out.status) {
    case rcfd::SearchStatus::Found:
      std::cout << "found after " << out.nodes << " nodes\n";
      std::cout << rcfd::write_design(*out.design, rcfd::Format::Text);
      return kExitOk;
    case rcfd::SearchStatus::ExhaustedNone:
      std::cout << "exhausted: no design of type " << spec.str()
                << " exists (" << out.nodes << " nodes)\n";
      return kExitNoDesign;
    case rcfd::SearchStatus::Timeout:
      std::cout << "timeout: budget exhausted before a conclusion\n";
      return kExitTimeout;
  }
  return kExitUsage;
}

int cmd_mols(int v, const std::string& out_path, const rcfd::KernelOptions& kernel) {
  const auto result = rcfd::mols_pair(v, kernel);
  emit(rcfd::write_design(result.design, rcfd::Format::Text), out_path);
  return kExitOk;
}

int cmd_fixtures(const std::string& name, bool list) {
  if (list) {
    for (const auto& n : rcfd::fixture_names()) std::cout << n << "\n";
    return kExitOk;
  }
  std::string key = name;
  for (char& ch : key) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  std::cout << rcfd::write_design(rcfd::fixture(key), rcfd::Format::Text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular row-column factorial design toolkit"};
  app.require_subcommand(1);

  int k = 1, m = 1, n = 1, q = 1, v = 1;
  std::string format = "text", out_path, plan_path, file_path, name;
  bool list = false, store = false;
  unsigned long long nodes = 0;
  double seconds = 0;
  rcfd::KernelOptions kernel;

  auto* c_exists = app.add_subcommand("exists", "decide whether a design of type I_k(m,n;q) exists");
  c_exists->add_option("k", k)->required();
  c_exists->add_option("m", m)->required();
  c_exists->add_option("n", n)->required();
  c_exists->add_option("q", q)->required();

  auto* c_gen = app.add_subcommand("generate", "construct a verified design of type I_k(m,n;q)");
  c_gen->add_option("k", k)->required();
  c_gen->add_option("m", m)->required();
  c_gen->add_option("n", n)->required();
  c_gen->add_option("q", q)->required();
  c_gen->add_option("--format", format, "text, json or csv");
  c_gen->add_option("--out", out_path, "write the design here instead of stdout");
  c_gen->add_option("--plan", plan_path, "write the construction plan as JSON");
  c_gen->add_option("--seed", kernel.seed_file, "user-supplied kernel design file");
  c_gen->add_option("--cache", kernel.cache_dir_override, "seed cache directory override");
  c_gen->add_option("--search-nodes", kernel.search_nodes, "opt-in kernel search node budget");
  c_gen->add_option("--search-time", kernel.search_seconds, "opt-in kernel search time budget (s)");

  auto* c_verify = app.add_subcommand("verify", "check a design file and report violations");
  c_verify->add_option("path", file_path)->required();

  auto* c_oracle = app.add_subcommand("oracle", "exhaustive backtracking search for I_k(m,n;q)");
  c_oracle->add_option("k", k)->required();
  c_oracle->add_option("m", m)->required();
  c_oracle->add_option("n", n)->required();
  c_oracle->add_option("q", q)->required();
  c_oracle->add_option("--nodes", nodes, "node budget (default 1e8)");
  c_oracle->add_option("--time", seconds, "time budget in seconds (default 60)");
  c_oracle->add_flag("--store", store, "store a found design in the seed cache");

  auto* c_mols = app.add_subcommand("mols", "pair of orthogonal Latin squares of order v as I_2(v,v;v)");
  c_mols->add_option("v", v)->required();
  c_mols->add_option("--out", out_path);
  c_mols->add_option("--seed", kernel.seed_file, "user-supplied kernel design file");
  c_mols->add_option("--cache", kernel.cache_dir_override, "seed cache directory override");
  c_mols->add_option("--search-nodes", kernel.search_nodes);
  c_mols->add_option("--search-time", kernel.search_seconds);

  auto* c_fixtures = app.add_subcommand("fixtures", "dump an embedded reference design");
  c_fixtures->add_option("name", name);
  c_fixtures->add_flag("--list", list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_exists->parsed()) return cmd_exists(k, m, n, q);
    if (c_gen->parsed()) return cmd_generate(k, m, n, q, format, out_path, plan_path, kernel);
    if (c_verify->parsed()) return cmd_verify(file_path);
    if (c_oracle->parsed()) return cmd_oracle(k, m, n, q, nodes, seconds, store);
    if (c_mols->parsed()) return cmd_mols(v, out_path, kernel);
    if (c_fixtures->parsed()) {
      if (!list && name.empty()) {
        std::cerr << "error: fixture name required (or --list)\n";
        return kExitUsage;
      }
      return cmd_fixtures(name, list);
    }
  } catch (const rcfd::KernelUnavailable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitKernelUnavailable;
  } catch (const rcfd::NonExistent& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoDesign;
  } catch (const rcfd::NoSuchPair& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoDesign;
  } catch (const rcfd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoDesign;
  } catch (const rcfd::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoDesign;
  } catch (const rcfd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
