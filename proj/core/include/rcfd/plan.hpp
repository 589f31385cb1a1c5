#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rcfd {

// A derivation tree: every node names one operation of this library together
// with its parameters, so replaying the tree rebuilds the design bit for bit.
struct PlanNode {
  std::string op;
  std::vector<std::pair<std::string, long long>> iargs;
  std::vector<std::pair<std::string, std::string>> sargs;
  std::vector<PlanNode> children;

  PlanNode() = default;
  explicit PlanNode(std::string op_name) : op(std::move(op_name)) {}

  PlanNode& arg(const std::string& name, long long value) {
    iargs.emplace_back(name, value);
    return *this;
  }
  PlanNode& arg(const std::string& name, const std::string& value) {
    sargs.emplace_back(name, value);
    return *this;
  }
  PlanNode& child(PlanNode node) {
    children.push_back(std::move(node));
    return *this;
  }

  long long iarg(const std::string& name) const;
  std::string sarg(const std::string& name) const;
  bool has_sarg(const std::string& name) const;
};

// Operation names a plan may contain.
namespace plan_ops {
inline constexpr const char* kTrivial = "trivial";
inline constexpr const char* kCyclicRectangle = "cyclic_rectangle";
inline constexpr const char* kPrimePowerDesign = "prime_power_design";
inline constexpr const char* kTruncate = "truncate";
inline constexpr const char* kTranspose = "transpose";
inline constexpr const char* kBlowup = "blowup";
inline constexpr const char* kKronecker = "kronecker";
inline constexpr const char* kGlueCols = "glue_cols";
inline constexpr const char* kGlueRows = "glue_rows";
inline constexpr const char* kExtendFactor = "extend_factor";
inline constexpr const char* kSeed = "seed";
inline constexpr const char* kSearchKernel = "search_kernel";
}  // namespace plan_ops

}  // namespace rcfd
