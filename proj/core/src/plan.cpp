#include "rcfd/plan.hpp"

#include "rcfd/errors.hpp"

namespace rcfd {

long long PlanNode::iarg(const std::string& name) const {
  for (const auto& [key, value] : iargs) {
    if (key == name) return value;
  }
  throw InternalAssertion("plan node '" + op + "' lacks argument '" + name + "'");
}

std::string PlanNode::sarg(const std::string& name) const {
  for (const auto& [key, value] : sargs) {
    if (key == name) return value;
  }
  throw InternalAssertion("plan node '" + op + "' lacks argument '" + name + "'");
}

bool PlanNode::has_sarg(const std::string& name) const {
  for (const auto& [key, value] : sargs) {
    if (key == name) return true;
  }
  return false;
}

}  // namespace rcfd
