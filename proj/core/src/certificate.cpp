#include "lucastk/solvers.hpp"

namespace lucastk {

nlohmann::json SolutionCertificate::to_json() const {
  nlohmann::json j;
  j["equation_id"] = equation_id;
  j["parameters"] = parameters;
  j["search_bound"] = to_dec(search_bound);
  j["solutions"] = solutions;
  j["evidence"] = evidence;
  j["exhaustive"] = exhaustive;
  j["uncovered"] = uncovered;
  j["notes"] = notes;
  return j;
}

std::string canonical_dump(const nlohmann::json& j) {
  // nlohmann::json keeps object keys in a std::map, so they are already sorted
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::strict) + "\n";
}

}  // namespace lucastk
