#include <json.hpp>

#include "qvol/poset.hpp"

namespace qvol {

Poset poset_from_json(const std::string& text, std::vector<int>* omega_out) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw arithmetic_error("poset json: missing integer field \"n\"");
  }
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2) {
        throw arithmetic_error("poset json: covers must be pairs");
      }
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  }
  Poset P(n, covers);
  if (omega_out) {
    if (j.contains("omega")) {
      *omega_out = j["omega"].get<std::vector<int>>();
      if (static_cast<int>(omega_out->size()) != n) {
        throw arithmetic_error("poset json: omega must have n entries");
      }
      std::vector<bool> seen(n + 1, false);
      for (int v : *omega_out) {
        if (v < 1 || v > n || seen[v]) {
          throw arithmetic_error("poset json: omega must be a bijection to 1..n");
        }
        seen[v] = true;
      }
    } else {
      *omega_out = natural_labeling(n);
    }
  }
  return P;
}

std::string poset_to_json(const Poset& P, const std::vector<int>& omega) {
  nlohmann::json j;
  j["n"] = P.size();
  j["covers"] = nlohmann::json::array();
  for (auto [i, k] : P.cover_relations()) {
    j["covers"].push_back({i, k});
  }
  j["omega"] = omega;
  return j.dump();
}

}  // namespace qvol
