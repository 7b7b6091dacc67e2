#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isolf/error.hpp"
#include "isolf/number_format.hpp"
#include "isolf/schema.hpp"

namespace isolf {

class Assessment;
Assessment bind_assessment(const FrameworkSchema& schema,
                           const std::map<std::string, double>& raw_scores,
                           std::string name);

/// Raw scores bound to a schema: every leaf covered exactly once, every
/// value inside [0, scale]. Immutable; constructed only via
/// bind_assessment().
class Assessment {
 public:
  const std::string& name() const noexcept { return name_; }
  const std::map<std::string, double>& scores() const noexcept {
    return scores_;
  }
  double score_of(const std::string& leaf_id) const {
    return scores_.at(leaf_id);
  }

 private:
  friend Assessment bind_assessment(
      const FrameworkSchema& schema,
      const std::map<std::string, double>& raw_scores, std::string name);

  Assessment(std::string name, std::map<std::string, double> scores)
      : name_(std::move(name)), scores_(std::move(scores)) {}

  std::string name_;
  std::map<std::string, double> scores_;
};

/// Binds raw scores to a validated schema. Reports every violation at once:
/// E_MISSING_SCORE per uncovered leaf (traversal order), then E_UNKNOWN_NODE
/// and E_RANGE per offending entry (id order).
inline Assessment bind_assessment(
    const FrameworkSchema& schema,
    const std::map<std::string, double>& raw_scores, std::string name = "") {
  std::vector<Issue> issues;

  for (const std::string& leaf_id : schema.leaf_ids()) {
    if (!raw_scores.contains(leaf_id)) {
      issues.push_back(
          {ErrorCode::missing_score, leaf_id, "no score bound for leaf"});
    }
  }

  for (const auto& [id, value] : raw_scores) {
    const SchemaNode* node = schema.find(id);
    if (node == nullptr) {
      issues.push_back(
          {ErrorCode::unknown_node, id, "id is not part of the schema"});
    } else if (!node->is_leaf()) {
      issues.push_back({ErrorCode::unknown_node, id,
                        "scores attach to leaves only; this node is "
                        "computed from its children"});
    } else if (!(value >= 0.0 && value <= schema.scale())) {
      issues.push_back({ErrorCode::range, id,
                        "score " + format_exact(value) + " outside [0, " +
                            format_exact(schema.scale()) + "]"});
    }
  }

  if (!issues.empty()) {
    throw Error(std::move(issues));
  }
  return Assessment(std::move(name), raw_scores);
}

}  // namespace isolf
