#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isolf/assessment.hpp"
#include "isolf/error.hpp"
#include "isolf/layer.hpp"
#include "isolf/schema.hpp"

namespace isolf {

struct NodeValue {
  std::string id;
  double value = 0.0;
  bool is_leaf = false;
};

struct LayerValue {
  Layer layer{};
  double value = 0.0;  // mean of the layer's root-node values
  double ideal = 0.0;  // the schema scale

  double achievement() const noexcept { return value; }
  double priority() const noexcept { return ideal - value; }
};

/// Unrounded values for every node, every layer, and the overall score.
/// Presentation rounding happens only in reporting.
struct EvaluationResult {
  std::string assessment;
  double scale = 0.0;
  std::map<std::string, NodeValue> per_node;
  std::array<LayerValue, layer_count> per_layer{};
  double overall = 0.0;

  const LayerValue& layer_value(Layer layer) const noexcept {
    return per_layer[layer_index(layer)];
  }
};

/// Bottom-up evaluation: a leaf takes its raw score, an internal node the
/// arithmetic mean of its children, a layer the mean of its roots, and the
/// overall score the mean of the layer values.
inline EvaluationResult evaluate(const FrameworkSchema& schema,
                                 const Assessment& assessment) {
  EvaluationResult result;
  result.assessment = assessment.name();
  result.scale = schema.scale();

  auto eval_node = [&](auto&& self, const SchemaNode& node) -> double {
    double value;
    if (node.is_leaf()) {
      value = assessment.score_of(node.id);
    } else {
      double sum = 0.0;
      for (const SchemaNode& child : node.children) {
        sum += self(self, child);
      }
      value = sum / static_cast<double>(node.children.size());
    }
    result.per_node.emplace(node.id, NodeValue{node.id, value, node.is_leaf()});
    return value;
  };

  double layer_sum = 0.0;
  for (Layer layer : all_layers) {
    const auto& roots = schema.roots(layer);
    double sum = 0.0;
    for (const SchemaNode& root : roots) {
      sum += eval_node(eval_node, root);
    }
    double value = sum / static_cast<double>(roots.size());
    result.per_layer[layer_index(layer)] = {layer, value, schema.scale()};
    layer_sum += value;
  }
  result.overall = layer_sum / static_cast<double>(layer_count);
  return result;
}

struct GapRow {
  Layer layer{};
  double ideal = 0.0;
  double achievement = 0.0;
  double priority = 0.0;
};

/// Per-layer (ideal, achievement, priority) triples ranked by priority
/// descending; equal priorities keep the canonical layer order.
struct GapReport {
  std::vector<GapRow> rows;
};

inline GapReport gap_report(const EvaluationResult& result) {
  GapReport report;
  report.rows.reserve(layer_count);
  for (Layer layer : all_layers) {
    const LayerValue& lv = result.layer_value(layer);
    report.rows.push_back({layer, lv.ideal, lv.achievement(), lv.priority()});
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const GapRow& a, const GapRow& b) {
                     return a.priority > b.priority;
                   });
  return report;
}

/// Exact rate of change of the overall score per unit change of one leaf
/// score: one over the product of the layer count, the leaf's layer root
/// count, and the child counts of every internal node on the path down to
/// the leaf. Strictly positive.
inline double sensitivity(const FrameworkSchema& schema,
                          const std::string& leaf_id) {
  // Divisor accumulates as a product of small integer counts, so both this
  // and leaf_sensitivities() below yield bit-identical values.
  auto find_divisor = [&](auto&& self,
                          const SchemaNode& node) -> std::optional<double> {
    if (node.id == leaf_id) {
      if (!node.is_leaf()) {
        throw Error({ErrorCode::not_leaf, leaf_id,
                     "node is computed from children; sensitivity applies "
                     "to leaves"});
      }
      return 1.0;
    }
    for (const SchemaNode& child : node.children) {
      if (auto divisor = self(self, child)) {
        return *divisor * static_cast<double>(node.children.size());
      }
    }
    return std::nullopt;
  };

  for (Layer layer : all_layers) {
    const auto& roots = schema.roots(layer);
    for (const SchemaNode& root : roots) {
      if (auto divisor = find_divisor(find_divisor, root)) {
        return 1.0 / (*divisor * static_cast<double>(roots.size()) *
                      static_cast<double>(layer_count));
      }
    }
  }
  throw Error(
      {ErrorCode::unknown_node, leaf_id, "id is not part of the schema"});
}

/// Sensitivities of every leaf in canonical traversal order. They sum to 1:
/// the overall score is a convex combination of the leaf scores.
inline std::vector<std::pair<std::string, double>> leaf_sensitivities(
    const FrameworkSchema& schema) {
  std::vector<std::pair<std::string, double>> out;

  auto walk = [&](auto&& self, const SchemaNode& node,
                  double divisor) -> void {
    if (node.is_leaf()) {
      out.emplace_back(node.id, 1.0 / divisor);
      return;
    }
    for (const SchemaNode& child : node.children) {
      self(self, child, divisor * static_cast<double>(node.children.size()));
    }
  };

  for (Layer layer : all_layers) {
    const auto& roots = schema.roots(layer);
    for (const SchemaNode& root : roots) {
      walk(walk, root,
           static_cast<double>(layer_count) *
               static_cast<double>(roots.size()));
    }
  }
  return out;
}

}  // namespace isolf
