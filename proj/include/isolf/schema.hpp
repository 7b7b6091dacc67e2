#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isolf/error.hpp"
#include "isolf/layer.hpp"
#include "isolf/number_format.hpp"

namespace isolf {

/// One node of the framework tree. A node without children is a leaf and is
/// the only place raw scores attach; a node with children is computed.
struct SchemaNode {
  std::string id;
  std::string title;
  std::vector<SchemaNode> children;

  bool is_leaf() const noexcept { return children.empty(); }

  friend bool operator==(const SchemaNode&, const SchemaNode&) = default;
};

/// Unvalidated mirror of a schema document. validate_schema() turns it into
/// a FrameworkSchema or reports every violation at once.
struct RawNode {
  std::string id;
  std::string title;
  std::vector<RawNode> children;
};

struct RawSchemaDoc {
  std::string name;
  double scale = 100.0;
  // nullopt: the layer never appeared in the document.
  std::array<std::optional<std::vector<RawNode>>, layer_count> layers;

  std::optional<std::vector<RawNode>>& layer(Layer l) {
    return layers[layer_index(l)];
  }
  const std::optional<std::vector<RawNode>>& layer(Layer l) const {
    return layers[layer_index(l)];
  }
};

class FrameworkSchema;
FrameworkSchema validate_schema(const RawSchemaDoc& raw);

/// Validated framework tree: six populated layers, globally unique dotted
/// ids, positive scale. Immutable; constructed only via validate_schema().
class FrameworkSchema {
 public:
  const std::string& name() const noexcept { return name_; }
  double scale() const noexcept { return scale_; }

  const std::vector<SchemaNode>& roots(Layer layer) const noexcept {
    return layers_[layer_index(layer)];
  }

  /// Depth-first walk over every node, layers in canonical order.
  /// fn(node, layer, depth) with depth 0 at layer roots.
  template <typename Fn>
  void for_each_node(Fn&& fn) const {
    for (Layer layer : all_layers) {
      for (const SchemaNode& root : roots(layer)) {
        walk(root, layer, 0, fn);
      }
    }
  }

  const SchemaNode* find(std::string_view id) const noexcept {
    const SchemaNode* found = nullptr;
    for_each_node([&](const SchemaNode& node, Layer, std::size_t) {
      if (!found && node.id == id) {
        found = &node;
      }
    });
    return found;
  }

  /// Layer a node id belongs to, when present.
  std::optional<Layer> layer_of(std::string_view id) const noexcept {
    std::optional<Layer> found;
    for_each_node([&](const SchemaNode& node, Layer layer, std::size_t) {
      if (!found && node.id == id) {
        found = layer;
      }
    });
    return found;
  }

  /// Leaf ids in canonical traversal order.
  std::vector<std::string> leaf_ids() const {
    std::vector<std::string> ids;
    for_each_node([&](const SchemaNode& node, Layer, std::size_t) {
      if (node.is_leaf()) {
        ids.push_back(node.id);
      }
    });
    return ids;
  }

  std::size_t node_count() const noexcept {
    std::size_t n = 0;
    for_each_node([&](const SchemaNode&, Layer, std::size_t) { ++n; });
    return n;
  }

  std::size_t leaf_count() const noexcept {
    std::size_t n = 0;
    for_each_node([&](const SchemaNode& node, Layer, std::size_t) {
      if (node.is_leaf()) {
        ++n;
      }
    });
    return n;
  }

  friend bool operator==(const FrameworkSchema&,
                         const FrameworkSchema&) = default;

 private:
  friend FrameworkSchema validate_schema(const RawSchemaDoc& raw);

  FrameworkSchema(std::string name, double scale,
                  std::array<std::vector<SchemaNode>, layer_count> layers)
      : name_(std::move(name)), scale_(scale), layers_(std::move(layers)) {}

  template <typename Fn>
  static void walk(const SchemaNode& node, Layer layer, std::size_t depth,
                   Fn&& fn) {
    fn(node, layer, depth);
    for (const SchemaNode& child : node.children) {
      walk(child, layer, depth + 1, fn);
    }
  }

  std::string name_;
  double scale_ = 100.0;
  std::array<std::vector<SchemaNode>, layer_count> layers_;
};

namespace detail {

inline bool has_dotted_prefix(const std::string& parent,
                              const std::string& child) {
  return child.size() > parent.size() + 1 &&
         child.compare(0, parent.size(), parent) == 0 &&
         child[parent.size()] == '.';
}

inline SchemaNode check_node(const RawNode& raw, const RawNode* parent,
                             std::set<std::string>& seen_ids,
                             std::vector<Issue>& issues) {
  if (raw.id.empty()) {
    std::string context =
        parent ? "child of \"" + parent->id + "\"" : "layer root";
    issues.push_back({ErrorCode::shape, raw.title,
                      "node id must be a non-empty string (" + context + ")"});
  }
  if (raw.title.empty()) {
    issues.push_back(
        {ErrorCode::shape, raw.id, "node title must be a non-empty string"});
  }
  if (!raw.id.empty() && !seen_ids.insert(raw.id).second) {
    issues.push_back({ErrorCode::dup_id, raw.id,
                      "id appears more than once in the schema"});
  }
  if (parent && !raw.id.empty() &&
      !has_dotted_prefix(parent->id, raw.id)) {
    issues.push_back({ErrorCode::bad_prefix, raw.id,
                      "child id is not prefixed by parent id \"" + parent->id +
                          ".\""});
  }

  SchemaNode node{raw.id, raw.title, {}};
  node.children.reserve(raw.children.size());
  for (const RawNode& child : raw.children) {
    node.children.push_back(check_node(child, &raw, seen_ids, issues));
  }
  return node;
}

}  // namespace detail

/// Checks every FrameworkSchema invariant and reports all violations in one
/// Error: E_BAD_SCALE, then per layer (canonical order) E_MISSING_LAYER /
/// E_EMPTY_NODE, then node issues in depth-first order.
inline FrameworkSchema validate_schema(const RawSchemaDoc& raw) {
  std::vector<Issue> issues;

  if (!(raw.scale > 0.0)) {
    issues.push_back({ErrorCode::bad_scale, format_exact(raw.scale),
                      "scale must be a positive number"});
  }

  std::set<std::string> seen_ids;
  std::array<std::vector<SchemaNode>, layer_count> converted{};
  for (Layer layer : all_layers) {
    const auto& slot = raw.layer(layer);
    std::string name{layer_name(layer)};
    if (!slot.has_value()) {
      issues.push_back(
          {ErrorCode::missing_layer, name, "layer is not populated"});
      continue;
    }
    if (slot->empty()) {
      issues.push_back({ErrorCode::empty_node, name,
                        "layer declares an empty node list"});
      issues.push_back(
          {ErrorCode::missing_layer, name, "layer is not populated"});
      continue;
    }
    auto& out = converted[layer_index(layer)];
    out.reserve(slot->size());
    for (const RawNode& root : *slot) {
      out.push_back(detail::check_node(root, nullptr, seen_ids, issues));
    }
  }

  if (!issues.empty()) {
    throw Error(std::move(issues));
  }
  return FrameworkSchema(raw.name, raw.scale, std::move(converted));
}

}  // namespace isolf
