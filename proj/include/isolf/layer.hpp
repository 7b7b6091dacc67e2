#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace isolf {

/// The six top-level domains every framework schema is organized under.
enum class Layer {
  organization,
  stakeholder,
  tool_technology,
  policy,
  culture,
  knowledge,
};

inline constexpr std::size_t layer_count = 6;

/// Canonical layer order. Ties and iteration everywhere follow this order.
inline constexpr std::array<Layer, layer_count> all_layers{
    Layer::organization, Layer::stakeholder, Layer::tool_technology,
    Layer::policy,       Layer::culture,     Layer::knowledge,
};

constexpr std::size_t layer_index(Layer layer) noexcept {
  return static_cast<std::size_t>(layer);
}

constexpr std::string_view layer_name(Layer layer) noexcept {
  switch (layer) {
    case Layer::organization:
      return "organization";
    case Layer::stakeholder:
      return "stakeholder";
    case Layer::tool_technology:
      return "tool_technology";
    case Layer::policy:
      return "policy";
    case Layer::culture:
      return "culture";
    case Layer::knowledge:
      return "knowledge";
  }
  return "";
}

/// Definitional text attached to each layer, shown to report readers.
constexpr std::string_view layer_description(Layer layer) noexcept {
  switch (layer) {
    case Layer::organization:
      return "The structured social unit of people, managed on a continuing "
             "basis to meet needs and pursue collective goals.";
    case Layer::stakeholder:
      return "Any person, group, or organization with a direct or indirect "
             "stake, able to affect or be affected by actions, objectives, "
             "and policies.";
    case Layer::tool_technology:
      return "The technology the service is built on: the purposeful "
             "application of information in the design, production, and use "
             "of goods and services, tangible and intangible.";
    case Layer::policy:
      return "Principles and rules that guide decisions toward rational "
             "outcomes.";
    case Layer::culture:
      return "The shared values and behaviors that determine what the "
             "organization treats as acceptable or unacceptable, important "
             "or unimportant.";
    case Layer::knowledge:
      return "The sum of what is known, residing in the intelligence and "
             "competence of people.";
  }
  return "";
}

inline std::optional<Layer> layer_from_name(std::string_view name) noexcept {
  for (Layer layer : all_layers) {
    if (layer_name(layer) == name) {
      return layer;
    }
  }
  return std::nullopt;
}

}  // namespace isolf
