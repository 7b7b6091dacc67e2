#pragma once

#include <array>
#include <string>
#include <string_view>

#include "isolf/error.hpp"
#include "isolf/layer.hpp"
#include "isolf/schema.hpp"

namespace isolf {

/// One of the eight controls of the built-in MISA framework.
struct MisaControl {
  int control_number;
  std::string_view title;
  Layer layer;
  std::string_view description;
};

/// The eight MISA controls in built-in schema order (layer order, then
/// control order within the layer).
inline constexpr std::array<MisaControl, 8> misa_controls{{
    {5, "Security Program", Layer::organization,
     "Recommendations and priorities for improving the security of systems "
     "and the information on them, with high-level threat and risk "
     "analysis."},
    {8, "Security Awareness", Layer::stakeholder,
     "The knowledge and attitude members of the organization hold about "
     "protecting its physical and information assets."},
    {1, "Security Infrastructure", Layer::tool_technology,
     "The infrastructure components that bear on information security, "
     "especially those directly handling multimedia information."},
    {7, "Enterprise Security", Layer::tool_technology,
     "A comprehensive, rigorous description of the current and future "
     "structure and behavior of security processes, systems, personnel, and "
     "units, aligned with core goals and direction."},
    {6, "Multimedia Information Sharing", Layer::policy,
     "The critical relationships through which key multimedia information "
     "resources are shared with relevant components."},
    {2, "Security Policies", Layer::policy,
     "The measures the organization adopts with respect to its information "
     "security."},
    {3, "Security Culture", Layer::culture,
     "The values and behaviors shaping the organization's social and "
     "psychological environment, its collaboration and governance."},
    {4, "Monitoring Compliance", Layer::knowledge,
     "Reconciling existing multimedia information handling against the "
     "benchmark standard that guides and bounds the domain."},
}};

/// Layer assignment of a MISA control number (1..8).
inline Layer layer_of_control(int control_number) {
  for (const MisaControl& control : misa_controls) {
    if (control.control_number == control_number) {
      return control.layer;
    }
  }
  throw Error({ErrorCode::unknown_control, std::to_string(control_number),
               "MISA control numbers are 1..8"});
}

/// The built-in MISA schema: eight controls as leaves across the six
/// layers, scale 100. Addressable from the CLI as `builtin:misa`.
inline FrameworkSchema misa_framework() {
  RawSchemaDoc raw;
  raw.name = "MISA";
  raw.scale = 100.0;
  for (Layer layer : all_layers) {
    raw.layer(layer).emplace();
  }
  for (const MisaControl& control : misa_controls) {
    raw.layer(control.layer)
        ->push_back({std::to_string(control.control_number),
                     std::string(control.title),
                     {}});
  }
  return validate_schema(raw);
}

}  // namespace isolf
