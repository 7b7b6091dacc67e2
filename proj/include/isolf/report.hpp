#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isolf/evaluate.hpp"
#include "isolf/layer.hpp"
#include "isolf/number_format.hpp"
#include "isolf/schema.hpp"

namespace isolf {

enum class RenderFormat { table, json, csv };

struct RenderOptions {
  RenderFormat format = RenderFormat::table;
  int precision = 1;  // decimal places for displayed values, 0..6
};

namespace detail {

inline void check_options(const RenderOptions& opts) {
  if (opts.precision < 0 || opts.precision > 6) {
    throw std::invalid_argument("precision must be in 0..6");
  }
}

inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) {
    return value;
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

// Fixed-width text table: columns padded to their widest cell, numeric
// columns right-aligned, trailing whitespace trimmed per line.
inline std::string layout_table(const std::vector<std::vector<std::string>>& rows,
                                const std::vector<bool>& right_align,
                                std::size_t rule_after_row,
                                bool rule_before_last) {
  std::size_t columns = right_align.size();
  std::vector<std::size_t> widths(columns, 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns; ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }

  auto emit_row = [&](const std::vector<std::string>& row, std::string& out) {
    std::string line;
    for (std::size_t c = 0; c < columns; ++c) {
      std::string cell = row[c];
      if (right_align[c]) {
        cell.insert(0, widths[c] - cell.size(), ' ');
      } else {
        cell.append(widths[c] - cell.size(), ' ');
      }
      if (c > 0) {
        line += "  ";
      }
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') {
      line.pop_back();
    }
    out += line;
    out += '\n';
  };

  std::string rule_line;
  {
    std::vector<std::string> rule(columns);
    for (std::size_t c = 0; c < columns; ++c) {
      rule[c] = std::string(widths[c], '-');
    }
    emit_row(rule, rule_line);
  }

  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rule_before_last && r + 1 == rows.size()) {
      out += rule_line;
    }
    emit_row(rows[r], out);
    if (r == rule_after_row) {
      out += rule_line;
    }
  }
  return out;
}

}  // namespace detail

/// Renders an evaluation. The table form mirrors the built-in framework's
/// published layout: one row per node grouped under its layer plus a final
/// "Overall Score" row, values rounded half-up at `precision`. The JSON and
/// CSV forms carry both the rounded display strings and the exact values.
inline std::string render_result(const EvaluationResult& result,
                                 const FrameworkSchema& schema,
                                 const RenderOptions& opts) {
  detail::check_options(opts);
  int precision = opts.precision;

  if (opts.format == RenderFormat::table) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Layer", "Title", "Node", "Value"});
    Layer last_layer{};
    bool first = true;
    schema.for_each_node([&](const SchemaNode& node, Layer layer,
                             std::size_t depth) {
      std::string layer_cell;
      if (first || layer != last_layer) {
        layer_cell = layer_name(layer);
        last_layer = layer;
        first = false;
      }
      std::string title(2 * depth, ' ');
      title += node.title;
      rows.push_back({std::move(layer_cell), std::move(title), node.id,
                      format_rounded(result.per_node.at(node.id).value,
                                     precision)});
    });
    rows.push_back(
        {"Overall Score", "", "", format_rounded(result.overall, precision)});
    return detail::layout_table(rows, {false, false, false, true}, 0, true);
  }

  if (opts.format == RenderFormat::json) {
    nlohmann::ordered_json doc;
    doc["schema"] = schema.name();
    doc["assessment"] = result.assessment;
    doc["scale"] = result.scale;
    doc["precision"] = precision;
    doc["overall"] = {{"value", result.overall},
                      {"display", format_rounded(result.overall, precision)}};
    nlohmann::ordered_json layers = nlohmann::ordered_json::array();
    for (Layer layer : all_layers) {
      const LayerValue& lv = result.layer_value(layer);
      nlohmann::ordered_json row;
      row["layer"] = layer_name(layer);
      row["achievement"] = lv.achievement();
      row["display"] = format_rounded(lv.achievement(), precision);
      row["ideal"] = lv.ideal;
      row["priority"] = lv.priority();
      layers.push_back(std::move(row));
    }
    doc["layers"] = std::move(layers);
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    schema.for_each_node(
        [&](const SchemaNode& node, Layer layer, std::size_t) {
          const NodeValue& nv = result.per_node.at(node.id);
          nlohmann::ordered_json row;
          row["id"] = node.id;
          row["layer"] = layer_name(layer);
          row["title"] = node.title;
          row["leaf"] = nv.is_leaf;
          row["value"] = nv.value;
          row["display"] = format_rounded(nv.value, precision);
          nodes.push_back(std::move(row));
        });
    doc["nodes"] = std::move(nodes);
    return doc.dump(2) + "\n";
  }

  // csv: node rows grouped per layer, a summary row per layer, then the
  // overall row. `display` is rounded, `value` exact.
  std::string out = "kind,layer,id,title,display,value\n";
  for (Layer layer : all_layers) {
    std::string name{layer_name(layer)};
    schema.for_each_node([&](const SchemaNode& node, Layer node_layer,
                             std::size_t) {
      if (node_layer != layer) {
        return;
      }
      const NodeValue& nv = result.per_node.at(node.id);
      out += "node," + name + "," + detail::csv_field(node.id) + "," +
             detail::csv_field(node.title) + "," +
             format_rounded(nv.value, precision) + "," +
             format_exact(nv.value) + "\n";
    });
    const LayerValue& lv = result.layer_value(layer);
    out += "layer," + name + ",,," +
           format_rounded(lv.achievement(), precision) + "," +
           format_exact(lv.achievement()) + "\n";
  }
  out += "overall,,,," + format_rounded(result.overall, precision) + "," +
         format_exact(result.overall) + "\n";
  return out;
}

/// Renders gap-report rows (layer, ideal, achievement, priority) in priority
/// order — the data behind an ideal/achievement/priority bar chart. Machine
/// forms carry exact values; the table form rounds at `precision`.
inline std::string render_chart_data(const GapReport& gaps,
                                     const RenderOptions& opts) {
  detail::check_options(opts);

  if (opts.format == RenderFormat::table) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Layer", "Ideal", "Achievement", "Priority"});
    for (const GapRow& row : gaps.rows) {
      rows.push_back({std::string(layer_name(row.layer)),
                      format_rounded(row.ideal, opts.precision),
                      format_rounded(row.achievement, opts.precision),
                      format_rounded(row.priority, opts.precision)});
    }
    return detail::layout_table(rows, {false, true, true, true}, 0, false);
  }

  if (opts.format == RenderFormat::json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const GapRow& row : gaps.rows) {
      nlohmann::ordered_json entry;
      entry["layer"] = layer_name(row.layer);
      entry["ideal"] = row.ideal;
      entry["achievement"] = row.achievement;
      entry["priority"] = row.priority;
      rows.push_back(std::move(entry));
    }
    nlohmann::ordered_json doc;
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }

  std::string out = "layer,ideal,achievement,priority\n";
  for (const GapRow& row : gaps.rows) {
    out += std::string(layer_name(row.layer)) + "," +
           format_exact(row.ideal) + "," + format_exact(row.achievement) +
           "," + format_exact(row.priority) + "\n";
  }
  return out;
}

/// Per-leaf sensitivity listing in canonical traversal order. Sensitivities
/// are printed at full precision regardless of `precision`; their digits are
/// the payload.
inline std::string render_sensitivities(const FrameworkSchema& schema,
                                        const RenderOptions& opts) {
  detail::check_options(opts);
  auto entries = leaf_sensitivities(schema);

  if (opts.format == RenderFormat::table) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Node", "Layer", "Sensitivity"});
    for (const auto& [id, value] : entries) {
      rows.push_back({id, std::string(layer_name(*schema.layer_of(id))),
                      format_exact(value)});
    }
    return detail::layout_table(rows, {false, false, true}, 0, false);
  }

  if (opts.format == RenderFormat::json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [id, value] : entries) {
      nlohmann::ordered_json entry;
      entry["id"] = id;
      entry["value"] = value;
      rows.push_back(std::move(entry));
    }
    nlohmann::ordered_json doc;
    doc["sensitivities"] = std::move(rows);
    return doc.dump(2) + "\n";
  }

  std::string out = "node_id,sensitivity\n";
  for (const auto& [id, value] : entries) {
    out += detail::csv_field(id) + "," + format_exact(value) + "\n";
  }
  return out;
}

}  // namespace isolf
