#pragma once

#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isolf/error.hpp"
#include "isolf/layer.hpp"
#include "isolf/schema.hpp"

namespace isolf {

/// Flat (node_id, score) pairs in document order, plus the assessment name
/// (empty for CSV documents, which carry no name field).
struct RawScoresDoc {
  std::string name;
  std::vector<std::pair<std::string, double>> entries;

  std::map<std::string, double> to_map() const {
    return {entries.begin(), entries.end()};
  }
};

enum class ScoresFormat { csv, json };

namespace detail {

inline std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' ||
                           text.front() == '\r')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// Plain decimal notation only; locale separators and partial matches fail.
inline bool parse_number(std::string_view text, double& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [end, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && end == last && std::isfinite(out);
}

inline RawNode parse_schema_node(const nlohmann::json& value,
                                 std::vector<Issue>& issues) {
  RawNode node;
  if (!value.is_object()) {
    issues.push_back(
        {ErrorCode::shape, "node", "schema node must be an object"});
    return node;
  }
  if (!value.contains("id") || !value["id"].is_string()) {
    issues.push_back(
        {ErrorCode::shape, "id", "node requires a string \"id\" field"});
  } else {
    node.id = value["id"].get<std::string>();
  }
  if (!value.contains("title") || !value["title"].is_string()) {
    issues.push_back(
        {ErrorCode::shape, "title", "node requires a string \"title\" field"});
  } else {
    node.title = value["title"].get<std::string>();
  }
  if (!value.contains("children") || !value["children"].is_array()) {
    issues.push_back({ErrorCode::shape, "children",
                      "node requires an array \"children\" field"});
  } else {
    for (const auto& child : value["children"]) {
      node.children.push_back(parse_schema_node(child, issues));
    }
  }
  return node;
}

// SAX handler for the scores JSON format. Preserves document order and
// rejects duplicate ids, which a plain DOM parse would silently merge.
class ScoresSaxHandler : public nlohmann::json_sax<nlohmann::json> {
 public:
  RawScoresDoc doc;
  std::vector<Issue> issues;
  std::string parse_message;
  bool saw_name = false;
  bool saw_scores = false;

  bool null() override { return scalar_value(); }
  bool boolean(bool) override { return scalar_value(); }
  bool number_integer(number_integer_t value) override {
    return number(static_cast<double>(value));
  }
  bool number_unsigned(number_unsigned_t value) override {
    return number(static_cast<double>(value));
  }
  bool number_float(number_float_t value, const string_t&) override {
    return number(value);
  }
  bool string(string_t& value) override {
    if (skip_depth_ > 0) {
      return true;
    }
    if (state_ == State::top && current_key_ == "name") {
      doc.name = value;
      saw_name = true;
      return true;
    }
    return scalar_value();
  }
  bool binary(binary_t&) override { return true; }

  bool start_object(std::size_t) override {
    if (skip_depth_ > 0) {
      ++skip_depth_;
      return true;
    }
    switch (state_) {
      case State::root:
        state_ = State::top;
        return true;
      case State::top:
        if (current_key_ == "scores") {
          state_ = State::scores;
          saw_scores = true;
        } else {
          skip_depth_ = 1;
        }
        return true;
      case State::scores:
        issues.push_back(
            {ErrorCode::nan, current_key_, "score must be a number"});
        skip_depth_ = 1;
        return true;
    }
    return true;
  }

  bool key(string_t& value) override {
    if (skip_depth_ > 0) {
      return true;
    }
    current_key_ = value;
    drop_entry_ = false;
    if (state_ == State::scores && !seen_.insert(value).second) {
      issues.push_back(
          {ErrorCode::dup_key, value, "node_id appears more than once"});
      drop_entry_ = true;
    }
    return true;
  }

  bool end_object() override {
    if (skip_depth_ > 0) {
      --skip_depth_;
      return true;
    }
    if (state_ == State::scores) {
      state_ = State::top;
    }
    return true;
  }

  bool start_array(std::size_t) override {
    if (skip_depth_ > 0) {
      ++skip_depth_;
      return true;
    }
    if (state_ == State::root) {
      issues.push_back(
          {ErrorCode::shape, "", "top level must be an object"});
      return false;
    }
    if (state_ == State::scores) {
      issues.push_back(
          {ErrorCode::nan, current_key_, "score must be a number"});
    } else if (current_key_ == "scores") {
      issues.push_back(
          {ErrorCode::shape, "scores", "\"scores\" must be an object"});
      saw_scores = true;
    }
    skip_depth_ = 1;
    return true;
  }

  bool end_array() override {
    if (skip_depth_ > 0) {
      --skip_depth_;
    }
    return true;
  }

  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    parse_message = ex.what();
    return false;
  }

 private:
  enum class State { root, top, scores };

  bool number(double value) {
    if (skip_depth_ > 0) {
      return true;
    }
    switch (state_) {
      case State::root:
        issues.push_back(
            {ErrorCode::shape, "", "top level must be an object"});
        return false;
      case State::top:
        if (current_key_ == "name") {
          issues.push_back(
              {ErrorCode::shape, "name", "\"name\" must be a string"});
          saw_name = true;
        } else if (current_key_ == "scores") {
          issues.push_back(
              {ErrorCode::shape, "scores", "\"scores\" must be an object"});
          saw_scores = true;
        }
        return true;
      case State::scores:
        if (!drop_entry_) {
          doc.entries.emplace_back(current_key_, value);
        }
        return true;
    }
    return true;
  }

  bool scalar_value() {
    if (skip_depth_ > 0) {
      return true;
    }
    switch (state_) {
      case State::root:
        issues.push_back(
            {ErrorCode::shape, "", "top level must be an object"});
        return false;
      case State::top:
        if (current_key_ == "name") {
          issues.push_back(
              {ErrorCode::shape, "name", "\"name\" must be a string"});
          saw_name = true;
        } else if (current_key_ == "scores") {
          issues.push_back(
              {ErrorCode::shape, "scores", "\"scores\" must be an object"});
          saw_scores = true;
        }
        return true;
      case State::scores:
        issues.push_back(
            {ErrorCode::nan, current_key_, "score must be a number"});
        return true;
    }
    return true;
  }

  State state_ = State::root;
  int skip_depth_ = 0;
  bool drop_entry_ = false;
  std::string current_key_;
  std::set<std::string> seen_;
};

inline nlohmann::ordered_json schema_node_json(const SchemaNode& node) {
  nlohmann::ordered_json out;
  out["id"] = node.id;
  out["title"] = node.title;
  nlohmann::ordered_json children = nlohmann::ordered_json::array();
  for (const SchemaNode& child : node.children) {
    children.push_back(schema_node_json(child));
  }
  out["children"] = std::move(children);
  return out;
}

}  // namespace detail

/// Parses the JSON schema format: `{"name", "scale", "layers"}` with layers
/// keyed by the six layer names, each an array of
/// `{"id", "title", "children"}` nodes. Structural checks only; semantics
/// are validate_schema()'s job.
inline RawSchemaDoc parse_schema(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw Error({ErrorCode::parse, "", error.what()});
  }
  if (!doc.is_object()) {
    throw Error({ErrorCode::shape, "", "top level must be an object"});
  }

  std::vector<Issue> issues;
  RawSchemaDoc raw;
  if (!doc.contains("name") || !doc["name"].is_string()) {
    issues.push_back({ErrorCode::shape, "name", "required string field"});
  } else {
    raw.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("scale") || !doc["scale"].is_number()) {
    issues.push_back({ErrorCode::shape, "scale", "required numeric field"});
  } else {
    raw.scale = doc["scale"].get<double>();
  }
  if (!doc.contains("layers") || !doc["layers"].is_object()) {
    issues.push_back({ErrorCode::shape, "layers", "required object field"});
  } else {
    for (const auto& [key, value] : doc["layers"].items()) {
      auto layer = layer_from_name(key);
      if (!layer) {
        issues.push_back({ErrorCode::shape, key, "unknown layer key"});
        continue;
      }
      if (!value.is_array()) {
        issues.push_back(
            {ErrorCode::shape, key, "layer must be an array of nodes"});
        continue;
      }
      auto& slot = raw.layer(*layer);
      slot.emplace();
      slot->reserve(value.size());
      for (const auto& element : value) {
        slot->push_back(detail::parse_schema_node(element, issues));
      }
    }
  }

  if (!issues.empty()) {
    throw Error(std::move(issues));
  }
  return raw;
}

/// Parses the scores CSV format: header line `node_id,score`, one
/// id/score pair per line. Reports every bad row at once.
inline RawScoresDoc parse_scores_csv(std::string_view text) {
  auto lines = detail::split(text, '\n');
  if (lines.empty() || detail::trim(lines[0]) != "node_id,score") {
    throw Error(
        {ErrorCode::parse, "", "line 1: expected header \"node_id,score\""});
  }

  RawScoresDoc doc;
  std::vector<Issue> issues;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string line_no = std::to_string(i + 1);
    if (detail::trim(lines[i]).empty()) {
      continue;
    }
    auto fields = detail::split(lines[i], ',');
    if (fields.size() != 2) {
      issues.push_back({ErrorCode::parse, "",
                        "line " + line_no + ": expected 2 fields, got " +
                            std::to_string(fields.size())});
      continue;
    }
    std::string id{detail::trim(fields[0])};
    std::string score_text{detail::trim(fields[1])};
    if (id.empty()) {
      issues.push_back(
          {ErrorCode::parse, "", "line " + line_no + ": empty node_id"});
      continue;
    }
    if (!seen.insert(id).second) {
      issues.push_back({ErrorCode::dup_key, id,
                        "line " + line_no + ": node_id appears more than "
                                            "once"});
      continue;
    }
    double value = 0.0;
    if (!detail::parse_number(score_text, value)) {
      issues.push_back({ErrorCode::nan, id,
                        "line " + line_no + ": \"" + score_text +
                            "\" is not a number"});
      continue;
    }
    doc.entries.emplace_back(std::move(id), value);
  }

  if (!issues.empty()) {
    throw Error(std::move(issues));
  }
  return doc;
}

/// Parses the scores JSON format `{"name": string, "scores": {id: number}}`,
/// preserving document order.
inline RawScoresDoc parse_scores_json(std::string_view text) {
  detail::ScoresSaxHandler handler;
  nlohmann::json::sax_parse(text, &handler);

  if (!handler.parse_message.empty()) {
    throw Error({ErrorCode::parse, "", handler.parse_message});
  }
  std::vector<Issue> issues = std::move(handler.issues);
  if (!handler.saw_name) {
    issues.push_back({ErrorCode::shape, "name", "required string field"});
  }
  if (!handler.saw_scores) {
    issues.push_back({ErrorCode::shape, "scores", "required object field"});
  }
  if (!issues.empty()) {
    throw Error(std::move(issues));
  }
  return std::move(handler.doc);
}

inline RawScoresDoc parse_scores(std::string_view text, ScoresFormat format) {
  return format == ScoresFormat::csv ? parse_scores_csv(text)
                                     : parse_scores_json(text);
}

/// Serializes a validated schema. Keys are emitted in a fixed order (name,
/// scale, layers in canonical layer order; id, title, children per node),
/// so export -> parse -> export is byte-identical.
inline std::string export_schema(const FrameworkSchema& schema) {
  nlohmann::ordered_json doc;
  doc["name"] = schema.name();
  doc["scale"] = schema.scale();
  nlohmann::ordered_json layers = nlohmann::ordered_json::object();
  for (Layer layer : all_layers) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const SchemaNode& root : schema.roots(layer)) {
      nodes.push_back(detail::schema_node_json(root));
    }
    layers[std::string(layer_name(layer))] = std::move(nodes);
  }
  doc["layers"] = std::move(layers);
  return doc.dump(2) + "\n";
}

}  // namespace isolf
