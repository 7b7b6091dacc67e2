#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isolf {

enum class ErrorCode {
  // schema validation
  empty_node,
  dup_id,
  bad_prefix,
  missing_layer,
  bad_scale,
  // assessment binding
  missing_score,
  unknown_node,
  range,
  // lookups
  unknown_control,
  not_leaf,
  // document ingestion
  parse,
  shape,
  dup_key,
  nan,
};

constexpr std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::empty_node:
      return "E_EMPTY_NODE";
    case ErrorCode::dup_id:
      return "E_DUP_ID";
    case ErrorCode::bad_prefix:
      return "E_BAD_PREFIX";
    case ErrorCode::missing_layer:
      return "E_MISSING_LAYER";
    case ErrorCode::bad_scale:
      return "E_BAD_SCALE";
    case ErrorCode::missing_score:
      return "E_MISSING_SCORE";
    case ErrorCode::unknown_node:
      return "E_UNKNOWN_NODE";
    case ErrorCode::range:
      return "E_RANGE";
    case ErrorCode::unknown_control:
      return "E_UNKNOWN_CONTROL";
    case ErrorCode::not_leaf:
      return "E_NOT_LEAF";
    case ErrorCode::parse:
      return "E_PARSE";
    case ErrorCode::shape:
      return "E_SHAPE";
    case ErrorCode::dup_key:
      return "E_DUP_KEY";
    case ErrorCode::nan:
      return "E_NAN";
  }
  return "E_UNKNOWN";
}

/// Parse-class failures exit the CLI with 2, validation-class with 1.
enum class ErrorClass { validation, parse };

constexpr ErrorClass error_class(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse:
    case ErrorCode::shape:
    case ErrorCode::dup_key:
    case ErrorCode::nan:
      return ErrorClass::parse;
    default:
      return ErrorClass::validation;
  }
}

/// One violation: the code, the offending id/field (may be empty), and a
/// human-readable message.
struct Issue {
  ErrorCode code{};
  std::string subject;
  std::string message;

  friend bool operator==(const Issue&, const Issue&) = default;
};

inline std::string issue_line(const Issue& issue) {
  std::string line{code_name(issue.code)};
  if (!issue.subject.empty()) {
    line += " \"";
    line += issue.subject;
    line += "\"";
  }
  line += ": ";
  line += issue.message;
  return line;
}

/// Carries every violation found, not just the first.
class Error : public std::runtime_error {
 public:
  explicit Error(std::vector<Issue> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  explicit Error(Issue issue) : Error(std::vector<Issue>{std::move(issue)}) {}

  const std::vector<Issue>& issues() const noexcept { return issues_; }

  bool has(ErrorCode code) const noexcept {
    for (const Issue& issue : issues_) {
      if (issue.code == code) {
        return true;
      }
    }
    return false;
  }

  bool has(ErrorCode code, std::string_view subject) const noexcept {
    for (const Issue& issue : issues_) {
      if (issue.code == code && issue.subject == subject) {
        return true;
      }
    }
    return false;
  }

 private:
  static std::string join(const std::vector<Issue>& issues) {
    std::string text;
    for (const Issue& issue : issues) {
      if (!text.empty()) {
        text += '\n';
      }
      text += issue_line(issue);
    }
    return text;
  }

  std::vector<Issue> issues_;
};

}  // namespace isolf
