// isolf: evaluate an organization's security readiness against a six-layer
// framework schema from the command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "isolf/isolf.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw isolf::Error(
        {isolf::ErrorCode::parse, path, "cannot open file"});
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

isolf::FrameworkSchema load_schema(const std::string& ref) {
  if (ref == "builtin:misa") {
    return isolf::misa_framework();
  }
  if (ref.starts_with("builtin:")) {
    throw isolf::Error(
        {isolf::ErrorCode::parse, ref, "unknown builtin schema"});
  }
  return isolf::validate_schema(isolf::parse_schema(read_file(ref)));
}

isolf::RawScoresDoc load_scores(const std::string& path) {
  auto format = path.size() >= 5 && path.ends_with(".json")
                    ? isolf::ScoresFormat::json
                    : isolf::ScoresFormat::csv;
  return isolf::parse_scores(read_file(path), format);
}

void emit(const std::string& document, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << document;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw isolf::Error(
        {isolf::ErrorCode::parse, output_path, "cannot open file"});
  }
  out << document;
}

isolf::RenderFormat parse_format(const std::string& name) {
  if (name == "json") {
    return isolf::RenderFormat::json;
  }
  if (name == "csv") {
    return isolf::RenderFormat::csv;
  }
  return isolf::RenderFormat::table;
}

int exit_code_for(const isolf::Error& error) {
  for (const isolf::Issue& issue : error.issues()) {
    if (isolf::error_class(issue.code) == isolf::ErrorClass::parse) {
      return 2;
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isolf: six-layer security readiness assessment"};
  app.require_subcommand(1);

  std::string schema_ref;
  std::string scores_path;
  std::string format_name = "table";
  int precision = 1;
  std::string output_path;
  std::string leaf_id;

  auto add_common = [&](CLI::App* cmd, bool needs_scores,
                        bool scores_optional = false) {
    cmd->add_option("--schema", schema_ref,
                    "schema reference: builtin:misa or a schema JSON file")
        ->required();
    if (needs_scores) {
      auto* opt = cmd->add_option(
          "--scores", scores_path,
          "scores file (CSV, or JSON when the path ends in .json)");
      if (!scores_optional) {
        opt->required();
      }
    }
    cmd->add_option("--output", output_path,
                    "write the document here instead of standard output");
  };
  auto add_render = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--precision", precision,
                    "decimal places for displayed values")
        ->check(CLI::Range(0, 6))
        ->capture_default_str();
  };

  auto* assess = app.add_subcommand(
      "assess", "evaluate scores against a schema and render the result");
  add_common(assess, true);
  add_render(assess);

  auto* validate = app.add_subcommand(
      "validate", "check a schema, and scores against it, reporting every "
                  "violation");
  add_common(validate, true, /*scores_optional=*/true);

  auto* schema_cmd =
      app.add_subcommand("schema", "export a schema as a JSON document");
  add_common(schema_cmd, false);

  auto* sensitivity_cmd = app.add_subcommand(
      "sensitivity", "rate of change of the overall score per leaf score");
  add_common(sensitivity_cmd, true, /*scores_optional=*/true);
  add_render(sensitivity_cmd);
  sensitivity_cmd->add_option("--leaf", leaf_id,
                              "report a single leaf instead of the table");

  auto* chart = app.add_subcommand(
      "chart", "per-layer ideal/achievement/priority chart data");
  add_common(chart, true);
  add_render(chart);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    isolf::RenderOptions opts{parse_format(format_name), precision};
    isolf::FrameworkSchema schema = load_schema(schema_ref);

    if (assess->parsed()) {
      auto doc = load_scores(scores_path);
      auto assessment = isolf::bind_assessment(schema, doc.to_map(), doc.name);
      auto result = isolf::evaluate(schema, assessment);
      emit(isolf::render_result(result, schema, opts), output_path);
    } else if (validate->parsed()) {
      std::string report = "schema OK: " + schema.name() + " (" +
                           std::to_string(schema.node_count()) + " nodes, " +
                           std::to_string(schema.leaf_count()) +
                           " leaves, scale " +
                           isolf::format_exact(schema.scale()) + ")\n";
      if (!scores_path.empty()) {
        auto doc = load_scores(scores_path);
        isolf::bind_assessment(schema, doc.to_map(), doc.name);
        report += "scores OK: " + std::to_string(doc.entries.size()) +
                  " scores cover every leaf\n";
      }
      emit(report, output_path);
    } else if (schema_cmd->parsed()) {
      emit(isolf::export_schema(schema), output_path);
    } else if (sensitivity_cmd->parsed()) {
      if (!leaf_id.empty()) {
        emit(isolf::format_exact(isolf::sensitivity(schema, leaf_id)) + "\n",
             output_path);
      } else {
        emit(isolf::render_sensitivities(schema, opts), output_path);
      }
    } else if (chart->parsed()) {
      auto doc = load_scores(scores_path);
      auto assessment = isolf::bind_assessment(schema, doc.to_map(), doc.name);
      auto gaps = isolf::gap_report(isolf::evaluate(schema, assessment));
      emit(isolf::render_chart_data(gaps, opts), output_path);
    }
  } catch (const isolf::Error& error) {
    for (const isolf::Issue& issue : error.issues()) {
      std::cerr << isolf::issue_line(issue) << '\n';
    }
    return exit_code_for(error);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
  return 0;
}
