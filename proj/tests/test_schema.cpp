#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "isolf/assessment.hpp"
#include "isolf/misa.hpp"
#include "isolf/schema.hpp"
#include "support/fixtures.hpp"
#include "support/random_tree.hpp"

using namespace isolf;

namespace {

RawSchemaDoc small_raw() {
  RawSchemaDoc raw;
  raw.name = "small";
  raw.scale = 100.0;
  raw.layer(Layer::organization).emplace({RawNode{"1", "One", {}}});
  raw.layer(Layer::stakeholder).emplace({RawNode{"2", "Two", {}}});
  raw.layer(Layer::tool_technology).emplace({RawNode{"3", "Three", {}}});
  raw.layer(Layer::policy).emplace({RawNode{"4", "Four", {}}});
  raw.layer(Layer::culture).emplace({RawNode{"5", "Five", {}}});
  raw.layer(Layer::knowledge).emplace({RawNode{"6", "Six", {}}});
  return raw;
}

Error validation_error(const RawSchemaDoc& raw) {
  try {
    validate_schema(raw);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected validation to fail");
  return Error(std::vector<Issue>{});
}

}  // namespace

TEST_CASE("valid schema passes and keeps structure") {
  RawSchemaDoc raw = small_raw();
  raw.layer(Layer::organization)
      ->push_back({"9",
                   "Nested",
                   {{"9.1", "Sub A", {}},
                    {"9.2", "Sub B", {{"9.2.1", "Deep", {}}}}}});
  FrameworkSchema schema = validate_schema(raw);
  CHECK(schema.node_count() == 10);
  CHECK(schema.leaf_count() == 8);
  REQUIRE(schema.find("9.2") != nullptr);
  CHECK_FALSE(schema.find("9.2")->is_leaf());
  CHECK(schema.layer_of("9.2.1") == Layer::organization);
  CHECK(schema.leaf_ids().front() == "1");
}

TEST_CASE("unpopulated layer is rejected") {
  SECTION("layer absent from the document") {
    RawSchemaDoc raw = small_raw();
    raw.layer(Layer::culture).reset();
    Error e = validation_error(raw);
    CHECK(e.has(ErrorCode::missing_layer, "culture"));
    CHECK_FALSE(e.has(ErrorCode::empty_node));
  }
  SECTION("layer declared with an empty node list") {
    RawSchemaDoc raw = small_raw();
    raw.layer(Layer::culture)->clear();
    Error e = validation_error(raw);
    CHECK(e.has(ErrorCode::empty_node, "culture"));
    CHECK(e.has(ErrorCode::missing_layer, "culture"));
  }
}

TEST_CASE("duplicate ids are rejected") {
  RawSchemaDoc raw = small_raw();
  raw.layer(Layer::policy)->push_back({"5.1", "A", {}});
  raw.layer(Layer::knowledge)->push_back({"5.1", "B", {}});
  Error e = validation_error(raw);
  CHECK(e.has(ErrorCode::dup_id, "5.1"));
}

TEST_CASE("child ids must extend the parent id") {
  RawSchemaDoc raw = small_raw();
  (*raw.layer(Layer::organization))[0].children.push_back({"7.1", "Bad", {}});
  Error e = validation_error(raw);
  CHECK(e.has(ErrorCode::bad_prefix, "7.1"));

  SECTION("dotted prefix needs the separator") {
    RawSchemaDoc raw2 = small_raw();
    (*raw2.layer(Layer::organization))[0].children.push_back(
        {"12", "Bad", {}});
    CHECK(validation_error(raw2).has(ErrorCode::bad_prefix, "12"));
  }
}

TEST_CASE("scale must be positive") {
  for (double bad : {0.0, -5.0}) {
    RawSchemaDoc raw = small_raw();
    raw.scale = bad;
    CHECK(validation_error(raw).has(ErrorCode::bad_scale));
  }
}

TEST_CASE("empty id or title is rejected") {
  RawSchemaDoc raw = small_raw();
  (*raw.layer(Layer::policy))[0].title = "";
  (*raw.layer(Layer::culture))[0].id = "";
  Error e = validation_error(raw);
  CHECK(e.has(ErrorCode::shape, "4"));
  CHECK(e.has(ErrorCode::shape));
}

TEST_CASE("validation reports every violation at once") {
  RawSchemaDoc raw = small_raw();
  raw.scale = -1.0;
  raw.layer(Layer::knowledge).reset();
  raw.layer(Layer::policy)->push_back({"1", "Duplicate", {}});
  Error e = validation_error(raw);
  CHECK(e.issues().size() == 3);
  CHECK(e.has(ErrorCode::bad_scale));
  CHECK(e.has(ErrorCode::missing_layer, "knowledge"));
  CHECK(e.has(ErrorCode::dup_id, "1"));

  SECTION("identical input yields an identical error set") {
    Error again = validation_error(raw);
    CHECK(again.issues() == e.issues());
  }
}

TEST_CASE("binding accepts the published control scores") {
  FrameworkSchema schema = misa_framework();
  Assessment assessment =
      bind_assessment(schema, testsupport::table3_scores(), "table3");
  CHECK(assessment.name() == "table3");
  CHECK(assessment.scores().size() == 8);
  CHECK(assessment.score_of("6") == 85.0);
}

TEST_CASE("binding reports missing, unknown, and out-of-range scores") {
  FrameworkSchema schema = misa_framework();

  SECTION("missing leaf") {
    auto scores = testsupport::table3_scores();
    scores.erase("4");
    try {
      bind_assessment(schema, scores);
      FAIL("expected E_MISSING_SCORE");
    } catch (const Error& e) {
      REQUIRE(e.issues().size() == 1);
      CHECK(e.has(ErrorCode::missing_score, "4"));
    }
  }

  SECTION("unknown id and internal node") {
    RawSchemaDoc raw;
    raw.name = "nested";
    raw.scale = 100.0;
    for (Layer layer : all_layers) {
      raw.layer(layer).emplace();
    }
    raw.layer(Layer::organization)
        ->push_back({"1", "Root", {{"1.1", "Leaf", {}}}});
    for (int i = 2; i <= 6; ++i) {
      raw.layer(all_layers[static_cast<std::size_t>(i) - 1])
          ->push_back({std::to_string(i), "Leaf", {}});
    }
    FrameworkSchema nested = validate_schema(raw);

    std::map<std::string, double> scores{{"1.1", 10.0}, {"2", 10.0},
                                         {"3", 10.0},   {"4", 10.0},
                                         {"5", 10.0},   {"6", 10.0}};
    scores["1"] = 50.0;     // internal: computed, not scoreable
    scores["9.9"] = 50.0;   // not in schema
    try {
      bind_assessment(nested, scores);
      FAIL("expected E_UNKNOWN_NODE");
    } catch (const Error& e) {
      CHECK(e.has(ErrorCode::unknown_node, "1"));
      CHECK(e.has(ErrorCode::unknown_node, "9.9"));
      CHECK(e.issues().size() == 2);
    }
  }

  SECTION("out of range") {
    auto scores = testsupport::table3_scores();
    scores["5"] = 150.0;
    try {
      bind_assessment(schema, scores);
      FAIL("expected E_RANGE");
    } catch (const Error& e) {
      REQUIRE(e.issues().size() == 1);
      CHECK(e.has(ErrorCode::range, "5"));
      CHECK(e.issues()[0].message.find("150") != std::string::npos);
    }
    scores["5"] = -0.5;
    CHECK_THROWS_AS(bind_assessment(schema, scores), Error);
  }

  SECTION("boundary scores bind") {
    auto scores = testsupport::table3_scores();
    scores["5"] = 0.0;
    scores["8"] = 100.0;
    CHECK_NOTHROW(bind_assessment(schema, scores));
  }
}

TEST_CASE("ids resolve uniquely and every leaf has a layer") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 30; ++i) {
    FrameworkSchema schema = testsupport::random_schema(rng);
    std::set<std::string> ids;
    std::size_t count = 0;
    schema.for_each_node([&](const SchemaNode& node, Layer, std::size_t) {
      ids.insert(node.id);
      ++count;
      CHECK(schema.find(node.id) != nullptr);
    });
    CHECK(ids.size() == count);
    for (const std::string& id : schema.leaf_ids()) {
      CHECK(schema.layer_of(id).has_value());
    }
  }
}

TEST_CASE("binding succeeds iff scores cover exactly the leaves in range") {
  std::mt19937 rng(20260809);
  for (int i = 0; i < 50; ++i) {
    FrameworkSchema schema = testsupport::random_schema(rng);
    auto scores = testsupport::random_scores(rng, schema);
    CHECK_NOTHROW(bind_assessment(schema, scores));

    auto missing = scores;
    missing.erase(missing.begin());
    CHECK_THROWS_AS(bind_assessment(schema, missing), Error);

    auto extra = scores;
    extra["no.such.node"] = 1.0;
    CHECK_THROWS_AS(bind_assessment(schema, extra), Error);

    auto out_of_range = scores;
    out_of_range.begin()->second = schema.scale() * 1.5;
    CHECK_THROWS_AS(bind_assessment(schema, out_of_range), Error);
  }
}
