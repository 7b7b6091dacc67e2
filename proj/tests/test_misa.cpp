#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "isolf/misa.hpp"

using namespace isolf;

TEST_CASE("six distinct layers with descriptions") {
  std::set<Layer> seen(all_layers.begin(), all_layers.end());
  REQUIRE(seen.size() == 6);
  for (Layer layer : all_layers) {
    CHECK_FALSE(layer_name(layer).empty());
    CHECK_FALSE(layer_description(layer).empty());
    REQUIRE(layer_from_name(layer_name(layer)) == layer);
  }
  CHECK(layer_from_name("organisation") == std::nullopt);
  CHECK(layer_index(Layer::organization) == 0);
  CHECK(layer_index(Layer::knowledge) == 5);
}

TEST_CASE("built-in framework structure") {
  FrameworkSchema schema = misa_framework();

  CHECK(schema.name() == "MISA");
  CHECK(schema.scale() == 100.0);
  CHECK(schema.node_count() == 8);
  CHECK(schema.leaf_count() == 8);

  // every control is a leaf
  schema.for_each_node([](const SchemaNode& node, Layer, std::size_t depth) {
    CHECK(node.is_leaf());
    CHECK(depth == 0);
  });

  SECTION("layer roots follow the control mapping") {
    auto ids = [&](Layer layer) {
      std::vector<std::string> out;
      for (const SchemaNode& root : schema.roots(layer)) {
        out.push_back(root.id);
      }
      return out;
    };
    CHECK(ids(Layer::organization) == std::vector<std::string>{"5"});
    CHECK(ids(Layer::stakeholder) == std::vector<std::string>{"8"});
    CHECK(ids(Layer::tool_technology) == std::vector<std::string>{"1", "7"});
    CHECK(ids(Layer::policy) == std::vector<std::string>{"6", "2"});
    CHECK(ids(Layer::culture) == std::vector<std::string>{"3"});
    CHECK(ids(Layer::knowledge) == std::vector<std::string>{"4"});
  }

  SECTION("repeated construction is structurally identical") {
    CHECK(schema == misa_framework());
  }

  SECTION("node titles") {
    REQUIRE(schema.find("5") != nullptr);
    CHECK(schema.find("5")->title == "Security Program");
    CHECK(schema.find("6")->title == "Multimedia Information Sharing");
    CHECK(schema.find("9") == nullptr);
  }
}

TEST_CASE("control to layer mapping") {
  CHECK(layer_of_control(5) == Layer::organization);
  CHECK(layer_of_control(8) == Layer::stakeholder);
  CHECK(layer_of_control(1) == Layer::tool_technology);
  CHECK(layer_of_control(7) == Layer::tool_technology);
  CHECK(layer_of_control(6) == Layer::policy);
  CHECK(layer_of_control(2) == Layer::policy);
  CHECK(layer_of_control(3) == Layer::culture);
  CHECK(layer_of_control(4) == Layer::knowledge);

  for (int bad : {0, 9, -1, 100}) {
    try {
      layer_of_control(bad);
      FAIL("expected E_UNKNOWN_CONTROL for " << bad);
    } catch (const Error& e) {
      CHECK(e.has(ErrorCode::unknown_control, std::to_string(bad)));
    }
  }
}

TEST_CASE("controls cover the six layers") {
  std::map<Layer, int> counts;
  for (int control = 1; control <= 8; ++control) {
    ++counts[layer_of_control(control)];
  }
  REQUIRE(counts.size() == 6);
  CHECK(counts[Layer::tool_technology] == 2);
  CHECK(counts[Layer::policy] == 2);
  CHECK(counts[Layer::organization] == 1);
  CHECK(counts[Layer::stakeholder] == 1);
  CHECK(counts[Layer::culture] == 1);
  CHECK(counts[Layer::knowledge] == 1);

  // metadata table agrees with the mapping
  std::set<int> numbers;
  for (const MisaControl& control : misa_controls) {
    CHECK(numbers.insert(control.control_number).second);
    CHECK(control.layer == layer_of_control(control.control_number));
    CHECK_FALSE(control.description.empty());
    CHECK_FALSE(control.title.empty());
  }
  REQUIRE(numbers.size() == 8);
  CHECK(*numbers.begin() == 1);
  CHECK(*numbers.rbegin() == 8);
}
