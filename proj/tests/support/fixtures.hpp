#pragma once

#include <map>
#include <string>

namespace testsupport {

// The published illustrative control scores for the built-in framework.
inline std::map<std::string, double> table3_scores() {
  return {{"5", 54.5}, {"8", 50.0}, {"1", 51.1}, {"7", 55.8},
          {"6", 85.0}, {"2", 72.0}, {"3", 47.5}, {"4", 59.0}};
}

inline constexpr const char* table3_csv =
    "node_id,score\n5,54.5\n8,50\n1,51.1\n7,55.8\n6,85\n2,72\n3,47.5\n4,59\n";

inline constexpr double table3_overall = 57.158333333333331;

}  // namespace testsupport
