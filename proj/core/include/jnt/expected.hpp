#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jnt {

// One row of the reference classification: every code the toolkit is expected
// to find, with the properties it must verify. label_t == 0 means the row has
// no published design label beyond being a 2-design.
struct ExpectedRow {
  unsigned line;             // 1..27, stable row id used in reports
  const char* group;         // catalog entry name
  unsigned v;
  unsigned k;
  unsigned delta;
  std::uint64_t size;
  bool self_complementary;
  unsigned label_t;          // claimed design strength (0 = none claimed)
  std::uint64_t label_lambda;
  std::uint64_t lambda2;     // every row is a 2-design with this lambda
};

const std::vector<ExpectedRow>& expected_table();

// Rows for one (group, degree) pair, in line order.
std::vector<ExpectedRow> expected_rows_for(const std::string& group, unsigned v);

} // namespace jnt
