#include "jnt/expected.hpp"

namespace jnt {

const std::vector<ExpectedRow>& expected_table() {
  // line group v k delta size sc label_t label_lambda lambda2
  static const std::vector<ExpectedRow> rows = {
      {1, "L2_11", 11, 5, 3, 11, false, 2, 2, 2},
      {2, "A7", 15, 7, 4, 15, false, 0, 0, 3},
      {3, "M11", 12, 6, 3, 22, true, 0, 0, 5},
      {4, "M22", 22, 6, 4, 77, false, 3, 1, 5},
      {5, "M22", 22, 7, 4, 176, false, 0, 0, 16},
      {6, "M22", 22, 8, 4, 330, false, 0, 0, 40},
      {7, "M22", 22, 10, 4, 616, false, 0, 0, 120},
      {8, "M22_2", 22, 6, 4, 77, false, 3, 1, 5},
      {9, "M22_2", 22, 7, 3, 352, false, 0, 0, 32},
      {10, "M22_2", 22, 8, 4, 330, false, 0, 0, 40},
      {11, "M22_2", 22, 10, 4, 616, false, 0, 0, 120},
      {12, "M23", 23, 7, 4, 253, false, 4, 1, 21},
      {13, "M23", 23, 8, 4, 506, false, 0, 0, 56},
      {14, "M23", 23, 11, 4, 1288, false, 0, 0, 280},
      {15, "M24", 24, 8, 4, 759, false, 5, 1, 77},
      {16, "M24", 24, 12, 4, 2576, true, 0, 0, 616},
      {17, "HS", 176, 50, 36, 176, false, 2, 14, 14},
      {18, "HS", 176, 56, 32, 1100, false, 2, 110, 110},
      {19, "Co3", 276, 6, 3, 708400, false, 2, 280, 280},
      {20, "Co3", 276, 36, 24, 170775, false, 2, 2835, 2835},
      {21, "Co3", 276, 100, 50, 11178, false, 2, 1458, 1458},
      {22, "Co3", 276, 126, 36, 655776, false, 2, 136080, 136080},
      {23, "A7", 15, 3, 2, 35, false, 0, 0, 1},
      {24, "M11", 11, 5, 2, 66, false, 4, 1, 12},
      {25, "M11", 12, 6, 2, 110, true, 0, 0, 25},
      {26, "M12", 12, 6, 2, 132, true, 5, 1, 30},
      {27, "M24", 24, 12, 2, 35420, true, 5, 660, 8470},
  };
  return rows;
}

std::vector<ExpectedRow> expected_rows_for(const std::string& group, unsigned v) {
  std::vector<ExpectedRow> out;
  for (const auto& r : expected_table()) {
    if (group == r.group && v == r.v) out.push_back(r);
  }
  return out;
}

} // namespace jnt
