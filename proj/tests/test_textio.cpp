#include <doctest.h>

#include "whittaker/compression.hpp"
#include "whittaker/textio.hpp"

using namespace whit;

TEST_CASE("row parsing") {
  CHECK(parse_rows("1 2 3\n\n# comment\n4 5  # trailing\n") == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
  CHECK_THROWS_AS(parse_rows("1 x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rows("1 2.5\n"), std::invalid_argument);
  CHECK(format_rows({{1, 2}, {3}}) == "1 2\n3\n");
}

TEST_CASE("fillings and tableaux from text") {
  Filling f = parse_filling("1 5\n3 3\n4 4\n2 2\n6 8\n");
  CHECK(f.columns == std::vector<std::vector<int>>{{1, 3, 4, 2, 6}, {5, 3, 4, 2, 8}});
  CHECK(parse_filling(format_filling(f)) == f);
  CHECK_THROWS_AS(parse_filling("1\n2 3\n"), std::invalid_argument);
  Tableau s = parse_tableau("1 3\n2\n");
  CHECK(s == Tableau{{{1, 3}, {2}}});
  CHECK(parse_gt("2 1 0\n2 0\n1\n") == GTPattern{{{2, 1, 0}, {2, 0}, {1}}});
  CHECK_THROWS_AS(parse_gt("2 1 0\n3 0\n1\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_text_file("/nonexistent/file"), std::invalid_argument);
}
