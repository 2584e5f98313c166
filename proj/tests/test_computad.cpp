#include <doctest.h>

#include "computads/computad.hpp"

using namespace computads;

namespace {

Computad triangle(const std::string& name) {
  return Computad(name, {"a1", "a2", "a3"},
                  {{"f", LabelMultiset{"a1", "a2"}, LabelMultiset{"a3"}}});
}

}  // namespace

TEST_CASE("cells are stored sorted regardless of input order") {
  Computad x("X", {"c", "a", "b"},
             {{"g", LabelMultiset{"b"}, LabelMultiset{"c"}},
              {"f", LabelMultiset{"a"}, LabelMultiset{"b"}}});
  CHECK(x.cells2() == std::vector<Label>{"a", "b", "c"});
  REQUIRE(x.cells3().size() == 2);
  CHECK(x.cells3()[0].name == "f");
  CHECK(x.cells3()[1].name == "g");
}

TEST_CASE("equality compares cells, not names") {
  CHECK(triangle("A") == triangle("B"));
  CHECK(triangle("A").renamed("Z") == triangle("A"));
  CHECK(triangle("A").renamed("Z").name() == "Z");

  Computad other("A", {"a1", "a2", "a3"},
                 {{"f", LabelMultiset{"a2", "a1"}, LabelMultiset{"a3"}}});
  CHECK(other == triangle("A"));  // multiset boundaries ignore listed order

  Computad different("A", {"a1", "a2", "a3"},
                     {{"f", LabelMultiset{"a1"}, LabelMultiset{"a3"}}});
  CHECK_FALSE(different == triangle("A"));
}

TEST_CASE("cell lookup") {
  Computad a = triangle("A");
  CHECK(a.has_cell2("a2"));
  CHECK_FALSE(a.has_cell2("f"));
  const ThreeCell* f = a.find_cell3("f");
  REQUIRE(f != nullptr);
  CHECK(f->src == LabelMultiset{"a1", "a2"});
  CHECK(f->tgt == LabelMultiset{"a3"});
  CHECK(a.find_cell3("nope") == nullptr);
}

TEST_CASE("empty computad is valid") {
  Computad e("E", {}, {});
  CHECK(is_valid(e));
  CHECK(validate_computad(e).empty());
}

TEST_CASE("a 3-cell may have empty source and target") {
  Computad x("X", {"a"}, {{"f", LabelMultiset{}, LabelMultiset{}}});
  CHECK(is_valid(x));
}

TEST_CASE("validation diagnostics") {
  SUBCASE("duplicate 2-cell label") {
    Computad x("X", {"a", "a"}, {});
    std::vector<std::string> problems = validate_computad(x);
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("duplicate") != std::string::npos);
    CHECK(problems[0].find("a") != std::string::npos);
  }
  SUBCASE("duplicate 3-cell name") {
    Computad x("X", {"a"},
               {{"f", LabelMultiset{"a"}, LabelMultiset{}},
                {"f", LabelMultiset{}, LabelMultiset{"a"}}});
    std::vector<std::string> problems = validate_computad(x);
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("duplicate") != std::string::npos);
    CHECK(problems[0].find("f") != std::string::npos);
  }
  SUBCASE("boundary mentions an undeclared 2-cell") {
    Computad x("X", {"a"}, {{"f", LabelMultiset{"a", "b"}, LabelMultiset{}}});
    std::vector<std::string> problems = validate_computad(x);
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("b") != std::string::npos);
    CHECK_FALSE(is_valid(x));
  }
  SUBCASE("several problems are all reported") {
    Computad x("X", {"a", "a"}, {{"f", LabelMultiset{"z"}, LabelMultiset{}}});
    CHECK(validate_computad(x).size() == 2);
  }
}
