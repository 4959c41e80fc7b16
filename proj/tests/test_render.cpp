#include <doctest.h>

#include <string>
#include <vector>

#include "condagg/render.hpp"
#include "support/fixtures.hpp"

using namespace condagg;

namespace {

// minimal well-formedness scan: prolog, balanced tags, quoted attributes
bool well_formed_xml(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  if (text.rfind("<?xml", 0) != 0) return false;
  pos = text.find("?>");
  if (pos == std::string::npos) return false;
  pos += 2;
  while (pos < text.size()) {
    std::size_t open = text.find('<', pos);
    if (open == std::string::npos) break;
    std::size_t close = text.find('>', open);
    if (close == std::string::npos) return false;
    std::string tag = text.substr(open + 1, close - open - 1);
    if (tag.empty()) return false;
    // no stray '<' inside a tag, quotes balanced
    if (tag.find('<') != std::string::npos) return false;
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else if (tag.back() != '/') {
      std::size_t name_end = tag.find_first_of(" \t\n");
      stack.push_back(tag.substr(0, name_end));
    }
    pos = close + 1;
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("svg step plot is well formed and labeled") {
  std::string svg = render::svg_step(fixtures::worked_example_survival(), "alpha", "value");
  CHECK(well_formed_xml(svg));
  CHECK(svg.find("<svg") != std::string::npos);
  // breakpoints and levels appear as tick labels
  CHECK(svg.find(">6<") != std::string::npos);
  CHECK(svg.find(">0.5<") != std::string::npos);
}

TEST_CASE("svg permutation diagram is well formed") {
  Arrangement arr = build_arrangement(fixtures::worked_example());
  PermutationTables pt = build_permutations(arr);
  std::string svg = render::svg_permutation(pt);
  CHECK(well_formed_xml(svg));
  // six nodes per axis
  CHECK(std::count(svg.begin(), svg.end(), 'c') >= 12);
}

TEST_CASE("ascii staircase shows the drops") {
  std::string art = render::ascii_step(fixtures::worked_example_survival(), 48);
  CHECK(art.find('#') != std::string::npos);
  CHECK(art.find("0.5") != std::string::npos);
  CHECK(art.find("6") != std::string::npos);
  // one row per distinct value
  CHECK(std::count(art.begin(), art.end(), '|') == 3);
}

TEST_CASE("ascii staircase of a constant function") {
  std::string art = render::ascii_step(StepFunction::constant(0), 32);
  CHECK(!art.empty());
}

TEST_CASE("ascii permutation diagram lists the maps") {
  Arrangement arr = build_arrangement(fixtures::worked_example());
  PermutationTables pt = build_permutations(arr);
  std::string art = render::ascii_permutation(pt);
  CHECK(art.find("(0) = 5") != std::string::npos);
  CHECK(art.find("i(1) = 2") != std::string::npos);
}
