#include <doctest.h>

#include "condagg/sets.hpp"

using namespace condagg;

TEST_CASE("index set basics") {
  IndexSet s = IndexSet::of({1, 3});
  CHECK(s.contains(1));
  CHECK(!s.contains(2));
  CHECK(s.cardinality() == 2);
  CHECK(s.complement(3) == IndexSet::of({2}));
  CHECK(s.to_string() == "{1,3}");
  CHECK(IndexSet::empty().to_string() == "{}");
  CHECK(IndexSet::of({1, 3}).subset_of(IndexSet::of({1, 2, 3})));
  CHECK(!IndexSet::of({1, 3}).subset_of(IndexSet::of({1, 2})));
}

TEST_CASE("orders") {
  // canonical: cardinality first
  CHECK(canonical_less(IndexSet::of({2}), IndexSet::of({1, 3})));
  CHECK(canonical_less(IndexSet::of({1, 2}), IndexSet::of({1, 3})));
  CHECK(canonical_less(IndexSet::empty(), IndexSet::of({1})));
  // lexicographic: first differing element decides, prefixes first
  CHECK(lex_less(IndexSet::of({1, 3}), IndexSet::of({2})));
  CHECK(lex_less(IndexSet::of({1}), IndexSet::of({1, 3})));
  CHECK(lex_less(IndexSet::empty(), IndexSet::of({1})));
  CHECK(!lex_less(IndexSet::of({2}), IndexSet::of({1, 3})));
}

TEST_CASE("collection validation") {
  Collection c = validate_collection(3, {IndexSet::empty(), IndexSet::of({1}), IndexSet::of({2}),
                                         IndexSet::of({3}), IndexSet::of({1, 3}),
                                         IndexSet::of({1, 2, 3})});
  CHECK(c.size() == 6);
  CHECK(c.contains(IndexSet::of({1, 3})));
  CHECK(!c.contains(IndexSet::of({1, 2})));

  CHECK(validate_collection(1, {IndexSet::empty(), IndexSet::of({1})}).size() == 2);

  CHECK_THROWS_WITH_AS(validate_collection(3, {IndexSet::empty(), IndexSet::of({1})}),
                       doctest::Contains("MissingFullSet"), Error);
  CHECK_THROWS_WITH_AS(validate_collection(3, {IndexSet::of({1}), IndexSet::of({1, 2, 3})}),
                       doctest::Contains("MissingEmptySet"), Error);
  CHECK_THROWS_WITH_AS(validate_collection(2, {IndexSet::empty(), IndexSet::of({3}), IndexSet::of({1, 2})}),
                       doctest::Contains("OutOfRangeIndex"), Error);

  // duplicates collapse
  Collection d = validate_collection(2, {IndexSet::empty(), IndexSet::of({1}), IndexSet::of({1}),
                                         IndexSet::of({1, 2})});
  CHECK(d.size() == 3);
}

TEST_CASE("complement collection is an involution with the same size") {
  Collection c = validate_collection(3, {IndexSet::empty(), IndexSet::of({1}), IndexSet::of({2}),
                                         IndexSet::of({3}), IndexSet::of({1, 3}),
                                         IndexSet::of({1, 2, 3})});
  Collection hat = complement_collection(c);
  CHECK(hat.size() == c.size());
  // complements of the worked collection
  CHECK(hat.contains(IndexSet::of({2, 3})));
  CHECK(hat.contains(IndexSet::of({1, 2})));
  CHECK(hat.contains(IndexSet::of({2})));
  CHECK(hat.contains(IndexSet::empty()));
  CHECK(complement_collection(hat) == c);

  Collection minimal = validate_collection(2, {IndexSet::empty(), IndexSet::of({1, 2})});
  CHECK(complement_collection(minimal) == minimal);
}

TEST_CASE("powerset collection") {
  CHECK(powerset_collection(3).size() == 8);
  CHECK(powerset_collection(3).is_full_powerset());
  CHECK_THROWS_AS(powerset_collection(17), Error);
}
