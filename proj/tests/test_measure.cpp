#include <doctest.h>

#include "condagg/measure.hpp"
#include "support/fixtures.hpp"

using namespace condagg;
using fixtures::R;

TEST_CASE("measure validation accepts the worked table") {
  Collection domain = validate_collection(
      3, {IndexSet::empty(), IndexSet::of({2}), IndexSet::of({1, 2}), IndexSet::of({1, 3}),
          IndexSet::of({2, 3}), IndexSet::of({1, 2, 3})});
  MonotoneMeasure mu = validate_measure(domain, {{IndexSet::of({1, 2, 3}), R("1")},
                                                 {IndexSet::of({2, 3}), R("0.7")},
                                                 {IndexSet::of({1, 3}), R("0.5")},
                                                 {IndexSet::of({1, 2}), R("0.5")},
                                                 {IndexSet::of({2}), R("0.5")},
                                                 {IndexSet::empty(), R("0")}});
  CHECK(mu.value(IndexSet::of({2, 3})) == R("0.7"));
  CHECK(mu.is_capacity());
}

TEST_CASE("measure validation rejects defects") {
  Collection domain = validate_collection(2, {IndexSet::empty(), IndexSet::of({2}),
                                              IndexSet::of({1, 2})});
  CHECK_THROWS_WITH_AS(validate_measure(domain, {{IndexSet::empty(), R("0.1")},
                                                 {IndexSet::of({2}), R("0.5")},
                                                 {IndexSet::of({1, 2}), R("1")}}),
                       doctest::Contains("NonZeroEmptySet"), Error);
  CHECK_THROWS_WITH_AS(validate_measure(domain, {{IndexSet::empty(), R("0")},
                                                 {IndexSet::of({2}), R("0.6")},
                                                 {IndexSet::of({1, 2}), R("0.5")}}),
                       doctest::Contains("MonotonicityViolation: {2} ⊆ {1,2}"), Error);
  CHECK_THROWS_WITH_AS(validate_measure(domain, {{IndexSet::empty(), R("0")},
                                                 {IndexSet::of({2}), R("-0.1")},
                                                 {IndexSet::of({1, 2}), R("1")}}),
                       doctest::Contains("NegativeValue"), Error);
  CHECK_THROWS_WITH_AS(validate_measure(domain, {{IndexSet::empty(), R("0")},
                                                 {IndexSet::of({2}), R("0")},
                                                 {IndexSet::of({1, 2}), R("0")}}),
                       doctest::Contains("ZeroFullSet"), Error);
  CHECK_THROWS_WITH_AS(validate_measure(domain, {{IndexSet::empty(), R("0")},
                                                 {IndexSet::of({1, 2}), R("1")}}),
                       doctest::Contains("missing value"), Error);
}

TEST_CASE("monotonicity holds for every comparable pair") {
  // exhaustive scan over a full powerset domain
  MonotoneMeasure mu = fixtures::person_measure(fixtures::anthony());
  const auto& sets = mu.domain().sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (sets[i].subset_of(sets[j])) CHECK(mu.value(sets[i]) <= mu.value(sets[j]));
    }
  }
}

TEST_CASE("special measure factories") {
  Collection domain = powerset_collection(3);
  MonotoneMeasure top = greatest_measure(domain);
  CHECK(top.value(IndexSet::of({2})) == 1);
  CHECK(top.value(IndexSet::empty()) == 0);

  MonotoneMeasure bottom = weakest_measure(domain);
  CHECK(bottom.value(IndexSet::of({1, 2})) == 0);
  CHECK(bottom.value(IndexSet::full(3)) == 1);

  MonotoneMeasure sym = symmetric_measure(3, {R("0"), R("0.2"), R("0.6"), R("1")});
  CHECK(sym.value(IndexSet::of({1, 3})) == R("0.6"));
  CHECK_THROWS_AS(symmetric_measure(3, {R("0"), R("0.7"), R("0.6"), R("1")}), Error);
  CHECK_THROWS_AS(symmetric_measure(3, {R("0.1"), R("0.2"), R("0.6"), R("1")}), Error);

  MonotoneMeasure poss = possibility_measure(3, {R("0.5"), R("1"), R("0.3")});
  CHECK(poss.value(IndexSet::of({1, 3})) == R("0.5"));
  CHECK(poss.value(IndexSet::empty()) == 0);
  CHECK_THROWS_AS(possibility_measure(3, {R("0.5"), R("0.9"), R("0.3")}), Error);

  MonotoneMeasure nec = necessity_measure(3, {R("0.5"), R("1"), R("0.3")});
  CHECK(nec.value(IndexSet::full(3)) == 1);
  CHECK(nec.value(IndexSet::of({2})) == R("0.5"));   // 1 - max(0.5, 0.3)
  CHECK(nec.value(IndexSet::of({1, 2})) == R("0.7"));

  MonotoneMeasure add = additive_measure(3, {R("0.25"), R("0.5"), R("0.25")});
  CHECK(add.value(IndexSet::of({1, 3})) == R("0.5"));
  CHECK(add.value(IndexSet::full(3)) == 1);
}
