#include <doctest.h>

#include "condagg/choquet.hpp"
#include "condagg/equivalence.hpp"
#include "support/fixtures.hpp"

using namespace condagg;
using fixtures::R;
using fixtures::vec;

TEST_CASE("max and sum instances with a common survival function") {
  auto [left, right] = fixtures::equivalence_pair_one();
  CHECK(integral_equivalent(left, right));
  CHECK(survival_agg_scan(build_arrangement(left)) == fixtures::equivalence_pair_one_survival());
  CHECK(survival_agg_scan(build_arrangement(right)) == fixtures::equivalence_pair_one_survival());

  EquivalenceReport report = equivalence_condition(left, right);
  CHECK(report.equivalent);
  CHECK(report.left_profile == report.right_profile);
  CHECK(report.left_profile.size() == 3);
}

TEST_CASE("two vectors under the same family with a common survival function") {
  auto [left, right] = fixtures::equivalence_pair_two();
  CHECK(integral_equivalent(left, right));
  CHECK(survival_agg_scan(build_arrangement(left)) == fixtures::equivalence_pair_two_survival());
  CHECK(equivalence_condition(left, right).equivalent);
  // equal survival functions force equal integrals
  CHECK(choquet_generalized(left).value == choquet_generalized(right).value);
}

TEST_CASE("reflexivity") {
  Instance inst = fixtures::worked_example();
  CHECK(integral_equivalent(inst, inst));
  CHECK(equivalence_condition(inst, inst).equivalent);
}

TEST_CASE("perturbing an attained level breaks equivalence with a witness") {
  Instance base = fixtures::worked_example();
  // mu({2}) = 0.5 is attained; lower it to 0.4
  MonotoneMeasure perturbed = validate_measure(base.measure.domain(),
                                               {{IndexSet::empty(), R("0")},
                                                {IndexSet::of({2}), R("0.4")},
                                                {IndexSet::of({1, 2}), R("0.5")},
                                                {IndexSet::of({1, 3}), R("0.5")},
                                                {IndexSet::of({2, 3}), R("0.7")},
                                                {IndexSet::of({1, 2, 3}), R("1")}});
  Instance other = make_instance(base.fca, perturbed, base.x);
  CHECK(!integral_equivalent(base, other));
  EquivalenceReport report = equivalence_condition(base, other);
  CHECK(!report.equivalent);
  REQUIRE(report.witness.has_value());
  // both checks flip together
  CHECK(report.equivalent == integral_equivalent(base, other));
}

TEST_CASE("perturbing the unattained level keeps equivalence") {
  Instance base = fixtures::worked_example();
  // mu({2,3}) = 0.7 is never attained; 0.65 leaves the survival function alone
  MonotoneMeasure perturbed = validate_measure(base.measure.domain(),
                                               {{IndexSet::empty(), R("0")},
                                                {IndexSet::of({2}), R("0.5")},
                                                {IndexSet::of({1, 2}), R("0.5")},
                                                {IndexSet::of({1, 3}), R("0.5")},
                                                {IndexSet::of({2, 3}), R("0.65")},
                                                {IndexSet::of({1, 2, 3}), R("1")}});
  Instance other = make_instance(base.fca, perturbed, base.x);
  CHECK(integral_equivalent(base, other));
  CHECK(equivalence_condition(base, other).equivalent);
}

TEST_CASE("instances of different sizes can be equivalent") {
  // a two-set collection against the three-set collection of the first pair
  auto [left, right] = fixtures::equivalence_pair_one();
  Collection two = validate_collection(3, {IndexSet::empty(), IndexSet::full(3)});
  MonotoneMeasure mu = validate_measure(complement_collection(two),
                                        {{IndexSet::empty(), R("0")}, {IndexSet::full(3), R("1")}});
  Instance coarse = make_instance(AggregatorFamily(two, AggregatorKind::max()), mu,
                                  vec({"2", "5", "2"}));
  // survival: 1 on [0, 5), then 0 — not equivalent to the pair
  CHECK(!integral_equivalent(coarse, left));
  CHECK(!equivalence_condition(coarse, left).equivalent);
}
