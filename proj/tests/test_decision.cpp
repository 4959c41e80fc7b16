#include <doctest.h>

#include "condagg/decision.hpp"
#include "support/fixtures.hpp"

using namespace condagg;
using fixtures::R;
using fixtures::vec;

TEST_CASE("criteria normalization of the accommodation tables") {
  auto criteria = fixtures::accommodation_criteria();

  std::vector<Alternative> anthony = normalize_criteria(criteria, fixtures::anthony().raw_options);
  CHECK(anthony[0].scores == vec({"1", "0.84", "0.875"}));
  CHECK(anthony[1].scores == vec({"0.4", "1", "1"}));

  std::vector<Alternative> charley = normalize_criteria(criteria, fixtures::charley().raw_options);
  CHECK(charley[0].scores == vec({"1", "0.95", "0.8"}));
  CHECK(charley[1].scores == vec({"0.2", "1", "1"}));

  std::vector<Alternative> single = normalize_criteria(criteria, {{"only", vec({"7", "3", "2"})}});
  CHECK(single[0].scores == vec({"1", "1", "1"}));

  CHECK_THROWS_WITH_AS(normalize_criteria(criteria, {{"bad", vec({"0", "3", "2"})}}),
                       doctest::Contains("ZeroDivision"), Error);
}

TEST_CASE("shapley values of an additive measure are its weights") {
  std::vector<Rational> weights = vec({"0.25", "0.5", "0.25"});
  MonotoneMeasure mu = additive_measure(3, weights);
  CHECK(shapley_vector(mu) == weights);
}

TEST_CASE("shapley coefficients for three criteria") {
  // gamma values 1/3, 1/6, 1/3 for |A| = 0, 1, 2 show up directly when the
  // measure is a single step: phi(1) of the measure charging only {1}-supersets
  MonotoneMeasure mu = validate_measure(powerset_collection(3),
                                        {{IndexSet::empty(), R("0")},
                                         {IndexSet::of({1}), R("1")},
                                         {IndexSet::of({2}), R("0")},
                                         {IndexSet::of({3}), R("0")},
                                         {IndexSet::of({1, 2}), R("1")},
                                         {IndexSet::of({1, 3}), R("1")},
                                         {IndexSet::of({2, 3}), R("0")},
                                         {IndexSet::of({1, 2, 3}), R("1")}});
  // marginal contribution of 1 is 1 on every A not containing it:
  // phi(1) = gamma(0) + 2 gamma(1) + gamma(2) = 1/3 + 2/6 + 1/3 = 1
  CHECK(shapley_value(mu, 1) == 1);
  CHECK(shapley_value(mu, 2) == 0);
  CHECK(shapley_value(mu, 3) == 0);
}

TEST_CASE("shapley values of the accommodation measures") {
  // frozen from the calibrated pair tables
  MonotoneMeasure anthony = fixtures::person_measure(fixtures::anthony());
  CHECK(shapley_vector(anthony) == vec({"1/4", "133/200", "17/200"}));

  Rational total = 0;
  for (const Rational& phi : shapley_vector(anthony)) total += phi;
  CHECK(total == 1);

  // within two decimal places of the normalized character rows
  std::vector<Rational> targets = {R("0.3") / R("1.2"), R("0.8") / R("1.2"), R("0.1") / R("1.2")};
  std::vector<Rational> phi = shapley_vector(anthony);
  for (int i = 0; i < 3; ++i) {
    Rational diff = phi[i] - targets[i];
    if (diff < 0) diff = -diff;
    CHECK(diff <= R("0.02"));
  }
}

TEST_CASE("shapley sums to the full-set value on every person") {
  for (const auto& person : {fixtures::anthony(), fixtures::brittany(), fixtures::charley()}) {
    MonotoneMeasure mu = fixtures::person_measure(person);
    Rational total = 0;
    for (const Rational& phi : shapley_vector(mu)) total += phi;
    CHECK(total == mu.value(IndexSet::full(3)));
  }
}

TEST_CASE("shapley sums to the full-set value up to six criteria") {
  testgen::Rng rng(61);
  for (int n : {4, 5, 6}) {
    MonotoneMeasure mu = testgen::random_monotone_measure(rng, powerset_collection(n));
    Rational total = 0;
    for (const Rational& phi : shapley_vector(mu)) total += phi;
    CHECK(total == mu.value(IndexSet::full(n)));
  }
}

TEST_CASE("calibration solves the pair equations exactly") {
  std::vector<Rational> targets = vec({"0.3", "0.8", "0.1"});
  CalibrationResult result = calibrate_measure(targets, targets);
  const Rational& a = result.pair_values[0];
  const Rational& b = result.pair_values[1];
  const Rational& c = result.pair_values[2];
  CHECK(a + b - 2 * c == R("-0.2"));
  CHECK(-2 * a + b + c == R("-0.6"));
  // minimum-norm: orthogonal to the null direction
  CHECK(a + b + c == 0);
  // this particular solution is not monotone; a shift window restores it
  CHECK(!result.monotone);
  REQUIRE(result.monotone_shift_range.has_value());
  CHECK(result.monotone_shift_range->first <= result.monotone_shift_range->second);
  MonotoneMeasure shifted = result.to_measure(result.monotone_shift_range->first);
  CHECK(shifted.value(IndexSet::full(3)) == 1);
  CHECK_THROWS_AS(result.to_measure(0), Error);
}

TEST_CASE("calibration of uniform targets admits the additive measure") {
  CalibrationResult result = calibrate_measure(vec({"1", "1", "1"}), vec({"1/3", "1/3", "1/3"}));
  CHECK(result.pair_values == vec({"0", "0", "0"}));
  // the additive pair value 2/3 sits inside the solution family
  CalibrationCheck check = verify_calibration(vec({"1", "1", "1"}), vec({"1/3", "1/3", "1/3"}),
                                              vec({"2/3", "2/3", "2/3"}));
  CHECK(check.max_abs_residual == 0);
  CHECK(check.monotone);
}

TEST_CASE("published pair tables satisfy the equations within rounding") {
  for (const auto& person : {fixtures::anthony(), fixtures::brittany(), fixtures::charley()}) {
    CalibrationCheck check = verify_calibration(person.singletons, person.singletons,
                                                person.pair_values);
    CHECK(check.max_abs_residual <= R("0.02"));
    CHECK(check.monotone);
  }
}

TEST_CASE("calibration rejects bad targets") {
  CHECK_THROWS_WITH_AS(calibrate_measure(vec({"0", "1", "1"}), vec({"0.3", "0.3", "0.3"})),
                       doctest::Contains("InconsistentTargets"), Error);
  CHECK_THROWS_AS(calibrate_measure(vec({"1", "1"}), vec({"1", "1"})), Error);
}

TEST_CASE("ranking the accommodation options") {
  auto criteria = fixtures::accommodation_criteria();
  fixtures::Person anthony = fixtures::anthony();
  MonotoneMeasure mu = fixtures::person_measure(anthony);
  std::vector<Alternative> options = normalize_criteria(criteria, anthony.raw_options);

  std::vector<RankedAlternative> standard = rank_alternatives(options, mu, RankMethod::Standard);
  CHECK(standard[0].name == "a1");
  CHECK(standard[0].score == R("0.8943"));
  CHECK(standard[1].score == R("0.8860"));

  std::vector<RankedAlternative> generalized = rank_alternatives(options, mu, RankMethod::Generalized);
  CHECK(generalized[0].name == "a2");
  CHECK(generalized[0].score == R("0.68572"));
}

TEST_CASE("ranking by an additive measure is the weighted mean order") {
  std::vector<Rational> weights = vec({"0.5", "0.3", "0.2"});
  MonotoneMeasure mu = additive_measure(3, weights);
  std::vector<Alternative> options = {{"p", vec({"0.9", "0.2", "0.3"})},
                                      {"q", vec({"0.4", "0.8", "0.5"})},
                                      {"r", vec({"0.5", "0.5", "0.5"})}};
  std::vector<RankedAlternative> ranked = rank_alternatives(options, mu, RankMethod::Standard);
  auto weighted_mean = [&](const std::vector<Rational>& scores) {
    Rational total = 0;
    for (int i = 0; i < 3; ++i) total += weights[i] * scores[i];
    return total;
  };
  for (const RankedAlternative& entry : ranked) {
    for (const Alternative& alt : options) {
      if (alt.name == entry.name) CHECK(entry.score == weighted_mean(alt.scores));
    }
  }
  CHECK(ranked[0].name == "p");
}

TEST_CASE("rank ties share a rank") {
  MonotoneMeasure mu = additive_measure(2, vec({"0.5", "0.5"}));
  std::vector<Alternative> options = {{"x", vec({"0.4", "0.6"})},
                                      {"y", vec({"0.6", "0.4"})},
                                      {"z", vec({"0.1", "0.1"})}};
  std::vector<RankedAlternative> ranked = rank_alternatives(options, mu, RankMethod::Standard);
  CHECK(ranked[0].rank == 1);
  CHECK(ranked[1].rank == 1);
  CHECK(ranked[2].rank == 3);
}

TEST_CASE("knapsack selection on the product table") {
  Instance inst = fixtures::knapsack_instance();
  KnapsackResult result = knapsack_select(inst.x, inst.measure, R("200"), inst.fca.collection());
  CHECK(result.unpacked_price == 1);
  CHECK(result.chosen == IndexSet::of({1, 3, 4}));  // products a, c, d
  CHECK(result.minimizers == std::vector<IndexSet>{IndexSet::of({1, 3, 4})});

  KnapsackResult zero = knapsack_select(inst.x, inst.measure, R("0"), inst.fca.collection());
  CHECK(zero.unpacked_price == R("3.6"));
  CHECK(zero.chosen == IndexSet::empty());

  KnapsackResult all = knapsack_select(inst.x, inst.measure, R("275"), inst.fca.collection());
  CHECK(all.unpacked_price == 0);
  CHECK(all.chosen == IndexSet::full(4));

  // value agrees with the defining minimum
  CHECK(result.unpacked_price == survival_definition(inst).value_at(R("200")));
}

TEST_CASE("knapsack rejects mismatched inputs") {
  Instance inst = fixtures::knapsack_instance();
  CHECK_THROWS_WITH_AS(knapsack_select(vec({"1", "2"}), inst.measure, R("10"), inst.fca.collection()),
                       doctest::Contains("DomainMismatch"), Error);
  CHECK_THROWS_AS(knapsack_select(inst.x, inst.measure, R("-5"), inst.fca.collection()), Error);
}
