#pragma once

// Shared worked-instance fixtures used by the unit and acceptance suites.

#include <string>
#include <vector>

#include "condagg/decision.hpp"
#include "condagg/survival.hpp"

namespace fixtures {

using namespace condagg;

inline Rational R(const std::string& text) { return parse_rational(text); }

inline std::vector<Rational> vec(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(R(v));
  return out;
}

// six-set collection, sum aggregation, x = (2,3,1), measure per the table
inline Instance worked_example() {
  Collection collection = validate_collection(
      3, {IndexSet::empty(), IndexSet::of({1}), IndexSet::of({2}), IndexSet::of({3}),
          IndexSet::of({1, 3}), IndexSet::of({1, 2, 3})});
  MonotoneMeasure mu = validate_measure(
      complement_collection(collection),
      {{IndexSet::empty(), R("0")},
       {IndexSet::of({2}), R("0.5")},
       {IndexSet::of({1, 2}), R("0.5")},
       {IndexSet::of({1, 3}), R("0.5")},
       {IndexSet::of({2, 3}), R("0.7")},
       {IndexSet::of({1, 2, 3}), R("1")}});
  return make_instance(AggregatorFamily(collection, AggregatorKind::sum()), std::move(mu),
                       vec({"2", "3", "1"}));
}

// the canonical survival function of the worked example
inline StepFunction worked_example_survival() {
  return canonicalize_step({{R("0"), R("1"), R("1")},
                            {R("1"), R("6"), R("0.5")},
                            {R("6"), ExtRational::infinity(), R("0")}});
}

// five-set collection with a decreasing permutation, x = (2,3,4)
inline Instance decreasing_example() {
  Collection collection = validate_collection(
      3, {IndexSet::empty(), IndexSet::of({1}), IndexSet::of({3}), IndexSet::of({1, 2}),
          IndexSet::of({1, 2, 3})});
  MonotoneMeasure mu = validate_measure(complement_collection(collection),
                                        {{IndexSet::empty(), R("0")},
                                         {IndexSet::of({3}), R("0.3")},
                                         {IndexSet::of({1, 2}), R("0.5")},
                                         {IndexSet::of({2, 3}), R("0.8")},
                                         {IndexSet::of({1, 2, 3}), R("1")}});
  return make_instance(AggregatorFamily(collection, AggregatorKind::sum()), std::move(mu),
                       vec({"2", "3", "4"}));
}

inline StepFunction decreasing_example_survival() {
  return canonicalize_step({{R("0"), R("2"), R("1")},
                            {R("2"), R("4"), R("0.8")},
                            {R("4"), R("5"), R("0.5")},
                            {R("5"), R("9"), R("0.3")},
                            {R("9"), ExtRational::infinity(), R("0")}});
}

// four products (a,b,c,d), volumes and package prices over the full powerset
inline Instance knapsack_instance() {
  Collection collection = powerset_collection(4);
  std::vector<std::pair<IndexSet, Rational>> prices = {
      {IndexSet::empty(), R("0")},
      {IndexSet::of({1}), R("1.2")},
      {IndexSet::of({2}), R("1")},
      {IndexSet::of({3}), R("0.6")},
      {IndexSet::of({4}), R("0.8")},
      {IndexSet::of({1, 2}), R("2.2")},
      {IndexSet::of({1, 3}), R("1.8")},
      {IndexSet::of({1, 4}), R("1.8")},
      {IndexSet::of({2, 3}), R("1.4")},
      {IndexSet::of({2, 4}), R("1.8")},
      {IndexSet::of({3, 4}), R("1.4")},
      {IndexSet::of({1, 2, 3}), R("2.5")},
      {IndexSet::of({1, 2, 4}), R("3.0")},
      {IndexSet::of({1, 3, 4}), R("2.5")},
      {IndexSet::of({2, 3, 4}), R("2.4")},
      {IndexSet::of({1, 2, 3, 4}), R("3.6")},
  };
  MonotoneMeasure mu = validate_measure(complement_collection(collection), prices);
  return make_instance(AggregatorFamily(collection, AggregatorKind::sum()), std::move(mu),
                       vec({"80", "75", "55", "65"}));
}

// the eleven nonzero pieces of the knapsack survival function
inline StepFunction knapsack_survival() {
  return canonicalize_step({{R("0"), R("55"), R("3.6")},
                            {R("55"), R("65"), R("3")},
                            {R("65"), R("80"), R("2.5")},
                            {R("80"), R("120"), R("2.4")},
                            {R("120"), R("130"), R("2.2")},
                            {R("130"), R("145"), R("1.8")},
                            {R("145"), R("195"), R("1.4")},
                            {R("195"), R("200"), R("1.2")},
                            {R("200"), R("210"), R("1")},
                            {R("210"), R("220"), R("0.8")},
                            {R("220"), R("275"), R("0.6")},
                            {R("275"), ExtRational::infinity(), R("0")}});
}

// equivalence pair: max of (2,5,9) vs sum of (2,3,4) on a three-set collection
inline std::pair<Instance, Instance> equivalence_pair_one() {
  Collection collection = validate_collection(
      3, {IndexSet::empty(), IndexSet::of({1}), IndexSet::of({1, 2, 3})});
  MonotoneMeasure mu = validate_measure(complement_collection(collection),
                                        {{IndexSet::empty(), R("0")},
                                         {IndexSet::of({2, 3}), R("0.5")},
                                         {IndexSet::of({1, 2, 3}), R("1")}});
  Instance left = make_instance(AggregatorFamily(collection, AggregatorKind::max()), mu,
                                vec({"2", "5", "9"}));
  Instance right = make_instance(AggregatorFamily(collection, AggregatorKind::sum()), mu,
                                 vec({"2", "3", "4"}));
  return {std::move(left), std::move(right)};
}

inline StepFunction equivalence_pair_one_survival() {
  return canonicalize_step({{R("0"), R("2"), R("1")},
                            {R("2"), R("9"), R("0.5")},
                            {R("9"), ExtRational::infinity(), R("0")}});
}

// equivalence pair: same sum family, vectors (1,3,5) and (2,4,3)
inline std::pair<Instance, Instance> equivalence_pair_two() {
  Collection collection = validate_collection(
      3, {IndexSet::empty(), IndexSet::of({2}), IndexSet::of({3}), IndexSet::of({1, 2}),
          IndexSet::of({1, 3}), IndexSet::of({1, 2, 3})});
  MonotoneMeasure mu = validate_measure(complement_collection(collection),
                                        {{IndexSet::empty(), R("0")},
                                         {IndexSet::of({1, 3}), R("0.5")},
                                         {IndexSet::of({1, 2}), R("0.5")},
                                         {IndexSet::of({3}), R("0.5")},
                                         {IndexSet::of({2}), R("0.5")},
                                         {IndexSet::of({1, 2, 3}), R("1")}});
  AggregatorFamily family(collection, AggregatorKind::sum());
  Instance left = make_instance(family, mu, vec({"1", "3", "5"}));
  Instance right = make_instance(family, mu, vec({"2", "4", "3"}));
  return {std::move(left), std::move(right)};
}

inline StepFunction equivalence_pair_two_survival() {
  return canonicalize_step({{R("0"), R("3"), R("1")},
                            {R("3"), R("9"), R("0.5")},
                            {R("9"), ExtRational::infinity(), R("0")}});
}

// accommodation study: three people, their measures and raw option tables
struct Person {
  std::string name;
  std::vector<Rational> singletons;   // D, P, R
  std::vector<Rational> pair_values;  // {D,P}, {D,R}, {P,R}
  std::vector<Alternative> raw_options;
};

inline MonotoneMeasure person_measure(const Person& person) {
  return validate_measure(powerset_collection(3),
                          {{IndexSet::empty(), R("0")},
                           {IndexSet::of({1}), person.singletons[0]},
                           {IndexSet::of({2}), person.singletons[1]},
                           {IndexSet::of({3}), person.singletons[2]},
                           {IndexSet::of({1, 2}), person.pair_values[0]},
                           {IndexSet::of({1, 3}), person.pair_values[1]},
                           {IndexSet::of({2, 3}), person.pair_values[2]},
                           {IndexSet::of({1, 2, 3}), R("1")}});
}

inline Person anthony() {
  return Person{"anthony",
                vec({"0.3", "0.8", "0.1"}),
                vec({"0.94", "0.48", "0.81"}),
                {{"a1", vec({"4", "100", "7"})}, {"a2", vec({"10", "84", "8"})}}};
}

inline Person brittany() {
  return Person{"brittany",
                vec({"0.75", "0.4", "0.2"}),
                vec({"0.85", "0.76", "0.59"}),
                {{"b1", vec({"7", "100", "2"})}, {"b2", vec({"10", "80", "10"})}}};
}

inline Person charley() {
  return Person{"charley",
                vec({"0.2", "0.5", "0.7"}),
                vec({"0.63", "0.71", "0.84"}),
                {{"c1", vec({"3", "100", "8"})}, {"c2", vec({"15", "95", "10"})}}};
}

inline std::vector<CriterionSpec> accommodation_criteria() {
  return {{"D", Direction::Minimize}, {"P", Direction::Minimize}, {"R", Direction::Maximize}};
}

}  // namespace fixtures
