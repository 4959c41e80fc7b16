#pragma once

#include <string>
#include <vector>

#include "condagg/decision.hpp"
#include "condagg/survival.hpp"

namespace condagg::io {

// On-disk instance: ground set size, collection, aggregator family, score
// vector and the measure on the complement collection. Indices are 1-based in
// files; all numbers are exact (integers or decimal/fraction strings).
struct InstanceFile {
  Instance instance;
  std::vector<std::string> labels;  // optional, one per ground set element
};

InstanceFile parse_instance(const std::string& json_text);
InstanceFile load_instance(const std::string& path);
std::string serialize_instance(const InstanceFile& file, int indent = 2);

struct RankBundle {
  std::vector<CriterionSpec> criteria;
  std::vector<Alternative> alternatives;
  MonotoneMeasure measure;  // on the full powerset over the criteria
  bool normalized = false;  // scores already in (0, 1]
};

RankBundle parse_rank_bundle(const std::string& json_text);
RankBundle load_rank_bundle(const std::string& path);

MonotoneMeasure parse_powerset_measure(const std::string& json_text);
MonotoneMeasure load_powerset_measure(const std::string& path);

std::string read_file(const std::string& path);  // throws Error(ParseError) on IO failure
void write_file(const std::string& path, const std::string& content);

}  // namespace condagg::io
