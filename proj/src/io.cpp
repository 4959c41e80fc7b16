#include "condagg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace condagg::io {

using nlohmann::json;

namespace {

Rational parse_number(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
  throw Error(ErrorCode::ParseError,
              "numbers must be integers or strings holding exact rationals, got " + v.dump());
}

IndexSet parse_set(const json& v) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "a set must be an array of indices, got " + v.dump());
  IndexSet out;
  for (const json& e : v) {
    if (!e.is_number_integer()) throw Error(ErrorCode::ParseError, "set elements must be integers");
    const std::int64_t i = e.get<std::int64_t>();
    if (i < 1 || i > kMaxGroundSetSize) {
      throw Error(ErrorCode::OutOfRangeIndex, "element " + std::to_string(i));
    }
    out = out.with(static_cast<int>(i));
  }
  return out;
}

json set_to_json(IndexSet s) {
  json out = json::array();
  for (int i : s.elements()) out.push_back(i);
  return out;
}

std::vector<std::pair<IndexSet, Rational>> parse_measure_entries(const json& v) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "'measure' must be an array of {set, value} entries");
  std::vector<std::pair<IndexSet, Rational>> entries;
  entries.reserve(v.size());
  for (const json& entry : v) {
    if (!entry.is_object() || !entry.contains("set") || !entry.contains("value")) {
      throw Error(ErrorCode::ParseError, "measure entries need 'set' and 'value'");
    }
    entries.emplace_back(parse_set(entry.at("set")), parse_number(entry.at("value")));
  }
  return entries;
}

json measure_to_json(const MonotoneMeasure& mu) {
  json out = json::array();
  for (std::size_t j = 0; j < mu.size(); ++j) {
    out.push_back(json{{"set", set_to_json(mu.domain().sets()[j])},
                       {"value", to_fraction_string(mu.value_by_index(j))}});
  }
  return out;
}

AggregatorKind parse_kind(const json& v, int n) {
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    if (name == "max") return AggregatorKind::max();
    if (name == "min") return AggregatorKind::min();
    if (name == "sum") return AggregatorKind::sum();
    throw Error(ErrorCode::ParseError, "unknown aggregator '" + name + "'");
  }
  if (v.is_object() && v.value("kind", "") == "choquet") {
    if (!v.contains("measure")) throw Error(ErrorCode::ParseError, "choquet aggregator needs 'measure'");
    MonotoneMeasure inner = validate_measure(powerset_collection(n), parse_measure_entries(v.at("measure")));
    return AggregatorKind::choquet(std::move(inner));
  }
  throw Error(ErrorCode::ParseError, "bad aggregator spec: " + v.dump());
}

json kind_to_json(const AggregatorKind& kind) {
  if (kind.tag() == AggregatorTag::ChoquetBased) {
    return json{{"kind", "choquet"}, {"measure", measure_to_json(kind.inner())}};
  }
  return json(kind.name());
}

AggregatorFamily parse_family(const json& v, Collection collection) {
  const int n = collection.n();
  if (v.is_string() || (v.is_object() && v.contains("kind"))) {
    return AggregatorFamily(std::move(collection), parse_kind(v, n));
  }
  if (v.is_object() && v.contains("per_set")) {
    AggregatorKind fallback =
        v.contains("default") ? parse_kind(v.at("default"), n) : AggregatorKind::sum();
    std::vector<AggregatorKind> kinds(collection.size(), fallback);
    std::vector<bool> covered(collection.size(), false);
    for (const json& entry : v.at("per_set")) {
      if (!entry.is_object() || !entry.contains("set") || !entry.contains("kind")) {
        throw Error(ErrorCode::ParseError, "per_set entries need 'set' and 'kind'");
      }
      IndexSet s = parse_set(entry.at("set"));
      auto idx = collection.index_of(s);
      if (!idx) throw Error(ErrorCode::SetNotInCollection, s.to_string() + " is not in the collection");
      kinds[*idx] = parse_kind(entry.at("kind"), n);
      covered[*idx] = true;
    }
    if (!v.contains("default")) {
      for (std::size_t i = 0; i < covered.size(); ++i) {
        if (!covered[i] && !collection.sets()[i].is_empty()) {
          throw Error(ErrorCode::ParseError,
                      "per_set misses " + collection.sets()[i].to_string() + " and no default is given");
        }
      }
    }
    return AggregatorFamily(std::move(collection), std::move(kinds));
  }
  throw Error(ErrorCode::ParseError, "bad 'aggregator' field");
}

json family_to_json(const AggregatorFamily& family) {
  if (family.uniform()) return kind_to_json(family.kind_by_index(0));
  json per_set = json::array();
  for (std::size_t i = 0; i < family.collection().size(); ++i) {
    if (family.collection().sets()[i].is_empty()) continue;
    per_set.push_back(json{{"set", set_to_json(family.collection().sets()[i])},
                           {"kind", kind_to_json(family.kind_by_index(i))}});
  }
  return json{{"per_set", per_set}};
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

int parse_ground_size(const json& j) {
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw Error(ErrorCode::ParseError, "'n' (ground set size) is required");
  }
  const std::int64_t n = j.at("n").get<std::int64_t>();
  if (n < 1 || n > kMaxGroundSetSize) throw Error(ErrorCode::OutOfRangeIndex, "n = " + std::to_string(n));
  return static_cast<int>(n);
}

std::vector<Rational> parse_vector(const json& v) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "'vector' must be an array");
  std::vector<Rational> x;
  x.reserve(v.size());
  for (const json& e : v) x.push_back(parse_number(e));
  return x;
}

}  // namespace

InstanceFile parse_instance(const std::string& json_text) {
  json j = parse_text(json_text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "instance file must be a JSON object");
  const int n = parse_ground_size(j);

  if (!j.contains("collection") || !j.at("collection").is_array()) {
    throw Error(ErrorCode::ParseError, "'collection' (array of sets) is required");
  }
  std::vector<IndexSet> sets;
  for (const json& s : j.at("collection")) sets.push_back(parse_set(s));
  Collection collection = validate_collection(n, std::move(sets));

  if (!j.contains("vector")) throw Error(ErrorCode::ParseError, "'vector' is required");
  std::vector<Rational> x = parse_vector(j.at("vector"));

  if (!j.contains("measure")) throw Error(ErrorCode::ParseError, "'measure' is required");
  MonotoneMeasure measure =
      validate_measure(complement_collection(collection), parse_measure_entries(j.at("measure")));

  if (!j.contains("aggregator")) throw Error(ErrorCode::ParseError, "'aggregator' is required");
  AggregatorFamily family = parse_family(j.at("aggregator"), collection);

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const json& l : j.at("labels")) labels.push_back(l.get<std::string>());
    if (labels.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::ParseError, "'labels' must have one entry per ground set element");
    }
  }
  return InstanceFile{make_instance(std::move(family), std::move(measure), std::move(x)),
                      std::move(labels)};
}

std::string serialize_instance(const InstanceFile& file, int indent) {
  const Instance& inst = file.instance;
  json j;
  j["n"] = inst.fca.collection().n();
  if (!file.labels.empty()) j["labels"] = file.labels;
  json collection = json::array();
  for (IndexSet e : inst.fca.collection().sets()) collection.push_back(set_to_json(e));
  j["collection"] = collection;
  j["aggregator"] = family_to_json(inst.fca);
  json vector = json::array();
  for (const Rational& xi : inst.x) vector.push_back(to_fraction_string(xi));
  j["vector"] = vector;
  j["measure"] = measure_to_json(inst.measure);
  return j.dump(indent) + "\n";
}

RankBundle parse_rank_bundle(const std::string& json_text) {
  json j = parse_text(json_text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "bundle must be a JSON object");
  if (!j.contains("criteria") || !j.at("criteria").is_array() || j.at("criteria").empty()) {
    throw Error(ErrorCode::ParseError, "'criteria' (nonempty array) is required");
  }
  std::vector<CriterionSpec> criteria;
  for (const json& c : j.at("criteria")) {
    if (!c.is_object() || !c.contains("name") || !c.contains("direction")) {
      throw Error(ErrorCode::ParseError, "criteria entries need 'name' and 'direction'");
    }
    const std::string dir = c.at("direction").get<std::string>();
    if (dir != "min" && dir != "max" && dir != "minimize" && dir != "maximize") {
      throw Error(ErrorCode::ParseError, "direction must be 'min' or 'max'");
    }
    criteria.push_back(CriterionSpec{c.at("name").get<std::string>(),
                                     dir[0] == 'm' && dir[1] == 'i' ? Direction::Minimize
                                                                    : Direction::Maximize});
  }
  const int n = static_cast<int>(criteria.size());

  if (!j.contains("alternatives") || !j.at("alternatives").is_array()) {
    throw Error(ErrorCode::ParseError, "'alternatives' is required");
  }
  std::vector<Alternative> alternatives;
  for (const json& a : j.at("alternatives")) {
    if (!a.is_object() || !a.contains("name") || !a.contains("scores")) {
      throw Error(ErrorCode::ParseError, "alternatives need 'name' and 'scores'");
    }
    alternatives.push_back(Alternative{a.at("name").get<std::string>(), parse_vector(a.at("scores"))});
  }

  if (!j.contains("measure")) throw Error(ErrorCode::ParseError, "'measure' is required");
  MonotoneMeasure measure =
      validate_measure(powerset_collection(n), parse_measure_entries(j.at("measure")));

  RankBundle bundle{std::move(criteria), std::move(alternatives), std::move(measure),
                    j.value("normalized", false)};
  return bundle;
}

MonotoneMeasure parse_powerset_measure(const std::string& json_text) {
  json j = parse_text(json_text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "measure file must be a JSON object");
  const int n = parse_ground_size(j);
  if (!j.contains("measure")) throw Error(ErrorCode::ParseError, "'measure' is required");
  return validate_measure(powerset_collection(n), parse_measure_entries(j.at("measure")));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << content;
}

InstanceFile load_instance(const std::string& path) { return parse_instance(read_file(path)); }
RankBundle load_rank_bundle(const std::string& path) { return parse_rank_bundle(read_file(path)); }
MonotoneMeasure load_powerset_measure(const std::string& path) {
  return parse_powerset_measure(read_file(path));
}

}  // namespace condagg::io
