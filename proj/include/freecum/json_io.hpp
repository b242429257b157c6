#pragma once

// JSON and CSV forms of the library's values. Readers throw ParseError whose
// where() is a JSON pointer to the offending field.

#include <string>
#include <vector>

#include <json.hpp>

#include "freecum/cumulants.hpp"
#include "freecum/incidence.hpp"
#include "freecum/partition.hpp"
#include "freecum/polynomial.hpp"
#include "freecum/rational.hpp"
#include "freecum/series.hpp"

namespace freecum {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& pi);
Partition partition_from_json(const Json& j, const std::string& where = "");

Json to_json(const MultiplicativeFunction& f);
MultiplicativeFunction multiplicative_from_json(const Json& j);

Json to_json(const PowerSeries& s);
PowerSeries series_from_json(const Json& j);

Json to_json(const Polynomial& p);
Json to_json(const BiPolynomial& p);

std::string family_name(Family lattice);
/// "set" or "nc".
Family parse_family(const std::string& text);

/// A moment or cumulant assignment in the JSON moment format.
struct MomentDocument {
  int n = 0;
  PartitionValues values;
};

MomentDocument moments_from_json(const Json& j);
/// Table-mode document over the given partitions.
Json moments_to_json(int n, const PartitionValues& values, const std::vector<Partition>& partitions);

/// Terms in key order, coefficients as strings.
template <class Key, class Name>
Json combo_terms(const FormalCombo<Key>& combo, Name&& name) {
  Json out = Json::array();
  for (const auto& [key, coefficient] : combo.terms()) {
    out.push_back({{"term", name(key)}, {"coefficient", to_string(coefficient)}});
  }
  return out;
}

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& text);

}  // namespace freecum
