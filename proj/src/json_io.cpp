#include "freecum/json_io.hpp"

#include <algorithm>

#include "freecum/errors.hpp"

namespace freecum {
namespace {

Rational rational_at(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(where, "expected a rational as a string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  }
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "/" + key, "missing field");
  return *it;
}

std::vector<Rational> rationals_at(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_at(j[i], where + "/" + std::to_string(i)));
  return out;
}

int integer_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<int>();
}

Json strings(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

Json to_json(const Partition& pi) {
  Json out = Json::array();
  for (const auto& block : pi.blocks()) out.push_back(block);
  return out;
}

Partition partition_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Partition::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where, e.what());
    }
  }
  if (!j.is_array()) throw ParseError(where, "expected a partition (array of blocks or text form)");
  std::vector<Block> blocks;
  int n = 0;
  for (std::size_t b = 0; b < j.size(); ++b) {
    const auto here = where + "/" + std::to_string(b);
    if (!j[b].is_array()) throw ParseError(here, "expected an array of elements");
    Block block;
    for (std::size_t e = 0; e < j[b].size(); ++e) {
      block.push_back(integer_at(j[b][e], here + "/" + std::to_string(e)));
      n += 1;
    }
    blocks.push_back(std::move(block));
  }
  try {
    return Partition::from_blocks(n, blocks);
  } catch (const std::exception& e) {
    throw ParseError(where, e.what());
  }
}

Json to_json(const MultiplicativeFunction& f) {
  const auto values = f.characteristic();
  return {{"order", f.order()}, {"characteristic", strings({values.begin(), values.end()})}};
}

MultiplicativeFunction multiplicative_from_json(const Json& j) {
  const auto values = rationals_at(field(j, "characteristic", ""), "/characteristic");
  if (j.contains("order") && integer_at(j["order"], "/order") != static_cast<int>(values.size())) {
    throw ParseError("/order", "does not match the length of characteristic");
  }
  return MultiplicativeFunction(values);
}

Json to_json(const PowerSeries& s) { return {{"order", s.order()}, {"coeffs", strings(s.coeffs())}}; }

PowerSeries series_from_json(const Json& j) {
  auto values = rationals_at(field(j, "coeffs", ""), "/coeffs");
  if (values.empty()) throw ParseError("/coeffs", "a series needs at least one coefficient");
  if (j.contains("order") && integer_at(j["order"], "/order") != static_cast<int>(values.size()) - 1) {
    throw ParseError("/order", "does not match the number of coefficients");
  }
  return PowerSeries(std::move(values));
}

Json to_json(const Polynomial& p) {
  return {{"var", "z"}, {"order", std::max(p.degree(), 0)}, {"coeffs", p.is_zero() ? Json::array({"0"}) : strings(p.coeffs())}};
}

Json to_json(const BiPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.x_coeffs()) coeffs.push_back(c.is_zero() ? Json::array({"0"}) : strings(c.coeffs()));
  return {{"vars", {"x", "z"}}, {"order", std::max(p.degree_x(), 0)}, {"coeffs", coeffs}};
}

std::string family_name(Family lattice) { return lattice == Family::all ? "set" : "nc"; }

Family parse_family(const std::string& text) {
  if (text == "set") return Family::all;
  if (text == "nc") return Family::noncrossing;
  throw ParseError("lattice", "expected 'set' or 'nc', got '" + text + "'");
}

MomentDocument moments_from_json(const Json& j) {
  const auto& mode_field = field(j, "mode", "");
  if (!mode_field.is_string()) throw ParseError("/mode", "expected \"sequence\" or \"table\"");
  const auto mode = mode_field.get<std::string>();
  MomentDocument doc;
  if (mode == "sequence") {
    auto values = rationals_at(field(j, "moments", ""), "/moments");
    doc.n = j.contains("n") ? integer_at(j["n"], "/n") : static_cast<int>(values.size());
    if (doc.n < 1 || doc.n > static_cast<int>(values.size())) {
      throw ParseError("/n", "needs 1 ≤ n ≤ number of moments");
    }
    doc.values = PartitionValues::sequence(std::move(values));
    return doc;
  }
  if (mode != "table") throw ParseError("/mode", "expected \"sequence\" or \"table\"");
  const auto& entries = field(j, "entries", "");
  if (!entries.is_array()) throw ParseError("/entries", "expected an array");
  doc.values = PartitionValues::table({});
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto here = "/entries/" + std::to_string(i);
    const auto pi = partition_from_json(field(entries[i], "partition", here), here + "/partition");
    doc.values.set(pi, rational_at(field(entries[i], "value", here), here + "/value"));
    doc.n = std::max(doc.n, pi.size());
  }
  if (j.contains("n")) {
    const int n = integer_at(j["n"], "/n");
    if (n < doc.n) throw ParseError("/n", "smaller than the largest partition in entries");
    doc.n = n;
  }
  if (doc.n < 1) throw ParseError("/entries", "no entries");
  return doc;
}

Json moments_to_json(int n, const PartitionValues& values, const std::vector<Partition>& partitions) {
  Json entries = Json::array();
  for (const auto& pi : partitions) {
    entries.push_back({{"partition", pi.to_string()}, {"value", to_string(values.value(pi))}});
  }
  return {{"n", n}, {"mode", "table"}, {"entries", entries}};
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace freecum
