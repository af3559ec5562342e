#include "crvar/table_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "crvar/errors.hpp"

namespace crvar {

using nlohmann::json;

std::string table_to_json(UnaryCayleyTable const& s) {
  json j;
  j["order"] = s.order();
  if (!s.name().empty()) {
    j["name"] = s.name();
  }
  json rows = json::array();
  for (Element a = 0; a < s.order(); ++a) {
    json row = json::array();
    for (Element b = 0; b < s.order(); ++b) {
      row.push_back(s.mul(a, b));
    }
    rows.push_back(std::move(row));
  }
  j["op"] = std::move(rows);
  j["inv"] = s.inv_data();
  if (!s.labels().empty()) {
    j["labels"] = s.labels();
  }
  return j.dump() + "\n";
}

UnaryCayleyTable table_from_json(std::string const& text, TableCheck check) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::exception const& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  UnaryCayleyTable s;
  try {
    auto n = j.at("order").get<std::size_t>();
    auto rows = j.at("op").get<std::vector<std::vector<Element>>>();
    auto inv = j.at("inv").get<std::vector<Element>>();
    if (rows.size() != n) {
      throw FormatError("op has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    }
    s = UnaryCayleyTable::from_rows(rows, std::move(inv), j.value("name", std::string{}));
    if (j.contains("labels")) {
      s.set_labels(j.at("labels").get<std::vector<std::string>>());
    }
  } catch (json::exception const& e) {
    throw FormatError(std::string("bad table field: ") + e.what());
  }
  if (check == TableCheck::none) {
    return s;
  }
  if (auto t = find_nonassociative_triple(s)) {
    auto [a, b, c] = *t;
    throw FormatError("not associative: (" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                      std::to_string(c) + " != " + std::to_string(a) + "*(" + std::to_string(b) + "*" +
                      std::to_string(c) + ")");
  }
  if (check == TableCheck::completely_regular) {
    if (auto a = find_non_cr_element(s)) {
      throw FormatError("not completely regular at element " + std::to_string(*a));
    }
  }
  return s;
}

UnaryCayleyTable load_table(std::string const& path, TableCheck check) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return table_from_json(ss.str(), check);
}

void save_table(UnaryCayleyTable const& s, std::string const& path) {
  std::ofstream out(path);
  if (!out) {
    throw FormatError("cannot write " + path);
  }
  out << table_to_json(s);
}

}  // namespace crvar
