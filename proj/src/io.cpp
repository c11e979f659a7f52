#include "hsg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hsg {

namespace {

using nlohmann::json;

std::string cell_name(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Hypergroupoid structure_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("parse error: ") + e.what(), 0,
                      static_cast<int>(e.byte));
  }

  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table")) {
    throw validation_error(
        "structure must be an object with 'order' and 'table'");
  }
  if (!doc["order"].is_number_integer()) {
    throw validation_error("'order' must be an integer");
  }
  const int order = doc["order"].get<int>();
  if (order < 1 || order > order_cap) {
    throw validation_error("'order' must be between 1 and " +
                           std::to_string(order_cap) + ", got " +
                           std::to_string(order));
  }
  const json& table = doc["table"];
  if (!table.is_array() || table.size() != static_cast<std::size_t>(order)) {
    throw validation_error("'table' must be an array of " +
                           std::to_string(order) + " rows");
  }

  std::vector<Subset> cells;
  cells.reserve(static_cast<std::size_t>(order) * order);
  for (std::size_t a = 0; a < table.size(); ++a) {
    const json& row = table[a];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(order)) {
      throw validation_error("row " + std::to_string(a) + " must have " +
                             std::to_string(order) + " cells");
    }
    for (std::size_t b = 0; b < row.size(); ++b) {
      const json& cell = row[b];
      if (!cell.is_array()) {
        throw validation_error("cell " + cell_name(a, b) +
                               " must be a list of element indices");
      }
      if (cell.empty()) {
        throw validation_error("empty cell " + cell_name(a, b));
      }
      Subset s;
      int prev = -1;
      for (const json& entry : cell) {
        if (!entry.is_number_integer()) {
          throw validation_error("cell " + cell_name(a, b) +
                                 " contains a non-integer entry");
        }
        int e = entry.get<int>();
        if (e < 0 || e >= order) {
          throw validation_error("cell " + cell_name(a, b) +
                                 " contains out-of-range element " +
                                 std::to_string(e));
        }
        if (e <= prev) {
          throw validation_error("cell " + cell_name(a, b) +
                                 " is not strictly ascending");
        }
        prev = e;
        s |= Subset::single(e);
      }
      cells.push_back(s);
    }
  }
  return Hypergroupoid(order, std::move(cells));
}

std::string structure_to_json(const Hypergroupoid& h) {
  json table = json::array();
  for (int a = 0; a < h.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < h.order(); ++b) {
      json cell = json::array();
      for (int e : h.cell(a, b)) cell.push_back(e);
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  json doc;
  doc["order"] = h.order();
  doc["table"] = std::move(table);
  return doc.dump();
}

Hypergroupoid load_structure(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw validation_error("cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return structure_from_json(buf.str());
  } catch (const parse_error& e) {
    throw parse_error(path.string() + ": " + e.what(), e.line, e.column);
  } catch (const validation_error& e) {
    throw validation_error(path.string() + ": " + e.what());
  }
}

void save_structure(const Hypergroupoid& h,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw validation_error("cannot open '" + path.string() +
                           "' for writing");
  }
  out << structure_to_json(h) << '\n';
  if (!out) {
    throw validation_error("failed writing '" + path.string() + "'");
  }
}

}  // namespace hsg
