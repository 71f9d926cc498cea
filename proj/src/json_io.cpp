#include "isodual/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "isodual/error.hpp"

namespace isodual {

Json to_json(const Poset& p) {
  Json j;
  j["n"] = p.size();
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back(Json::array({a, b}));
  j["covers"] = std::move(covers);
  return j;
}

Poset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
    throw Error("poset JSON needs fields \"n\" and \"covers\"");
  if (!j["n"].is_number_integer()) throw Error("poset field \"n\" must be an integer");
  if (!j["covers"].is_array()) throw Error("poset field \"covers\" must be an array");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& pair : j["covers"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw Error("each cover must be a pair of integers");
    covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return Poset::from_covers(n, covers);
}

Json to_json(const IsotoneMap& phi) {
  Json j = Json::array();
  for (int i = 0; i < phi.source().size(); ++i) j.push_back(phi(i));
  return j;
}

Json cells_to_json(const Grid& grid, Mask cells) {
  Json j = Json::array();
  for (Cell c : cells_of_mask(grid, cells)) j.push_back(Json::array({c.p, c.q}));
  return j;
}

Json to_json(const Ideal& ideal) {
  Json j;
  j["rows"] = ideal.grid().rows;
  j["cols"] = ideal.grid().cols;
  Json gens = Json::array();
  for (Mask g : ideal.gens()) gens.push_back(cells_to_json(ideal.grid(), g));
  j["gens"] = std::move(gens);
  return j;
}

Ideal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("gens"))
    throw Error("ideal JSON needs fields \"rows\", \"cols\", \"gens\"");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw Error("ideal grid dimensions must be integers");
  if (!j["gens"].is_array()) throw Error("ideal field \"gens\" must be an array");
  Grid grid{j["rows"].get<int>(), j["cols"].get<int>()};
  if (grid.rows < 1 || grid.cols < 1 || grid.cell_count() > kMaxElements)
    throw Error("ideal grid out of range");
  std::vector<Mask> gens;
  for (const auto& gen : j["gens"]) {
    if (!gen.is_array()) throw Error("each generator must be an array of cells");
    std::vector<Cell> cells;
    for (const auto& cell : gen) {
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() ||
          !cell[1].is_number_integer())
        throw Error("each cell must be a pair of integers");
      cells.push_back({cell[0].get<int>(), cell[1].get<int>()});
    }
    gens.push_back(mask_of_cells(grid, cells));
  }
  return Ideal(grid, std::move(gens));
}

Json to_json(const Witness& w) {
  Json j;
  j["kind"] = w.kind == WitnessKind::kHighPrime ? "high-prime" : "disconnected-monomial";
  j["cover"] = cells_to_json(w.grid, w.cover);
  if (w.monomial) j["monomial"] = cells_to_json(w.grid, *w.monomial);
  j["config"] = w.config;
  return j;
}

Json to_json(const PairReport& report) {
  Json j;
  j["P"] = to_json(report.p);
  j["Q"] = to_json(report.q);
  j["predicted"] = report.verdict.holds;
  j["clause"] = to_string(report.verdict.clause);
  j["computed"] = report.computed;
  j["agree"] = report.agree;
  if (report.verdict.witness) j["witness"] = to_json(*report.verdict.witness);
  return j;
}

Json parse_json_arg(const std::string& arg) {
  std::string text = arg;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error("empty input");
  if (text[first] != '{' && text[first] != '[') {
    std::ifstream in(arg);
    if (!in) throw Error("cannot open file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace isodual
