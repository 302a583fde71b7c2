#include "vwdg/graph_json.hpp"

namespace vwdg {

nlohmann::ordered_json graph_to_json(const VWDigraph &g) {
  nlohmann::ordered_json doc;
  doc["omega"] = g.omega().dims();
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t j = 0; j < g.vertex_count(); ++j) {
      if (!g.has_edge(i, j)) continue;
      nlohmann::ordered_json e;
      e["from"] = i + 1;
      e["to"] = j + 1;
      e["weight"] = g.weight(i, j).to_string();
      edges.push_back(std::move(e));
    }
  }
  doc["edges"] = std::move(edges);
  return doc;
}

std::string graph_to_json_string(const VWDigraph &g) { return graph_to_json(g).dump(); }

VWDigraph graph_from_json(const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("omega") || !doc.contains("edges")) {
    throw GraphFormatError("graph document must be an object with \"omega\" and \"edges\"");
  }
  const auto &om = doc["omega"];
  if (!om.is_array()) throw GraphFormatError("\"omega\" must be an array of positive integers");
  std::vector<std::size_t> dims;
  for (const auto &d : om) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw GraphFormatError("\"omega\" must be an array of positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  DimensionFunction omega;
  try {
    omega = DimensionFunction(std::move(dims));
  } catch (const std::invalid_argument &e) {
    throw GraphFormatError(e.what());
  }
  VWDigraph g(omega);
  const auto &edges = doc["edges"];
  if (!edges.is_array()) throw GraphFormatError("\"edges\" must be an array");
  const auto m = static_cast<long long>(omega.vertex_count());
  std::size_t index = 0;
  for (const auto &e : edges) {
    const auto where = "edge #" + std::to_string(index + 1) + ": ";
    if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("weight")) {
      throw GraphFormatError(where + "expected {\"from\", \"to\", \"weight\"}");
    }
    if (!e["from"].is_number_integer() || !e["to"].is_number_integer() || !e["weight"].is_string()) {
      throw GraphFormatError(where + "\"from\"/\"to\" must be integers and \"weight\" a bit string");
    }
    const auto from = e["from"].get<long long>();
    const auto to = e["to"].get<long long>();
    if (from < 1 || from > m || to < 1 || to > m) throw GraphFormatError(where + "vertex out of range");
    if (from == to) throw GraphFormatError(where + "self-loops are not allowed");
    Gf2Vector w;
    try {
      w = Gf2Vector::parse(e["weight"].get<std::string>());
    } catch (const std::invalid_argument &err) {
      throw GraphFormatError(where + err.what());
    }
    const auto i = static_cast<std::size_t>(from - 1);
    const auto j = static_cast<std::size_t>(to - 1);
    if (w.dim() != omega[i]) {
      throw GraphFormatError(where + "weight must have dimension omega(" + std::to_string(from) +
                             ") = " + std::to_string(omega[i]));
    }
    if (w.is_zero()) throw GraphFormatError(where + "edge weights must be nonzero");
    if (g.has_edge(i, j)) throw GraphFormatError(where + "duplicate edge");
    g.set_weight(i, j, w);
    ++index;
  }
  return g;
}

VWDigraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw GraphFormatError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte);
  }
  return graph_from_json(doc);
}

} // namespace vwdg
