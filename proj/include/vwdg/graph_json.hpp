#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "vwdg/digraph.hpp"

namespace vwdg {

/// Malformed or invalid graph document. `position()` is the byte offset of a
/// JSON syntax error, or 0 for schema violations.
class GraphFormatError : public std::invalid_argument {
public:
  GraphFormatError(const std::string &what, std::size_t position = 0)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// {"omega":[...],"edges":[{"from":i,"to":j,"weight":"bits"}]}, 1-indexed
/// vertices, edges ordered by (from, to).
nlohmann::ordered_json graph_to_json(const VWDigraph &g);
std::string graph_to_json_string(const VWDigraph &g);

VWDigraph graph_from_json(const nlohmann::json &doc);
VWDigraph parse_graph_json(std::string_view text);

} // namespace vwdg
