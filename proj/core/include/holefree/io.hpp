#pragma once

// Text formats: graph6 (short form only, n <= 62) and the plain edge list
// "n m" followed by m lines "u v".

#include <iosfwd>
#include <string>
#include <string_view>

#include "holefree/graph.hpp"

namespace holefree {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxGraph6Order = 62;

/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace holefree
