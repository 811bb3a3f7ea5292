#pragma once

#include <vector>

#include "holefree/enumerate.hpp"

namespace testing_corpus {

/// Every isomorphism class on 1..max_n vertices. The enumeration runs once
/// per process for the largest order requested.
inline std::vector<holefree::Graph> classes_up_to(int max_n) {
  static std::vector<std::vector<holefree::Graph>> cache;
  if (static_cast<int>(cache.size()) <= max_n) cache = holefree::nonisomorphic_graphs_up_to(max_n);
  std::vector<holefree::Graph> flat;
  for (int n = 1; n <= max_n; ++n) flat.insert(flat.end(), cache[n].begin(), cache[n].end());
  return flat;
}

}  // namespace testing_corpus
