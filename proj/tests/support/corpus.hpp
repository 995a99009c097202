#pragma once

#include "avgconn/avgconn.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

/// Connected graphs of order n, generated once per process.
inline const std::vector<avgconn::Graph>& connected(int n) {
  static std::vector<std::vector<avgconn::Graph>> cache(avgconn::kMaxGeneratedOrder + 1);
  if (cache[n].empty()) cache[n] = avgconn::generate_connected_graphs(n);
  return cache[n];
}

inline std::string data_path(const std::string& name) { return std::string(AVGCONN_TEST_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream file(data_path(name), std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

/// The graph of the worked example: path v0 v1 v2 and vertices a, b, c.
inline avgconn::Graph worked_example() {
  return avgconn::parse_graph(read_data("fig1.txt"), avgconn::GraphFormat::edge_list);
}

inline const std::vector<std::string>& worked_example_labels() {
  static const std::vector<std::string> labels{"v0", "v1", "v2", "a", "b", "c"};
  return labels;
}

}  // namespace testing_support
