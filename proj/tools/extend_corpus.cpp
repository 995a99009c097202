// Grows a graph6 corpus by one vertex: every connected graph of order n+1
// that contains a member of the corpus as an induced subgraph on n vertices,
// one per isomorphism class. Starting from all connected graphs of order n,
// the output is all connected graphs of order n+1.

#include "avgconn/avgconn.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Extend a graph6 corpus of connected graphs by one vertex", "avgconn-extend"};
  std::string in;
  std::string out;
  int n = 0;
  int min_degree = 0;
  bool count_only = false;
  app.add_option("--in", in, "graph6 corpus of connected graphs, one per line");
  app.add_option("--n", n, "Start from the built-in corpus of this order instead of --in")->check(CLI::Range(1, 7));
  app.add_option("--min-degree", min_degree, "Keep only output graphs with at least this minimum degree");
  app.add_option("--out", out, "Output file (default stdout)");
  app.add_flag("--count", count_only, "Print only the number of output graphs");
  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<avgconn::Graph> base;
    if (!in.empty()) {
      std::ifstream file(in, std::ios::binary);
      if (!file) throw std::runtime_error("cannot read '" + in + "'");
      base = avgconn::read_graph6_corpus(file);
    } else if (n > 0) {
      base = avgconn::generate_connected_graphs(n);
    } else {
      throw std::runtime_error("need --in or --n");
    }

    std::vector<avgconn::Graph> grown = avgconn::extend_by_vertex(base, true);
    std::erase_if(grown, [&](const avgconn::Graph& g) { return g.min_degree() < min_degree; });

    std::ofstream file;
    if (!out.empty()) {
      file.open(out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write '" + out + "'");
    }
    std::ostream& sink = out.empty() ? std::cout : file;
    if (count_only) {
      sink << grown.size() << '\n';
    } else {
      for (const avgconn::Graph& g : grown) sink << avgconn::to_graph6(g) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
