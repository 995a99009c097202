#include "avgconn/scan.hpp"

namespace avgconn {

namespace {

nlohmann::json fraction_json(const Rational& q) {
  return {{"num", boost::multiprecision::numerator(q).str()},
          {"den", boost::multiprecision::denominator(q).str()},
          {"text", format_exact(q)}};
}

}  // namespace

void write_csv(std::ostream& out, const ScanReport& report) {
  out << kCsvHeader << '\n';
  for (const GraphRow& row : report.rows) {
    out << row.graph6 << ',' << row.n << ',' << row.count << ',' << row.total_order << ','
        << boost::multiprecision::numerator(row.average) << ',' << boost::multiprecision::denominator(row.average)
        << ',' << format_fraction(row.min_local_average) << ',';
    if (row.heavy_vertex) {
      out << *row.heavy_vertex << ',' << boost::multiprecision::numerator(*row.heavy_ratio) << ','
          << boost::multiprecision::denominator(*row.heavy_ratio);
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

nlohmann::json to_json(const ScanReport& report) {
  nlohmann::json j;
  j["kind"] = to_string(report.kind);
  j["n"] = report.n;
  j["graphs_checked"] = report.graphs_checked;
  j["passed"] = report.passed();
  j["min_average"] = report.min_average ? fraction_json(*report.min_average) : nlohmann::json(nullptr);
  j["minimizers"] = report.minimizers;

  j["violations"] = nlohmann::json::array();
  for (const Violation& v : report.violations) {
    j["violations"].push_back({{"graph6", v.graph6}, {"check", v.check}, {"detail", v.detail}});
  }
  j["findings"] = nlohmann::json::array();
  for (const Finding& f : report.findings) {
    nlohmann::json item{{"kind", f.kind}, {"graph6", f.graph6}, {"note", f.note}};
    item["vertex"] = f.vertex >= 0 ? nlohmann::json(f.vertex) : nlohmann::json(nullptr);
    item["value"] = f.value ? fraction_json(*f.value) : nlohmann::json(nullptr);
    j["findings"].push_back(std::move(item));
  }
  j["counters"] = report.counters;

  j["rows"] = nlohmann::json::array();
  for (const GraphRow& row : report.rows) {
    nlohmann::json item{{"graph6", row.graph6},
                        {"n", row.n},
                        {"N", row.count.str()},
                        {"total", row.total_order.str()},
                        {"A", fraction_json(row.average)},
                        {"min_local_average", fraction_json(row.min_local_average)},
                        {"min_local_vertex", row.min_local_vertex}};
    item["heavy_vertex"] = row.heavy_vertex ? nlohmann::json(*row.heavy_vertex) : nlohmann::json(nullptr);
    item["heavy_ratio"] = row.heavy_ratio ? fraction_json(*row.heavy_ratio) : nlohmann::json(nullptr);
    j["rows"].push_back(std::move(item));
  }
  return j;
}

}  // namespace avgconn
