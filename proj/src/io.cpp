#include "polyzero/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "polyzero/common.hpp"

namespace polyzero {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p) {
  json arr = json::array();
  for (const Complex& c : p.coeffs()) arr.push_back({c.real(), c.imag()});
  return arr;
}

Polynomial polynomial_from_json(const json& j, bool nondegenerate) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError("polynomial JSON must be a nonempty array of [re, im] pairs");
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const auto& entry : j) {
    if (entry.is_number()) {
      coeffs.emplace_back(entry.get<double>(), 0.0);
    } else if (entry.is_array() && entry.size() == 2) {
      coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    } else {
      throw ConfigError("polynomial JSON entries must be numbers or [re, im] pairs");
    }
  }
  return Polynomial(std::move(coeffs), nondegenerate);
}

void write_polynomial_text(std::ostream& os, const Polynomial& p) {
  char line[64];
  for (const Complex& c : p.coeffs()) {
    std::snprintf(line, sizeof(line), "%.17g %.17g\n", c.real(), c.imag());
    os << line;
  }
}

Polynomial read_polynomial_text(std::istream& is, bool nondegenerate) {
  std::vector<Complex> coeffs;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    double re = 0.0;
    double im = 0.0;
    if (!(ls >> re)) continue;  // blank line
    ls >> im;                   // missing imaginary part reads as 0
    coeffs.emplace_back(re, im);
  }
  if (coeffs.empty()) throw ConfigError("polynomial text file has no coefficients");
  return Polynomial(std::move(coeffs), nondegenerate);
}

Polynomial load_polynomial(const std::filesystem::path& path, bool nondegenerate) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open polynomial file: " + path.string());
  if (path.extension() == ".json") {
    json j;
    in >> j;
    return polynomial_from_json(j, nondegenerate);
  }
  return read_polynomial_text(in, nondegenerate);
}

void save_polynomial(const std::filesystem::path& path, const Polynomial& p) {
  if (path.extension() == ".json") {
    write_text_file(path, polynomial_to_json(p).dump(2) + "\n");
    return;
  }
  std::ostringstream os;
  write_polynomial_text(os, p);
  write_text_file(path, os.str());
}

json polygon_to_json(const NewtonHadamardPolygon& polygon) {
  return json{{"vertex_indices", polygon.vertex_indices},
              {"breakpoint_radii", polygon.breakpoint_radii},
              {"V", polygon.vertex_count()}};
}

json rootset_to_json(const RootSet& roots) {
  json arr = json::array();
  const auto& rs = roots.roots();
  const auto& res = roots.residuals();
  // Multiplicity is reported per cluster; list one entry per cluster so the
  // multiplicities sum to n.
  for (const RootCluster& cluster : roots.clusters()) {
    double worst = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (std::abs(rs[i] - cluster.center) <= 1e-6 * (1.0 + std::abs(cluster.center))) {
        worst = std::max(worst, res[i]);
      }
    }
    arr.push_back({{"re", cluster.center.real()},
                   {"im", cluster.center.imag()},
                   {"multiplicity", cluster.multiplicity},
                   {"residual", worst}});
  }
  return arr;
}

json theorem2_report_to_json(const Theorem2Report& report) {
  json f_table = json::array();
  for (std::size_t i = 0; i < report.c_grid.size(); ++i) {
    f_table.push_back({{"c", report.c_grid[i]}, {"f", report.failure_fraction[i]}});
  }
  return json{{"params",
               {{"n", report.n},
                {"r", report.r},
                {"interval", {report.interval.lo, report.interval.hi}},
                {"m", report.m},
                {"grid_points", report.grid_points},
                {"exhaustive", report.exhaustive},
                {"total_sequences", report.total}}},
              {"ratio_histogram",
               {{"log10_lo", -16.0},
                {"log10_hi", 0.0},
                {"bins", report.histogram}}},
              {"min_ratio", report.min_ratio},
              {"max_ratio", report.max_ratio},
              {"f_table", f_table},
              {"c_star", report.c_star},
              {"f_at_c_star", report.f_at_c_star},
              {"pass_level", std::pow(2.0, -report.m)},
              {"resolution_limit", report.resolution_limit}};
}

json turan_table_to_json(int m, const std::vector<TuranEstimate>& table) {
  json rows = json::array();
  for (const TuranEstimate& row : table) {
    rows.push_back({{"interval_length", row.interval_length},
                    {"min_ratio", row.min_ratio},
                    {"b_emp", row.b_emp}});
  }
  return json{{"m", m}, {"rows", rows}};
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open output file: " + path.string());
  out << contents;
  out.flush();
  if (!out) throw ConfigError("failed writing output file: " + path.string());
}

}  // namespace polyzero
