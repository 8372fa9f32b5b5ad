#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <sstream>
#include <vector>

#include "symloc/bench.hpp"
#include "symloc/metrics.hpp"

namespace symloc {

namespace {

using nlohmann::json;

struct Row {
  std::string environment;
  std::string filter;
  int n = 0;
  std::string setting;
  double mean_mse = 0.0;
  double mean_fse = 0.0;
  double std_fse = 0.0;
  double mean_time_s = 0.0;
  int n_runs = 0;
  bool useless = false;
};

struct Parsed {
  std::string env_name;
  double threshold = 0.0;
  std::vector<Row> rows;
};

Parsed parse_report(const std::string& report_json_text) {
  json j;
  try {
    j = json::parse(report_json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("report document: ") + e.what());
  }
  Parsed p;
  p.env_name = j.at("environment").at("name").get<std::string>();
  p.threshold = mse_random_threshold(j.at("environment").at("width").get<double>(),
                                     j.at("environment").at("height").get<double>());
  for (const json& r : j.at("rows")) {
    Row row;
    row.environment = r.at("environment").get<std::string>();
    row.filter = r.at("filter").get<std::string>();
    row.n = r.at("N").get<int>();
    row.setting = r.at("setting").get<std::string>();
    row.mean_mse = r.at("mean_mse").get<double>();
    row.mean_fse = r.at("mean_fse").get<double>();
    row.std_fse = r.at("std_fse").get<double>();
    row.mean_time_s = r.at("mean_time_s").get<double>();
    row.n_runs = r.at("n_runs").get<int>();
    row.useless = row.mean_mse > p.threshold;
    p.rows.push_back(row);
  }
  if (p.rows.empty()) throw std::runtime_error("report document: no rows");
  return p;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void pad_columns(std::vector<std::vector<std::string>>& table, std::ostringstream& out) {
  std::vector<std::size_t> width;
  for (const auto& row : table) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  }
}

}  // namespace

std::string render_report_tables(const std::string& report_json_text) {
  const Parsed p = parse_report(report_json_text);

  // Stable axes: settings and filters in first-appearance order, N ascending.
  std::vector<std::string> settings;
  std::vector<std::string> filters;
  std::vector<int> counts;
  for (const Row& r : p.rows) {
    if (std::find(settings.begin(), settings.end(), r.setting) == settings.end())
      settings.push_back(r.setting);
    if (std::find(filters.begin(), filters.end(), r.filter) == filters.end())
      filters.push_back(r.filter);
    if (std::find(counts.begin(), counts.end(), r.n) == counts.end()) counts.push_back(r.n);
  }
  std::sort(counts.begin(), counts.end());

  auto find_row = [&](const std::string& filter, int n, const std::string& setting) -> const Row* {
    for (const Row& r : p.rows)
      if (r.filter == filter && r.n == n && r.setting == setting) return &r;
    return nullptr;
  };

  std::ostringstream out;
  out << "environment: " << p.env_name << "   (random-guess MSE level " << fmt("%.2f", p.threshold)
      << ")\n";
  bool any_useless = false;

  for (const std::string& setting : settings) {
    out << "\nmean FSE (std), setting " << setting << ":\n";
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> header{"N"};
    for (const std::string& f : filters) header.push_back(f);
    table.push_back(header);
    for (int n : counts) {
      std::vector<std::string> line{n == 0 ? "-" : std::to_string(n)};
      bool any = false;
      for (const std::string& f : filters) {
        const Row* r = find_row(f, n, setting);
        if (r) {
          any = true;
          std::string cell = fmt("%.2f", r->mean_fse) + (" (" + fmt("%.2f", r->std_fse) + ")");
          if (r->useless) {
            cell += " *";
            any_useless = true;
          }
          line.push_back(cell);
        } else {
          line.push_back("");
        }
      }
      if (any) table.push_back(line);
    }
    pad_columns(table, out);
  }

  out << "\nruntime (totals over n_runs):\n";
  std::vector<std::vector<std::string>> table{{"filter", "N", "setting", "mean FSE", "total time [s]"}};
  for (const Row& r : p.rows) {
    table.push_back({r.filter, r.n == 0 ? "-" : std::to_string(r.n), r.setting,
                     fmt("%.2f", r.mean_fse) + std::string(r.useless ? " *" : ""),
                     fmt("%.1f", r.mean_time_s * r.n_runs)});
  }
  pad_columns(table, out);

  if (any_useless) out << "\n* MSE above the random-guess level: filtering useless there.\n";
  return out.str();
}

std::string render_report_csv(const std::string& report_json_text) {
  const Parsed p = parse_report(report_json_text);
  std::ostringstream out;
  out << "environment,filter,N,setting,mean_mse,mean_fse,std_fse,mean_time_s,n_runs,useless\n";
  for (const Row& r : p.rows) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%s,%d,%s,%.17g,%.17g,%.17g,%.17g,%d,%d\n",
                  r.environment.c_str(), r.filter.c_str(), r.n, r.setting.c_str(), r.mean_mse,
                  r.mean_fse, r.std_fse, r.mean_time_s, r.n_runs, r.useless ? 1 : 0);
    out << buf;
  }
  return out.str();
}

}  // namespace symloc
