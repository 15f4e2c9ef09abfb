#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace longtube::cli {

namespace {

using json = nlohmann::ordered_json;

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::at_most: return "at_most";
    case Relation::at_least: return "at_least";
    case Relation::equals: return "equals";
  }
  return "at_most";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(fmt(v)); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json config_json(const SuiteConfig& c) {
  json j;
  j["ell_grid"] = json::array();
  for (double e : c.ell_grid) j["ell_grid"].push_back(number(e));
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["modes_K"] = c.modes_K;
  j["tol"] = c.tol ? number(*c.tol) : json(nullptr);
  j["format"] = c.format;
  return j;
}

}  // namespace

ReportRow make_row(std::string suite, const BoundReport& r, std::optional<double> ell,
                   std::optional<std::uint64_t> seed) {
  ReportRow row;
  row.suite = std::move(suite);
  row.name = r.name;
  row.value = r.value;
  row.bound = r.bound;
  row.satisfied = r.satisfied;
  row.margin = r.margin;
  row.ell = ell;
  row.seed = seed;
  row.formula = r.formula;
  row.relation = relation_name(r.relation);
  row.tolerance = r.tolerance;
  return row;
}

bool ReportDocument::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.satisfied; });
}

void ReportDocument::canonicalize() {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    if (a.ell.has_value() != b.ell.has_value()) return !a.ell.has_value();
    if (a.ell && *a.ell != *b.ell) return *a.ell < *b.ell;
    if (a.seed.has_value() != b.seed.has_value()) return !a.seed.has_value();
    return a.seed && *a.seed < *b.seed;
  });
}

std::string emit_report(const ReportDocument& doc, const std::string& format) {
  if (format == "csv") {
    std::string out = "suite,name,value,bound,satisfied,margin,ell,seed\n";
    for (const ReportRow& r : doc.rows) {
      out += csv_field(r.suite) + ',' + csv_field(r.name) + ',' + fmt(r.value) + ',' +
             fmt(r.bound) + ',' + (r.satisfied ? "true" : "false") + ',' + fmt(r.margin) + ',' +
             (r.ell ? fmt(*r.ell) : "") + ',' + (r.seed ? std::to_string(*r.seed) : "") + '\n';
    }
    return out;
  }
  if (format != "json") throw std::invalid_argument("unsupported format: " + format);

  json j;
  j["tool"] = "longtube";
  j["version"] = doc.tool_version;
  j["subcommand"] = doc.subcommand;
  j["config"] = config_json(doc.config);
  j["pass"] = doc.pass();
  j["rows"] = json::array();
  for (const ReportRow& r : doc.rows) {
    json row;
    row["suite"] = r.suite;
    row["name"] = r.name;
    row["value"] = number(r.value);
    row["bound"] = number(r.bound);
    row["relation"] = r.relation;
    row["tolerance"] = number(r.tolerance);
    row["satisfied"] = r.satisfied;
    row["margin"] = number(r.margin);
    row["ell"] = r.ell ? number(*r.ell) : json(nullptr);
    row["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    if (r.trials) row["trials"] = *r.trials;
    if (r.violations) row["violations"] = *r.violations;
    row["formula"] = r.formula;
    j["rows"].push_back(std::move(row));
  }
  j["tables"] = json::array();
  for (const Table& t : doc.tables) {
    json tj;
    tj["name"] = t.name;
    tj["columns"] = t.columns;
    tj["rows"] = json::array();
    for (const auto& r : t.rows) {
      json rj = json::array();
      for (double v : r) rj.push_back(number(v));
      tj["rows"].push_back(std::move(rj));
    }
    j["tables"].push_back(std::move(tj));
  }
  return j.dump(2) + "\n";
}

}  // namespace longtube::cli
