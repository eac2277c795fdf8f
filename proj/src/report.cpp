#include "grouprep/report.hpp"

#include <algorithm>
#include <ostream>

namespace grouprep {

bool AnalysisReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

void AnalysisReport::add_check(const std::string& name, bool pass) {
  checks.push_back({name, pass});
}

std::vector<std::string> format_grid(const std::vector<std::vector<std::string>>& rows) {
  size_t cols = 0;
  for (const auto& row : rows) cols = std::max(cols, row.size());
  std::vector<size_t> width(cols, 0);
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::vector<std::string> out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      cell.resize(width[c], ' ');
      if (c) line += "  ";
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out.push_back(std::move(line));
  }
  return out;
}

void render_text(const AnalysisReport& report, std::ostream& out) {
  for (const auto& line : report.text_lines) out << line << "\n";
  if (!report.checks.empty()) {
    out << "checks:\n";
    for (const auto& c : report.checks)
      out << "  " << c.name << ": " << (c.pass ? "ok" : "FAILED") << "\n";
  }
}

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char ch : cell) {
    if (ch == '"') quoted += "\"\"";
    else quoted += ch;
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

void render_csv(const AnalysisReport& report, std::ostream& out) {
  for (const auto& row : report.csv_rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << ",";
      out << csv_escape(row[c]);
    }
    out << "\n";
  }
  for (const auto& c : report.checks)
    out << "# check " << c.name << ": " << (c.pass ? "ok" : "FAILED") << "\n";
}

void render_json(const AnalysisReport& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["group"] = report.group;
  j["result"] = report.result;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}});
  j["checks"] = checks;
  out << j.dump(2) << "\n";
}

}  // namespace grouprep
