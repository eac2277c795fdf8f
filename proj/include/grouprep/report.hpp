#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace grouprep {

struct CheckResult {
  std::string name;
  bool pass = false;
};

// Uniform result of one CLI analysis command, renderable as text, CSV or
// JSON.  The JSON layout is {command, group, result, checks}.
struct AnalysisReport {
  std::string command;
  nlohmann::ordered_json group;   // {"order": n, "labels": [...]}
  nlohmann::ordered_json result;  // command-specific payload
  std::vector<CheckResult> checks;

  // Pre-rendered human and CSV views (filled by the command handlers).
  std::vector<std::string> text_lines;
  std::vector<std::vector<std::string>> csv_rows;

  bool all_pass() const;
  void add_check(const std::string& name, bool pass);
};

void render_text(const AnalysisReport& report, std::ostream& out);
void render_csv(const AnalysisReport& report, std::ostream& out);
void render_json(const AnalysisReport& report, std::ostream& out);

// Pads cells into an aligned grid (two-space separator).
std::vector<std::string> format_grid(const std::vector<std::vector<std::string>>& rows);

}  // namespace grouprep
