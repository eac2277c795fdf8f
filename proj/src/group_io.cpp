#include <fstream>
#include <istream>
#include <sstream>

#include "grouprep/errors.hpp"
#include "grouprep/group.hpp"

namespace grouprep {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Reads lines, dropping blanks and '#' comments.
std::vector<std::string> meaningful_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    lines.push_back(t);
  }
  return lines;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::vector<GroupElement> parse_generator_file(std::istream& in) {
  std::vector<std::string> lines = meaningful_lines(in);
  size_t pos = 0;
  auto next = [&]() -> const std::string& {
    if (pos >= lines.size()) throw ParseError("unexpected end of generator file");
    return lines[pos++];
  };

  std::string kind_line = next();
  if (kind_line.rfind("kind:", 0) != 0)
    throw ParseError("generator file must start with 'kind: matrix|permutation'");
  std::string kind = trim(kind_line.substr(5));
  if (kind != "matrix" && kind != "permutation")
    throw ParseError("unknown kind '" + kind + "'");

  std::string size_line = next();
  const char* size_key = kind == "matrix" ? "dimension:" : "degree:";
  if (size_line.rfind(size_key, 0) != 0)
    throw ParseError(std::string("expected '") + size_key + " <n>'");
  int n = 0;
  try {
    n = std::stoi(trim(size_line.substr(std::string(size_key).size())));
  } catch (const std::exception&) {
    throw ParseError("invalid size in generator file");
  }
  if (n <= 0) throw ParseError("size must be positive");

  std::vector<GroupElement> gens;
  while (pos < lines.size()) {
    std::string head = next();
    if (head.rfind("generator", 0) != 0)
      throw ParseError("expected 'generator [label]', got '" + head + "'");
    std::string label = trim(head.substr(9));
    if (kind == "matrix") {
      QuadMatrix m(n, n);
      for (int i = 0; i < n; ++i) {
        std::vector<std::string> cells = split(next(), ',');
        if (static_cast<int>(cells.size()) != n)
          throw ParseError("matrix row needs " + std::to_string(n) +
                           " comma-separated entries");
        for (int j = 0; j < n; ++j) m.at(i, j) = QuadNumber::parse(cells[j]);
      }
      gens.push_back(GroupElement::from_matrix(std::move(m), label));
    } else {
      gens.push_back(
          GroupElement::from_permutation(Permutation::parse(next(), n), label));
    }
  }
  if (gens.empty()) throw ParseError("generator file declares no generators");
  return gens;
}

std::vector<GroupElement> load_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file '" + path + "'");
  return parse_generator_file(in);
}

std::pair<std::vector<std::string>, std::vector<std::vector<int>>>
parse_table_csv(std::istream& in) {
  std::vector<std::string> lines = meaningful_lines(in);
  if (lines.empty()) throw ParseError("empty table CSV");
  std::vector<std::string> header = split(lines[0], ',');
  if (header.size() < 2 || !trim(header[0]).empty())
    throw ParseError("table CSV header must start with an empty cell");
  std::vector<std::string> labels;
  for (size_t i = 1; i < header.size(); ++i) labels.push_back(trim(header[i]));
  const int n = static_cast<int>(labels.size());
  auto index_of = [&](const std::string& lab) {
    for (int i = 0; i < n; ++i)
      if (labels[i] == lab) return i;
    throw ParseError("unknown label '" + lab + "' in table CSV");
  };
  if (static_cast<int>(lines.size()) != n + 1)
    throw ParseError("table CSV needs one row per element");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<bool> seen(n, false);
  for (size_t r = 1; r < lines.size(); ++r) {
    std::vector<std::string> cells = split(lines[r], ',');
    if (static_cast<int>(cells.size()) != n + 1)
      throw ParseError("table CSV row has wrong cell count");
    int i = index_of(trim(cells[0]));
    if (seen[i]) throw ParseError("duplicate row label in table CSV");
    seen[i] = true;
    for (int j = 0; j < n; ++j) table[i][j] = index_of(trim(cells[j + 1]));
  }
  return {std::move(labels), std::move(table)};
}

}  // namespace grouprep
