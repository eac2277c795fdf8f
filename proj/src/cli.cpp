#include "grouprep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "grouprep/algebra.hpp"
#include "grouprep/clebsch.hpp"
#include "grouprep/errors.hpp"
#include "grouprep/group.hpp"
#include "grouprep/polynomial.hpp"
#include "grouprep/report.hpp"
#include "grouprep/representation.hpp"
#include "grouprep/structure.hpp"
#include "grouprep/td_fixture.hpp"

namespace grouprep::cli {
namespace {

using nlohmann::ordered_json;

// Lazily computed analysis state shared by the command handlers.
struct Session {
  Group group;
  bool td = false;

  const std::vector<ConjugacyClass>& classes() {
    if (!classes_) classes_ = conjugacy_classes(group);
    return *classes_;
  }

  // Character table with canonical row names: for the built-in fixture the
  // rows are renamed after the reference representations (A, B, D3, Td, Tdp)
  // by matching characters; otherwise the generic I1..Ik names are kept.
  const CharacterTable& table() {
    if (!table_) {
      table_ = character_table(group);
      if (td) {
        for (const auto& fix : td_fixture_irreps(group)) {
          Character c = character_of(fix, table_->classes);
          for (auto& row : table_->rows) {
            if (row.values == c.values) {
              row.name = fix.name;
              break;
            }
          }
        }
      }
    }
    return *table_;
  }

  // Irreducible matrix representations, one per table row, in row order.
  const std::vector<Representation>& irreps() {
    if (!irreps_) {
      const CharacterTable& t = table();
      if (td) {
        std::vector<Representation> ordered;
        for (const auto& row : t.rows) {
          for (auto& fix : td_fixture_irreps(group)) {
            if (fix.name == row.name) {
              ordered.push_back(std::move(fix));
              break;
            }
          }
        }
        if (ordered.size() != t.rows.size())
          throw Error("fixture representations do not cover the character table");
        irreps_ = std::move(ordered);
      } else {
        irreps_ = construct_irreps(group, t);
      }
    }
    return *irreps_;
  }

 private:
  std::optional<std::vector<ConjugacyClass>> classes_;
  std::optional<CharacterTable> table_;
  std::optional<std::vector<Representation>> irreps_;
};

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

ordered_json group_json(const Group& g) {
  ordered_json labels = ordered_json::array();
  for (int i = 0; i < g.order(); ++i) labels.push_back(g.label(i));
  ordered_json j;
  j["order"] = g.order();
  j["labels"] = std::move(labels);
  return j;
}

std::string join_labels(const Group& g, const std::vector<int>& members,
                        const char* sep = ",") {
  std::string s;
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) s += sep;
    s += g.label(members[i]);
  }
  return s;
}

ordered_json labels_json(const Group& g, const std::vector<int>& members) {
  ordered_json a = ordered_json::array();
  for (int m : members) a.push_back(g.label(m));
  return a;
}

ordered_json matrix_json(const QuadMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_bracket(const QuadMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m.at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

std::vector<std::vector<std::string>> matrix_cells(const QuadMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) cells[i].push_back(m.at(i, j).str());
  return cells;
}

void append_grid(AnalysisReport& report,
                 const std::vector<std::vector<std::string>>& cells) {
  for (auto& line : format_grid(cells)) report.text_lines.push_back(line);
}

std::vector<int> parse_member_spec(const Group& g, const std::string& spec) {
  std::vector<int> members;
  std::string cur;
  std::istringstream in(spec);
  while (std::getline(in, cur, ',')) {
    std::string label = trimmed(cur);
    if (label.empty()) throw ParseError("empty label in subgroup spec");
    members.push_back(g.index_of(label));
  }
  if (members.empty()) throw ParseError("empty subgroup spec");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

// Column headers "<size>x<representative>" in class order.
std::vector<std::string> class_headers(const Group& g,
                                       const std::vector<ConjugacyClass>& classes) {
  std::vector<std::string> h;
  for (const auto& c : classes)
    h.push_back(std::to_string(c.size()) + "x" + g.label(c.representative));
  return h;
}

const Representation& irrep_by_name(const std::vector<Representation>& irreps,
                                    const std::string& name) {
  for (const auto& r : irreps)
    if (r.name == name) return r;
  throw ParseError("unknown irreducible representation '" + name + "'");
}

// Exact permutation content of a 0/1 matrix: map[j] = the single row holding
// a one in column j.  Empty result when the matrix is not a permutation
// matrix.
std::vector<int> permutation_of_matrix(const QuadMatrix& m) {
  if (m.rows() != m.cols()) return {};
  std::vector<int> map(m.cols(), -1);
  std::vector<bool> used(m.rows(), false);
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      const QuadNumber& e = m.at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_one() || map[j] != -1) return {};
      map[j] = i;
    }
    if (map[j] == -1 || used[map[j]]) return {};
    used[map[j]] = true;
  }
  return map;
}

QuadMatrix assemble_block_diagonal(const std::vector<BlockRef>& blocks,
                                   const std::vector<Representation>& irreps,
                                   int element) {
  int n = 0;
  for (const auto& b : blocks) n += b.dim;
  QuadMatrix m(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    const QuadMatrix& d = irrep_by_name(irreps, b.irrep).at(element);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) m.at(off + i, off + j) = d.at(i, j);
    off += b.dim;
  }
  return m;
}

AnalysisReport handle_table(Session& s) {
  const Group& g = s.group;
  const auto& t = g.table();
  AnalysisReport report;
  report.command = "table";

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (int j = 0; j < g.order(); ++j) header.push_back(g.label(j));
  cells.push_back(std::move(header));
  ordered_json products = ordered_json::array();
  for (int i = 0; i < g.order(); ++i) {
    std::vector<std::string> row{g.label(i)};
    ordered_json jrow = ordered_json::array();
    for (int j = 0; j < g.order(); ++j) {
      row.push_back(g.label(t[i][j]));
      jrow.push_back(g.label(t[i][j]));
    }
    cells.push_back(std::move(row));
    products.push_back(std::move(jrow));
  }
  append_grid(report, cells);
  report.csv_rows = cells;
  report.result["labels"] = labels_json(g, [&] {
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    return all;
  }());
  report.result["products"] = std::move(products);

  bool identity_ok = true;
  for (int i = 0; i < g.order(); ++i)
    identity_ok = identity_ok && t[0][i] == i && t[i][0] == i;
  bool inverses_ok = true;
  for (int i = 0; i < g.order(); ++i)
    inverses_ok = inverses_ok && t[i][g.inverse_of(i)] == g.identity();
  report.add_check("latin_square", table_is_latin_square(t));
  report.add_check("associativity", table_is_associative(t));
  report.add_check("identity_element", identity_ok);
  report.add_check("inverses", inverses_ok);
  return report;
}

AnalysisReport handle_orders(Session& s) {
  const Group& g = s.group;
  AnalysisReport report;
  report.command = "orders";

  std::map<int, int> counts;
  std::vector<std::vector<std::string>> cells{{"element", "order"}};
  ordered_json rows = ordered_json::array();
  bool divide = true;
  for (int i = 0; i < g.order(); ++i) {
    int o = g.element_order(i);
    counts[o]++;
    divide = divide && g.order() % o == 0;
    cells.push_back({g.label(i), std::to_string(o)});
    rows.push_back(ordered_json{{"element", g.label(i)}, {"order", o}});
  }
  append_grid(report, cells);
  std::string summary;
  ordered_json jcounts;
  for (const auto& [o, c] : counts) {
    if (!summary.empty()) summary += ", ";
    summary += "order " + std::to_string(o) + ": " + std::to_string(c);
    jcounts[std::to_string(o)] = c;
  }
  report.text_lines.push_back("counts: " + summary);
  report.csv_rows = cells;
  report.result["orders"] = std::move(rows);
  report.result["counts"] = std::move(jcounts);
  report.add_check("orders_divide_group_order", divide);
  report.add_check("identity_order_one", g.element_order(g.identity()) == 1);
  return report;
}

AnalysisReport handle_classes(Session& s) {
  const Group& g = s.group;
  const auto& classes = s.classes();
  AnalysisReport report;
  report.command = "classes";

  std::vector<std::vector<std::string>> cells{
      {"class", "size", "reciprocal", "members"}};
  ordered_json rows = ordered_json::array();
  std::vector<bool> seen(g.order(), false);
  bool disjoint = true;
  bool sizes_divide = true;
  int total = 0;
  for (const auto& cl : classes) {
    total += cl.size();
    sizes_divide = sizes_divide && g.order() % cl.size() == 0;
    for (int m : cl.members) {
      if (seen[m]) disjoint = false;
      seen[m] = true;
    }
    ConjugacyClass rec = reciprocal_class(g, cl, classes);
    cells.push_back({g.label(cl.representative), std::to_string(cl.size()),
                     g.label(rec.representative), join_labels(g, cl.members)});
    rows.push_back(ordered_json{{"representative", g.label(cl.representative)},
                                {"size", cl.size()},
                                {"reciprocal", g.label(rec.representative)},
                                {"members", labels_json(g, cl.members)}});
  }
  bool cover = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  append_grid(report, cells);
  report.csv_rows = cells;
  report.result["classes"] = std::move(rows);
  report.add_check("partition", disjoint && cover);
  report.add_check("class_equation", total == g.order());
  report.add_check("sizes_divide_order", sizes_divide);
  return report;
}

AnalysisReport handle_subgroups(Session& s) {
  const Group& g = s.group;
  AnalysisReport report;
  report.command = "subgroups";

  auto lattice = subgroup_lattice(g);
  bool verified = true;
  bool lagrange = true;
  std::map<int, int> by_order;
  std::vector<std::vector<std::string>> cells{{"order", "normal", "members"}};
  ordered_json rows = ordered_json::array();
  for (const auto& h : lattice) {
    lagrange = lagrange && g.order() % h.order() == 0;
    by_order[h.order()]++;
    try {
      make_subgroup(g, h.members);
    } catch (const Error&) {
      verified = false;
    }
    cells.push_back({std::to_string(h.order()), h.normal ? "yes" : "no",
                     join_labels(g, h.members)});
    rows.push_back(ordered_json{{"order", h.order()},
                                {"normal", h.normal},
                                {"members", labels_json(g, h.members)}});
  }
  report.text_lines.push_back("subgroups: " + std::to_string(lattice.size()) +
                              " (including the trivial subgroup and the whole group)");
  std::string summary;
  ordered_json jcounts;
  for (const auto& [o, c] : by_order) {
    if (!summary.empty()) summary += ", ";
    summary += "order " + std::to_string(o) + ": " + std::to_string(c);
    jcounts[std::to_string(o)] = c;
  }
  report.text_lines.push_back("by order: " + summary);
  append_grid(report, cells);
  report.csv_rows = cells;
  report.result["count"] = static_cast<int>(lattice.size());
  report.result["by_order"] = std::move(jcounts);
  report.result["subgroups"] = std::move(rows);
  report.add_check("all_subgroups_verified", verified);
  report.add_check("lagrange", lagrange);
  return report;
}

AnalysisReport handle_normal(Session& s) {
  const Group& g = s.group;
  AnalysisReport report;
  report.command = "normal";

  auto normals = normal_subgroups(g);
  bool closed = true;
  std::vector<std::vector<std::string>> cells{{"order", "quotient", "members"}};
  ordered_json rows = ordered_json::array();
  for (const auto& h : normals) {
    for (int x = 0; x < g.order() && closed; ++x) {
      for (int m : h.members) {
        int conj = g.multiply(g.multiply(x, m), g.inverse_of(x));
        if (!h.contains(conj)) {
          closed = false;
          break;
        }
      }
    }
    std::string qtype = isomorphism_type(quotient_group(g, h).quotient);
    cells.push_back(
        {std::to_string(h.order()), qtype, join_labels(g, h.members)});
    rows.push_back(ordered_json{{"order", h.order()},
                                {"quotient", qtype},
                                {"members", labels_json(g, h.members)}});
  }
  report.text_lines.push_back("normal subgroups: " +
                              std::to_string(normals.size()));
  append_grid(report, cells);
  report.csv_rows = cells;
  report.result["count"] = static_cast<int>(normals.size());
  report.result["normal_subgroups"] = std::move(rows);
  report.add_check("conjugation_closed", closed);
  return report;
}

AnalysisReport handle_cosets(Session& s, const std::string& spec,
                             const std::string& side) {
  const Group& g = s.group;
  Subgroup h = make_subgroup(g, parse_member_spec(g, spec));
  auto left = coset_decomposition(g, h, CosetSide::left);
  auto right = coset_decomposition(g, h, CosetSide::right);
  const auto& chosen = side == "right" ? right : left;

  AnalysisReport report;
  report.command = "cosets";
  std::vector<bool> seen(g.order(), false);
  bool disjoint = true;
  bool equal_sizes = true;
  for (const auto& coset : chosen.cosets) {
    equal_sizes = equal_sizes &&
                  static_cast<int>(coset.size()) == h.order();
    for (int m : coset) {
      if (seen[m]) disjoint = false;
      seen[m] = true;
    }
  }
  bool cover = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  std::set<std::vector<int>> ls(left.cosets.begin(), left.cosets.end());
  std::set<std::vector<int>> rs(right.cosets.begin(), right.cosets.end());
  bool agree = ls == rs;

  std::vector<std::vector<std::string>> cells{{"coset", "members"}};
  ordered_json jcosets = ordered_json::array();
  for (size_t i = 0; i < chosen.cosets.size(); ++i) {
    cells.push_back(
        {std::to_string(i), join_labels(g, chosen.cosets[i])});
    jcosets.push_back(labels_json(g, chosen.cosets[i]));
  }
  report.text_lines.push_back("subgroup {" + join_labels(g, h.members) +
                              "}, index " + std::to_string(chosen.index()) +
                              ", " + side + " cosets:");
  append_grid(report, cells);
  report.text_lines.push_back(std::string("normal: ") +
                              (h.normal ? "yes" : "no"));
  report.csv_rows = cells;
  report.result["subgroup"] = labels_json(g, h.members);
  report.result["side"] = side;
  report.result["index"] = chosen.index();
  report.result["normal"] = h.normal;
  report.result["cosets"] = std::move(jcosets);
  report.add_check("partition", disjoint && cover);
  report.add_check("equal_sizes", equal_sizes);
  report.add_check("left_right_agreement_matches_normality", agree == h.normal);
  return report;
}

AnalysisReport handle_quotient(Session& s, const std::string& spec) {
  const Group& g = s.group;
  Subgroup h = make_subgroup(g, parse_member_spec(g, spec));
  QuotientGroup q = quotient_group(g, h);
  const Group& quot = q.quotient;

  bool proj_ok = true;
  for (int x = 0; x < g.order() && proj_ok; ++x)
    for (int y = 0; y < g.order(); ++y) {
      if (q.projection[g.multiply(x, y)] !=
          quot.multiply(q.projection[x], q.projection[y])) {
        proj_ok = false;
        break;
      }
    }
  std::string type = isomorphism_type(quot);

  AnalysisReport report;
  report.command = "quotient";
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (int j = 0; j < quot.order(); ++j) header.push_back(quot.label(j));
  cells.push_back(std::move(header));
  ordered_json products = ordered_json::array();
  for (int i = 0; i < quot.order(); ++i) {
    std::vector<std::string> row{quot.label(i)};
    ordered_json jrow = ordered_json::array();
    for (int j = 0; j < quot.order(); ++j) {
      row.push_back(quot.label(quot.table()[i][j]));
      jrow.push_back(quot.label(quot.table()[i][j]));
    }
    cells.push_back(std::move(row));
    products.push_back(std::move(jrow));
  }
  report.text_lines.push_back("quotient by {" + join_labels(g, h.members) +
                              "}: order " + std::to_string(quot.order()) +
                              ", isomorphism type " + type);
  append_grid(report, cells);
  ordered_json jcosets = ordered_json::array();
  std::vector<std::vector<std::string>> coset_cells{{"coset", "members"}};
  for (size_t i = 0; i < q.cosets.size(); ++i) {
    coset_cells.push_back({quot.label(static_cast<int>(i)),
                           join_labels(g, q.cosets[i])});
    jcosets.push_back(ordered_json{{"label", quot.label(static_cast<int>(i))},
                                   {"members", labels_json(g, q.cosets[i])}});
  }
  append_grid(report, coset_cells);
  report.csv_rows = cells;
  report.result["subgroup"] = labels_json(g, h.members);
  report.result["order"] = quot.order();
  report.result["isomorphism_type"] = type;
  report.result["cosets"] = std::move(jcosets);
  report.result["products"] = std::move(products);
  report.add_check("normal_subgroup", h.normal);
  report.add_check("projection_homomorphism", proj_ok);
  return report;
}

AnalysisReport handle_genpairs(Session& s, bool count_only) {
  const Group& g = s.group;
  auto pairs = generating_pairs(g);
  auto dual = generating_pairs_by_maximal_subgroups(g);

  AnalysisReport report;
  report.command = "genpairs";
  report.text_lines.push_back("generating pairs: " +
                              std::to_string(pairs.size()));
  report.csv_rows.push_back({"x", "y"});
  ordered_json jpairs = ordered_json::array();
  if (!count_only) {
    for (const auto& [a, b] : pairs) {
      report.text_lines.push_back(g.label(a) + "," + g.label(b));
      report.csv_rows.push_back({g.label(a), g.label(b)});
      jpairs.push_back(ordered_json::array({g.label(a), g.label(b)}));
    }
  }
  report.result["count"] = static_cast<int>(pairs.size());
  if (!count_only) report.result["pairs"] = std::move(jpairs);
  report.add_check("dual_method_agreement", pairs == dual);
  return report;
}

AnalysisReport handle_chartable(Session& s) {
  const Group& g = s.group;
  const CharacterTable& t = s.table();

  AnalysisReport report;
  report.command = "chartable";
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (auto& h : class_headers(g, t.classes)) header.push_back(h);
  cells.push_back(std::move(header));
  ordered_json rows = ordered_json::array();
  bool integer_dims = true;
  int sum_squares = 0;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<std::string> row{t.rows[i].name};
    ordered_json values = ordered_json::array();
    for (const auto& v : t.rows[i].values) {
      row.push_back(v.str());
      values.push_back(v.str());
    }
    cells.push_back(std::move(row));
    rows.push_back(
        ordered_json{{"name", t.rows[i].name}, {"values", std::move(values)}});
    try {
      int d = t.dimension(static_cast<int>(i));
      integer_dims = integer_dims && d >= 1;
      sum_squares += d * d;
    } catch (const Error&) {
      integer_dims = false;
    }
  }
  append_grid(report, cells);
  report.csv_rows = cells;
  ordered_json jclasses = ordered_json::array();
  for (const auto& c : t.classes)
    jclasses.push_back(ordered_json{{"representative", g.label(c.representative)},
                                    {"size", c.size()}});
  report.result["classes"] = std::move(jclasses);
  report.result["rows"] = std::move(rows);
  report.add_check("row_orthogonality", t.rows_orthogonal());
  report.add_check("column_orthogonality", t.columns_orthogonal());
  report.add_check("sum_of_squares_equals_order",
                   integer_dims && sum_squares == g.order());
  report.add_check("integer_dimensions", integer_dims);
  return report;
}

AnalysisReport handle_irreps(Session& s) {
  const Group& g = s.group;
  const CharacterTable& t = s.table();
  const auto& irreps = s.irreps();

  AnalysisReport report;
  report.command = "irreps";
  bool homo = true;
  bool chars = true;
  bool dims = true;
  ordered_json jirreps = ordered_json::array();
  report.csv_rows.push_back({"irrep", "element", "matrix"});
  for (size_t i = 0; i < irreps.size(); ++i) {
    const Representation& rep = irreps[i];
    homo = homo && rep.is_homomorphism();
    chars = chars && character_of(rep, t.classes).values == t.rows[i].values;
    dims = dims && rep.dim == t.dimension(static_cast<int>(i));
    report.text_lines.push_back(
        "irrep " + rep.name + "  dimension " + std::to_string(rep.dim) +
        (rep.is_orthogonal() ? "  (orthogonal matrices)" : ""));
    ordered_json jmats = ordered_json::array();
    for (int e = 0; e < g.order(); ++e) {
      report.text_lines.push_back("  " + g.label(e) + ": " +
                                  matrix_bracket(rep.at(e)));
      report.csv_rows.push_back(
          {rep.name, g.label(e), matrix_bracket(rep.at(e))});
      jmats.push_back(ordered_json{{"element", g.label(e)},
                                   {"matrix", matrix_json(rep.at(e))}});
    }
    ordered_json values = ordered_json::array();
    for (const auto& v : t.rows[i].values) values.push_back(v.str());
    jirreps.push_back(ordered_json{{"name", rep.name},
                                   {"dimension", rep.dim},
                                   {"character", std::move(values)},
                                   {"matrices", std::move(jmats)}});
  }
  report.result["irreps"] = std::move(jirreps);
  report.add_check("homomorphism_each", homo);
  report.add_check("characters_match_table", chars);
  report.add_check("dimensions_match", dims);
  return report;
}

AnalysisReport handle_orthocheck(Session& s) {
  const auto& irreps = s.irreps();
  const CharacterTable& t = s.table();
  QuadMatrix u = group_space_matrix(irreps);
  QuadMatrix v = class_space_matrix(t);
  OrthonormalityReport ru = orthonormality_report(u);
  OrthonormalityReport rv = orthonormality_report(v);

  AnalysisReport report;
  report.command = "orthocheck";
  report.text_lines.push_back("group-space matrix (" +
                              std::to_string(u.rows()) + "x" +
                              std::to_string(u.cols()) + "):");
  append_grid(report, matrix_cells(u));
  report.text_lines.push_back("max deviation from orthonormality: " +
                              ru.max_deviation.str());
  report.text_lines.push_back("class-space matrix (" +
                              std::to_string(v.rows()) + "x" +
                              std::to_string(v.cols()) + "):");
  append_grid(report, matrix_cells(v));
  report.text_lines.push_back("max deviation from orthonormality: " +
                              rv.max_deviation.str());
  report.csv_rows.push_back({"matrix", "rows_orthonormal", "cols_orthonormal",
                             "max_deviation"});
  report.csv_rows.push_back({"group_space", ru.rows ? "yes" : "no",
                             ru.cols ? "yes" : "no", ru.max_deviation.str()});
  report.csv_rows.push_back({"class_space", rv.rows ? "yes" : "no",
                             rv.cols ? "yes" : "no", rv.max_deviation.str()});
  report.result["group_space"] =
      ordered_json{{"matrix", matrix_json(u)},
                   {"rows_orthonormal", ru.rows},
                   {"cols_orthonormal", ru.cols},
                   {"max_deviation", ru.max_deviation.str()}};
  report.result["class_space"] =
      ordered_json{{"matrix", matrix_json(v)},
                   {"rows_orthonormal", rv.rows},
                   {"cols_orthonormal", rv.cols},
                   {"max_deviation", rv.max_deviation.str()}};
  report.add_check("group_space_rows", ru.rows);
  report.add_check("group_space_cols", ru.cols);
  report.add_check("class_space_rows", rv.rows);
  report.add_check("class_space_cols", rv.cols);
  return report;
}

AnalysisReport handle_cg(Session& s, const std::string& left,
                         const std::string& right) {
  const Group& g = s.group;
  const CharacterTable& t = s.table();
  const auto& irreps = s.irreps();
  int li = t.row_index(left);
  int ri = t.row_index(right);
  auto series = cg_series(t, t.rows[li], t.rows[ri]);
  CgDecomposition dec = cg_decomposition(t, irreps, irreps[li], irreps[ri]);

  int prod_dim = irreps[li].dim * irreps[ri].dim;
  int sum = 0;
  for (size_t j = 0; j < series.size(); ++j)
    sum += series[j] * t.dimension(static_cast<int>(j));

  bool invertible = true;
  QuadMatrix cinv;
  try {
    cinv = dec.coupling.inverse();
  } catch (const SingularMatrixError&) {
    invertible = false;
  }
  bool identity_ok = invertible;
  if (invertible) {
    Representation prod = tensor_product(irreps[li], irreps[ri]);
    for (int e = 0; e < g.order() && identity_ok; ++e) {
      QuadMatrix lhs = cinv * prod.at(e) * dec.coupling;
      identity_ok = lhs == assemble_block_diagonal(dec.blocks, irreps, e);
    }
  }

  AnalysisReport report;
  report.command = "cg";
  std::string series_line = "series " + left + " x " + right + ":";
  ordered_json jseries;
  for (size_t j = 0; j < series.size(); ++j) {
    series_line += " " + t.rows[j].name + ":" + std::to_string(series[j]);
    jseries[t.rows[j].name] = series[j];
  }
  report.text_lines.push_back(series_line);
  std::string blocks_line = "blocks:";
  ordered_json jblocks = ordered_json::array();
  for (const auto& b : dec.blocks) {
    blocks_line += " " + b.irrep + "(copy " + std::to_string(b.copy) + ")";
    jblocks.push_back(ordered_json{
        {"irrep", b.irrep}, {"copy", b.copy}, {"dim", b.dim}});
  }
  report.text_lines.push_back(blocks_line);
  report.text_lines.push_back("coupling matrix (" +
                              std::to_string(dec.coupling.rows()) + "x" +
                              std::to_string(dec.coupling.cols()) + "):");
  append_grid(report, matrix_cells(dec.coupling));
  report.csv_rows.push_back({"irrep", "multiplicity"});
  for (size_t j = 0; j < series.size(); ++j)
    report.csv_rows.push_back({t.rows[j].name, std::to_string(series[j])});
  report.result["left"] = left;
  report.result["right"] = right;
  report.result["series"] = std::move(jseries);
  report.result["blocks"] = std::move(jblocks);
  report.result["coupling"] = matrix_json(dec.coupling);
  report.add_check("dimension_balance", sum == prod_dim);
  report.add_check("coupling_invertible", invertible);
  report.add_check("block_identity_all_elements", identity_ok);
  return report;
}

AnalysisReport handle_regular(Session& s, bool intrinsic, bool orthonormal) {
  const Group& g = s.group;
  const CharacterTable& t = s.table();
  const auto& irreps = s.irreps();
  Representation rep = intrinsic ? intrinsic_regular_representation(g)
                                 : regular_representation(g);
  Representation other = intrinsic ? regular_representation(g)
                                   : intrinsic_regular_representation(g);
  RegularReduction red = reduce_regular(g, t, irreps, intrinsic, orthonormal);

  // The matrices are permutation matrices, so the homomorphism and
  // commutation checks reduce to exact index bookkeeping.
  const int n = g.order();
  std::vector<std::vector<int>> maps(n), omaps(n);
  bool perm_ok = true;
  for (int e = 0; e < n; ++e) {
    maps[e] = permutation_of_matrix(rep.at(e));
    omaps[e] = permutation_of_matrix(other.at(e));
    perm_ok = perm_ok && !maps[e].empty() && !omaps[e].empty();
  }
  bool homo = perm_ok;
  for (int x = 0; x < n && homo; ++x) {
    homo = maps[0][x] == x;
    for (int y = 0; y < n && homo; ++y)
      for (int q = 0; q < n; ++q) {
        if (maps[g.multiply(x, y)][q] != maps[x][maps[y][q]]) {
          homo = false;
          break;
        }
      }
  }
  bool commute = perm_ok;
  for (int x = 0; x < n && commute; ++x)
    for (int y = 0; y < n && commute; ++y)
      for (int q = 0; q < n; ++q) {
        if (maps[x][omaps[y][q]] != omaps[y][maps[x][q]]) {
          commute = false;
          break;
        }
      }

  bool red_ok = verify_regular_reduction(rep, red, irreps);

  bool char_ok = rep.character_value(g.identity()) == QuadNumber(n);
  for (int e = 1; e < n; ++e)
    char_ok = char_ok && rep.character_value(e).is_zero();

  AnalysisReport report;
  report.command = "regular";
  report.text_lines.push_back(std::string("variant: ") +
                              (intrinsic ? "intrinsic" : "left") +
                              (orthonormal ? ", orthonormal transform" : ""));
  std::string mult_line = "multiplicities:";
  ordered_json jmult;
  for (size_t j = 0; j < red.multiplicities.size(); ++j) {
    mult_line +=
        " " + t.rows[j].name + ":" + std::to_string(red.multiplicities[j]);
    jmult[t.rows[j].name] = red.multiplicities[j];
  }
  report.text_lines.push_back(mult_line);
  std::string char_line = "character:";
  ordered_json jchar = ordered_json::array();
  for (const auto& c : t.classes) {
    std::string v = rep.character_value(c.representative).str();
    char_line += " " + v;
    jchar.push_back(v);
  }
  report.text_lines.push_back(char_line);
  std::string blocks_line = "blocks:";
  ordered_json jblocks = ordered_json::array();
  for (const auto& b : red.blocks) {
    blocks_line += " " + b.irrep + "(copy " + std::to_string(b.copy) + ")";
    jblocks.push_back(ordered_json{
        {"irrep", b.irrep}, {"copy", b.copy}, {"dim", b.dim}});
  }
  report.text_lines.push_back(blocks_line);
  report.text_lines.push_back("transform (" +
                              std::to_string(red.transform.rows()) + "x" +
                              std::to_string(red.transform.cols()) + "):");
  append_grid(report, matrix_cells(red.transform));
  report.csv_rows.push_back({"irrep", "multiplicity"});
  for (size_t j = 0; j < red.multiplicities.size(); ++j)
    report.csv_rows.push_back(
        {t.rows[j].name, std::to_string(red.multiplicities[j])});
  report.result["intrinsic"] = intrinsic;
  report.result["orthonormal"] = orthonormal;
  report.result["multiplicities"] = std::move(jmult);
  report.result["character"] = std::move(jchar);
  report.result["blocks"] = std::move(jblocks);
  report.result["transform"] = matrix_json(red.transform);
  report.add_check("homomorphism", homo);
  report.add_check("reduction_identity", red_ok);
  report.add_check("regular_character", char_ok);
  report.add_check("left_and_intrinsic_commute", commute);
  return report;
}

AnalysisReport handle_idempotents(Session& s) {
  const Group& g = s.group;
  const CharacterTable& t = s.table();
  const auto& irreps = s.irreps();
  IrreducibleBasis basis = irreducible_basis(irreps);
  BasisLawReport laws = verify_basis_laws(basis);
  IdealDecomposition ideals = ideal_decomposition(basis);

  bool dims_ok = true;
  for (const auto& ideal : ideals.left_ideals)
    dims_ok = dims_ok &&
              ideal.dimension() == basis.dims[t.row_index(ideal.irrep)];
  for (const auto& ideal : ideals.right_ideals)
    dims_ok = dims_ok &&
              ideal.dimension() == basis.dims[t.row_index(ideal.irrep)];
  for (const auto& ideal : ideals.bilateral_ideals) {
    int m = basis.dims[t.row_index(ideal.irrep)];
    dims_ok = dims_ok && ideal.dimension() == m * m;
  }

  bool chars_ok = true;
  for (const auto& ideal : ideals.left_ideals) {
    Character c = ideal_character(ideal, t.classes, g);
    chars_ok = chars_ok && c.values == t.rows[t.row_index(ideal.irrep)].values;
  }
  for (const auto& ideal : ideals.bilateral_ideals) {
    int row = t.row_index(ideal.irrep);
    Character c = ideal_character(ideal, t.classes, g);
    bool match = c.values.size() == t.rows[row].values.size();
    for (size_t a = 0; match && a < c.values.size(); ++a)
      match = c.values[a] ==
              QuadNumber(basis.dims[row]) * t.rows[row].values[a];
    chars_ok = chars_ok && match;
  }

  AnalysisReport report;
  report.command = "idempotents";
  ordered_json jirreps = ordered_json::array();
  report.csv_rows.push_back({"irrep", "u", "v", "element_expansion"});
  for (size_t i = 0; i < irreps.size(); ++i) {
    int m = basis.dims[i];
    report.text_lines.push_back("irrep " + basis.irrep_names[i] +
                                " (dimension " + std::to_string(m) + "):");
    AlgebraElement central = basis.central_idempotent(static_cast<int>(i));
    report.text_lines.push_back("  central idempotent = " + central.str());
    ordered_json jdiag = ordered_json::array();
    for (int u = 0; u < m; ++u) {
      const AlgebraElement& p = basis.at(static_cast<int>(i), u, u);
      report.text_lines.push_back("  P_{" + std::to_string(u + 1) + "," +
                                  std::to_string(u + 1) + "} = " + p.str());
      jdiag.push_back(p.str());
      report.csv_rows.push_back({basis.irrep_names[i], std::to_string(u + 1),
                                 std::to_string(u + 1), p.str()});
    }
    jirreps.push_back(ordered_json{{"name", basis.irrep_names[i]},
                                   {"dimension", m},
                                   {"central_idempotent", central.str()},
                                   {"diagonal", std::move(jdiag)}});
  }
  std::string dim_line = "bilateral ideal dimensions:";
  ordered_json jdims = ordered_json::array();
  for (const auto& ideal : ideals.bilateral_ideals) {
    dim_line += " " + std::to_string(ideal.dimension());
    jdims.push_back(ideal.dimension());
  }
  report.text_lines.push_back(dim_line);
  report.result["irreps"] = std::move(jirreps);
  report.result["bilateral_dimensions"] = std::move(jdims);
  report.add_check("product_law", laws.product_law);
  report.add_check("idempotence", laws.idempotence);
  report.add_check("orthogonality", laws.orthogonality);
  report.add_check("completeness", laws.completeness);
  report.add_check("ideal_dimensions", dims_ok);
  report.add_check("ideal_characters", chars_ok);
  return report;
}

AnalysisReport handle_funcbasis(Session& s, const std::string& irrep_name,
                                const std::string& seed_text) {
  const Group& g = s.group;
  if (g.element(0).kind != ElementKind::matrix || g.element(0).mat.rows() != 3)
    throw Error("function bases require a group of 3x3 matrices");
  const CharacterTable& t = s.table();
  const Representation& irrep = s.irreps()[t.row_index(irrep_name)];
  Polynomial seed = Polynomial::parse(seed_text);

  AnalysisReport report;
  report.command = "funcbasis";
  report.result["irrep"] = irrep_name;
  report.result["seed"] = seed.str();
  report.csv_rows.push_back({"component", "polynomial"});
  try {
    std::vector<Polynomial> basis = function_basis(irrep, seed);

    bool covariant = true;
    for (int e = 0; e < g.order() && covariant; ++e) {
      for (int u = 0; u < irrep.dim; ++u) {
        Polynomial lhs = act(g.element(e), basis[u]);
        Polynomial rhs;
        for (int w = 0; w < irrep.dim; ++w)
          rhs = rhs + irrep.at(e).at(w, u) * basis[w];
        if (!(lhs == rhs)) {
          covariant = false;
          break;
        }
      }
    }

    // Covariant rows are linearly independent whenever they are nonzero;
    // verified via the monomial coefficient matrix.
    std::set<Monomial> monomials;
    for (const auto& p : basis)
      for (const auto& [m, c] : p.terms()) monomials.insert(m);
    QuadMatrix coeffs(static_cast<int>(basis.size()),
                      static_cast<int>(monomials.size()));
    for (size_t i = 0; i < basis.size(); ++i) {
      int j = 0;
      for (const auto& m : monomials) coeffs.at(static_cast<int>(i), j++) =
          basis[i].coeff(m);
    }
    bool independent = coeffs.rank() == static_cast<int>(basis.size());

    ordered_json jbasis = ordered_json::array();
    for (size_t u = 0; u < basis.size(); ++u) {
      report.text_lines.push_back("psi_" + std::to_string(u + 1) + " = " +
                                  basis[u].str());
      report.csv_rows.push_back({std::to_string(u + 1), basis[u].str()});
      jbasis.push_back(basis[u].str());
    }
    report.result["basis"] = std::move(jbasis);
    report.add_check("seed_has_component", true);
    report.add_check("covariance", covariant);
    report.add_check("linear_independence", independent);
  } catch (const NoComponentError& e) {
    report.text_lines.push_back(e.what());
    report.result["basis"] = nullptr;
    report.add_check("seed_has_component", false);
  }
  return report;
}

int finish(const AnalysisReport& report, const std::string& format,
           std::ostream& out) {
  if (format == "json")
    render_json(report, out);
  else if (format == "csv")
    render_csv(report, out);
  else
    render_text(report, out);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact structure and representation analysis of small finite groups"};
  app.require_subcommand(1);

  std::string group_file, fixture, format = "text";
  CLI::Option* opt_group =
      app.add_option("--group", group_file, "generator file defining the group");
  CLI::Option* opt_fixture =
      app.add_option("--fixture", fixture, "built-in fixture group")
          ->check(CLI::IsMember({"td"}));
  opt_group->excludes(opt_fixture);
  opt_fixture->excludes(opt_group);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  std::string subgroup_spec, side = "left", cg_left, cg_right, fb_irrep,
              fb_seed;
  bool count_only = false, intrinsic = false, orthonormal = false;

  std::string command;
  std::function<AnalysisReport(Session&)> handler;
  auto add = [&](const std::string& name, const std::string& desc,
                 std::function<AnalysisReport(Session&)> fn) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->callback([&command, &handler, name, fn]() {
      command = name;
      handler = fn;
    });
    return sub;
  };

  add("table", "multiplication table",
      [](Session& s) { return handle_table(s); });
  add("orders", "element orders", [](Session& s) { return handle_orders(s); });
  add("classes", "conjugacy classes",
      [](Session& s) { return handle_classes(s); });
  add("subgroups", "complete subgroup lattice",
      [](Session& s) { return handle_subgroups(s); });
  add("normal", "normal subgroups and their quotient types",
      [](Session& s) { return handle_normal(s); });
  CLI::App* sub_cosets =
      add("cosets", "coset decomposition by a subgroup", [&](Session& s) {
        return handle_cosets(s, subgroup_spec, side);
      });
  sub_cosets
      ->add_option("--subgroup", subgroup_spec,
                   "comma-separated element labels")
      ->required();
  sub_cosets->add_option("--side", side, "left or right cosets")
      ->check(CLI::IsMember({"left", "right"}));
  CLI::App* sub_quotient =
      add("quotient", "quotient by a normal subgroup",
          [&](Session& s) { return handle_quotient(s, subgroup_spec); });
  sub_quotient
      ->add_option("--subgroup", subgroup_spec,
                   "comma-separated element labels")
      ->required();
  CLI::App* sub_genpairs =
      add("genpairs", "two-element generating sets",
          [&](Session& s) { return handle_genpairs(s, count_only); });
  sub_genpairs->add_flag("--count-only", count_only, "print only the count");
  add("chartable", "character table",
      [](Session& s) { return handle_chartable(s); });
  add("irreps", "irreducible matrix representations",
      [](Session& s) { return handle_irreps(s); });
  add("orthocheck", "orthogonality of group space and class space",
      [](Session& s) { return handle_orthocheck(s); });
  CLI::App* sub_cg =
      add("cg", "Clebsch-Gordan series and coupling matrix", [&](Session& s) {
        return handle_cg(s, cg_left, cg_right);
      });
  sub_cg->add_option("--left", cg_left, "left irrep name")->required();
  sub_cg->add_option("--right", cg_right, "right irrep name")->required();
  CLI::App* sub_regular =
      add("regular", "regular representation and its reduction",
          [&](Session& s) { return handle_regular(s, intrinsic, orthonormal); });
  sub_regular->add_flag("--intrinsic", intrinsic,
                        "use the intrinsic (right-translation) variant");
  sub_regular->add_flag("--orthonormal", orthonormal,
                        "scale the transform columns to unit norm");
  add("idempotents", "irreducible basis of the group algebra and its ideals",
      [](Session& s) { return handle_idempotents(s); });
  CLI::App* sub_funcbasis =
      add("funcbasis", "symmetry-adapted polynomial basis", [&](Session& s) {
        return handle_funcbasis(s, fb_irrep, fb_seed);
      });
  sub_funcbasis->add_option("--irrep", fb_irrep, "irrep name")->required();
  sub_funcbasis->add_option("--seed", fb_seed, "seed polynomial")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Session session;
  try {
    if (!group_file.empty()) {
      session.group = close_generators(load_generator_file(group_file));
    } else {
      session.group = td_group();
      session.td = true;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    AnalysisReport report = handler(session);
    report.group = group_json(session.group);
    return finish(report, format, out);
  } catch (const LiftFailureError& e) {
    // The character values live outside the supported scalar field; report
    // that as a failed check rather than a crash.
    AnalysisReport report;
    report.command = command;
    report.group = group_json(session.group);
    report.result = nullptr;
    report.text_lines.push_back(std::string("character table unavailable: ") +
                                e.what());
    report.add_check("character_values_representable", false);
    finish(report, format, out);
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace grouprep::cli
