#include "grouprep/permutation.hpp"

#include <cctype>
#include <numeric>

#include "grouprep/errors.hpp"

namespace grouprep {

Permutation::Permutation(int degree) : map_(degree) {
  std::iota(map_.begin(), map_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : map_(std::move(images)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= degree() || seen[v])
      throw ParseError("invalid permutation image list");
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text, int degree) {
  if (degree < 0) throw ParseError("negative permutation degree");
  std::vector<int> map(degree);
  std::iota(map.begin(), map.end(), 0);
  std::vector<bool> moved(degree, false);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation: '" + std::string(text) + "'");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point or ')' in cycle: '" + std::string(text) + "'");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v >= degree)
        throw ParseError("point " + std::to_string(v) + " out of range for degree " +
                         std::to_string(degree));
      if (moved[v])
        throw ParseError("point " + std::to_string(v) + " appears in two cycles");
      moved[v] = true;
      cycle.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;  // commas optional
    }
    for (size_t i = 0; i < cycle.size(); ++i)
      map[cycle[i]] = cycle[(i + 1) % cycle.size()];
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError("empty permutation text");
  return Permutation(std::move(map));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (map_[i] != i) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& b) const {
  if (degree() != b.degree())
    throw DimensionMismatchError("permutation degree mismatch");
  std::vector<int> r(map_.size());
  for (int i = 0; i < degree(); ++i) r[i] = map_[b.map_[i]];
  Permutation p;
  p.map_ = std::move(r);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> r(map_.size());
  for (int i = 0; i < degree(); ++i) r[map_[i]] = i;
  Permutation p;
  p.map_ = std::move(r);
  return p;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> seen(map_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || map_[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    do {
      if (!first) out += " ";
      out += std::to_string(j);
      seen[j] = true;
      j = map_[j];
      first = false;
    } while (j != i);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

QuadMatrix Permutation::matrix() const {
  QuadMatrix m(degree(), degree());
  for (int i = 0; i < degree(); ++i) m.at(map_[i], i) = QuadNumber(1);
  return m;
}

}  // namespace grouprep
