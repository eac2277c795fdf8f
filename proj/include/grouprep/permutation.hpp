#pragma once
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "grouprep/matrix.hpp"

namespace grouprep {

// Permutation of {0, ..., n-1}; map[i] is the image of point i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);                 // identity
  explicit Permutation(std::vector<int> images);    // validated

  static Permutation identity(int degree) { return Permutation(degree); }
  // Parses disjoint-cycle notation over a fixed degree, e.g. "(0 1 2)(3 4)".
  // "()" denotes the identity; fixed points may be listed or omitted.
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_.at(i); }
  const std::vector<int>& images() const { return map_; }

  bool is_identity() const;
  // (a.compose(b))(i) = a(b(i)): apply b first.
  Permutation compose(const Permutation& b) const;
  Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    return a.compose(b);
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) = default;

  // Disjoint-cycle form, fixed points omitted; identity prints "()".
  std::string str() const;
  // Permutation matrix P with P e_i = e_{map[i]}, i.e. P(map[i], i) = 1.
  QuadMatrix matrix() const;

 private:
  std::vector<int> map_;
};

}  // namespace grouprep
