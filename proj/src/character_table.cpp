#include <algorithm>
#include <map>
#include <numeric>

#include "grouprep/errors.hpp"
#include "grouprep/representation.hpp"

namespace grouprep {

namespace {

// ---- small prime-field linear algebra -------------------------------------

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

using FpMatrix = std::vector<std::vector<long long>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> fp_rref(FpMatrix& m, long long p) {
  std::vector<int> pivots;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    long long inv = mod_inv(m[row][col], p);
    for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv % p;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      long long f = m[i][col];
      for (size_t j = col; j < cols; ++j)
        m[i][j] = (m[i][j] - f * m[row][j] % p + p * p) % p;
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis rows of the nullspace of m.
FpMatrix fp_nullspace(FpMatrix m, long long p) {
  size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<int> pivots = fp_rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  FpMatrix basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<long long> v(cols, 0);
    v[fc] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = (p - m[pr][fc]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Intersection of two row spaces.
FpMatrix fp_intersect(const FpMatrix& a, const FpMatrix& b, long long p) {
  if (a.empty() || b.empty()) return {};
  size_t cols = a[0].size();
  // Solve u^T a + v^T b = 0: nullspace of [a^T | b^T] stacked by columns.
  FpMatrix sys(cols, std::vector<long long>(a.size() + b.size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t c = 0; c < cols; ++c) sys[c][i] = a[i][c];
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t c = 0; c < cols; ++c) sys[c][a.size() + i] = b[i][c];
  FpMatrix null = fp_nullspace(std::move(sys), p);
  FpMatrix out;
  for (const auto& uv : null) {
    std::vector<long long> w(cols, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t c = 0; c < cols; ++c) w[c] = (w[c] + uv[i] * a[i][c]) % p;
    bool zero = std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; });
    if (!zero) out.push_back(std::move(w));
  }
  fp_rref(out, p);
  return out;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> fs;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long primitive_root(long long p) {
  std::vector<long long> fs = prime_factors(p - 1);
  for (long long z = 2; z < p; ++z) {
    bool ok = true;
    for (long long f : fs)
      if (mod_pow(z, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return z;
  }
  throw Error("internal: no primitive root found");
}

// 2*cos(2*pi*t/n) as an exact field element, for 0 < t/n < 1/2.
// Defined exactly when the reduced denominator divides 24.
QuadNumber two_cos(int t, int n) {
  int d = std::gcd(t, n);
  int tp = t / d, np = n / d;
  const Rational half(1, 2);
  switch (np) {
    case 3: return QuadNumber(-1);
    case 4: return QuadNumber(0);
    case 6: return QuadNumber(1);
    case 8: return tp == 1 ? QuadNumber::sqrt2() : -QuadNumber::sqrt2();
    case 12: return tp == 1 ? QuadNumber::sqrt3() : -QuadNumber::sqrt3();
    case 24:
      switch (tp) {
        case 1: return QuadNumber(0, half, 0, half);     // (sqrt6+sqrt2)/2
        case 5: return QuadNumber(0, -half, 0, half);    // (sqrt6-sqrt2)/2
        case 7: return QuadNumber(0, half, 0, -half);
        default: return QuadNumber(0, -half, 0, -half);  // tp == 11
      }
    default:
      throw LiftFailureError(
          "character value needs the degree-" + std::to_string(np) +
          " real cyclotomic field; only denominators dividing 24 are exact here");
  }
}

}  // namespace

CharacterTable character_table(const Group& g) {
  CharacterTable table;
  table.group = &g;
  table.classes = conjugacy_classes(g);
  const int k = table.class_count();
  const int n = g.order();

  std::vector<int> class_of(n);
  for (int c = 0; c < k; ++c)
    for (int m : table.classes[c].members) class_of[m] = c;

  // Splitting prime: p = 1 (mod exponent) and p^2 > 4g, so that degrees and
  // eigenvalue multiplicities are determined by their residues.
  const int m = g.exponent();
  long long p = m + 1;
  while (!(is_prime(p) && p * p > 4LL * n)) p += m;
  if (n % p == 0) throw Error("internal: splitting prime divides group order");

  // Class-sum multiplication constants: a[i][j][c] counts x in class i with
  // x^-1 * rep_c in class j, i.e. structure constants of the class algebra.
  std::vector<FpMatrix> cmat(k, FpMatrix(k, std::vector<long long>(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < k; ++c) {
      int rep = table.classes[c].representative;
      for (int x : table.classes[i].members) {
        int j = class_of[g.multiply(g.inverse_of(x), rep)];
        ++cmat[i][j][c];
      }
    }

  // Split F_p^k into the simultaneous eigenspaces of all class matrices.
  std::vector<FpMatrix> spaces;
  {
    FpMatrix full(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    bool all_split = std::all_of(spaces.begin(), spaces.end(),
                                 [](const FpMatrix& s) { return s.size() == 1; });
    if (all_split) break;
    std::vector<FpMatrix> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      size_t found = 0;
      for (long long lambda = 0; lambda < p && found < space.size(); ++lambda) {
        FpMatrix shifted = cmat[i];
        for (int r = 0; r < k; ++r)
          shifted[r][r] = (shifted[r][r] - lambda % p + p) % p;
        FpMatrix eig = fp_nullspace(std::move(shifted), p);
        if (eig.empty()) continue;
        FpMatrix piece = fp_intersect(space, eig, p);
        if (!piece.empty()) {
          found += piece.size();
          next.push_back(std::move(piece));
        }
      }
      if (found != space.size())
        throw Error("internal: eigenspace splitting lost dimensions");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != static_cast<size_t>(k))
    throw Error("internal: class algebra did not split into " +
                std::to_string(k) + " characters");

  // Each 1-dim space is spanned by the central character (w_0 normalized to 1).
  const long long z = primitive_root(p);
  std::vector<int> reciprocal(k);
  for (int c = 0; c < k; ++c)
    reciprocal[c] = class_of[g.inverse_of(table.classes[c].representative)];

  std::vector<Character> rows;
  for (const auto& space : spaces) {
    std::vector<long long> w = space[0];
    if (w[0] == 0) throw Error("internal: central character with w_0 = 0");
    long long norm = mod_inv(w[0], p);
    for (auto& x : w) x = x * norm % p;

    // Degree: d^2 = g / sum_c w_c w_{c*} / n_c (mod p), with 1 <= d <= sqrt(g).
    long long s = 0;
    for (int c = 0; c < k; ++c) {
      long long term = w[c] * w[reciprocal[c]] % p;
      s = (s + term * mod_inv(table.classes[c].size() % p, p)) % p;
    }
    if (s == 0) throw Error("internal: degenerate central character");
    long long d2 = n % p * mod_inv(s, p) % p;
    long long d = 0;
    for (long long t = 1; t * t <= n; ++t)
      if (t * t % p == d2) {
        d = t;
        break;
      }
    if (d == 0) throw Error("internal: no degree matches its residue");

    // Character residues on all classes.
    std::vector<long long> chi_mod(k);
    for (int c = 0; c < k; ++c)
      chi_mod[c] = d % p * w[c] % p * mod_inv(table.classes[c].size() % p, p) % p;

    // Lift each class value: the trace is a sum of order(rep)-th roots of
    // unity whose multiplicities are recovered by a discrete Fourier sum.
    Character row;
    for (int c = 0; c < k; ++c) {
      int rep = table.classes[c].representative;
      int ord = g.element_order(rep);
      long long theta = mod_pow(z, (p - 1) / ord, p);  // order-ord root mod p
      std::vector<long long> mu(ord);
      for (int t = 0; t < ord; ++t) {
        long long acc = 0;
        long long theta_mt = mod_inv(mod_pow(theta, t, p), p);
        long long pw = 1;  // theta^{-t l}
        int x = g.identity();
        for (int l = 0; l < ord; ++l) {
          acc = (acc + chi_mod[class_of[x]] * pw) % p;
          pw = pw * theta_mt % p;
          x = g.multiply(x, rep);
        }
        mu[t] = acc * mod_inv(ord % p, p) % p;
        if (mu[t] > d)
          throw Error("internal: eigenvalue multiplicity exceeds degree");
      }
      // Real check and assembly from paired roots of unity.
      QuadNumber value(Rational(static_cast<long>(mu[0])));
      if (ord % 2 == 0)
        value -= QuadNumber(Rational(static_cast<long>(mu[ord / 2])));
      for (int t = 1; 2 * t < ord; ++t) {
        if (mu[t] != mu[ord - t])
          throw LiftFailureError(
              "complex character value on class of '" + g.label(rep) +
              "'; values live in a cyclotomic extension, not in this real field");
        if (mu[t] == 0) continue;
        value += QuadNumber(Rational(static_cast<long>(mu[t]))) * two_cos(t, ord);
      }
      row.values.push_back(value);
    }
    rows.push_back(std::move(row));
  }

  // Canonical order: ascending dimension, then descending value rows.
  std::sort(rows.begin(), rows.end(), [](const Character& a, const Character& b) {
    if (auto c = a.values[0] <=> b.values[0]; c != 0) return c < 0;
    for (size_t i = 1; i < a.values.size(); ++i)
      if (auto c = a.values[i] <=> b.values[i]; c != 0) return c > 0;
    return false;
  });
  for (size_t i = 0; i < rows.size(); ++i)
    rows[i].name = "I" + std::to_string(i + 1);
  table.rows = std::move(rows);

  // The table must satisfy both exact orthogonality relations.
  if (!table.rows_orthogonal() || !table.columns_orthogonal())
    throw Error("internal: character table fails orthogonality");
  long long sum_sq = 0;
  for (int i = 0; i < k; ++i) {
    int d = table.dimension(i);
    sum_sq += static_cast<long long>(d) * d;
  }
  if (sum_sq != n)
    throw Error("internal: squared dimensions do not sum to the group order");
  return table;
}

}  // namespace grouprep
