#pragma once

// Slow, obviously-correct reference computations and random generators
// shared by the test binaries. Nothing here calls the enumerators under test.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "qtile/partition.hpp"
#include "qtile/qrational.hpp"

namespace oracle {

using Matrix = std::vector<int>;  // row-major r x c

// Every (n+1)^(rc) matrix, kept when rows and columns weakly decrease.
// Odometer order with the last cell fastest is lexicographic.
inline std::vector<Matrix> brute_box(int r, int c, int n) {
  std::vector<Matrix> out;
  const int cells = r * c;
  Matrix m(cells, 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < c && ok; ++j) {
        int v = m[i * c + j];
        if (i > 0 && m[(i - 1) * c + j] < v) ok = false;
        if (j > 0 && m[i * c + j - 1] < v) ok = false;
      }
    if (ok) out.push_back(m);
    int k = cells - 1;
    while (k >= 0 && m[k] == n) m[k--] = 0;
    if (k < 0) break;
    ++m[k];
  }
  return out;
}

inline Matrix flatten(const qtile::PlanePartition& pi, int r, int c) {
  Matrix m;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.push_back(pi.at(i, j));
  return m;
}

// D_k by counting the cells (i,j) with i,j < s that carry a part >= k and
// taking the largest s for which the whole s x s square is present.
inline int durfee_by_cells(const Matrix& m, int r, int c, int k) {
  int best = 0;
  for (int s = 1; s <= std::min(r, c); ++s) {
    int present = 0;
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) present += m[i * c + j] >= k;
    if (present == s * s) best = s;
  }
  return best;
}

inline mpq_class qpow(const mpq_class& x, int e) {
  mpq_class r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= x;
  return e < 0 ? mpq_class(1 / r) : r;
}

// (x q^m ; q^step)_N evaluated directly for N >= 0.
inline mpq_class poch_value(const mpq_class& x, const mpq_class& q, int m, int step, int N) {
  mpq_class r = 1;
  for (int j = 0; j < N; ++j) r *= 1 - x * qpow(q, m + step * j);
  return r;
}

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  qtile::BoxBounds box(int max) { return {uniform(0, max), uniform(0, max), uniform(0, max)}; }

  // Fill row-major, each cell at most its upper and left neighbours.
  qtile::PlanePartition plane_partition(const qtile::BoxBounds& b) {
    std::vector<std::vector<int>> rows(b.r, std::vector<int>(b.c, 0));
    for (int i = 0; i < b.r; ++i)
      for (int j = 0; j < b.c; ++j) {
        int hi = b.n;
        if (i > 0) hi = std::min(hi, rows[i - 1][j]);
        if (j > 0) hi = std::min(hi, rows[i][j - 1]);
        // Skew towards large parts so full piles come up too.
        rows[i][j] = uniform(0, 3) == 0 ? hi : uniform(0, hi);
      }
    return qtile::PlanePartition(rows, b);
  }

  // Small rational away from the poles used in the tests.
  mpq_class rational() {
    mpq_class x(uniform(2, 13), uniform(3, 17));
    x.canonicalize();
    if (x == 1) x = mpq_class(2, 7);
    return x;
  }

  qtile::BiPoly bipoly(int terms, int span) {
    std::vector<qtile::BiPoly::Term> ts;
    for (int k = 0; k < terms; ++k)
      ts.push_back({{uniform(-span, span), uniform(-span, span)}, mpz_class(uniform(-9, 9))});
    return qtile::BiPoly::from_terms(std::move(ts));
  }

  qtile::QRational qrational() {
    qtile::AtomPowers atoms;
    int k = uniform(0, 3);
    for (int t = 0; t < k; ++t) {
      int delta = uniform(0, 1);
      atoms.push_back({qtile::QAtom{delta, uniform(delta ? 0 : 1, 5)}, uniform(-2, 2)});
    }
    qtile::BiPoly p = bipoly(uniform(1, 3), 3);
    if (p.is_zero()) p = qtile::BiPoly(1);
    return qtile::QRational(p, atoms);
  }
};

}  // namespace oracle
