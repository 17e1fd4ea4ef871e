#include "incidence/linalg.h"

#include <cmath>
#include <stdexcept>

namespace incidence {

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Scalar s(0L);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Float entries restart their magnitude bound here so rank decisions are
// relative to the matrix itself; error bounds carried in from long upstream
// products otherwise compound and swamp moderately conditioned minors.
void rebase(Mat& m) {
  for (auto& row : m)
    for (auto& x : row)
      if (x.is_float()) x = x.is_zero() ? Scalar::from_double(0.0) : Scalar::from_double(x.to_double());
}

}  // namespace

Echelon rref(const Mat& input, int ncols) {
  Mat m = input;
  rebase(m);
  int n = ncols >= 0 ? ncols : (m.empty() ? 0 : static_cast<int>(m[0].size()));
  Echelon out;
  int r = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < n && r < rows; ++c) {
    // Largest magnitude pivot; for exact rationals any nonzero entry would do.
    int best = -1;
    double best_abs = -1.0;
    for (int i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      double a = std::fabs(m[i][c].to_double());
      if (best < 0 || a > best_abs) {
        best = i;
        best_abs = a;
      }
    }
    if (best < 0) {
      for (int i = r; i < rows; ++i) m[i][c] = Scalar(0L);
      continue;
    }
    std::swap(m[r], m[best]);
    Scalar inv = Scalar(1L) / m[r][c];
    for (int j = c; j < n; ++j) m[r][j] *= inv;
    m[r][c] = Scalar(1L);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) {
        if (i != r) m[i][c] = Scalar(0L);
        continue;
      }
      Scalar f = m[i][c];
      for (int j = c; j < n; ++j) {
        m[i][j] -= f * m[r][j];
        if (m[i][j].is_zero()) m[i][j] = Scalar(0L);
      }
      m[i][c] = Scalar(0L);
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).rows.size()); }

Mat kernel(const Mat& m, int ncols) {
  Echelon e = rref(m, ncols);
  std::vector<int> is_pivot(ncols, -1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) is_pivot[e.pivots[i]] = static_cast<int>(i);
  Mat basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free] >= 0) continue;
    Vec v(ncols, Scalar(0L));
    v[free] = Scalar(1L);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(Mat m) {
  rebase(m);
  const int n = static_cast<int>(m.size());
  Scalar det(1L);
  for (int c = 0; c < n; ++c) {
    int best = -1;
    double best_abs = -1.0;
    for (int i = c; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      double a = std::fabs(m[i][c].to_double());
      if (best < 0 || a > best_abs) {
        best = i;
        best_abs = a;
      }
    }
    if (best < 0) return Scalar(0L);
    if (best != c) {
      std::swap(m[best], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<Solution> solve(const Mat& a, const Vec& b, int ncols) {
  Mat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = rref(aug, ncols + 1);
  if (!e.pivots.empty() && e.pivots.back() == ncols) return std::nullopt;
  Solution s;
  s.particular.assign(ncols, Scalar(0L));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.particular[e.pivots[i]] = e.rows[i][ncols];
  s.nullspace = kernel(a, ncols);
  return s;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace incidence
