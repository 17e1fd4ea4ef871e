#pragma once

#include <optional>
#include <vector>

#include "incidence/scalar.h"

namespace incidence {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

Scalar dot(const Vec& a, const Vec& b);

struct Echelon {
  Mat rows;                 // nonzero rows of the reduced row echelon form
  std::vector<int> pivots;  // pivot column of each row
};

// Reduced row echelon form. `ncols` is needed when `m` is empty.
Echelon rref(const Mat& m, int ncols = -1);
int rank(const Mat& m);
// Basis of {x : m x = 0}.
Mat kernel(const Mat& m, int ncols);
Scalar determinant(Mat m);

struct Solution {
  Vec particular;
  Mat nullspace;
};
// Solves A x = b; empty optional when inconsistent.
std::optional<Solution> solve(const Mat& a, const Vec& b, int ncols);

Mat transpose(const Mat& m);

}  // namespace incidence
