#pragma once

#include <string>
#include <vector>

#include "incidence/pentagram.h"

namespace incidence {

// Points P_base .. P_{base+n}.
struct SpiralSeed {
  int k = 2, n = 5;
  long base = 0;
  std::vector<HElem> points;

  const HElem& at(long idx) const { return points.at(static_cast<std::size_t>(idx - base)); }
};

// Lines q_{base-1} .. q_{base+n-1}.
struct LineSeed {
  int k = 2, n = 5;
  long base = 0;
  std::vector<HElem> lines;

  const HElem& at(long idx) const { return lines.at(static_cast<std::size_t>(idx - base + 1)); }
};

struct SeedReport {
  bool ok = true;
  std::vector<std::string> failures;  // one entry per broken incidence
};

// P_j, P_{j+1}, P_{j+k+1} collinear for base-k-1 <= j <= base-1, indices
// read modulo n+1 inside the window.
SeedReport validate_spiral_seed(const SpiralSeed& s);
// q_w, q_{w-1}, q_{w-k-1} concurrent for base-1 <= w <= base+k-1.
SeedReport validate_line_seed(const LineSeed& s);

// Shifts the window by `steps` (negative runs backwards).
SpiralSeed spiral_extend(const SpiralSeed& s, long steps);
LineSeed line_extend(const LineSeed& s, long steps);

// Free choice of P_base..P_{base+n-k}. For l < k-1 the point
// P_{base+n-k+1+l} = A + t_l (B - A) on the line A = P_{base+l},
// B = P_{base+n-k+l} (affine combination); the last point is the
// intersection forced by the two remaining conditions.
SpiralSeed sample_spiral_seed(int k, int n, long base, const std::vector<HElem>& free_points, const std::vector<Scalar>& params);

std::string spiral_white(long i);
std::string spiral_black(long i);
// Id of white residue r mod n+1 in the window at `base`.
long spiral_white_index(int n, long base, long r);
long spiral_black_index(int n, long base, long r);

// Pentagram template on n+1 indices without the edges q_j P_{j+k},
// base-k-1 <= j <= base-1; vertices carry absolute window indices.
TorusGraph spiral_graph(int k, int n, long base);
Config build_spiral_config(const SpiralSeed& sp, const LineSeed& sq);
MoveScript spiral_step_script(int k, int n, long base);
// Q_j = q_j ∩ q_{j-k} on P_jP_{j+1}; all four labels must be in the windows.
bool spiral_inscribed_at(const SpiralSeed& sp, const LineSeed& sq, long j);

StepResult spiral_step(const Config& c, int k, int n, long base, bool validate = false);
SpiralSeed spiral_points(const Config& c, int k, int n, long base);
LineSeed spiral_lines(const Config& c, int k, int n, long base);

}  // namespace incidence
