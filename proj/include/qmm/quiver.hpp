#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmm {

// Per-vertex nonnegative dimensions.
using DimVector = std::vector<int>;

struct Arrow {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Directed multigraph; loops and parallel arrows are allowed. The arrow
// list order is part of the identity: generated equation systems name
// their variables by arrow position.
struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  int loop_count() const;
  friend bool operator==(const Quiver&, const Quiver&) = default;
};

// One vertex, g loops.
Quiver loop_quiver(int g);

// <a,b> = sum_i a_i*b_i - sum_{arrows} a_tail * b_head
int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

// (a,b) = <a,b> + <b,a>
int64_t sym_form(const Quiver& q, const DimVector& a, const DimVector& b);

// p(a) = 1 - <a,a>
int64_t p_value(const Quiver& q, const DimVector& a);

// Adjoins one reverse arrow per arrow; reverses appended after the
// original list, in matching order.
Quiver double_quiver(const Quiver& q);

// sum over arrows of a_tail * a_head
int64_t rep_space_dim(const Quiver& q, const DimVector& a);

// r = betas.size() vertices, 1+(g-1)*b_i^2 loops at vertex i, and
// 2(g-1)*b_i*b_j arrows between distinct vertices i<j, oriented i -> j.
// The cross-arrow total is the one forced by the invariant
// p(e) = 1+(g-1)*(sum e_i b_i)^2 over the built quiver.
Quiver build_class_c_quiver(int g, const std::vector<int>& betas);

// Symmetric matrix with D[i][i] = 2 * (loops at i) and, for i != j,
// D[i][j] = number of arrows between i and j in either direction.
// Two quivers agree up to reorientation iff their matrices agree.
std::vector<std::vector<int>> double_adjacency(const Quiver& q);

int64_t dot(const DimVector& a, const DimVector& b);

// Throws std::invalid_argument when a does not match q's vertex count.
void check_dims(const Quiver& q, const DimVector& a);

// "2,3" style rendering, used in reports and baseline keys.
std::string format_dim_vector(const DimVector& a);

}  // namespace qmm
