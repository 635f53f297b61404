#include "qmm/quiver.hpp"

#include <stdexcept>

namespace qmm {

int Quiver::loop_count() const {
  int loops = 0;
  for (const Arrow& a : arrows)
    if (a.tail == a.head) ++loops;
  return loops;
}

Quiver loop_quiver(int g) {
  if (g < 0) throw std::domain_error("loop_quiver: negative loop count");
  Quiver q;
  q.vertex_count = 1;
  q.arrows.assign(static_cast<size_t>(g), Arrow{0, 0});
  return q;
}

void check_dims(const Quiver& q, const DimVector& a) {
  if (static_cast<int>(a.size()) != q.vertex_count)
    throw std::invalid_argument("dimension vector length does not match quiver");
}

int64_t dot(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dimension vectors of different length");
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += int64_t(a[i]) * b[i];
  return s;
}

int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  check_dims(q, a);
  check_dims(q, b);
  int64_t s = 0;
  for (int i = 0; i < q.vertex_count; ++i) s += int64_t(a[i]) * b[i];
  for (const Arrow& ar : q.arrows) s -= int64_t(a[ar.tail]) * b[ar.head];
  return s;
}

int64_t sym_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

int64_t p_value(const Quiver& q, const DimVector& a) {
  return 1 - euler_form(q, a, a);
}

Quiver double_quiver(const Quiver& q) {
  Quiver d = q;
  d.arrows.reserve(2 * q.arrows.size());
  for (const Arrow& a : q.arrows) d.arrows.push_back(Arrow{a.head, a.tail});
  return d;
}

int64_t rep_space_dim(const Quiver& q, const DimVector& a) {
  check_dims(q, a);
  int64_t s = 0;
  for (const Arrow& ar : q.arrows) s += int64_t(a[ar.tail]) * a[ar.head];
  return s;
}

Quiver build_class_c_quiver(int g, const std::vector<int>& betas) {
  if (g < 2) throw std::domain_error("class-C quiver requires g >= 2");
  if (betas.empty()) throw std::domain_error("class-C quiver requires at least one vertex");
  for (int b : betas)
    if (b < 1) throw std::domain_error("class-C quiver requires positive betas");

  const int r = static_cast<int>(betas.size());
  Quiver q;
  q.vertex_count = r;
  for (int i = 0; i < r; ++i) {
    const int64_t loops = 1 + int64_t(g - 1) * betas[i] * betas[i];
    for (int64_t k = 0; k < loops; ++k) q.arrows.push_back(Arrow{i, i});
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const int64_t cross = 2 * int64_t(g - 1) * betas[i] * betas[j];
      for (int64_t k = 0; k < cross; ++k) q.arrows.push_back(Arrow{i, j});
    }
  return q;
}

std::vector<std::vector<int>> double_adjacency(const Quiver& q) {
  std::vector<std::vector<int>> d(q.vertex_count, std::vector<int>(q.vertex_count, 0));
  for (const Arrow& a : q.arrows) {
    if (a.tail == a.head) {
      d[a.tail][a.tail] += 2;
    } else {
      d[a.tail][a.head] += 1;
      d[a.head][a.tail] += 1;
    }
  }
  return d;
}

std::string format_dim_vector(const DimVector& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

}  // namespace qmm
