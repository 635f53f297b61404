#pragma once

#include <string>
#include <vector>

#include "qmm/quiver.hpp"

namespace qmm {

// One summand of a semisimple decomposition: `mult` copies of a simple of
// dimension vector `dim`.
struct RepPair {
  int mult = 0;
  DimVector dim;
  friend bool operator==(const RepPair&, const RepPair&) = default;
};

// Multiset of (multiplicity, dimension) pairs. Canonical storage order is
// dimension descending lexicographically, then multiplicity descending.
// Repeated pairs are allowed: distinct simples may share a dimension.
struct RepType {
  std::vector<RepPair> pairs;

  // (e_1, ..., e_r)
  DimVector multiplicities() const;
  // componentwise sum of mult * dim over all pairs
  DimVector weighted_dim_sum() const;
  // exactly one pair with multiplicity one: the type of a simple
  bool is_full_simple() const;

  friend bool operator==(const RepType&, const RepType&) = default;
};

// Canonical comparison on pairs; used by the enumerators and sorters.
bool rep_pair_canonical_less(const RepPair& a, const RepPair& b);

// Sorts pairs into canonical order.
RepType make_rep_type(std::vector<RepPair> pairs);

// All types on the one-vertex g-loop quiver at total dimension n: the
// multisets of positive (e, b) with sum e*b = n, in a deterministic order.
std::vector<RepType> enumerate_rep_types(int g, int n);

// All types on a class-C ambient quiver with dimension vector `dims`: the
// multisets of pairs (e >= 1, beta in N^r \ {0}) with sum e*beta = dims
// componentwise. Simple-type existence reduces to this sum condition for
// the quivers handled here.
std::vector<RepType> enumerate_types_on(const DimVector& dims);

// The type (alpha_i, epsilon_i) over the vertices with alpha_i > 0.
RepType trivial_type(const DimVector& dims);

// The quiver built from a type: p(beta_i) loops at vertex i, and between
// distinct vertices a total of -(beta_i, beta_j) arrows (canonically
// oriented min -> max). dims holds the multiplicities.
struct LocalQuiverData {
  Quiver quiver;
  DimVector dims;
  std::vector<DimVector> vertex_labels;
};

// Vertices follow tau's stored pair order. Throws invalid_type_error when
// a loop or arrow count would be negative.
LocalQuiverData local_quiver(const Quiver& q, const RepType& tau);

// nu = (e'_j, sum_i beta'^(j)_i * beta^(i)), canonically sorted. tau_prime
// lives on the local quiver of tau: its dims must have length r.
RepType compose_types(const RepType& tau, const RepType& tau_prime);

struct IterationCheck {
  bool consistent = false;
  LocalQuiverData iterated;  // local quiver of tau_prime over (Q_tau, e)
  LocalQuiverData composed;  // local quiver of nu over Q, nu aligned to tau_prime
};

// Builds both routes and compares double-adjacency matrices and dims under
// the vertex correspondence induced by the composition (no re-sorting).
IterationCheck check_iteration_consistency(const Quiver& q, const RepType& tau,
                                           const RepType& tau_prime);

// "e1xb1,e2xb2" encoding with scalar dims, e.g. "2x1,1x3".
RepType parse_tau(const std::string& text);
std::string format_tau(const RepType& tau);

}  // namespace qmm
