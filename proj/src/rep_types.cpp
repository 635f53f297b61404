#include "qmm/rep_types.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmm/errors.hpp"

namespace qmm {

DimVector RepType::multiplicities() const {
  DimVector e;
  e.reserve(pairs.size());
  for (const RepPair& p : pairs) e.push_back(p.mult);
  return e;
}

DimVector RepType::weighted_dim_sum() const {
  if (pairs.empty()) return {};
  DimVector s(pairs.front().dim.size(), 0);
  for (const RepPair& p : pairs) {
    if (p.dim.size() != s.size())
      throw std::invalid_argument("rep type mixes dimension vector lengths");
    for (size_t i = 0; i < s.size(); ++i) s[i] += p.mult * p.dim[i];
  }
  return s;
}

bool RepType::is_full_simple() const {
  return pairs.size() == 1 && pairs.front().mult == 1;
}

bool rep_pair_canonical_less(const RepPair& a, const RepPair& b) {
  if (a.dim != b.dim)
    return std::lexicographical_compare(b.dim.begin(), b.dim.end(), a.dim.begin(), a.dim.end());
  return a.mult > b.mult;
}

RepType make_rep_type(std::vector<RepPair> pairs) {
  std::stable_sort(pairs.begin(), pairs.end(), rep_pair_canonical_less);
  return RepType{std::move(pairs)};
}

namespace {

bool fits(const RepPair& p, const DimVector& remaining) {
  for (size_t i = 0; i < remaining.size(); ++i)
    if (int64_t(p.mult) * p.dim[i] > remaining[i]) return false;
  return true;
}

void subtract(DimVector& remaining, const RepPair& p, int sign) {
  for (size_t i = 0; i < remaining.size(); ++i) remaining[i] -= sign * p.mult * p.dim[i];
}

void enumerate_rec(const std::vector<RepPair>& candidates, size_t min_idx, DimVector& remaining,
                   std::vector<RepPair>& stack, std::vector<RepType>& out) {
  bool done = true;
  for (int v : remaining)
    if (v != 0) {
      done = false;
      break;
    }
  if (done) {
    out.push_back(RepType{stack});
    return;
  }
  for (size_t i = min_idx; i < candidates.size(); ++i) {
    if (!fits(candidates[i], remaining)) continue;
    subtract(remaining, candidates[i], +1);
    stack.push_back(candidates[i]);
    enumerate_rec(candidates, i, remaining, stack, out);
    stack.pop_back();
    subtract(remaining, candidates[i], -1);
  }
}

}  // namespace

std::vector<RepType> enumerate_types_on(const DimVector& dims) {
  if (dims.empty()) throw std::domain_error("empty dimension vector");
  for (int d : dims)
    if (d < 0) throw std::domain_error("negative dimension entry");
  if (std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; }))
    throw std::domain_error("zero dimension vector");

  // All (e, beta) with e >= 1 and e*beta <= dims componentwise, beta != 0,
  // listed in canonical descending order.
  std::vector<RepPair> candidates;
  DimVector beta(dims.size(), 0);
  // odometer over beta <= dims
  while (true) {
    size_t pos = 0;
    while (pos < beta.size() && beta[pos] == dims[pos]) beta[pos++] = 0;
    if (pos == beta.size()) break;
    ++beta[pos];
    if (std::all_of(beta.begin(), beta.end(), [](int b) { return b == 0; })) continue;
    int emax = 0;
    for (size_t i = 0; i < beta.size(); ++i)
      if (beta[i] > 0) {
        const int cap = dims[i] / beta[i];
        emax = (emax == 0) ? cap : std::min(emax, cap);
      }
    for (int e = 1; e <= emax; ++e) candidates.push_back(RepPair{e, beta});
  }
  std::sort(candidates.begin(), candidates.end(), rep_pair_canonical_less);

  std::vector<RepType> out;
  DimVector remaining = dims;
  std::vector<RepPair> stack;
  enumerate_rec(candidates, 0, remaining, stack, out);
  return out;
}

std::vector<RepType> enumerate_rep_types(int g, int n) {
  if (g < 2) throw std::domain_error("rep type enumeration requires g >= 2");
  if (n < 1) throw std::domain_error("rep type enumeration requires n >= 1");
  return enumerate_types_on(DimVector{n});
}

RepType trivial_type(const DimVector& dims) {
  if (std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; }))
    throw std::domain_error("trivial type of the zero vector");
  std::vector<RepPair> pairs;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] <= 0) continue;
    DimVector eps(dims.size(), 0);
    eps[i] = 1;
    pairs.push_back(RepPair{dims[i], std::move(eps)});
  }
  return make_rep_type(std::move(pairs));
}

LocalQuiverData local_quiver(const Quiver& q, const RepType& tau) {
  if (tau.pairs.empty()) throw std::invalid_argument("empty representation type");
  const int r = static_cast<int>(tau.pairs.size());
  for (const RepPair& p : tau.pairs) {
    check_dims(q, p.dim);
    if (p.mult < 1) throw std::invalid_argument("nonpositive multiplicity in type");
  }

  LocalQuiverData lq;
  lq.quiver.vertex_count = r;
  for (int i = 0; i < r; ++i) {
    const int64_t loops = p_value(q, tau.pairs[i].dim);
    if (loops < 0)
      throw invalid_type_error("type not in the supported class: negative loop count");
    for (int64_t k = 0; k < loops; ++k) lq.quiver.arrows.push_back(Arrow{i, i});
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const int64_t cross = -sym_form(q, tau.pairs[i].dim, tau.pairs[j].dim);
      if (cross < 0)
        throw invalid_type_error("type not in the supported class: negative arrow count");
      for (int64_t k = 0; k < cross; ++k) lq.quiver.arrows.push_back(Arrow{i, j});
    }
  lq.dims = tau.multiplicities();
  for (const RepPair& p : tau.pairs) lq.vertex_labels.push_back(p.dim);
  return lq;
}

namespace {

std::vector<RepPair> compose_pairs_aligned(const RepType& tau, const RepType& tau_prime) {
  const size_t r = tau.pairs.size();
  if (r == 0) throw std::invalid_argument("empty base type");
  const size_t amb = tau.pairs.front().dim.size();
  std::vector<RepPair> nu;
  nu.reserve(tau_prime.pairs.size());
  for (const RepPair& p : tau_prime.pairs) {
    if (p.dim.size() != r)
      throw std::invalid_argument("inner type dimension length does not match pair count");
    DimVector d(amb, 0);
    for (size_t i = 0; i < r; ++i)
      for (size_t k = 0; k < amb; ++k) d[k] += p.dim[i] * tau.pairs[i].dim[k];
    nu.push_back(RepPair{p.mult, std::move(d)});
  }
  return nu;
}

}  // namespace

RepType compose_types(const RepType& tau, const RepType& tau_prime) {
  return make_rep_type(compose_pairs_aligned(tau, tau_prime));
}

IterationCheck check_iteration_consistency(const Quiver& q, const RepType& tau,
                                           const RepType& tau_prime) {
  IterationCheck result;
  LocalQuiverData base = local_quiver(q, tau);
  if (tau_prime.weighted_dim_sum() != base.dims)
    throw std::invalid_argument("inner type does not sum to the local dimension vector");
  result.iterated = local_quiver(base.quiver, tau_prime);
  // Vertex order of the composed type follows tau_prime's pairs, so the two
  // local quivers are compared under the identity vertex correspondence.
  RepType nu{compose_pairs_aligned(tau, tau_prime)};
  result.composed = local_quiver(q, nu);
  result.consistent = double_adjacency(result.iterated.quiver) ==
                          double_adjacency(result.composed.quiver) &&
                      result.iterated.dims == result.composed.dims;
  return result;
}

RepType parse_tau(const std::string& text) {
  std::vector<RepPair> pairs;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const size_t x = item.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= item.size())
      throw std::invalid_argument("bad type encoding, expected e1xb1,e2xb2,...: " + text);
    int e = 0, b = 0;
    try {
      e = std::stoi(item.substr(0, x));
      b = std::stoi(item.substr(x + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad type encoding: " + text);
    }
    if (e < 1 || b < 1) throw std::invalid_argument("type entries must be positive: " + text);
    pairs.push_back(RepPair{e, DimVector{b}});
    pos = comma + 1;
  }
  if (pairs.empty()) throw std::invalid_argument("empty type encoding");
  return make_rep_type(std::move(pairs));
}

std::string format_tau(const RepType& tau) {
  std::string s;
  for (size_t i = 0; i < tau.pairs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(tau.pairs[i].mult);
    s += 'x';
    const DimVector& d = tau.pairs[i].dim;
    if (d.size() == 1) {
      s += std::to_string(d[0]);
    } else {
      s += '(';
      for (size_t k = 0; k < d.size(); ++k) {
        if (k) s += '.';
        s += std::to_string(d[k]);
      }
      s += ')';
    }
  }
  return s;
}

}  // namespace qmm
