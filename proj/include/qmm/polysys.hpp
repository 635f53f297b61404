#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "qmm/quiver.hpp"

namespace qmm {

enum class VarDir : uint8_t { forward = 0, reverse = 1 };

// A matrix-entry coordinate: entry (row, col) of the order-`jet` matrix on
// arrow `arrow`, either along the arrow or along its added reverse. For a
// multiplicative system the reverse block holds the inverse matrix.
struct VarId {
  int arrow = 0;
  VarDir dir = VarDir::forward;
  int row = 0;
  int col = 0;
  int jet = 0;

  friend bool operator==(const VarId&, const VarId&) = default;
  friend bool operator<(const VarId& a, const VarId& b) {
    return std::tie(a.jet, a.arrow, a.dir, a.row, a.col) <
           std::tie(b.jet, b.arrow, b.dir, b.row, b.col);
  }
};

// Monomials are commutative: variable indices are kept sorted and like
// terms are combined, so an identically vanishing equation is stored empty.
struct Term {
  int64_t coef = 0;
  std::vector<uint32_t> vars;  // indices into PolySystem::variables, sorted
  friend bool operator==(const Term&, const Term&) = default;
};

using Poly = std::vector<Term>;  // sorted by monomial, no zero coefficients

struct PolySystem {
  Quiver quiver;
  DimVector dims;
  int jet_order = 0;
  std::vector<VarId> variables;  // canonical (jet, arrow, dir, row, col) order
  std::vector<Poly> equations;

  friend bool operator==(const PolySystem&, const PolySystem&) = default;
};

// Accumulates terms of one polynomial, combining equal monomials.
class PolyBuilder {
 public:
  void add(int64_t coef, std::vector<uint32_t> vars);
  Poly take();

 private:
  std::vector<Term> terms_;
};

// The per-vertex matrix equations sum_{head(a)=i} x_a x_a* -
// sum_{tail(a)=i} x_a* x_a = 0, expanded entrywise. One equation per
// vertex per matrix entry, identically zero ones included.
PolySystem moment_system(const Quiver& q, const DimVector& dims);

// Order-k equation at each vertex: the k-th convolution coefficient of the
// moment equation in the jet variables, for k = 0..m. jet_system(q, d, 0)
// equals moment_system(q, d).
PolySystem jet_system(const Quiver& q, const DimVector& dims, int m);

enum class MatrixGroupKind { general_linear, special_linear };

// The surface-group relation x_1 y_1 x_1^-1 y_1^-1 ... = rhs presented with
// auxiliary inverse blocks: two-sided inverse equations per matrix,
// determinant equations in the special linear case, then the entrywise
// relation. rhs must be n x n.
PolySystem multiplicative_system(int g, int n, MatrixGroupKind kind,
                                 const std::vector<std::vector<int64_t>>& rhs);

// Stable text format, UTF-8, LF line endings:
//   quiver r=<vertices> arrows=<t>h,...>
//   dims=<d,...>
//   jetorder=<m>
//   vars=<count>
//   v <id> a<arrow> <f|r> <row> <col> j<jet>     (one per variable)
//   e <poly>                                      (one per equation)
// where <poly> is +/- separated terms `c*v<i>[*v<j>...]`, or `0`.
void export_system(const PolySystem& ps, std::ostream& out);
void export_system(const PolySystem& ps, const std::string& path);
std::string render_system(const PolySystem& ps);

PolySystem parse_system(std::istream& in);
PolySystem parse_system_text(const std::string& text);

}  // namespace qmm
