#include "qmm/polysys.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qmm/errors.hpp"

namespace qmm {

void PolyBuilder::add(int64_t coef, std::vector<uint32_t> vars) {
  if (coef == 0) return;
  std::sort(vars.begin(), vars.end());
  terms_.push_back(Term{coef, std::move(vars)});
}

Poly PolyBuilder::take() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.vars < b.vars; });
  Poly out;
  for (Term& t : terms_) {
    if (!out.empty() && out.back().vars == t.vars) {
      out.back().coef += t.coef;
      if (out.back().coef == 0) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  terms_.clear();
  return out;
}

namespace {

// Index arithmetic mirroring the canonical (jet, arrow, dir, row, col)
// variable order of an additive system.
struct VarIndexer {
  const Quiver& q;
  const DimVector& d;
  std::vector<int64_t> arrow_offset;  // forward block offset within one jet layer
  int64_t per_jet = 0;

  VarIndexer(const Quiver& quiver, const DimVector& dims) : q(quiver), d(dims) {
    arrow_offset.reserve(q.arrows.size());
    for (const Arrow& a : q.arrows) {
      arrow_offset.push_back(per_jet);
      per_jet += 2 * int64_t(d[a.head]) * d[a.tail];
    }
  }

  uint32_t index(int arrow, VarDir dir, int row, int col, int jet) const {
    const Arrow& a = q.arrows[arrow];
    const int64_t block = int64_t(d[a.head]) * d[a.tail];
    const int cols = dir == VarDir::forward ? d[a.tail] : d[a.head];
    int64_t idx = int64_t(jet) * per_jet + arrow_offset[arrow];
    if (dir == VarDir::reverse) idx += block;
    idx += int64_t(row) * cols + col;
    return static_cast<uint32_t>(idx);
  }
};

std::vector<VarId> additive_variables(const Quiver& q, const DimVector& d, int m) {
  std::vector<VarId> vars;
  for (int jet = 0; jet <= m; ++jet)
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
      for (VarDir dir : {VarDir::forward, VarDir::reverse}) {
        const int rows = dir == VarDir::forward ? d[q.arrows[a].head] : d[q.arrows[a].tail];
        const int cols = dir == VarDir::forward ? d[q.arrows[a].tail] : d[q.arrows[a].head];
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < cols; ++c) vars.push_back(VarId{a, dir, r, c, jet});
      }
  return vars;
}

}  // namespace

PolySystem moment_system(const Quiver& q, const DimVector& dims) {
  check_dims(q, dims);
  PolySystem ps;
  ps.quiver = q;
  ps.dims = dims;
  ps.jet_order = 0;
  ps.variables = additive_variables(q, dims, 0);
  const VarIndexer ix(q, dims);

  for (int i = 0; i < q.vertex_count; ++i)
    for (int r = 0; r < dims[i]; ++r)
      for (int c = 0; c < dims[i]; ++c) {
        PolyBuilder pb;
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
          const Arrow& ar = q.arrows[a];
          if (ar.head == i)
            for (int t = 0; t < dims[ar.tail]; ++t)
              pb.add(+1, {ix.index(a, VarDir::forward, r, t, 0),
                          ix.index(a, VarDir::reverse, t, c, 0)});
          if (ar.tail == i)
            for (int t = 0; t < dims[ar.head]; ++t)
              pb.add(-1, {ix.index(a, VarDir::reverse, r, t, 0),
                          ix.index(a, VarDir::forward, t, c, 0)});
        }
        ps.equations.push_back(pb.take());
      }
  return ps;
}

PolySystem jet_system(const Quiver& q, const DimVector& dims, int m) {
  check_dims(q, dims);
  if (m < 0) throw std::domain_error("negative jet order");
  PolySystem ps;
  ps.quiver = q;
  ps.dims = dims;
  ps.jet_order = m;
  ps.variables = additive_variables(q, dims, m);
  const VarIndexer ix(q, dims);

  for (int k = 0; k <= m; ++k)
    for (int i = 0; i < q.vertex_count; ++i)
      for (int r = 0; r < dims[i]; ++r)
        for (int c = 0; c < dims[i]; ++c) {
          PolyBuilder pb;
          for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
            const Arrow& ar = q.arrows[a];
            for (int j = 0; j <= k; ++j) {
              if (ar.head == i)
                for (int t = 0; t < dims[ar.tail]; ++t)
                  pb.add(+1, {ix.index(a, VarDir::forward, r, t, j),
                              ix.index(a, VarDir::reverse, t, c, k - j)});
              if (ar.tail == i)
                for (int t = 0; t < dims[ar.head]; ++t)
                  pb.add(-1, {ix.index(a, VarDir::reverse, r, t, j),
                              ix.index(a, VarDir::forward, t, c, k - j)});
            }
          }
          ps.equations.push_back(pb.take());
        }
  return ps;
}

namespace {

using PolyMatrix = std::vector<Poly>;  // n*n row-major

Poly poly_mul(const Poly& a, const Poly& b) {
  PolyBuilder pb;
  for (const Term& ta : a)
    for (const Term& tb : b) {
      std::vector<uint32_t> vars;
      vars.reserve(ta.vars.size() + tb.vars.size());
      std::merge(ta.vars.begin(), ta.vars.end(), tb.vars.begin(), tb.vars.end(),
                 std::back_inserter(vars));
      pb.add(ta.coef * tb.coef, std::move(vars));
    }
  return pb.take();
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, int n) {
  PolyMatrix out(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      PolyBuilder pb;
      for (int k = 0; k < n; ++k)
        for (const Term& t : poly_mul(a[r * n + k], b[k * n + c]))
          pb.add(t.coef, t.vars);
      out[r * n + c] = pb.take();
    }
  return out;
}

Poly determinant(const PolyMatrix& m, int n) {
  // permutation expansion; n stays small here
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  PolyBuilder pb;
  do {
    int sign = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Poly prod{Term{sign, {}}};
    for (int i = 0; i < n; ++i) prod = poly_mul(prod, m[i * n + perm[i]]);
    for (const Term& t : prod) pb.add(t.coef, t.vars);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return pb.take();
}

}  // namespace

PolySystem multiplicative_system(int g, int n, MatrixGroupKind kind,
                                 const std::vector<std::vector<int64_t>>& rhs) {
  if (g < 1 || n < 1) throw std::domain_error("multiplicative system needs g, n >= 1");
  if (rhs.size() != static_cast<size_t>(n))
    throw std::invalid_argument("rhs is not n x n");
  for (const auto& row : rhs)
    if (row.size() != static_cast<size_t>(n)) throw std::invalid_argument("rhs is not n x n");
  // relation entries expand to n^(4g-1) monomials each
  double est = 1.0;
  for (int i = 0; i < 4 * g - 1; ++i) est *= n;
  if (est > double(1 << 24))
    throw budget_error("relation expansion too large for export at g=" + std::to_string(g) +
                       ", n=" + std::to_string(n));

  PolySystem ps;
  ps.quiver = loop_quiver(2 * g);
  ps.dims = DimVector{n};
  ps.jet_order = 0;
  ps.variables = additive_variables(ps.quiver, ps.dims, 0);
  const VarIndexer ix(ps.quiver, ps.dims);

  auto block = [&](int arrow, VarDir dir) {
    PolyMatrix m(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m[r * n + c] = Poly{Term{1, {ix.index(arrow, dir, r, c, 0)}}};
    return m;
  };

  // two-sided inverse equations per matrix
  for (int a = 0; a < 2 * g; ++a) {
    const PolyMatrix m = block(a, VarDir::forward);
    const PolyMatrix mi = block(a, VarDir::reverse);
    for (const auto& prod : {mat_mul(m, mi, n), mat_mul(mi, m, n)})
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          PolyBuilder pb;
          for (const Term& t : prod[r * n + c]) pb.add(t.coef, t.vars);
          if (r == c) pb.add(-1, {});
          ps.equations.push_back(pb.take());
        }
  }

  if (kind == MatrixGroupKind::special_linear)
    for (int a = 0; a < 2 * g; ++a) {
      PolyBuilder pb;
      for (const Term& t : determinant(block(a, VarDir::forward), n)) pb.add(t.coef, t.vars);
      pb.add(-1, {});
      ps.equations.push_back(pb.take());
    }

  // x_1 y_1 x_1^-1 y_1^-1 ... x_g y_g x_g^-1 y_g^-1 = rhs
  PolyMatrix prod(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) prod[r * n + c] = r == c ? Poly{Term{1, {}}} : Poly{};
  for (int i = 0; i < g; ++i) {
    prod = mat_mul(prod, block(2 * i, VarDir::forward), n);
    prod = mat_mul(prod, block(2 * i + 1, VarDir::forward), n);
    prod = mat_mul(prod, block(2 * i, VarDir::reverse), n);
    prod = mat_mul(prod, block(2 * i + 1, VarDir::reverse), n);
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      PolyBuilder pb;
      for (const Term& t : prod[r * n + c]) pb.add(t.coef, t.vars);
      pb.add(-rhs[r][c], {});
      ps.equations.push_back(pb.take());
    }
  return ps;
}

namespace {

void render_poly(const Poly& p, std::string& out) {
  if (p.empty()) {
    out += '0';
    return;
  }
  for (size_t i = 0; i < p.size(); ++i) {
    const Term& t = p[i];
    if (t.coef < 0)
      out += '-';
    else if (i > 0)
      out += '+';
    out += std::to_string(t.coef < 0 ? -t.coef : t.coef);
    for (uint32_t v : t.vars) {
      out += "*v";
      out += std::to_string(v);
    }
  }
}

}  // namespace

std::string render_system(const PolySystem& ps) {
  std::string out;
  out += "quiver r=" + std::to_string(ps.quiver.vertex_count) + " arrows=";
  for (size_t i = 0; i < ps.quiver.arrows.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ps.quiver.arrows[i].tail) + ">" +
           std::to_string(ps.quiver.arrows[i].head);
  }
  out += '\n';
  out += "dims=" + format_dim_vector(ps.dims) + '\n';
  out += "jetorder=" + std::to_string(ps.jet_order) + '\n';
  out += "vars=" + std::to_string(ps.variables.size()) + '\n';
  for (size_t i = 0; i < ps.variables.size(); ++i) {
    const VarId& v = ps.variables[i];
    out += "v " + std::to_string(i) + " a" + std::to_string(v.arrow) + ' ';
    out += v.dir == VarDir::forward ? 'f' : 'r';
    out += ' ' + std::to_string(v.row) + ' ' + std::to_string(v.col) + " j" +
           std::to_string(v.jet) + '\n';
  }
  for (const Poly& p : ps.equations) {
    out += "e ";
    render_poly(p, out);
    out += '\n';
  }
  return out;
}

void export_system(const PolySystem& ps, std::ostream& out) { out << render_system(ps); }

void export_system(const PolySystem& ps, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << render_system(ps);
  if (!f) throw std::runtime_error("write failed: " + path);
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw std::runtime_error("system parse error: " + what);
}

int64_t parse_int(const std::string& s) {
  size_t used = 0;
  const int64_t v = std::stoll(s, &used);
  if (used != s.size()) parse_fail("bad integer '" + s + "'");
  return v;
}

std::string expect_prefix(const std::string& line, const std::string& prefix) {
  if (line.rfind(prefix, 0) != 0) parse_fail("expected '" + prefix + "' in '" + line + "'");
  return line.substr(prefix.size());
}

Poly parse_poly(const std::string& text) {
  if (text == "0") return {};
  Poly poly;
  size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+') {
      ++pos;
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    const std::string chunk = text.substr(pos, end - pos);
    if (chunk.empty()) parse_fail("empty term in '" + text + "'");
    Term term;
    size_t tp = 0;
    size_t star = chunk.find('*');
    term.coef = sign * parse_int(chunk.substr(0, star == std::string::npos ? chunk.size() : star));
    tp = star;
    while (tp != std::string::npos) {
      ++tp;
      size_t next = chunk.find('*', tp);
      const std::string vtok =
          chunk.substr(tp, next == std::string::npos ? std::string::npos : next - tp);
      if (vtok.size() < 2 || vtok[0] != 'v') parse_fail("bad variable token '" + vtok + "'");
      term.vars.push_back(static_cast<uint32_t>(parse_int(vtok.substr(1))));
      tp = next;
    }
    std::sort(term.vars.begin(), term.vars.end());
    poly.push_back(std::move(term));
    pos = end;
  }
  return poly;
}

}  // namespace

PolySystem parse_system(std::istream& in) {
  PolySystem ps;
  std::string line;

  if (!std::getline(in, line)) parse_fail("missing quiver line");
  {
    std::string rest = expect_prefix(line, "quiver r=");
    const size_t sp = rest.find(" arrows=");
    if (sp == std::string::npos) parse_fail("missing arrows in '" + line + "'");
    ps.quiver.vertex_count = static_cast<int>(parse_int(rest.substr(0, sp)));
    const std::string arrows = rest.substr(sp + 8);
    size_t pos = 0;
    while (pos < arrows.size()) {
      size_t comma = arrows.find(',', pos);
      if (comma == std::string::npos) comma = arrows.size();
      const std::string tok = arrows.substr(pos, comma - pos);
      const size_t gt = tok.find('>');
      if (gt == std::string::npos) parse_fail("bad arrow token '" + tok + "'");
      ps.quiver.arrows.push_back(Arrow{static_cast<int>(parse_int(tok.substr(0, gt))),
                                       static_cast<int>(parse_int(tok.substr(gt + 1)))});
      pos = comma + 1;
    }
  }

  if (!std::getline(in, line)) parse_fail("missing dims line");
  {
    const std::string rest = expect_prefix(line, "dims=");
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      ps.dims.push_back(static_cast<int>(parse_int(rest.substr(pos, comma - pos))));
      pos = comma + 1;
    }
  }

  if (!std::getline(in, line)) parse_fail("missing jetorder line");
  ps.jet_order = static_cast<int>(parse_int(expect_prefix(line, "jetorder=")));

  if (!std::getline(in, line)) parse_fail("missing vars line");
  const int64_t var_count = parse_int(expect_prefix(line, "vars="));

  for (int64_t i = 0; i < var_count; ++i) {
    if (!std::getline(in, line)) parse_fail("missing variable line");
    std::istringstream ls(line);
    std::string tag, idtok, atok, dtok, jtok;
    int row = 0, col = 0;
    if (!(ls >> tag >> idtok >> atok >> dtok >> row >> col >> jtok) || tag != "v")
      parse_fail("bad variable line '" + line + "'");
    if (parse_int(idtok) != i) parse_fail("variable ids out of order at '" + line + "'");
    if (atok.empty() || atok[0] != 'a' || jtok.empty() || jtok[0] != 'j')
      parse_fail("bad variable line '" + line + "'");
    VarId v;
    v.arrow = static_cast<int>(parse_int(atok.substr(1)));
    if (dtok == "f")
      v.dir = VarDir::forward;
    else if (dtok == "r")
      v.dir = VarDir::reverse;
    else
      parse_fail("bad direction '" + dtok + "'");
    v.row = row;
    v.col = col;
    v.jet = static_cast<int>(parse_int(jtok.substr(1)));
    ps.variables.push_back(v);
  }

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ps.equations.push_back(parse_poly(expect_prefix(line, "e ")));
  }
  return ps;
}

PolySystem parse_system_text(const std::string& text) {
  std::istringstream in(text);
  return parse_system(in);
}

}  // namespace qmm
