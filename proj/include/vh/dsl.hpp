#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vh/regular.hpp"

namespace vh {

struct ParseError : Error {
  size_t offset;
  std::string expected;
  ParseError(size_t off, const std::string& exp)
      : Error("parse error at byte " + std::to_string(off) + ": expected " + exp),
        offset(off),
        expected(exp) {}
};

struct ValidationError : Error {
  size_t offset;
  ValidationError(size_t off, const std::string& why)
      : Error("invalid diagram at byte " + std::to_string(off) + ": " + why), offset(off) {}
};

// One factor of the diagram expression. Vertex indices are 1-based and local
// to the factor; a paired factor (X~X) covers both copies, 1..2*rank.
struct FactorExpr {
  Family fam;
  int rank = 0;
  bool paired = false;
  std::vector<std::pair<int, int>> inv;  // 2-cycles, 1-based local
  std::vector<int> paint;
  std::vector<int> delta0;
  size_t offset = 0;  // for error reporting
};

struct DiagramExpr {
  std::vector<FactorExpr> factors;
  std::optional<Mat<QC>> ell;
};

namespace detail {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool try_eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void eat(char c) {
    if (!try_eat(c)) throw ParseError(pos, std::string("'") + c + "'");
  }
  bool try_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(start, "integer");
    return std::stoi(s.substr(start, pos - start));
  }
};

inline std::vector<int> index_set(Cursor& cur) {
  cur.eat('{');
  std::vector<int> out;
  if (!cur.try_eat('}')) {
    for (;;) {
      out.push_back(cur.integer());
      if (cur.try_eat('}')) break;
      cur.eat(',');
    }
  }
  return out;
}

// Gaussian rational literal: p, p/q, 2i, 1/2+3/4i, -i, i.
inline QC gaussian_entry(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.pos;
  Rat re(0), im(0);
  bool saw_term = false;
  while (true) {
    cur.skip_ws();
    int sign = 1;
    if (cur.try_eat('+'))
      sign = 1;
    else if (cur.try_eat('-'))
      sign = -1;
    else if (saw_term)
      break;
    cur.skip_ws();
    size_t tstart = cur.pos;
    std::string digits;
    while (cur.pos < cur.s.size() &&
           (std::isdigit(static_cast<unsigned char>(cur.s[cur.pos])) || cur.s[cur.pos] == '/'))
      digits += cur.s[cur.pos++];
    bool imag = cur.pos < cur.s.size() && cur.s[cur.pos] == 'i';
    if (imag) ++cur.pos;
    if (digits.empty() && !imag) {
      if (saw_term) {
        cur.pos = tstart;
        break;
      }
      throw ParseError(tstart, "rational or imaginary term");
    }
    Rat mag = digits.empty() ? Rat(1) : [&] {
      auto r = parse_rat(digits);
      if (!r) throw ParseError(tstart, "rational number");
      return *r;
    }();
    if (imag)
      im += sign * mag;
    else
      re += sign * mag;
    saw_term = true;
    cur.skip_ws();
    if (cur.pos >= cur.s.size() || (cur.s[cur.pos] != '+' && cur.s[cur.pos] != '-')) break;
  }
  if (!saw_term) throw ParseError(start, "gaussian rational");
  return QC::gauss(re, im);
}

inline FactorExpr factor(Cursor& cur) {
  cur.skip_ws();
  FactorExpr f;
  f.offset = cur.pos;
  char letter = cur.peek();
  if (letter < 'A' || letter > 'G') throw ParseError(cur.pos, "type letter A-G");
  ++cur.pos;
  f.fam = static_cast<Family>(letter);
  f.rank = cur.integer();
  if (cur.try_eat('~')) {
    size_t off = cur.pos;
    char l2 = cur.peek();
    if (l2 < 'A' || l2 > 'G') throw ParseError(cur.pos, "type letter A-G");
    ++cur.pos;
    int r2 = cur.integer();
    if (l2 != letter || r2 != f.rank)
      throw ValidationError(off, "swapped pair must repeat the same type");
    f.paired = true;
  }
  for (;;) {
    cur.skip_ws();
    if (cur.try_word("inv=")) {
      if (f.paired) throw ValidationError(cur.pos, "inv= is implied for a swapped pair");
      while (cur.try_eat('(')) {
        std::vector<int> cyc;
        while (!cur.try_eat(')')) cyc.push_back(cur.integer());
        if (cyc.size() == 1) continue;  // fixed point, redundant
        if (cyc.size() != 2) throw ValidationError(cur.pos, "involutions have 2-cycles only");
        f.inv.emplace_back(cyc[0], cyc[1]);
      }
    } else if (cur.try_word("paint=")) {
      f.paint = index_set(cur);
    } else if (cur.try_word("delta0=")) {
      f.delta0 = index_set(cur);
    } else {
      break;
    }
  }
  return f;
}

}  // namespace detail

namespace detail {

struct Assembly {
  CartanMatrix cm;
  std::vector<int> theta;
  std::vector<bool> painted;
  std::vector<int> delta0;
};

// Structural validation of a parsed expression; everything except the
// ell-subspace checks can run without building the root system.
inline Assembly assemble(const DiagramExpr& expr) {
  std::vector<CartanMatrix> blocks;
  std::vector<int> factor_offset;
  int total = 0;
  for (const auto& f : expr.factors) {
    factor_offset.push_back(total);
    CartanMatrix block = [&] {
      try {
        return make_block(f.fam, f.rank);
      } catch (const NotFiniteType& e) {
        throw ValidationError(f.offset, e.what());
      }
    }();
    blocks.push_back(block);
    total += block.n;
    if (f.paired) {
      blocks.push_back(block);
      total += block.n;
    }
  }
  Assembly out;
  out.cm = direct_sum(blocks);
  out.theta.assign(total, 0);
  for (int i = 0; i < total; ++i) out.theta[i] = i;
  out.painted.assign(total, false);

  for (size_t fi = 0; fi < expr.factors.size(); ++fi) {
    const auto& f = expr.factors[fi];
    int off = factor_offset[fi];
    int span = f.paired ? 2 * f.rank : f.rank;
    auto local = [&](int idx1) {
      if (idx1 < 1 || idx1 > span)
        throw ValidationError(f.offset, "vertex " + std::to_string(idx1) + " out of range");
      return off + idx1 - 1;
    };
    if (f.paired)
      for (int i = 0; i < f.rank; ++i) {
        out.theta[off + i] = off + f.rank + i;
        out.theta[off + f.rank + i] = off + i;
      }
    for (const auto& [a, b] : f.inv) {
      int ga = local(a), gb = local(b);
      if (out.theta[ga] != ga || out.theta[gb] != gb || ga == gb)
        throw ValidationError(f.offset, "involution cycles overlap");
      out.theta[ga] = gb;
      out.theta[gb] = ga;
    }
    for (int v : f.paint) out.painted[local(v)] = true;
    for (int v : f.delta0) out.delta0.push_back(local(v));
  }
  if (!is_diagram_automorphism(out.cm, out.theta))
    throw ValidationError(expr.factors[0].offset, "involution is not a diagram automorphism");
  for (int i = 0; i < total; ++i)
    if (out.painted[i] && out.theta[i] != i)
      throw ValidationError(expr.factors[0].offset, "painted vertex is not fixed");
  std::sort(out.delta0.begin(), out.delta0.end());
  for (size_t k = 0; k + 1 < out.delta0.size(); ++k)
    if (out.delta0[k] == out.delta0[k + 1])
      throw ValidationError(expr.factors[0].offset, "repeated delta0 vertex");
  for (int v : out.delta0) {
    if (out.theta[v] == v)
      throw ValidationError(expr.factors[0].offset, "delta0 vertices must be complex");
    for (int w : out.delta0) {
      int img = out.theta[w];
      if (v == img || out.cm.a[v][img] != 0)
        throw ValidationError(expr.factors[0].offset, "delta0 violates the disconnection rule");
    }
  }
  return out;
}

}  // namespace detail

inline DiagramExpr parse_diagram(const std::string& text) {
  detail::Cursor cur{text};
  DiagramExpr expr;
  expr.factors.push_back(detail::factor(cur));
  while (cur.try_eat(';')) expr.factors.push_back(detail::factor(cur));
  if (cur.try_word("ell=")) {
    Mat<QC> rows;
    cur.eat('[');
    for (;;) {
      cur.eat('[');
      Vec<QC> row;
      if (!cur.try_eat(']')) {
        for (;;) {
          row.push_back(detail::gaussian_entry(cur));
          if (cur.try_eat(']')) break;
          cur.eat(',');
        }
      }
      rows.push_back(std::move(row));
      if (cur.try_eat(']')) break;
      cur.eat(',');
    }
    expr.ell = std::move(rows);
  }
  if (!cur.eof()) throw ParseError(cur.pos, "end of input");
  // normalize for the print round-trip
  for (auto& f : expr.factors) {
    for (auto& [a, b] : f.inv)
      if (a > b) std::swap(a, b);
    std::sort(f.inv.begin(), f.inv.end());
    std::sort(f.paint.begin(), f.paint.end());
    std::sort(f.delta0.begin(), f.delta0.end());
  }
  detail::assemble(expr);  // parses iff the diagram data is valid
  return expr;
}

inline std::string print_diagram(const DiagramExpr& expr) {
  std::ostringstream os;
  bool first_factor = true;
  for (const auto& f : expr.factors) {
    if (!first_factor) os << "; ";
    first_factor = false;
    os << family_letter(f.fam) << f.rank;
    if (f.paired) os << "~" << family_letter(f.fam) << f.rank;
    if (!f.inv.empty()) {
      os << " inv=";
      for (const auto& [a, b] : f.inv) os << "(" << a << " " << b << ")";
    }
    auto idx_set = [&](const char* name, const std::vector<int>& v) {
      if (v.empty()) return;
      os << " " << name << "={";
      for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << "}";
    };
    idx_set("paint", f.paint);
    idx_set("delta0", f.delta0);
  }
  if (expr.ell) {
    os << " ell=[";
    for (size_t i = 0; i < expr.ell->size(); ++i) {
      os << (i ? "," : "") << "[";
      const auto& row = (*expr.ell)[i];
      for (size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j].str();
      os << "]";
    }
    os << "]";
  }
  return os.str();
}

struct Elaborated {
  VoganDiagram vd;
  Delta0 delta0;
  std::optional<EllSubspace> ell;
};

// Builds the Vogan diagram, Delta_0 and optional ell from a parsed expression,
// validating every index against the diagram invariants.
inline Elaborated elaborate(const DiagramExpr& expr) {
  detail::Assembly as = detail::assemble(expr);
  RootSystemPtr rs = build_root_system(as.cm);
  VoganDiagram vd = make_vogan(rs, as.theta, as.painted);
  Delta0 delta0{as.delta0};
  Elaborated out{std::move(vd), std::move(delta0), std::nullopt};
  if (expr.ell) {
    EllSubspace ell;
    ell.rows = *expr.ell;
    for (const auto& row : ell.rows)
      if (static_cast<int>(row.size()) != out.vd.rank())
        throw ValidationError(0, "ell rows must have one entry per vertex");
    if (!validate_ell(out.vd, out.delta0, ell))
      throw ValidationError(0, "ell is not a valid subspace for this diagram");
    out.ell = std::move(ell);
  }
  return out;
}

}  // namespace vh
