#include "pnc/parse.hpp"

#include <cctype>

#include "pnc/factor.hpp"

namespace pnc {

namespace {

// exponents of x, y, z, t
using E4 = std::array<int, 4>;
using P4 = std::map<E4, Alg>;

P4 p4mul(const P4& a, const P4& b) {
  P4 r;
  for (auto& [e1, c1] : a)
    for (auto& [e2, c2] : b) {
      E4 e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
      r[e] += c1 * c2;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

P4 p4add(P4 a, const P4& b, int sign) {
  for (auto& [e, c] : b) {
    a[e] += sign > 0 ? c : -c;
    if (a[e].is_zero()) a.erase(e);
  }
  return a;
}

P4 p4const(const Alg& c) {
  P4 r;
  if (!c.is_zero()) r[{0, 0, 0, 0}] = c;
  return r;
}

class Parser {
 public:
  Parser(const std::string& s, std::size_t base, ParseContext& ctx, std::string tname = "t")
      : s_(s), base_(base), ctx_(ctx), tname_(std::move(tname)) {}

  P4 parse_all() {
    P4 r = expr();
    ws();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

  PolyMat parse_matrix_product() {
    PolyMat m = matrix_atom();
    while (true) {
      ws();
      if (i_ < s_.size() && s_[i_] == '*') {
        ++i_;
        PolyMat b = matrix_atom();
        PolyMat r;
        for (int a = 0; a < 3; ++a)
          for (int c = 0; c < 3; ++c)
            for (int k = 0; k < 3; ++k) r[a][c] += m[a][k] * b[k][c];
        m = r;
      } else {
        break;
      }
    }
    ws();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return m;
  }

  [[noreturn]] void fail(const std::string& m) { throw ParseError(m, base_ + i_); }

  void ws() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
  }
  bool eat(char c) {
    ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  P4 expr() {
    ws();
    P4 r;
    int sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    r = p4add(P4{}, term(), sign);
    while (true) {
      ws();
      if (eat('+'))
        r = p4add(r, term(), 1);
      else if (i_ < s_.size() && s_[i_] == '-') {
        ++i_;
        r = p4add(r, term(), -1);
      } else
        break;
    }
    return r;
  }

  P4 term() {
    P4 r = factor_();
    while (true) {
      ws();
      if (i_ + 1 < s_.size() && s_[i_] == '*' && s_[i_ + 1] == '*') break;
      if (eat('*')) {
        r = p4mul(r, factor_());
      } else if (eat('/')) {
        std::size_t at = i_;
        P4 d = factor_();
        if (d.size() != 1 || d.begin()->first != E4{0, 0, 0, 0}) {
          i_ = at;
          fail("division only by nonzero constants");
        }
        Alg inv = d.begin()->second.inverse();
        for (auto& [e, c] : r) c *= inv;
      } else {
        break;
      }
    }
    return r;
  }

  P4 factor_() {
    ws();
    if (eat('-')) {
      P4 r = factor_();
      for (auto& [e, c] : r) c = -c;
      return r;
    }
    P4 b = atom();
    ws();
    bool pw = false;
    if (i_ + 1 < s_.size() && s_[i_] == '*' && s_[i_ + 1] == '*') {
      i_ += 2;
      pw = true;
    } else if (eat('^')) {
      pw = true;
    }
    if (pw) {
      ws();
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) ++i_;
      if (st == i_) fail("expected exponent");
      int e = std::stoi(s_.substr(st, i_ - st));
      if (e > 4096) fail("exponent too large");
      P4 r = p4const(Alg(1));
      for (int k = 0; k < e; ++k) r = p4mul(r, b);
      return r;
    }
    return b;
  }

  P4 atom() {
    ws();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      P4 r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit((unsigned char)c)) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) ++i_;
      return p4const(Alg(Rational(Integer(s_.substr(st, i_ - st)))));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t st = i_;
      while (i_ < s_.size() && (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_')) ++i_;
      std::string id = s_.substr(st, i_ - st);
      P4 r;
      if (id == "x") r[{1, 0, 0, 0}] = Alg(1);
      else if (id == "y") r[{0, 1, 0, 0}] = Alg(1);
      else if (id == "z") r[{0, 0, 1, 0}] = Alg(1);
      else if (id == tname_) r[{0, 0, 0, 1}] = Alg(1);
      else {
        auto it = ctx_.symbols.find(id);
        if (it == ctx_.symbols.end()) {
          i_ = st;
          fail("unknown symbol '" + id + "'");
        }
        r = p4const(it->second);
      }
      return r;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  UniPoly entry() {
    std::size_t at = i_;
    P4 p = expr();
    std::vector<Alg> v;
    for (auto& [e, c] : p) {
      if (e[0] || e[1] || e[2]) {
        i_ = at;
        fail("germ entries may only involve t");
      }
      if ((int)v.size() <= e[3]) v.resize(e[3] + 1);
      v[e[3]] += c;
    }
    return UniPoly(v);
  }

  PolyMat matrix_atom() {
    ws();
    PolyMat m;
    if (s_.compare(i_, 4, "diag") == 0) {
      i_ += 4;
      expect('(');
      for (int k = 0; k < 3; ++k) {
        if (k) expect(',');
        m[k][k] = entry();
      }
      expect(')');
      return m;
    }
    if (eat('(')) {
      PolyMat r = parse_inner_product();
      expect(')');
      return r;
    }
    expect('[');
    for (int r = 0; r < 3; ++r) {
      if (r) expect(',');
      expect('[');
      for (int c = 0; c < 3; ++c) {
        if (c) expect(',');
        m[r][c] = entry();
      }
      expect(']');
    }
    expect(']');
    return m;
  }

  PolyMat parse_inner_product() {
    PolyMat m = matrix_atom();
    while (eat('*')) {
      PolyMat b = matrix_atom();
      PolyMat r;
      for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c)
          for (int k = 0; k < 3; ++k) r[a][c] += m[a][k] * b[k][c];
      m = r;
    }
    return m;
  }

  std::size_t pos() const { return i_; }

 private:
  const std::string& s_;
  std::size_t base_;
  ParseContext& ctx_;
  std::string tname_;
  std::size_t i_ = 0;
};

// strips adjoin headers, returns the remaining body and its offset
std::string handle_headers(const std::string& src, ParseContext& ctx, std::size_t& offset) {
  std::size_t pos = 0;
  while (true) {
    std::size_t end = src.find_first_of("\n;", pos);
    std::string line = src.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::size_t k = line.find_first_not_of(" \t\r");
    if (k == std::string::npos) {
      if (end == std::string::npos) break;
      pos = end + 1;
      continue;
    }
    if (line.compare(k, 6, "adjoin") != 0) break;
    std::size_t colon = line.find(':');
    std::size_t eq = line.rfind('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
      throw ParseError("malformed adjoin header", pos + k);
    std::string name = line.substr(k + 6, colon - k - 6);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty() || name == "x" || name == "y" || name == "z" || name == "t")
      throw ParseError("bad generator name", pos + k);
    std::string lhs = line.substr(colon + 1, eq - colon - 1), rhs = line.substr(eq + 1);
    Parser pl(lhs, pos + colon + 1, ctx, name), pr(rhs, pos + eq + 1, ctx, name);
    P4 p = p4add(pl.parse_all(), pr.parse_all(), -1);
    std::vector<Alg> v;
    for (auto& [e, c] : p) {
      if (e[0] || e[1] || e[2]) throw ParseError("adjoin polynomial must be univariate", pos + colon + 1);
      if ((int)v.size() <= e[3]) v.resize(e[3] + 1);
      v[e[3]] += c;
    }
    UniPoly m(v);
    if (m.degree() < 1) throw ParseError("adjoin polynomial must be nonconstant", pos + colon + 1);
    auto [F, r] = adjoin_root(ctx.field, m.monic());
    ctx.field = F;
    ctx.symbols[name] = r;
    if (F && r == Alg::generator(F)) ctx.names.preset(F.get(), name);
    if (end == std::string::npos) {
      pos = src.size();
      break;
    }
    pos = end + 1;
  }
  offset = pos;
  return src.substr(pos);
}

}  // namespace

Form parse_form(const std::string& src, ParseContext& ctx) {
  std::size_t off = 0;
  std::string body = handle_headers(src, ctx, off);
  Parser p(body, off, ctx);
  P4 poly = p.parse_all();
  if (poly.empty()) throw ParseError("zero polynomial", off);
  int d = -1;
  Form f;
  for (auto& [e, c] : poly) {
    if (e[3]) throw ParseError("curve may not involve t", off);
    int s = e[0] + e[1] + e[2];
    if (d < 0) d = s, f = Form(d);
    if (s != d) throw ParseError("polynomial is not homogeneous", off);
    f.add({e[0], e[1], e[2]}, c);
  }
  if (d > limits().degree_cap) throw PrecisionError("degree exceeds cap");
  return f;
}

PolyMat parse_germ(const std::string& src, ParseContext& ctx) {
  std::size_t off = 0;
  std::string body = handle_headers(src, ctx, off);
  Parser p(body, off, ctx);
  return p.parse_matrix_product();
}

Vec3 parse_point(const std::string& src, ParseContext& ctx) {
  std::string s = src;
  for (auto& c : s)
    if (c == ':' || c == ';') c = ',';
  std::size_t a = s.find_first_not_of(" ("), b = s.find_last_not_of(" )");
  if (a == std::string::npos) throw ParseError("empty point", 0);
  s = s.substr(a, b - a + 1);
  Vec3 v;
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    std::size_t e = k < 2 ? s.find(',', pos) : s.size();
    if (e == std::string::npos) throw ParseError("expected three coordinates", pos);
    std::string piece = s.substr(pos, e - pos);
    Parser q(piece, pos + a, ctx);
    P4 poly = q.parse_all();
    Alg c(0);
    for (auto& [ex, cf] : poly) {
      if (ex[0] || ex[1] || ex[2] || ex[3]) throw ParseError("coordinates must be constants", pos + a);
      c = cf;
    }
    v[k] = c;
    pos = e + 1;
  }
  if (is_zero(v)) throw ParseError("zero point", 0);
  return v;
}

}  // namespace pnc
