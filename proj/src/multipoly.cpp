#include "layerlie/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace layerlie {

namespace {

bool graded_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db;
  return a > b;  // exponents lexicographically descending within a degree
}

MultiPoly from_map(int nvars, std::map<std::vector<int>, Rat>& acc) {
  MultiPoly out;
  out.nvars = nvars;
  for (auto& [e, c] : acc) {
    c.canonicalize();
    if (c != 0) out.terms.emplace_back(e, c);
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
  return out;
}

void require_same_nvars(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars != q.nvars)
    throw std::invalid_argument("polynomial variable-count mismatch");
}

}  // namespace

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p;
  p.nvars = nvars;
  if (c != 0) p.terms.emplace_back(std::vector<int>(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  MultiPoly p;
  p.nvars = nvars;
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.terms.emplace_back(e, Rat(1));
  return p;
}

int MultiPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

Rat MultiPoly::coefficient(const std::vector<int>& exponents) const {
  for (const auto& [e, c] : terms)
    if (e == exponents) return c;
  return 0;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) {
  require_same_nvars(p, q);
  std::map<std::vector<int>, Rat> acc;
  for (const auto& [e, c] : p.terms) acc[e] += c;
  for (const auto& [e, c] : q.terms) acc[e] += c;
  return from_map(p.nvars, acc);
}

MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q) {
  require_same_nvars(p, q);
  std::map<std::vector<int>, Rat> acc;
  for (const auto& [e, c] : p.terms) acc[e] += c;
  for (const auto& [e, c] : q.terms) acc[e] -= c;
  return from_map(p.nvars, acc);
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) {
  require_same_nvars(p, q);
  std::map<std::vector<int>, Rat> acc;
  std::vector<int> e(p.nvars);
  for (const auto& [ep, cp] : p.terms) {
    for (const auto& [eq, cq] : q.terms) {
      for (int i = 0; i < p.nvars; ++i) e[i] = ep[i] + eq[i];
      acc[e] += cp * cq;
    }
  }
  return from_map(p.nvars, acc);
}

MultiPoly poly_scale(const MultiPoly& p, const Rat& c) {
  if (c == 0) return MultiPoly::zero(p.nvars);
  MultiPoly out = p;
  for (auto& [e, coef] : out.terms) {
    coef *= c;
    coef.canonicalize();
  }
  return out;
}

MultiPoly poly_shift(const MultiPoly& p, const RatWeight& v) {
  if (static_cast<int>(v.size()) != p.nvars)
    throw std::invalid_argument("shift vector length mismatch");
  MultiPoly cur = p;
  // Shift one variable at a time via binomial expansion.
  for (int var = 0; var < p.nvars; ++var) {
    if (v[var] == 0) continue;
    int maxdeg = 0;
    for (const auto& [e, c] : cur.terms) maxdeg = std::max(maxdeg, e[var]);
    // binom[n][k] * v^(n-k)
    std::vector<Rat> vpow(maxdeg + 1);
    vpow[0] = 1;
    for (int i = 1; i <= maxdeg; ++i) vpow[i] = vpow[i - 1] * v[var];
    std::vector<std::vector<mpz_class>> binom(maxdeg + 1);
    for (int n = 0; n <= maxdeg; ++n) {
      binom[n].assign(n + 1, 1);
      for (int k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
    std::map<std::vector<int>, Rat> acc;
    for (const auto& [e, c] : cur.terms) {
      int n = e[var];
      std::vector<int> f = e;
      for (int k = 0; k <= n; ++k) {
        f[var] = k;
        acc[f] += c * Rat(binom[n][k]) * vpow[n - k];
      }
    }
    cur = from_map(p.nvars, acc);
  }
  return cur;
}

Rat poly_eval(const MultiPoly& p, const RatWeight& point) {
  if (static_cast<int>(point.size()) != p.nvars)
    throw std::invalid_argument("evaluation point length mismatch");
  int maxdeg = 0;
  for (const auto& [e, c] : p.terms)
    for (int x : e) maxdeg = std::max(maxdeg, x);
  std::vector<std::vector<Rat>> pow(p.nvars, std::vector<Rat>(maxdeg + 1));
  for (int i = 0; i < p.nvars; ++i) {
    pow[i][0] = 1;
    for (int k = 1; k <= maxdeg; ++k) pow[i][k] = pow[i][k - 1] * point[i];
  }
  Rat s = 0;
  for (const auto& [e, c] : p.terms) {
    Rat t = c;
    for (int i = 0; i < p.nvars; ++i)
      if (e[i] > 0) t *= pow[i][e[i]];
    s += t;
  }
  s.canonicalize();
  return s;
}

namespace {

std::string rat_str(const Rat& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

std::string monomial_str(const std::vector<int>& e, const std::string& var_prefix,
                         bool latex) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty() && !latex) s += "*";
    if (latex)
      s += "\\lambda_" + std::to_string(i + 1);
    else
      s += var_prefix + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string poly_to_text(const MultiPoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms) {
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = monomial_str(e, "l", false);
    if (mono.empty())
      out += rat_str(a);
    else if (a == 1)
      out += mono;
    else
      out += rat_str(a) + "*" + mono;
  }
  return out;
}

std::string poly_to_latex(const MultiPoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms) {
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string cs;
    if (a.get_den() == 1)
      cs = a.get_num().get_str();
    else
      cs = "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    std::string mono = monomial_str(e, "", true);
    if (mono.empty())
      out += cs;
    else if (a == 1)
      out += mono;
    else
      out += cs + " " + mono;
  }
  return out;
}

std::string poly_to_json(const MultiPoly& p) {
  nlohmann::json j;
  j["vars"] = p.nvars;
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : p.terms)
    j["terms"].push_back({{"exp", e}, {"coef", rat_str(c)}});
  return j.dump();
}

namespace {

// Recursive-descent parser: expr := term (('+'|'-') term)*,
// term := factor ('*' factor)*, factor := primary ('^' int)?,
// primary := rational | 'l'<idx> | '(' expr ')'.
struct Parser {
  int nvars;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  long long integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  MultiPoly primary() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    if (s[pos] == '(') {
      ++pos;
      MultiPoly e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (s[pos] == 'l') {
      ++pos;
      long long idx = integer();
      if (idx < 1 || idx > nvars) fail("variable index out of range");
      return MultiPoly::variable(nvars, static_cast<int>(idx - 1));
    }
    long num = integer();
    if (eat('/')) {
      long den = integer();
      Rat q(num, den);
      q.canonicalize();
      return MultiPoly::constant(nvars, q);
    }
    return MultiPoly::constant(nvars, Rat(num));
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (eat('^')) {
      long long n = integer();
      MultiPoly out = MultiPoly::constant(nvars, 1);
      for (long long i = 0; i < n; ++i) out = poly_mul(out, base);
      return out;
    }
    return base;
  }

  MultiPoly term() {
    MultiPoly out = factor();
    while (eat('*')) out = poly_mul(out, factor());
    return out;
  }

  MultiPoly expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    MultiPoly out = term();
    if (neg) out = poly_scale(out, Rat(-1));
    while (true) {
      skip();
      if (eat('+'))
        out = poly_add(out, term());
      else if (eat('-'))
        out = poly_sub(out, term());
      else
        break;
    }
    return out;
  }
};

}  // namespace

MultiPoly parse_poly(int nvars, const std::string& text) {
  Parser parser{nvars, text};
  MultiPoly p = parser.expr();
  parser.skip();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return p;
}

}  // namespace layerlie
