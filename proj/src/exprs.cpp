#include "clint/exprs.hpp"

#include <cctype>

#include "clint/model.hpp"

namespace clint {

namespace {

struct Lexer {
  const std::string& s;
  int pos = 0;
  int line;

  explicit Lexer(const std::string& text, int line) : s(text), line(line) {}

  void skip_ws() {
    while (pos < (int)s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < (int)s.size() ? s[pos] : '\0';
  }
  char get() {
    char c = peek();
    if (pos < (int)s.size()) ++pos;
    return c;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, pos + 1);
  }
};

// expression evaluation over the family's sparse polynomials; for
// mult-table algebras a degenerate one-variable view is not available,
// so expressions there are limited to integers and named basis labels.
struct Evaluator {
  const AlgebraPtr& A;
  Lexer& lx;
  const Field& F;

  Evaluator(const AlgebraPtr& A, Lexer& lx)
      : A(A), lx(lx), F(*A->field()) {}

  SparsePoly constant(Elt c) {
    SparsePoly p;
    if (c != 0) p.push_back(Term{A->family()->one(), c});
    return p;
  }

  SparsePoly parse_sum() {
    SparsePoly acc;
    bool neg = false;
    if (lx.peek() == '-') { lx.get(); neg = true; }
    else if (lx.peek() == '+') lx.get();
    acc = parse_product();
    if (neg) acc = scale(acc, F.neg(1));
    while (true) {
      char c = lx.peek();
      if (c != '+' && c != '-') break;
      lx.get();
      SparsePoly rhs = parse_product();
      if (c == '-') rhs = scale(rhs, F.neg(1));
      acc = poly_add(F, acc, rhs);
    }
    return acc;
  }

  SparsePoly parse_product() {
    SparsePoly acc = parse_power();
    while (lx.peek() == '*') {
      lx.get();
      acc = A->family()->mul(acc, parse_power());
    }
    return acc;
  }

  SparsePoly parse_power() {
    SparsePoly base = parse_atom();
    if (lx.peek() == '^') {
      lx.get();
      long long e = parse_int();
      if (e < 0) lx.fail("negative exponent");
      return A->family()->power(base, e);
    }
    return base;
  }

  long long parse_int() {
    lx.skip_ws();
    bool neg = false;
    if (lx.peek() == '-') { lx.get(); neg = true; }
    if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
      lx.fail("expected an integer");
    long long v = 0;
    while (lx.pos < (int)lx.s.size() &&
           std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
      v = v * 10 + (lx.s[lx.pos] - '0');
      ++lx.pos;
      if (v > 1'000'000'000LL) lx.fail("integer literal too large");
    }
    return neg ? -v : v;
  }

  SparsePoly parse_atom() {
    char c = lx.peek();
    if (c == '(') {
      lx.get();
      SparsePoly inner = parse_sum();
      if (lx.peek() != ')') lx.fail("expected ')'");
      lx.get();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = parse_int();
      return constant(F.from_int(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (lx.pos < (int)lx.s.size() &&
             (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) ||
              lx.s[lx.pos] == '_'))
        name += lx.s[lx.pos++];
      return variable(name);
    }
    lx.fail("unexpected character in expression");
  }

  SparsePoly variable(const std::string& name) {
    const auto& fam = A->family();
    if (auto sg = std::dynamic_pointer_cast<const SemigroupArith>(fam)) {
      if (name != "t") lx.fail("unknown variable '" + name + "' (expected t)");
      // formal t; exponent keys outside the semigroup are caught on
      // conversion to an algebra element
      return SparsePoly{Term{1, 1}};
    }
    if (auto rw = std::dynamic_pointer_cast<const RewriteArith>(fam)) {
      const auto& vars = rw->vars();
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == name) {
          std::vector<int> exps(vars.size(), 0);
          exps[i] = 1;
          return SparsePoly{Term{rw->pack(exps), 1}};
        }
      }
      lx.fail("unknown variable '" + name + "'");
    }
    lx.fail("expressions need a monomial-family algebra");
  }

  SparsePoly scale(SparsePoly p, Elt c) {
    for (Term& t : p) t.coeff = F.mul(t.coeff, c);
    return p;
  }
};

Vec to_element(const AlgebraPtr& A, const SparsePoly& p, Lexer& lx) {
  Vec v(A->dim(), 0);
  for (const Term& t : p) {
    int idx = A->key_index(t.key);
    if (idx < 0) {
      // semigroup formal exponents above the precision simply truncate
      if (auto sg = std::dynamic_pointer_cast<const SemigroupArith>(A->family())) {
        if (t.key >= static_cast<MonoKey>(sg->precision())) continue;
        lx.fail("monomial t^" + std::to_string(t.key) + " is not in the ring");
      }
      lx.fail("monomial outside the truncation basis");
    }
    v[idx] = t.coeff;
  }
  return v;
}

}  // namespace

Vec parse_element(const AlgebraPtr& A, const std::string& text, int line) {
  if (!A->family())
    throw UsageError("generator expressions need a monomial-family algebra");
  Lexer lx(text, line);
  Evaluator ev(A, lx);
  SparsePoly p = ev.parse_sum();
  if (lx.peek() != '\0') lx.fail("trailing input after expression");
  return to_element(A, p, lx);
}

std::vector<Vec> parse_generator_list(const AlgebraPtr& A, const std::string& text,
                                      int line) {
  std::string inner = text;
  // strip one optional outer paren pair that wraps the whole list
  {
    int i = 0, n = static_cast<int>(text.size());
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    int j = n - 1;
    while (j >= 0 && std::isspace(static_cast<unsigned char>(text[j]))) --j;
    if (i <= j && text[i] == '(' && text[j] == ')') {
      int depth = 0;
      bool wraps = true;
      for (int k = i; k <= j; ++k) {
        if (text[k] == '(') ++depth;
        if (text[k] == ')') { --depth; if (depth == 0 && k != j) { wraps = false; break; } }
      }
      if (wraps) inner = text.substr(i + 1, j - i - 1);
    }
  }
  if (inner == "R" || inner == "1") {
    return {A->unit()};
  }
  std::vector<Vec> gens;
  std::string cur;
  int depth = 0;
  auto flush = [&]() {
    if (cur.find_first_not_of(" \t") == std::string::npos)
      throw ParseError("empty generator in list", line, 1);
    gens.push_back(parse_element(A, cur, line));
    cur.clear();
  };
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) { flush(); continue; }
    cur += c;
  }
  flush();
  return gens;
}

Submodule parse_ideal(const AlgebraPtr& A, const std::string& text, int line) {
  return ideal_from_elements(A, parse_generator_list(A, text, line));
}

std::string ideal_to_string(const Submodule& I) {
  if (I.is_full()) return "R";
  return I.to_string();
}

}  // namespace clint
