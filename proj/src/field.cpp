#include "clint/field.hpp"

#include <map>

namespace clint {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int i = 2; i * i <= p; ++i)
    if (p % i == 0) return false;
  return true;
}

// Polynomial arithmetic over F_p on coefficient vectors, little-endian.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) > dm) {
    int lead = a.back();
    if (lead != 0) {
      int shift = static_cast<int>(a.size()) - 1 - dm;
      for (int i = 0; i <= dm; ++i) {
        a[i + shift] = ((a[i + shift] - lead * m[i]) % p + p * p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

// Irreducibility by trial division against all monic polynomials of degree
// <= deg/2. Degrees here are tiny (<= 4).
bool divides(const std::vector<int>& g, std::vector<int> f, int p) {
  int linv = 0;
  for (int i = 1; i < p; ++i)
    if (i * g.back() % p == 1) { linv = i; break; }
  while (f.size() >= g.size()) {
    int lead = f.back();
    if (lead != 0) {
      int shift = static_cast<int>(f.size() - g.size());
      int factor = lead * linv % p;
      for (std::size_t i = 0; i < g.size(); ++i)
        f[i + shift] = ((f[i + shift] - factor * g[i]) % p + p * p) % p;
    }
    f.pop_back();
  }
  for (int c : f)
    if (c != 0) return false;
  return true;
}

bool is_irreducible(const std::vector<int>& f, int p) {
  int d = static_cast<int>(f.size()) - 1;
  for (int dg = 1; dg <= d / 2; ++dg) {
    // all monic polynomials of degree dg
    long long count = 1;
    for (int i = 0; i < dg; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> g(dg + 1, 0);
      long long c = code;
      for (int i = 0; i < dg; ++i) { g[i] = static_cast<int>(c % p); c /= p; }
      g[dg] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<int> find_irreducible(int p, int d) {
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    std::vector<int> f(d + 1, 0);
    long long c = code;
    for (int i = 0; i < d; ++i) { f[i] = static_cast<int>(c % p); c /= p; }
    f[d] = 1;
    if (f[0] == 0) continue;  // reducible: divisible by w
    if (is_irreducible(f, p)) return f;
  }
  throw ConstructionError("no irreducible polynomial found");  // unreachable
}

}  // namespace

Field::Field(int p, int d) : p_(p), d_(d) {
  if (!is_prime(p)) throw ConstructionError("field characteristic must be prime");
  if (d < 1) throw ConstructionError("field extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < d; ++i) {
    q *= p;
    if (q > 256) throw ResourceError("field size cap exceeded (q > 256)");
  }
  q_ = static_cast<int>(q);
  modulus_ = d_ > 1 ? find_irreducible(p_, d_) : std::vector<int>{0, 1};

  auto decode = [&](Elt a) {
    std::vector<int> v(d_, 0);
    int x = a;
    for (int i = 0; i < d_; ++i) { v[i] = x % p_; x /= p_; }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int x = 0;
    for (int i = d_ - 1; i >= 0; --i) x = x * p_ + (i < (int)v.size() ? v[i] : 0);
    return static_cast<Elt>(x);
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);

  for (Elt a = 0; a < q_; ++a) {
    auto va = decode(a);
    std::vector<int> vn(d_);
    for (int i = 0; i < d_; ++i) vn[i] = (p_ - va[i]) % p_;
    neg_[a] = encode(vn);
    for (Elt b = 0; b < q_; ++b) {
      auto vb = decode(b);
      std::vector<int> vs(d_);
      for (int i = 0; i < d_; ++i) vs[i] = (va[i] + vb[i]) % p_;
      add_[idx(a, b)] = encode(vs);
      auto vm = poly_mod(poly_mul(va, vb, p_), modulus_, p_);
      vm.resize(d_, 0);
      mul_[idx(a, b)] = encode(vm);
    }
  }
  for (Elt a = 1; a < q_; ++a) {
    for (Elt b = 1; b < q_; ++b) {
      if (mul_[idx(a, b)] == 1) { inv_[a] = b; break; }
    }
    if (inv_[a] == 0) throw ConstructionError("field arithmetic inconsistent");
  }
  for (Elt a = 0; a < q_; ++a) {
    Elt r = a;
    for (int i = 1; i < p_; ++i) r = mul_[idx(r, a)];
    frob_[a] = r;  // a^p
  }
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw UsageError("division by zero in field");
  return inv_[a];
}

Elt Field::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

Elt Field::frobenius_pow(Elt a, int e) const {
  Elt r = a;
  for (int i = 0; i < e % d_; ++i) r = frob_[r];
  return r;
}

Elt Field::inverse_frobenius_pow(Elt a, int e) const {
  // Frobenius has order d on F_{p^d}.
  int steps = ((d_ - e % d_) % d_ + d_) % d_;
  Elt r = a;
  for (int i = 0; i < steps; ++i) r = frob_[r];
  return r;
}

Elt Field::pow(Elt a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elt r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string Field::to_string(Elt a) const {
  if (d_ == 1 || a < static_cast<Elt>(p_)) return std::to_string(a);
  std::string s;
  int x = a;
  for (int i = 0; i < d_; ++i) {
    int c = x % p_;
    x /= p_;
    if (c == 0) continue;
    std::string term;
    if (i == 0) term = std::to_string(c);
    else {
      if (c != 1) term = std::to_string(c) + "*";
      term += "w";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!s.empty()) s = term + "+" + s;
    else s = term;
  }
  return s.empty() ? "0" : s;
}

FieldPtr make_field(int p, int d) { return std::make_shared<Field>(p, d); }

}  // namespace clint
