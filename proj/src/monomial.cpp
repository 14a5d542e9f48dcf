#include "clint/monomial.hpp"

#include <algorithm>

namespace clint {

void add_term(const Field& F, SparsePoly& p, MonoKey k, Elt c) {
  if (c == 0) return;
  auto it = std::lower_bound(p.begin(), p.end(), k,
                             [](const Term& t, MonoKey kk) { return t.key < kk; });
  if (it != p.end() && it->key == k) {
    it->coeff = F.add(it->coeff, c);
    if (it->coeff == 0) p.erase(it);
  } else {
    p.insert(it, Term{k, c});
  }
}

SparsePoly poly_add(const Field& F, const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out = a;
  for (const Term& t : b) add_term(F, out, t.key, t.coeff);
  return out;
}

SparsePoly MonomialArith::mul(const SparsePoly& a, const SparsePoly& b) const {
  SparsePoly out;
  for (const Term& ta : a)
    for (const Term& tb : b)
      mul_mono(ta.key, tb.key, F_->mul(ta.coeff, tb.coeff), out);
  return out;
}

SparsePoly MonomialArith::power(const SparsePoly& a, long long e) const {
  SparsePoly result{Term{one(), 1}};
  SparsePoly base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

SemigroupArith::SemigroupArith(FieldPtr F, SemigroupPtr S, int precision)
    : MonomialArith(std::move(F)), S_(std::move(S)), precision_(precision) {
  if (precision_ < 1) throw ConstructionError("precision must be >= 1");
}

void SemigroupArith::mul_mono(MonoKey a, MonoKey b, Elt c, SparsePoly& out) const {
  MonoKey s = a + b;
  if (s < static_cast<MonoKey>(precision_)) add_term(*F_, out, s, c);
}

std::vector<MonoKey> SemigroupArith::basis() const {
  std::vector<MonoKey> keys;
  for (int s : S_->members_below(precision_)) keys.push_back(s);
  return keys;
}

std::string SemigroupArith::to_string(MonoKey k) const {
  if (k == 0) return "1";
  if (k == 1) return "t";
  return "t^" + std::to_string(k);
}

std::vector<MonoKey> SemigroupArith::generator_keys() const {
  std::vector<MonoKey> keys;
  for (int g : S_->generators())
    if (g < precision_) keys.push_back(g);
  return keys;
}

namespace {
constexpr int kExpBits = 16;
constexpr MonoKey kExpMask = (1u << kExpBits) - 1;
}  // namespace

RewriteArith::RewriteArith(FieldPtr F, std::vector<std::string> vars, Rule rule,
                           std::vector<int> trunc)
    : MonomialArith(std::move(F)),
      vars_(std::move(vars)),
      rule_(std::move(rule)),
      trunc_(std::move(trunc)) {
  if (vars_.size() > 3) throw ConstructionError("at most 3 variables supported");
  if (rule_.lhs.size() != vars_.size() || trunc_.size() != vars_.size())
    throw ConstructionError("rewrite rule shape mismatch");
  for (const auto& [exps, c] : rule_.rhs)
    rhs_.emplace_back(exps, F_->from_int(c));
  bool lhs_nonzero = false;
  for (int e : rule_.lhs) lhs_nonzero = lhs_nonzero || e > 0;
  if (!lhs_nonzero) throw ConstructionError("rewrite rule needs a nontrivial lhs");
}

MonoKey RewriteArith::pack(const std::vector<int>& exps) const {
  MonoKey deg = 0;
  for (int e : exps) deg += e;
  MonoKey k = deg;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    k = (k << kExpBits) | static_cast<MonoKey>(exps[i]);
  }
  return k;
}

std::vector<int> RewriteArith::unpack(MonoKey k) const {
  std::vector<int> exps(vars_.size());
  for (int i = static_cast<int>(vars_.size()) - 1; i >= 0; --i) {
    exps[i] = static_cast<int>(k & kExpMask);
    k >>= kExpBits;
  }
  return exps;
}

bool RewriteArith::truncated(const std::vector<int>& exps) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (trunc_[i] > 0 && exps[i] >= trunc_[i]) return true;
  return false;
}

void RewriteArith::normalize(std::vector<int> exps, Elt c, SparsePoly& out) const {
  if (c == 0) return;
  if (truncated(exps)) return;
  bool divisible = true;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < rule_.lhs[i]) { divisible = false; break; }
  if (!divisible) {
    add_term(*F_, out, pack(exps), c);
    return;
  }
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= rule_.lhs[i];
  for (const auto& [rexps, rc] : rhs_) {
    std::vector<int> e2 = exps;
    for (std::size_t i = 0; i < e2.size(); ++i) e2[i] += rexps[i];
    normalize(std::move(e2), F_->mul(c, rc), out);
  }
}

void RewriteArith::mul_mono(MonoKey a, MonoKey b, Elt c, SparsePoly& out) const {
  std::vector<int> ea = unpack(a), eb = unpack(b);
  for (std::size_t i = 0; i < ea.size(); ++i) ea[i] += eb[i];
  normalize(std::move(ea), c, out);
}

std::vector<MonoKey> RewriteArith::basis() const {
  // exponent grid, bounded per variable by the truncation or by the rewrite
  // rule's lhs exponent, minus the monomials the rule rewrites
  std::vector<int> bound(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (trunc_[i] > 0) bound[i] = trunc_[i];
    else if (rule_.lhs[i] > 0) bound[i] = rule_.lhs[i];
    else throw ConstructionError("variable without truncation or rewrite bound");
  }
  std::vector<MonoKey> keys;
  std::vector<int> exps(vars_.size(), 0);
  while (true) {
    bool divisible = true;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] < rule_.lhs[i]) { divisible = false; break; }
    if (!divisible) keys.push_back(pack(exps));
    // advance odometer
    std::size_t i = 0;
    for (; i < exps.size(); ++i) {
      if (++exps[i] < bound[i]) break;
      exps[i] = 0;
    }
    if (i == exps.size()) break;
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::string RewriteArith::to_string(MonoKey k) const {
  std::vector<int> exps = unpack(k);
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<MonoKey> RewriteArith::generator_keys() const {
  std::vector<MonoKey> keys;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    std::vector<int> e(vars_.size(), 0);
    e[i] = 1;
    keys.push_back(pack(e));
  }
  return keys;
}

}  // namespace clint
