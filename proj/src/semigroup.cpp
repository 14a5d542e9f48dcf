#include "clint/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "clint/field.hpp"

namespace clint {

NumericalSemigroup::NumericalSemigroup(std::vector<int> generators) {
  if (generators.empty())
    throw ConstructionError("semigroup needs at least one generator");
  for (int g : generators)
    if (g <= 0) throw ConstructionError("semigroup generators must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  int g = 0;
  for (int x : generators) g = std::gcd(g, x);
  if (g != 1) throw ConstructionError("gcd of semigroup generators must be 1");

  // membership via the numerical-semigroup coin sieve
  int maxg = generators.back();
  // ab - a - b bounds the Frobenius number for the two smallest coprime
  // members; the sieve bound below is always sufficient.
  int bound = generators.front() * maxg + maxg + 1;
  std::vector<bool> mem(bound + 1, false);
  mem[0] = true;
  for (int n = 1; n <= bound; ++n)
    for (int gen : generators)
      if (n - gen >= 0 && mem[n - gen]) { mem[n] = true; break; }

  frobenius_ = -1;
  for (int n = bound; n >= 1; --n)
    if (!mem[n]) { frobenius_ = n; break; }

  int keep = frobenius_ + maxg + 1;
  mem.resize(keep + 1);
  table_ = std::move(mem);

  // drop redundant generators (expressible from the others)
  std::vector<int> minimal;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (j != i) rest.push_back(generators[j]);
    bool redundant = false;
    if (!rest.empty()) {
      int gg = 0;
      for (int x : rest) gg = std::gcd(gg, x);
      if (gg == 1) {
        NumericalSemigroup sub(rest);
        redundant = sub.contains(generators[i]);
      } else {
        // still may be reachable from rest alone
        std::vector<bool> reach(generators[i] + 1, false);
        reach[0] = true;
        for (int n = 1; n <= generators[i]; ++n)
          for (int r : rest)
            if (n - r >= 0 && reach[n - r]) { reach[n] = true; break; }
        redundant = reach[generators[i]];
      }
    }
    if (!redundant) minimal.push_back(generators[i]);
  }
  gens_ = std::move(minimal);
}

bool NumericalSemigroup::contains(int n) const {
  if (n < 0) throw UsageError("semigroup membership query with negative input");
  if (n >= static_cast<int>(table_.size())) return true;
  return table_[n];
}

std::vector<int> NumericalSemigroup::members_below(int bound) const {
  std::vector<int> out;
  for (int n = 0; n < bound; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  for (int n = 1; n <= frobenius_; ++n)
    if (!contains(n)) out.push_back(n);
  return out;
}

bool NumericalSemigroup::symmetric() const {
  if (frobenius_ < 0) return true;  // S = N, regular
  for (int x = 0; x <= frobenius_; ++x)
    if (contains(x) == contains(frobenius_ - x)) return false;
  return true;
}

std::string NumericalSemigroup::to_string() const {
  std::string s = "S<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(gens_[i]);
  }
  return s + ">";
}

SemigroupIdeal::SemigroupIdeal(SemigroupPtr S, std::vector<int> exps)
    : S_(std::move(S)) {
  if (exps.empty()) throw ConstructionError("semigroup ideal needs generators");
  for (int e : exps) {
    if (e < 0) throw ConstructionError("ideal exponents must be nonnegative");
    if (!S_->contains(e))
      throw ConstructionError("ideal exponent " + std::to_string(e) +
                              " is not in the semigroup");
  }
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  // irredundant: no generator is another generator plus a semigroup element
  std::vector<int> keep;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    bool red = false;
    for (std::size_t j = 0; j < i && !red; ++j)
      if (S_->contains(exps[i] - exps[j])) red = true;
    if (!red) keep.push_back(exps[i]);
  }
  gens_ = std::move(keep);
}

bool SemigroupIdeal::contains(int n) const {
  for (int g : gens_)
    if (n >= g && S_->contains(n - g)) return true;
  return false;
}

std::string SemigroupIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(gens_[i]);
  }
  return s + ")";
}

SemigroupIdeal ideal_colon(const SemigroupIdeal& I, const SemigroupIdeal& J) {
  if (!(*I.semigroup() == *J.semigroup()))
    throw UsageError("ideal colon across different semigroups");
  const auto& S = *I.semigroup();
  // {s in S : s + elements(J) subseteq elements(I)}; it suffices to test
  // s + g for generators g of J. Every exponent above the bound works.
  int bound = I.min_exponent() + S.conductor() + 1;
  std::vector<int> found;
  for (int s = 0; s <= bound + S.generators().back(); ++s) {
    if (!S.contains(s)) continue;
    bool ok = true;
    for (int g : J.generators())
      if (!I.contains(s + g)) { ok = false; break; }
    if (ok) found.push_back(s);
  }
  if (found.empty())
    throw ConstructionError("empty colon; increase bound");  // cannot happen
  return SemigroupIdeal(I.semigroup(), found);
}

SemigroupIdeal ideal_sum(const SemigroupIdeal& I, const SemigroupIdeal& J) {
  if (!(*I.semigroup() == *J.semigroup()))
    throw UsageError("ideal sum across different semigroups");
  std::vector<int> exps = I.generators();
  exps.insert(exps.end(), J.generators().begin(), J.generators().end());
  return SemigroupIdeal(I.semigroup(), exps);
}

SemigroupIdeal monomial_integral_closure(const SemigroupIdeal& I) {
  const auto& S = *I.semigroup();
  int m = I.min_exponent();
  std::vector<int> exps;
  for (int s = m; s <= m + S.conductor() + S.generators().back(); ++s)
    if (S.contains(s)) exps.push_back(s);
  return SemigroupIdeal(I.semigroup(), exps);
}

}  // namespace clint
