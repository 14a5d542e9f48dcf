#ifndef CLINT_MONOMIAL_HPP
#define CLINT_MONOMIAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "clint/field.hpp"
#include "clint/semigroup.hpp"

namespace clint {

// Packed monomial key. Keys compare in degree-then-lex order by unsigned
// comparison, so sorting keys sorts monomials canonically.
using MonoKey = std::uint64_t;

struct Term {
  MonoKey key;
  Elt coeff;
};

// Sorted-by-key, zero-free linear combination of monomials.
using SparsePoly = std::vector<Term>;

void add_term(const Field& F, SparsePoly& p, MonoKey k, Elt c);
SparsePoly poly_add(const Field& F, const SparsePoly& a, const SparsePoly& b);

// Exact monomial arithmetic for one ring family at one truncation level.
// Products are expanded to normal form; monomials outside the truncation
// vanish. This backs both desk-scale algebra construction and the
// high-precision sparse computations (Frobenius powers).
class MonomialArith {
 public:
  virtual ~MonomialArith() = default;

  virtual MonoKey one() const = 0;
  // accumulate c * (a*b) in normal form into out
  virtual void mul_mono(MonoKey a, MonoKey b, Elt c, SparsePoly& out) const = 0;
  // all basis monomials of the truncation, ascending key order
  virtual std::vector<MonoKey> basis() const = 0;
  virtual std::string to_string(MonoKey k) const = 0;
  // the variable monomials generating the algebra ("t^2","t^3" / "x","y","z")
  virtual std::vector<MonoKey> generator_keys() const = 0;

  const Field& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }

  SparsePoly mul(const SparsePoly& a, const SparsePoly& b) const;
  SparsePoly power(const SparsePoly& a, long long e) const;

 protected:
  explicit MonomialArith(FieldPtr F) : F_(std::move(F)) {}
  FieldPtr F_;
};

using ArithPtr = std::shared_ptr<const MonomialArith>;

// k[[t^S]] truncated below t^N: basis {t^s : s in S, s < N}.
class SemigroupArith : public MonomialArith {
 public:
  SemigroupArith(FieldPtr F, SemigroupPtr S, int precision);

  MonoKey one() const override { return 0; }
  void mul_mono(MonoKey a, MonoKey b, Elt c, SparsePoly& out) const override;
  std::vector<MonoKey> basis() const override;
  std::string to_string(MonoKey k) const override;
  std::vector<MonoKey> generator_keys() const override;

  int precision() const { return precision_; }
  const SemigroupPtr& semigroup() const { return S_; }

 private:
  SemigroupPtr S_;
  int precision_;
};

// A power-series quotient presented by one rewrite rule lhs -> rhs (with
// every variable of rhs otherwise free) and pure-power truncation exponents
// per variable; 0 means the variable is controlled by the rewrite rule
// alone. Covers x^3 -> -(y^3+z^3) with (y^N, z^N), and x*y -> 0 with
// (x^N, y^N).
class RewriteArith : public MonomialArith {
 public:
  struct Rule {
    std::vector<int> lhs;         // exponent vector of the lhs monomial
    std::vector<std::pair<std::vector<int>, int>> rhs;  // integer coeffs
  };

  RewriteArith(FieldPtr F, std::vector<std::string> vars, Rule rule,
               std::vector<int> trunc);

  MonoKey one() const override { return pack(std::vector<int>(vars_.size(), 0)); }
  void mul_mono(MonoKey a, MonoKey b, Elt c, SparsePoly& out) const override;
  std::vector<MonoKey> basis() const override;
  std::string to_string(MonoKey k) const override;
  std::vector<MonoKey> generator_keys() const override;

  MonoKey pack(const std::vector<int>& exps) const;
  std::vector<int> unpack(MonoKey k) const;
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& trunc() const { return trunc_; }
  const Rule& rule() const { return rule_; }

 private:
  void normalize(std::vector<int> exps, Elt c, SparsePoly& out) const;
  bool truncated(const std::vector<int>& exps) const;

  std::vector<std::string> vars_;
  Rule rule_;
  std::vector<int> trunc_;  // per-variable bound, 0 = none
  std::vector<std::pair<std::vector<int>, Elt>> rhs_;  // rule rhs in the field
};

}  // namespace clint

#endif
