#ifndef CLINT_CLOSURE_HPP
#define CLINT_CLOSURE_HPP

#include <memory>
#include <optional>
#include <string>

#include "clint/algebra.hpp"
#include "clint/model.hpp"

namespace clint {

enum class Provenance { asserted_by_theory, verified_by_sampling };

struct ClosureTraits {
  std::string name;
  bool residual = false;
  bool functorial = false;
  bool finitistic = false;
  Provenance flag_provenance = Provenance::verified_by_sampling;
  // defined on arbitrary pairs N <= M, or only on ideals of the regular module
  bool all_pairs = false;
  // participates in the closure-axiom registry (the socle-capture strategy
  // is a scoped evaluation rule, not a closure operation, and is excluded)
  bool axiom_clean = true;
};

struct CloseResult {
  Submodule value;
  bool stabilized = true;   // Frobenius e-chain observed a fixed point
  int stabilized_at = 0;    // smallest e with S_e = S_{e+1}
};

class ClosureOp {
 public:
  virtual ~ClosureOp() = default;
  const ClosureTraits& traits() const { return traits_; }

  Submodule close(const Submodule& N, const ModulePtr& M) const;
  virtual CloseResult close_ex(const Submodule& N, const ModulePtr& M) const = 0;

 protected:
  void check_pair(const Submodule& N, const ModulePtr& M) const;
  ClosureTraits traits_;
};

using ClosurePtr = std::shared_ptr<const ClosureOp>;

ClosurePtr identity_closure();
// cl_B for a module (or algebra, when unit is given) over a fixed algebra
ClosurePtr module_closure(ModulePtr B, std::string name,
                          std::optional<Vec> algebra_unit = std::nullopt);
// liftable integral closure through the model's normalization branches
ClosurePtr integral_closure();
// Frobenius closure with the e-chain policy
ClosurePtr frobenius_closure(int e_max = 0 /* 0: configured default */);
// tight closure strategies
ClosurePtr tight_closure_dim1();
// socle-capture at the caller-supplied test ideal; evaluation rule scoped to
// the ideals where it is known to compute the tight closure
ClosurePtr tight_closure_socle(Submodule tau);
// deliberately broken operator (N -> N intersect m*M) for rejection tests
ClosurePtr broken_closure();

// the normalization of the model restricted to this truncation, as a module
// with a distinguished unit (an algebra over A)
struct NormalizationModule {
  ModulePtr V;
  Vec unit;
};
NormalizationModule normalization_module(const AlgebraPtr& A);

// R^{1/p^e} as a finite module over the truncation (semigroup kind)
struct RootModule {
  ModulePtr M;
  // q-th root of an algebra element (coefficientwise inverse Frobenius)
  Vec root_of(const Vec& a) const;
  const AlgebraPtr& A() const { return A_; }
  AlgebraPtr A_;
  int e = 1;
  std::vector<int> exponents;  // numerators s with t^{s/q} in the basis
};
RootModule root_module(const AlgebraPtr& A, int e);

// direct semilinear Frobenius closure of an ideal of the regular module
CloseResult frobenius_close_ideal(const Submodule& I, int e_max);

// Evaluate a ring-level closure truncation-faithfully: at the ideal's own
// precision and at doubled precision, accepting on agreement (escalating
// once). Returns the result at the original precision.
CloseResult close_faithful(const ClosurePtr& cl, const Submodule& I);

// parse "identity", "integral", "frobenius[e_max=2]", "tight[dim1]",
// "tight[socle,tau=(...)]", "module[B=...]" in the context of an algebra
ClosurePtr parse_closure(const AlgebraPtr& A, const std::string& spec);

}  // namespace clint

#endif
