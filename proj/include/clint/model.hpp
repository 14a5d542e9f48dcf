#ifndef CLINT_MODEL_HPP
#define CLINT_MODEL_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "clint/algebra.hpp"
#include "clint/monomial.hpp"
#include "clint/semigroup.hpp"

namespace clint {

// A compatible family of truncations {A_N} of a fixed complete local ring,
// with cached construction and the metadata the closure strategies consult.
class RingModel : public std::enable_shared_from_this<RingModel> {
 public:
  enum class Kind { semigroup, rewrite };

  static ModelPtr semigroup_ring(FieldPtr F, SemigroupPtr S);
  // one rewrite rule plus pure-power truncations; base_trunc holds the
  // truncation exponents at precision 1 (scaled linearly with N), 0 for
  // variables governed by the rewrite rule
  static ModelPtr rewrite_quotient(FieldPtr F, std::vector<std::string> vars,
                                   RewriteArith::Rule rule,
                                   std::vector<int> base_trunc,
                                   std::string name);

  Kind kind() const { return kind_; }
  const FieldPtr& field() const { return F_; }
  const std::string& name() const { return name_; }

  bool gorenstein() const { return gorenstein_; }
  int krull_dimension() const { return dimension_; }
  // Theorem-backed metadata: tight interior equals its Artinistic version
  // (graded origin or isolated singularity). Set per family, never inferred.
  bool interior_equals_artinistic() const { return interior_equals_artinistic_; }
  const std::string& interior_metadata_citation() const { return citation_; }

  // dimension-one models carry branch maps onto DVR truncations
  bool has_normalization() const { return !branches_.empty(); }

  AlgebraPtr truncation(int N) const;  // cached; same N gives the same algebra
  // the canonical surjection A_{N'} ->> A_N, N' >= N
  Mat surjection(const AlgebraPtr& from, const AlgebraPtr& to) const;

  // precision large enough that ideal computations with generator
  // exponents/degrees <= max_exponent are truncation-faithful
  int precision_for(int max_exponent) const;
  int default_precision() const;

  // semigroup data (semigroup kind)
  const SemigroupPtr& semigroup() const { return S_; }
  // canonical-module exponents for the non-Gorenstein sequence recipe
  const std::optional<std::vector<int>>& omega_exponents() const { return omega_; }

  // rewrite data
  const std::vector<std::string>& vars() const { return vars_; }
  const RewriteArith::Rule& rule() const { return rule_; }
  const std::vector<int>& base_trunc() const { return base_trunc_; }
  // generator expressions of the ideals J_t = (g_1^t, ..., g_k^t)
  const std::vector<std::string>& parameter_exprs() const { return params_; }

  // branch b sends basis monomial `key` to t^e in k[t]/(t^N), or nowhere
  // (returns -1). Branches jointly realize the normalization map.
  int branch_order(int branch, MonoKey key) const;
  int branch_count() const { return static_cast<int>(branches_.size()); }

  // same family over F_{p^{2d}} (field-extension stability policy)
  ModelPtr extended_field() const;

  // monomial arithmetic at explicit truncation exponents (used by the
  // Frobenius engine); for semigroup kind trunc = {N}
  ArithPtr arith_at(const std::vector<int>& trunc) const;

 private:
  RingModel() = default;

  Kind kind_;
  FieldPtr F_;
  std::string name_;
  bool gorenstein_ = false;
  int dimension_ = 1;
  bool interior_equals_artinistic_ = false;
  std::string citation_;

  SemigroupPtr S_;
  std::optional<std::vector<int>> omega_;

  std::vector<std::string> vars_;
  RewriteArith::Rule rule_;
  std::vector<int> base_trunc_;
  std::vector<std::string> params_;

  // per branch, per variable: image t-exponent, or -1 to kill the variable;
  // semigroup kind uses a single identity branch handled in code
  std::vector<std::vector<int>> branches_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, AlgebraPtr> cache_;
};

}  // namespace clint

#endif
