#include "clint/model.hpp"

#include <algorithm>

namespace clint {

ModelPtr RingModel::semigroup_ring(FieldPtr F, SemigroupPtr S) {
  auto m = std::shared_ptr<RingModel>(new RingModel());
  m->kind_ = Kind::semigroup;
  m->F_ = std::move(F);
  m->S_ = std::move(S);
  m->name_ = m->S_->to_string();
  m->gorenstein_ = m->S_->symmetric();
  m->dimension_ = 1;
  // numerical semigroup rings are isolated singularities
  m->interior_equals_artinistic_ = true;
  m->citation_ = "isolated singularity (dimension-one domain)";
  m->branches_.push_back({});  // identity branch, exponent = key
  if (!m->gorenstein_) {
    // canonical fractional ideal: generated by {F - g : g gap of S}
    std::vector<int> omega;
    for (int g : m->S_->gaps()) omega.push_back(m->S_->frobenius_number() - g);
    std::sort(omega.begin(), omega.end());
    omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
    m->omega_ = omega;
  }
  return m;
}

ModelPtr RingModel::rewrite_quotient(FieldPtr F, std::vector<std::string> vars,
                                     RewriteArith::Rule rule,
                                     std::vector<int> base_trunc,
                                     std::string name) {
  auto m = std::shared_ptr<RingModel>(new RingModel());
  m->kind_ = Kind::rewrite;
  m->F_ = std::move(F);
  m->vars_ = std::move(vars);
  m->rule_ = std::move(rule);
  m->base_trunc_ = std::move(base_trunc);
  m->name_ = std::move(name);

  // the two supported families
  bool rhs_zero = m->rule_.rhs.empty();
  int lhs_support = 0, lhs_total = 0;
  for (int e : m->rule_.lhs) {
    if (e > 0) ++lhs_support;
    lhs_total += e;
  }
  if (rhs_zero && lhs_support == 2 && lhs_total == 2 && m->vars_.size() == 2) {
    // k[[x,y]]/(xy): one-dimensional, Gorenstein (hypersurface), graded,
    // two branches x->t and y->t
    m->gorenstein_ = true;
    m->dimension_ = 1;
    m->interior_equals_artinistic_ = true;
    m->citation_ = "extended from a graded ideal";
    m->branches_.push_back({1, -1});
    m->branches_.push_back({-1, 1});
    m->params_ = {m->vars_[0] + "+" + m->vars_[1]};
  } else if (lhs_support == 1) {
    // hypersurface x^d -> lower-order terms; Gorenstein, dimension = #vars-1
    m->gorenstein_ = true;
    m->dimension_ = static_cast<int>(m->vars_.size()) - 1;
    m->interior_equals_artinistic_ = true;
    m->citation_ = "isolated singularity";
    for (std::size_t i = 0; i < m->vars_.size(); ++i)
      if (m->rule_.lhs[i] == 0) m->params_.push_back(m->vars_[i]);
  } else {
    throw CapabilityError("unsupported rewrite-quotient family");
  }
  return m;
}

AlgebraPtr RingModel::truncation(int N) const {
  if (N < 1) throw UsageError("precision must be >= 1");
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(N);
    if (it != cache_.end()) return it->second;
  }
  ArithPtr arith;
  if (kind_ == Kind::semigroup) {
    arith = std::make_shared<SemigroupArith>(F_, S_, N);
  } else {
    std::vector<int> trunc = base_trunc_;
    for (int& t : trunc)
      if (t > 0) t *= N;
    arith = std::make_shared<RewriteArith>(F_, vars_, rule_, trunc);
  }
  ModelStamp stamp{shared_from_this(), N};
  AlgebraPtr A = FiniteLocalAlgebra::from_family(arith, stamp);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, _] = cache_.emplace(N, std::move(A));
  return it->second;
}

Mat RingModel::surjection(const AlgebraPtr& from, const AlgebraPtr& to) const {
  Mat M(to->dim(), from->dim());
  for (int c = 0; c < from->dim(); ++c) {
    int idx = to->key_index(from->basis_keys()[c]);
    if (idx >= 0) M.at(idx, c) = 1;
  }
  return M;
}

int RingModel::precision_for(int max_exponent) const {
  if (kind_ == Kind::semigroup)
    return max_exponent + S_->conductor() + S_->generators().back() + 1;
  int base = *std::max_element(base_trunc_.begin(), base_trunc_.end());
  return max_exponent + base + 1;
}

int RingModel::default_precision() const {
  if (kind_ == Kind::semigroup) return precision_for(2 * S_->generators().back());
  return *std::max_element(base_trunc_.begin(), base_trunc_.end()) + 3;
}

int RingModel::branch_order(int branch, MonoKey key) const {
  if (kind_ == Kind::semigroup) return static_cast<int>(key);
  const auto& assign = branches_.at(branch);
  // unpack without an arith object: same packing as RewriteArith
  constexpr int kExpBits = 16;
  constexpr MonoKey kMask = (1u << kExpBits) - 1;
  int nv = static_cast<int>(vars_.size());
  int order = 0;
  for (int i = nv - 1; i >= 0; --i) {
    int e = static_cast<int>(key & kMask);
    key >>= kExpBits;
    if (e == 0) continue;
    if (assign[i] < 0) return -1;
    order += assign[i] * e;
  }
  return order;
}

ModelPtr RingModel::extended_field() const {
  FieldPtr F2 = make_field(F_->p(), 2 * F_->degree());
  if (kind_ == Kind::semigroup) return semigroup_ring(F2, S_);
  return rewrite_quotient(F2, vars_, rule_, base_trunc_, name_);
}

ArithPtr RingModel::arith_at(const std::vector<int>& trunc) const {
  if (kind_ == Kind::semigroup) {
    if (trunc.size() != 1) throw UsageError("semigroup arith takes one bound");
    return std::make_shared<SemigroupArith>(F_, S_, trunc[0]);
  }
  return std::make_shared<RewriteArith>(F_, vars_, rule_, trunc);
}

}  // namespace clint
