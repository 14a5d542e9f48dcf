#include <algorithm>
#include <map>

#include "clint/closure.hpp"
#include "clint/config.hpp"

namespace clint {

namespace {

// Echelonized sparse row space keyed by monomial; pivot = smallest key.
class SparseEchelon {
 public:
  explicit SparseEchelon(const Field& F) : F_(&F) {}

  SparsePoly reduce(SparsePoly v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.front().key);
      if (it == rows_.end()) break;
      Elt f = v.front().coeff;
      // v -= f * row
      SparsePoly out;
      out.reserve(v.size() + it->second.size());
      auto a = v.begin();
      auto b = it->second.begin();
      while (a != v.end() || b != it->second.end()) {
        if (b == it->second.end() || (a != v.end() && a->key < b->key)) {
          out.push_back(*a++);
        } else if (a == v.end() || b->key < a->key) {
          Elt c = F_->neg(F_->mul(f, b->coeff));
          if (c != 0) out.push_back(Term{b->key, c});
          ++b;
        } else {
          Elt c = F_->sub(a->coeff, F_->mul(f, b->coeff));
          if (c != 0) out.push_back(Term{a->key, c});
          ++a;
          ++b;
        }
      }
      v = std::move(out);
    }
    return v;
  }

  // returns true if v was independent (and got inserted)
  bool insert(SparsePoly v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Elt inv = F_->inv(v.front().coeff);
    for (Term& t : v) t.coeff = F_->mul(t.coeff, inv);
    rows_.emplace(v.front().key, std::move(v));
    return true;
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  const Field* F_;
  std::map<MonoKey, SparsePoly> rows_;
};

// the e-th Frobenius neighborhood: candidates from A, reductions in the
// q-scaled truncation
struct FrobStep {
  Submodule closure_piece;  // {u in A : u^q in I^[q]}
};

FrobStep frobenius_step(const Submodule& I, int e) {
  const auto& M = I.module();
  const auto& A = M->algebra();
  const auto& model = A->stamp().model;
  const Field& F = *A->field();
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= F.p();
    if (q > (1 << 20)) throw ResourceError("Frobenius exponent overflow");
  }

  // working truncation, scaled so the discarded monomials lie in I^[q]
  std::vector<int> trunc;
  if (model->kind() == RingModel::Kind::semigroup) {
    const auto& S = model->semigroup();
    // smallest c with the whole tail from c inside I
    int c = -1;
    for (int cc = 0; cc < A->stamp().precision; ++cc) {
      if (!S->contains(cc)) continue;
      bool tail = true;
      for (int s = cc; s < A->stamp().precision; ++s) {
        if (!S->contains(s)) continue;
        if (!I.contains(A->basis_vec(A->key_index(s)))) { tail = false; break; }
      }
      if (tail) { c = cc; break; }
    }
    if (c < 0) throw CapabilityError("Frobenius closure needs a finite-colength ideal");
    int margin = c + S->conductor() + S->generators().back() + 1;
    long long bound = static_cast<long long>(std::max(A->stamp().precision, margin)) * q;
    if (bound > (1 << 22)) throw ResourceError("Frobenius precision overflow");
    trunc = {static_cast<int>(bound)};
  } else {
    // per truncated variable: smallest pure power inside I
    const auto& vars = model->vars();
    const auto& base = model->base_trunc();
    trunc.assign(vars.size(), 0);
    auto fam = std::dynamic_pointer_cast<const RewriteArith>(A->family());
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (base[v] == 0) continue;  // bounded by the rewrite rule
      int avail = base[v] * A->stamp().precision;
      int a = -1;
      for (int cc = 1; cc < avail; ++cc) {
        std::vector<int> exps(vars.size(), 0);
        exps[v] = cc;
        int idx = A->key_index(fam->pack(exps));
        if (idx >= 0 && I.contains(A->basis_vec(idx))) { a = cc; break; }
      }
      if (a < 0)
        throw CapabilityError("Frobenius closure needs a finite-colength ideal "
                              "(no pure power of " + vars[v] + ")");
      long long bound = static_cast<long long>(a) * q;
      if (bound > (1 << 16) - 1) throw ResourceError("Frobenius precision overflow");
      trunc[v] = static_cast<int>(bound);
    }
  }

  ArithPtr big = model->arith_at(trunc);

  // span of I^[q] in the scaled truncation, closed under multiplication by
  // the algebra generators
  SparseEchelon span(F);
  {
    std::vector<SparsePoly> work;
    for (int r = 0; r < I.basis().rows; ++r) {
      SparsePoly g;
      for (int c = 0; c < A->dim(); ++c)
        if (I.basis().at(r, c) != 0)
          add_term(F, g, A->basis_keys()[c], I.basis().at(r, c));
      SparsePoly gq = big->power(g, q);
      if (span.insert(gq)) work.push_back(std::move(gq));
    }
    std::vector<MonoKey> gens = big->generator_keys();
    while (!work.empty()) {
      SparsePoly v = std::move(work.back());
      work.pop_back();
      for (MonoKey g : gens) {
        SparsePoly w;
        for (const Term& t : v) big->mul_mono(t.key, g, t.coeff, w);
        if (span.insert(w)) work.push_back(std::move(w));
      }
    }
  }

  // residuals of basis-monomial q-th powers
  int n = A->dim();
  std::vector<SparsePoly> residual(n);
  std::map<MonoKey, int> coords;
  for (int c = 0; c < n; ++c) {
    SparsePoly mono{Term{A->basis_keys()[c], 1}};
    residual[c] = span.reduce(big->power(mono, q));
    for (const Term& t : residual[c]) coords.emplace(t.key, 0);
  }
  int rows_n = 0;
  for (auto& [k, idx] : coords) idx = rows_n++;
  Mat K(rows_n, n);
  for (int c = 0; c < n; ++c)
    for (const Term& t : residual[c]) K.at(coords[t.key], c) = t.coeff;

  // semilinear twist: solve K*mu = 0, then u_c = mu_c^{1/q}
  Mat ker = kernel(F, K);
  std::vector<Vec> gens;
  for (int r = 0; r < ker.rows; ++r) {
    Vec u = ker.row(r);
    for (Elt& x : u) x = F.inverse_frobenius_pow(x, e);
    gens.push_back(std::move(u));
  }
  return {Submodule::span(M, gens)};
}

}  // namespace

CloseResult frobenius_close_ideal(const Submodule& I, int e_max) {
  if (e_max <= 0) e_max = config().frobenius_emax;
  const auto& M = I.module();
  if (!M->is_regular())
    throw UsageError("the direct Frobenius route applies to ideals");
  if (I.is_full()) return {I, true, 0};
  Submodule acc = I;
  for (int e = 1; e <= e_max; ++e) {
    Submodule piece = frobenius_step(I, e).closure_piece;
    Submodule next = sub_sum(acc, piece);
    if (next == acc) return {acc, true, e - 1};
    acc = next;
  }
  return {acc, false, e_max};
}

}  // namespace clint
