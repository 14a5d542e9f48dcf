#include "clint/closure.hpp"

#include <algorithm>

#include "clint/config.hpp"
#include "clint/exprs.hpp"

namespace clint {

Submodule ClosureOp::close(const Submodule& N, const ModulePtr& M) const {
  return close_ex(N, M).value;
}

void ClosureOp::check_pair(const Submodule& N, const ModulePtr& M) const {
  if (N.module() != M) throw UsageError("submodule does not live in the ambient");
  if (!traits_.all_pairs && !M->is_regular())
    throw CapabilityError(traits_.name + " is defined on ideals only");
}

namespace {

class IdentityClosure final : public ClosureOp {
 public:
  IdentityClosure() {
    traits_.name = "identity";
    traits_.residual = true;
    traits_.functorial = true;
    traits_.finitistic = true;
    traits_.flag_provenance = Provenance::asserted_by_theory;
    traits_.all_pairs = true;
  }
  CloseResult close_ex(const Submodule& N, const ModulePtr& M) const override {
    check_pair(N, M);
    return {N, true, 0};
  }
};

// cl_B: N^cl = {u : image of u in (M/N) (x) B is 0}, materialized tensor.
// For algebra closures only u (x) 1 is tested; for plain module closures
// the condition runs over every basis element of B.
class ModuleClosure final : public ClosureOp {
 public:
  ModuleClosure(ModulePtr B, std::string name, std::optional<Vec> unit)
      : B_(std::move(B)), unit_(std::move(unit)) {
    traits_.name = std::move(name);
    traits_.residual = true;
    traits_.functorial = true;
    traits_.finitistic = true;
    traits_.flag_provenance = Provenance::asserted_by_theory;
    traits_.all_pairs = true;
  }

  CloseResult close_ex(const Submodule& N, const ModulePtr& M) const override {
    check_pair(N, M);
    if (M->algebra() != B_->algebra())
      throw UsageError("module closure across algebras");
    const auto& A = M->algebra();
    const Field& F = *A->field();
    QuotientData qd = quotient_module(M, N);
    int q = qd.quotient->dim();
    if (q == 0) return {Submodule::full(M), true, 0};
    int s = B_->dim();
    long long ts = static_cast<long long>(q) * s;
    if (ts > config().max_tensor)
      throw ResourceError("tensor dimension " + std::to_string(ts) +
                          " exceeds cap");
    int w = static_cast<int>(ts);
    // relation span of Q (x)_A B inside Q (x)_k B
    EchelonBasis rel(F, w);
    for (int g : A->generator_indices()) {
      for (int i = 0; i < q; ++i) {
        Vec qe(q, 0);
        qe[i] = 1;
        Vec aq = qd.quotient->act_basis(g, qe);
        for (int j = 0; j < s; ++j) {
          Vec be(s, 0);
          be[j] = 1;
          Vec ab = B_->act_basis(g, be);
          Vec v(w, 0);
          for (int r = 0; r < q; ++r)
            if (aq[r] != 0) v[r * s + j] = aq[r];
          for (int r = 0; r < s; ++r)
            if (ab[r] != 0) v[i * s + r] = F.sub(v[i * s + r], ab[r]);
          rel.insert(std::move(v));
        }
      }
    }
    // test vectors: u (x) b for b = unit (algebra closure) or all basis b
    std::vector<Vec> tensors;
    if (unit_) tensors.push_back(*unit_);
    else
      for (int j = 0; j < s; ++j) {
        Vec be(s, 0);
        be[j] = 1;
        tensors.push_back(std::move(be));
      }
    Mat sys(static_cast<int>(tensors.size()) * w, M->dim());
    for (int c = 0; c < M->dim(); ++c) {
      Vec e(M->dim(), 0);
      e[c] = 1;
      Vec pu = apply(F, qd.proj, e);
      for (std::size_t tv = 0; tv < tensors.size(); ++tv) {
        Vec v(w, 0);
        for (int r = 0; r < q; ++r) {
          if (pu[r] == 0) continue;
          for (int j = 0; j < s; ++j)
            if (tensors[tv][j] != 0)
              v[r * s + j] = F.add(v[r * s + j], F.mul(pu[r], tensors[tv][j]));
        }
        v = rel.reduce(std::move(v));
        for (int r = 0; r < w; ++r)
          sys.at(static_cast<int>(tv) * w + r, c) = v[r];
      }
    }
    Mat K = kernel(F, sys);
    std::vector<Vec> gens;
    for (int r = 0; r < K.rows; ++r) gens.push_back(K.row(r));
    for (int r = 0; r < N.basis().rows; ++r) gens.push_back(N.basis().row(r));
    return {Submodule::span(M, gens), true, 0};
  }

 private:
  ModulePtr B_;
  std::optional<Vec> unit_;
};

const RingModel& model_of(const ModulePtr& M) {
  const auto& stamp = M->algebra()->stamp();
  if (!stamp.model)
    throw CapabilityError("operation needs a ring-model-backed algebra");
  return *stamp.model;
}

// liftable integral closure via the normalization: branch conditions for
// ideals, tensor closure with V for general pairs
class IntegralClosure final : public ClosureOp {
 public:
  IntegralClosure() {
    traits_.name = "integral";
    traits_.residual = true;
    traits_.functorial = true;
    traits_.finitistic = true;
    traits_.flag_provenance = Provenance::asserted_by_theory;
    traits_.all_pairs = true;
  }

  CloseResult close_ex(const Submodule& N, const ModulePtr& M) const override {
    check_pair(N, M);
    const RingModel& model = model_of(M);
    if (!model.has_normalization())
      throw CapabilityError("integral closure needs a dimension-one model "
                            "with normalization data");
    if (M->is_regular()) return {close_ideal(N, M, model), true, 0};
    NormalizationModule V = normalization_module(M->algebra());
    ModuleClosure clv(V.V, "integral", V.unit);
    return clv.close_ex(N, M);
  }

 private:
  Submodule close_ideal(const Submodule& I, const ModulePtr& M,
                        const RingModel& model) const {
    const auto& A = M->algebra();
    const Field& F = *A->field();
    int n = A->dim();
    // branch images: I * V_b = t^mu_b * V_b inside k[t]/(t^db)
    std::vector<Mat> branch_maps;
    std::vector<int> branch_dim;
    for (int b = 0; b < model.branch_count(); ++b) {
      int db = 0;
      for (int c = 0; c < n; ++c)
        db = std::max(db, model.branch_order(b, A->basis_keys()[c]) + 1);
      Mat Bm(db, n);
      for (int c = 0; c < n; ++c) {
        int e = model.branch_order(b, A->basis_keys()[c]);
        if (e >= 0) Bm.at(e, c) = 1;
      }
      branch_maps.push_back(std::move(Bm));
      branch_dim.push_back(db);
    }
    std::vector<Vec> rows;
    for (int b = 0; b < model.branch_count(); ++b) {
      int mu = branch_dim[b];  // order of the branch image ideal
      for (int r = 0; r < I.basis().rows; ++r) {
        Vec img = apply(F, branch_maps[b], I.basis().row(r));
        for (int e = 0; e < branch_dim[b]; ++e)
          if (img[e] != 0) { mu = std::min(mu, e); break; }
      }
      // condition: branch coordinates below mu vanish
      for (int e = 0; e < mu; ++e) rows.push_back(branch_maps[b].row(e));
    }
    if (rows.empty()) return Submodule::full(M);
    Mat sys(static_cast<int>(rows.size()), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
      sys.set_row(static_cast<int>(r), rows[r]);
    Mat K = kernel(F, sys);
    std::vector<Vec> gens;
    for (int r = 0; r < K.rows; ++r) gens.push_back(K.row(r));
    return Submodule::span(M, gens);
  }
};

class FrobeniusClosure final : public ClosureOp {
 public:
  explicit FrobeniusClosure(int e_max)
      : e_max_(e_max > 0 ? e_max : config().frobenius_emax) {
    traits_.name = "frobenius[e_max=" + std::to_string(e_max_) + "]";
    traits_.residual = true;
    traits_.functorial = true;
    traits_.finitistic = true;
    traits_.flag_provenance = Provenance::asserted_by_theory;
    traits_.all_pairs = true;
  }

  CloseResult close_ex(const Submodule& N, const ModulePtr& M) const override {
    check_pair(N, M);
    const RingModel& model = model_of(M);
    if (model.field()->p() <= 0)
      throw CapabilityError("Frobenius closure needs positive characteristic");
    if (M->is_regular()) return frobenius_close_ideal(N, e_max_);
    // module pairs: union of the module closures cl_{R^{1/p^e}}
    if (model.kind() != RingModel::Kind::semigroup)
      throw CapabilityError(
          "Frobenius closure on module pairs is supported for semigroup "
          "models only");
    Submodule acc = N;
    bool stabilized = false;
    int stab_at = 0;
    for (int e = 1; e <= e_max_; ++e) {
      RootModule root = root_module(M->algebra(), e);
      ModuleClosure cl(root.M, "frobenius-step", root.root_of(M->algebra()->unit()));
      Submodule next = cl.close(N, M);
      next = sub_sum(next, acc);
      if (e > 1 && next == acc) {
        stabilized = true;
        stab_at = e - 1;
        acc = next;
        break;
      }
      acc = next;
    }
    return {acc, stabilized, stab_at};
  }

 private:
  int e_max_;
};

class TightDim1 final : public ClosureOp {
 public:
  TightDim1() {
    traits_.name = "tight[dim1]";
    traits_.residual = true;
    traits_.functorial = true;
    traits_.finitistic = true;
    // Briancon-Skoda in dimension one plus the minimal-prime decomposition
    // identify tight and liftable integral closure on these models
    traits_.flag_provenance = Provenance::asserted_by_theory;
    traits_.all_pairs = true;
  }
  CloseResult close_ex(const Submodule& N, const ModulePtr& M) const override {
    check_pair(N, M);
    const RingModel& model = model_of(M);
    if (model.krull_dimension() != 1 || !model.has_normalization())
      throw CapabilityError("tight[dim1] needs a dimension-one model with "
                            "normalization data");
    return IntegralClosure().close_ex(N, M);
  }
};

// I -> I + ((I : m) intersect (I : tau)). A closure evaluation rule on the
// ideals where I* = I : m is known (parameter-type ideals with test ideal
// tau); not an axiom-clean closure operation.
class TightSocle final : public ClosureOp {
 public:
  explicit TightSocle(Submodule tau) : tau_(std::move(tau)) {
    traits_.name = "tight[socle]";
    traits_.residual = true;
    traits_.functorial = false;
    traits_.flag_provenance = Provenance::asserted_by_theory;
    traits_.all_pairs = false;
    traits_.axiom_clean = false;
  }
  CloseResult close_ex(const Submodule& N, const ModulePtr& M) const override {
    check_pair(N, M);
    if (N.is_full()) return {N, true, 0};
    Submodule soc_part = module_colon(N, maximal_ideal(M->algebra()));
    Submodule tau_part = module_colon(N, tau_);
    return {sub_sum(N, sub_intersect(soc_part, tau_part)), true, 0};
  }

 private:
  Submodule tau_;
};

class BrokenClosure final : public ClosureOp {
 public:
  BrokenClosure() {
    traits_.name = "broken[intersect-m]";
    traits_.all_pairs = true;
    traits_.axiom_clean = false;
  }
  CloseResult close_ex(const Submodule& N, const ModulePtr& M) const override {
    check_pair(N, M);
    std::vector<Vec> gens;
    for (int i = 1; i < M->algebra()->dim(); ++i)
      for (int c = 0; c < M->dim(); ++c) {
        Vec e(M->dim(), 0);
        e[c] = 1;
        gens.push_back(M->act_basis(i, e));
      }
    return {sub_intersect(N, Submodule::span(M, gens)), true, 0};
  }
};

}  // namespace

ClosurePtr identity_closure() { return std::make_shared<IdentityClosure>(); }

ClosurePtr module_closure(ModulePtr B, std::string name,
                          std::optional<Vec> algebra_unit) {
  return std::make_shared<ModuleClosure>(std::move(B), std::move(name),
                                         std::move(algebra_unit));
}

ClosurePtr integral_closure() { return std::make_shared<IntegralClosure>(); }

ClosurePtr frobenius_closure(int e_max) {
  return std::make_shared<FrobeniusClosure>(e_max);
}

ClosurePtr tight_closure_dim1() { return std::make_shared<TightDim1>(); }

ClosurePtr tight_closure_socle(Submodule tau) {
  return std::make_shared<TightSocle>(std::move(tau));
}

ClosurePtr broken_closure() { return std::make_shared<BrokenClosure>(); }

NormalizationModule normalization_module(const AlgebraPtr& A) {
  const auto& stamp = A->stamp();
  if (!stamp.model || !stamp.model->has_normalization())
    throw CapabilityError("no normalization data for this algebra");
  const RingModel& model = *stamp.model;
  const Field& F = *A->field();
  int n = A->dim();
  // per branch: k[t]/(t^db), db = one past the largest reachable order
  std::vector<int> dims;
  int total = 0;
  for (int b = 0; b < model.branch_count(); ++b) {
    int db = 1;
    for (int c = 0; c < n; ++c)
      db = std::max(db, model.branch_order(b, A->basis_keys()[c]) + 1);
    dims.push_back(db);
    total += db;
  }
  check_dense_size(n, total, "normalization module");
  std::vector<Mat> act(n);
  for (int i = 0; i < n; ++i) {
    Mat ai(total, total);
    int off = 0;
    for (int b = 0; b < model.branch_count(); ++b) {
      int sh = model.branch_order(b, A->basis_keys()[i]);
      if (sh >= 0)
        for (int e = 0; e + sh < dims[b]; ++e) ai.at(off + e + sh, off + e) = 1;
      off += dims[b];
    }
    act[i] = std::move(ai);
  }
  NormalizationModule out;
  out.V = FiniteModule::with_action(A, std::move(act), "V");
  out.unit = Vec(total, 0);
  int off = 0;
  for (int b = 0; b < model.branch_count(); ++b) {
    out.unit[off] = F.one();
    off += dims[b];
  }
  return out;
}

RootModule root_module(const AlgebraPtr& A, int e) {
  const auto& stamp = A->stamp();
  if (!stamp.model || stamp.model->kind() != RingModel::Kind::semigroup)
    throw CapabilityError("R^{1/p^e} is materialized for semigroup models");
  const RingModel& model = *stamp.model;
  const auto& S = model.semigroup();
  const Field& F = *A->field();
  long long q = 1;
  for (int i = 0; i < e; ++i) q *= F.p();
  int N = stamp.precision;
  // basis {t^{s/q} : s in S, s < N*q}
  std::vector<int> exps;
  for (int s : S->members_below(static_cast<int>(N * q))) exps.push_back(s);
  int m = static_cast<int>(exps.size());
  check_dense_size(A->dim(), m, "root module");
  auto index_of = [&](long long s) {
    auto it = std::lower_bound(exps.begin(), exps.end(), static_cast<int>(s));
    if (it == exps.end() || *it != s) return -1;
    return static_cast<int>(it - exps.begin());
  };
  std::vector<Mat> act(A->dim());
  for (int i = 0; i < A->dim(); ++i) {
    Mat ai(m, m);
    long long shift = static_cast<long long>(A->basis_keys()[i]) * q;
    for (int c = 0; c < m; ++c) {
      int r = index_of(exps[c] + shift);
      if (r >= 0) ai.at(r, c) = 1;
    }
    act[i] = std::move(ai);
  }
  RootModule out;
  out.A_ = A;
  out.e = e;
  out.exponents = exps;
  out.M = FiniteModule::with_action(A, std::move(act),
                                    "R^{1/" + std::to_string(q) + "}");
  return out;
}

Vec RootModule::root_of(const Vec& a) const {
  const Field& F = *A_->field();
  Vec out(exponents.size(), 0);
  for (int i = 0; i < A_->dim(); ++i) {
    if (a[i] == 0) continue;
    long long s = static_cast<long long>(A_->basis_keys()[i]);
    auto it = std::lower_bound(exponents.begin(), exponents.end(),
                               static_cast<int>(s));
    if (it == exponents.end() || *it != s)
      throw UsageError("element has no q-th root in the root module");
    out[it - exponents.begin()] = F.inverse_frobenius_pow(a[i], e);
  }
  return out;
}

CloseResult close_faithful(const ClosurePtr& cl, const Submodule& I) {
  const auto& M = I.module();
  if (!M->is_regular())
    throw UsageError("faithful evaluation applies to ring-level ideals");
  const auto& A = M->algebra();
  const auto& stamp = A->stamp();
  if (!stamp.model) throw CapabilityError("faithful evaluation needs a model");
  const auto& model = stamp.model;

  auto eval_at = [&](int N) {
    AlgebraPtr AN = model->truncation(N);
    auto RN = FiniteModule::regular(AN);
    std::vector<Vec> gens;
    for (const Vec& g : minimal_generators(I)) {
      // lift by monomial support
      Vec lifted(AN->dim(), 0);
      for (int c = 0; c < A->dim(); ++c) {
        if (g[c] == 0) continue;
        int idx = AN->key_index(A->basis_keys()[c]);
        if (idx < 0) throw ResourceError("generator support exceeds precision");
        lifted[idx] = g[c];
      }
      gens.push_back(std::move(lifted));
    }
    CloseResult res = cl->close_ex(Submodule::span(RN, gens), RN);
    Mat down = model->surjection(AN, A);
    return std::pair{map_submodule(res.value, down, M), res};
  };

  int N0 = stamp.precision;
  CloseResult base = cl->close_ex(I, M);
  auto [chk1, r1] = eval_at(2 * N0);
  if (chk1 == base.value) return base;
  auto [chk2, r2] = eval_at(4 * N0);
  if (chk2 == chk1) {
    base.value = chk1;
    base.stabilized = r1.stabilized;
    base.stabilized_at = r1.stabilized_at;
    return base;
  }
  throw ResourceError("closure value did not stabilize under precision "
                      "doubling; increase the precision");
}

ClosurePtr parse_closure(const AlgebraPtr& A, const std::string& spec) {
  auto starts = [&](const char* p) { return spec.rfind(p, 0) == 0; };
  if (spec == "identity") return identity_closure();
  if (spec == "integral") return integral_closure();
  if (spec == "frobenius") return frobenius_closure();
  if (starts("frobenius[")) {
    auto eq = spec.find("e_max=");
    if (eq == std::string::npos || spec.back() != ']')
      throw UsageError("malformed frobenius spec: " + spec);
    int e = std::stoi(spec.substr(eq + 6));
    return frobenius_closure(e);
  }
  if (spec == "tight[dim1]") return tight_closure_dim1();
  if (starts("tight[socle")) {
    auto eq = spec.find("tau=");
    if (eq == std::string::npos || spec.back() != ']')
      throw UsageError("malformed tight[socle] spec: " + spec);
    std::string expr = spec.substr(eq + 4, spec.size() - eq - 5);
    Submodule tau = expr == "m" ? maximal_ideal(A) : parse_ideal(A, expr);
    return tight_closure_socle(std::move(tau));
  }
  if (starts("module[B=")) {
    if (spec.back() != ']') throw UsageError("malformed module spec: " + spec);
    std::string bspec = spec.substr(9, spec.size() - 10);
    auto R = FiniteModule::regular(A);
    if (bspec == "R")
      return module_closure(R, "module[B=R]", A->unit());
    if (bspec == "k") {
      QuotientData qd = quotient_module(R, maximal_ideal(A));
      return module_closure(qd.quotient, "module[B=k]",
                            apply(*A->field(), qd.proj, A->unit()));
    }
    if (bspec == "omega") {
      const auto& stamp = A->stamp();
      if (!stamp.model || stamp.model->kind() != RingModel::Kind::semigroup ||
          !stamp.model->omega_exponents())
        throw CapabilityError("module[B=omega] needs a non-Gorenstein "
                              "semigroup model");
      const auto& S = stamp.model->semigroup();
      const auto& frac = *stamp.model->omega_exponents();
      int shift = 0;
      while (true) {
        bool ok = true;
        for (int g : frac)
          if (!S->contains(g + shift)) { ok = false; break; }
        if (ok) break;
        ++shift;
      }
      std::vector<Vec> gens;
      for (int g : frac) {
        int idx = A->key_index(g + shift);
        if (idx < 0) throw ResourceError("omega generators exceed precision");
        gens.push_back(A->basis_vec(idx));
      }
      Submodule omega = Submodule::span(R, gens);
      return module_closure(restrict_module(omega).sub, "module[B=omega]");
    }
    if (bspec.rfind("R/", 0) == 0) {
      Submodule J = parse_ideal(A, bspec.substr(2));
      QuotientData qd = quotient_module(R, J);
      return module_closure(qd.quotient, "module[B=" + bspec + "]",
                            apply(*A->field(), qd.proj, A->unit()));
    }
    Submodule B = parse_ideal(A, bspec);
    return module_closure(restrict_module(B).sub, "module[B=" + bspec + "]");
  }
  throw UsageError("unknown closure: " + spec);
}

}  // namespace clint
