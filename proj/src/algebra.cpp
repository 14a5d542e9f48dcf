#include "clint/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "clint/config.hpp"

namespace clint {

namespace {

// deterministic triple sampling when the exhaustive check would be too big
std::vector<std::array<int, 3>> check_triples(int n, long long cap) {
  std::vector<std::array<int, 3>> out;
  long long total = static_cast<long long>(n) * n * n;
  if (total <= cap) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out.push_back({i, j, k});
    return out;
  }
  long long stride = total / cap + 1;
  for (long long idx = 0; idx < total; idx += stride) {
    int i = static_cast<int>(idx / (static_cast<long long>(n) * n));
    int j = static_cast<int>((idx / n) % n);
    int k = static_cast<int>(idx % n);
    out.push_back({i, j, k});
  }
  return out;
}

}  // namespace

AlgebraPtr FiniteLocalAlgebra::from_family(ArithPtr fam, ModelStamp stamp) {
  auto A = std::shared_ptr<FiniteLocalAlgebra>(new FiniteLocalAlgebra());
  A->F_ = fam->field_ptr();
  A->family_ = fam;
  A->keys_ = fam->basis();
  A->dim_ = static_cast<int>(A->keys_.size());
  if (A->dim_ < 1 || A->keys_[0] != fam->one())
    throw ConstructionError("family basis must start with the unit monomial");
  for (MonoKey k : A->keys_) A->labels_.push_back(fam->to_string(k));
  for (MonoKey g : fam->generator_keys()) {
    int idx = A->key_index(g);
    if (idx > 0) A->gens_.push_back(idx);
  }
  A->stamp_ = std::move(stamp);
  A->verify(true);
  return A;
}

AlgebraPtr FiniteLocalAlgebra::from_mult_table(FieldPtr F,
                                               std::vector<std::string> labels,
                                               std::vector<Mat> mult_ops,
                                               ModelStamp stamp) {
  auto A = std::shared_ptr<FiniteLocalAlgebra>(new FiniteLocalAlgebra());
  A->F_ = std::move(F);
  A->dim_ = static_cast<int>(labels.size());
  A->labels_ = std::move(labels);
  A->mult_ops_ = std::move(mult_ops);
  A->stamp_ = std::move(stamp);
  if (static_cast<int>(A->mult_ops_.size()) != A->dim_)
    throw ConstructionError("one multiplication matrix per basis element required");
  // generators: lift a basis of m/m^2
  {
    const Field& Fq = *A->F_;
    // m = span(e_1..e_{n-1}); m^2 = span of products
    EchelonBasis msq(Fq, A->dim_);
    for (int i = 1; i < A->dim_; ++i)
      for (int j = 1; j < A->dim_; ++j) {
        Vec ej(A->dim_, 0);
        ej[j] = 1;
        msq.insert(apply(Fq, A->mult_ops_[i], ej));
      }
    EchelonBasis cover(Fq, A->dim_);
    for (const Vec& r : msq.rows()) cover.insert(r);
    for (int i = 1; i < A->dim_; ++i) {
      Vec ei(A->dim_, 0);
      ei[i] = 1;
      if (cover.insert(ei)) A->gens_.push_back(i);
    }
  }
  A->verify(false);
  return A;
}

int FiniteLocalAlgebra::key_index(MonoKey k) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return -1;
  return static_cast<int>(it - keys_.begin());
}

void FiniteLocalAlgebra::mul_basis(int i, int j,
                                   std::vector<std::pair<int, Elt>>& out) const {
  out.clear();
  if (family_) {
    SparsePoly p;
    family_->mul_mono(keys_[i], keys_[j], 1, p);
    for (const Term& t : p) {
      int idx = key_index(t.key);
      if (idx < 0)
        throw ConstructionError("product monomial missing from basis");
      out.emplace_back(idx, t.coeff);
    }
  } else {
    const Mat& Mi = mult_ops_[i];
    for (int r = 0; r < dim_; ++r) {
      Elt c = Mi.at(r, j);
      if (c != 0) out.emplace_back(r, c);
    }
  }
}

Vec FiniteLocalAlgebra::mul(const Vec& u, const Vec& v) const {
  Vec out(dim_, 0);
  std::vector<std::pair<int, Elt>> prod;
  for (int i = 0; i < dim_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[j] == 0) continue;
      Elt c = F_->mul(u[i], v[j]);
      mul_basis(i, j, prod);
      for (auto& [k, ck] : prod) out[k] = F_->add(out[k], F_->mul(c, ck));
    }
  }
  return out;
}

Vec FiniteLocalAlgebra::power(const Vec& u, long long e) const {
  Vec result = unit();
  Vec base = u;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Vec FiniteLocalAlgebra::unit() const { return basis_vec(0); }

Vec FiniteLocalAlgebra::basis_vec(int i) const {
  Vec v(dim_, 0);
  v[i] = 1;
  return v;
}

std::string FiniteLocalAlgebra::vec_to_string(const Vec& v) const {
  std::string s;
  for (int i = 0; i < dim_; ++i) {
    if (v[i] == 0) continue;
    std::string coeff = F_->to_string(v[i]);
    std::string term;
    if (labels_[i] == "1") {
      term = coeff.find('+') != std::string::npos ? "(" + coeff + ")" : coeff;
    } else {
      if (v[i] == 1) term = labels_[i];
      else if (coeff.find('+') != std::string::npos ||
               coeff.find('w') != std::string::npos)
        term = "(" + coeff + ")*" + labels_[i];
      else
        term = coeff + "*" + labels_[i];
    }
    if (!s.empty()) s += "+";
    s += term;
  }
  return s.empty() ? "0" : s;
}

void FiniteLocalAlgebra::verify(bool) {
  const Field& F = *F_;
  std::vector<std::pair<int, Elt>> prod;

  // unitality
  for (int j = 0; j < dim_; ++j) {
    mul_basis(0, j, prod);
    if (prod.size() != 1 || prod[0].first != j || prod[0].second != 1)
      throw ConstructionError("basis element 0 is not a unit");
  }

  // commutativity on basis pairs
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      std::vector<std::pair<int, Elt>> a, b;
      mul_basis(i, j, a);
      mul_basis(j, i, b);
      if (a != b)
        throw ConstructionError("multiplication is not commutative at (" +
                                labels_[i] + "," + labels_[j] + ")");
    }

  // associativity on basis triples (exhaustive up to the configured cap,
  // deterministic stride sample beyond)
  auto triples = check_triples(dim_, config().assoc_triple_cap);
  for (auto [i, j, k] : triples) {
    Vec ej = basis_vec(j), ek = basis_vec(k), ei = basis_vec(i);
    Vec left = mul(mul(ei, ej), ek);
    Vec right = mul(ei, mul(ej, ek));
    if (left != right)
      throw ConstructionError("multiplication is not associative at (" +
                              labels_[i] + "," + labels_[j] + "," + labels_[k] +
                              ")");
  }

  // locality: m = span(e_1..e_{n-1}) must be nilpotent
  {
    EchelonBasis cur(F, dim_);
    for (int i = 1; i < dim_; ++i) cur.insert(basis_vec(i));
    nilpotency_ = 0;
    int prev_dim = cur.dim();
    for (int step = 1; step <= dim_ + 1; ++step) {
      // next = m * cur = m^(step+1)
      EchelonBasis next(F, dim_);
      for (const Vec& r : cur.rows())
        for (int g = 1; g < dim_; ++g) next.insert(mul(basis_vec(g), r));
      if (next.dim() == 0) { nilpotency_ = step + 1; break; }
      if (next.dim() >= prev_dim)
        throw ConstructionError("maximal ideal is not nilpotent; algebra not local");
      prev_dim = next.dim();
      cur = next;
    }
    // dim 1: m = 0, nilpotency index 1
    if (dim_ == 1) nilpotency_ = 1;
    if (nilpotency_ == 0)
      throw ConstructionError("maximal ideal is not nilpotent; algebra not local");
  }

  if (gens_.empty() && dim_ > 1)
    throw ConstructionError("no maximal-ideal generators recorded");
}

ModulePtr FiniteModule::regular(AlgebraPtr A) {
  if (A->regular_cache_) return A->regular_cache_;
  auto M = std::shared_ptr<FiniteModule>(new FiniteModule());
  M->A_ = A;
  M->dim_ = M->A_->dim();
  M->regular_ = true;
  M->name_ = "R";
  A->regular_cache_ = M;
  return M;
}

ModulePtr FiniteModule::with_action(AlgebraPtr A, std::vector<Mat> act,
                                    std::string name) {
  auto M = std::shared_ptr<FiniteModule>(new FiniteModule());
  M->A_ = std::move(A);
  M->act_ = std::move(act);
  M->name_ = std::move(name);
  const auto& A_ = M->A_;
  if (static_cast<int>(M->act_.size()) != A_->dim())
    throw ConstructionError("one action matrix per algebra basis element required");
  M->dim_ = M->act_.empty() ? 0 : M->act_[0].rows;
  const Field& F = *A_->field();
  for (const Mat& m : M->act_)
    if (m.rows != M->dim_ || m.cols != M->dim_)
      throw ConstructionError("action matrices must be square of equal size");
  if (M->act_[0] != identity(M->dim_))
    throw ConstructionError("unit must act as the identity");
  // ring homomorphism on basis pairs: act(e_i) act(e_j) = act(e_i e_j)
  std::vector<std::pair<int, Elt>> prod;
  for (int i = 0; i < A_->dim(); ++i)
    for (int j = i; j < A_->dim(); ++j) {
      Mat lhs = matmul(F, M->act_[i], M->act_[j]);
      Mat rhs(M->dim_, M->dim_);
      A_->mul_basis(i, j, prod);
      for (auto& [k, c] : prod)
        for (int r = 0; r < M->dim_; ++r)
          for (int s = 0; s < M->dim_; ++s)
            rhs.at(r, s) = F.add(rhs.at(r, s), F.mul(c, M->act_[k].at(r, s)));
      if (lhs != rhs)
        throw ConstructionError("action is not a ring homomorphism at (" +
                                A_->labels()[i] + "," + A_->labels()[j] + ")");
    }
  return M;
}

Vec FiniteModule::act_basis(int i, const Vec& v) const {
  if (regular_) {
    Vec out(dim_, 0);
    const Field& F = *A_->field();
    std::vector<std::pair<int, Elt>> prod;
    for (int j = 0; j < dim_; ++j) {
      if (v[j] == 0) continue;
      A_->mul_basis(i, j, prod);
      for (auto& [k, c] : prod) out[k] = F.add(out[k], F.mul(v[j], c));
    }
    return out;
  }
  return apply(*A_->field(), act_[i], v);
}

Vec FiniteModule::act_elem(const Vec& a, const Vec& v) const {
  if (regular_) return A_->mul(a, v);
  const Field& F = *A_->field();
  Vec out(dim_, 0);
  for (int i = 0; i < A_->dim(); ++i) {
    if (a[i] == 0) continue;
    Vec part = apply(F, act_[i], v);
    for (int r = 0; r < dim_; ++r)
      out[r] = F.add(out[r], F.mul(a[i], part[r]));
  }
  return out;
}

const Mat& FiniteModule::action_matrix(int i) const {
  if (regular_)
    throw UsageError("regular modules do not materialize action matrices");
  return act_[i];
}

std::string FiniteModule::vec_to_string(const Vec& v) const {
  if (regular_) return A_->vec_to_string(v);
  std::string s;
  const Field& F = *A_->field();
  for (int i = 0; i < dim_; ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "+";
    std::string c = F.to_string(v[i]);
    s += (v[i] == 1 ? "" : c + "*") + ("e" + std::to_string(i));
  }
  return s.empty() ? "0" : s;
}

Submodule Submodule::span(ModulePtr M, const std::vector<Vec>& gens) {
  const Field& F = *M->algebra()->field();
  EchelonBasis eb(F, M->dim());
  std::vector<Vec> work;
  for (const Vec& g : gens)
    if (eb.insert(g)) work.push_back(g);
  const auto& gidx = M->algebra()->generator_indices();
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    for (int gi : gidx) {
      Vec w = M->act_basis(gi, v);
      if (eb.insert(w)) work.push_back(std::move(w));
    }
  }
  Submodule S;
  S.M_ = std::move(M);
  S.basis_ = eb.normal_form();
  return S;
}

Submodule Submodule::zero(ModulePtr M) {
  Submodule S;
  S.basis_ = Mat(0, M->dim());
  S.M_ = std::move(M);
  return S;
}

Submodule Submodule::full(ModulePtr M) {
  Submodule S;
  S.basis_ = identity(M->dim());
  S.M_ = std::move(M);
  return S;
}

Submodule Submodule::from_rref(ModulePtr M, Mat rref_rows) {
  Submodule S;
  S.M_ = std::move(M);
  S.basis_ = std::move(rref_rows);
  return S;
}

bool Submodule::contains(const Vec& v) const {
  const Field& F = *M_->algebra()->field();
  EchelonBasis eb(F, M_->dim());
  for (int r = 0; r < basis_.rows; ++r) eb.insert(basis_.row(r));
  return eb.contains(v);
}

bool Submodule::contains(const Submodule& other) const {
  if (M_ != other.M_) throw UsageError("containment across different modules");
  const Field& F = *M_->algebra()->field();
  EchelonBasis eb(F, M_->dim());
  for (int r = 0; r < basis_.rows; ++r) eb.insert(basis_.row(r));
  for (int r = 0; r < other.basis_.rows; ++r)
    if (!eb.contains(other.basis_.row(r))) return false;
  return true;
}

bool Submodule::operator==(const Submodule& o) const {
  return M_ == o.M_ && basis_ == o.basis_;
}

bool Submodule::less(const Submodule& a, const Submodule& b) {
  if (a.basis_.rows != b.basis_.rows) return a.basis_.rows < b.basis_.rows;
  return a.basis_.a < b.basis_.a;
}

std::string Submodule::to_string() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  std::vector<Vec> gens = minimal_generators(*this);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += M_->vec_to_string(gens[i]);
  }
  return s + ")";
}

Submodule sub_sum(const Submodule& a, const Submodule& b) {
  if (a.module() != b.module()) throw UsageError("sum across different modules");
  const Field& F = *a.module()->algebra()->field();
  EchelonBasis eb(F, a.module()->dim());
  for (int r = 0; r < a.basis().rows; ++r) eb.insert(a.basis().row(r));
  for (int r = 0; r < b.basis().rows; ++r) eb.insert(b.basis().row(r));
  return Submodule::from_rref(a.module(), eb.normal_form());
}

Submodule sub_intersect(const Submodule& a, const Submodule& b) {
  if (a.module() != b.module())
    throw UsageError("intersection across different modules");
  const Field& F = *a.module()->algebra()->field();
  int n = a.module()->dim();
  // Zassenhaus: rows [A|A], [B|0]; echelon; rows with zero left block carry
  // the intersection in the right block.
  Mat Z(a.basis().rows + b.basis().rows, 2 * n);
  for (int r = 0; r < a.basis().rows; ++r)
    for (int c = 0; c < n; ++c) {
      Z.at(r, c) = a.basis().at(r, c);
      Z.at(r, c + n) = a.basis().at(r, c);
    }
  for (int r = 0; r < b.basis().rows; ++r)
    for (int c = 0; c < n; ++c)
      Z.at(r + a.basis().rows, c) = b.basis().at(r, c);
  rref(F, Z);
  EchelonBasis eb(F, n);
  for (int r = 0; r < Z.rows; ++r) {
    bool left_zero = true;
    for (int c = 0; c < n; ++c)
      if (Z.at(r, c) != 0) { left_zero = false; break; }
    if (!left_zero) continue;
    Vec v(n);
    for (int c = 0; c < n; ++c) v[c] = Z.at(r, c + n);
    eb.insert(std::move(v));
  }
  return Submodule::from_rref(a.module(), eb.normal_form());
}

Submodule ideal_product(const Submodule& I, const Submodule& J) {
  if (I.module() != J.module() || !I.module()->is_regular())
    throw UsageError("ideal product needs two ideals of the same algebra");
  const auto& A = I.module()->algebra();
  const Field& F = *A->field();
  EchelonBasis eb(F, A->dim());
  for (int r = 0; r < I.basis().rows; ++r)
    for (int s = 0; s < J.basis().rows; ++s)
      eb.insert(A->mul(I.basis().row(r), J.basis().row(s)));
  return Submodule::from_rref(I.module(), eb.normal_form());
}

namespace {

// rows of the quotient projection M ->> M/L in the coordinates given by
// reducing mod L and reading non-pivot entries
struct ProjInfo {
  Mat proj;               // codim x n
  std::vector<int> nonpivots;
};

ProjInfo projection_info(const Field& F, const Mat& Lrref, int n) {
  std::vector<bool> is_pivot(n, false);
  EchelonBasis eb(F, n);
  for (int r = 0; r < Lrref.rows; ++r) eb.insert(Lrref.row(r));
  for (int p : eb.pivots()) is_pivot[p] = true;
  ProjInfo out;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) out.nonpivots.push_back(c);
  int q = static_cast<int>(out.nonpivots.size());
  out.proj = Mat(q, n);
  for (int c = 0; c < n; ++c) {
    Vec e(n, 0);
    e[c] = 1;
    Vec red = eb.reduce(std::move(e));
    for (int r = 0; r < q; ++r) out.proj.at(r, c) = red[out.nonpivots[r]];
  }
  return out;
}

}  // namespace

Submodule transporter(const Submodule& I, const Submodule& J) {
  if (I.module() != J.module())
    throw UsageError("transporter across different modules");
  const auto& M = I.module();
  const auto& A = M->algebra();
  const Field& F = *A->field();
  int n = A->dim(), m = M->dim();
  ProjInfo pi = projection_info(F, I.basis(), m);
  int codim = pi.proj.rows;
  if (codim == 0) return Submodule::full(FiniteModule::regular(A));
  // rows: for each generator g of J and each quotient coordinate, the map
  // a |-> proj(a*g)
  Mat sys(static_cast<int>(J.basis().rows) * codim, n);
  for (int gr = 0; gr < J.basis().rows; ++gr) {
    Vec g = J.basis().row(gr);
    for (int i = 0; i < n; ++i) {
      Vec col = apply(F, pi.proj, M->act_basis(i, g));
      for (int r = 0; r < codim; ++r) sys.at(gr * codim + r, i) = col[r];
    }
  }
  Mat K = kernel(F, sys);
  std::vector<Vec> gens;
  for (int r = 0; r < K.rows; ++r) gens.push_back(K.row(r));
  return Submodule::span(FiniteModule::regular(A), gens);
}

Submodule module_colon(const Submodule& I, const Submodule& J_ideal) {
  const auto& M = I.module();
  const auto& A = M->algebra();
  if (!J_ideal.module()->is_regular() || J_ideal.module()->algebra() != A)
    throw UsageError("module colon needs an ideal of the acting algebra");
  const Field& F = *A->field();
  int m = M->dim();
  ProjInfo pi = projection_info(F, I.basis(), m);
  int codim = pi.proj.rows;
  if (codim == 0) return Submodule::full(M);
  Mat sys(J_ideal.basis().rows * codim, m);
  for (int ar = 0; ar < J_ideal.basis().rows; ++ar) {
    Vec a = J_ideal.basis().row(ar);
    for (int c = 0; c < m; ++c) {
      Vec e(m, 0);
      e[c] = 1;
      Vec col = apply(F, pi.proj, M->act_elem(a, e));
      for (int r = 0; r < codim; ++r) sys.at(ar * codim + r, c) = col[r];
    }
  }
  Mat K = kernel(F, sys);
  std::vector<Vec> gens;
  for (int r = 0; r < K.rows; ++r) gens.push_back(K.row(r));
  return Submodule::span(M, gens);
}

Submodule annihilator(const ModulePtr& M) {
  return transporter(Submodule::zero(M), Submodule::full(M));
}

Submodule socle(const ModulePtr& M) {
  const auto& A = M->algebra();
  return module_colon(Submodule::zero(M), maximal_ideal(A));
}

bool is_irreducible(const Submodule& J) {
  if (!J.module()->is_regular())
    throw UsageError("irreducibility applies to ideals of the regular module");
  if (J.is_full()) throw UsageError("the unit ideal has no irreducibility status");
  QuotientData q = quotient_module(J.module(), J);
  return socle(q.quotient).dim() == 1;
}

Submodule ideal_from_elements(const AlgebraPtr& A, const std::vector<Vec>& elems) {
  return Submodule::span(FiniteModule::regular(A), elems);
}

Submodule maximal_ideal(const AlgebraPtr& A) {
  std::vector<Vec> gens;
  for (int i = 1; i < A->dim(); ++i) gens.push_back(A->basis_vec(i));
  return Submodule::span(FiniteModule::regular(A), gens);
}

std::vector<Vec> minimal_generators(const Submodule& N) {
  const auto& M = N.module();
  const auto& A = M->algebra();
  const Field& F = *A->field();
  // m*N
  EchelonBasis mn(F, M->dim());
  for (int r = 0; r < N.basis().rows; ++r)
    for (int g : A->generator_indices())
      mn.insert(M->act_basis(g, N.basis().row(r)));
  std::vector<Vec> gens;
  EchelonBasis cover(F, M->dim());
  for (const Vec& v : mn.rows()) cover.insert(v);
  for (int r = 0; r < N.basis().rows; ++r) {
    Vec row = N.basis().row(r);
    if (cover.insert(row)) gens.push_back(row);
  }
  return gens;
}

int minimal_generator_count(const Submodule& N) {
  return static_cast<int>(minimal_generators(N).size());
}

QuotientData quotient_module(const ModulePtr& M, const Submodule& L) {
  if (L.module() != M) throw UsageError("quotient by a submodule of another module");
  const auto& A = M->algebra();
  const Field& F = *A->field();
  int m = M->dim();
  ProjInfo pi = projection_info(F, L.basis(), m);
  int q = pi.proj.rows;
  Mat lift(m, q);
  for (int r = 0; r < q; ++r) lift.at(pi.nonpivots[r], r) = 1;
  check_dense_size(A->dim(), q, "quotient module");
  std::vector<Mat> act(A->dim());
  for (int i = 0; i < A->dim(); ++i) {
    Mat ai(q, q);
    for (int c = 0; c < q; ++c) {
      Vec lifted(m, 0);
      lifted[pi.nonpivots[c]] = 1;
      Vec col = apply(F, pi.proj, M->act_basis(i, lifted));
      for (int r = 0; r < q; ++r) ai.at(r, c) = col[r];
    }
    act[i] = std::move(ai);
  }
  QuotientData out;
  out.quotient = FiniteModule::with_action(A, std::move(act),
                                           M->name() + "/sub");
  out.proj = std::move(pi.proj);
  out.lift = std::move(lift);
  return out;
}

RestrictData restrict_module(const Submodule& S) {
  const auto& M = S.module();
  const auto& A = M->algebra();
  const Field& F = *A->field();
  int s = S.dim(), m = M->dim();
  check_dense_size(A->dim(), s, "restricted module");
  std::vector<Mat> act(A->dim());
  for (int i = 0; i < A->dim(); ++i) {
    Mat ai(s, s);
    for (int c = 0; c < s; ++c) {
      Vec img = M->act_basis(i, S.basis().row(c));
      Vec coords = express_in_rows(F, S.basis(), img);
      for (int r = 0; r < s; ++r) ai.at(r, c) = coords[r];
    }
    act[i] = std::move(ai);
  }
  RestrictData out;
  out.sub = FiniteModule::with_action(A, std::move(act), M->name() + "|sub");
  out.embed = transpose(S.basis());
  return out;
}

ModulePtr dual_module(const ModulePtr& M) {
  const auto& A = M->algebra();
  check_dense_size(A->dim(), M->dim(), "dual module");
  std::vector<Mat> act(A->dim());
  for (int i = 0; i < A->dim(); ++i) {
    if (M->is_regular()) {
      Mat ai(M->dim(), M->dim());
      for (int c = 0; c < M->dim(); ++c) {
        Vec col = M->act_basis(i, A->basis_vec(c));
        for (int r = 0; r < M->dim(); ++r) ai.at(r, c) = col[r];
      }
      act[i] = transpose(ai);
    } else {
      act[i] = transpose(M->action_matrix(i));
    }
  }
  return FiniteModule::with_action(A, std::move(act), M->name() + "^v");
}

Submodule dual_submodule(const Submodule& L, const ModulePtr& Mdual) {
  const Field& F = *L.module()->algebra()->field();
  if (L.is_zero()) return Submodule::full(Mdual);
  Mat K = kernel(F, L.basis());
  std::vector<Vec> gens;
  for (int r = 0; r < K.rows; ++r) gens.push_back(K.row(r));
  return Submodule::span(Mdual, gens);
}

Submodule map_submodule(const Submodule& S, const Mat& map, const ModulePtr& target) {
  const Field& F = *target->algebra()->field();
  std::vector<Vec> gens;
  for (int r = 0; r < S.basis().rows; ++r)
    gens.push_back(apply(F, map, S.basis().row(r)));
  return Submodule::span(target, gens);
}

Submodule preimage_submodule(const Submodule& S, const Mat& map,
                             const ModulePtr& source) {
  // {v : map*v in S}
  const Field& F = *source->algebra()->field();
  ProjInfo pi = projection_info(F, S.basis(), S.module()->dim());
  if (pi.proj.rows == 0) return Submodule::full(source);
  Mat sys = matmul(F, pi.proj, map);
  Mat K = kernel(F, sys);
  std::vector<Vec> gens;
  for (int r = 0; r < K.rows; ++r) gens.push_back(K.row(r));
  return Submodule::span(source, gens);
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& A, const Submodule& J) {
  if (!J.module()->is_regular() || J.module()->algebra() != A)
    throw UsageError("quotient algebra needs an ideal of the regular module");
  if (J.is_full()) throw UsageError("cannot form the zero quotient algebra");
  const Field& F = *A->field();
  QuotientData qd = quotient_module(J.module(), J);
  int q = qd.quotient->dim();
  std::vector<Mat> mult(q);
  for (int i = 0; i < q; ++i) {
    Mat mi(q, q);
    Vec lifted_i = apply(F, qd.lift, [&] {
      Vec e(q, 0);
      e[i] = 1;
      return e;
    }());
    for (int c = 0; c < q; ++c) {
      Vec lifted_c = apply(F, qd.lift, [&] {
        Vec e(q, 0);
        e[c] = 1;
        return e;
      }());
      Vec col = apply(F, qd.proj, A->mul(lifted_i, lifted_c));
      for (int r = 0; r < q; ++r) mi.at(r, c) = col[r];
    }
    mult[i] = std::move(mi);
  }
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) labels[i] = "q" + std::to_string(i);
  labels[0] = "1";
  QuotientAlgebra out;
  out.algebra = FiniteLocalAlgebra::from_mult_table(A->field(), std::move(labels),
                                                    std::move(mult), A->stamp());
  out.proj = std::move(qd.proj);
  out.lift = std::move(qd.lift);
  return out;
}

Vec express_in_rows(const Field& F, const Mat& rref_rows, const Vec& v) {
  // rref_rows is in RREF; coefficients are read off at the pivots
  Vec coords(rref_rows.rows, 0);
  Vec cur = v;
  for (int r = 0; r < rref_rows.rows; ++r) {
    int piv = -1;
    for (int c = 0; c < rref_rows.cols; ++c)
      if (rref_rows.at(r, c) != 0) { piv = c; break; }
    if (piv < 0) continue;
    Elt f = cur[piv];
    coords[r] = f;
    if (f == 0) continue;
    for (int c = 0; c < rref_rows.cols; ++c)
      cur[c] = F.sub(cur[c], F.mul(f, rref_rows.at(r, c)));
  }
  for (Elt x : cur)
    if (x != 0) throw UsageError("vector not contained in the given row space");
  return coords;
}

}  // namespace clint
