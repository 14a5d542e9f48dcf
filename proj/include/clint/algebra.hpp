#ifndef CLINT_ALGEBRA_HPP
#define CLINT_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clint/matrix.hpp"
#include "clint/monomial.hpp"

namespace clint {

class RingModel;
using ModelPtr = std::shared_ptr<const RingModel>;

// Provenance of a truncation algebra: which model and precision built it.
struct ModelStamp {
  ModelPtr model;
  int precision = 0;
};

class FiniteLocalAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteLocalAlgebra>;
class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

// A finite-dimensional commutative local algebra over F_q. Basis element 0
// is the unit; the maximal ideal is spanned by the remaining basis elements
// (all constructions here produce such bases). Multiplication comes either
// from a monomial family or from explicit structure constants. Associativity,
// commutativity, unitality and locality are verified at construction,
// exhaustively up to a triple-count cap and on a deterministic sample beyond.
class FiniteLocalAlgebra : public std::enable_shared_from_this<FiniteLocalAlgebra> {
 public:
  static AlgebraPtr from_family(ArithPtr fam, ModelStamp stamp = {});
  static AlgebraPtr from_mult_table(FieldPtr F, std::vector<std::string> labels,
                                    std::vector<Mat> mult_ops,
                                    ModelStamp stamp = {});

  int dim() const { return dim_; }
  const FieldPtr& field() const { return F_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int unit_index() const { return 0; }

  // basis_i * basis_j as a sparse vector of (basis index, coeff)
  void mul_basis(int i, int j, std::vector<std::pair<int, Elt>>& out) const;
  Vec mul(const Vec& u, const Vec& v) const;
  Vec power(const Vec& u, long long e) const;

  // indices of a generating set of the maximal ideal (action closure under
  // these reaches every ideal multiple)
  const std::vector<int>& generator_indices() const { return gens_; }

  // monomial family backing, when present
  const ArithPtr& family() const { return family_; }
  const std::vector<MonoKey>& basis_keys() const { return keys_; }
  int key_index(MonoKey k) const;  // -1 if absent

  const ModelStamp& stamp() const { return stamp_; }

  Vec unit() const;
  Vec basis_vec(int i) const;
  std::string vec_to_string(const Vec& v) const;

  // nilpotency index of the maximal ideal
  int nilpotency_index() const { return nilpotency_; }

 private:
  friend class FiniteModule;
  FiniteLocalAlgebra() = default;
  void verify(bool exhaustive_cap_hit_ok);

  FieldPtr F_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  ArithPtr family_;                 // null for mult-table algebras
  std::vector<MonoKey> keys_;       // family case
  std::vector<Mat> mult_ops_;       // mult-table case: mult_ops_[i] = mult by e_i
  std::vector<int> gens_;
  int nilpotency_ = 0;
  ModelStamp stamp_;
  // the regular module is unique per algebra so submodules of it compare
  mutable std::shared_ptr<const FiniteModule> regular_cache_;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

// A finite module over a FiniteLocalAlgebra. Regular modules act through
// the algebra's multiplication; other modules carry explicit action
// matrices (one per algebra basis element), verified to define a module
// structure on construction.
class FiniteModule : public std::enable_shared_from_this<FiniteModule> {
 public:
  static ModulePtr regular(AlgebraPtr A);
  static ModulePtr with_action(AlgebraPtr A, std::vector<Mat> act,
                               std::string name);

  int dim() const { return dim_; }
  const AlgebraPtr& algebra() const { return A_; }
  bool is_regular() const { return regular_; }
  const std::string& name() const { return name_; }

  Vec act_basis(int i, const Vec& v) const;
  Vec act_elem(const Vec& a, const Vec& v) const;
  const Mat& action_matrix(int i) const;  // mult-table path only

  std::string vec_to_string(const Vec& v) const;

 private:
  FiniteModule() = default;

  AlgebraPtr A_;
  int dim_ = 0;
  bool regular_ = false;
  std::vector<Mat> act_;
  std::string name_;
};

// An action-closed subspace in reduced row echelon form; the RREF matrix is
// the unique normal form, so equality of submodules is equality of matrices.
class Submodule {
 public:
  Submodule() = default;

  static Submodule span(ModulePtr M, const std::vector<Vec>& gens);
  static Submodule zero(ModulePtr M);
  static Submodule full(ModulePtr M);
  // rows already RREF and action-closed (caller guarantees)
  static Submodule from_rref(ModulePtr M, Mat rref_rows);

  const ModulePtr& module() const { return M_; }
  const Mat& basis() const { return basis_; }
  int dim() const { return basis_.rows; }
  int ambient_dim() const { return M_ ? M_->dim() : 0; }
  bool is_zero() const { return basis_.rows == 0; }
  bool is_full() const { return basis_.rows == M_->dim(); }

  bool contains(const Vec& v) const;
  bool contains(const Submodule& other) const;
  bool operator==(const Submodule& o) const;
  bool operator!=(const Submodule& o) const { return !(*this == o); }

  // strict total order on normal forms (for deterministic sets)
  static bool less(const Submodule& a, const Submodule& b);

  std::string to_string() const;

 private:
  ModulePtr M_;
  Mat basis_;
};

// lattice and colon operations
Submodule sub_sum(const Submodule& a, const Submodule& b);
Submodule sub_intersect(const Submodule& a, const Submodule& b);
// ideal product inside the regular module (both ideals of the same algebra)
Submodule ideal_product(const Submodule& I, const Submodule& J);
// {a in A : a*J <= I} for I, J inside the same module; an ideal of A
Submodule transporter(const Submodule& I, const Submodule& J);
// {x in M : J*x <= I} for an ideal J of the algebra and I <= M
Submodule module_colon(const Submodule& I, const Submodule& J_ideal);
// {a in A : a*M = 0}
Submodule annihilator(const ModulePtr& M);
// {x in M : m*x = 0}
Submodule socle(const ModulePtr& M);
// socle of A/J is one-dimensional
bool is_irreducible(const Submodule& J);

Submodule ideal_from_elements(const AlgebraPtr& A, const std::vector<Vec>& elems);
Submodule maximal_ideal(const AlgebraPtr& A);

// minimal generators: rows of the RREF basis lifting a basis of N/mN,
// in basis order (the canonical generator list)
std::vector<Vec> minimal_generators(const Submodule& N);
int minimal_generator_count(const Submodule& N);

// structure transports
struct QuotientData {
  ModulePtr quotient;
  Mat proj;  // dim(Q) x dim(M)
  Mat lift;  // dim(M) x dim(Q), a section of proj
};
QuotientData quotient_module(const ModulePtr& M, const Submodule& L);

struct RestrictData {
  ModulePtr sub;
  Mat embed;  // dim(M) x dim(S): columns are the basis rows of S
};
RestrictData restrict_module(const Submodule& S);

ModulePtr dual_module(const ModulePtr& M);
// {f in M^dual : f(L) = 0}, the Matlis dual of M/L inside M^dual
Submodule dual_submodule(const Submodule& L, const ModulePtr& Mdual);

// push a submodule through a linear map given by `map` (rows_out x rows_in)
Submodule map_submodule(const Submodule& S, const Mat& map, const ModulePtr& target);
Submodule preimage_submodule(const Submodule& S, const Mat& map, const ModulePtr& source);

// quotient algebra A/J together with the projection data
struct QuotientAlgebra {
  AlgebraPtr algebra;
  Mat proj;
  Mat lift;
};
QuotientAlgebra quotient_algebra(const AlgebraPtr& A, const Submodule& J);

// express v in the row space of rref_rows; throws if not contained
Vec express_in_rows(const Field& F, const Mat& rref_rows, const Vec& v);

}  // namespace clint

#endif
