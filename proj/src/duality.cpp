#include "clint/duality.hpp"

namespace clint {

DualPair matlis_dual(const ModulePtr& M) {
  DualPair out;
  out.module = M;
  out.dual = dual_module(M);
  out.biduality = identity(M->dim());
  return out;
}

namespace {

class IdentityInterior final : public InteriorOp {
 public:
  IdentityInterior() { traits_.name = "identity"; }
  Submodule interior(const Submodule& A) const override { return A; }
};

// int(A) = (A^v / 0^cl_{A^v})^v, realized inside A via the stored biduality
// (the standard dual-basis identification, an identity matrix).
class SmileInterior final : public InteriorOp {
 public:
  explicit SmileInterior(ClosurePtr cl) : cl_(std::move(cl)) {
    if (!cl_->traits().residual)
      throw UsageError("smile interior needs a residual closure");
    traits_.name = cl_->traits().name + "^smile";
    traits_.source_closure = cl_->traits().name;
  }

  Submodule interior(const Submodule& A) const override {
    if (A.is_zero()) return A;
    RestrictData r = restrict_module(A);
    ModulePtr D = dual_module(r.sub);
    Submodule W = cl_->close(Submodule::zero(D), D);
    // (A^v / W)^v = {x in A : f(x) = 0 for all f in W}
    Submodule inside =
        W.is_zero() ? Submodule::full(r.sub)
                    : Submodule::span(r.sub, [&] {
                        Mat K = kernel(*A.module()->algebra()->field(), W.basis());
                        std::vector<Vec> g;
                        for (int i = 0; i < K.rows; ++i) g.push_back(K.row(i));
                        return g;
                      }());
    return map_submodule(inside, r.embed, A.module());
  }

 private:
  ClosurePtr cl_;
};

class BrokenInterior final : public InteriorOp {
 public:
  BrokenInterior() { traits_.name = "broken[m-multiple]"; }
  Submodule interior(const Submodule& A) const override {
    const auto& M = A.module();
    std::vector<Vec> gens;
    for (int r = 0; r < A.basis().rows; ++r)
      for (int g : M->algebra()->generator_indices())
        gens.push_back(M->act_basis(g, A.basis().row(r)));
    return Submodule::span(M, gens);
  }
};

class SmileClosure final : public ClosureOp {
 public:
  SmileClosure(InteriorPtr in, std::string name) : in_(std::move(in)) {
    traits_.name = std::move(name);
    traits_.residual = true;
    traits_.functorial = true;
    traits_.all_pairs = true;
  }

  CloseResult close_ex(const Submodule& N, const ModulePtr& M) const override {
    check_pair(N, M);
    const Field& F = *M->algebra()->field();
    QuotientData qd = quotient_module(M, N);
    if (qd.quotient->dim() == 0) return {N, true, 0};
    ModulePtr D = dual_module(qd.quotient);
    Submodule intD = in_->interior_of(D);
    // alpha(M/N) = (D / int(D))^v inside D^v = M/N (dual-basis coordinates)
    Submodule alpha =
        intD.is_zero()
            ? Submodule::full(qd.quotient)
            : Submodule::span(qd.quotient, [&] {
                Mat K = kernel(F, intD.basis());
                std::vector<Vec> g;
                for (int i = 0; i < K.rows; ++i) g.push_back(K.row(i));
                return g;
              }());
    Submodule pulled = preimage_submodule(alpha, qd.proj, M);
    return {pulled, true, 0};
  }

 private:
  InteriorPtr in_;
};

}  // namespace

InteriorPtr identity_interior() { return std::make_shared<IdentityInterior>(); }

InteriorPtr smile_interior(ClosurePtr cl) {
  return std::make_shared<SmileInterior>(std::move(cl));
}

InteriorPtr broken_interior() { return std::make_shared<BrokenInterior>(); }

ClosurePtr smile_closure(InteriorPtr in, std::string name) {
  return std::make_shared<SmileClosure>(std::move(in), std::move(name));
}

void validate_interior(const InteriorPtr& in, const ModulePtr& sample) {
  // contractive + idempotent + order-preserving on the submodules spanned by
  // leading basis vectors of the sample module
  std::vector<Submodule> subs = {Submodule::zero(sample), Submodule::full(sample)};
  for (int i = 1; i < sample->dim(); ++i) {
    std::vector<Vec> gens;
    for (int j = i; j < sample->dim(); ++j) {
      Vec e(sample->dim(), 0);
      e[j] = 1;
      gens.push_back(std::move(e));
    }
    subs.push_back(Submodule::span(sample, gens));
  }
  for (const auto& A : subs) {
    Submodule ia = in->interior(A);
    if (!A.contains(ia))
      throw ConstructionError("interior '" + in->traits().name +
                              "' is not contractive");
    if (in->interior(ia) != ia)
      throw ConstructionError("interior '" + in->traits().name +
                              "' is not idempotent (certificate: submodule of "
                              "dimension " + std::to_string(A.dim()) + ")");
    for (const auto& B : subs)
      if (B.contains(A) && !in->interior(B).contains(ia))
        throw ConstructionError("interior '" + in->traits().name +
                                "' is not order-preserving");
  }
}

}  // namespace clint
