#ifndef CLINT_DUALITY_HPP
#define CLINT_DUALITY_HPP

#include <memory>
#include <string>

#include "clint/closure.hpp"

namespace clint {

// Matlis duality at finite length: the linear dual with contragredient
// action. Biduality is the identity matrix in dual-dual coordinates and is
// stored explicitly so submodule transports never guess bases.
struct DualPair {
  ModulePtr module;
  ModulePtr dual;
  Mat biduality;  // dim x dim identity, M -> M^vv in coordinates
};

DualPair matlis_dual(const ModulePtr& M);

struct InteriorTraits {
  std::string name;
  std::string source_closure;  // empty when not smile-derived
  bool all_pairs = true;
};

// Contractive, idempotent, order-preserving submodule selector. Applied to
// a submodule A of an ambient module, the value is again a submodule of the
// same ambient (isomorphism invariance makes this well defined).
class InteriorOp {
 public:
  virtual ~InteriorOp() = default;
  const InteriorTraits& traits() const { return traits_; }
  virtual Submodule interior(const Submodule& A) const = 0;
  // interior of a whole module, as a submodule of it
  Submodule interior_of(const ModulePtr& M) const {
    return interior(Submodule::full(M));
  }

 protected:
  InteriorTraits traits_;
};

using InteriorPtr = std::shared_ptr<const InteriorOp>;

InteriorPtr identity_interior();
// interior dual to a residual closure: int(A) = (A^v / 0^cl_{A^v})^v
InteriorPtr smile_interior(ClosurePtr cl);
// deliberately broken selector (A -> m*A) for rejection tests
InteriorPtr broken_interior();

// closure dual to an interior: N^cl_M = pi^{-1}((M/N ^v / int(M/N ^v))^v)
ClosurePtr smile_closure(InteriorPtr in, std::string name);

// quick contractive/idempotence/order sanity on small instances; throws
// ConstructionError with a certificate when the selector is not an interior
void validate_interior(const InteriorPtr& in, const ModulePtr& sample);

}  // namespace clint

#endif
