#ifndef CLINT_COREHULL_HPP
#define CLINT_COREHULL_HPP

#include <optional>
#include <string>
#include <vector>

#include "clint/duality.hpp"

namespace clint {

// All action-closed subspaces of M, built socle-upward from zero, in a
// deterministic order (dimension, then normal-form bytes). Throws
// ResourceError past the configured lattice cap.
std::vector<Submodule> enumerate_submodules(const ModulePtr& M);

// {X : A <= X <= B}, via the lattice of B/A
std::vector<Submodule> enumerate_between(const Submodule& A, const Submodule& B);

struct ReductionCertificate {
  Submodule L, N;
  Submodule closure_of_L;  // replaying close(L, M) confirms N <= L^cl_M
  bool minimal = false;
  std::string witness;  // "enumerated" | "descent"
};

// true iff N <= L^cl_M (with L <= N <= M enforced)
bool is_reduction(const Submodule& L, const Submodule& N, const ClosurePtr& cl,
                  ReductionCertificate* cert = nullptr);

enum class SearchMode { enumerate, descent, via_duality, cross_check };

SearchMode parse_mode(const std::string& s);

// all inclusion-minimal cl-reductions of N in M (enumerate mode), or the
// (possibly partial) descent set
std::vector<Submodule> minimal_reductions(const Submodule& N, const ClosurePtr& cl,
                                          SearchMode mode = SearchMode::enumerate);

Submodule cl_core(const Submodule& N, const ClosurePtr& cl,
                  SearchMode mode = SearchMode::enumerate);

// expansions of A in B: {C : A <= C <= B, int(C) <= A}
std::vector<Submodule> expansions(const Submodule& A, const Submodule& B,
                                  const InteriorPtr& in);
std::vector<Submodule> maximal_expansions(const Submodule& A, const Submodule& B,
                                          const InteriorPtr& in);
Submodule i_hull(const Submodule& A, const Submodule& B, const InteriorPtr& in,
                 SearchMode mode = SearchMode::enumerate);

// functionals (rows of M^dual coordinates) with trivial common kernel
std::vector<Vec> cogenerators(const ModulePtr& M);
std::vector<Vec> minimal_cogenerators(const ModulePtr& M);
int minimal_cogenerator_count(const ModulePtr& M);

struct SpreadResult {
  bool exists = false;
  int value = 0;
  std::vector<int> distinct_counts;  // evidence when the spread does not exist
  int reduction_count = 0;
};

SpreadResult spread(const Submodule& N, const ClosurePtr& cl);
SpreadResult cospread(const Submodule& A, const Submodule& B, const InteriorPtr& in);

}  // namespace clint

#endif
