#ifndef CLINT_AXIOMS_HPP
#define CLINT_AXIOMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "clint/corehull.hpp"

namespace clint {

struct SampleSpec {
  std::vector<AlgebraPtr> algebras;
  int samples_per_algebra = 24;
  std::uint64_t seed = 17;
  bool exhaustive_lattice = false;  // enumerate all triples instead of sampling
};

struct AxiomReport {
  std::string check;
  bool passed = true;
  std::string certificate;  // replayable description of the first failure
  std::uint64_t seed = 0;
  int instances = 0;
};

// extension, idempotence, order preservation, and residuality/functoriality
// where the traits claim them
std::vector<AxiomReport> check_axioms(const ClosurePtr& cl, const SampleSpec& spec);

// Nakayama property: L <= N <= (L + mN)^cl_M forces L^cl_M = N^cl_M
AxiomReport check_nakayama(const ClosurePtr& cl, const SampleSpec& spec);

// Nakayama interior: int(A :_B m) <= A forces int(A) = int(B)
AxiomReport check_nakayama_interior(const InteriorPtr& in, const SampleSpec& spec);

bool all_passed(const std::vector<AxiomReport>& reports);

}  // namespace clint

#endif
