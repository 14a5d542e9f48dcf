#ifndef CLINT_CONFIG_HPP
#define CLINT_CONFIG_HPP

#include <string>

namespace clint {

// Resource caps, overridable through environment variables at startup:
//   CLINT_MAX_LATTICE   submodule-enumeration cap (default 20000)
//   CLINT_MAX_TENSOR    materialized tensor dimension cap (default 4096)
//   CLINT_MAX_DENSE     dense action-matrix entries cap (default 1<<25)
//   CLINT_ASSOC_TRIPLES exhaustive associativity-check triple cap
struct Config {
  long long max_lattice = 20000;
  long long max_tensor = 4096;
  long long max_dense_entries = 1LL << 25;
  long long assoc_triple_cap = 1LL << 22;
  int frobenius_emax = 3;
  int stabilization_window = 3;
  int stabilization_tcap = 12;
};

const Config& config();

// throws ResourceError when an (algebra_dim x module_dim^2) dense action
// table would exceed the cap
void check_dense_size(int algebra_dim, int module_dim, const std::string& what);

}  // namespace clint

#endif
