#include "clint/config.hpp"

#include <cstdlib>

#include "clint/field.hpp"

namespace clint {

namespace {
long long env_or(const char* name, long long dflt) {
  const char* v = std::getenv(name);
  if (!v || !*v) return dflt;
  return std::atoll(v);
}
}  // namespace

const Config& config() {
  static const Config cfg = [] {
    Config c;
    c.max_lattice = env_or("CLINT_MAX_LATTICE", c.max_lattice);
    c.max_tensor = env_or("CLINT_MAX_TENSOR", c.max_tensor);
    c.max_dense_entries = env_or("CLINT_MAX_DENSE", c.max_dense_entries);
    c.assoc_triple_cap = env_or("CLINT_ASSOC_TRIPLES", c.assoc_triple_cap);
    c.frobenius_emax = static_cast<int>(env_or("CLINT_EMAX", c.frobenius_emax));
    return c;
  }();
  return cfg;
}

void check_dense_size(int algebra_dim, int module_dim, const std::string& what) {
  long long entries = static_cast<long long>(algebra_dim) * module_dim * module_dim;
  if (entries > config().max_dense_entries)
    throw ResourceError(what + " would need " + std::to_string(entries) +
                        " dense action entries (cap " +
                        std::to_string(config().max_dense_entries) + ")");
}

}  // namespace clint
