#ifndef CLINT_FIELD_HPP
#define CLINT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace clint {

// An element of F_{p^d}, represented as an index into precomputed tables.
// For d = 1 the index is the residue mod p; for d > 1 it encodes the
// coefficient vector of a polynomial in the generator w, base p.
using Elt = std::uint16_t;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// F_{p^d} with exact table-based arithmetic. No floating point anywhere.
// q = p^d is capped so the q x q tables stay small.
class Field {
 public:
  Field(int p, int d = 1);

  int p() const { return p_; }
  int degree() const { return d_; }
  int size() const { return q_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }

  Elt add(Elt a, Elt b) const { return add_[idx(a, b)]; }
  Elt sub(Elt a, Elt b) const { return add_[idx(a, neg_[b])]; }
  Elt mul(Elt a, Elt b) const { return mul_[idx(a, b)]; }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  // Canonical image of an integer through the prime subfield.
  Elt from_int(long long n) const;

  // x -> x^p, the Frobenius automorphism, and its e-fold (inverse) iterates.
  Elt frobenius(Elt a) const { return frob_[a]; }
  Elt frobenius_pow(Elt a, int e) const;
  Elt inverse_frobenius_pow(Elt a, int e) const;

  Elt pow(Elt a, long long e) const;

  bool in_prime_subfield(Elt a) const { return a < static_cast<Elt>(p_); }

  // "3", or "w", "2*w+1" for proper extension elements.
  std::string to_string(Elt a) const;

  // Modulus coefficients (degree d monic, as stored): for tests/reporting.
  const std::vector<int>& modulus() const { return modulus_; }

  bool operator==(const Field& o) const { return p_ == o.p_ && d_ == o.d_; }

 private:
  std::size_t idx(Elt a, Elt b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  int p_, d_, q_;
  std::vector<int> modulus_;  // coefficients of the irreducible polynomial
  std::vector<Elt> add_, mul_, neg_, inv_, frob_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(int p, int d = 1);

}  // namespace clint

#endif
