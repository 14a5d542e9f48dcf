#ifndef CLINT_SEMIGROUP_HPP
#define CLINT_SEMIGROUP_HPP

#include <memory>
#include <string>
#include <vector>

namespace clint {

// A numerical semigroup: additive submonoid of N with finite complement.
// Immutable after construction; membership is table-driven up to
// frobenius_number + max(generator), and trivially true beyond.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<int> generators);

  const std::vector<int>& generators() const { return gens_; }
  int frobenius_number() const { return frobenius_; }
  int multiplicity() const { return gens_.front(); }
  // smallest c with [c, inf) contained in S
  int conductor() const { return frobenius_ + 1; }

  bool contains(int n) const;

  // members of S below bound, ascending
  std::vector<int> members_below(int bound) const;

  // gaps of S (finite complement in N)
  std::vector<int> gaps() const;

  // Symmetric <=> the semigroup ring is Gorenstein.
  bool symmetric() const;

  std::string to_string() const;  // "S<2,3>"

  bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

 private:
  std::vector<int> gens_;         // sorted, irredundant, gcd 1
  int frobenius_;
  std::vector<bool> table_;       // membership up to frobenius_ + max gen
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

// An ideal of a numerical semigroup: {g + s : g in gens, s in S}.
// Normal form is the sorted irredundant generator list; the unit ideal
// (containing 0) is representable and flagged.
class SemigroupIdeal {
 public:
  SemigroupIdeal(SemigroupPtr S, std::vector<int> generator_exponents);

  const SemigroupPtr& semigroup() const { return S_; }
  const std::vector<int>& generators() const { return gens_; }
  bool is_unit() const { return !gens_.empty() && gens_.front() == 0; }
  int min_exponent() const { return gens_.front(); }

  bool contains(int n) const;

  std::string to_string() const;  // "(4,5)"

  bool operator==(const SemigroupIdeal& o) const {
    return *S_ == *o.S_ && gens_ == o.gens_;
  }

 private:
  SemigroupPtr S_;
  std::vector<int> gens_;  // normalized
};

SemigroupIdeal ideal_colon(const SemigroupIdeal& I, const SemigroupIdeal& J);
SemigroupIdeal ideal_sum(const SemigroupIdeal& I, const SemigroupIdeal& J);
SemigroupIdeal monomial_integral_closure(const SemigroupIdeal& I);

}  // namespace clint

#endif
