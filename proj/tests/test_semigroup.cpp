#include "doctest.h"

#include <numeric>

#include "clint/semigroup.hpp"
#include "clint/field.hpp"

using namespace clint;

namespace {

// independent oracle: n is in <gens> iff some bounded combination reaches it
bool member_brute(const std::vector<int>& gens, int n) {
  if (n == 0) return true;
  for (int g : gens)
    if (n - g >= 0 && member_brute(gens, n - g)) return true;
  return false;
}

int frobenius_brute(const std::vector<int>& gens, int bound) {
  int fr = -1;
  for (int n = 1; n <= bound; ++n)
    if (!member_brute(gens, n)) fr = n;
  return fr;
}

SemigroupPtr S23() {
  return std::make_shared<NumericalSemigroup>(std::vector<int>{2, 3});
}
SemigroupPtr S345() {
  return std::make_shared<NumericalSemigroup>(std::vector<int>{3, 4, 5});
}

}  // namespace

TEST_CASE("membership") {
  auto s23 = S23();
  CHECK(s23->contains(0));
  CHECK(!s23->contains(1));
  auto s345 = S345();
  CHECK(!s345->contains(2));
  CHECK(s345->contains(7));
  CHECK_THROWS_AS(s23->contains(-1), UsageError);
}

TEST_CASE("frobenius numbers") {
  CHECK(NumericalSemigroup({1}).frobenius_number() == -1);
  CHECK(S23()->frobenius_number() == 1);
  CHECK(S345()->frobenius_number() == 2);
}

TEST_CASE("frobenius matches ab-a-b for coprime pairs") {
  for (int a = 2; a <= 12; ++a)
    for (int b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      NumericalSemigroup S({a, b});
      CHECK(S.frobenius_number() == a * b - a - b);
      CHECK(S.frobenius_number() == frobenius_brute({a, b}, a * b));
    }
}

TEST_CASE("membership table agrees with brute force") {
  for (auto gens : {std::vector<int>{2, 3}, {3, 4, 5}, {3, 5}, {4, 5, 6, 7}}) {
    NumericalSemigroup S(gens);
    for (int n = 0; n <= S.frobenius_number() + 8; ++n)
      CHECK(S.contains(n) == member_brute(gens, n));
  }
}

TEST_CASE("gorenstein symmetry") {
  CHECK(S23()->symmetric());
  CHECK(!S345()->symmetric());
  CHECK(NumericalSemigroup({3, 5}).symmetric());
  CHECK(NumericalSemigroup({1}).symmetric());
}

TEST_CASE("ideal normalization and colon") {
  auto S = S23();
  SemigroupIdeal I(S, {6, 7});
  SemigroupIdeal J(S, {4, 5});
  CHECK(ideal_colon(I, J) == SemigroupIdeal(S, {2, 3}));
  CHECK(ideal_colon(J, SemigroupIdeal(S, {2, 3})) == SemigroupIdeal(S, {2, 3}));
  // (I : I) is the unit ideal
  CHECK(ideal_colon(I, I).is_unit());
  // redundant generators are dropped
  CHECK(SemigroupIdeal(S, {4, 6, 7}) == SemigroupIdeal(S, {4, 7}));
  CHECK_THROWS_AS(ideal_colon(I, SemigroupIdeal(S345(), {3})), UsageError);
}

TEST_CASE("colon oracle: element-wise membership brute force") {
  auto S = S345();
  SemigroupIdeal I(S, {9, 10});
  SemigroupIdeal J(S, {5, 7});
  SemigroupIdeal C = ideal_colon(I, J);
  int bound = 30;
  for (int s = 0; s <= bound; ++s) {
    if (!S->contains(s)) continue;
    bool in_colon = I.contains(s + 5) && I.contains(s + 7);
    CHECK(C.contains(s) == in_colon);
  }
}

TEST_CASE("monomial integral closure") {
  auto S = S23();
  CHECK(monomial_integral_closure(SemigroupIdeal(S, {4})) ==
        SemigroupIdeal(S, {4, 5}));
  CHECK(monomial_integral_closure(SemigroupIdeal(S345(), {5})) ==
        SemigroupIdeal(S345(), {5, 6, 7}));
  // full tail is already integrally closed
  CHECK(monomial_integral_closure(SemigroupIdeal(S, {2, 3})) ==
        SemigroupIdeal(S, {2, 3}));
}

TEST_CASE("integral closure is a closure operation") {
  auto S = S345();
  std::vector<SemigroupIdeal> ideals;
  for (int a = 3; a <= 9; ++a) {
    if (!S->contains(a)) continue;
    ideals.emplace_back(S, std::vector<int>{a});
    for (int b = a + 1; b <= 10; ++b)
      if (S->contains(b)) ideals.emplace_back(S, std::vector<int>{a, b});
  }
  for (const auto& I : ideals) {
    auto Ibar = monomial_integral_closure(I);
    // extension
    for (int g : I.generators()) CHECK(Ibar.contains(g));
    // idempotence
    CHECK(monomial_integral_closure(Ibar) == Ibar);
    for (const auto& J : ideals) {
      bool leq = true;
      for (int g : I.generators())
        if (!J.contains(g)) { leq = false; break; }
      if (leq) {
        auto Jbar = monomial_integral_closure(J);
        for (int g : Ibar.generators()) CHECK(Jbar.contains(g));
      }
    }
  }
}

TEST_CASE("colon duality sanity: I <= (J : (J : I))") {
  auto S = S23();
  std::vector<SemigroupIdeal> ideals;
  for (int a = 2; a <= 8; ++a)
    for (int b = a + 1; b <= 9; ++b)
      if (S->contains(a) && S->contains(b))
        ideals.emplace_back(S, std::vector<int>{a, b});
  for (const auto& I : ideals)
    for (const auto& J : ideals) {
      auto JI = ideal_colon(J, I);
      auto back = ideal_colon(J, JI);
      for (int g : I.generators()) CHECK(back.contains(g));
    }
}
