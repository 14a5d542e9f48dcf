#include "doctest.h"

#include "clint/algebra.hpp"
#include "clint/exprs.hpp"
#include "clint/model.hpp"

using namespace clint;

namespace {

ModelPtr model23(int p = 5, int d = 1) {
  return RingModel::semigroup_ring(
      make_field(p, d), std::make_shared<NumericalSemigroup>(std::vector<int>{2, 3}));
}

ModelPtr model345(int p = 7, int d = 1) {
  return RingModel::semigroup_ring(
      make_field(p, d),
      std::make_shared<NumericalSemigroup>(std::vector<int>{3, 4, 5}));
}

ModelPtr cubic_model(int p) {
  // k[[x,y,z]]/(x^3+y^3+z^3): x^3 -> -(y^3+z^3), truncations (y^N, z^N)
  RewriteArith::Rule rule;
  rule.lhs = {3, 0, 0};
  rule.rhs = {{{0, 3, 0}, -1}, {{0, 0, 3}, -1}};
  return RingModel::rewrite_quotient(make_field(p), {"x", "y", "z"}, rule,
                                     {0, 1, 1}, "cubic");
}

ModelPtr xy_model(int p, int d = 1) {
  RewriteArith::Rule rule;
  rule.lhs = {1, 1};
  rule.rhs = {};
  return RingModel::rewrite_quotient(make_field(p, d), {"x", "y"}, rule, {1, 1},
                                     "xy");
}

}  // namespace

TEST_CASE("truncation dimensions") {
  CHECK(model23()->truncation(6)->dim() == 5);  // {1,t^2,t^3,t^4,t^5}
  auto full = RingModel::semigroup_ring(
      make_field(2), std::make_shared<NumericalSemigroup>(std::vector<int>{1}));
  CHECK(full->truncation(1)->dim() == 1);
  CHECK(cubic_model(7)->truncation(3)->dim() == 27);
  CHECK(xy_model(3)->truncation(4)->dim() == 7);  // 1, x..x^3, y..y^3
}

TEST_CASE("truncation cache returns the same algebra") {
  auto m = model23();
  CHECK(m->truncation(8) == m->truncation(8));
}

TEST_CASE("gorenstein metadata") {
  CHECK(model23()->gorenstein());
  CHECK(!model345()->gorenstein());
  CHECK(model345()->omega_exponents().has_value());
  CHECK(*model345()->omega_exponents() == std::vector<int>{0, 1});
  CHECK(cubic_model(5)->gorenstein());
  CHECK(xy_model(5)->gorenstein());
}

TEST_CASE("ideal_from_elements fixtures") {
  auto A = model23()->truncation(10);
  // unit generator spans everything
  CHECK(ideal_from_elements(A, {A->unit()}).is_full());
  // zero
  CHECK(ideal_from_elements(A, {Vec(A->dim(), 0)}).is_zero());
  // binomial generator t^4+2t^5 over F_5, N=10:
  // span {t^4+2t^5, t^6+2t^7, t^7+2t^8, t^8, t^9}
  Vec g = parse_element(A, "t^4+2*t^5");
  Submodule I = ideal_from_elements(A, {g});
  CHECK(I.dim() == 5);
  CHECK(I.contains(parse_element(A, "t^6+2*t^7")));
  CHECK(I.contains(parse_element(A, "t^7+2*t^8")));
  CHECK(I.contains(parse_element(A, "t^8")));
  CHECK(I.contains(parse_element(A, "t^9")));
  CHECK(!I.contains(parse_element(A, "t^4")));
  CHECK(ideal_to_string(I) == "(t^4+2*t^5)");
}

TEST_CASE("colon fixtures") {
  auto A = model23()->truncation(12);
  Submodule J45 = parse_ideal(A, "(t^4,t^5)");
  for (int a = 0; a < 5; ++a) {
    Submodule I = parse_ideal(A, "t^6+" + std::to_string(a) + "*t^7");
    CHECK(transporter(I, J45) == parse_ideal(A, "(t^4,t^5)"));
  }
  // (I : unit ideal) = I
  Submodule I = parse_ideal(A, "(t^6,t^7)");
  CHECK(transporter(I, Submodule::full(I.module())) == I);
  // I <= (I : I)
  Submodule II = transporter(I, I);
  CHECK(II.contains(I));
}

TEST_CASE("sum, intersection, product") {
  auto A = model23(2)->truncation(8);
  Submodule a = parse_ideal(A, "t^2+t^3");
  Submodule b = parse_ideal(A, "t^2");
  CHECK(sub_sum(a, b) == parse_ideal(A, "(t^2,t^3)"));
  CHECK(sub_sum(a, Submodule::zero(a.module())) == a);
  CHECK(sub_intersect(a, Submodule::full(a.module())) == a);
  auto A10 = model23()->truncation(10);
  Submodule m = parse_ideal(A10, "(t^2,t^3)");
  CHECK(ideal_product(m, m) == parse_ideal(A10, "(t^4,t^5)"));
}

TEST_CASE("modular law on random ideal triples") {
  auto A = model345(3)->truncation(9);
  std::vector<Submodule> ideals;
  for (const char* s : {"t^3", "t^4", "t^5", "(t^3,t^4)", "(t^4,t^5)",
                        "t^3+t^4", "t^3+2*t^5", "(t^6,t^7,t^8)"})
    ideals.push_back(parse_ideal(A, s));
  for (const auto& a : ideals)
    for (const auto& b : ideals)
      for (const auto& c : ideals) {
        if (!a.contains(c)) continue;
        // a ∩ (b + c) = (a ∩ b) + c when c <= a
        CHECK(sub_intersect(a, sub_sum(b, c)) ==
              sub_sum(sub_intersect(a, b), c));
      }
}

TEST_CASE("socle and irreducibility") {
  auto A = model23()->truncation(6);
  Submodule s = socle(FiniteModule::regular(A));
  CHECK(s == parse_ideal(A, "(t^4,t^5)"));

  // socle of the field is the field
  auto full = RingModel::semigroup_ring(
      make_field(3), std::make_shared<NumericalSemigroup>(std::vector<int>{1}));
  auto k = full->truncation(1);
  CHECK(socle(FiniteModule::regular(k)).is_full());
  CHECK(is_irreducible(Submodule::zero(FiniteModule::regular(k))));

  // Gorenstein quotients have 1-dimensional socle
  auto A12 = model23()->truncation(12);
  for (int a = 0; a < 3; ++a) {
    Submodule J = parse_ideal(A12, "t^6+" + std::to_string(a) + "*t^7");
    CHECK(is_irreducible(J));
  }
  CHECK(!is_irreducible(parse_ideal(A12, "(t^4,t^5)")));
  CHECK_THROWS_AS(is_irreducible(Submodule::full(FiniteModule::regular(A12))),
                  UsageError);
}

TEST_CASE("annihilator") {
  auto A = model23()->truncation(6);
  auto R = FiniteModule::regular(A);
  CHECK(annihilator(R).is_zero());
  // annihilator of A/J is J
  Submodule J = parse_ideal(A, "(t^4,t^5)");
  QuotientData q = quotient_module(R, J);
  CHECK(annihilator(q.quotient) == J);
  // annihilator of the submodule span{t^4,t^5} is (t^2,t^3)
  RestrictData r = restrict_module(J);
  CHECK(annihilator(r.sub) == parse_ideal(A, "(t^2,t^3)"));
}

TEST_CASE("gorenstein double annihilator: (J:(J:I)) = I + J") {
  // Gorenstein Artinian ambients: R/(irreducible), dim <= 6, over F_2, F_3
  for (int p : {2, 3}) {
    for (const char* irr : {"t^6", "t^6+t^7", "t^8"}) {
      auto A = model23(p)->truncation(14);
      Submodule cut = parse_ideal(A, irr);
      REQUIRE(is_irreducible(cut));
      auto B = quotient_algebra(A, cut).algebra;
      REQUIRE(socle(FiniteModule::regular(B)).dim() == 1);
      auto RB = FiniteModule::regular(B);
      // sample of ideals of B: all principal ideals on a vector sample plus
      // the maximal ideal and zero
      std::vector<Submodule> ideals = {Submodule::zero(RB), Submodule::full(RB),
                                       maximal_ideal(B)};
      const Field& F = *B->field();
      for (int i = 1; i < B->dim(); ++i) {
        ideals.push_back(ideal_from_elements(B, {B->basis_vec(i)}));
        for (int j = i + 1; j < B->dim(); ++j) {
          Vec v = B->basis_vec(i);
          v[j] = F.one();
          ideals.push_back(ideal_from_elements(B, {v}));
          ideals.push_back(ideal_from_elements(
              B, {B->basis_vec(i), B->basis_vec(j)}));
        }
      }
      // in the Gorenstein Artinian quotient, ann(ann(I)) = I for every I
      for (const auto& I : ideals) {
        Submodule lhs = transporter(Submodule::zero(RB),
                                    transporter(Submodule::zero(RB), I));
        CHECK(lhs == I);
      }
      // and in the truncation, (J:(J:I)) = I + J for the irreducible J
      auto RA = FiniteModule::regular(A);
      for (const char* is :
           {"(0)", "t^6", "(t^2,t^3)", "t^2", "(t^3,t^4)", "t^2+t^3", "t^4"}) {
        Submodule I = parse_ideal(A, is);
        Submodule lhs = transporter(cut, transporter(cut, I));
        CHECK(lhs == sub_sum(I, cut));
      }
    }
  }
}

TEST_CASE("surjection compatibility across precisions") {
  auto m = model23();
  auto A1 = m->truncation(9), A2 = m->truncation(14);
  Mat pi = m->surjection(A2, A1);
  auto R1 = FiniteModule::regular(A1);
  auto R2 = FiniteModule::regular(A2);
  Submodule I2 = parse_ideal(A2, "(t^6,t^7)");
  Submodule J2 = parse_ideal(A2, "(t^4,t^5)");
  Submodule C2 = transporter(I2, J2);
  Submodule I1 = map_submodule(I2, pi, R1);
  Submodule J1 = map_submodule(J2, pi, R1);
  Submodule C1 = transporter(I1, J1);
  // image of the colon is contained in the colon of the images; equality
  // holds above the stabilization bound
  CHECK(C1.contains(map_submodule(C2, pi, R1)));
  CHECK(map_submodule(C2, pi, R1) == C1);
}

TEST_CASE("quotient algebra of the cubic") {
  auto model = cubic_model(7);
  auto A = model->truncation(3);
  CHECK(A->dim() == 27);
  // quotient by (y, z) is k[x]/(x^3)
  Submodule yz = parse_ideal(A, "(y,z)");
  QuotientAlgebra Q = quotient_algebra(A, yz);
  CHECK(Q.algebra->dim() == 3);
  CHECK(Q.algebra->nilpotency_index() == 3);
}

TEST_CASE("expression parse errors are positioned") {
  auto A = model23()->truncation(8);
  CHECK_THROWS_AS(parse_element(A, "t^-1"), ParseError);
  CHECK_THROWS_AS(parse_element(A, "t^1"), ParseError);   // not in the ring
  CHECK_THROWS_AS(parse_element(A, "u^2"), ParseError);   // unknown variable
  CHECK_THROWS_AS(parse_element(A, "t^2 +"), ParseError);
  try {
    parse_element(A, "t^2 + q");
  } catch (const ParseError& e) {
    CHECK(e.col >= 6);
  }
}

TEST_CASE("canonical printing round-trips") {
  auto A = model345()->truncation(12);
  for (const char* s : {"(t^3,t^4,t^5)", "(t^6,t^7,t^8)", "(t^3+2*t^4)",
                        "(t^4,t^5)", "(t^3+t^4+6*t^5)"}) {
    Submodule I = parse_ideal(A, s);
    CHECK(parse_ideal(A, ideal_to_string(I)) == I);
  }
  CHECK(ideal_to_string(Submodule::full(FiniteModule::regular(A))) == "R");
  CHECK(ideal_to_string(Submodule::zero(FiniteModule::regular(A))) == "(0)");
}
