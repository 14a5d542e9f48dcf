#include "doctest.h"

#include "clint/axioms.hpp"
#include "clint/closure.hpp"
#include "clint/exprs.hpp"
#include "clint/semigroup.hpp"

using namespace clint;

namespace {

ModelPtr sg_model(std::vector<int> gens, int p, int d = 1) {
  return RingModel::semigroup_ring(
      make_field(p, d), std::make_shared<NumericalSemigroup>(std::move(gens)));
}

ModelPtr cubic_model(int p) {
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

TEST_CASE("identity closure") {
  auto A = sg_model({2, 3}, 5)->truncation(8);
  auto cl = identity_closure();
  Submodule I = parse_ideal(A, "(t^4,t^5)");
  CHECK(cl->close(I, I.module()) == I);
}

TEST_CASE("integral closure fixtures in semigroup rings") {
  auto m23 = sg_model({2, 3}, 5);
  auto A = m23->truncation(12);
  auto cl = integral_closure();
  CHECK(cl->close(parse_ideal(A, "t^4"), FiniteModule::regular(A)) ==
        parse_ideal(A, "(t^4,t^5)"));
  for (int a = 1; a < 5; ++a)
    CHECK(cl->close(parse_ideal(A, "t^4+" + std::to_string(a) + "*t^5"),
                    FiniteModule::regular(A)) == parse_ideal(A, "(t^4,t^5)"));
  CHECK(cl->close(Submodule::full(FiniteModule::regular(A)),
                  FiniteModule::regular(A)).is_full());

  auto A345 = sg_model({3, 4, 5}, 7)->truncation(14);
  CHECK(integral_closure()->close(parse_ideal(A345, "t^5+2*t^6+3*t^7"),
                                  FiniteModule::regular(A345)) ==
        parse_ideal(A345, "(t^5,t^6,t^7)"));
}

TEST_CASE("integral closure agrees with the semigroup oracle on monomials") {
  auto S = std::make_shared<NumericalSemigroup>(std::vector<int>{3, 4, 5});
  auto model = RingModel::semigroup_ring(make_field(3), S);
  for (std::vector<int> gens : {std::vector<int>{5}, {6, 7}, {4, 9}, {3}}) {
    SemigroupIdeal I(S, gens);
    SemigroupIdeal closed = monomial_integral_closure(I);
    int N = model->precision_for(closed.generators().back());
    auto A = model->truncation(N);
    std::vector<Vec> vgens;
    for (int g : gens) vgens.push_back(A->basis_vec(A->key_index(g)));
    Submodule lin = integral_closure()->close(
        ideal_from_elements(A, vgens), FiniteModule::regular(A));
    std::vector<Vec> cgens;
    for (int g : closed.generators())
      cgens.push_back(A->basis_vec(A->key_index(g)));
    CHECK(lin == ideal_from_elements(A, cgens));
    // and stays stable one precision step up
    CHECK(close_faithful(integral_closure(),
                         ideal_from_elements(A, vgens)).value == lin);
  }
}

TEST_CASE("integral closure in k[[x,y]]/(xy)") {
  auto A = xy_model(5)->truncation(6);
  auto R = FiniteModule::regular(A);
  auto cl = integral_closure();
  // branchwise: (x^n + a y^m) closes to (x^n, y^m)
  CHECK(cl->close(parse_ideal(A, "x^2+3*y^3"), R) == parse_ideal(A, "(x^2,y^3)"));
  CHECK(cl->close(parse_ideal(A, "(x^2,y^3)"), R) == parse_ideal(A, "(x^2,y^3)"));
  CHECK(cl->close(parse_ideal(A, "x^3"), R) == parse_ideal(A, "x^3"));
  // fast ideal path matches the tensor route
  NormalizationModule V = normalization_module(A);
  auto clv = module_closure(V.V, "clV", V.unit);
  for (const char* s : {"x^2+3*y^3", "(x^2,y^3)", "x^3", "(x,y)", "x^2+y^2"}) {
    Submodule I = parse_ideal(A, s);
    CHECK(cl->close(I, R) == clv->close(I, R));
  }
}

TEST_CASE("module closures: regular and residue field") {
  auto A = sg_model({2, 3}, 3)->truncation(8);
  auto R = FiniteModule::regular(A);
  auto clR = parse_closure(A, "module[B=R]");
  auto clk = parse_closure(A, "module[B=k]");
  for (const char* s : {"(0)", "t^4", "(t^2,t^3)", "t^2+t^3", "(t^4,t^5)"}) {
    Submodule N = parse_ideal(A, s);
    // B = regular: identity closure
    CHECK(clR->close(N, R) == N);
    // B = k: N + m*M
    Submodule expect = sub_sum(N, ideal_product(maximal_ideal(A),
                                                Submodule::full(R)));
    CHECK(clk->close(N, R) == expect);
  }
}

TEST_CASE("cl_omega: parameter powers are closed, closure is nontrivial") {
  auto model = sg_model({3, 4, 5}, 5);
  auto A = model->truncation(14);
  auto R = FiniteModule::regular(A);
  auto cl = parse_closure(A, "module[B=omega]");
  for (int s = 1; s <= 3; ++s) {
    Submodule J = parse_ideal(A, "t^" + std::to_string(3 * s));
    CHECK(cl->close(J, R) == J);
  }
  bool nontrivial = false;
  for (const char* s : {"t^4", "t^5", "(t^4,t^5)", "(t^6,t^7)", "t^4+t^5"}) {
    Submodule I = parse_ideal(A, s);
    if (!(cl->close(I, R) == I)) nontrivial = true;
  }
  CHECK(nontrivial);
}

TEST_CASE("frobenius closure: regular semigroup ring is F-pure") {
  auto model = sg_model({1}, 5);
  auto A = model->truncation(6);
  auto R = FiniteModule::regular(A);
  CloseResult res = frobenius_close_ideal(parse_ideal(A, "t^2"), 2);
  CHECK(res.value == parse_ideal(A, "t^2"));
  CHECK(res.stabilized);
}

TEST_CASE("frobenius closure on the cubic: branch by p mod 3") {
  // p = 7 (1 mod 3): (y^s, z^t) Frobenius-closed
  {
    auto A = cubic_model(7)->truncation(4);
    auto R = FiniteModule::regular(A);
    for (const char* s : {"(y,z)", "(y^2,z)", "(y^2,z^2)"}) {
      Submodule I = parse_ideal(A, s);
      CloseResult res = frobenius_close_ideal(I, 2);
      CHECK(res.value == I);
      CHECK(res.stabilized);
    }
  }
  // p = 5 (2 mod 3): (y^s,z^t)^F = (x^2 y^{s-1} z^{t-1}, y^s, z^t)
  {
    auto A = cubic_model(5)->truncation(4);
    auto R = FiniteModule::regular(A);
    CloseResult r1 = frobenius_close_ideal(parse_ideal(A, "(y,z)"), 2);
    CHECK(r1.value == parse_ideal(A, "(x^2,y,z)"));
    CHECK(r1.stabilized);
    CloseResult r2 = frobenius_close_ideal(parse_ideal(A, "(y^2,z^2)"), 2);
    CHECK(r2.value == parse_ideal(A, "(x^2*y*z,y^2,z^2)"));
    CloseResult r3 = frobenius_close_ideal(parse_ideal(A, "(y^2,z)"), 2);
    CHECK(r3.value == parse_ideal(A, "(x^2*y,y^2,z)"));
  }
}

TEST_CASE("frobenius module route agrees with the direct route") {
  auto model = sg_model({2, 3}, 2);
  auto A = model->truncation(8);
  auto R = FiniteModule::regular(A);
  auto cl = frobenius_closure(2);
  for (const char* s : {"t^4", "(t^4,t^5)", "(t^6,t^7)", "t^2+t^3"}) {
    Submodule I = parse_ideal(A, s);
    CloseResult direct = frobenius_close_ideal(I, 2);
    // route through R^{1/p^e} module closures
    RootModule root = root_module(A, 1);
    auto cl1 = module_closure(root.M, "clF1", root.root_of(A->unit()));
    RootModule root2 = root_module(A, 2);
    auto cl2 = module_closure(root2.M, "clF2", root2.root_of(A->unit()));
    Submodule viaB = sub_sum(cl1->close(I, R), cl2->close(I, R));
    CHECK(direct.value == viaB);
  }
}

TEST_CASE("tight closure strategies") {
  auto m23 = sg_model({2, 3}, 5);
  auto A = m23->truncation(12);
  auto R = FiniteModule::regular(A);
  CHECK(tight_closure_dim1()->close(parse_ideal(A, "(t^6,t^7)"), R) ==
        parse_ideal(A, "(t^6,t^7)"));
  CHECK(tight_closure_dim1()->close(parse_ideal(A, "t^6"), R) ==
        parse_ideal(A, "(t^6,t^7)"));
  // socle capture with tau = m on the cubic parameter ideals
  auto C = cubic_model(5)->truncation(4);
  auto RC = FiniteModule::regular(C);
  auto star = parse_closure(C, "tight[socle,tau=m]");
  CHECK(star->close(parse_ideal(C, "(y,z)"), RC) == parse_ideal(C, "(x^2,y,z)"));
  // (y^t,z^t,(yz)^{t-1})^* = same ideal : m
  Submodule J = parse_ideal(C, "(y^2,z^2,y*z)");
  CHECK(star->close(J, RC) == parse_ideal(C, "(y^2,z^2,y*z,x^2*y,x^2*z)"));
  // in the cubic over p=5, F and * agree on these ideals
  CHECK(frobenius_close_ideal(J, 2).value == star->close(J, RC));
  // dim1 strategy refuses the two-dimensional cubic
  CHECK_THROWS_AS(tight_closure_dim1()->close(J, RC), CapabilityError);
  // missing tau
  CHECK_THROWS_AS(parse_closure(C, "tight[socle]"), UsageError);
}

TEST_CASE("comparison order: frobenius <= tight <= integral") {
  auto model = sg_model({2, 3}, 5);
  auto A = model->truncation(10);
  auto R = FiniteModule::regular(A);
  for (const char* s : {"t^4", "(t^4,t^5)", "t^4+2*t^5", "(t^6,t^7)", "t^6"}) {
    Submodule I = parse_ideal(A, s);
    Submodule f = frobenius_close_ideal(I, 2).value;
    Submodule t = tight_closure_dim1()->close(I, R);
    Submodule n = integral_closure()->close(I, R);
    CHECK(t.contains(f));
    CHECK(n.contains(t));
  }
}

TEST_CASE("closure axioms pass for the registered closures") {
  std::vector<AlgebraPtr> algebras = {sg_model({2, 3}, 2)->truncation(7),
                                      sg_model({3, 4, 5}, 3)->truncation(8),
                                      xy_model(3)->truncation(4)};
  SampleSpec spec;
  spec.algebras = algebras;
  spec.samples_per_algebra = 10;
  for (const auto& cl :
       {identity_closure(), integral_closure(), frobenius_closure(2)}) {
    auto reports = check_axioms(cl, spec);
    for (const auto& r : reports) {
      INFO(cl->traits().name << " / " << r.check << ": " << r.certificate);
      CHECK(r.passed);
    }
  }
  // a per-algebra module closure
  auto A = algebras[0];
  auto clk = parse_closure(A, "module[B=k]");
  SampleSpec one;
  one.algebras = {A};
  one.samples_per_algebra = 12;
  CHECK(all_passed(check_axioms(clk, one)));
}

TEST_CASE("the deliberately broken closure is rejected with a certificate") {
  auto A = sg_model({2, 3}, 2)->truncation(6);
  SampleSpec spec;
  spec.algebras = {A};
  spec.samples_per_algebra = 12;
  auto reports = check_axioms(broken_closure(), spec);
  bool extension_failed = false;
  for (const auto& r : reports)
    if (r.check == "extension" && !r.passed && !r.certificate.empty())
      extension_failed = true;
  CHECK(extension_failed);
}

TEST_CASE("nakayama checks") {
  std::vector<AlgebraPtr> algebras = {sg_model({2, 3}, 2)->truncation(6),
                                      sg_model({3, 4}, 2)->truncation(8)};
  SampleSpec spec;
  spec.algebras = algebras;
  spec.exhaustive_lattice = true;
  for (const auto& cl : {identity_closure(), integral_closure(),
                         frobenius_closure(2)}) {
    AxiomReport r = check_nakayama(cl, spec);
    INFO(cl->traits().name << ": " << r.certificate);
    CHECK(r.passed);
    CHECK(r.instances > 0);
  }
  // module closure cl_B for a finite B
  auto A = algebras[0];
  SampleSpec one;
  one.algebras = {A};
  one.exhaustive_lattice = true;
  CHECK(check_nakayama(parse_closure(A, "module[B=k]"), one).passed);
}

TEST_CASE("frobenius stabilization flag is honest") {
  auto A = sg_model({2, 3}, 5)->truncation(10);
  Submodule I = parse_ideal(A, "(t^6,t^7)");
  CloseResult r = frobenius_close_ideal(I, 3);
  CHECK(r.stabilized);
  // closing with e_max and e_max+1 agrees once stabilized
  CHECK(frobenius_close_ideal(I, 2).value == r.value);
}
