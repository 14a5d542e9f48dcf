#include "doctest.h"

#include "clint/field.hpp"
#include "clint/matrix.hpp"

using namespace clint;

TEST_CASE("prime field arithmetic") {
  Field F(5);
  CHECK(F.size() == 5);
  CHECK(F.add(3, 4) == 2);
  CHECK(F.mul(3, 4) == 2);
  CHECK(F.neg(2) == 3);
  CHECK(F.inv(3) == 2);
  CHECK(F.from_int(-1) == 4);
  CHECK_THROWS_AS(F.inv(0), UsageError);
}

TEST_CASE("extension field axioms hold exhaustively") {
  for (auto [p, d] : {std::pair{2, 2}, {3, 2}, {5, 2}, {2, 3}}) {
    Field F(p, d);
    int q = F.size();
    // field laws on all pairs/triples (q is tiny)
    for (Elt a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      for (Elt b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (Elt c = 0; c < q; ++c) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
      }
    }
    // Frobenius is the p-power map and has order d
    for (Elt a = 0; a < q; ++a) {
      CHECK(F.frobenius(a) == F.pow(a, p));
      Elt r = a;
      for (int i = 0; i < d; ++i) r = F.frobenius(r);
      CHECK(r == a);
      CHECK(F.frobenius(F.inverse_frobenius_pow(a, 1)) == a);
    }
  }
}

TEST_CASE("field size cap") {
  CHECK_THROWS_AS(Field(257), ResourceError);
  CHECK_THROWS_AS(Field(4, 1), ConstructionError);
}

TEST_CASE("rref and kernel") {
  Field F(3);
  Mat M(3, 4);
  // rows: (1,2,0,1), (2,1,1,0), (0,0,1,1)
  M.set_row(0, {1, 2, 0, 1});
  M.set_row(1, {2, 1, 1, 0});
  M.set_row(2, {0, 0, 1, 1});
  Mat R = M;
  auto piv = rref(F, R);
  CHECK(piv.size() == R.rows);
  // kernel vectors are annihilated
  Mat K = kernel(F, M);
  CHECK(K.rows + static_cast<int>(piv.size()) == 4);
  for (int r = 0; r < K.rows; ++r) {
    Vec v = K.row(r);
    Vec img = apply(F, M, v);
    for (Elt x : img) CHECK(x == 0);
  }
}

TEST_CASE("echelon basis reduce/insert") {
  Field F(2);
  EchelonBasis eb(F, 3);
  CHECK(eb.insert({1, 1, 0}));
  CHECK(eb.insert({0, 1, 1}));
  CHECK(!eb.insert({1, 0, 1}));  // dependent
  CHECK(eb.dim() == 2);
  CHECK(eb.contains({1, 0, 1}));
  CHECK(!eb.contains({1, 0, 0}));
  Mat nf = eb.normal_form();
  CHECK(nf.rows == 2);
  CHECK(nf.at(0, 0) == 1);
}
