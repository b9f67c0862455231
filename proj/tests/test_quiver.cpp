#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcy/quiver.hpp"

using namespace pcy;

// F1: one object, one endomorphism e of degree 0.
static GradedQuiver make_point() {
  GradedQuiver A({"x"});
  A.add_arrow("x", "x", "e", 0);
  return A;
}

// A2 quiver: two objects, one arrow a: x -> y of degree 2.
static GradedQuiver make_a2() {
  GradedQuiver A({"x", "y"});
  A.add_arrow("y", "x", "a", 2);
  return A;
}

// F3: dual numbers k[eps]/eps^2, basis {1, eps} in degree 0.
static GradedQuiver make_dual_numbers() {
  GradedQuiver A({"x"});
  A.add_arrow("x", "x", "1", 0);
  A.add_arrow("x", "x", "eps", 0);
  return A;
}

TEST_CASE("dual_quiver") {
  // [TRIVIAL] point: one dual vector of degree 0.
  GradedQuiver D = dual_quiver(make_point());
  CHECK(D.dim() == 1);
  CHECK(D.at(0).degree == 0);
  CHECK(D.at(0).name == "e*");

  // [DERIVED] A2: a in yA_x of degree 2 dualizes to a* in xA*_y, degree -2.
  GradedQuiver D2 = dual_quiver(make_a2());
  CHECK(D2.dim() == 1);
  CHECK(D2.at(0).tgt == "x");
  CHECK(D2.at(0).src == "y");
  CHECK(D2.at(0).degree == -2);

  // [TRIVIAL] double dual: bases in bijection with equal degrees.
  GradedQuiver DD = dual_quiver(D2);
  CHECK(DD.dim() == 1);
  CHECK(DD.at(0).tgt == "y");
  CHECK(DD.at(0).src == "x");
  CHECK(DD.at(0).degree == 2);
}

TEST_CASE("boundary_quiver degrees") {
  GradedQuiver A = make_point();
  // [DERIVED] |e*[d-1]| = -0 - (d-1): d=1 -> 0, d=0 -> 1.
  GradedQuiver B1 = boundary_quiver(A, 1);
  REQUIRE(B1.dim() == 2);
  CHECK(B1.at(0).degree == 0);
  CHECK(B1.at(1).degree == 0);
  CHECK(B1.at(1).is_dual);
  GradedQuiver B0 = boundary_quiver(A, 0);
  CHECK(B0.at(1).degree == 1);

  // [TRIVIAL] dimension doubles for symmetric dims.
  GradedQuiver F3 = make_dual_numbers();
  CHECK(boundary_quiver(F3, 1).dim() == 4);

  // Bookkeeping invariant: dual degree = -(orig) - (d-1) for every vector.
  for (Degree d : {-1, 0, 1, 2}) {
    GradedQuiver Bd = boundary_quiver(F3, d);
    for (BasisId i = 0; i < Bd.dim(); ++i) {
      const auto& v = Bd.at(i);
      if (v.is_dual) CHECK(v.degree == -F3.at(v.dual_of).degree - (d - 1));
    }
  }
}

TEST_CASE("mixed_quiver") {
  GradedQuiver A = make_point();
  GradedQuiver F3 = make_dual_numbers();
  // [TRIVIAL] B = A, Phi0 = id equals boundary_quiver.
  std::map<ObjectId, ObjectId> idm{{"x", "x"}};
  CHECK(mixed_quiver(A, A, idm, 1) == boundary_quiver(A, 1));

  // [DERIVED] A = F1, B = F3, d = 1, collapsing object map: basis
  // {e, 1*, eps*} all in degree 0.
  GradedQuiver Q = mixed_quiver(A, F3, idm, 1);
  REQUIRE(Q.dim() == 3);
  CHECK(Q.at(0).name == "e");
  CHECK(Q.at(1).name == "1*");
  CHECK(Q.at(2).name == "eps*");
  for (BasisId i = 0; i < 3; ++i) CHECK(Q.at(i).degree == 0);

  // [TRIVIAL] B with empty homs: result equals A.
  GradedQuiver E({"x"});
  GradedQuiver QE = mixed_quiver(A, E, idm, 1);
  CHECK(QE.dim() == A.dim());
}

TEST_CASE("eval_form: natural form on F1, d = 1") {
  GradedQuiver A = make_point();
  Degree d = 1;
  GradedQuiver dA = boundary_quiver(A, d);
  BilinearForm G = BilinearForm::natural(A, dA, d);
  BasisId e = 0, es = 1;
  // [DERIVED] Gamma(te*, se) = (-1)^{|te*|+1} e*(e); |te*| = |e*[d-1]| - 1 = -1.
  CHECK(G.shifted_degree(es) == -1);
  CHECK(G.eval(es, e) == Rational(1));
  // Graded antisymmetry: Gamma(se, te*) = -(-1)^{|se||te*|} Gamma(te*, se).
  CHECK(G.eval(e, es) == -sign_of_parity((long long)G.shifted_degree(e) *
                                         G.shifted_degree(es)) *
                             G.eval(es, e));
  // [PAPER] zero on A(x)A and on dual(x)dual.
  CHECK(G.eval(e, e) == Rational(0));
  CHECK(G.eval(es, es) == Rational(0));
  CHECK(G.is_nondegenerate());
}

TEST_CASE("eval_form: antisymmetry as exact identity on F3, several d") {
  GradedQuiver F3 = make_dual_numbers();
  for (Degree d : {-1, 0, 1, 2}) {
    GradedQuiver dA = boundary_quiver(F3, d);
    BilinearForm G = BilinearForm::natural(F3, dA, d);
    for (BasisId u = 0; u < dA.dim(); ++u) {
      for (BasisId v = 0; v < dA.dim(); ++v) {
        Rational lhs = G.eval(u, v);
        Rational rhs = -sign_of_parity((long long)G.shifted_degree(u) *
                                       G.shifted_degree(v)) *
                       G.eval(v, u);
        CHECK(lhs == rhs);
      }
    }
    // [PAPER] natural form on a Hom-finite quiver is nondegenerate.
    CHECK(G.is_nondegenerate());
  }
}

TEST_CASE("mixed form degeneracy") {
  GradedQuiver F3 = make_dual_numbers();
  std::map<ObjectId, ObjectId> idm{{"x", "x"}};
  GradedQuiver Q = mixed_quiver(F3, F3, idm, 1);
  // [PAPER] Phi = 0 on a nonzero quiver: mixed form degenerate.
  QuiverHomMap zero;
  zero.object_map = idm;
  BilinearForm G0 = BilinearForm::mixed(F3, F3, Q, zero, 1);
  CHECK(!G0.is_nondegenerate());
  // Phi = id: nondegenerate (agrees with the natural form).
  BilinearForm Gid = BilinearForm::mixed(F3, F3, Q, QuiverHomMap::identity(F3), 1);
  CHECK(Gid.is_nondegenerate());
  // [TRIVIAL] zero quiver vacuously nondegenerate.
  GradedQuiver Z({"x"});
  GradedQuiver dZ = boundary_quiver(Z, 1);
  CHECK(BilinearForm::natural(Z, dZ, 1).is_nondegenerate());
}

TEST_CASE("rational_matrix_rank") {
  CHECK(rational_matrix_rank({{Rational(1), Rational(2)},
                              {Rational(2), Rational(4)}}) == 1);
  CHECK(rational_matrix_rank({{Rational(1, 3), Rational(0)},
                              {Rational(0), Rational(5, 7)}}) == 2);
}
