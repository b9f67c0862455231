#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcy/multimap.hpp"

using namespace pcy;

// F1: one object, one endomorphism e of degree 0.
static GradedQuiver make_point() {
  GradedQuiver A({"x"});
  A.add_arrow("x", "x", "e", 0);
  return A;
}

// F3: dual numbers k[eps]/eps^2, basis {1, eps} in degree 0.
static GradedQuiver make_dual_numbers() {
  GradedQuiver A({"x"});
  A.add_arrow("x", "x", "1", 0);
  A.add_arrow("x", "x", "eps", 0);
  return A;
}

static Signature sig1(std::vector<ObjectId> t) {
  Signature s;
  s.tuples = {std::move(t)};
  return s;
}

static Signature sig2(std::vector<ObjectId> a, std::vector<ObjectId> b) {
  Signature s;
  s.tuples = {std::move(a), std::move(b)};
  return s;
}

TEST_CASE("eval_component basics") {
  GradedQuiver F3 = make_dual_numbers();
  Truncation t{4, 3};
  // [TRIVIAL] zero element -> empty list.
  MultiElement z = MultiElement::hochschild(F3, 1, t);
  CHECK(z.eval_component(sig1({"x", "x", "x"}), {0, 1}).empty());
  CHECK(z.is_zero());

  // [DERIVED] sm2 of the dual numbers: sm2(s a, s b) = (-1)^{|a|} s(ab); all
  // degrees 0, so every product entry has coefficient +1.
  MultiElement m2 = MultiElement::hochschild(F3, 1, t);
  BasisId one = 0, eps = 1;
  Signature s = sig1({"x", "x", "x"});
  m2.add_entry(s, {one, one}, {one}, Rational(1));
  m2.add_entry(s, {one, eps}, {eps}, Rational(1));
  m2.add_entry(s, {eps, one}, {eps}, Rational(1));
  // eps^2 = 0: no entry.
  auto row = m2.eval_component(s, {one, eps});
  REQUIRE(row.size() == 1);
  CHECK(row[0].first == BasisTuple{eps});
  CHECK(row[0].second == Rational(1));
  CHECK(m2.eval_component(s, {eps, eps}).empty());

  // [TRIVIAL] out-of-truncation signature -> entry dropped, eval empty.
  Signature big = sig1({"x", "x", "x", "x", "x", "x", "x"});
  m2.add_entry(big, {one, one, one, one, one, one}, {one}, Rational(1));
  CHECK(m2.eval_component(big, {one, one, one, one, one, one}).empty());
}

TEST_CASE("validate_entry rejects bad entries") {
  GradedQuiver F3 = make_dual_numbers();
  GradedQuiver A2({"x", "y"});
  A2.add_arrow("y", "x", "a", 2);
  Truncation t{4, 3};
  MultiElement E = MultiElement::hochschild(F3, 1, t);
  // Arity mismatch.
  CHECK_THROWS(E.add_entry(sig1({"x", "x", "x"}), {0}, {0}, Rational(1)));
  // Degree inconsistency: |sm| = 1 forces out - in = 1; here 0 - (-2) = 2.
  MultiElement E0 = MultiElement::hochschild(F3, 0, t);
  CHECK_THROWS(E0.add_entry(sig1({"x", "x", "x"}), {0, 0}, {0}, Rational(1)));
  // Object mismatch: arrow a lives in yAx, not xAx.
  MultiElement E2 = MultiElement::hochschild(A2, 1, t);
  Signature sxx = sig1({"x", "x", "x"});
  CHECK_THROWS(E2.add_entry(sxx, {0, 0}, {0}, Rational(1)));
}

TEST_CASE("cyclic_act: identity and order") {
  GradedQuiver F3 = make_dual_numbers();
  Truncation t{3, 3};
  std::mt19937 rng(42);
  MultiElement E = random_element(Ambient::necklace, F3, nullptr, {}, 1, 0, t, rng);
  REQUIRE(!E.is_zero());
  // [TRIVIAL] identity leaves E unchanged.
  for (int n = 2; n <= 3; ++n)
    CHECK(cyclic_act(Permutation::identity(n), E) == E);
  // [TRIVIAL] tau^n = id acting n times returns E exactly.
  for (int n = 2; n <= 3; ++n) {
    MultiElement R = E;
    for (int k = 0; k < n; ++k) R = cyclic_act(Permutation::cycle(n), R);
    CHECK(R == E);
  }
  // Hochschild ambient rejects the action.
  MultiElement H = MultiElement::hochschild(F3, 1, t);
  CHECK_THROWS(cyclic_act(Permutation::cycle(2), H));
  // Non-cyclic permutations rejected (n = 3 transposition).
  CHECK_THROWS(cyclic_act(Permutation({1, 0, 2}), E));
}

TEST_CASE("cyclic_act: hand-computed signs on one-arrow quivers") {
  Truncation t{4, 3};
  // [DERIVED] all tokens even: arrow degree 1, d = 1 gives input tokens 0 and
  // output tokens 2; the n = 2 swap transports with sign +1.
  GradedQuiver U({"x"});
  U.add_arrow("x", "x", "u", 1);
  {
    Signature s = sig2({"x", "x"}, {"x"});
    Signature sr = sig2({"x"}, {"x", "x"});
    // map degree: outputs 2+2, inputs 0 -> 4; stored degree = 4 - (1+1) = 2.
    MultiElement E = MultiElement::necklace(U, 1, 2, t);
    E.add_entry(s, {0}, {0, 0}, Rational(1));
    MultiElement R = cyclic_act(Permutation::cycle(2), E);
    auto row = R.eval_component(sr, {0});
    REQUIRE(row.size() == 1);
    CHECK(row[0].second == Rational(1));
  }
  // [DERIVED] odd input tokens crossing: F1 with d = 0, symmetric signature
  // ((x,x),(x,x)); the swap crosses two degree -1 inputs (sign -1) and two
  // degree 0 outputs (sign +1), so the swap negates the entry.
  GradedQuiver P = make_point();
  {
    Signature s = sig2({"x", "x"}, {"x", "x"});
    // map degree: outputs 0+0, inputs -1-1 -> 2; stored degree = 2 - 1 = 1.
    MultiElement E = MultiElement::necklace(P, 0, 1, t);
    E.add_entry(s, {0, 0}, {0, 0}, Rational(1));
    MultiElement R = cyclic_act(Permutation::cycle(2), E);
    auto row = R.eval_component(s, {0, 0});
    REQUIRE(row.size() == 1);
    CHECK(row[0].second == Rational(-1));
    CHECK(!check_cyclic_invariance(E));
    // Its symmetrization is the zero projection.
    CHECK(symmetrize(E).is_zero());
  }
}

TEST_CASE("cyclic_act is a group action on random elements") {
  GradedQuiver F3 = make_dual_numbers();
  Truncation t{3, 3};
  std::mt19937 rng(7);
  for (Degree d : {0, 1}) {
    MultiElement E =
        random_element(Ambient::necklace, F3, nullptr, {}, d, 1 - d, t, rng);
    for (int n = 2; n <= 3; ++n) {
      Permutation c = Permutation::cycle(n);
      Permutation tau = Permutation::identity(n);
      for (int a = 0; a < n; ++a) {
        Permutation rho = Permutation::identity(n);
        for (int b = 0; b < n; ++b) {
          // act(tau o rho) = act(tau, act(rho, .)); tau o rho applies rho first.
          Permutation prod = rho.compose(tau);
          CHECK(cyclic_act(prod, E) == cyclic_act(tau, cyclic_act(rho, E)));
          rho = rho.compose(c);
        }
        tau = tau.compose(c);
      }
    }
  }
}

TEST_CASE("symmetrize: projection onto the invariants") {
  GradedQuiver F3 = make_dual_numbers();
  Truncation t{3, 3};
  std::mt19937 rng(11);
  for (int seed = 0; seed < 4; ++seed) {
    MultiElement E = random_element(Ambient::necklace, F3, nullptr, {}, 1, 0, t, rng);
    MultiElement S = symmetrize(E);
    // Image is invariant.
    CHECK(check_cyclic_invariance(S));
    // [TRIVIAL] idempotent projection.
    CHECK(symmetrize(S) == S);
    // Fixed points are their own symmetrization (other inclusion).
    MultiElement S2 = symmetrize(S);
    CHECK(S2 == S);
  }
  // [DERIVED] single-signature seed on n = 2: half-sum of seed and rotation.
  GradedQuiver U({"x"});
  U.add_arrow("x", "x", "u", 1);
  Signature s = sig2({"x", "x"}, {"x"});
  MultiElement E = MultiElement::necklace(U, 1, 2, t);
  E.add_entry(s, {0}, {0, 0}, Rational(1));
  MultiElement S = symmetrize(E);
  auto row = S.eval_component(s, {0});
  REQUIRE(row.size() == 1);
  CHECK(row[0].second == Rational(1, 2));
  Signature sr = sig2({"x"}, {"x", "x"});
  auto row2 = S.eval_component(sr, {0});
  REQUIRE(row2.size() == 1);
  CHECK(row2[0].second == Rational(1, 2));
}

TEST_CASE("morphism ambient: action and invariance") {
  GradedQuiver P = make_point();
  GradedQuiver F3 = make_dual_numbers();
  std::map<ObjectId, ObjectId> idm{{"x", "x"}};
  Truncation t{3, 3};
  std::mt19937 rng(3);
  // Outputs of a morphism element live in B = F3 via Phi0.
  MultiElement E = random_element(Ambient::morphism, P, &F3, idm, 0, 0, t, rng);
  REQUIRE(!E.is_zero());
  MultiElement S = symmetrize(E);
  CHECK(check_cyclic_invariance(S));
  for (int n = 2; n <= 3; ++n) {
    MultiElement R = E;
    for (int k = 0; k < n; ++k) R = cyclic_act(Permutation::cycle(n), R);
    CHECK(R == E);
  }
}

TEST_CASE("mixed ambient: entry validation for both parts") {
  GradedQuiver P = make_point();
  GradedQuiver F3 = make_dual_numbers();
  std::map<ObjectId, ObjectId> idm{{"x", "x"}};
  Truncation t{4, 3};
  // A-part, n = 2: outputs (B[-d] slot, A[-d] slot).  d = 1: B token degree
  // |b|+1 = 1, A token degree |e|+1 = 1; inputs -1 each.
  Signature sA = sig2({"x", "x"}, {"x", "x"});
  sA.part = MixedPart::A_part;
  // map degree 1+1-(-2) = 4 -> stored degree 4 - 2 = 2.
  MultiElement EA = MultiElement::mixed(P, F3, idm, 1, 2, t);
  EA.add_entry(sA, {0, 0}, {1, 0}, Rational(1));
  CHECK(!EA.is_zero());
  // B-part, same signature: last slot is b*[-1] with token degree -|b|+1 = 1.
  Signature sB = sA;
  sB.part = MixedPart::B_part;
  MultiElement EB = MultiElement::mixed(P, F3, idm, 1, 2, t);
  EB.add_entry(sB, {0, 0}, {1, 1}, Rational(1));
  CHECK(!EB.is_zero());
  // The two parts are distinct signatures: EA has nothing at sB.
  CHECK(EA.eval_component(sB, {0, 0}).empty());
  // No rotation action on the unsplit mixed space.
  CHECK_THROWS(cyclic_act(Permutation::cycle(2), EA));
}

TEST_CASE("linear_combine") {
  GradedQuiver F3 = make_dual_numbers();
  Truncation t{3, 3};
  std::mt19937 rng(5);
  MultiElement E = random_element(Ambient::necklace, F3, nullptr, {}, 1, 0, t, rng);
  REQUIRE(!E.is_zero());
  // [TRIVIAL] E - E = 0, 0*E = 0, 2*E doubles entries.
  CHECK(linear_combine({Rational(1), Rational(-1)}, {&E, &E}).is_zero());
  CHECK(linear_combine({Rational(0)}, {&E}).is_zero());
  MultiElement D = linear_combine({Rational(2)}, {&E});
  const auto& sig = E.components().begin()->first;
  const auto& in = E.components().begin()->second.begin()->first;
  auto r1 = E.eval_component(sig, in);
  auto r2 = D.eval_component(sig, in);
  REQUIRE(r1.size() == r2.size());
  for (size_t i = 0; i < r1.size(); ++i) CHECK(r2[i].second == 2 * r1[i].second);
  // Shape mismatch rejected.
  MultiElement H = MultiElement::hochschild(F3, 0, t);
  CHECK_THROWS(linear_combine({Rational(1), Rational(1)}, {&E, &H}));
}
