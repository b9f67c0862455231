// fixtures.hpp — small example quivers and structures shared by the test
// suites and the example generator.
#pragma once

#include "pcy/multimap.hpp"

namespace pcy {

// One object x with a single endomorphism e of degree 0 (e acts as the
// multiplication unit in product tables built on this quiver).
GradedQuiver fixture_point();

// Two objects x, y with one arrow a : x -> y of degree 2 (no composable
// pairs, so every multiplication on it is zero).
GradedQuiver fixture_a2();

// Dual numbers k[eps]/eps^2: one object, basis {1, eps} in degree 0.
GradedQuiver fixture_dual_numbers();

// Sparse multiplication table: (a, b) -> expansion of a.b in the basis.
// a in xAy and b in yAz compose to a.b in xAz.
using ProductTable =
    std::map<std::pair<BasisId, BasisId>, std::vector<std::pair<BasisId, Rational>>>;

// Product tables of the fixture algebras (unit-bearing for point and dual
// numbers, empty for a2).
ProductTable point_products();
ProductTable dual_numbers_products();

// The hochschild element sm2 of an associative product: the table entry at
// ((x,y,z)), inputs (sa, sb), is (-1)^{|a|} times the expansion of a.b.
MultiElement sm2_from_products(const GradedQuiver& A, const ProductTable& prod,
                               Truncation t);

// Product table of the trivial extension dA = A (+) A*[d-1] of a product
// table on A: A.A as given, f.b = sum_x <f, b.x> x*, a.g = sum_x <g, x.a> x*,
// duals multiply to zero.  Intended for degree-0 quivers A (no Koszul signs
// arise); validity is established by check_stasheff in the tests.
ProductTable trivial_extension_products(const GradedQuiver& A, const GradedQuiver& dA,
                                        const ProductTable& Aprod);

// sm2 of the trivial extension on dA = boundary_quiver(A, d).
MultiElement trivial_extension_sm(const GradedQuiver& A, const GradedQuiver& dA,
                                  const ProductTable& Aprod, Truncation t);

}  // namespace pcy
