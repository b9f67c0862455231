#include "pcy/fixtures.hpp"

namespace pcy {

GradedQuiver fixture_point() {
  GradedQuiver A({"x"});
  A.add_arrow("x", "x", "e", 0);
  return A;
}

GradedQuiver fixture_a2() {
  GradedQuiver A({"x", "y"});
  A.add_arrow("y", "x", "a", 2);
  return A;
}

GradedQuiver fixture_dual_numbers() {
  GradedQuiver A({"x"});
  A.add_arrow("x", "x", "1", 0);
  A.add_arrow("x", "x", "eps", 0);
  return A;
}

ProductTable point_products() {
  ProductTable p;
  p[{0, 0}] = {{0, Rational(1)}};
  return p;
}

ProductTable dual_numbers_products() {
  ProductTable p;
  p[{0, 0}] = {{0, Rational(1)}};
  p[{0, 1}] = {{1, Rational(1)}};
  p[{1, 0}] = {{1, Rational(1)}};
  // eps.eps = 0: no entry.
  return p;
}

MultiElement sm2_from_products(const GradedQuiver& A, const ProductTable& prod,
                               Truncation t) {
  MultiElement sm = MultiElement::hochschild(A, 1, t);
  for (const auto& [ab, expansion] : prod) {
    const auto& va = A.at(ab.first);
    const auto& vb = A.at(ab.second);
    if (va.src != vb.tgt) throw std::invalid_argument("sm2: non-composable product");
    Signature s;
    s.tuples = {{va.tgt, va.src, vb.src}};
    Rational sign = sign_of_parity(va.degree);
    for (const auto& [c, coeff] : expansion)
      sm.add_entry(s, {ab.first, ab.second}, {c}, sign * coeff);
  }
  return sm;
}

ProductTable trivial_extension_products(const GradedQuiver& A, const GradedQuiver& dA,
                                        const ProductTable& Aprod) {
  // Coefficient of basis vector c in the product a.b of A basis vectors.
  auto coeff_of = [&](BasisId c, BasisId a, BasisId b) -> Rational {
    auto it = Aprod.find({a, b});
    if (it == Aprod.end()) return Rational(0);
    Rational r(0);
    for (const auto& [cc, v] : it->second)
      if (cc == c) r += v;
    return r;
  };
  ProductTable p;
  for (BasisId u = 0; u < dA.dim(); ++u) {
    for (BasisId v = 0; v < dA.dim(); ++v) {
      const auto& bu = dA.at(u);
      const auto& bv = dA.at(v);
      if (bu.src != bv.tgt) continue;
      if (!bu.is_dual && !bv.is_dual) {
        auto it = Aprod.find({u, v});
        if (it != Aprod.end() && !it->second.empty()) p[{u, v}] = it->second;
      } else if (bu.is_dual && !bv.is_dual) {
        // f.b with f = c*: (f.b)(x) = f(b.x), so f.b = sum_x <c*, b.x> x*.
        std::vector<std::pair<BasisId, Rational>> out;
        for (BasisId w = 0; w < dA.dim(); ++w) {
          if (!dA.at(w).is_dual) continue;
          Rational r = coeff_of(bu.dual_of, v, dA.at(w).dual_of);
          if (r != 0) out.push_back({w, r});
        }
        if (!out.empty()) p[{u, v}] = out;
      } else if (!bu.is_dual && bv.is_dual) {
        // a.g with g = c*: (a.g)(x) = g(x.a), so a.g = sum_x <c*, x.a> x*.
        std::vector<std::pair<BasisId, Rational>> out;
        for (BasisId w = 0; w < dA.dim(); ++w) {
          if (!dA.at(w).is_dual) continue;
          Rational r = coeff_of(bv.dual_of, dA.at(w).dual_of, u);
          if (r != 0) out.push_back({w, r});
        }
        if (!out.empty()) p[{u, v}] = out;
      }
      // dual.dual = 0.
    }
  }
  (void)A;
  return p;
}

MultiElement trivial_extension_sm(const GradedQuiver& A, const GradedQuiver& dA,
                                  const ProductTable& Aprod, Truncation t) {
  return sm2_from_products(dA, trivial_extension_products(A, dA, Aprod), t);
}

}  // namespace pcy
