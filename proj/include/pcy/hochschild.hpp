// hochschild.hpp — Gerstenhaber calculus on C(A)[1] and the A-infinity
// checkers: Stasheff identities, morphism identities, almost-cyclicity and
// cyclic morphisms.
//
// Elements are hochschild-ambient MultiElements: tables of sF^{xbar} with
// inputs and output in A[1].  A-infinity structures are elements sm of
// degree 1 with [sm, sm]_G = 0; morphism data are ainf_morphism-ambient
// elements of degree 0.
#pragma once

#include "pcy/multimap.hpp"
#include "pcy/quiver.hpp"

namespace pcy {

struct AInfStructure {
  const GradedQuiver* carrier = nullptr;
  MultiElement element;  // ambient hochschild, degree 1

  static AInfStructure make(const GradedQuiver& A, MultiElement sm);
};

struct AInfMorphismData {
  std::map<ObjectId, ObjectId> object_map;
  MultiElement element;  // ambient ainf_morphism, degree 0

  static AInfMorphismData identity(const GradedQuiver& A, Truncation t);
};

// Gerstenhaber product: (sF o_G sG)^{xbar} is the sum over all insertions of
// a component of sG into one input slot of a component of sF, with the
// Koszul sign (-1)^{|sG| (|sa_1| + .. + |sa_{i-1}|)} of sG passing the
// leading inputs.
MultiElement gerstenhaber_circ(const MultiElement& sF, const MultiElement& sG);

// [sF, sG]_G = sF o_G sG - (-1)^{|sF||sG|} sG o_G sF.
MultiElement gerstenhaber_bracket(const MultiElement& sF, const MultiElement& sG);

// One failing identity instance: the signature and basis inputs where a
// residual survived, the output basis tuple carrying it, and its value.
struct ResidualEntry {
  Signature sig;
  BasisTuple inputs;
  BasisTuple outputs;
  Rational residual;
};

struct Report {
  std::vector<ResidualEntry> failures;
  long long checked = 0;  // number of identity instances evaluated
  bool pass() const { return failures.empty(); }
};

// Stasheff identities (SI) for all signatures with at most max_arity inputs,
// by direct expansion of sum sm o (id (x) sm (x) id).
Report check_stasheff(const AInfStructure& sm, int max_arity);

// Morphism identities (MI) for F : (A, smA) -> (B, smB), all signatures with
// at most max_arity inputs.
Report check_ainf_morphism(const AInfMorphismData& F, const AInfStructure& smA,
                           const AInfStructure& smB, int max_arity);

// Almost-cyclicity of sm with respect to gamma (a form on sm's carrier):
//   Gamma(sm(sa_1..sa_{n-1}), sa_n)
//     = (-1)^{|sa_n| sum |sa_i|} Gamma(sm^{xbar.sigma^{-1}}(sa_n, sa_1..sa_{n-2}), sa_{n-1}).
Report check_almost_cyclic(const AInfStructure& sm, const BilinearForm& gamma,
                           int max_arity);

// Cyclic-morphism equations for F between almost cyclic structures: arity-1
// compatibility Gamma(F1(sa), F1(sb)) = gamma(sa, sb), and for each n >= 3
// and composable cycle (sa_1..sa_n) the vanishing of
//   sum_i Gamma(F(sa_1..sa_i), F(sa_{i+1}..sa_n))
// grouped by the object at the cut (the index sets Z, Z').
Report check_cyclic_morphism(const AInfMorphismData& F, const BilinearForm& gamma,
                             const BilinearForm& Gamma, int max_arity);

}  // namespace pcy
