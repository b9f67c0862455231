// multimap.hpp — sparse-tensor representation of the ambient graded spaces
// of multilinear elements:
//
//   hochschild : C(A)[1], components sF^{xbar} : A[1]^{(x)xbar} -> A[1]
//                (output stored in A[1], i.e. the "disc with bold output"
//                normal form of eq. shift-disc); n = 1.
//   necklace   : Multi^{xbarbar}(Bar(A)[d])[d+1], components
//                F^{xbarbar} : A[1]^{(x)xbar^1} (x) ... (x) A[1]^{(x)xbar^n}
//                  -> A[-d] (x) ... (x) A[-d]  (n outputs);
//                the table stores F, the [d+1]-shift lives in `degree`.
//   mixed      : B_bullet(A[1], B[-d])[d+1], stored unsplit: outputs 1..n-1
//                in B[-d]; the last slot lands in A[-d] (+) B*[-1] and the
//                per-signature part flag records which summand.  For the
//                B-part the last output stores the BasisId of the underlying
//                B basis vector b (the functional b*), token degree -|b|+1.
//   morphism   : Multi^{xbarbar}(A[1], B[-d])[d+1], components with all n
//                outputs in B[-d] (the carrier of pre-CY morphisms).
//   ainf_morphism : components F^{xbar} : A[1]^{(x)xbar} -> B[1] of an
//                A-infinity morphism (n = 1, degree 0, objects via Phi0).
//
// Components are sparse maps keyed by basis tuples; absent = zero.  Inputs
// are always stored in the [1]-shifted basis (token degree |a| - 1); output
// token degrees depend on the ambient as above.  Degree consistency is
// asserted on insertion.
#pragma once

#include <functional>
#include <map>
#include <random>
#include <tuple>

#include "pcy/quiver.hpp"

namespace pcy {

enum class Ambient { hochschild, necklace, mixed, morphism, ainf_morphism };
enum class MixedPart { A_part, B_part };

struct Signature {
  std::vector<std::vector<ObjectId>> tuples;
  // Only meaningful for Ambient::mixed.
  MixedPart part = MixedPart::A_part;

  int n() const { return static_cast<int>(tuples.size()); }
  int lg(int i) const { return static_cast<int>(tuples[i].size()); }
  // Number of input slots: sum of (lg(xbar^i) - 1).
  int total_inputs() const;
  const ObjectId& lt(int i) const { return tuples[i].front(); }
  const ObjectId& rt(int i) const { return tuples[i].back(); }

  // Signature with the tuple blocks rotated: block i of the result is block
  // tau(i) of *this (0-based), tau in C_n.
  Signature rotated(const Permutation& tau) const;

  auto key() const { return std::tie(tuples, part); }
  bool operator<(const Signature& o) const { return key() < o.key(); }
  bool operator==(const Signature& o) const { return key() == o.key(); }
};

using BasisTuple = std::vector<BasisId>;
// input tuple -> (output tuple -> coefficient)
using ComponentTable = std::map<BasisTuple, std::map<BasisTuple, Rational>>;

struct Truncation {
  int max_inputs = 4;   // N: total input count
  int max_outputs = 3;  // M: output tuple length
  bool admits(const Signature& s) const {
    return s.total_inputs() <= max_inputs && s.n() <= max_outputs;
  }
  bool operator==(const Truncation& o) const {
    return max_inputs == o.max_inputs && max_outputs == o.max_outputs;
  }
};

class MultiElement {
public:
  MultiElement() = default;
  // B may be null for hochschild/necklace.  Phi0 is required for
  // mixed/morphism ambients (output objects live in B via Phi0).
  MultiElement(Ambient ambient, const GradedQuiver* A, const GradedQuiver* B,
               std::map<ObjectId, ObjectId> Phi0, Degree d, Degree degree,
               Truncation trunc);

  static MultiElement hochschild(const GradedQuiver& A, Degree degree, Truncation t);
  static MultiElement necklace(const GradedQuiver& A, Degree d, Degree degree,
                               Truncation t);
  static MultiElement mixed(const GradedQuiver& A, const GradedQuiver& B,
                            std::map<ObjectId, ObjectId> Phi0, Degree d,
                            Degree degree, Truncation t);
  static MultiElement morphism(const GradedQuiver& A, const GradedQuiver& B,
                               std::map<ObjectId, ObjectId> Phi0, Degree d,
                               Degree degree, Truncation t);
  static MultiElement ainf_morphism(const GradedQuiver& A, const GradedQuiver& B,
                                    std::map<ObjectId, ObjectId> Phi0,
                                    Degree degree, Truncation t);

  Ambient ambient() const { return ambient_; }
  const GradedQuiver& A() const { return *A_; }
  const GradedQuiver& B() const { return *B_; }
  const GradedQuiver* Bptr() const { return B_; }
  const std::map<ObjectId, ObjectId>& Phi0() const { return Phi0_; }
  Degree d() const { return d_; }
  // Degree of the stored shifted element (sF / s_{d+1}F).
  Degree degree() const { return degree_; }
  void set_degree(Degree deg) { degree_ = deg; }
  const Truncation& truncation() const { return trunc_; }
  const std::map<Signature, ComponentTable>& components() const { return comps_; }

  // Degree of the underlying map F (table semantics).
  Degree map_degree() const;

  // Token degrees as stored: inputs in A[1]; outputs per ambient.
  Degree input_token_degree(BasisId a) const;
  Degree output_token_degree(const Signature& sig, int slot, BasisId b) const;

  // Object-level validation of an entry against the signature; throws on
  // mismatch (degree inconsistency included).
  void validate_entry(const Signature& sig, const BasisTuple& in,
                      const BasisTuple& out) const;

  // Adds c to the coefficient of `out` in F(in) at `sig`; silently drops
  // entries beyond the truncation; prunes exact zeros.
  void add_entry(const Signature& sig, const BasisTuple& in,
                 const BasisTuple& out, const Rational& c);

  // Stored sparse row (empty if absent or out of truncation).
  std::vector<std::pair<BasisTuple, Rational>> eval_component(
      const Signature& sig, const BasisTuple& in) const;

  bool is_zero() const;
  bool operator==(const MultiElement& o) const;

  // In-place: E += c * other (same ambient, carriers, d, degree, truncation).
  void accumulate(const Rational& c, const MultiElement& other);

  // Enumerates all basis input tuples matching a signature.
  std::vector<BasisTuple> input_tuples(const Signature& sig) const;
  // Enumerates all basis output tuples matching a signature.
  std::vector<BasisTuple> output_tuples(const Signature& sig) const;
  // Enumerates all signatures over the carrier objects within truncation
  // (no mixed-part duplication unless ambient is mixed).
  std::vector<Signature> all_signatures() const;

  bool same_shape(const MultiElement& o) const;

private:
  Ambient ambient_ = Ambient::hochschild;
  const GradedQuiver* A_ = nullptr;
  const GradedQuiver* B_ = nullptr;
  std::map<ObjectId, ObjectId> Phi0_;
  Degree d_ = 0;
  Degree degree_ = 0;
  Truncation trunc_;
  std::map<Signature, ComponentTable> comps_;
};

// The action of tau in C_n:
//   (tau . F)^{xbarbar} = tau_out^{-1} o F^{xbarbar . tau} o tau_in
// with Koszul block signs on both sides.  Defined for the necklace and
// morphism ambients (the spaces carrying the C_n action); throws for
// hochschild (C_1 only) and for the unsplit mixed space, whose distinguished
// last output slot is not rotation-equivariant.  Signatures whose block
// count differs from tau's size are copied unchanged.
MultiElement cyclic_act(const Permutation& tau, const MultiElement& E);

// True iff cyclic_act(generator, E) == E on every block length touching a
// supported signature.
bool check_cyclic_invariance(const MultiElement& E);

// Cyclic averaging (1/n) sum_{tau in C_n} tau . E per length-n block.
MultiElement symmetrize(const MultiElement& E);

// Sparse linear combination; shapes must agree.
MultiElement linear_combine(const std::vector<Rational>& coeffs,
                            const std::vector<const MultiElement*>& elements);

// Deterministic seeded random sparse element of the given shape and degree:
// for each signature within truncation, each (input, output) cell is filled
// with a small integer coefficient with probability `density`, subject to
// degree consistency.
MultiElement random_element(Ambient ambient, const GradedQuiver& A,
                            const GradedQuiver* B,
                            const std::map<ObjectId, ObjectId>& Phi0, Degree d,
                            Degree degree, Truncation t, std::mt19937& rng,
                            double density = 0.35);

}  // namespace pcy
