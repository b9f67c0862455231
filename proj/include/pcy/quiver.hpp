// quiver.hpp — finite graded quivers, dual / boundary / mixed quivers, and
// the natural and mixed bilinear forms.
//
// Conventions.  hom(x -> y) is stored under the key (y, x), matching the
// notation yA_x for the space of arrows from x to y.  Every basis vector
// carries its unshifted cohomological degree; shifted degrees (A[1], A[-d],
// B*[d], ...) are computed on demand.  Dual bases are canonical: e* is the
// functional with e*(e') = delta_{e,e'} on the chosen basis.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcy/grading.hpp"

namespace pcy {

using ObjectId = std::string;

// Index of a basis vector in GradedQuiver::basis().
using BasisId = int;

struct BasisVector {
  ObjectId tgt;  // the arrow lives in tgt A src (arrow src -> tgt)
  ObjectId src;
  std::string name;
  Degree degree = 0;
  // For boundary / mixed quivers: true if this vector is the shifted dual
  // b*[d-1] of a basis vector of the underlying quiver.
  bool is_dual = false;
  // When is_dual, the BasisId of the underlying vector in the quiver it was
  // dualized from (the "B" quiver for a mixed quiver, A itself for dA).
  BasisId dual_of = -1;
};

class GradedQuiver {
public:
  GradedQuiver() = default;
  explicit GradedQuiver(std::vector<ObjectId> objects) : objects_(std::move(objects)) {}

  const std::vector<ObjectId>& objects() const { return objects_; }
  bool has_object(const ObjectId& x) const;
  void add_object(const ObjectId& x);

  // Adds a basis vector to tgt A src and returns its id.
  BasisId add_basis(const BasisVector& v);
  BasisId add_arrow(const ObjectId& tgt, const ObjectId& src,
                    const std::string& name, Degree degree);

  const std::vector<BasisVector>& basis() const { return basis_; }
  const BasisVector& at(BasisId id) const { return basis_.at(id); }
  int dim() const { return static_cast<int>(basis_.size()); }

  // Ids of the basis of tgt A src (empty if none).
  const std::vector<BasisId>& hom(const ObjectId& tgt, const ObjectId& src) const;

  // Finds a basis vector by (tgt, src, name).
  std::optional<BasisId> find(const ObjectId& tgt, const ObjectId& src,
                              const std::string& name) const;

  bool operator==(const GradedQuiver& o) const;

private:
  std::vector<ObjectId> objects_;
  std::vector<BasisVector> basis_;
  std::map<std::pair<ObjectId, ObjectId>, std::vector<BasisId>> homs_;
  static const std::vector<BasisId> empty_;
};

// A degree-0 morphism of graded quivers (F_0, F): object map plus a linear
// map tgt A src -> F0(tgt) B F0(src) per hom space, stored as a sparse
// matrix over the chosen bases.
struct QuiverHomMap {
  std::map<ObjectId, ObjectId> object_map;
  // entries[a] = list of (b, c): F(a) contains c * b.
  std::map<BasisId, std::vector<std::pair<BasisId, Rational>>> entries;

  ObjectId map_object(const ObjectId& x) const;
  // Image of basis vector a of the source quiver.
  std::vector<std::pair<BasisId, Rational>> apply(BasisId a) const;

  static QuiverHomMap identity(const GradedQuiver& A);
};

// The graded dual quiver A*: same objects, yA*_x = (xA_y)*, degrees negated.
GradedQuiver dual_quiver(const GradedQuiver& A);

// The boundary quiver dA = A + A*[d-1]: hom spaces yA_x + (xA_y)*[d-1].
// Dual vectors carry degree -|e| - (d-1) and dual_of pointing into A.
GradedQuiver boundary_quiver(const GradedQuiver& A, Degree d);

// The mixed quiver Q_Phi: y(Q)_x = yA_x + Phi(y)B*_Phi(x)[d-1].  Dual
// vectors point into B via dual_of.  With B = A and Phi0 = id this equals
// boundary_quiver(A, d).
GradedQuiver mixed_quiver(const GradedQuiver& A, const GradedQuiver& B,
                          const std::map<ObjectId, ObjectId>& Phi0, Degree d);

enum class FormKind { natural, mixed };

// Bilinear form on the [1]-shift of a boundary/mixed quiver Q = A + B*[d-1]:
//   Gamma(tf, sa) = (-1)^{|tf|+1} (f o Phi)(a),  Gamma zero on A(x)A and
//   B*(x)B* blocks, extended by graded antisymmetry
//   Gamma(sa, tf) = -(-1)^{|sa||tf|} Gamma(tf, sa).
// Degrees |sa|, |tf| are the Q[1]-degrees of the arguments.
class BilinearForm {
public:
  // Natural form Gamma^A on boundary_quiver(A, d).
  static BilinearForm natural(const GradedQuiver& A, const GradedQuiver& dA, Degree d);
  // Phi-mixed form Gamma^Phi on mixed_quiver(A, B, Phi0, d); Phi supplies the
  // hom maps A -> B.
  static BilinearForm mixed(const GradedQuiver& A, const GradedQuiver& B,
                            const GradedQuiver& Q, const QuiverHomMap& Phi, Degree d);

  FormKind kind() const { return kind_; }
  Degree d() const { return d_; }
  const GradedQuiver& carrier() const { return *carrier_; }

  // Q[1]-degree of a carrier basis vector.
  Degree shifted_degree(BasisId v) const;

  // Gamma(u, v) for carrier basis vectors u, v viewed in Q[1].
  Rational eval(BasisId u, BasisId v) const;

  // True iff every induced map yQ_x[1] -> (yQ_x[1])* is an isomorphism.
  bool is_nondegenerate() const;

private:
  FormKind kind_ = FormKind::natural;
  Degree d_ = 0;
  const GradedQuiver* A_ = nullptr;
  const GradedQuiver* B_ = nullptr;
  const GradedQuiver* carrier_ = nullptr;
  QuiverHomMap Phi_;
};

// Rank of a dense rational matrix (Gaussian elimination); helper shared by
// nondegeneracy and round-trip checks.
int rational_matrix_rank(std::vector<std::vector<Rational>> m);

}  // namespace pcy
