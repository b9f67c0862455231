#include "pcy/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcy {

const std::vector<BasisId> GradedQuiver::empty_{};

bool GradedQuiver::has_object(const ObjectId& x) const {
  return std::find(objects_.begin(), objects_.end(), x) != objects_.end();
}

void GradedQuiver::add_object(const ObjectId& x) {
  if (!has_object(x)) objects_.push_back(x);
}

BasisId GradedQuiver::add_basis(const BasisVector& v) {
  if (!has_object(v.tgt) || !has_object(v.src))
    throw std::invalid_argument("add_basis: unknown object '" + v.tgt + "' or '" + v.src + "'");
  if (find(v.tgt, v.src, v.name))
    throw std::invalid_argument("add_basis: duplicate name '" + v.name + "' in hom(" +
                                v.src + " -> " + v.tgt + ")");
  BasisId id = static_cast<BasisId>(basis_.size());
  basis_.push_back(v);
  homs_[{v.tgt, v.src}].push_back(id);
  return id;
}

BasisId GradedQuiver::add_arrow(const ObjectId& tgt, const ObjectId& src,
                                const std::string& name, Degree degree) {
  return add_basis(BasisVector{tgt, src, name, degree, false, -1});
}

const std::vector<BasisId>& GradedQuiver::hom(const ObjectId& tgt,
                                              const ObjectId& src) const {
  auto it = homs_.find({tgt, src});
  return it == homs_.end() ? empty_ : it->second;
}

std::optional<BasisId> GradedQuiver::find(const ObjectId& tgt, const ObjectId& src,
                                          const std::string& name) const {
  for (BasisId id : hom(tgt, src))
    if (basis_[id].name == name) return id;
  return std::nullopt;
}

bool GradedQuiver::operator==(const GradedQuiver& o) const {
  if (objects_ != o.objects_ || basis_.size() != o.basis_.size()) return false;
  for (size_t i = 0; i < basis_.size(); ++i) {
    const auto& a = basis_[i];
    const auto& b = o.basis_[i];
    if (a.tgt != b.tgt || a.src != b.src || a.name != b.name ||
        a.degree != b.degree || a.is_dual != b.is_dual)
      return false;
  }
  return true;
}

ObjectId QuiverHomMap::map_object(const ObjectId& x) const {
  auto it = object_map.find(x);
  if (it == object_map.end())
    throw std::invalid_argument("QuiverHomMap: object '" + x + "' not in domain");
  return it->second;
}

std::vector<std::pair<BasisId, Rational>> QuiverHomMap::apply(BasisId a) const {
  auto it = entries.find(a);
  if (it == entries.end()) return {};
  return it->second;
}

QuiverHomMap QuiverHomMap::identity(const GradedQuiver& A) {
  QuiverHomMap phi;
  for (const auto& x : A.objects()) phi.object_map[x] = x;
  for (BasisId i = 0; i < A.dim(); ++i) phi.entries[i] = {{i, Rational(1)}};
  return phi;
}

GradedQuiver dual_quiver(const GradedQuiver& A) {
  GradedQuiver D(A.objects());
  // e in xA_y gives e* in yA*_x of degree -|e|.
  for (BasisId i = 0; i < A.dim(); ++i) {
    const auto& e = A.at(i);
    D.add_basis(BasisVector{e.src, e.tgt, e.name + "*", -e.degree, true, i});
  }
  return D;
}

GradedQuiver boundary_quiver(const GradedQuiver& A, Degree d) {
  std::map<ObjectId, ObjectId> id_map;
  for (const auto& x : A.objects()) id_map[x] = x;
  return mixed_quiver(A, A, id_map, d);
}

GradedQuiver mixed_quiver(const GradedQuiver& A, const GradedQuiver& B,
                          const std::map<ObjectId, ObjectId>& Phi0, Degree d) {
  GradedQuiver Q(A.objects());
  for (BasisId i = 0; i < A.dim(); ++i) Q.add_basis(A.at(i));
  // Dual part: y(Q)_x gets (Phi(x) B Phi(y))* [d-1], degree -|b| - (d-1).
  for (const auto& y : A.objects()) {
    auto iy = Phi0.find(y);
    if (iy == Phi0.end())
      throw std::invalid_argument("mixed_quiver: Phi0 undefined on '" + y + "'");
    if (!B.has_object(iy->second))
      throw std::invalid_argument("mixed_quiver: Phi0('" + y + "') not an object of B");
    for (const auto& x : A.objects()) {
      const ObjectId& fy = Phi0.at(y);
      const ObjectId& fx = Phi0.at(x);
      for (BasisId b : B.hom(fx, fy)) {
        const auto& e = B.at(b);
        Q.add_basis(BasisVector{y, x, e.name + "*", -e.degree - (d - 1), true, b});
      }
    }
  }
  return Q;
}

BilinearForm BilinearForm::natural(const GradedQuiver& A, const GradedQuiver& dA,
                                   Degree d) {
  BilinearForm g;
  g.kind_ = FormKind::natural;
  g.d_ = d;
  g.A_ = &A;
  g.B_ = &A;
  g.carrier_ = &dA;
  g.Phi_ = QuiverHomMap::identity(A);
  return g;
}

BilinearForm BilinearForm::mixed(const GradedQuiver& A, const GradedQuiver& B,
                                 const GradedQuiver& Q, const QuiverHomMap& Phi,
                                 Degree d) {
  BilinearForm g;
  g.kind_ = FormKind::mixed;
  g.d_ = d;
  g.A_ = &A;
  g.B_ = &B;
  g.carrier_ = &Q;
  g.Phi_ = Phi;
  return g;
}

Degree BilinearForm::shifted_degree(BasisId v) const {
  return carrier_->at(v).degree - 1;
}

Rational BilinearForm::eval(BasisId u, BasisId v) const {
  const auto& bu = carrier_->at(u);
  const auto& bv = carrier_->at(v);
  // Mixed pairing only: both-A and both-dual blocks vanish.
  if (bu.is_dual == bv.is_dual) return Rational(0);
  if (!bu.is_dual) {
    // Gamma(sa, tf) = -(-1)^{|sa||tf|} Gamma(tf, sa).
    Rational base = eval(v, u);
    if (base == 0) return base;
    long long e = static_cast<long long>(shifted_degree(u)) * shifted_degree(v);
    return -sign_of_parity(e) * base;
  }
  // u = tf in y(Q)_x dual part, v = sa in x(Q)_y A part; Gamma(tf, sa) =
  // (-1)^{|tf|+1} f(Phi(a)).  Object matching: tf pairs arrows x -> y.
  if (bu.tgt != bv.src || bu.src != bv.tgt) return Rational(0);
  // f = b* with b = B.at(dual_of); f(Phi(a)) = coefficient of b in Phi(a).
  Rational val(0);
  for (const auto& [bb, c] : Phi_.apply(v)) {
    if (bb == bu.dual_of) val += c;
  }
  if (val == 0) return val;
  long long e = shifted_degree(u) + 1;
  return sign_of_parity(e) * val;
}

int rational_matrix_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

bool BilinearForm::is_nondegenerate() const {
  for (const auto& y : carrier_->objects()) {
    for (const auto& x : carrier_->objects()) {
      const auto& rows_basis = carrier_->hom(y, x);
      const auto& cols_basis = carrier_->hom(x, y);
      if (rows_basis.size() != cols_basis.size()) return false;
      if (rows_basis.empty()) continue;
      std::vector<std::vector<Rational>> m(rows_basis.size(),
                                           std::vector<Rational>(cols_basis.size()));
      for (size_t i = 0; i < rows_basis.size(); ++i)
        for (size_t j = 0; j < cols_basis.size(); ++j)
          m[i][j] = eval(rows_basis[i], cols_basis[j]);
      if (rational_matrix_rank(m) != static_cast<int>(rows_basis.size())) return false;
    }
  }
  return true;
}

}  // namespace pcy
