#include "pcy/grading.hpp"

#include <algorithm>
#include <numeric>

namespace pcy {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::cycle(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& outer) const {
  if (outer.size() != size())
    throw std::invalid_argument("Permutation::compose: size mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[i] = outer(images_[i]);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Rational koszul_sign(const Permutation& perm, const std::vector<Degree>& degrees) {
  if (perm.size() != static_cast<int>(degrees.size()))
    throw std::invalid_argument("koszul_sign: length mismatch");
  // Count inversions: elements originally at i < j that end up with
  // sigma(i) > sigma(j) have crossed, contributing |v_i| |v_j|.
  long long eps = 0;
  const int n = perm.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm(i) > perm(j))
        eps += static_cast<long long>(degrees[i]) * degrees[j];
  return sign_of_parity(eps);
}

Rational shift_tensor_sign(Degree d, int j, const std::vector<Degree>& degrees) {
  if (j < 1 || j > static_cast<int>(degrees.size()))
    throw std::out_of_range("shift_tensor_sign: slot index out of range");
  long long prefix = 0;
  for (int i = 0; i < j - 1; ++i) prefix += degrees[i];
  return sign_of_parity(static_cast<long long>(d) * prefix);
}

Rational shift_hom_sign(Degree d, ShiftSide side, Degree f_degree) {
  if (side == ShiftSide::output) return Rational(1);
  return sign_of_parity(static_cast<long long>(d) * f_degree);
}

Rational koszul_block_sign(const Permutation& perm,
                           const std::vector<Degree>& block_degrees) {
  return koszul_sign(perm, block_degrees);
}

}  // namespace pcy
