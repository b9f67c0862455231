// grading.hpp — degrees, Koszul signs, and shift-isomorphism signs.
//
// Every sign in the engine is produced here.  No other module computes a
// (-1)^eps inline: they assemble a permutation (or a shift request) and ask
// this module for the sign.  This keeps the sign conventions auditable in
// one place.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pcy {

// Exact scalar field: Q, realized as arbitrary-precision rationals.
using Rational = boost::multiprecision::cpp_rational;

// Cohomological degree of a homogeneous element.  Shift conventions:
//   (V[n])^i = V^{i+n},  s_n : V -> V[n]  has degree -n,
//   |s v| = |v| - 1,  |s_d v| = |v| - d.
using Degree = int;

// A permutation of {0,..,n-1} stored by images: perm[i] = sigma(i) is the
// destination slot of the element currently in slot i.  Applying sigma to a
// tuple (v_0,..,v_{n-1}) yields the tuple w with w[sigma(i)] = v_i.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Generator of C_n acting on tuples: slot i -> slot i+1 (mod n).
  static Permutation cycle(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // Composition acting on tuples: (a * b) means "apply b, then a".
  Permutation compose(const Permutation& outer) const;
  bool is_identity() const;
  bool operator==(const Permutation& o) const { return images_ == o.images_; }

  // Applies this permutation to a tuple: result[sigma(i)] = tuple[i].
  template <typename T>
  std::vector<T> apply(const std::vector<T>& tuple) const {
    if (static_cast<int>(tuple.size()) != size())
      throw std::invalid_argument("Permutation::apply: size mismatch");
    std::vector<T> out(tuple.size());
    for (int i = 0; i < size(); ++i) out[images_[i]] = tuple[i];
    return out;
  }

private:
  std::vector<int> images_;
};

// Sign of +1 or -1 as an exact rational factor.
inline Rational sign_of_parity(long long exponent) {
  return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

// Koszul sign of permuting homogeneous elements of the given degrees:
// (-1)^eps with eps = sum over inversion pairs of the degree products,
//   eps = sum_{i > j, sigma^{-1}(i) < sigma^{-1}(j)} |v_{sigma^{-1}(i)}| |v_{sigma^{-1}(j)}|.
// Equivalently: each time two elements cross, the sign (-1)^{|a||b|} accrues.
Rational koszul_sign(const Permutation& perm, const std::vector<Degree>& degrees);

// Sign of the isomorphism H_j moving an s_d shift from outside a tensor
// product onto tensor slot j (1-based):  (-1)^{d (|v_1| + .. + |v_{j-1}|)}.
Rational shift_tensor_sign(Degree d, int j, const std::vector<Degree>& degrees);

enum class ShiftSide { output, input };

// Sign of shifting a hom space.  Shifting the output of f carries no sign;
// shifting the input carries (-1)^{d |f|}.
Rational shift_hom_sign(Degree d, ShiftSide side, Degree f_degree);

// Koszul sign for a block permutation: blocks with total degrees
// `block_degrees` are permuted by `perm` (acting on blocks).  Equals the
// Koszul sign of the induced permutation on the underlying elements.
Rational koszul_block_sign(const Permutation& perm,
                           const std::vector<Degree>& block_degrees);

}  // namespace pcy
