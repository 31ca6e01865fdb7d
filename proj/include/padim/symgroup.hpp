#pragma once

// Young-subgroup double cosets, the trace polynomials of the operators A_B on
// S^lambda X, and the derivation of d_n relations from them.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "padim/arith.hpp"
#include "padim/dimcore.hpp"
#include "padim/monomial.hpp"

namespace padim {

/// Weakly decreasing positive parts.
class Partition {
 public:
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  unsigned size() const noexcept { return n_; }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

/// All partitions of n, parts in decreasing lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

/// A permutation of {0..n-1} in one-line form: image[x] = sigma(x).
/// Products compose right to left: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<unsigned> image);
  static Permutation identity(unsigned n);
  /// From 1-based cycles, e.g. {{1,2,3}} for (123).
  static Permutation from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles);

  unsigned size() const noexcept { return static_cast<unsigned>(image_.size()); }
  unsigned operator()(unsigned x) const { return image_.at(x); }
  const std::vector<unsigned>& image() const noexcept { return image_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  unsigned cycle_count() const;
  unsigned inversions() const;
  int sign() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<unsigned> image_;
};

/// a_ij = |block_i ∩ w(block_j)|: rows and columns both sum to the blocks.
struct CosetMatrix {
  std::vector<std::vector<unsigned>> entries;

  bool operator==(const CosetMatrix&) const = default;
  auto operator<=>(const CosetMatrix&) const = default;
};

/// The matrix of the double coset S_mu w S_mu, for block sizes mu.
CosetMatrix coset_matrix_of(std::span<const unsigned> blocks, const Permutation& w);

/// The unique element of minimal length in the double coset with matrix m:
/// increasing on every block and with inverse increasing on every block.
Permutation minimal_representative(std::span<const unsigned> blocks, const CosetMatrix& m);

struct DoubleCoset {
  CosetMatrix matrix;
  Permutation representative;
};

/// All double cosets of S_lambda in S_n. Matrices are listed in decreasing
/// row-major lexicographic order, so index 0 is the identity coset.
std::vector<DoubleCoset> double_cosets(const Partition& lambda);

/// |S_lambda w S_lambda| = (prod lambda_i!)^2 / prod a_ij!.
BigInt coset_size(const Partition& lambda, const CosetMatrix& m);

/// Integer polynomial in d_1, d_2, ...; monomial index 0 is d_1.
class TracePoly {
 public:
  using Terms = std::map<Monomial, long long, DisplayOrder>;

  TracePoly() = default;
  explicit TracePoly(Terms terms);
  static TracePoly constant(long long c);
  /// d_r^e.
  static TracePoly variable(unsigned r, unsigned e = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest r with d_r present.
  unsigned max_variable() const;

  TracePoly& operator+=(const TracePoly& rhs);
  TracePoly operator+(const TracePoly& rhs) const;
  TracePoly operator*(const TracePoly& rhs) const;
  TracePoly scaled(long long c) const;

  /// Coefficients reduced to the balanced range (-p/2, p/2].
  TracePoly reduced_mod(Residue p) const;
  /// Replaces d_r by `value` (coefficients reduced mod p after expansion).
  TracePoly substituted_mod(unsigned r, const TracePoly& value, Residue p) const;

  /// d_r := values[r-1].
  BigInt evaluate(std::span<const BigInt> values) const;
  Residue evaluate_mod(std::span<const Residue> values, Residue p) const;

  /// "d1*d2 + d1^2 + d1".
  std::string to_text() const;

  bool operator==(const TracePoly&) const = default;

 private:
  void add_term(const Monomial& m, long long c);
  Terms terms_;
};

/// d_1^{cycles of sigma}.
TracePoly perm_trace(const Permutation& sigma);

/// Trace of A_B on S^lambda X (Kind::Symmetric), or of the sign-twisted
/// operator sum sgn(b) b on the antisymmetric counterpart (Kind::Exterior),
/// as a polynomial in the power dimensions d_r.
TracePoly trace_polynomial(const Partition& lambda, const CosetMatrix& coset,
                           Kind kind = Kind::Symmetric);

struct Recurrence {
  Residue p;
  unsigned n;
  Kind kind;
  /// Polynomial over F_p in the generators d_1, d_p, d_{p^2}, ...
  TracePoly rhs;

  /// "d4 = d1*d3 - d1^3 + d1".
  std::string to_text() const;
};

/// d_n as binom(n, p^i)^{-1} times the trace of the symmetrizer on
/// S^{n-p^i} X ⊗ S^{p^i} X, with lower non-generators substituted away.
Recurrence derive_recurrence(Residue p, unsigned n, Kind kind = Kind::Symmetric);

bool is_power_of(std::uint64_t n, Residue p);

}  // namespace padim
