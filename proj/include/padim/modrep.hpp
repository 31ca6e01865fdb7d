#pragma once

// Representations of Z/p over F_p as Jordan data, their symmetric, exterior
// and tensor powers, and the reduction to the Verlinde category Ver_p.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padim/arith.hpp"
#include "padim/dimcore.hpp"

namespace padim {

struct ModelLimits {
  /// Largest operator dimension the engine will build.
  std::size_t size_cap = 50000;
};

/// Dense square-or-rectangular matrix over F_p, row-major.
class FpMatrix {
 public:
  FpMatrix(Residue p, std::size_t rows, std::size_t cols);
  static FpMatrix identity(Residue p, std::size_t n);
  static FpMatrix from_rows(Residue p, const std::vector<std::vector<std::int64_t>>& rows);

  Residue p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = v % p_; }

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix transposed() const;

  bool operator==(const FpMatrix&) const = default;

 private:
  Residue p_;
  std::size_t rows_, cols_;
  std::vector<Residue> data_;
};

std::size_t rank(const FpMatrix& m);

/// Jordan block sizes of a k[Z/p]-module, each in [1, p], sorted descending.
class JordanType {
 public:
  JordanType(Residue p, std::vector<unsigned> parts);

  Residue p() const noexcept { return p_; }
  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t dim() const;

  /// Direct sum of shift blocks: N e_k = e_{k+1} inside each block.
  FpMatrix canonical_nilpotent() const;
  FpMatrix canonical_generator() const;

  bool operator==(const JordanType&) const = default;

 private:
  Residue p_;
  std::vector<unsigned> parts_;
};

/// Block sizes from the rank sequence r_k = rank(N^k).
/// Throws NotNilpotent, or InvalidArgument if a block exceeds p.
JordanType jordan_type_of(const FpMatrix& nilpotent);

/// Jordan type of (induced action of u on S^n V) - 1, for any operator u.
JordanType sym_power_of_operator(const FpMatrix& u, unsigned n, const ModelLimits& limits = {});
JordanType ext_power_of_operator(const FpMatrix& u, unsigned n, const ModelLimits& limits = {});

JordanType sym_power(const JordanType& t, unsigned n, const ModelLimits& limits = {});
JordanType ext_power(const JordanType& t, unsigned n, const ModelLimits& limits = {});
JordanType tensor(const JordanType& a, const JordanType& b, const ModelLimits& limits = {});

/// Multiplicities of L_1..L_{p-1}.
class VerObject {
 public:
  VerObject(Residue p, std::vector<std::uint64_t> mult);
  /// The simple object L_j.
  static VerObject simple(Residue p, unsigned j);

  Residue p() const noexcept { return p_; }
  /// mult()[j-1] is the multiplicity of L_j.
  const std::vector<std::uint64_t>& mult() const noexcept { return mult_; }
  std::uint64_t multiplicity(unsigned j) const;
  bool is_zero() const;
  /// Categorical dimension sum j * m_j mod p.
  Residue dim() const;
  /// Jordan type with the same multiplicities.
  JordanType lift() const;

  bool operator==(const VerObject&) const = default;

 private:
  Residue p_;
  std::vector<std::uint64_t> mult_;
};

/// Deletes the size-p (negligible) blocks.
VerObject ver_reduce(const JordanType& t);

/// S^n v or its exterior counterpart, as an object of Ver_p.
VerObject ver_power(const VerObject& v, Kind kind, unsigned n, const ModelLimits& limits = {});

/// Dimensions of S^n v or the exterior powers for n = 0..max_degree.
DimSequence ver_dim_sequence(const VerObject& v, Kind kind, std::size_t max_degree,
                             const ModelLimits& limits = {});

VerObject ver_tensor(const VerObject& a, const VerObject& b, const ModelLimits& limits = {});

/// Integer combination of [L_1]..[L_{p-1}] in the Grothendieck ring.
class GrElement {
 public:
  GrElement(Residue p, std::vector<long long> coeffs);
  static GrElement one(Residue p);
  static GrElement of(const VerObject& v);

  Residue p() const noexcept { return p_; }
  const std::vector<long long>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  GrElement operator+(const GrElement& rhs) const;
  GrElement scaled(long long c) const;
  /// Product induced by ver_tensor on simples.
  GrElement times(const GrElement& rhs, const ModelLimits& limits = {}) const;

  /// "[L1] + 2*[L3]".
  std::string to_text() const;

  bool operator==(const GrElement&) const = default;

 private:
  Residue p_;
  std::vector<long long> coeffs_;
};

/// Integer polynomial, coefficient of x^k at index k.
using IntPoly = std::vector<long long>;

/// P_0 = 1, P_1 = x, P_{n+1} = x P_n - P_{n-1}.
IntPoly ultraspherical(unsigned n);
GrElement gr_eval(const IntPoly& poly, const GrElement& x, const ModelLimits& limits = {});

}  // namespace padim
