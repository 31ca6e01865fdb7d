#pragma once

// The ring of integer-valued polynomials in the binomial basis e_i = binom(t, i).

#include <cstdint>
#include <map>
#include <string>

#include "padim/arith.hpp"

namespace padim {

class IVPoly {
 public:
  using Coefficients = std::map<std::uint64_t, BigInt>;

  IVPoly() = default;
  explicit IVPoly(Coefficients coeffs);
  /// e_i.
  static IVPoly basis(std::uint64_t i);

  const Coefficients& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(std::uint64_t i) const;
  std::uint64_t degree() const;

  IVPoly operator+(const IVPoly& rhs) const;
  IVPoly operator-(const IVPoly& rhs) const;
  IVPoly scaled(const BigInt& c) const;

  /// "e1 + 2*e2".
  std::string to_text() const;

  bool operator==(const IVPoly&) const = default;

 private:
  Coefficients coeffs_;
};

/// C_ij^k = k! / ((k-i)! (k-j)! (i+j-k)!), zero outside max(i,j) <= k <= i+j.
BigInt structure_constant(std::uint64_t i, std::uint64_t j, std::uint64_t k);

IVPoly e_mul(const IVPoly& a, const IVPoly& b);

BigInt eval_at(const IVPoly& f, const BigInt& t);
/// Precision is the minimum over the binomials used.
PadicInt eval_at(const IVPoly& f, const PadicInt& t);

/// binom(t + n - 1, n) in the e-basis.
IVPoly s_basis(std::uint64_t n);

/// Expresses f in the s-basis: returns c with f = sum c_k s_k.
std::map<std::uint64_t, BigInt> to_s_coordinates(const IVPoly& f);

}  // namespace padim
