#pragma once

// Exact truncated arithmetic: power series over F_p and p-adic integers with
// explicit precision.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "padim/error.hpp"

namespace padim {

using Residue = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kMaxPrime = (1ULL << 31) - 1;

bool is_prime(std::uint64_t n);

/// Throws InvalidArgument unless p is a prime below 2^31.
void require_prime(std::uint64_t p);

Residue mod_p(std::int64_t value, Residue p);
Residue mod_p(const BigInt& value, Residue p);
Residue inverse_mod(Residue a, Residue p);

/// binom(n, k) mod p for nonnegative integers, via Lucas' theorem.
Residue lucas_binom(std::uint64_t n, std::uint64_t k, Residue p);

/// Exact binomial binom(t, k) for any integer t (generalized for t < 0).
BigInt exact_binom(const BigInt& t, std::uint64_t k);

/// p-adic valuation of n! (Legendre).
std::uint64_t factorial_valuation(std::uint64_t n, Residue p);

/// p^k, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t k);

// ---------------------------------------------------------------------------

/// A power series over F_p known modulo z^trunc.
class FpSeries {
 public:
  FpSeries(Residue p, std::vector<Residue> coeffs);

  static FpSeries one(Residue p, std::size_t trunc);
  /// 1 + sign*z truncated at `trunc` (sign = +1 or -1).
  static FpSeries one_plus_z(Residue p, std::size_t trunc, int sign = 1);
  static FpSeries from_integers(Residue p, std::span<const std::int64_t> values);

  Residue p() const noexcept { return p_; }
  std::size_t trunc() const noexcept { return coeffs_.size(); }
  /// Throws IndexOutOfRange at or beyond trunc.
  Residue coeff(std::size_t i) const;
  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }

  FpSeries truncated(std::size_t trunc) const;
  /// f(sign * z).
  FpSeries scaled_variable(int sign) const;

  bool operator==(const FpSeries&) const = default;

 private:
  Residue p_;
  std::vector<Residue> coeffs_;
};

/// A p-adic integer known modulo p^precision, stored as little-endian digits.
class PadicInt {
 public:
  PadicInt(Residue p, std::vector<Residue> digits);

  static PadicInt from_integer(Residue p, std::size_t precision, const BigInt& value);
  static PadicInt from_integer(Residue p, std::size_t precision, std::int64_t value) {
    return from_integer(p, precision, BigInt(value));
  }

  Residue p() const noexcept { return p_; }
  std::size_t precision() const noexcept { return digits_.size(); }
  const std::vector<Residue>& digits() const noexcept { return digits_; }
  Residue digit(std::size_t i) const;

  /// Representative in [0, p^precision).
  BigInt to_unsigned() const;
  /// Representative of least absolute value, ties toward the positive side.
  BigInt to_signed() const;
  PadicInt truncated(std::size_t precision) const;

  /// "...d2d1d0" rendering, digits separated by '.' when p > 10.
  std::string to_digit_string() const;

  bool operator==(const PadicInt&) const = default;

 private:
  Residue p_;
  std::vector<Residue> digits_;
};

FpSeries series_mul(const FpSeries& a, const FpSeries& b);
FpSeries series_inv(const FpSeries& a);

/// f^t := prod_j f(z^{p^j})^{t_j}; trunc = min(f.trunc, p^{t.precision}).
FpSeries pow_padic(const FpSeries& f, const PadicInt& t);

/// z^n coefficient of (1+z)^t, by Lucas' theorem on the digits.
Residue binom_coeff(const PadicInt& t, std::uint64_t n);

enum class Base { Plus, Minus };

/// Recovers t from f = (1 + z)^t (or (1 - z)^t for Base::Minus). Digits are
/// read at z^{p^i} for every p^i < f.trunc, then the whole series is
/// verified; a mismatch raises NotABinomialPower carrying the index.
PadicInt extract_exponent(const FpSeries& f, Base base = Base::Plus);

PadicInt padic_add(const PadicInt& a, const PadicInt& b);
PadicInt padic_neg(const PadicInt& a);
PadicInt padic_sub(const PadicInt& a, const PadicInt& b);
PadicInt padic_mul(const PadicInt& a, const PadicInt& b);

/// binom(t, n) with precision t.precision - v_p(n!).
PadicInt padic_binomial(const PadicInt& t, std::uint64_t n);

}  // namespace padim
