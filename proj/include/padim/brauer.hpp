#pragma once

// Categorical Brauer characters over finite levels W(F_{p^d}) / p^K of the
// maximal unramified extension of Q_p.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "padim/arith.hpp"
#include "padim/dimcore.hpp"

namespace padim {

/// Polynomial over F_p, coefficient of x^i at index i, no trailing zeros.
using FpPoly = std::vector<Residue>;

bool is_irreducible_mod_p(const FpPoly& f, Residue p);

/// First monic irreducible polynomial of degree d over F_p, enumerating the
/// lower coefficients (c_{d-1}, ..., c_0) in lexicographic order.
FpPoly find_irreducible(Residue p, unsigned d);

/// (Z/p^K)[x] / (modulus), with the modulus monic and irreducible mod p.
class UnramifiedRing {
 public:
  /// Residue of a polynomial in x, coefficients in [0, p^K), length degree().
  using Element = std::vector<BigInt>;

  /// `modulus` lists coefficients low to high and must be monic.
  UnramifiedRing(Residue p, std::size_t precision, std::vector<std::int64_t> modulus);
  /// Uses find_irreducible(p, d).
  static UnramifiedRing standard(Residue p, std::size_t precision, unsigned d);

  Residue p() const noexcept { return p_; }
  std::size_t precision() const noexcept { return precision_; }
  unsigned degree() const noexcept { return static_cast<unsigned>(modulus_.size() - 1); }
  const std::vector<std::int64_t>& modulus() const noexcept { return modulus_; }
  const BigInt& characteristic() const noexcept { return pk_; }

  Element zero() const { return Element(degree(), 0); }
  Element one() const;
  /// Reduces arbitrary integer coefficients, any length, into the ring.
  Element element(const std::vector<BigInt>& coeffs) const;
  Element element(const std::vector<std::int64_t>& coeffs) const;
  /// Constant embedding; the weight must be known to at least precision().
  Element embed(const PadicInt& t) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, const BigInt& e) const;

  bool is_unit(const Element& a) const;
  /// Coefficients reduced mod p.
  FpPoly reduce_mod_p(const Element& a) const;

  /// "3 + 2*x", coefficients in [0, p^K).
  std::string to_text(const Element& a) const;

 private:
  Residue p_;
  std::size_t precision_;
  BigInt pk_;
  std::vector<std::int64_t> modulus_;
};

/// The root-of-unity lift of a mod p: iterate a <- a^{p^d} to a fixed point.
/// Throws NotAUnit when a vanishes mod p.
UnramifiedRing::Element teichmuller(const UnramifiedRing& ring, const UnramifiedRing::Element& a);

struct EigenDatum {
  /// Element of F_{p^d}, coefficients in [0, p).
  std::vector<Residue> eigenvalue;
  PadicInt weight;
};

/// sum weight * teichmuller(eigenvalue).
UnramifiedRing::Element brauer_char(const UnramifiedRing& ring, const std::vector<EigenDatum>& data);

struct EigenSequence {
  std::vector<Residue> eigenvalue;
  DimSequence sequence;
};

/// Same sum with weights computed from the power-dimension sequences of the
/// eigenobjects, through dim_plus (Base::Plus) or dim_minus (Base::Minus).
UnramifiedRing::Element brauer_char(const UnramifiedRing& ring, const std::vector<EigenSequence>& data,
                                    Base weight_source);

}  // namespace padim
