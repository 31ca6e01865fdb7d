#pragma once

// Extraction of the symmetric and exterior p-adic dimensions from measured
// power-dimension sequences, together with the universal polynomials that
// govern such sequences.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padim/arith.hpp"
#include "padim/monomial.hpp"

namespace padim {

enum class Kind { Symmetric, Exterior };

std::string_view to_string(Kind kind);
/// Accepts "symmetric"/"sym" and "exterior"/"ext".
Kind parse_kind(std::string_view text);

/// Dimensions d_0..d_N of S^n X (symmetric) or of the exterior powers.
class DimSequence {
 public:
  DimSequence(Residue p, Kind kind, std::vector<Residue> values);
  static DimSequence from_integers(Residue p, Kind kind, std::span<const std::int64_t> values);

  Residue p() const noexcept { return p_; }
  Kind kind() const noexcept { return kind_; }
  const std::vector<Residue>& values() const noexcept { return values_; }
  /// Highest degree present.
  std::size_t max_degree() const noexcept { return values_.size() - 1; }
  Residue operator[](std::size_t n) const { return values_.at(n); }

  FpSeries as_series() const { return FpSeries(p_, values_); }

  bool operator==(const DimSequence&) const = default;

 private:
  Residue p_;
  Kind kind_;
  std::vector<Residue> values_;
};

/// Polynomial over F_p in z_0, z_1, ... with degree < p in every variable.
class UniversalPoly {
 public:
  using Terms = std::map<Monomial, Residue, DisplayOrder>;

  UniversalPoly(Residue p, Terms terms);

  Residue p() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t variable_count() const;

  /// Evaluates at point[i] = value of z_i; missing trailing variables read 0.
  Residue evaluate(std::span<const Residue> point) const;
  /// Canonical text, e.g. "z0*z1"; coefficients are residues in [1, p).
  std::string to_text() const;

 private:
  Residue p_;
  Terms terms_;
};

/// The universal polynomial expressing d_n through (d_1, d_p, d_{p^2}, ...).
UniversalPoly q_n(Residue p, std::uint64_t n, Kind kind);

/// Index of the first n with d_n != Q_n(d_1, d_p, ...), if any.
std::optional<std::size_t> check_universal(const DimSequence& seq);

enum class Checking { Checked, Unchecked };

/// Number of p-adic digits certified by a sequence of this length.
std::size_t certified_digits(const DimSequence& seq);

/// The exponent d with sum d_n z^n = (1 - z)^{-d}.
PadicInt dim_plus(const DimSequence& seq, Checking checking = Checking::Checked);
/// The exponent d with sum d_n z^n = (1 + z)^{d}.
PadicInt dim_minus(const DimSequence& seq, Checking checking = Checking::Checked);

/// Cauchy product; the sequence of a direct sum.
DimSequence convolve(const DimSequence& a, const DimSequence& b);

/// sum_{j<=n} (-1)^j s_j e_{n-j} mod p.
Residue koszul_euler(const DimSequence& sym, const DimSequence& ext, std::size_t n);

struct ModelPair {
  DimSequence symmetric;
  DimSequence exterior;
};

ModelPair catalog_vec(Residue p, std::uint64_t dim, std::size_t max_degree);
/// Supervector space of dimension (even | odd); requires p > 2.
ModelPair catalog_supervec(Residue p, std::uint64_t even, std::uint64_t odd, std::size_t max_degree);
/// The object D of Rep(k[d]/d^2) in characteristic 2.
ModelPair catalog_rep_d(Residue p, std::size_t max_degree);
/// L_2 in Ver_p from its closed-form power decomposition.
ModelPair catalog_ver_l2(Residue p, std::size_t max_degree);

/// Dispatch by name: "vec" {N}, "supervec" {m, n}, "repD" {}, "ver_L2" {}.
ModelPair catalog(std::string_view name, std::span<const std::uint64_t> params, Residue p,
                  std::size_t max_degree);

}  // namespace padim
