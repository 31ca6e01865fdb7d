#include "padim/ivpring.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace padim {

IVPoly::IVPoly(Coefficients coeffs) {
  for (auto& [i, c] : coeffs)
    if (c != 0) coeffs_.emplace(i, c);
}

IVPoly IVPoly::basis(std::uint64_t i) { return IVPoly(Coefficients{{i, BigInt(1)}}); }

BigInt IVPoly::coefficient(std::uint64_t i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

std::uint64_t IVPoly::degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

IVPoly IVPoly::operator+(const IVPoly& rhs) const {
  Coefficients c = coeffs_;
  for (const auto& [i, v] : rhs.coeffs_) c[i] += v;
  return IVPoly(std::move(c));
}

IVPoly IVPoly::operator-(const IVPoly& rhs) const { return *this + rhs.scaled(-1); }

IVPoly IVPoly::scaled(const BigInt& s) const {
  Coefficients c;
  for (const auto& [i, v] : coeffs_) c[i] = v * s;
  return IVPoly(std::move(c));
}

std::string IVPoly::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) out += mag.str() + "*";
    out += "e" + std::to_string(i);
  }
  return out;
}

BigInt structure_constant(std::uint64_t i, std::uint64_t j, std::uint64_t k) {
  if (k < std::max(i, j) || k > i + j) return 0;
  static std::mutex mutex;
  static std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, BigInt> memo;
  const auto key = std::make_tuple(i, j, k);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  // k!/((k-i)!(k-j)!(i+j-k)!) = binom(k, i) * binom(i, k - j)
  BigInt c = exact_binom(BigInt(k), i) * exact_binom(BigInt(i), k - j);
  std::lock_guard lock(mutex);
  memo.emplace(key, c);
  return c;
}

IVPoly e_mul(const IVPoly& a, const IVPoly& b) {
  IVPoly::Coefficients out;
  for (const auto& [i, ca] : a.coefficients())
    for (const auto& [j, cb] : b.coefficients())
      for (std::uint64_t k = std::max(i, j); k <= i + j; ++k) out[k] += ca * cb * structure_constant(i, j, k);
  return IVPoly(std::move(out));
}

BigInt eval_at(const IVPoly& f, const BigInt& t) {
  BigInt sum = 0;
  for (const auto& [i, c] : f.coefficients()) sum += c * exact_binom(t, i);
  return sum;
}

PadicInt eval_at(const IVPoly& f, const PadicInt& t) {
  std::size_t precision = t.precision();
  std::vector<std::pair<BigInt, PadicInt>> parts;
  for (const auto& [i, c] : f.coefficients()) {
    PadicInt b = padic_binomial(t, i);
    precision = std::min(precision, b.precision());
    parts.emplace_back(c, std::move(b));
  }
  PadicInt sum = PadicInt::from_integer(t.p(), precision, 0);
  for (const auto& [c, b] : parts)
    sum = padic_add(sum, padic_mul(PadicInt::from_integer(t.p(), precision, c), b.truncated(precision)));
  return sum;
}

IVPoly s_basis(std::uint64_t n) {
  if (n == 0) return IVPoly::basis(0);
  // Vandermonde: binom(t + n - 1, n) = sum_k binom(n - 1, n - k) binom(t, k).
  IVPoly::Coefficients c;
  for (std::uint64_t k = 1; k <= n; ++k) c[k] = exact_binom(BigInt(n - 1), n - k);
  return IVPoly(std::move(c));
}

std::map<std::uint64_t, BigInt> to_s_coordinates(const IVPoly& f) {
  // s_k = e_k + lower terms, so peel off the top coefficient repeatedly.
  std::map<std::uint64_t, BigInt> out;
  IVPoly rest = f;
  while (!rest.coefficients().empty()) {
    const auto [k, c] = *rest.coefficients().rbegin();
    out[k] = c;
    rest = rest - s_basis(k).scaled(c);
  }
  return out;
}

}  // namespace padim
