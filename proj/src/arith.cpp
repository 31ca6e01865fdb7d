#include "padim/arith.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace padim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAUnitSeries: return "NotAUnitSeries";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::NotABinomialPower: return "NotABinomialPower";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::NotACategoricalSequence: return "NotACategoricalSequence";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnsupportedModel: return "UnsupportedModel";
    case ErrorKind::IsGenerator: return "IsGenerator";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::Internal: return "Internal";
  }
  return "Internal";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p))
    fail(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not a supported prime");
}

Residue mod_p(std::int64_t value, Residue p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

Residue mod_p(const BigInt& value, Residue p) {
  BigInt r = value % p;
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

namespace {

Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
  Residue r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

// binom(a, b) mod p for 0 <= a, b < p.
Residue small_binom(Residue a, Residue b, Residue p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  Residue num = 1, den = 1;
  for (Residue j = 0; j < b; ++j) {
    num = mul_mod(num, a - j, p);
    den = mul_mod(den, j + 1, p);
  }
  return mul_mod(num, inverse_mod(den, p), p);
}

void require_same_prime(Residue a, Residue b) {
  if (a != b)
    fail(ErrorKind::PrimeMismatch,
         "operands over p = " + std::to_string(a) + " and p = " + std::to_string(b));
}

// Indices of the nonzero coefficients.
std::vector<std::size_t> support(const std::vector<Residue>& c) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) s.push_back(i);
  return s;
}

}  // namespace

Residue inverse_mod(Residue a, Residue p) {
  a %= p;
  if (a == 0) fail(ErrorKind::NotInvertible, "zero has no inverse mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

Residue lucas_binom(std::uint64_t n, std::uint64_t k, Residue p) {
  Residue r = 1;
  while (k > 0 || n > 0) {
    Residue ni = static_cast<Residue>(n % p), ki = static_cast<Residue>(k % p);
    if (ki > ni) return 0;
    r = mul_mod(r, small_binom(ni, ki, p), p);
    n /= p;
    k /= p;
  }
  return r;
}

BigInt exact_binom(const BigInt& t, std::uint64_t k) {
  BigInt num = 1, den = 1;
  for (std::uint64_t j = 0; j < k; ++j) {
    num *= t - j;
    den *= j + 1;
  }
  return num / den;
}

std::uint64_t factorial_valuation(std::uint64_t n, Residue p) {
  std::uint64_t v = 0;
  while (n) {
    n /= p;
    v += n;
  }
  return v;
}

std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p)
      return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

// --- FpSeries --------------------------------------------------------------

FpSeries::FpSeries(Residue p, std::vector<Residue> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_prime(p);
  if (coeffs_.empty()) fail(ErrorKind::InvalidArgument, "series truncation must be positive");
  for (Residue c : coeffs_)
    if (c >= p) fail(ErrorKind::InvalidArgument, "series coefficient out of range [0, p)");
}

FpSeries FpSeries::one(Residue p, std::size_t trunc) {
  if (trunc == 0) fail(ErrorKind::InvalidArgument, "series truncation must be positive");
  std::vector<Residue> c(trunc, 0);
  c[0] = 1 % p;
  return FpSeries(p, std::move(c));
}

FpSeries FpSeries::one_plus_z(Residue p, std::size_t trunc, int sign) {
  FpSeries f = one(p, trunc);
  if (trunc > 1) f.coeffs_[1] = mod_p(sign, p);
  return f;
}

FpSeries FpSeries::from_integers(Residue p, std::span<const std::int64_t> values) {
  require_prime(p);
  std::vector<Residue> c;
  c.reserve(values.size());
  for (auto v : values) c.push_back(mod_p(v, p));
  return FpSeries(p, std::move(c));
}

Residue FpSeries::coeff(std::size_t i) const {
  if (i >= coeffs_.size())
    fail(ErrorKind::IndexOutOfRange,
         "coefficient " + std::to_string(i) + " is beyond truncation " + std::to_string(trunc()));
  return coeffs_[i];
}

FpSeries FpSeries::truncated(std::size_t trunc) const {
  if (trunc == 0 || trunc > coeffs_.size())
    fail(ErrorKind::InvalidArgument, "cannot truncate to a longer or empty series");
  return FpSeries(p_, std::vector<Residue>(coeffs_.begin(), coeffs_.begin() + trunc));
}

FpSeries FpSeries::scaled_variable(int sign) const {
  std::vector<Residue> c = coeffs_;
  if (sign < 0)
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = c[i] ? p_ - c[i] : 0;
  return FpSeries(p_, std::move(c));
}

// --- PadicInt --------------------------------------------------------------

PadicInt::PadicInt(Residue p, std::vector<Residue> digits) : p_(p), digits_(std::move(digits)) {
  require_prime(p);
  if (digits_.empty()) fail(ErrorKind::InvalidArgument, "p-adic precision must be positive");
  for (Residue d : digits_)
    if (d >= p) fail(ErrorKind::InvalidArgument, "p-adic digit out of range [0, p)");
}

PadicInt PadicInt::from_integer(Residue p, std::size_t precision, const BigInt& value) {
  require_prime(p);
  if (precision == 0) fail(ErrorKind::InvalidArgument, "p-adic precision must be positive");
  BigInt modulus = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(precision));
  BigInt v = value % modulus;
  if (v < 0) v += modulus;
  std::vector<Residue> d(precision);
  for (auto& digit : d) {
    digit = static_cast<Residue>(v % p);
    v /= p;
  }
  return PadicInt(p, std::move(d));
}

Residue PadicInt::digit(std::size_t i) const {
  if (i >= digits_.size())
    fail(ErrorKind::InsufficientPrecision,
         "digit " + std::to_string(i) + " is beyond precision " + std::to_string(precision()));
  return digits_[i];
}

BigInt PadicInt::to_unsigned() const {
  BigInt v = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * p_ + *it;
  return v;
}

BigInt PadicInt::to_signed() const {
  BigInt u = to_unsigned();
  BigInt modulus = boost::multiprecision::pow(BigInt(p_), static_cast<unsigned>(precision()));
  if (2 * u > modulus) u -= modulus;
  return u;
}

PadicInt PadicInt::truncated(std::size_t precision) const {
  if (precision == 0 || precision > digits_.size())
    fail(ErrorKind::InsufficientPrecision, "cannot raise precision by truncation");
  return PadicInt(p_, std::vector<Residue>(digits_.begin(), digits_.begin() + precision));
}

std::string PadicInt::to_digit_string() const {
  std::ostringstream out;
  out << "...";
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    if (p_ > 10 && it != digits_.rbegin()) out << '.';
    out << *it;
  }
  return out.str();
}

// --- series operations -----------------------------------------------------

FpSeries series_mul(const FpSeries& a, const FpSeries& b) {
  require_same_prime(a.p(), b.p());
  const Residue p = a.p();
  const std::size_t n = std::min(a.trunc(), b.trunc());
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  auto sa = support(ac);
  auto sb = support(bc);
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i : sa) {
    if (i >= n) break;
    for (std::size_t j : sb) {
      if (i + j >= n) break;
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(ac[i]) * bc[j]) % p;
    }
  }
  std::vector<Residue> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Residue>(acc[k]);
  return FpSeries(p, std::move(out));
}

FpSeries series_inv(const FpSeries& a) {
  const Residue p = a.p();
  const auto& c = a.coeffs();
  if (c[0] == 0) fail(ErrorKind::NotInvertible, "constant term is zero");
  const Residue inv0 = inverse_mod(c[0], p);
  auto sa = support(c);
  std::vector<Residue> b(a.trunc(), 0);
  b[0] = inv0;
  for (std::size_t k = 1; k < b.size(); ++k) {
    std::uint64_t s = 0;
    for (std::size_t i : sa) {
      if (i == 0) continue;
      if (i > k) break;
      s = (s + static_cast<std::uint64_t>(c[i]) * b[k - i]) % p;
    }
    b[k] = mul_mod(static_cast<Residue>((p - s) % p), inv0, p);
  }
  return FpSeries(p, std::move(b));
}

FpSeries pow_padic(const FpSeries& f, const PadicInt& t) {
  require_same_prime(f.p(), t.p());
  const Residue p = f.p();
  if (f.coeffs()[0] != 1) fail(ErrorKind::NotAUnitSeries, "f(0) must be 1");
  const std::size_t n = static_cast<std::size_t>(
      std::min<std::uint64_t>(f.trunc(), saturating_pow(p, t.precision())));

  FpSeries acc = FpSeries::one(p, n);
  std::uint64_t stride = 1;  // p^j
  for (std::size_t j = 0; j < t.precision() && stride < n; ++j) {
    const Residue tj = t.digit(j);
    if (tj != 0) {
      // f(z^{p^j})^{t_j} = (f^{t_j})(z^{p^j}); only ceil(n / p^j) terms matter.
      const std::size_t m = static_cast<std::size_t>((n + stride - 1) / stride);
      FpSeries base = f.truncated(m);
      FpSeries g = base;
      for (Residue e = 1; e < tj; ++e) g = series_mul(g, base);
      std::vector<Residue> shifted(n, 0);
      for (std::size_t k = 0; k < m; ++k) shifted[k * stride] = g.coeffs()[k];
      acc = series_mul(acc, FpSeries(p, std::move(shifted)));
    }
    if (stride > std::numeric_limits<std::uint64_t>::max() / p) break;
    stride *= p;
  }
  return acc;
}

Residue binom_coeff(const PadicInt& t, std::uint64_t n) {
  const Residue p = t.p();
  if (n >= saturating_pow(p, t.precision()))
    fail(ErrorKind::InsufficientPrecision,
         "coefficient " + std::to_string(n) + " needs more than " +
             std::to_string(t.precision()) + " digits");
  Residue r = 1;
  for (std::size_t i = 0; n > 0; ++i, n /= p)
    r = mul_mod(r, small_binom(t.digit(i), static_cast<Residue>(n % p), p), p);
  return r;
}

PadicInt extract_exponent(const FpSeries& f_in, Base base) {
  const FpSeries f = base == Base::Minus ? f_in.scaled_variable(-1) : f_in;
  const Residue p = f.p();
  if (f.coeffs()[0] != 1)
    fail(ErrorKind::NotABinomialPower, "constant term is not 1", 0);
  std::vector<Residue> digits;
  for (std::uint64_t pi = 1; pi < f.trunc(); pi *= p) {
    digits.push_back(f.coeffs()[pi]);
    if (pi > std::numeric_limits<std::uint64_t>::max() / p) break;
  }
  if (digits.empty())
    fail(ErrorKind::InsufficientPrecision, "series of truncation 1 determines no digit");
  PadicInt t(p, std::move(digits));
  const FpSeries expected = pow_padic(FpSeries::one_plus_z(p, f.trunc()), t);
  for (std::size_t k = 0; k < f.trunc(); ++k)
    if (expected.coeffs()[k] != f.coeffs()[k])
      fail(ErrorKind::NotABinomialPower,
           "coefficient " + std::to_string(k) + " disagrees with (1+z)^t", static_cast<std::int64_t>(k));
  return t;
}

// --- p-adic operations -----------------------------------------------------

PadicInt padic_add(const PadicInt& a, const PadicInt& b) {
  require_same_prime(a.p(), b.p());
  const Residue p = a.p();
  const std::size_t k = std::min(a.precision(), b.precision());
  std::vector<Residue> d(k);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(a.digits()[i]) + b.digits()[i] + carry;
    d[i] = static_cast<Residue>(s % p);
    carry = s / p;
  }
  return PadicInt(p, std::move(d));
}

PadicInt padic_neg(const PadicInt& a) {
  const Residue p = a.p();
  // -a = (complement of every digit) + 1.
  std::vector<Residue> d(a.precision());
  std::uint64_t carry = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(p - 1 - a.digits()[i]) + carry;
    d[i] = static_cast<Residue>(s % p);
    carry = s / p;
  }
  return PadicInt(p, std::move(d));
}

PadicInt padic_sub(const PadicInt& a, const PadicInt& b) { return padic_add(a, padic_neg(b)); }

PadicInt padic_mul(const PadicInt& a, const PadicInt& b) {
  require_same_prime(a.p(), b.p());
  const Residue p = a.p();
  const std::size_t k = std::min(a.precision(), b.precision());
  std::vector<std::uint64_t> acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a.digits()[i] == 0) continue;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; i + j < k; ++j) {
      std::uint64_t s = acc[i + j] + static_cast<std::uint64_t>(a.digits()[i]) * b.digits()[j] + carry;
      acc[i + j] = s % p;
      carry = s / p;
    }
  }
  std::vector<Residue> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = static_cast<Residue>(acc[i]);
  return PadicInt(p, std::move(d));
}

PadicInt padic_binomial(const PadicInt& t, std::uint64_t n) {
  const Residue p = t.p();
  const std::uint64_t v = factorial_valuation(n, p);
  if (t.precision() <= v)
    fail(ErrorKind::InsufficientPrecision,
         "binom(t, " + std::to_string(n) + ") loses " + std::to_string(v) + " digits of " +
             std::to_string(t.precision()));
  // The numerator is determined mod p^K by t mod p^K, so any representative works.
  return PadicInt::from_integer(p, t.precision() - v, exact_binom(t.to_unsigned(), n));
}

}  // namespace padim
