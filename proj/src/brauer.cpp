#include "padim/brauer.hpp"

#include <algorithm>
#include <sstream>

namespace padim {

namespace {

void trim_poly(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly poly_mod(FpPoly a, const FpPoly& m, Residue p) {
  trim_poly(a);
  const std::uint64_t lead_inv = inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<Residue>((a[shift + i] + (p - c) * m[i]) % p);
    trim_poly(a);
  }
  return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, Residue p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<Residue>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(out), m, p);
}

FpPoly poly_powmod(FpPoly base, BigInt e, const FpPoly& m, Residue p) {
  FpPoly result = poly_mod({1}, m, p);
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, Residue p) {
  trim_poly(a);
  trim_poly(b);
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

BigInt big_pow(std::uint64_t base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt reduce(const BigInt& v, const BigInt& m) {
  BigInt r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool is_irreducible_mod_p(const FpPoly& f_in, Residue p) {
  require_prime(p);
  FpPoly f = f_in;
  for (auto& c : f) c %= p;
  trim_poly(f);
  if (f.size() < 2) return false;
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  if (d == 1) return true;
  // Rabin: x^{p^d} = x mod f, and gcd(x^{p^{d/q}} - x, f) = 1 for primes q | d.
  const FpPoly x{0, 1};
  auto frobenius_minus_x = [&](unsigned k) {
    FpPoly r = poly_powmod(x, big_pow(p, k), f, p);
    r.resize(std::max<std::size_t>(r.size(), 2), 0);
    r[1] = (r[1] + p - 1) % p;
    trim_poly(r);
    return r;
  };
  if (!frobenius_minus_x(d).empty()) return false;
  for (unsigned q : prime_divisors(d))
    if (poly_gcd(f, frobenius_minus_x(d / q), p).size() != 1) return false;
  return true;
}

FpPoly find_irreducible(Residue p, unsigned d) {
  require_prime(p);
  if (d == 0) fail(ErrorKind::InvalidArgument, "degree must be positive");
  FpPoly f(d + 1, 0);
  f[d] = 1;
  while (true) {
    if (is_irreducible_mod_p(f, p)) return f;
    // Odometer over (c_{d-1}, ..., c_0) with c_0 the fastest digit.
    std::size_t i = 0;
    while (i < d && ++f[i] == p) f[i++] = 0;
    if (i == d) fail(ErrorKind::Internal, "no irreducible polynomial found");
  }
}

UnramifiedRing::UnramifiedRing(Residue p, std::size_t precision, std::vector<std::int64_t> modulus)
    : p_(p), precision_(precision), modulus_(std::move(modulus)) {
  require_prime(p);
  if (precision_ == 0) fail(ErrorKind::InvalidArgument, "precision must be positive");
  if (modulus_.size() < 2 || modulus_.back() != 1)
    fail(ErrorKind::InvalidArgument, "modulus must be monic of positive degree");
  pk_ = big_pow(p, precision_);
  FpPoly reduced;
  for (auto c : modulus_) reduced.push_back(mod_p(c, p));
  if (!is_irreducible_mod_p(reduced, p)) fail(ErrorKind::InvalidArgument, "modulus is reducible mod p");
}

UnramifiedRing UnramifiedRing::standard(Residue p, std::size_t precision, unsigned d) {
  const FpPoly f = find_irreducible(p, d);
  return UnramifiedRing(p, precision, std::vector<std::int64_t>(f.begin(), f.end()));
}

UnramifiedRing::Element UnramifiedRing::one() const {
  Element e = zero();
  e[0] = 1 % pk_;
  return e;
}

UnramifiedRing::Element UnramifiedRing::element(const std::vector<BigInt>& coeffs) const {
  const std::size_t d = degree();
  std::vector<BigInt> a(coeffs);
  for (auto& c : a) c = reduce(c, pk_);
  // Monic reduction: x^d = -sum_{i<d} m_i x^i.
  for (std::size_t top = a.size(); top-- > d;) {
    const BigInt c = a[top];
    if (c == 0) continue;
    a[top] = 0;
    for (std::size_t i = 0; i < d; ++i) a[top - d + i] = reduce(a[top - d + i] - c * modulus_[i], pk_);
  }
  a.resize(d, 0);
  return a;
}

UnramifiedRing::Element UnramifiedRing::element(const std::vector<std::int64_t>& coeffs) const {
  return element(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

UnramifiedRing::Element UnramifiedRing::embed(const PadicInt& t) const {
  if (t.p() != p_) fail(ErrorKind::PrimeMismatch, "weight over a different prime");
  if (t.precision() < precision_)
    fail(ErrorKind::InsufficientPrecision, "weight known to " + std::to_string(t.precision()) +
                                               " digits, ring needs " + std::to_string(precision_));
  return element(std::vector<BigInt>{t.truncated(precision_).to_unsigned()});
}

UnramifiedRing::Element UnramifiedRing::add(const Element& a, const Element& b) const {
  Element out(degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = reduce(a[i] + b[i], pk_);
  return out;
}

UnramifiedRing::Element UnramifiedRing::sub(const Element& a, const Element& b) const {
  Element out(degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = reduce(a[i] - b[i], pk_);
  return out;
}

UnramifiedRing::Element UnramifiedRing::mul(const Element& a, const Element& b) const {
  std::vector<BigInt> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  return element(prod);
}

UnramifiedRing::Element UnramifiedRing::pow(const Element& a, const BigInt& e_in) const {
  if (e_in < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
  Element result = one(), base = a;
  BigInt e = e_in;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

FpPoly UnramifiedRing::reduce_mod_p(const Element& a) const {
  FpPoly out;
  for (const auto& c : a) out.push_back(mod_p(c, p_));
  trim_poly(out);
  return out;
}

bool UnramifiedRing::is_unit(const Element& a) const { return !reduce_mod_p(a).empty(); }

std::string UnramifiedRing::to_text(const Element& a) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << a[i];
    } else {
      if (a[i] != 1) out << a[i] << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return first ? "0" : out.str();
}

UnramifiedRing::Element teichmuller(const UnramifiedRing& ring, const UnramifiedRing::Element& a) {
  if (a.size() != ring.degree()) fail(ErrorKind::InvalidArgument, "element has the wrong length");
  if (!ring.is_unit(a)) fail(ErrorKind::NotAUnit, "element vanishes mod p");
  const BigInt q = big_pow(ring.p(), ring.degree());
  UnramifiedRing::Element w = a;
  // Each step fixes one more p-adic digit, so precision() + 1 steps suffice.
  for (std::size_t step = 0; step <= ring.precision(); ++step) {
    UnramifiedRing::Element next = ring.pow(w, q);
    if (next == w) return w;
    w = std::move(next);
  }
  fail(ErrorKind::Internal, "Teichmueller iteration did not stabilize");
}

namespace {

UnramifiedRing::Element lift_eigenvalue(const UnramifiedRing& ring, const std::vector<Residue>& eigenvalue) {
  if (eigenvalue.size() > ring.degree())
    fail(ErrorKind::InvalidArgument, "eigenvalue has more coefficients than the ring degree");
  std::vector<BigInt> coeffs;
  for (Residue c : eigenvalue) {
    if (c >= ring.p()) fail(ErrorKind::InvalidArgument, "eigenvalue coefficients must lie in [0, p)");
    coeffs.emplace_back(c);
  }
  return teichmuller(ring, ring.element(coeffs));
}

}  // namespace

UnramifiedRing::Element brauer_char(const UnramifiedRing& ring, const std::vector<EigenDatum>& data) {
  UnramifiedRing::Element sum = ring.zero();
  for (const auto& datum : data)
    sum = ring.add(sum, ring.mul(ring.embed(datum.weight), lift_eigenvalue(ring, datum.eigenvalue)));
  return sum;
}

UnramifiedRing::Element brauer_char(const UnramifiedRing& ring, const std::vector<EigenSequence>& data,
                                    Base weight_source) {
  std::vector<EigenDatum> weighted;
  for (const auto& item : data) {
    if (item.sequence.p() != ring.p()) fail(ErrorKind::PrimeMismatch, "sequence over a different prime");
    PadicInt w = weight_source == Base::Plus ? dim_plus(item.sequence) : dim_minus(item.sequence);
    weighted.push_back({item.eigenvalue, std::move(w)});
  }
  return brauer_char(ring, weighted);
}

}  // namespace padim
