#include "padim/dimcore.hpp"

#include <algorithm>

namespace padim {

std::string_view to_string(Kind kind) {
  return kind == Kind::Symmetric ? "symmetric" : "exterior";
}

Kind parse_kind(std::string_view text) {
  if (text == "symmetric" || text == "sym" || text == "plus") return Kind::Symmetric;
  if (text == "exterior" || text == "ext" || text == "minus") return Kind::Exterior;
  fail(ErrorKind::InvalidArgument, "unknown kind '" + std::string(text) + "'");
}

DimSequence::DimSequence(Residue p, Kind kind, std::vector<Residue> values)
    : p_(p), kind_(kind), values_(std::move(values)) {
  require_prime(p);
  if (values_.empty() || values_[0] != 1)
    fail(ErrorKind::InvalidArgument, "a dimension sequence starts with d_0 = 1");
  for (Residue v : values_)
    if (v >= p) fail(ErrorKind::InvalidArgument, "dimension outside [0, p)");
}

DimSequence DimSequence::from_integers(Residue p, Kind kind, std::span<const std::int64_t> values) {
  require_prime(p);
  std::vector<Residue> v;
  v.reserve(values.size());
  for (auto x : values) v.push_back(mod_p(x, p));
  return DimSequence(p, kind, std::move(v));
}

// --- universal polynomials -------------------------------------------------

UniversalPoly::UniversalPoly(Residue p, Terms terms) : p_(p), terms_() {
  for (auto& [m, c] : terms) {
    Monomial mono = m;
    trim(mono);
    for (unsigned e : mono)
      if (e >= p) fail(ErrorKind::Internal, "universal polynomial has degree >= p in a variable");
    const Residue r = c % p;
    if (r) terms_[mono] = r;
  }
}

std::size_t UniversalPoly::variable_count() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return n;
}

Residue UniversalPoly::evaluate(std::span<const Residue> point) const {
  std::uint64_t sum = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t v = c;
    for (std::size_t i = 0; i < m.size() && v; ++i) {
      const Residue x = i < point.size() ? point[i] % p_ : 0;
      for (unsigned e = 0; e < m[i]; ++e) v = v * x % p_;
    }
    sum = (sum + v) % p_;
  }
  return static_cast<Residue>(sum);
}

std::string UniversalPoly::to_text() const {
  std::vector<std::pair<long long, std::string>> t;
  for (const auto& [m, c] : terms_) t.emplace_back(c, format_monomial(m, "z", 0));
  return join_terms(t);
}

namespace {

using Univariate = std::vector<Residue>;  // coefficient of z^k at index k

// binom(c*z, k) over F_p for 0 <= k < p.
Univariate binom_of_scaled(Residue c, Residue k, Residue p) {
  Univariate poly{1};
  for (Residue j = 0; j < k; ++j) {
    // multiply by (c*z - j)
    Univariate next(poly.size() + 1, 0);
    const Residue minus_j = (p - j % p) % p;
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e] = static_cast<Residue>((next[e] + static_cast<std::uint64_t>(poly[e]) * minus_j) % p);
      next[e + 1] = static_cast<Residue>((next[e + 1] + static_cast<std::uint64_t>(poly[e]) * c) % p);
    }
    poly = std::move(next);
  }
  std::uint64_t fact = 1;
  for (Residue j = 2; j <= k; ++j) fact = fact * j % p;
  const Residue inv = inverse_mod(static_cast<Residue>(fact), p);
  for (auto& a : poly) a = static_cast<Residue>(static_cast<std::uint64_t>(a) * inv % p);
  return poly;
}

std::vector<Residue> base_p_digits(std::uint64_t n, Residue p) {
  std::vector<Residue> d;
  for (; n > 0; n /= p) d.push_back(static_cast<Residue>(n % p));
  return d;
}

// (-1)^{p^i}: -1 except for p = 2, i >= 1.
Residue power_sign(Residue p, std::size_t i) { return (p == 2 && i >= 1) ? 1 : p - 1; }

}  // namespace

UniversalPoly q_n(Residue p, std::uint64_t n, Kind kind) {
  require_prime(p);
  const auto digits = base_p_digits(n, p);
  UniversalPoly::Terms acc;
  acc[Monomial{}] = (kind == Kind::Symmetric && n % 2 == 1) ? p - 1 : 1 % p;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) continue;
    const Residue c = kind == Kind::Symmetric ? power_sign(p, i) : 1;
    const Univariate factor = binom_of_scaled(c, digits[i], p);
    UniversalPoly::Terms next;
    for (const auto& [m, a] : acc) {
      for (std::size_t e = 0; e < factor.size(); ++e) {
        if (factor[e] == 0) continue;
        Monomial mono = m;
        if (mono.size() <= i) mono.resize(i + 1, 0);
        mono[i] += static_cast<unsigned>(e);
        trim(mono);
        auto& slot = next[mono];
        slot = static_cast<Residue>((slot + static_cast<std::uint64_t>(a) * factor[e]) % p);
      }
    }
    acc = std::move(next);
  }
  return UniversalPoly(p, std::move(acc));
}

namespace {

// (d_1, d_p, d_{p^2}, ...) for every p^i <= limit.
std::vector<Residue> generator_values(const DimSequence& seq, std::size_t limit) {
  std::vector<Residue> point;
  for (std::uint64_t pi = 1; pi <= limit; pi *= seq.p()) point.push_back(seq[pi]);
  return point;
}

}  // namespace

std::optional<std::size_t> check_universal(const DimSequence& seq) {
  const auto point = generator_values(seq, seq.max_degree());
  for (std::size_t n = 0; n <= seq.max_degree(); ++n)
    if (q_n(seq.p(), n, seq.kind()).evaluate(point) != seq[n]) return n;
  return std::nullopt;
}

std::size_t certified_digits(const DimSequence& seq) {
  std::size_t k = 0;
  for (std::uint64_t pi = 1; pi <= seq.max_degree(); pi *= seq.p()) ++k;
  return k;
}

namespace {

void require_kind(const DimSequence& seq, Kind kind) {
  if (seq.kind() != kind)
    fail(ErrorKind::KindMismatch, "expected a " + std::string(to_string(kind)) + " sequence, got " +
                                      std::string(to_string(seq.kind())));
}

void require_consistent(const DimSequence& seq, Checking checking) {
  if (checking == Checking::Unchecked) return;
  if (auto bad = check_universal(seq))
    fail(ErrorKind::NotACategoricalSequence,
         "d_" + std::to_string(*bad) + " violates the universal polynomial relation",
         static_cast<std::int64_t>(*bad));
}

}  // namespace

PadicInt dim_plus(const DimSequence& seq, Checking checking) {
  require_kind(seq, Kind::Symmetric);
  require_consistent(seq, checking);
  const std::size_t k = certified_digits(seq);
  if (k == 0) fail(ErrorKind::InsufficientPrecision, "need d_1 to determine any digit");
  const auto gens = generator_values(seq, seq.max_degree());
  std::vector<Residue> delta(k);
  for (std::size_t i = 0; i < k; ++i)
    delta[i] = static_cast<Residue>(static_cast<std::uint64_t>(power_sign(seq.p(), i)) * gens[i] % seq.p());
  return padic_neg(PadicInt(seq.p(), std::move(delta)));
}

PadicInt dim_minus(const DimSequence& seq, Checking checking) {
  require_kind(seq, Kind::Exterior);
  require_consistent(seq, checking);
  const std::size_t k = certified_digits(seq);
  if (k == 0) fail(ErrorKind::InsufficientPrecision, "need d_1 to determine any digit");
  return PadicInt(seq.p(), generator_values(seq, seq.max_degree()));
}

DimSequence convolve(const DimSequence& a, const DimSequence& b) {
  if (a.p() != b.p()) fail(ErrorKind::PrimeMismatch, "sequences over different primes");
  if (a.kind() != b.kind()) fail(ErrorKind::KindMismatch, "cannot convolve mixed kinds");
  const FpSeries prod = series_mul(a.as_series(), b.as_series());
  return DimSequence(a.p(), a.kind(), prod.coeffs());
}

Residue koszul_euler(const DimSequence& sym, const DimSequence& ext, std::size_t n) {
  if (sym.p() != ext.p()) fail(ErrorKind::PrimeMismatch, "sequences over different primes");
  require_kind(sym, Kind::Symmetric);
  require_kind(ext, Kind::Exterior);
  if (n > sym.max_degree() || n > ext.max_degree())
    fail(ErrorKind::IndexOutOfRange, "degree " + std::to_string(n) + " exceeds the sequences");
  const Residue p = sym.p();
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    std::uint64_t term = static_cast<std::uint64_t>(sym[j]) * ext[n - j] % p;
    if (j % 2 == 1) term = (p - term) % p;
    sum = (sum + term) % p;
  }
  return static_cast<Residue>(sum);
}

// --- catalog -----------------------------------------------------------------

ModelPair catalog_vec(Residue p, std::uint64_t dim, std::size_t max_degree) {
  require_prime(p);
  std::vector<Residue> s(max_degree + 1), e(max_degree + 1);
  for (std::size_t j = 0; j <= max_degree; ++j) {
    s[j] = dim == 0 ? (j == 0 ? 1 : 0) : lucas_binom(dim + j - 1, j, p);
    e[j] = lucas_binom(dim, j, p);
  }
  return {DimSequence(p, Kind::Symmetric, std::move(s)), DimSequence(p, Kind::Exterior, std::move(e))};
}

ModelPair catalog_supervec(Residue p, std::uint64_t even, std::uint64_t odd, std::size_t max_degree) {
  require_prime(p);
  if (p == 2) fail(ErrorKind::UnsupportedModel, "supervector spaces need p > 2");
  const BigInt m(even), n(odd);
  std::vector<Residue> s(max_degree + 1), e(max_degree + 1);
  for (std::size_t j = 0; j <= max_degree; ++j) {
    BigInt sj = 0, ej = 0;
    for (std::size_t b = 0; b <= j; ++b) {
      const std::size_t a = j - b;
      const int sign = b % 2 ? -1 : 1;
      sj += exact_binom(m + a - 1, a) * sign * exact_binom(n, b);
      ej += exact_binom(m, a) * sign * exact_binom(n + b - 1, b);
    }
    s[j] = mod_p(sj, p);
    e[j] = mod_p(ej, p);
  }
  return {DimSequence(p, Kind::Symmetric, std::move(s)), DimSequence(p, Kind::Exterior, std::move(e))};
}

ModelPair catalog_rep_d(Residue p, std::size_t max_degree) {
  if (p != 2) fail(ErrorKind::UnsupportedModel, "the Rep D model lives in characteristic 2");
  std::vector<Residue> v(max_degree + 1, 0);
  v[0] = 1;
  return {DimSequence(p, Kind::Symmetric, v), DimSequence(p, Kind::Exterior, v)};
}

ModelPair catalog_ver_l2(Residue p, std::size_t max_degree) {
  require_prime(p);
  if (p < 3) fail(ErrorKind::UnsupportedModel, "L_2 exists in Ver_p only for p >= 3");
  std::vector<Residue> s(max_degree + 1, 0), e(max_degree + 1, 0);
  for (std::size_t j = 0; j <= max_degree && j + 2 <= p; ++j) s[j] = static_cast<Residue>(j + 1);
  if (p == 3) {
    // Here L_2 is the odd line, whose exterior powers never vanish.
    for (std::size_t j = 0; j <= max_degree; ++j) e[j] = j % 2 ? 2 : 1;
  } else {
    const Residue ext[] = {1, 2, 1};
    for (std::size_t j = 0; j <= max_degree && j < 3; ++j) e[j] = ext[j];
  }
  return {DimSequence(p, Kind::Symmetric, std::move(s)), DimSequence(p, Kind::Exterior, std::move(e))};
}

ModelPair catalog(std::string_view name, std::span<const std::uint64_t> params, Residue p,
                  std::size_t max_degree) {
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      fail(ErrorKind::InvalidArgument, "model '" + std::string(name) + "' takes " +
                                           std::to_string(count) + " parameter(s)");
  };
  if (name == "vec") {
    want(1);
    return catalog_vec(p, params[0], max_degree);
  }
  if (name == "supervec") {
    want(2);
    return catalog_supervec(p, params[0], params[1], max_degree);
  }
  if (name == "repD") {
    want(0);
    return catalog_rep_d(p, max_degree);
  }
  if (name == "ver_L2") {
    want(0);
    return catalog_ver_l2(p, max_degree);
  }
  fail(ErrorKind::UnsupportedModel, "unknown model '" + std::string(name) + "'");
}

}  // namespace padim
