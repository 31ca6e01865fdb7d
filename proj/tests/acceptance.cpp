// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "padim/arith.hpp"
#include "padim/brauer.hpp"
#include "padim/dimcore.hpp"
#include "padim/ivpring.hpp"
#include "padim/modrep.hpp"
#include "padim/symgroup.hpp"

using namespace padim;

namespace {

// Wall-clock limits in seconds.
constexpr double kVerlindeLimit = 60.0;
constexpr double kQnLimit = 30.0;

// Randomized sample sizes and precisions.
constexpr int kRoundTripsPerPrime = 1000;
constexpr std::size_t kRoundTripDigits = 6;
constexpr int kExponentLawCases = 10000;
constexpr std::size_t kTeichmullerPrecision = 6;
constexpr std::uint64_t kTeichmullerFieldBound = 49;
constexpr unsigned kCyclicOrderBound = 12;

struct Outcome {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string text(const PadicInt& t) { return t.to_digit_string() + " (" + t.to_signed().str() + ")"; }

PadicInt mod_power(const PadicInt& t, std::size_t k) { return t.truncated(std::min(k, t.precision())); }

// 1. Dim of L_2 in Ver_p through the Jordan-type engine.
void verlinde(Outcome& out) {
  const auto start = Clock::now();
  for (Residue p : {5u, 7u, 11u, 13u}) {
    const std::size_t k = p <= 7 ? 3 : 2;
    const VerObject l2 = VerObject::simple(p, 2);
    const std::size_t degree = std::size_t{p} * p + 1;
    const PadicInt plus = dim_plus(ver_dim_sequence(l2, Kind::Symmetric, degree));
    const PadicInt minus = dim_minus(ver_dim_sequence(l2, Kind::Exterior, degree));
    const std::string tag = "p=" + std::to_string(p);
    out.expect(plus.precision() >= k && mod_power(plus, k) == PadicInt::from_integer(p, k, 2 - static_cast<int>(p)),
               tag + " Dim+ = " + text(plus));
    out.expect(minus.precision() >= k && mod_power(minus, k) == PadicInt::from_integer(p, k, 2),
               tag + " Dim- = " + text(minus));
  }
  const double elapsed = seconds_since(start);
  out.expect(elapsed <= kVerlindeLimit, "took " + std::to_string(elapsed) + " s");
  out.note = std::to_string(elapsed).substr(0, 5) + " s";
}

// 2. Worked trace polynomials and recurrences, string-exact.
void worked_examples(Outcome& out) {
  const auto c21 = double_cosets(Partition({2, 1}));
  const auto c31 = double_cosets(Partition({3, 1}));
  const std::string a = trace_polynomial(Partition({2, 1}), c21.at(1).matrix).to_text();
  const std::string b = trace_polynomial(Partition({3, 1}), c31.at(1).matrix).to_text();
  const std::string c = derive_recurrence(2, 3).to_text();
  const std::string d = derive_recurrence(3, 4).to_text();
  out.expect(a == "d1^2 + d1", "(2,1): " + a);
  out.expect(b == "d1*d2 + d1^2 + d1", "(3,1): " + b);
  out.expect(c == "d3 = d1*d2 + d1^2 + d1", "p=2 n=3: " + c);
  out.expect(d == "d4 = d1*d3 - d1^3 + d1", "p=3 n=4: " + d);
}

// 3. Q_n against vector-space sequences.
void qn_oracle(Outcome& out) {
  const auto start = Clock::now();
  for (Residue p : {2u, 3u, 5u}) {
    const std::uint64_t bound = std::uint64_t{p} * p * p;
    std::vector<UniversalPoly> q;
    for (std::uint64_t n = 0; n < bound; ++n) q.push_back(q_n(p, n, Kind::Symmetric));
    for (std::uint64_t N = 0; N < bound; ++N) {
      std::vector<Residue> d(bound);
      for (std::uint64_t r = 0; r < bound; ++r) d[r] = r == 0 ? 1 : oracle::mod(oracle::binom(N + r - 1, r), p);
      const std::vector<Residue> point{d[1], d[p], d[std::size_t{p} * p]};
      for (std::uint64_t n = 0; n < bound; ++n) {
        const std::span<const Residue> args(point.data(), q[n].variable_count());
        out.expect(q[n].evaluate(args) == d[n],
                   "p=" + std::to_string(p) + " N=" + std::to_string(N) + " n=" + std::to_string(n));
      }
    }
  }
  const double elapsed = seconds_since(start);
  out.expect(elapsed <= kQnLimit, "took " + std::to_string(elapsed) + " s");
  out.note = std::to_string(elapsed).substr(0, 5) + " s";
}

// 4. extract_exponent inverts pow_padic in both bases.
void round_trip(Outcome& out) {
  std::mt19937_64 rng(20240611);
  for (Residue p : {2u, 3u, 5u, 7u}) {
    const std::size_t trunc = saturating_pow(p, kRoundTripDigits - 1) + 1;
    std::uniform_int_distribution<Residue> digit(0, p - 1);
    for (int trial = 0; trial < kRoundTripsPerPrime; ++trial) {
      std::vector<Residue> digits(kRoundTripDigits);
      for (auto& x : digits) x = digit(rng);
      const PadicInt t(p, digits);
      for (Base base : {Base::Plus, Base::Minus}) {
        const int sign = base == Base::Plus ? 1 : -1;
        const PadicInt back = extract_exponent(pow_padic(FpSeries::one_plus_z(p, trunc, sign), t), base);
        out.expect(back == t, "p=" + std::to_string(p) + " t=" + t.to_digit_string() + " got " + back.to_digit_string());
      }
    }
  }
}

// 5. Quadratic relations among binomial dimensions, both bases.
void quadratic_relations(Outcome& out) {
  for (std::uint64_t N = 0; N <= 30; ++N)
    for (std::uint64_t i = 0; i <= 10; ++i)
      for (std::uint64_t j = 0; j <= 10; ++j) {
        oracle::Big rhs = 0;
        for (std::uint64_t k = std::max(i, j); k <= i + j; ++k)
          rhs += oracle::Big(structure_constant(i, j, k)) * oracle::binom(N, k);
        out.expect(oracle::binom(N, i) * oracle::binom(N, j) == rhs,
                   "e: N=" + std::to_string(N) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
  auto sym_dim = [](std::uint64_t N, std::uint64_t r) { return r == 0 ? oracle::Big(1) : oracle::binom(N + r - 1, r); };
  for (std::uint64_t i = 0; i <= 10; ++i)
    for (std::uint64_t j = 0; j <= 10; ++j) {
      const auto coords = to_s_coordinates(e_mul(s_basis(i), s_basis(j)));
      for (std::uint64_t N = 0; N <= 20; ++N) {
        oracle::Big rhs = 0;
        for (const auto& [k, c] : coords) rhs += oracle::Big(c) * sym_dim(N, k);
        out.expect(sym_dim(N, i) * sym_dim(N, j) == rhs,
                   "s: N=" + std::to_string(N) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
}

// 6. Koszul Euler characteristics.
void koszul(Outcome& out) {
  auto vanishes = [&](const ModelPair& m, const std::string& tag) {
    for (std::size_t n = 1; n <= 50; ++n)
      out.expect(koszul_euler(m.symmetric, m.exterior, n) == 0, tag + " n=" + std::to_string(n));
  };
  for (Residue p : {2u, 3u, 5u})
    for (std::uint64_t N = 0; N <= 10; ++N)
      vanishes(catalog_vec(p, N, 50), "vec(" + std::to_string(N) + ") p=" + std::to_string(p));
  for (Residue p : {3u, 5u})
    for (std::uint64_t m = 0; m <= 4; ++m)
      for (std::uint64_t n = 0; n <= 4; ++n)
        vanishes(catalog_supervec(p, m, n, 50),
                 "supervec(" + std::to_string(m) + "," + std::to_string(n) + ") p=" + std::to_string(p));
  const VerObject l2 = VerObject::simple(5, 2);
  const DimSequence sym = ver_dim_sequence(l2, Kind::Symmetric, 50);
  const DimSequence ext = ver_dim_sequence(l2, Kind::Exterior, 50);
  const Residue chi5 = koszul_euler(sym, ext, 5);
  out.expect(chi5 == 1, "chi_5 of L_2 = " + std::to_string(chi5));
  out.expect(dim_plus(sym) != dim_minus(ext), "Dim+ equals Dim- for L_2");
  out.note = "chi_5(L_2) = " + std::to_string(chi5);
}

// 7. Grothendieck ring identities in Ver_5.
void grothendieck(Outcome& out) {
  const GrElement l2 = GrElement::of(VerObject::simple(5, 2));
  const GrElement l3 = GrElement::of(VerObject::simple(5, 3));
  const GrElement square = l3.times(l3);
  out.expect(square == l3 + GrElement::one(5), "[L3]^2 = " + square.to_text());
  const GrElement p4 = gr_eval(ultraspherical(4), l2);
  out.expect(p4.is_zero(), "P_4([L2]) = " + p4.to_text());
}

// 8. Dim- is not multiplicative in Ver_5.
void non_multiplicative(Outcome& out) {
  const VerObject l2 = VerObject::simple(5, 2);
  const VerObject l4 = VerObject::simple(5, 4);
  const std::size_t degree = 25;
  const PadicInt lhs = dim_minus(ver_dim_sequence(ver_tensor(l2, l4), Kind::Exterior, degree));
  const PadicInt a = dim_minus(ver_dim_sequence(l2, Kind::Exterior, degree));
  const PadicInt b = dim_minus(ver_dim_sequence(l4, Kind::Exterior, degree));
  const PadicInt rhs = padic_mul(a, b);
  out.expect(lhs != rhs, "both sides equal " + text(lhs));
  out.note = "Dim-(L2*L4) = " + lhs.to_signed().str() + ", Dim-(L2)*Dim-(L4) = " + rhs.to_signed().str();
}

// 9. Superdimension of supervector spaces.
void supervec(Outcome& out) {
  for (Residue p : {3u, 5u, 7u})
    for (std::uint64_t m = 0; m <= 4; ++m)
      for (std::uint64_t n = 0; n <= 4; ++n) {
        const ModelPair s = catalog_supervec(p, m, n, std::size_t{p} * p);
        const PadicInt expected = PadicInt::from_integer(p, 3, static_cast<long long>(m) - static_cast<long long>(n));
        const std::string tag = "p=" + std::to_string(p) + " (" + std::to_string(m) + "|" + std::to_string(n) + ")";
        const PadicInt plus = dim_plus(s.symmetric);
        const PadicInt minus = dim_minus(s.exterior);
        out.expect(plus.precision() == 3 && plus == expected, tag + " Dim+ = " + text(plus));
        out.expect(minus.precision() == 3 && minus == expected, tag + " Dim- = " + text(minus));
      }
}

// 10. Rep of the restricted Lie algebra D in characteristic 2.
void rep_d(Outcome& out) {
  const std::size_t degree = 8;
  const ModelPair d = catalog_rep_d(2, degree);
  const ModelPair one = catalog_vec(2, 1, degree);
  const PadicInt zero = PadicInt::from_integer(2, 4, 0);
  const PadicInt two = PadicInt::from_integer(2, 4, 2);
  out.expect(dim_plus(d.symmetric) == zero, "Dim+(D) = " + text(dim_plus(d.symmetric)));
  out.expect(dim_minus(d.exterior) == zero, "Dim-(D) = " + text(dim_minus(d.exterior)));
  const PadicInt plus = padic_add(dim_plus(one.symmetric), dim_plus(one.symmetric));
  const PadicInt minus = padic_add(dim_minus(one.exterior), dim_minus(one.exterior));
  out.expect(plus == two, "Dim+(1)+Dim+(1) = " + text(plus));
  out.expect(minus == two, "Dim-(1)+Dim-(1) = " + text(minus));
}

// 11. Teichmuller lifts and classical Brauer characters.
void brauer(Outcome& out) {
  for (Residue p = 2; p <= kTeichmullerFieldBound; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned d = 1; saturating_pow(p, d) <= kTeichmullerFieldBound; ++d) {
      const UnramifiedRing ring = UnramifiedRing::standard(p, kTeichmullerPrecision, d);
      const BigInt order = BigInt(saturating_pow(p, d)) - 1;
      for (const oracle::Poly& a : oracle::all_elements(p, d)) {
        if (oracle::is_zero(a)) continue;
        const UnramifiedRing::Element w = teichmuller(ring, ring.element(std::vector<std::int64_t>(a.begin(), a.end())));
        const std::string tag = "p=" + std::to_string(p) + " d=" + std::to_string(d);
        out.expect(ring.pow(w, order) == ring.one(), tag + " omega^(q-1) != 1");
        FpPoly residue(a.begin(), a.end());
        while (!residue.empty() && residue.back() == 0) residue.pop_back();
        out.expect(ring.reduce_mod_p(w) == residue, tag + " omega != a mod p");
      }
    }
  }
  // Z/m rotating F_p[Z/m]: g^k has eigenvalues zeta^k over the m-th roots zeta.
  for (Residue p : {2u, 3u, 5u, 7u, 11u})
    for (unsigned m = 1; m <= kCyclicOrderBound; ++m) {
      if (std::gcd<unsigned>(m, p) != 1) continue;
      const unsigned d = oracle::order_mod(p, m);
      if (saturating_pow(p, d) > 20000) continue;
      const oracle::Poly monic = oracle::oracle_modulus(p, d);
      const UnramifiedRing ring(p, 4, std::vector<std::int64_t>(monic.begin(), monic.end()));
      oracle::Poly one(d, 0);
      one[0] = 1;
      std::vector<oracle::Poly> roots;
      for (const auto& z : oracle::all_elements(p, d))
        if (!oracle::is_zero(z) && oracle::fq_pow(z, m, monic, p) == one) roots.push_back(z);
      out.expect(roots.size() == m, "root count");
      for (unsigned k = 0; k < m; ++k) {
        std::vector<EigenDatum> data;
        for (const auto& z : roots) {
          const oracle::Poly zk = oracle::fq_pow(z, k, monic, p);
          data.push_back({{zk.begin(), zk.end()}, PadicInt::from_integer(p, 4, 1)});
        }
        const std::int64_t fixed = k == 0 ? m : 0;
        out.expect(brauer_char(ring, data) == ring.element(std::vector<std::int64_t>{fixed}),
                   "p=" + std::to_string(p) + " m=" + std::to_string(m) + " k=" + std::to_string(k));
      }
    }
}

// 12. Property suites.
void properties(Outcome& out) {
  // Additivity of Dim under direct sums, over every catalog pair sharing p.
  for (Residue p : {2u, 3u, 5u}) {
    const std::size_t degree = std::size_t{p} * p * p;
    std::vector<std::pair<std::string, ModelPair>> models;
    for (std::uint64_t N = 0; N <= 3; ++N) models.emplace_back("vec" + std::to_string(N), catalog_vec(p, N, degree));
    if (p > 2) {
      for (std::uint64_t m = 0; m <= 2; ++m)
        for (std::uint64_t n = 0; n <= 2; ++n)
          models.emplace_back("supervec" + std::to_string(m) + std::to_string(n), catalog_supervec(p, m, n, degree));
      models.emplace_back("ver_L2", catalog_ver_l2(p, degree));
    } else {
      models.emplace_back("repD", catalog_rep_d(p, degree));
    }
    for (const auto& [na, a] : models)
      for (const auto& [nb, b] : models) {
        const std::string tag = "p=" + std::to_string(p) + " " + na + "+" + nb;
        out.expect(dim_plus(convolve(a.symmetric, b.symmetric)) == padic_add(dim_plus(a.symmetric), dim_plus(b.symmetric)),
                   tag + " Dim+");
        out.expect(dim_minus(convolve(a.exterior, b.exterior)) == padic_add(dim_minus(a.exterior), dim_minus(b.exterior)),
                   tag + " Dim-");
      }
  }

  // Exponent laws for unit series.
  std::mt19937_64 rng(777);
  const std::vector<Residue> primes{2, 3, 5, 7};
  for (int trial = 0; trial < kExponentLawCases; ++trial) {
    const Residue p = primes[trial % primes.size()];
    std::uniform_int_distribution<Residue> digit(0, p - 1);
    const std::size_t trunc = std::uniform_int_distribution<std::size_t>(1, 60)(rng);
    const std::size_t k = 7;  // p^k > 60 for every p used
    auto random_unit = [&] {
      std::vector<Residue> c(trunc);
      for (auto& x : c) x = digit(rng);
      c[0] = 1;
      return FpSeries(p, c);
    };
    auto random_padic = [&] {
      std::vector<Residue> d(k);
      for (auto& x : d) x = digit(rng);
      return PadicInt(p, d);
    };
    const FpSeries f = random_unit(), g = random_unit();
    const PadicInt a = random_padic(), b = random_padic();
    const std::string tag = "case " + std::to_string(trial);
    out.expect(pow_padic(f, padic_add(a, b)) == series_mul(pow_padic(f, a), pow_padic(f, b)), tag + " f^(a+b)");
    out.expect(pow_padic(pow_padic(f, a), b) == pow_padic(f, padic_mul(a, b)), tag + " (f^a)^b");
    out.expect(pow_padic(series_mul(f, g), a) == series_mul(pow_padic(f, a), pow_padic(g, a)), tag + " (fg)^a");
  }

  // Trace polynomials against traces on Schur functors of k^N.
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& c : double_cosets(lambda))
        for (Kind kind : {Kind::Symmetric, Kind::Exterior}) {
          const TracePoly poly = trace_polynomial(lambda, c.matrix, kind);
          for (unsigned N = 1; N <= 4; ++N) {
            std::vector<BigInt> point;
            for (unsigned r = 1; r <= n; ++r)
              point.push_back(BigInt(kind == Kind::Symmetric ? oracle::binom(N + r - 1, r) : oracle::binom(N, r)));
            const oracle::Big expected = oracle::brute_trace(lambda.parts(), c.matrix.entries, N, kind == Kind::Exterior);
            std::ostringstream tag;
            tag << "trace n=" << n << " N=" << N;
            out.expect(poly.evaluate(point) == BigInt(expected), tag.str());
          }
        }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Dim of L_2 in Ver_p for p = 5, 7, 11, 13", verlinde},
      {2, "worked trace polynomials and recurrences", worked_examples},
      {3, "Q_n against vector-space sequences", qn_oracle},
      {4, "pow_padic / extract_exponent round trip", round_trip},
      {5, "quadratic relations in both bases", quadratic_relations},
      {6, "Koszul Euler characteristics", koszul},
      {7, "Grothendieck identities in Ver_5", grothendieck},
      {8, "Dim- not multiplicative in Ver_5", non_multiplicative},
      {9, "supervector space dimensions", supervec},
      {10, "Rep D in characteristic 2", rep_d},
      {11, "Teichmuller lifts and Brauer characters", brauer},
      {12, "additivity, exponent laws, trace oracle", properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const bool pass = out.failures == 0;
    failed += !pass;
    std::printf("%s %2d %s: %llu checks", pass ? "PASS" : "FAIL", c.id, c.name,
                static_cast<unsigned long long>(out.checks));
    if (!out.note.empty()) std::printf(", %s", out.note.c_str());
    if (!pass)
      std::printf(", %llu failed, first: %s", static_cast<unsigned long long>(out.failures), out.first_failure.c_str());
    std::printf("\n");
  }
  return failed == 0 ? 0 : 1;
}
