#include "padim/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace padim {

namespace {

constexpr unsigned kMaxDegree = 10;

void require_desk_scale(unsigned n) {
  if (n > kMaxDegree)
    fail(ErrorKind::SizeCap, "symmetric-group computations are limited to n <= " +
                                 std::to_string(kMaxDegree));
}

std::vector<unsigned> block_starts(std::span<const unsigned> blocks) {
  std::vector<unsigned> s(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) s[i + 1] = s[i] + blocks[i];
  return s;
}

std::vector<unsigned> block_of_position(std::span<const unsigned> blocks) {
  std::vector<unsigned> owner;
  for (std::size_t i = 0; i < blocks.size(); ++i) owner.insert(owner.end(), blocks[i], static_cast<unsigned>(i));
  return owner;
}

void validate_matrix(std::span<const unsigned> blocks, const CosetMatrix& m) {
  const std::size_t k = blocks.size();
  if (m.entries.size() != k)
    fail(ErrorKind::InvalidArgument, "coset matrix must be square of the block count");
  for (std::size_t i = 0; i < k; ++i) {
    if (m.entries[i].size() != k)
      fail(ErrorKind::InvalidArgument, "coset matrix must be square of the block count");
    unsigned row = 0, col = 0;
    for (std::size_t j = 0; j < k; ++j) {
      row += m.entries[i][j];
      col += m.entries[j][i];
    }
    if (row != blocks[i] || col != blocks[i])
      fail(ErrorKind::InvalidArgument, "coset matrix margins do not match the blocks");
  }
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace

// --- Partition ------------------------------------------------------------------

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) fail(ErrorKind::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(ErrorKind::InvalidArgument, "partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned left, unsigned cap) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// --- Permutation ----------------------------------------------------------------

Permutation::Permutation(std::vector<unsigned> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (unsigned x : image_) {
    if (x >= image_.size() || seen[x]) fail(ErrorKind::InvalidArgument, "not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> id(n);
  std::iota(id.begin(), id.end(), 0u);
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0 || c[k] > n) fail(ErrorKind::InvalidArgument, "cycle entry out of range");
      img[c[k] - 1] = c[(k + 1) % c.size()] - 1;
    }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) fail(ErrorKind::InvalidArgument, "permutations of different degrees");
  std::vector<unsigned> img(size());
  for (unsigned x = 0; x < size(); ++x) img[x] = image_[rhs.image_[x]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> img(size());
  for (unsigned x = 0; x < size(); ++x) img[image_[x]] = x;
  return Permutation(std::move(img));
}

unsigned Permutation::cycle_count() const {
  std::vector<bool> seen(size(), false);
  unsigned c = 0;
  for (unsigned x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    ++c;
    for (unsigned y = x; !seen[y]; y = image_[y]) seen[y] = true;
  }
  return c;
}

unsigned Permutation::inversions() const {
  unsigned inv = 0;
  for (unsigned a = 0; a < size(); ++a)
    for (unsigned b = a + 1; b < size(); ++b)
      if (image_[a] > image_[b]) ++inv;
  return inv;
}

int Permutation::sign() const { return (size() - cycle_count()) % 2 ? -1 : 1; }

// --- double cosets ------------------------------------------------------------

CosetMatrix coset_matrix_of(std::span<const unsigned> blocks, const Permutation& w) {
  const auto owner = block_of_position(blocks);
  if (owner.size() != w.size()) fail(ErrorKind::InvalidArgument, "blocks do not cover the permutation");
  CosetMatrix m{std::vector<std::vector<unsigned>>(blocks.size(), std::vector<unsigned>(blocks.size(), 0))};
  for (unsigned x = 0; x < w.size(); ++x) ++m.entries[owner[w(x)]][owner[x]];
  return m;
}

Permutation minimal_representative(std::span<const unsigned> blocks, const CosetMatrix& m) {
  validate_matrix(blocks, m);
  const auto start = block_starts(blocks);
  const std::size_t k = blocks.size();
  std::vector<unsigned> img(start.back());
  for (std::size_t j = 0; j < k; ++j) {
    unsigned src = start[j];
    for (std::size_t i = 0; i < k; ++i) {
      unsigned dst = start[i];
      for (std::size_t jj = 0; jj < j; ++jj) dst += m.entries[i][jj];
      for (unsigned c = 0; c < m.entries[i][j]; ++c) img[src++] = dst++;
    }
  }
  return Permutation(std::move(img));
}

std::vector<DoubleCoset> double_cosets(const Partition& lambda) {
  require_desk_scale(lambda.size());
  const auto& parts = lambda.parts();
  const std::size_t k = parts.size();
  std::vector<DoubleCoset> out;
  std::vector<std::vector<unsigned>> a(k, std::vector<unsigned>(k, 0));
  std::vector<unsigned> row_left(parts.begin(), parts.end()), col_left(parts.begin(), parts.end());
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == k * k) {
      CosetMatrix m{a};
      out.push_back({m, minimal_representative(parts, m)});
      return;
    }
    const std::size_t i = cell / k, j = cell % k;
    unsigned hi = std::min(row_left[i], col_left[j]);
    unsigned lo = 0;
    if (j == k - 1) lo = row_left[i];  // last column must exhaust the row
    if (i == k - 1) lo = std::max(lo, col_left[j]);
    if (lo > hi) return;
    for (unsigned v = hi + 1; v-- > lo;) {
      a[i][j] = v;
      row_left[i] -= v;
      col_left[j] -= v;
      self(self, cell + 1);
      row_left[i] += v;
      col_left[j] += v;
    }
    a[i][j] = 0;
  };
  rec(rec, 0);
  return out;
}

BigInt coset_size(const Partition& lambda, const CosetMatrix& m) {
  validate_matrix(lambda.parts(), m);
  BigInt num = 1, den = 1;
  for (unsigned part : lambda.parts()) num *= factorial(part);
  num *= num;
  for (const auto& row : m.entries)
    for (unsigned e : row) den *= factorial(e);
  return num / den;
}

// --- TracePoly ------------------------------------------------------------------

TracePoly::TracePoly(Terms terms) {
  for (auto& [m, c] : terms) add_term(m, c);
}

TracePoly TracePoly::constant(long long c) {
  TracePoly t;
  t.add_term({}, c);
  return t;
}

TracePoly TracePoly::variable(unsigned r, unsigned e) {
  if (r == 0) fail(ErrorKind::InvalidArgument, "trace variables start at d_1");
  Monomial m(r, 0);
  m[r - 1] = e;
  trim(m);
  TracePoly t;
  t.add_term(m, 1);
  return t;
}

void TracePoly::add_term(const Monomial& m, long long c) {
  if (c == 0) return;
  Monomial mono = m;
  trim(mono);
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned TracePoly::max_variable() const {
  unsigned r = 0;
  for (const auto& [m, c] : terms_) r = std::max<unsigned>(r, static_cast<unsigned>(m.size()));
  return r;
}

TracePoly& TracePoly::operator+=(const TracePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

TracePoly TracePoly::operator+(const TracePoly& rhs) const {
  TracePoly r = *this;
  r += rhs;
  return r;
}

TracePoly TracePoly::operator*(const TracePoly& rhs) const {
  TracePoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
  return r;
}

TracePoly TracePoly::scaled(long long c) const {
  TracePoly r;
  for (const auto& [m, a] : terms_) r.add_term(m, a * c);
  return r;
}

namespace {

long long balanced(long long c, Residue p) {
  long long r = c % static_cast<long long>(p);
  if (r < 0) r += p;
  if (2 * r > static_cast<long long>(p)) r -= p;
  return r;
}

}  // namespace

TracePoly TracePoly::reduced_mod(Residue p) const {
  TracePoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, balanced(c, p));
  return r;
}

TracePoly TracePoly::substituted_mod(unsigned var, const TracePoly& value, Residue p) const {
  TracePoly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = var <= m.size() ? m[var - 1] : 0;
    Monomial rest = m;
    if (e) rest[var - 1] = 0;
    TracePoly term;
    term.add_term(rest, c);
    for (unsigned k = 0; k < e; ++k) term = (term * value).reduced_mod(p);
    out += term;
  }
  return out.reduced_mod(p);
}

BigInt TracePoly::evaluate(std::span<const BigInt> values) const {
  BigInt sum = 0;
  for (const auto& [m, c] : terms_) {
    BigInt v = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= values.size()) fail(ErrorKind::InvalidArgument, "missing value for a trace variable");
      for (unsigned e = 0; e < m[i]; ++e) v *= values[i];
    }
    sum += v;
  }
  return sum;
}

Residue TracePoly::evaluate_mod(std::span<const Residue> values, Residue p) const {
  std::vector<BigInt> big(values.begin(), values.end());
  return mod_p(evaluate(big), p);
}

std::string TracePoly::to_text() const {
  std::vector<std::pair<long long, std::string>> t;
  for (const auto& [m, c] : terms_) t.emplace_back(c, format_monomial(m, "d", 1));
  return join_terms(t);
}

TracePoly perm_trace(const Permutation& sigma) {
  if (sigma.size() == 0) return TracePoly::constant(1);
  return TracePoly::variable(1, sigma.cycle_count());
}

// --- trace polynomials ----------------------------------------------------------

namespace {

using Composition = std::vector<unsigned>;
using CacheKey = std::pair<Composition, CosetMatrix>;
using TraceCache = std::map<CacheKey, TracePoly>;

// If every column of m has a single nonzero entry, the coset representative
// just permutes whole blocks; returns that block permutation.
std::optional<std::vector<unsigned>> block_permutation(const CosetMatrix& m) {
  const std::size_t k = m.entries.size();
  std::vector<unsigned> sigma(k);
  for (std::size_t j = 0; j < k; ++j) {
    int row = -1;
    for (std::size_t i = 0; i < k; ++i) {
      if (m.entries[i][j] == 0) continue;
      if (row >= 0) return std::nullopt;
      row = static_cast<int>(i);
    }
    sigma[j] = static_cast<unsigned>(row);
  }
  return sigma;
}

// Checks g^{-1} (S_mu ∩ g S_mu g^{-1}) g = S_pieces, i.e. that the meet of the
// block partition with its g-preimage consists of the given intervals.
void assert_conjugate_is_young(const Composition& mu, const Permutation& g,
                               const std::vector<unsigned>& piece_of) {
  const auto owner = block_of_position(mu);
  for (unsigned x = 0; x < g.size(); ++x)
    for (unsigned y = x + 1; y < g.size(); ++y) {
      const bool same_meet = owner[x] == owner[y] && owner[g(x)] == owner[g(y)];
      if (same_meet != (piece_of[x] == piece_of[y]))
        fail(ErrorKind::Internal, "minimal representative does not conjugate onto a Young subgroup");
    }
}

TracePoly coset_trace(const Composition& mu, const CosetMatrix& m, TraceCache& cache) {
  CacheKey key{mu, m};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  TracePoly result;
  if (auto sigma = block_permutation(m)) {
    // Trace of a permutation of tensor factors: one d_size per cycle.
    std::vector<bool> seen(mu.size(), false);
    result = TracePoly::constant(1);
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (seen[j]) continue;
      for (std::size_t x = j; !seen[x]; x = (*sigma)[x]) seen[x] = true;
      result = result * TracePoly::variable(mu[j]);
    }
    cache.emplace(std::move(key), result);
    return result;
  }

  const std::size_t k = mu.size();
  const Permutation g = minimal_representative(mu, m);
  const auto start = block_starts(mu);

  // Pieces of the finer Young subgroup: source block j split by target block i.
  struct Piece {
    unsigned start, size, target;
  };
  std::vector<Piece> pieces;
  std::vector<unsigned> piece_of(g.size());
  for (std::size_t j = 0; j < k; ++j) {
    unsigned pos = start[j];
    for (std::size_t i = 0; i < k; ++i) {
      const unsigned sz = m.entries[i][j];
      if (sz == 0) continue;
      for (unsigned c = 0; c < sz; ++c) piece_of[pos + c] = static_cast<unsigned>(pieces.size());
      pieces.push_back({pos, sz, static_cast<unsigned>(i)});
      pos += sz;
    }
  }
  assert_conjugate_is_young(mu, g, piece_of);
  Composition finer;
  for (const auto& pc : pieces) finer.push_back(pc.size);

  // Left cosets wK inside S_mu g: within every target block choose which
  // positions receive each piece.
  std::vector<std::vector<unsigned>> labels(k);  // multiset of piece ids per target block
  for (unsigned b = 0; b < pieces.size(); ++b)
    labels[pieces[b].target].insert(labels[pieces[b].target].end(), pieces[b].size, b);
  for (auto& l : labels) std::sort(l.begin(), l.end());

  std::set<CosetMatrix> finer_cosets;
  std::vector<unsigned> image_piece(g.size());  // image_piece[pos] = b with pos in w(piece b)
  auto rec = [&](auto&& self, std::size_t block) -> void {
    if (block == k) {
      CosetMatrix fm{std::vector<std::vector<unsigned>>(pieces.size(), std::vector<unsigned>(pieces.size(), 0))};
      for (unsigned pos = 0; pos < g.size(); ++pos) ++fm.entries[piece_of[pos]][image_piece[pos]];
      finer_cosets.insert(std::move(fm));
      return;
    }
    std::vector<unsigned> arrangement = labels[block];
    do {
      for (unsigned c = 0; c < mu[block]; ++c) image_piece[start[block] + c] = arrangement[c];
      self(self, block + 1);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  };
  rec(rec, 0);

  for (const auto& fm : finer_cosets) result += coset_trace(finer, fm, cache);
  cache.emplace(std::move(key), result);
  return result;
}

// P^-(e_1, e_2, ...) = (-1)^n P((-1)^r e_r).
TracePoly sign_twist(const TracePoly& sym, unsigned n) {
  TracePoly::Terms out;
  for (const auto& [m, c] : sym.terms()) {
    unsigned parity = n;
    for (std::size_t i = 0; i < m.size(); ++i) parity += static_cast<unsigned>((i + 1) * m[i]);
    out[m] = parity % 2 ? -c : c;
  }
  return TracePoly(std::move(out));
}

TracePoly trace_with_cache(const Partition& lambda, const CosetMatrix& coset, Kind kind,
                           TraceCache& cache) {
  require_desk_scale(lambda.size());
  validate_matrix(lambda.parts(), coset);
  TracePoly sym = coset_trace(lambda.parts(), coset, cache);
  return kind == Kind::Symmetric ? sym : sign_twist(sym, lambda.size());
}

}  // namespace

TracePoly trace_polynomial(const Partition& lambda, const CosetMatrix& coset, Kind kind) {
  TraceCache cache;
  return trace_with_cache(lambda, coset, kind, cache);
}

bool is_power_of(std::uint64_t n, Residue p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::string Recurrence::to_text() const {
  return "d" + std::to_string(n) + " = " + rhs.to_text();
}

namespace {

TracePoly derive_rhs(Residue p, unsigned n, Kind kind, TraceCache& cache,
                     std::map<unsigned, TracePoly>& known) {
  if (auto it = known.find(n); it != known.end()) return it->second;
  unsigned q = 1;
  while (n % (q * p) == 0) q *= p;
  const Partition lambda({n - q, q});
  TracePoly sum;
  for (const auto& dc : double_cosets(lambda)) sum += trace_with_cache(lambda, dc.matrix, kind, cache);
  const Residue inv = inverse_mod(lucas_binom(n, q, p), p);
  TracePoly rhs = sum.scaled(inv).reduced_mod(p);
  for (unsigned r = rhs.max_variable(); r >= 2; --r) {
    if (is_power_of(r, p)) continue;
    bool present = false;
    for (const auto& [m, c] : rhs.terms())
      if (r <= m.size() && m[r - 1] > 0) present = true;
    if (present) rhs = rhs.substituted_mod(r, derive_rhs(p, r, kind, cache, known), p);
  }
  known.emplace(n, rhs);
  return rhs;
}

}  // namespace

Recurrence derive_recurrence(Residue p, unsigned n, Kind kind) {
  require_prime(p);
  if (n < 2 || is_power_of(n, p))
    fail(ErrorKind::IsGenerator, "d_" + std::to_string(n) + " is a generator for p = " + std::to_string(p));
  require_desk_scale(n);
  TraceCache cache;
  std::map<unsigned, TracePoly> known;
  return {p, n, kind, derive_rhs(p, n, kind, cache, known)};
}

}  // namespace padim
