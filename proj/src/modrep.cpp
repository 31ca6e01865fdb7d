#include "padim/modrep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace padim {

// --- FpMatrix ---------------------------------------------------------------------

FpMatrix::FpMatrix(Residue p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_prime(p);
}

FpMatrix FpMatrix::identity(Residue p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(Residue p, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, mod_p(rows[r][c], p));
  }
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (p_ != rhs.p_) fail(ErrorKind::PrimeMismatch, "matrices over different primes");
  if (cols_ != rhs.rows_) fail(ErrorKind::InvalidArgument, "matrix shapes do not compose");
  FpMatrix out(p_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = at(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.data_[i * out.cols_ + j] =
            static_cast<Residue>((out.data_[i * out.cols_ + j] + a * rhs.at(k, j)) % p_);
    }
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (p_ != rhs.p_) fail(ErrorKind::PrimeMismatch, "matrices over different primes");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::InvalidArgument, "shape mismatch");
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + p_ - rhs.data_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix out(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

namespace {

using Vec = std::vector<Residue>;

/// Incremental row-echelon basis of a subspace of F_p^dim.
class EchelonBasis {
 public:
  explicit EchelonBasis(Residue p) : p_(p) {}

  /// Reduces v against the basis; inserts it if independent.
  bool insert(Vec v) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const Residue c = v[pivots_[b]];
      if (!c) continue;
      const std::uint64_t f = p_ - c;
      const Vec& row = basis_[b];
      for (std::size_t k = pivots_[b]; k < v.size(); ++k)
        if (row[k]) v[k] = static_cast<Residue>((v[k] + f * row[k]) % p_);
    }
    auto it = std::find_if(v.begin(), v.end(), [](Residue x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    const std::uint64_t inv = inverse_mod(v[pivot], p_);
    for (std::size_t k = pivot; k < v.size(); ++k) v[k] = static_cast<Residue>(v[k] * inv % p_);
    basis_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec>& vectors() const { return basis_; }

 private:
  Residue p_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Column-sparse operator on F_p^dim.
struct SparseOp {
  Residue p;
  std::size_t dim;
  std::vector<std::vector<std::pair<std::uint32_t, Residue>>> cols;

  Vec apply(const Vec& x) const {
    std::vector<std::uint64_t> acc(dim, 0);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!x[j]) continue;
      for (auto [r, v] : cols[j]) acc[r] = (acc[r] + static_cast<std::uint64_t>(x[j]) * v) % p;
    }
    return Vec(acc.begin(), acc.end());
  }

  void subtract_identity() {
    for (std::size_t j = 0; j < dim; ++j) {
      auto& col = cols[j];
      auto it = std::find_if(col.begin(), col.end(), [&](const auto& e) { return e.first == j; });
      if (it == col.end()) {
        col.emplace_back(static_cast<std::uint32_t>(j), p - 1);
      } else {
        it->second = (it->second + p - 1) % p;
        if (!it->second) col.erase(it);
      }
    }
  }
};

SparseOp sparse_of(const FpMatrix& m) {
  SparseOp op{m.p(), m.cols(), std::vector<std::vector<std::pair<std::uint32_t, Residue>>>(m.cols())};
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m.at(i, j)) op.cols[j].emplace_back(static_cast<std::uint32_t>(i), m.at(i, j));
  return op;
}

std::vector<unsigned> jordan_parts(const SparseOp& n) {
  // r[k] = rank(N^k); image(N^{k+1}) = N(image(N^k)).
  std::vector<std::size_t> r{n.dim};
  std::vector<Vec> spanning;
  for (std::size_t j = 0; j < n.dim; ++j) {
    Vec e(n.dim, 0);
    e[j] = 1;
    spanning.push_back(std::move(e));
  }
  while (r.back() > 0) {
    EchelonBasis image(n.p);
    for (const auto& v : spanning) image.insert(n.apply(v));
    if (image.size() == r.back()) fail(ErrorKind::NotNilpotent, "operator is not nilpotent");
    r.push_back(image.size());
    spanning = image.vectors();
  }
  r.push_back(0);
  std::vector<unsigned> parts;
  for (std::size_t k = 1; k + 1 < r.size(); ++k) {
    const std::size_t count = r[k - 1] - 2 * r[k] + r[k + 1];
    parts.insert(parts.end(), count, static_cast<unsigned>(k));
  }
  return parts;
}

void require_within_cap(const BigInt& dim, const ModelLimits& limits, const char* what) {
  if (dim > limits.size_cap)
    fail(ErrorKind::SizeCap, std::string(what) + " of dimension " + dim.str() + " exceeds the size cap " +
                                 std::to_string(limits.size_cap));
}

using Support = std::vector<std::vector<std::pair<std::uint32_t, Residue>>>;

Support column_support(const FpMatrix& u) {
  Support s(u.cols());
  for (std::size_t j = 0; j < u.cols(); ++j)
    for (std::size_t i = 0; i < u.rows(); ++i)
      if (u.at(i, j)) s[j].emplace_back(static_cast<std::uint32_t>(i), u.at(i, j));
  return s;
}

Residue pow_residue(Residue a, unsigned e, Residue p) {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < e; ++k) r = r * a % p;
  return static_cast<Residue>(r);
}

using Exponents = std::vector<unsigned>;
using PolyMap = std::map<Exponents, Residue>;

// Exponent vectors of degree n in dim variables, ordered like the index
// tuples i_1 <= ... <= i_n in lexicographic order.
std::vector<Exponents> monomial_basis(std::size_t dim, unsigned n) {
  std::vector<Exponents> out;
  Exponents cur(dim, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == dim) {
      cur[var] = left;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  if (dim == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, n);
  return out;
}

// (sum_k v_k e_k)^c as a polynomial in exponent form.
PolyMap power_of_linear_form(const std::vector<std::pair<std::uint32_t, Residue>>& form, unsigned c,
                             std::size_t dim, Residue p) {
  PolyMap out;
  Exponents cur(dim, 0);
  auto rec = [&](auto&& self, std::size_t idx, unsigned left, std::uint64_t coeff) -> void {
    if (idx + 1 == form.size()) {
      const auto [k, v] = form[idx];
      const std::uint64_t c2 = coeff * pow_residue(v, left, p) % p;
      if (!c2) return;
      cur[k] += left;
      auto& slot = out[cur];
      slot = static_cast<Residue>((slot + c2) % p);
      cur[k] -= left;
      return;
    }
    const auto [k, v] = form[idx];
    for (unsigned e = 0; e <= left; ++e) {
      const std::uint64_t c2 = coeff * lucas_binom(left, e, p) % p * pow_residue(v, e, p) % p;
      if (!c2) continue;
      cur[k] += e;
      self(self, idx + 1, left - e, c2);
      cur[k] -= e;
    }
  };
  if (form.empty()) return out;  // zero form
  rec(rec, 0, c, 1);
  return out;
}

PolyMap poly_mul(const PolyMap& a, const PolyMap& b, Residue p) {
  PolyMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto& slot = out[e];
      slot = static_cast<Residue>((slot + static_cast<std::uint64_t>(ca) * cb) % p);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

JordanType jordan_of_unipotent(SparseOp op) {
  const Residue p = op.p;
  op.subtract_identity();
  return JordanType(p, jordan_parts(op));
}

}  // namespace

std::size_t rank(const FpMatrix& m) {
  EchelonBasis b(m.p());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    b.insert(std::move(row));
  }
  return b.size();
}

// --- JordanType -------------------------------------------------------------------

JordanType::JordanType(Residue p, std::vector<unsigned> parts) : p_(p), parts_(std::move(parts)) {
  require_prime(p);
  for (unsigned s : parts_)
    if (s == 0 || s > p)
      fail(ErrorKind::InvalidArgument, "Jordan block of size " + std::to_string(s) + " is not in [1, p]");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::size_t JordanType::dim() const {
  std::size_t d = 0;
  for (unsigned s : parts_) d += s;
  return d;
}

FpMatrix JordanType::canonical_nilpotent() const {
  FpMatrix n(p_, dim(), dim());
  std::size_t start = 0;
  for (unsigned s : parts_) {
    for (unsigned k = 0; k + 1 < s; ++k) n.set(start + k + 1, start + k, 1);
    start += s;
  }
  return n;
}

FpMatrix JordanType::canonical_generator() const {
  FpMatrix u = canonical_nilpotent();
  for (std::size_t i = 0; i < u.rows(); ++i) u.set(i, i, (u.at(i, i) + 1) % p_);
  return u;
}

JordanType jordan_type_of(const FpMatrix& nilpotent) {
  if (nilpotent.rows() != nilpotent.cols()) fail(ErrorKind::InvalidArgument, "matrix must be square");
  return JordanType(nilpotent.p(), jordan_parts(sparse_of(nilpotent)));
}

JordanType sym_power_of_operator(const FpMatrix& u, unsigned n, const ModelLimits& limits) {
  if (u.rows() != u.cols()) fail(ErrorKind::InvalidArgument, "operator must be square");
  const Residue p = u.p();
  const std::size_t dim = u.rows();
  require_within_cap(dim == 0 ? BigInt(n == 0) : exact_binom(BigInt(dim + n - 1), n), limits,
                     "symmetric power");
  const auto basis = monomial_basis(dim, n);
  std::map<Exponents, std::uint32_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<std::uint32_t>(i));
  const Support support = column_support(u);

  SparseOp op{p, basis.size(), Support(basis.size())};
  for (std::size_t b = 0; b < basis.size(); ++b) {
    PolyMap image{{Exponents(dim, 0), 1}};
    for (std::size_t i = 0; i < dim && !image.empty(); ++i)
      if (basis[b][i]) image = poly_mul(image, power_of_linear_form(support[i], basis[b][i], dim, p), p);
    for (const auto& [e, c] : image) op.cols[b].emplace_back(index.at(e), c);
  }
  return jordan_of_unipotent(std::move(op));
}

JordanType ext_power_of_operator(const FpMatrix& u, unsigned n, const ModelLimits& limits) {
  if (u.rows() != u.cols()) fail(ErrorKind::InvalidArgument, "operator must be square");
  const Residue p = u.p();
  const std::size_t dim = u.rows();
  require_within_cap(n > dim ? BigInt(0) : exact_binom(BigInt(dim), n), limits, "exterior power");
  if (n > dim) return JordanType(p, {});

  std::vector<std::vector<unsigned>> basis;
  std::vector<unsigned> cur;
  auto gen = [&](auto&& self, unsigned from) -> void {
    if (cur.size() == n) {
      basis.push_back(cur);
      return;
    }
    for (unsigned i = from; i < dim; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  gen(gen, 0);
  std::map<std::vector<unsigned>, std::uint32_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<std::uint32_t>(i));
  const Support support = column_support(u);

  SparseOp op{p, basis.size(), Support(basis.size())};
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::map<std::uint32_t, Residue> image;
    std::vector<unsigned> chosen;
    auto expand = [&](auto&& self, std::size_t pos, std::uint64_t coeff) -> void {
      if (pos == n) {
        std::vector<unsigned> sorted = chosen;
        unsigned swaps = 0;
        for (std::size_t a = 0; a < sorted.size(); ++a)
          for (std::size_t c = a + 1; c < sorted.size(); ++c)
            if (sorted[a] > sorted[c]) ++swaps;
        std::sort(sorted.begin(), sorted.end());
        const Residue signed_coeff = static_cast<Residue>(swaps % 2 ? (p - coeff) % p : coeff);
        auto& slot = image[index.at(sorted)];
        slot = (slot + signed_coeff) % p;
        return;
      }
      for (auto [k, v] : support[basis[b][pos]]) {
        if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
        chosen.push_back(k);
        self(self, pos + 1, coeff * v % p);
        chosen.pop_back();
      }
    };
    expand(expand, 0, 1);
    for (auto [r, c] : image)
      if (c) op.cols[b].emplace_back(r, c);
  }
  return jordan_of_unipotent(std::move(op));
}

JordanType sym_power(const JordanType& t, unsigned n, const ModelLimits& limits) {
  return sym_power_of_operator(t.canonical_generator(), n, limits);
}

JordanType ext_power(const JordanType& t, unsigned n, const ModelLimits& limits) {
  return ext_power_of_operator(t.canonical_generator(), n, limits);
}

namespace {

// Jordan type of J_a ⊗ J_b via the Kronecker product of generators.
std::vector<unsigned> tensor_blocks(Residue p, unsigned a, unsigned b) {
  const FpMatrix ua = JordanType(p, {a}).canonical_generator();
  const FpMatrix ub = JordanType(p, {b}).canonical_generator();
  const std::size_t dim = static_cast<std::size_t>(a) * b;
  SparseOp op{p, dim, Support(dim)};
  for (unsigned i = 0; i < a; ++i)
    for (unsigned j = 0; j < b; ++j)
      for (unsigned ri = 0; ri < a; ++ri) {
        if (!ua.at(ri, i)) continue;
        for (unsigned rj = 0; rj < b; ++rj) {
          if (!ub.at(rj, j)) continue;
          op.cols[i * b + j].emplace_back(ri * b + rj,
                                          static_cast<Residue>(static_cast<std::uint64_t>(ua.at(ri, i)) * ub.at(rj, j) % p));
        }
      }
  return jordan_of_unipotent(std::move(op)).parts();
}

}  // namespace

JordanType tensor(const JordanType& a, const JordanType& b, const ModelLimits& limits) {
  if (a.p() != b.p()) fail(ErrorKind::PrimeMismatch, "modules over different primes");
  require_within_cap(BigInt(a.dim()) * b.dim(), limits, "tensor product");
  std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> memo;
  std::vector<unsigned> parts;
  for (unsigned x : a.parts())
    for (unsigned y : b.parts()) {
      auto key = std::minmax(x, y);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, tensor_blocks(a.p(), key.first, key.second)).first;
      parts.insert(parts.end(), it->second.begin(), it->second.end());
    }
  return JordanType(a.p(), std::move(parts));
}

// --- Ver_p ------------------------------------------------------------------------

VerObject::VerObject(Residue p, std::vector<std::uint64_t> mult) : p_(p), mult_(std::move(mult)) {
  require_prime(p);
  if (mult_.size() > p - 1) fail(ErrorKind::InvalidArgument, "Ver_p has simples L_1..L_{p-1} only");
  mult_.resize(p - 1, 0);
}

VerObject VerObject::simple(Residue p, unsigned j) {
  require_prime(p);
  if (j == 0 || j >= p) fail(ErrorKind::InvalidArgument, "L_j needs 1 <= j <= p-1");
  std::vector<std::uint64_t> m(p - 1, 0);
  m[j - 1] = 1;
  return VerObject(p, std::move(m));
}

std::uint64_t VerObject::multiplicity(unsigned j) const {
  if (j == 0 || j >= p_) fail(ErrorKind::IndexOutOfRange, "L_j needs 1 <= j <= p-1");
  return mult_[j - 1];
}

bool VerObject::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(), [](auto m) { return m == 0; });
}

Residue VerObject::dim() const {
  std::uint64_t d = 0;
  for (std::size_t j = 0; j < mult_.size(); ++j) d = (d + (j + 1) % p_ * (mult_[j] % p_)) % p_;
  return static_cast<Residue>(d);
}

JordanType VerObject::lift() const {
  std::vector<unsigned> parts;
  for (std::size_t j = 0; j < mult_.size(); ++j) parts.insert(parts.end(), mult_[j], static_cast<unsigned>(j + 1));
  return JordanType(p_, std::move(parts));
}

VerObject ver_reduce(const JordanType& t) {
  std::vector<std::uint64_t> m(t.p() - 1, 0);
  for (unsigned s : t.parts())
    if (s < t.p()) ++m[s - 1];
  return VerObject(t.p(), std::move(m));
}

namespace {

// r-th power of L_j for r = 0..max_n. Below p the symmetrizer (or
// antisymmetrizer) is an idempotent, so the power is the reduction of the
// power of the Jordan block. The algebra is generated in degree 1, so once a
// power vanishes every later one does too. L_{p-1} is the odd invertible
// object for odd p: its symmetric algebra stops in degree 1 and its exterior
// powers alternate between L_1 and L_{p-1}.
std::vector<VerObject> simple_powers(Residue p, unsigned j, Kind kind, std::size_t max_n,
                                     const ModelLimits& limits) {
  std::vector<VerObject> out;
  const VerObject zero(p, {});
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (j == 1 && kind == Kind::Symmetric) {
      out.push_back(VerObject::simple(p, 1));
      continue;
    }
    if (p > 2 && j == p - 1) {
      if (kind == Kind::Symmetric)
        out.push_back(n == 0 ? VerObject::simple(p, 1) : n == 1 ? VerObject::simple(p, j) : zero);
      else
        out.push_back(VerObject::simple(p, n % 2 ? j : 1));
      continue;
    }
    if (n > 0 && out.back().is_zero()) {
      out.push_back(zero);
      continue;
    }
    if (n >= p)
      fail(ErrorKind::UnsupportedModel, "power of L_" + std::to_string(j) + " does not vanish below degree p");
    const JordanType block(p, {j});
    const JordanType power = kind == Kind::Symmetric ? sym_power(block, static_cast<unsigned>(n), limits)
                                                     : ext_power(block, static_cast<unsigned>(n), limits);
    out.push_back(ver_reduce(power));
  }
  return out;
}

VerObject ver_add(const VerObject& a, const VerObject& b) {
  std::vector<std::uint64_t> m = a.mult();
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += b.mult()[i];
  return VerObject(a.p(), std::move(m));
}

}  // namespace

VerObject ver_power(const VerObject& v, Kind kind, unsigned n, const ModelLimits& limits) {
  const Residue p = v.p();
  // S(X + Y) = S(X) S(Y) and likewise for the exterior algebra.
  std::vector<VerObject> graded(n + 1, VerObject(p, {}));
  graded[0] = VerObject::simple(p, 1);
  for (unsigned j = 1; j < p; ++j) {
    if (!v.multiplicity(j)) continue;
    const auto powers = simple_powers(p, j, kind, n, limits);
    for (std::uint64_t copy = 0; copy < v.multiplicity(j); ++copy) {
      std::vector<VerObject> next(n + 1, VerObject(p, {}));
      for (unsigned a = 0; a <= n; ++a) {
        if (graded[a].is_zero()) continue;
        for (unsigned b = 0; a + b <= n; ++b)
          if (!powers[b].is_zero()) next[a + b] = ver_add(next[a + b], ver_tensor(graded[a], powers[b], limits));
      }
      graded = std::move(next);
    }
  }
  return graded[n];
}

DimSequence ver_dim_sequence(const VerObject& v, Kind kind, std::size_t max_degree, const ModelLimits& limits) {
  const Residue p = v.p();
  // dim is a ring map, so the dimension series of a sum is the product.
  std::vector<std::uint64_t> values(max_degree + 1, 0);
  values[0] = 1;
  for (unsigned j = 1; j < p; ++j) {
    if (!v.multiplicity(j)) continue;
    std::vector<Residue> factor;
    for (const auto& obj : simple_powers(p, j, kind, max_degree, limits)) factor.push_back(obj.dim());
    for (std::uint64_t copy = 0; copy < v.multiplicity(j); ++copy) {
      std::vector<std::uint64_t> next(max_degree + 1, 0);
      for (std::size_t a = 0; a <= max_degree; ++a) {
        if (!values[a]) continue;
        for (std::size_t b = 0; a + b <= max_degree; ++b) next[a + b] = (next[a + b] + values[a] * factor[b]) % p;
      }
      values = std::move(next);
    }
  }
  return DimSequence(p, kind, std::vector<Residue>(values.begin(), values.end()));
}

VerObject ver_tensor(const VerObject& a, const VerObject& b, const ModelLimits& limits) {
  if (a.p() != b.p()) fail(ErrorKind::PrimeMismatch, "objects over different primes");
  const Residue p = a.p();
  std::vector<std::uint64_t> out(p - 1, 0);
  for (unsigned i = 1; i < p; ++i) {
    if (!a.multiplicity(i)) continue;
    for (unsigned j = 1; j < p; ++j) {
      if (!b.multiplicity(j)) continue;
      const VerObject piece = ver_reduce(tensor(JordanType(p, {i}), JordanType(p, {j}), limits));
      for (unsigned k = 1; k < p; ++k) out[k - 1] += a.multiplicity(i) * b.multiplicity(j) * piece.multiplicity(k);
    }
  }
  return VerObject(p, std::move(out));
}

// --- Grothendieck ring ------------------------------------------------------------

GrElement::GrElement(Residue p, std::vector<long long> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_prime(p);
  if (coeffs_.size() > p - 1) fail(ErrorKind::InvalidArgument, "Gr(Ver_p) has rank p-1");
  coeffs_.resize(p - 1, 0);
}

GrElement GrElement::one(Residue p) {
  std::vector<long long> c(p - 1, 0);
  if (!c.empty()) c[0] = 1;
  return GrElement(p, std::move(c));
}

GrElement GrElement::of(const VerObject& v) {
  std::vector<long long> c(v.mult().begin(), v.mult().end());
  return GrElement(v.p(), std::move(c));
}

bool GrElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

GrElement GrElement::operator+(const GrElement& rhs) const {
  if (p_ != rhs.p_) fail(ErrorKind::PrimeMismatch, "elements over different primes");
  std::vector<long long> c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coeffs_[i];
  return GrElement(p_, std::move(c));
}

GrElement GrElement::scaled(long long s) const {
  std::vector<long long> c = coeffs_;
  for (auto& x : c) x *= s;
  return GrElement(p_, std::move(c));
}

GrElement GrElement::times(const GrElement& rhs, const ModelLimits& limits) const {
  if (p_ != rhs.p_) fail(ErrorKind::PrimeMismatch, "elements over different primes");
  std::vector<long long> out(p_ - 1, 0);
  for (unsigned i = 1; i < p_; ++i) {
    if (!coeffs_[i - 1]) continue;
    for (unsigned j = 1; j < p_; ++j) {
      if (!rhs.coeffs_[j - 1]) continue;
      const VerObject prod = ver_tensor(VerObject::simple(p_, i), VerObject::simple(p_, j), limits);
      for (unsigned k = 1; k < p_; ++k)
        out[k - 1] += coeffs_[i - 1] * rhs.coeffs_[j - 1] * static_cast<long long>(prod.multiplicity(k));
    }
  }
  return GrElement(p_, std::move(out));
}

std::string GrElement::to_text() const {
  std::vector<std::pair<long long, std::string>> terms;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j]) terms.emplace_back(coeffs_[j], "[L" + std::to_string(j + 1) + "]");
  return join_terms(terms);
}

IntPoly ultraspherical(unsigned n) {
  IntPoly prev{1}, cur{0, 1};
  if (n == 0) return prev;
  for (unsigned k = 1; k < n; ++k) {
    IntPoly next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

GrElement gr_eval(const IntPoly& poly, const GrElement& x, const ModelLimits& limits) {
  GrElement acc(x.p(), {});
  for (std::size_t k = poly.size(); k-- > 0;) acc = acc.times(x, limits) + GrElement::one(x.p()).scaled(poly[k]);
  return acc;
}

}  // namespace padim
