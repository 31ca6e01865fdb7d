#include "json_io.hpp"

#include <limits>

namespace padim::io {

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw UsageError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw UsageError(std::string("missing field '") + key + "'");
  return *it;
}

bool has(const json& j, const char* key) { return j.is_object() && j.contains(key) && !j.at(key).is_null(); }

std::int64_t as_int(const json& j, const char* what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw UsageError(std::string(what) + " is out of range");
    return j.get<std::int64_t>();
  }
  throw UsageError(std::string(what) + " must be an integer");
}

std::uint64_t as_uint(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) throw UsageError(std::string(what) + " must be nonnegative");
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  throw UsageError(std::string(what) + " must be an integer");
}

Residue as_prime(const json& j) {
  const std::uint64_t p = as_uint(j, "p");
  require_prime(p);
  return static_cast<Residue>(p);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw UsageError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::int64_t> as_int_list(const json& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<std::uint64_t> as_uint_list(const json& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + " must be an array");
  std::vector<std::uint64_t> out;
  for (const auto& x : j) out.push_back(as_uint(x, what));
  return out;
}

namespace {

std::vector<Residue> residues(const json& j, const char* what, Residue p) {
  std::vector<Residue> out;
  for (auto v : as_int_list(j, what)) {
    if (v < 0 || v >= static_cast<std::int64_t>(p))
      fail(ErrorKind::InvalidArgument, std::string(what) + " entries must lie in [0, p)");
    out.push_back(static_cast<Residue>(v));
  }
  return out;
}

std::uint64_t parse_key(const std::string& key, const char* what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(key, &used);
    if (used != key.size() || key.empty() || key[0] == '-') throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError(std::string(what) + " keys must be nonnegative integers");
  }
}

}  // namespace

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt big_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + " is not a decimal integer");
    }
  }
  throw UsageError(std::string(what) + " must be an integer");
}

json to_json(const FpSeries& s) { return {{"p", s.p()}, {"trunc", s.trunc()}, {"coeffs", s.coeffs()}}; }

FpSeries series_from_json(const json& j) {
  const Residue p = as_prime(require(j, "p"));
  auto coeffs = residues(require(j, "coeffs"), "coeffs", p);
  if (has(j, "trunc") && as_uint(j.at("trunc"), "trunc") != coeffs.size())
    throw UsageError("trunc must equal the number of coefficients");
  return FpSeries(p, std::move(coeffs));
}

json to_json(const PadicInt& t) { return {{"p", t.p()}, {"precision", t.precision()}, {"digits", t.digits()}}; }

PadicInt padic_from_json(const json& j) {
  const Residue p = as_prime(require(j, "p"));
  auto digits = residues(require(j, "digits"), "digits", p);
  if (has(j, "precision") && as_uint(j.at("precision"), "precision") != digits.size())
    throw UsageError("precision must equal the number of digits");
  return PadicInt(p, std::move(digits));
}

json to_json(const DimSequence& s) {
  return {{"p", s.p()}, {"kind", std::string(to_string(s.kind()))}, {"values", s.values()}};
}

DimSequence sequence_from_json(const json& j) {
  const Residue p = as_prime(require(j, "p"));
  const Kind kind = parse_kind(as_string(require(j, "kind"), "kind"));
  const auto values = as_int_list(require(j, "values"), "values");
  return DimSequence::from_integers(p, kind, values);
}

json to_json(const UniversalPoly& q) {
  json terms = json::array();
  for (const auto& [m, c] : q.terms()) terms.push_back({{"coeff", c}, {"exponents", m}});
  return {{"p", q.p()}, {"text", q.to_text()}, {"terms", terms}};
}

json to_json(const TracePoly& t) {
  json terms = json::array();
  for (const auto& [m, c] : t.terms()) terms.push_back({{"coeff", c}, {"exponents", m}});
  return {{"text", t.to_text()}, {"terms", terms}};
}

json to_json(const Partition& lambda, const CosetMatrix& m) {
  return {{"lambda", lambda.parts()}, {"matrix", m.entries}};
}

CosetMatrix coset_matrix_from_json(const json& j) {
  const json& rows = require(j, "matrix");
  if (!rows.is_array()) throw UsageError("matrix must be an array of rows");
  CosetMatrix m;
  for (const auto& row : rows) {
    std::vector<unsigned> r;
    for (auto v : as_uint_list(row, "matrix entry")) r.push_back(static_cast<unsigned>(v));
    m.entries.push_back(std::move(r));
  }
  return m;
}

json to_json(const IVPoly& f) {
  json e = json::object();
  for (const auto& [i, c] : f.coefficients()) e[std::to_string(i)] = big_to_json(c);
  return {{"e", e}};
}

IVPoly ivpoly_from_json(const json& j) {
  const json& e = require(j, "e");
  if (!e.is_object()) throw UsageError("e must be an object");
  IVPoly::Coefficients c;
  for (auto it = e.begin(); it != e.end(); ++it) c[parse_key(it.key(), "e")] += big_from_json(it.value(), "coefficient");
  return IVPoly(std::move(c));
}

json to_json(const JordanType& t) { return {{"p", t.p()}, {"parts", t.parts()}}; }

JordanType jordan_from_json(const json& j) {
  const Residue p = as_prime(require(j, "p"));
  std::vector<unsigned> parts;
  for (auto v : as_uint_list(require(j, "parts"), "parts")) {
    if (v > p) fail(ErrorKind::InvalidArgument, "Jordan block larger than p");
    parts.push_back(static_cast<unsigned>(v));
  }
  return JordanType(p, std::move(parts));
}

json to_json(const VerObject& v) {
  json mult = json::object();
  for (unsigned j = 1; j < v.p(); ++j)
    if (v.multiplicity(j)) mult[std::to_string(j)] = v.multiplicity(j);
  return {{"p", v.p()}, {"mult", mult}};
}

VerObject ver_from_json(const json& j) {
  const Residue p = as_prime(require(j, "p"));
  const json& mult = require(j, "mult");
  if (!mult.is_object()) throw UsageError("mult must be an object");
  std::vector<std::uint64_t> m(p - 1, 0);
  for (auto it = mult.begin(); it != mult.end(); ++it) {
    const std::uint64_t idx = parse_key(it.key(), "mult");
    if (idx == 0 || idx >= p) fail(ErrorKind::InvalidArgument, "L_j needs 1 <= j <= p-1");
    m[idx - 1] += as_uint(it.value(), "multiplicity");
  }
  return VerObject(p, std::move(m));
}

json to_json(const GrElement& g) {
  json coeffs = json::object();
  for (std::size_t j = 0; j < g.coeffs().size(); ++j)
    if (g.coeffs()[j]) coeffs[std::to_string(j + 1)] = g.coeffs()[j];
  return {{"p", g.p()}, {"coeffs", coeffs}, {"text", g.to_text()}};
}

GrElement gr_from_json(const json& j) {
  const Residue p = as_prime(require(j, "p"));
  const json& c = has(j, "coeffs") ? j.at("coeffs") : require(j, "mult");
  if (!c.is_object()) throw UsageError("coefficients must be an object");
  std::vector<long long> out(p - 1, 0);
  for (auto it = c.begin(); it != c.end(); ++it) {
    const std::uint64_t idx = parse_key(it.key(), "coeffs");
    if (idx == 0 || idx >= p) fail(ErrorKind::InvalidArgument, "L_j needs 1 <= j <= p-1");
    out[idx - 1] += as_int(it.value(), "coefficient");
  }
  return GrElement(p, std::move(out));
}

EigenDatum eigen_from_json(const json& j) {
  PadicInt weight = padic_from_json(require(j, "weight"));
  std::vector<Residue> ev;
  for (auto v : as_int_list(require(j, "eigenvalue"), "eigenvalue")) {
    if (v < 0 || v >= static_cast<std::int64_t>(weight.p()))
      fail(ErrorKind::InvalidArgument, "eigenvalue coefficients must lie in [0, p)");
    ev.push_back(static_cast<Residue>(v));
  }
  return {std::move(ev), std::move(weight)};
}

json to_json(const UnramifiedRing& ring, const UnramifiedRing::Element& a) {
  json coeffs = json::array();
  for (const auto& c : a) coeffs.push_back(big_to_json(c));
  return {{"coeffs", coeffs}, {"p", ring.p()}, {"precision", ring.precision()}, {"text", ring.to_text(a)}};
}

}  // namespace padim::io
