#include "service.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "json_io.hpp"
#include "padim/brauer.hpp"
#include "padim/dimcore.hpp"
#include "padim/ivpring.hpp"
#include "padim/symgroup.hpp"

namespace padim::service {

using io::has;
using io::json;
using io::require;
using io::UsageError;

std::string dim_note(const BigInt& value, Residue p) {
  if (value >= 0) return value.str();
  BigInt a = value % p;
  if (a < 0) a += p;
  const BigInt b = (a - value) / p;
  std::string out = a == 0 ? "" : a.str();
  out += "-";
  if (b != 1) out += b.str() + "*";
  return out + "p";
}

namespace {

using Handler = std::function<json(const json&, const Config&)>;

std::uint64_t uint_field(const json& r, const char* key) { return io::as_uint(require(r, key), key); }

std::uint64_t uint_field_or(const json& r, const char* key, std::uint64_t fallback) {
  return has(r, key) ? io::as_uint(r.at(key), key) : fallback;
}

Kind kind_field(const json& r, Kind fallback = Kind::Symmetric) {
  return has(r, "kind") ? parse_kind(io::as_string(r.at("kind"), "kind")) : fallback;
}

Base base_field(const json& r) {
  if (!has(r, "base")) return Base::Plus;
  const std::string b = io::as_string(r.at("base"), "base");
  if (b == "plus") return Base::Plus;
  if (b == "minus") return Base::Minus;
  throw UsageError("base must be 'plus' or 'minus'");
}

Partition lambda_field(const json& r) {
  std::vector<unsigned> parts;
  for (auto v : io::as_uint_list(require(r, "lambda"), "lambda")) parts.push_back(static_cast<unsigned>(v));
  return Partition(std::move(parts));
}

json dim_json(const PadicInt& d) {
  json out = io::to_json(d);
  const BigInt v = d.to_signed();
  out["value"] = io::big_to_json(v);
  out["note"] = dim_note(v, d.p());
  out["text"] = d.to_digit_string();
  return out;
}

PadicInt dim_of(const DimSequence& seq, Checking checking = Checking::Checked) {
  return seq.kind() == Kind::Symmetric ? dim_plus(seq, checking) : dim_minus(seq, checking);
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) out += (i ? "\n" : "") + lines[i];
  return out;
}

std::string values_text(const std::vector<Residue>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

// --- arith / dimcore ---------------------------------------------------------

json op_expand(const json& r, const Config& config) {
  const Residue p = io::as_prime(require(r, "p"));
  PadicInt t = has(r, "digits")
                   ? io::padic_from_json({{"p", p}, {"digits", require(r, "digits")}})
                   : PadicInt::from_integer(p, uint_field_or(r, "precision", config.default_precision),
                                            io::big_from_json(require(r, "value"), "value"));
  const std::uint64_t natural = saturating_pow(p, t.precision());
  const std::uint64_t terms = uint_field_or(r, "terms", natural);
  if (terms == 0) throw UsageError("terms must be positive");
  if (std::min(terms, natural) > config.max_terms)
    fail(ErrorKind::SizeCap, "series of " + std::to_string(std::min(terms, natural)) + " terms exceeds the cap");
  const int sign = base_field(r) == Base::Plus ? 1 : -1;
  const FpSeries f = pow_padic(FpSeries::one_plus_z(p, terms, sign), t);
  return {{"series", io::to_json(f)}, {"text", values_text(f.coeffs())}};
}

json op_extract(const json& r, const Config&) {
  const PadicInt t = extract_exponent(io::series_from_json(require(r, "series")), base_field(r));
  json out = {{"padic", io::to_json(t)}, {"text", t.to_digit_string()}};
  out["value"] = io::big_to_json(t.to_signed());
  return out;
}

json op_dim(const json& r, const Config&) {
  const DimSequence seq = io::sequence_from_json(require(r, "sequence"));
  const bool checked = !has(r, "checked") || r.at("checked").get<bool>();
  const PadicInt d = dim_of(seq, checked ? Checking::Checked : Checking::Unchecked);
  json dj = dim_json(d);
  const std::string text = std::string(seq.kind() == Kind::Symmetric ? "Dim+ = " : "Dim- = ") +
                           d.to_digit_string() + " (" + dj["note"].get<std::string>() + ")";
  return {{"dim", dj}, {"kind", std::string(to_string(seq.kind()))}, {"text", text}};
}

json op_qn(const json& r, const Config&) {
  const UniversalPoly q = q_n(io::as_prime(require(r, "p")), uint_field(r, "n"), kind_field(r));
  return {{"poly", io::to_json(q)}, {"text", q.to_text()}};
}

json op_check(const json& r, const Config&) {
  const auto bad = check_universal(io::sequence_from_json(require(r, "sequence")));
  json out = {{"consistent", !bad.has_value()}, {"violation", nullptr}};
  if (bad) out["violation"] = *bad;
  out["text"] = bad ? "violation at n = " + std::to_string(*bad) : "consistent";
  return out;
}

json op_convolve(const json& r, const Config&) {
  const DimSequence c = convolve(io::sequence_from_json(require(r, "a")), io::sequence_from_json(require(r, "b")));
  return {{"sequence", io::to_json(c)}, {"text", values_text(c.values())}};
}

json op_koszul(const json& r, const Config&) {
  const DimSequence sym = io::sequence_from_json(require(r, "sym"));
  const DimSequence ext = io::sequence_from_json(require(r, "ext"));
  const std::size_t max_n = uint_field_or(r, "max_n", std::min(sym.max_degree(), ext.max_degree()));
  std::vector<Residue> chi;
  for (std::size_t n = 0; n <= max_n; ++n) chi.push_back(koszul_euler(sym, ext, n));
  return {{"chi", chi}, {"p", sym.p()}, {"text", values_text(chi)}};
}

json op_catalog(const json& r, const Config& config) {
  const Residue p = io::as_prime(require(r, "p"));
  const std::string name = io::as_string(require(r, "name"), "name");
  const auto params = has(r, "params") ? io::as_uint_list(r.at("params"), "params") : std::vector<std::uint64_t>{};
  const std::size_t max_degree = uint_field_or(r, "max_degree", saturating_pow(p, config.default_precision));
  if (max_degree > config.max_terms) fail(ErrorKind::SizeCap, "max_degree exceeds the cap");
  const ModelPair m = catalog(name, params, p, max_degree);
  return {{"symmetric", io::to_json(m.symmetric)},
          {"exterior", io::to_json(m.exterior)},
          {"text", "sym: " + values_text(m.symmetric.values()) + "\next: " + values_text(m.exterior.values())}};
}

// --- symgroup -----------------------------------------------------------------

std::string one_line(const Permutation& w) {
  std::string out;
  for (unsigned i = 0; i < w.size(); ++i) out += (i ? " " : "") + std::to_string(w(i) + 1);
  return out;
}

std::string matrix_text(const CosetMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.entries[i].size(); ++j) out += (j ? "," : "") + std::to_string(m.entries[i][j]);
    out += "]";
  }
  return out + "]";
}

json op_cosets(const json& r, const Config&) {
  const Partition lambda = lambda_field(r);
  json list = json::array();
  std::vector<std::string> lines;
  const auto cosets = double_cosets(lambda);
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    std::vector<unsigned> rep;
    for (unsigned x : cosets[i].representative.image()) rep.push_back(x + 1);
    const BigInt size = coset_size(lambda, cosets[i].matrix);
    list.push_back({{"index", i},
                    {"matrix", cosets[i].matrix.entries},
                    {"representative", rep},
                    {"size", io::big_to_json(size)}});
    lines.push_back(std::to_string(i) + ": " + matrix_text(cosets[i].matrix) + " rep " +
                    one_line(cosets[i].representative) + " size " + size.str());
  }
  return {{"cosets", list}, {"lambda", lambda.parts()}, {"text", join(lines)}};
}

json op_pb(const json& r, const Config&) {
  const Partition lambda = lambda_field(r);
  CosetMatrix m;
  if (has(r, "matrix")) {
    m = io::coset_matrix_from_json(r);
  } else {
    const auto cosets = double_cosets(lambda);
    const std::uint64_t idx = uint_field(r, "coset");
    if (idx >= cosets.size())
      fail(ErrorKind::IndexOutOfRange, "coset index " + std::to_string(idx) + " of " + std::to_string(cosets.size()),
           static_cast<std::int64_t>(idx));
    m = cosets[idx].matrix;
  }
  const TracePoly t = trace_polynomial(lambda, m, kind_field(r));
  return {{"lambda", lambda.parts()}, {"matrix", m.entries}, {"poly", io::to_json(t)}, {"text", t.to_text()}};
}

json op_recur(const json& r, const Config&) {
  const Recurrence rec = derive_recurrence(io::as_prime(require(r, "p")), static_cast<unsigned>(uint_field(r, "n")),
                                           kind_field(r));
  return {{"n", rec.n},
          {"p", rec.p},
          {"kind", std::string(to_string(rec.kind))},
          {"relation", rec.to_text()},
          {"rhs", io::to_json(rec.rhs)},
          {"text", rec.to_text()}};
}

// --- ivpring -----------------------------------------------------------------

json op_ivp(const json& r, const Config&) {
  const std::string op = io::as_string(require(r, "op"), "op");
  if (op == "mul") {
    const IVPoly f = e_mul(io::ivpoly_from_json(require(r, "a")), io::ivpoly_from_json(require(r, "b")));
    return {{"poly", io::to_json(f)}, {"text", f.to_text()}};
  }
  if (op == "eval") {
    const IVPoly f = io::ivpoly_from_json(require(r, "a"));
    const json& t = require(r, "t");
    if (t.is_object()) {
      const PadicInt v = eval_at(f, io::padic_from_json(t));
      return {{"padic", io::to_json(v)}, {"text", v.to_digit_string()}};
    }
    const BigInt v = eval_at(f, io::big_from_json(t, "t"));
    return {{"value", io::big_to_json(v)}, {"text", v.str()}};
  }
  if (op == "s_coords") {
    json c = json::object();
    std::string text;
    for (const auto& [k, v] : to_s_coordinates(io::ivpoly_from_json(require(r, "a")))) {
      c[std::to_string(k)] = io::big_to_json(v);
      text += (text.empty() ? "" : " + ") + v.str() + "*s" + std::to_string(k);
    }
    return {{"s", c}, {"text", text.empty() ? "0" : text}};
  }
  if (op == "structure") {
    const BigInt c = structure_constant(uint_field(r, "i"), uint_field(r, "j"), uint_field(r, "k"));
    return {{"value", io::big_to_json(c)}, {"text", c.str()}};
  }
  throw UsageError("ivp op must be mul, eval, s_coords or structure");
}

// --- modrep --------------------------------------------------------------------

json op_modrep(const json& r, const Config& config) {
  const std::string op = io::as_string(require(r, "op"), "op");
  JordanType result(2, {});
  if (op == "jordan") {
    const Residue p = io::as_prime(require(r, "p"));
    const json& rows = require(r, "matrix");
    if (!rows.is_array()) throw UsageError("matrix must be an array of rows");
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& row : rows) m.push_back(io::as_int_list(row, "matrix row"));
    result = jordan_type_of(FpMatrix::from_rows(p, m));
  } else {
    const JordanType a = io::jordan_from_json(require(r, "a"));
    if (op == "sym")
      result = sym_power(a, static_cast<unsigned>(uint_field(r, "n")), config.limits);
    else if (op == "ext")
      result = ext_power(a, static_cast<unsigned>(uint_field(r, "n")), config.limits);
    else if (op == "tensor")
      result = tensor(a, io::jordan_from_json(require(r, "b")), config.limits);
    else
      throw UsageError("modrep op must be sym, ext, tensor or jordan");
  }
  std::string text = "[";
  for (std::size_t i = 0; i < result.parts().size(); ++i) text += (i ? "," : "") + std::to_string(result.parts()[i]);
  text += "]";
  return {{"type", io::to_json(result)}, {"ver", io::to_json(ver_reduce(result))}, {"text", text}};
}

json op_ver(const json& r, const Config& config) {
  const VerObject v = io::ver_from_json(require(r, "object"));
  const Kind kind = kind_field(r);
  if (has(r, "power")) {
    const VerObject w = ver_power(v, kind, static_cast<unsigned>(uint_field(r, "power")), config.limits);
    return {{"object", io::to_json(w)}, {"text", GrElement::of(w).to_text()}};
  }
  const std::size_t max_degree = uint_field_or(r, "max_degree", saturating_pow(v.p(), config.default_precision));
  if (max_degree > config.max_terms) fail(ErrorKind::SizeCap, "max_degree exceeds the cap");
  const DimSequence seq = ver_dim_sequence(v, kind, max_degree, config.limits);
  const PadicInt d = dim_of(seq);
  json dj = dim_json(d);
  const std::string text = values_text(seq.values()) + "\n" + (kind == Kind::Symmetric ? "Dim+ = " : "Dim- = ") +
                           d.to_digit_string() + " (" + dj["note"].get<std::string>() + ")";
  return {{"sequence", io::to_json(seq)}, {"dim", dj}, {"text", text}};
}

json op_gr(const json& r, const Config& config) {
  const std::string op = io::as_string(require(r, "op"), "op");
  const GrElement a = io::gr_from_json(require(r, "a"));
  GrElement out(a.p(), {});
  if (op == "mul")
    out = a.times(io::gr_from_json(require(r, "b")), config.limits);
  else if (op == "add")
    out = a + io::gr_from_json(require(r, "b"));
  else if (op == "ultraspherical")
    out = gr_eval(ultraspherical(static_cast<unsigned>(uint_field(r, "n"))), a, config.limits);
  else
    throw UsageError("gr op must be mul, add or ultraspherical");
  return {{"value", io::to_json(out)}, {"text", out.to_text()}};
}

// --- brauer ----------------------------------------------------------------------

UnramifiedRing ring_field(const json& r) {
  const Residue p = io::as_prime(require(r, "p"));
  const std::size_t precision = uint_field(r, "precision");
  if (has(r, "modulus")) return UnramifiedRing(p, precision, io::as_int_list(r.at("modulus"), "modulus"));
  return UnramifiedRing::standard(p, precision, static_cast<unsigned>(uint_field_or(r, "degree", 1)));
}

json ring_json(const UnramifiedRing& ring) {
  return {{"p", ring.p()}, {"precision", ring.precision()}, {"modulus", ring.modulus()}};
}

json op_brauer(const json& r, const Config&) {
  const UnramifiedRing ring = ring_field(r);
  UnramifiedRing::Element value = ring.zero();
  if (has(r, "sequences")) {
    const json& items = r.at("sequences");
    if (!items.is_array()) throw UsageError("sequences must be an array");
    std::vector<EigenSequence> data;
    for (const auto& item : items) {
      std::vector<Residue> ev;
      for (auto c : io::as_int_list(require(item, "eigenvalue"), "eigenvalue")) ev.push_back(mod_p(c, ring.p()));
      data.push_back({std::move(ev), io::sequence_from_json(require(item, "sequence"))});
    }
    const std::string src = has(r, "weights") ? io::as_string(r.at("weights"), "weights") : "plus";
    if (src != "plus" && src != "minus") throw UsageError("weights must be 'plus' or 'minus'");
    value = brauer_char(ring, data, src == "plus" ? Base::Plus : Base::Minus);
  } else {
    const json& items = require(r, "data");
    if (!items.is_array()) throw UsageError("data must be an array");
    std::vector<EigenDatum> data;
    for (const auto& item : items) data.push_back(io::eigen_from_json(item));
    value = brauer_char(ring, data);
  }
  return {{"ring", ring_json(ring)}, {"value", io::to_json(ring, value)}, {"text", ring.to_text(value)}};
}

json op_teichmuller(const json& r, const Config&) {
  const UnramifiedRing ring = ring_field(r);
  const UnramifiedRing::Element w = teichmuller(ring, ring.element(io::as_int_list(require(r, "element"), "element")));
  return {{"ring", ring_json(ring)}, {"value", io::to_json(ring, w)}, {"text", ring.to_text(w)}};
}

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table = {
      {"brauer", op_brauer},   {"catalog", op_catalog}, {"check", op_check},
      {"convolve", op_convolve}, {"cosets", op_cosets}, {"dim", op_dim},
      {"expand", op_expand},   {"extract", op_extract}, {"gr", op_gr},
      {"ivp", op_ivp},         {"koszul", op_koszul},   {"modrep", op_modrep},
      {"pb", op_pb},           {"qn", op_qn},           {"recur", op_recur},
      {"teichmuller", op_teichmuller}, {"ver", op_ver},
  };
  return table;
}

json error_body(std::string_view kind, const std::string& detail, std::optional<std::int64_t> index = std::nullopt) {
  json err = {{"kind", std::string(kind)}, {"detail", detail}};
  if (index) err["index"] = *index;
  return {{"ok", false}, {"error", err}};
}

}  // namespace

const std::vector<std::string>& operations() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Response dispatch(std::string_view op, const json& request, const Config& config) {
  auto it = handlers().find(op);
  if (it == handlers().end()) return {Status::Usage, error_body("UsageError", "unknown operation '" + std::string(op) + "'")};
  try {
    if (!request.is_object()) throw UsageError("request must be a JSON object");
    json body = it->second(request, config);
    body["ok"] = true;
    return {Status::Ok, std::move(body)};
  } catch (const UsageError& e) {
    return {Status::Usage, error_body("UsageError", e.what())};
  } catch (const Error& e) {
    return {Status::Domain, error_body(to_string(e.kind()), e.what(), e.index())};
  } catch (const json::exception& e) {
    return {Status::Usage, error_body("UsageError", e.what())};
  } catch (const std::exception& e) {
    return {Status::Internal, error_body("Internal", e.what())};
  }
}

}  // namespace padim::service
