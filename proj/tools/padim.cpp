// Command-line front end. Every subcommand builds a JSON request and runs it
// through the C interface; output is the JSON response or its text field.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padim/padim.h"

using nlohmann::json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

long long parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw Usage("not an integer: '" + s + "'");
}

json int_list(const std::string& csv) {
  json out = json::array();
  if (trim(csv).empty()) return out;
  for (const auto& part : split(csv, ',')) out.push_back(parse_int(part));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A sequence file holds either the JSON schema or one comma-separated line.
json sequence_from_text(const std::string& text, const std::optional<unsigned>& p, const std::optional<std::string>& kind) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::parse_error& e) {
      throw Usage(std::string("invalid sequence JSON: ") + e.what());
    }
    if (p) j["p"] = *p;
    if (kind) j["kind"] = *kind;
    return j;
  }
  if (!p) throw Usage("--p is required for a comma-separated sequence");
  return {{"p", *p}, {"kind", kind.value_or("symmetric")}, {"values", int_list(body)}};
}

json sequence_arg(const std::optional<std::string>& values, const std::optional<std::string>& file,
                  const std::optional<unsigned>& p, const std::optional<std::string>& kind, const char* what) {
  if (values && file) throw Usage(std::string("give either inline values or a file for ") + what);
  if (values) return sequence_from_text(*values, p, kind);
  if (file) return sequence_from_text(read_file(*file), p, kind);
  throw Usage(std::string("missing ") + what);
}

/// "2" is L_2; "1:2,3:1" is 2 L_1 + L_3.
json parse_mult(const std::string& text) {
  json mult = json::object();
  for (const auto& item : split(text, ',')) {
    const auto kv = split(item, ':');
    if (kv.size() == 1)
      mult[std::to_string(parse_int(kv[0]))] = mult.value(std::to_string(parse_int(kv[0])), 0LL) + 1;
    else if (kv.size() == 2)
      mult[std::to_string(parse_int(kv[0]))] = parse_int(kv[1]);
    else
      throw Usage("object entries look like j or j:m");
  }
  return mult;
}

json parse_matrix(const std::string& text) {
  json rows = json::array();
  for (const auto& row : split(text, ';')) rows.push_back(int_list(row));
  return rows;
}

json parse_json_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Usage(std::string("invalid JSON for ") + what + ": " + e.what());
  }
}

void emit_usage_error(const std::string& detail, bool text_mode) {
  if (text_mode)
    std::cout << "error: UsageError: " << detail << "\n";
  else
    std::cout << json{{"ok", false}, {"error", {{"kind", "UsageError"}, {"detail", detail}}}}.dump() << "\n";
}

std::optional<std::size_t> env_size(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  const long long n = parse_int(v);
  if (n <= 0) throw Usage(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(n);
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const CLI::Validator Prime = CLI::Validator(
    [](std::string& s) -> std::string {
      try {
        const long long v = std::stoll(s);
        if (v > 0 && v < (1LL << 31) && is_prime(static_cast<unsigned>(v))) return "";
      } catch (const std::logic_error&) {
      }
      return "p must be a prime below 2^31, got " + s;
    },
    "PRIME");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic dimensions of objects in symmetric tensor categories"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  // Request builders for the subcommands, keyed by operation name.
  std::map<CLI::App*, std::pair<std::string, std::function<json()>>> builders;

  // Shared option storage; each subcommand reads only its own flags.
  std::optional<unsigned> p, n, terms, coset, precision, max_degree, max_n, degree, power;
  std::optional<long long> value;
  std::optional<std::string> digits, base, values, file, kind, lambda, matrix, a, b, a_file, b_file, object, op,
      modulus, data_file, sequences_file, weights, name, params, element, t;
  std::vector<std::string> datums;
  bool unchecked = false;

  auto prime_opt = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--p", p, "Prime characteristic")->check(Prime);
    if (required) o->required();
  };
  auto kind_opt = [&](CLI::App* sub) {
    sub->add_option("--kind", kind, "symmetric|exterior (sym|ext)")
        ->check(CLI::IsMember({"symmetric", "exterior", "sym", "ext"}));
  };
  auto base_opt = [&](CLI::App* sub) {
    sub->add_option("--base", base, "plus: 1+z, minus: 1-z")->check(CLI::IsMember({"plus", "minus"}));
  };

  {
    auto* s = app.add_subcommand("expand", "Coefficients of (1+z)^t or (1-z)^t");
    prime_opt(s);
    s->add_option("--digits", digits, "Digits t_0,t_1,... of t");
    s->add_option("--value", value, "t as an integer (with --precision digits)");
    s->add_option("--precision", precision, "Digits of t when given by --value")->check(CLI::PositiveNumber);
    base_opt(s);
    s->add_option("--terms", terms, "Series length")->check(CLI::PositiveNumber);
    builders[s] = {"expand", [&] {
                     if (digits.has_value() == value.has_value()) throw Usage("give exactly one of --digits, --value");
                     json r = {{"p", *p}, {"base", base.value_or("plus")}};
                     if (digits) r["digits"] = int_list(*digits);
                     if (value) r["value"] = *value;
                     if (precision) r["precision"] = *precision;
                     if (terms) r["terms"] = *terms;
                     return r;
                   }};
  }
  {
    auto* s = app.add_subcommand("extract", "Exponent t of a series (1+z)^t or (1-z)^t");
    prime_opt(s, false);
    s->add_option("--coeffs", values, "Series coefficients c_0,c_1,...");
    s->add_option("--file", file, "Series JSON file")->check(CLI::ExistingFile);
    base_opt(s);
    builders[s] = {"extract", [&] {
                     json series;
                     if (values.has_value() == file.has_value()) throw Usage("give exactly one of --coeffs, --file");
                     if (values) {
                       if (!p) throw Usage("--p is required with --coeffs");
                       series = {{"p", *p}, {"coeffs", int_list(*values)}};
                     } else {
                       series = parse_json_arg(read_file(*file), "series file");
                       if (p) series["p"] = *p;
                     }
                     return json{{"series", series}, {"base", base.value_or("plus")}};
                   }};
  }
  {
    auto* s = app.add_subcommand("dim", "Dim+ of a symmetric or Dim- of an exterior sequence");
    prime_opt(s, false);
    kind_opt(s);
    s->add_option("--values", values, "Sequence d_0,d_1,...");
    s->add_option("--file", file, "Sequence file (JSON or one CSV line)")->check(CLI::ExistingFile);
    s->add_flag("--unchecked", unchecked, "Skip the universal-polynomial consistency check");
    builders[s] = {"dim", [&] {
                     return json{{"sequence", sequence_arg(values, file, p, kind, "--values or --file")},
                                 {"checked", !unchecked}};
                   }};
  }
  {
    auto* s = app.add_subcommand("check", "First index violating d_n = Q_n(d_1, d_p, ...)");
    prime_opt(s, false);
    kind_opt(s);
    s->add_option("--values", values, "Sequence d_0,d_1,...");
    s->add_option("--file", file, "Sequence file")->check(CLI::ExistingFile);
    builders[s] = {"check", [&] { return json{{"sequence", sequence_arg(values, file, p, kind, "--values or --file")}}; }};
  }
  {
    auto* s = app.add_subcommand("qn", "Universal polynomial Q_n");
    prime_opt(s);
    s->add_option("--n", n, "Degree")->required();
    kind_opt(s);
    builders[s] = {"qn", [&] { return json{{"p", *p}, {"n", *n}, {"kind", kind.value_or("symmetric")}}; }};
  }
  {
    auto* s = app.add_subcommand("convolve", "Sequence of a direct sum");
    prime_opt(s, false);
    kind_opt(s);
    s->add_option("--a", a, "First sequence, inline CSV");
    s->add_option("--b", b, "Second sequence, inline CSV");
    s->add_option("--a-file", a_file, "First sequence file")->check(CLI::ExistingFile);
    s->add_option("--b-file", b_file, "Second sequence file")->check(CLI::ExistingFile);
    builders[s] = {"convolve", [&] {
                     return json{{"a", sequence_arg(a, a_file, p, kind, "--a or --a-file")},
                                 {"b", sequence_arg(b, b_file, p, kind, "--b or --b-file")}};
                   }};
  }
  {
    auto* s = app.add_subcommand("cosets", "Double cosets of S_lambda in S_n");
    s->add_option("--lambda", lambda, "Partition, e.g. 3,1")->required();
    builders[s] = {"cosets", [&] { return json{{"lambda", int_list(*lambda)}}; }};
  }
  {
    auto* s = app.add_subcommand("pb", "Trace polynomial P_B of a double coset");
    s->add_option("--lambda", lambda, "Partition, e.g. 3,1")->required();
    s->add_option("--coset", coset, "Index into the cosets listing");
    s->add_option("--matrix", matrix, "Coset matrix, rows separated by ';'");
    kind_opt(s);
    builders[s] = {"pb", [&] {
                     if (coset.has_value() == matrix.has_value()) throw Usage("give exactly one of --coset, --matrix");
                     json r = {{"lambda", int_list(*lambda)}, {"kind", kind.value_or("symmetric")}};
                     if (coset) r["coset"] = *coset;
                     if (matrix) r["matrix"] = parse_matrix(*matrix);
                     return r;
                   }};
  }
  {
    auto* s = app.add_subcommand("recur", "Relation expressing d_n through lower d_r");
    prime_opt(s);
    s->add_option("--n", n, "Degree")->required();
    kind_opt(s);
    builders[s] = {"recur", [&] { return json{{"p", *p}, {"n", *n}, {"kind", kind.value_or("symmetric")}}; }};
  }
  {
    auto* s = app.add_subcommand("koszul", "Koszul Euler characteristics chi_0..chi_max");
    prime_opt(s, false);
    s->add_option("--sym", a, "Symmetric sequence, inline CSV");
    s->add_option("--ext", b, "Exterior sequence, inline CSV");
    s->add_option("--sym-file", a_file, "Symmetric sequence file")->check(CLI::ExistingFile);
    s->add_option("--ext-file", b_file, "Exterior sequence file")->check(CLI::ExistingFile);
    s->add_option("--max-n", max_n, "Largest n");
    builders[s] = {"koszul", [&] {
                     json r = {{"sym", sequence_arg(a, a_file, p, std::string("symmetric"), "--sym or --sym-file")},
                               {"ext", sequence_arg(b, b_file, p, std::string("exterior"), "--ext or --ext-file")}};
                     if (max_n) r["max_n"] = *max_n;
                     return r;
                   }};
  }
  {
    auto* s = app.add_subcommand("ver", "Power dimensions and Dim of an object of Ver_p");
    prime_opt(s);
    s->add_option("--object", object, "Simples as j or j:mult, e.g. 2 or 1:2,3:1")->required();
    kind_opt(s);
    s->add_option("--max-degree", max_degree, "Largest power degree");
    s->add_option("--power", power, "Return the n-th power as an object instead");
    builders[s] = {"ver", [&] {
                     json r = {{"object", {{"p", *p}, {"mult", parse_mult(*object)}}},
                               {"kind", kind.value_or("symmetric")}};
                     if (max_degree) r["max_degree"] = *max_degree;
                     if (power) r["power"] = *power;
                     return r;
                   }};
  }
  {
    auto* s = app.add_subcommand("modrep", "Jordan types of powers and tensor products over k[Z/p]");
    prime_opt(s);
    s->add_option("--op", op, "sym|ext|tensor|jordan")->required()->check(CLI::IsMember({"sym", "ext", "tensor", "jordan"}));
    s->add_option("--a", a, "Jordan type, e.g. 5,3");
    s->add_option("--b", b, "Second Jordan type for tensor");
    s->add_option("--n", n, "Power degree");
    s->add_option("--matrix", matrix, "Nilpotent matrix for jordan, rows separated by ';'");
    builders[s] = {"modrep", [&] {
                     json r = {{"op", *op}};
                     if (*op == "jordan") {
                       if (!matrix) throw Usage("--matrix is required for jordan");
                       r["p"] = *p;
                       r["matrix"] = parse_matrix(*matrix);
                       return r;
                     }
                     if (!a) throw Usage("--a is required");
                     r["a"] = {{"p", *p}, {"parts", int_list(*a)}};
                     if (*op == "tensor") {
                       if (!b) throw Usage("--b is required for tensor");
                       r["b"] = {{"p", *p}, {"parts", int_list(*b)}};
                     } else {
                       if (!n) throw Usage("--n is required for sym and ext");
                       r["n"] = *n;
                     }
                     return r;
                   }};
  }
  {
    auto* s = app.add_subcommand("brauer", "Categorical Brauer character value");
    prime_opt(s);
    s->add_option("--precision", precision, "Ring precision K (values mod p^K)")->required()->check(CLI::PositiveNumber);
    s->add_option("--modulus", modulus, "Monic modulus coefficients, low to high");
    s->add_option("--degree", degree, "Degree d of the standard modulus")->check(CLI::PositiveNumber);
    s->add_option("--datum", datums, "Eigen datum 'c0,c1,...;weight' (weight an integer), repeatable");
    s->add_option("--data", data_file, "JSON file with a list of eigen data")->check(CLI::ExistingFile);
    s->add_option("--sequences", sequences_file, "JSON file of {eigenvalue, sequence} items")->check(CLI::ExistingFile);
    s->add_option("--weights", weights, "Weight source for --sequences")->check(CLI::IsMember({"plus", "minus"}));
    builders[s] = {"brauer", [&] {
                     json r = {{"p", *p}, {"precision", *precision}};
                     if (modulus && degree) throw Usage("give at most one of --modulus, --degree");
                     if (modulus) r["modulus"] = int_list(*modulus);
                     if (degree) r["degree"] = *degree;
                     const int sources = !datums.empty() + data_file.has_value() + sequences_file.has_value();
                     if (sources != 1) throw Usage("give exactly one of --datum, --data, --sequences");
                     if (sequences_file) {
                       r["sequences"] = parse_json_arg(read_file(*sequences_file), "--sequences");
                       r["weights"] = weights.value_or("plus");
                     } else if (data_file) {
                       r["data"] = parse_json_arg(read_file(*data_file), "--data");
                     } else {
                       json data = json::array();
                       for (const auto& d : datums) {
                         const auto parts = split(d, ';');
                         if (parts.size() != 2) throw Usage("--datum looks like 'c0,c1;weight'");
                         const long long w = parse_int(parts[1]);
                         json digits = json::array();
                         // Base-p digits of the weight at the ring precision.
                         long long rest = w;
                         for (unsigned i = 0; i < *precision; ++i) {
                           long long dgt = ((rest % static_cast<long long>(*p)) + *p) % *p;
                           digits.push_back(dgt);
                           rest = (rest - dgt) / static_cast<long long>(*p);
                         }
                         data.push_back({{"eigenvalue", int_list(parts[0])},
                                         {"weight", {{"p", *p}, {"precision", *precision}, {"digits", digits}}}});
                       }
                       r["data"] = data;
                     }
                     return r;
                   }};
  }
  {
    auto* s = app.add_subcommand("teichmuller", "Teichmueller lift of a residue");
    prime_opt(s);
    s->add_option("--precision", precision, "Ring precision K")->required()->check(CLI::PositiveNumber);
    s->add_option("--modulus", modulus, "Monic modulus coefficients, low to high");
    s->add_option("--degree", degree, "Degree d of the standard modulus")->check(CLI::PositiveNumber);
    s->add_option("--element", element, "Coefficients of the residue, low to high")->required();
    builders[s] = {"teichmuller", [&] {
                     json r = {{"p", *p}, {"precision", *precision}, {"element", int_list(*element)}};
                     if (modulus && degree) throw Usage("give at most one of --modulus, --degree");
                     if (modulus) r["modulus"] = int_list(*modulus);
                     if (degree) r["degree"] = *degree;
                     return r;
                   }};
  }
  {
    auto* s = app.add_subcommand("catalog", "Symmetric and exterior sequences of a model object");
    prime_opt(s);
    s->add_option("--name", name, "vec|supervec|repD|ver_L2")->required()->check(CLI::IsMember({"vec", "supervec", "repD", "ver_L2"}));
    s->add_option("--params", params, "Model parameters, e.g. N or m,n");
    s->add_option("--max-degree", max_degree, "Largest degree");
    builders[s] = {"catalog", [&] {
                     json r = {{"p", *p}, {"name", *name}, {"params", int_list(params.value_or(""))}};
                     if (max_degree) r["max_degree"] = *max_degree;
                     return r;
                   }};
  }
  {
    auto* s = app.add_subcommand("ivp", "Integer-valued polynomials in the binomial basis");
    s->add_option("--op", op, "mul|eval|s_coords|structure")->required()->check(CLI::IsMember({"mul", "eval", "s_coords", "structure"}));
    s->add_option("--a", a, "Polynomial JSON, e.g. {\"e\":{\"1\":1}}, or i,j,k for structure");
    s->add_option("--b", b, "Second polynomial JSON");
    s->add_option("--t", t, "Evaluation point: integer or p-adic JSON");
    builders[s] = {"ivp", [&] {
                     json r = {{"op", *op}};
                     if (!a) throw Usage("--a is required");
                     if (*op == "structure") {
                       const json ijk = int_list(*a);
                       if (ijk.size() != 3) throw Usage("structure takes --a i,j,k");
                       r["i"] = ijk[0];
                       r["j"] = ijk[1];
                       r["k"] = ijk[2];
                       return r;
                     }
                     r["a"] = parse_json_arg(*a, "--a");
                     if (b) r["b"] = parse_json_arg(*b, "--b");
                     if (t) r["t"] = trim(*t).front() == '{' ? parse_json_arg(*t, "--t") : json(parse_int(*t));
                     return r;
                   }};
  }
  {
    auto* s = app.add_subcommand("gr", "Arithmetic in the Grothendieck ring of Ver_p");
    prime_opt(s);
    s->add_option("--op", op, "mul|add|ultraspherical")->required()->check(CLI::IsMember({"mul", "add", "ultraspherical"}));
    s->add_option("--a", a, "Element as j or j:coeff entries, e.g. 3 or 1:1,3:-1")->required();
    s->add_option("--b", b, "Second element");
    s->add_option("--n", n, "Ultraspherical index");
    builders[s] = {"gr", [&] {
                     json r = {{"op", *op}, {"a", {{"p", *p}, {"coeffs", parse_mult(*a)}}}};
                     if (b) r["b"] = {{"p", *p}, {"coeffs", parse_mult(*b)}};
                     if (n) r["n"] = *n;
                     return r;
                   }};
  }

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_usage_error(e.what(), format == "text");
    return 2;
  }
  const bool text_mode = format == "text";

  CLI::App* chosen = app.get_subcommands().front();
  const auto& [op_name, build] = builders.at(chosen);
  json request;
  std::unique_ptr<padim_context, decltype(&padim_context_free)> ctx(padim_context_new(), padim_context_free);
  try {
    if (auto digits_env = env_size("PADIM_PRECISION")) padim_context_set_precision(ctx.get(), *digits_env);
    if (auto cap = env_size("PADIM_SIZE_CAP")) padim_context_set_size_cap(ctx.get(), *cap);
    request = build();
  } catch (const Usage& e) {
    emit_usage_error(e.what(), text_mode);
    return 2;
  }

  char* raw = nullptr;
  const padim_status status = padim_call(ctx.get(), op_name.c_str(), request.dump().c_str(), &raw);
  if (!raw) {
    std::cerr << "padim: out of memory\n";
    return 3;
  }
  const json response = json::parse(raw);
  padim_string_free(raw);
  if (text_mode) {
    if (status == PADIM_OK) {
      std::cout << response.at("text").get<std::string>() << "\n";
    } else {
      const auto& err = response.at("error");
      std::cout << "error: " << err.at("kind").get<std::string>() << ": " << err.at("detail").get<std::string>();
      if (err.contains("index")) std::cout << " (index " << err.at("index") << ")";
      std::cout << "\n";
    }
  } else {
    std::cout << response.dump() << "\n";
  }
  return status == PADIM_OK ? 0 : status == PADIM_DOMAIN_ERROR ? 1 : status == PADIM_USAGE_ERROR ? 2 : 3;
}
