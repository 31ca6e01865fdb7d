#pragma once

// JSON schemas for the domain types. Malformed JSON shapes raise UsageError;
// well-formed but invalid values raise padim::Error from the constructors.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "padim/arith.hpp"
#include "padim/brauer.hpp"
#include "padim/dimcore.hpp"
#include "padim/ivpring.hpp"
#include "padim/modrep.hpp"
#include "padim/symgroup.hpp"

namespace padim::io {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const json& require(const json& j, const char* key);
bool has(const json& j, const char* key);

std::int64_t as_int(const json& j, const char* what);
std::uint64_t as_uint(const json& j, const char* what);
Residue as_prime(const json& j);
std::string as_string(const json& j, const char* what);
std::vector<std::int64_t> as_int_list(const json& j, const char* what);
std::vector<std::uint64_t> as_uint_list(const json& j, const char* what);

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json big_to_json(const BigInt& v);
BigInt big_from_json(const json& j, const char* what);

json to_json(const FpSeries& s);
FpSeries series_from_json(const json& j);

json to_json(const PadicInt& t);
PadicInt padic_from_json(const json& j);

json to_json(const DimSequence& s);
DimSequence sequence_from_json(const json& j);

json to_json(const UniversalPoly& q);
json to_json(const TracePoly& t);

json to_json(const Partition& lambda, const CosetMatrix& m);
CosetMatrix coset_matrix_from_json(const json& j);

json to_json(const IVPoly& f);
IVPoly ivpoly_from_json(const json& j);

json to_json(const JordanType& t);
JordanType jordan_from_json(const json& j);

json to_json(const VerObject& v);
VerObject ver_from_json(const json& j);

json to_json(const GrElement& g);
GrElement gr_from_json(const json& j);

EigenDatum eigen_from_json(const json& j);
json to_json(const UnramifiedRing& ring, const UnramifiedRing::Element& a);

}  // namespace padim::io
