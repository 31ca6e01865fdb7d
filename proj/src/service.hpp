#pragma once

// Request/response dispatcher behind the C API: one named operation, a JSON
// request object in, a JSON response object out.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "padim/modrep.hpp"

namespace padim::service {

struct Config {
  /// Digits used when a request leaves the series length open.
  std::size_t default_precision = 3;
  ModelLimits limits;
  /// Longest power series a request may ask for.
  std::size_t max_terms = 10'000'000;
};

enum class Status { Ok = 0, Domain = 1, Usage = 2, Internal = 3 };

struct Response {
  Status status;
  /// Success: {"ok":true,...,"text":...}. Failure: {"ok":false,"error":{...}}.
  nlohmann::json body;
};

Response dispatch(std::string_view op, const nlohmann::json& request, const Config& config);

const std::vector<std::string>& operations();

/// "2-p" style rendering of a signed p-adic representative.
std::string dim_note(const BigInt& value, Residue p);

}  // namespace padim::service
