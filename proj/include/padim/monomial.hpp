#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace padim {

/// Exponent vector with no trailing zeros; entry i is the power of variable i.
using Monomial = std::vector<unsigned>;

void trim(Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
unsigned total_degree(const Monomial& m);

/// Canonical display order: compare exponents from the highest variable down,
/// larger exponent first. Yields "d1*d2 + d1^2 + d1" and "z0*z1 + z0 + 1".
struct DisplayOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// "v{offset+i}^e" factors joined by '*'; "" for the constant monomial.
std::string format_monomial(const Monomial& m, std::string_view var, unsigned offset);

/// Joins signed terms as "a + b - c"; terms are (coefficient, monomial text).
std::string join_terms(const std::vector<std::pair<long long, std::string>>& terms);

}  // namespace padim
