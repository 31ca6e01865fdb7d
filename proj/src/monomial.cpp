#include "padim/monomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace padim {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

bool DisplayOrder::operator()(const Monomial& a, const Monomial& b) const {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = n; k-- > 0;) {
    const unsigned ea = k < a.size() ? a[k] : 0;
    const unsigned eb = k < b.size() ? b[k] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

std::string format_monomial(const Monomial& m, std::string_view var, unsigned offset) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << var << (i + offset);
    if (m[i] > 1) out << '^' << m[i];
  }
  return out.str();
}

std::string join_terms(const std::vector<std::pair<long long, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [coeff, mono] : terms) {
    const long long mag = std::llabs(coeff);
    if (first) {
      if (coeff < 0) out << '-';
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << mono;
    }
  }
  return out.str();
}

}  // namespace padim
