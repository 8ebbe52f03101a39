#pragma once

#include <string>
#include <vector>

#include "skolem/lrs.hpp"

namespace testing {

inline skolem::LRSpec lrs(const std::vector<std::string>& a, const std::vector<std::string>& u) {
  std::vector<skolem::Rational> ca, cu;
  for (const auto& s : a) ca.push_back(skolem::parse_rational(s));
  for (const auto& s : u) cu.push_back(skolem::parse_rational(s));
  return skolem::validate_lrs(ca, cu);
}

// Plain rational iteration, independent of TermStream.
inline std::vector<skolem::Rational> naive_terms(const std::vector<skolem::Rational>& a,
                                                 const std::vector<skolem::Rational>& u, std::size_t count) {
  std::vector<skolem::Rational> t(u.begin(), u.end());
  while (t.size() < count) {
    skolem::Rational next = 0;
    for (std::size_t i = 0; i < a.size(); ++i) next += a[i] * t[t.size() - 1 - i];
    t.push_back(next);
  }
  t.resize(count);
  return t;
}

}  // namespace testing
