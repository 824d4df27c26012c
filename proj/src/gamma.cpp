#include "edqc/gamma.hpp"

#include <numeric>
#include <stdexcept>

namespace edqc {

Rational make_density(std::uint64_t internal_edges, std::uint64_t size) {
  if (size <= 1) return {1, 1};
  std::uint64_t pairs = size * (size - 1) / 2;
  std::uint64_t g = std::gcd(internal_edges, pairs);
  if (g == 0) return {0, pairs};
  return {internal_edges / g, pairs / g};
}

ExactGamma ExactGamma::parse(const std::string& text) {
  std::size_t pos = 0;
  std::uint64_t int_part = 0;
  bool any_digit = false;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    int_part = int_part * 10 + (text[pos] - '0');
    if (int_part > 1) throw std::invalid_argument("gamma must lie in (0,1]: " + text);
    any_digit = true;
    ++pos;
  }
  std::uint64_t frac = 0;
  unsigned k = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      frac = frac * 10 + (text[pos] - '0');
      any_digit = true;
      if (++k > 6) throw std::invalid_argument("gamma supports at most 6 fractional digits: " + text);
      ++pos;
    }
  }
  if (!any_digit || pos != text.size())
    throw std::invalid_argument("gamma is not a decimal literal: '" + text + "'");

  ExactGamma g;
  g.k_ = k;
  g.pow10_ = 1;
  for (unsigned i = 0; i < k; ++i) g.pow10_ *= 10;
  g.p_ = int_part * g.pow10_ + frac;
  g.text_ = text;
  if (g.p_ == 0 || g.p_ > g.pow10_)
    throw std::invalid_argument("gamma must lie in (0,1]: " + text);
  return g;
}

}  // namespace edqc
