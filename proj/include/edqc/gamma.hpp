#pragma once

#include <cstdint>
#include <string>

namespace edqc {

// Exact subgraph density e(S) / C(|S|,2), reduced. Sets of size <= 1 are
// vacuously dense (1/1), since C(|S|,2) = 0 leaves the ratio undefined.
struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

Rational make_density(std::uint64_t internal_edges, std::uint64_t size);

// Density threshold stored exactly as p / 10^k, so that threshold checks are
// integer comparisons and never misclassify boundary densities (e.g. 5/6 vs
// 0.83). Parsed from a decimal literal with at most 6 fractional digits.
class ExactGamma {
 public:
  ExactGamma() = default;

  static ExactGamma parse(const std::string& text);

  std::uint64_t numerator() const { return p_; }
  unsigned scale() const { return k_; }
  std::uint64_t pow10() const { return pow10_; }
  double value() const { return static_cast<double>(p_) / static_cast<double>(pow10_); }
  const std::string& str() const { return text_; }

  // eta(G[S]) >= gamma, evaluated as 2*e*10^k >= p*s*(s-1).
  // Sets of size <= 1 always qualify.
  bool admits(std::uint64_t internal_edges, std::uint64_t size) const {
    if (size <= 1) return true;
    using wide = unsigned __int128;
    return wide(2) * internal_edges * pow10_ >= wide(p_) * size * (size - 1);
  }

  bool operator==(const ExactGamma& other) const {
    return p_ == other.p_ && k_ == other.k_;
  }

 private:
  std::uint64_t p_ = 1;
  unsigned k_ = 0;
  std::uint64_t pow10_ = 1;
  std::string text_ = "1";
};

}  // namespace edqc
