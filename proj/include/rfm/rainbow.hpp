#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rfm/core.hpp"
#include "rfm/lp.hpp"

namespace rfm {

/// Injective color-to-edge assignment supporting a fractional matching of
/// size at least the target.
struct RainbowCertificate {
  std::vector<std::pair<int, int>> assignment;  // (color, edge), colors ascending
  FractionalMatching matching;
  Rational target = 0;
};

/// Injective color-to-edge assignment whose edges are pairwise disjoint.
struct IntegralRainbowCertificate {
  std::vector<std::pair<int, int>> assignment;
};

/// Caps for the exhaustive searches; exceeding either is a ScaleError.
struct SearchLimits {
  int max_colors = 12;
  int max_total_edges = 40;
};

/// Exhaustive backtracking over injective color-to-edge assignments, colors
/// in increasing index, edges in increasing index, skipping a color last.
/// Absence of a certificate means no rainbow fractional matching of size n
/// exists for the family.
std::optional<RainbowCertificate> find_rainbow_fractional(
    const ColoredFamily& family, const Rational& n, const WeightSystem& w,
    const SearchLimits& limits = {});

std::optional<IntegralRainbowCertificate> find_rainbow_integral(
    const ColoredFamily& family, int n, const SearchLimits& limits = {});

struct VerifyResult {
  bool ok = true;
  std::string reason;  // empty when ok
};

VerifyResult verify_certificate(const ColoredFamily& family, const Rational& n,
                                const WeightSystem& w, const RainbowCertificate& cert);

VerifyResult verify_integral_certificate(const ColoredFamily& family, int n,
                                         const IntegralRainbowCertificate& cert);

}  // namespace rfm
