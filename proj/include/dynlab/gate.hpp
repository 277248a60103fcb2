#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dynlab/angle_expr.hpp"
#include "dynlab/geometry.hpp"

namespace dynlab {

inline constexpr const char* kToolVersion = "dynlab 0.1.0";

using ComponentRegion = std::variant<ConvexCompact, AnnulusSector>;

struct SpectrumComponent {
  ComponentRegion region;
  bool is_clopen = false;
  std::vector<AngleExpr> circle_angles;
};

struct SpectrumDescription {
  std::vector<SpectrumComponent> components;
};

struct GateConfig {
  std::int64_t bound = 50;
  Real tol = 1e-9L;
  int n_max = 20;
  std::int64_t r_max_denominator = 10;
};

enum class GateRule { Theorem1, Cor1, Cor2, Cor3, Cor4, ShkarinIsolated, Inconclusive };

std::string gate_rule_name(GateRule rule);
GateRule gate_rule_from_name(const std::string& name);

struct Qualifiers {
  std::int64_t bound;
  double tol;
  bool operator==(const Qualifiers&) const = default;
};

struct GateVerdict {
  bool excluded = false;
  GateRule rule = GateRule::Inconclusive;
  nlohmann::json witness;
  std::optional<Qualifiers> qualifiers;
  std::string tool_version = kToolVersion;

  bool operator==(const GateVerdict&) const = default;
};

/// Angles where the region meets the unit circle, or nullopt when the
/// intersection is an arc.
std::optional<std::vector<Real>> circle_intersection(const ComponentRegion& region);

/// r candidates: 0, then p/q with q <= max_den, gcd(p, q) = 1, 0 < |p/q| <= 1,
/// ordered by q, then |p|, positive first.
std::vector<Rational> shift_candidates(std::int64_t max_den);

/// Validates the description (SpecViolation) and runs the rule cascade:
/// isolated points, then per clopen component cor_4, cor_3, cor_2, cor_1,
/// theorem_1. The first excluded component decides.
GateVerdict evaluate_gate(const SpectrumDescription& desc, const GateConfig& config = {});

enum class ReportFormat { Json, Text };

/// Deterministic JSON (sorted keys, two-space indent) or a one-paragraph text report.
std::string report_emit(const GateVerdict& verdict, ReportFormat format);

nlohmann::json verdict_to_json(const GateVerdict& verdict);
GateVerdict verdict_from_json(const nlohmann::json& j);

}  // namespace dynlab
