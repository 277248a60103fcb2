#include "dynlab/gate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dynlab/error.hpp"
#include "dynlab/kronecker.hpp"

namespace dynlab {

namespace {

using nlohmann::json;

constexpr Real kDiscSlack = 1e-12L;
constexpr Real kAngleMatchTol = 1e-9L;

[[noreturn]] void violation(const std::string& what) { throw Error(Errc::SpecViolation, what); }

Real region_max_modulus(const ComponentRegion& region) {
  if (const auto* k = std::get_if<ConvexCompact>(&region)) return k->max_modulus();
  return std::get<AnnulusSector>(region).r_outer;
}

std::optional<Complex> as_point(const ComponentRegion& region) {
  if (const auto* k = std::get_if<ConvexCompact>(&region)) {
    if (const auto* p = std::get_if<ConvexCompact::Point>(&k->shape())) return p->at;
    return std::nullopt;
  }
  const auto& s = std::get<AnnulusSector>(region);
  if (s.is_point()) return std::polar(s.r_outer, s.theta_lo);
  return std::nullopt;
}

bool on_circle(Real modulus) { return std::abs(modulus - 1) <= kDiscSlack; }

json reals_json(const std::vector<Real>& v) {
  json out = json::array();
  for (Real x : v) out.push_back(static_cast<double>(x));
  return out;
}

json ints_json(const std::vector<std::int64_t>& v) { return json(v); }

std::string rational_text(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

// Declared angles must be pairwise distinct on the circle and coincide with
// the geometric intersection whenever that is finite.
void validate_component(const SpectrumComponent& c, std::size_t index) {
  const std::string where = "component " + std::to_string(index) + ": ";
  if (region_max_modulus(c.region) > 1 + kDiscSlack) violation(where + "region leaves the closed unit disc");

  std::vector<Real> declared;
  for (const auto& a : c.circle_angles) declared.push_back(a.reduced());
  for (std::size_t i = 0; i < declared.size(); ++i)
    for (std::size_t j = i + 1; j < declared.size(); ++j)
      if (chord(declared[i], declared[j]) < kMergeTol)
        violation(where + "angles '" + c.circle_angles[i].source() + "' and '" + c.circle_angles[j].source() +
                  "' are the same point");

  const auto computed = circle_intersection(c.region);
  if (!computed) return;
  auto matched = [](Real x, const std::vector<Real>& pool) {
    return std::any_of(pool.begin(), pool.end(), [x](Real y) { return chord(x, y) < kAngleMatchTol; });
  };
  for (std::size_t i = 0; i < declared.size(); ++i)
    if (!matched(declared[i], *computed))
      violation(where + "angle '" + c.circle_angles[i].source() + "' is not on the region's circle intersection");
  for (Real x : *computed)
    if (!matched(x, declared))
      violation(where + "region meets the unit circle at angle " + std::to_string(static_cast<double>(x)) +
                " which is not declared");
}

struct ComponentOutcome {
  std::optional<GateVerdict> verdict;
  json summary;
  bool searched = false;
};

ComponentOutcome evaluate_component(const SpectrumComponent& c, std::size_t index, const GateConfig& cfg) {
  ComponentOutcome out;
  out.summary = {{"component", index}};
  const Qualifiers q{cfg.bound, static_cast<double>(cfg.tol)};

  if (!circle_intersection(c.region)) {
    out.summary["status"] = "arc";
    return out;
  }

  const std::size_t m = c.circle_angles.size();
  json angles = json::array();
  for (const auto& a : c.circle_angles) angles.push_back(a.canonical());

  auto excluded = [&](GateRule rule, json witness, std::optional<Qualifiers> qual) {
    witness["component"] = index;
    witness["is_clopen"] = c.is_clopen;
    witness["angles"] = angles;
    return GateVerdict{true, rule, std::move(witness), qual, kToolVersion};
  };

  std::vector<std::pair<std::int64_t, std::int64_t>> pi_forms;
  for (const auto& a : c.circle_angles)
    if (const auto pq = a.pi_rational()) pi_forms.push_back(*pq);
  if (m > 0 && pi_forms.size() == m) {
    json fractions = json::array();
    for (const auto& [p, qd] : pi_forms) fractions.push_back({p, qd});
    out.verdict = excluded(GateRule::Cor4, {{"pi_fractions", fractions}}, std::nullopt);
    return out;
  }

  if (m <= 2) {
    out.verdict = excluded(GateRule::Cor3, {{"m", m}}, std::nullopt);
    return out;
  }

  FrequencyVector alpha;
  for (const auto& a : c.circle_angles) alpha.push_back(a.reduced());
  out.searched = true;
  out.summary["alpha"] = reals_json(alpha);

  try {
    const auto zero_sum = zero_sum_relation_search(alpha, cfg.bound, cfg.tol);
    if (!zero_sum) {
      out.verdict = excluded(GateRule::Cor2,
                             {{"alpha", reals_json(alpha)}, {"search", "zero_sum_relation_search"}, {"relation", nullptr}},
                             q);
      return out;
    }
    out.summary["zero_sum_relation"] = ints_json(zero_sum->coefficients);

    const auto relation = integer_relation_search(alpha, cfg.bound, cfg.tol);
    std::optional<Real> excluded_r;
    if (relation) {
      Real sc = 0, sca = 0;
      for (std::size_t j = 0; j < m; ++j) {
        sc += static_cast<Real>(relation->coefficients[j]);
        sca += static_cast<Real>(relation->coefficients[j]) * alpha[j];
      }
      if (sc != 0) excluded_r = -sca / sc + Real{0};
    }

    std::vector<Rational> grid;
    std::vector<Real> r_values;
    for (const Rational& r : shift_candidates(cfg.r_max_denominator)) {
      if (excluded_r && std::abs(r.value() - *excluded_r) < cfg.tol) continue;
      grid.push_back(r);
      r_values.push_back(r.value());
    }
    json shift_search = {{"n_max", cfg.n_max},
                         {"r_max_denominator", cfg.r_max_denominator},
                         {"r_candidates", r_values.size()},
                         {"excluded_r", excluded_r ? json(static_cast<double>(*excluded_r)) : json(nullptr)}};

    if (const auto shift = shift_to_independence(alpha, cfg.n_max, r_values, cfg.bound, cfg.tol)) {
      const auto pos = std::find(r_values.begin(), r_values.end(), shift->r) - r_values.begin();
      shift_search["n"] = shift->n;
      shift_search["r"] = rational_text(grid[static_cast<std::size_t>(pos)]);
      out.verdict = excluded(GateRule::Cor1, {{"alpha", reals_json(alpha)}, {"shift_search", shift_search}}, q);
      return out;
    }
    shift_search["n"] = nullptr;
    shift_search["r"] = nullptr;
    out.summary["shift_search"] = shift_search;

    if (!relation) {
      out.verdict = excluded(GateRule::Theorem1,
                             {{"alpha", reals_json(alpha)}, {"search", "integer_relation_search"}, {"relation", nullptr}},
                             q);
      return out;
    }
    out.summary["relation"] = ints_json(relation->coefficients);
    out.summary["status"] = "dependent";
  } catch (const Error& e) {
    if (e.code() != Errc::SearchSpaceTooLarge) throw;
    out.summary["status"] = "search_aborted";
    out.summary["reason"] = e.what();
  }
  return out;
}

}  // namespace

std::string gate_rule_name(GateRule rule) {
  switch (rule) {
    case GateRule::Theorem1:
      return "theorem_1";
    case GateRule::Cor1:
      return "cor_1";
    case GateRule::Cor2:
      return "cor_2";
    case GateRule::Cor3:
      return "cor_3";
    case GateRule::Cor4:
      return "cor_4";
    case GateRule::ShkarinIsolated:
      return "shkarin_isolated";
    case GateRule::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

GateRule gate_rule_from_name(const std::string& name) {
  for (GateRule r : {GateRule::Theorem1, GateRule::Cor1, GateRule::Cor2, GateRule::Cor3, GateRule::Cor4,
                     GateRule::ShkarinIsolated, GateRule::Inconclusive})
    if (gate_rule_name(r) == name) return r;
  throw Error(Errc::InvalidArgument, "unknown rule '" + name + "'");
}

std::optional<std::vector<Real>> circle_intersection(const ComponentRegion& region) {
  std::vector<Real> out;
  if (const auto* s = std::get_if<AnnulusSector>(&region)) {
    if (!on_circle(s->r_outer)) return out;
    if (s->theta_lo != s->theta_hi) return std::nullopt;
    out.push_back(reduce_angle(s->theta_lo));
    return out;
  }
  const auto& shape = std::get<ConvexCompact>(region).shape();
  if (const auto* p = std::get_if<ConvexCompact::Point>(&shape)) {
    if (on_circle(std::abs(p->at))) out.push_back(reduce_angle(std::arg(p->at)));
  } else if (const auto* d = std::get_if<ConvexCompact::Disc>(&shape)) {
    if (on_circle(std::abs(d->center) + d->radius)) {
      if (std::abs(d->center) <= kDiscSlack) {
        if (d->radius > 0) return std::nullopt;
      } else {
        out.push_back(reduce_angle(std::arg(d->center)));
      }
    }
  } else {
    for (Complex v : std::get<ConvexCompact::Polygon>(shape).vertices)
      if (on_circle(std::abs(v))) out.push_back(reduce_angle(std::arg(v)));
  }
  return out;
}

std::vector<Rational> shift_candidates(std::int64_t max_den) {
  std::vector<Rational> out{{0, 1}};
  for (std::int64_t q = 1; q <= max_den; ++q)
    for (std::int64_t p = 1; p <= q; ++p)
      if (std::gcd(p, q) == 1) {
        out.push_back({p, q});
        out.push_back({-p, q});
      }
  return out;
}

GateVerdict evaluate_gate(const SpectrumDescription& desc, const GateConfig& config) {
  if (config.bound < 1) throw Error(Errc::InvalidArgument, "bound must be >= 1");
  if (!(config.tol > 0)) throw Error(Errc::InvalidArgument, "tol must be positive");
  if (config.n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be >= 1");
  if (config.r_max_denominator < 1) throw Error(Errc::InvalidArgument, "r_max_denominator must be >= 1");
  if (desc.components.empty()) throw Error(Errc::SpecViolation, "spectrum has no components");

  for (std::size_t i = 0; i < desc.components.size(); ++i) validate_component(desc.components[i], i);

  for (std::size_t i = 0; i < desc.components.size(); ++i) {
    const auto& c = desc.components[i];
    if (!c.is_clopen) continue;
    if (const auto p = as_point(c.region))
      return GateVerdict{true,
                         GateRule::ShkarinIsolated,
                         {{"component", i}, {"is_clopen", true}, {"point", {static_cast<double>(p->real()), static_cast<double>(p->imag())}}},
                         std::nullopt,
                         kToolVersion};
  }

  json summaries = json::array();
  bool searched = false;
  for (std::size_t i = 0; i < desc.components.size(); ++i) {
    const auto& c = desc.components[i];
    if (!c.is_clopen) {
      summaries.push_back({{"component", i}, {"status", "not_clopen"}});
      continue;
    }
    ComponentOutcome outcome = evaluate_component(c, i, config);
    if (outcome.verdict) return std::move(*outcome.verdict);
    searched = searched || outcome.searched;
    summaries.push_back(std::move(outcome.summary));
  }

  GateVerdict v;
  v.witness = {{"components", summaries}};
  if (searched) v.qualifiers = Qualifiers{config.bound, static_cast<double>(config.tol)};
  return v;
}

nlohmann::json verdict_to_json(const GateVerdict& v) {
  json q = nullptr;
  if (v.qualifiers) q = {{"bound", v.qualifiers->bound}, {"tol", v.qualifiers->tol}};
  return {{"excluded", v.excluded},
          {"rule", gate_rule_name(v.rule)},
          {"witness", v.witness},
          {"qualifiers", q},
          {"tool_version", v.tool_version}};
}

GateVerdict verdict_from_json(const nlohmann::json& j) {
  auto need = [&](const char* key) -> const json& {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::InvalidArgument, std::string("verdict lacks '") + key + "'");
    return j.at(key);
  };
  GateVerdict v;
  try {
    v.excluded = need("excluded").get<bool>();
    v.rule = gate_rule_from_name(need("rule").get<std::string>());
    v.witness = need("witness");
    const json& q = need("qualifiers");
    if (!q.is_null()) v.qualifiers = Qualifiers{q.at("bound").get<std::int64_t>(), q.at("tol").get<double>()};
    v.tool_version = need("tool_version").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed verdict: ") + e.what());
  }
  return v;
}

std::string report_emit(const GateVerdict& v, ReportFormat format) {
  if (format == ReportFormat::Json) return verdict_to_json(v).dump(2) + "\n";

  std::ostringstream out;
  const json& w = v.witness;
  auto component = [&] { return w.contains("component") ? w.at("component").dump() : std::string("?"); };
  out << (v.excluded ? "EXCLUDED" : "INCONCLUSIVE") << " [" << gate_rule_name(v.rule) << "] ";
  switch (v.rule) {
    case GateRule::ShkarinIsolated:
      out << "component " << component() << " is an isolated point of the spectrum; "
          << "a frequently hypercyclic operator has no isolated spectral points.";
      break;
    case GateRule::Cor3:
      out << "component " << component() << " meets the circle in at most two unimodular points.";
      break;
    case GateRule::Cor4:
      out << "every circle angle of component " << component() << " is a rational multiple of pi.";
      break;
    case GateRule::Cor2:
      out << "the circle angles of component " << component()
          << " admit no integer relation with zero coefficient sum.";
      break;
    case GateRule::Cor1:
      out << "for component " << component() << " the shifted angles n*alpha + r with n = "
          << w.at("shift_search").at("n").dump() << ", r = " << w.at("shift_search").at("r").get<std::string>()
          << " admit no integer relation.";
      break;
    case GateRule::Theorem1:
      out << "the circle angles of component " << component() << " admit no integer relation.";
      break;
    case GateRule::Inconclusive:
      out << "no exclusion rule applied; bounded searches cannot certify independence.";
      break;
  }
  if (v.qualifiers) out << " Searches bounded by |c_j| <= " << v.qualifiers->bound << " at tolerance " << v.qualifiers->tol << ".";
  out << "\n" << v.tool_version << "\n";
  return out.str();
}

}  // namespace dynlab
