#include "dynlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "dynlab/error.hpp"

namespace dynlab::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidArgument, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Real real_from_json(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return AngleExpr::parse(j.get<std::string>()).value();
  bad(std::string(what) + " must be a number or an expression string");
}

void expect_schema(const json& j, const char* schema) {
  if (!j.is_object()) bad(std::string("expected a ") + schema + " object");
  if (j.contains("schema") && j.at("schema") != schema)
    bad("schema mismatch: expected " + std::string(schema) + ", got " + j.at("schema").dump());
}

std::vector<Complex> complex_list(const json& j) {
  if (!j.is_array()) bad("expected an array of complex numbers");
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

json complex_list_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (Complex z : v) out.push_back(complex_to_json(z));
  return out;
}

ConvexCompact convex_from_json(const json& r, const std::string& kind) {
  if (kind == "point") return ConvexCompact::point(complex_from_json(field(r, "at")));
  if (kind == "disc") {
    const Real radius = real_from_json(field(r, "radius"), "radius");
    if (!(radius >= 0)) bad("disc radius must be nonnegative");
    return ConvexCompact::disc(complex_from_json(field(r, "center")), radius);
  }
  if (kind == "polygon") return ConvexCompact::hull(complex_list(field(r, "vertices")));
  bad("unknown region kind '" + kind + "'");
}

AnnulusSector sector_from_json(const json& r) {
  AnnulusSector s;
  s.r_inner = real_from_json(field(r, "r_inner"), "r_inner");
  s.r_outer = real_from_json(field(r, "r_outer"), "r_outer");
  if (r.contains("theta_lo")) s.theta_lo = real_from_json(r.at("theta_lo"), "theta_lo");
  if (r.contains("theta_hi")) s.theta_hi = real_from_json(r.at("theta_hi"), "theta_hi");
  if (!(0 <= s.r_inner && s.r_inner <= s.r_outer)) bad("annulus_sector needs 0 <= r_inner <= r_outer");
  if (!(s.theta_lo <= s.theta_hi)) bad("annulus_sector needs theta_lo <= theta_hi");
  return s;
}

ComponentRegion component_region_from_json(const json& r) {
  const json& kind = field(r, "kind");
  if (!kind.is_string()) bad("region kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "annulus_sector") return sector_from_json(r);
  return convex_from_json(r, k);
}

json convex_to_json(const ConvexCompact& k) {
  return std::visit(
      [](const auto& s) -> json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ConvexCompact::Point>)
          return {{"kind", "point"}, {"at", complex_to_json(s.at)}};
        else if constexpr (std::is_same_v<S, ConvexCompact::Disc>)
          return {{"kind", "disc"}, {"center", complex_to_json(s.center)}, {"radius", static_cast<double>(s.radius)}};
        else
          return {{"kind", "polygon"}, {"vertices", complex_list_json(s.vertices)}};
      },
      k.shape());
}

json sector_to_json(const AnnulusSector& s) {
  return {{"kind", "annulus_sector"},
          {"r_inner", static_cast<double>(s.r_inner)},
          {"r_outer", static_cast<double>(s.r_outer)},
          {"theta_lo", static_cast<double>(s.theta_lo)},
          {"theta_hi", static_cast<double>(s.theta_hi)}};
}

}  // namespace

json complex_to_json(Complex z) { return json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {static_cast<Real>(j.get<double>()), 0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {static_cast<Real>(j[0].get<double>()), static_cast<Real>(j[1].get<double>())};
  bad("complex numbers are [re, im], got " + j.dump());
}

SpectrumDescription spectrum_from_json(const json& j) {
  expect_schema(j, kSpectrumSchema);
  const json& comps = field(j, "components");
  if (!comps.is_array()) bad("components must be an array");
  SpectrumDescription desc;
  for (const auto& c : comps) {
    SpectrumComponent comp{component_region_from_json(field(c, "region")), false, {}};
    if (c.contains("is_clopen")) {
      if (!c.at("is_clopen").is_boolean()) bad("is_clopen must be a boolean");
      comp.is_clopen = c.at("is_clopen").get<bool>();
    }
    if (c.contains("circle_angles")) {
      const json& angles = c.at("circle_angles");
      if (!angles.is_array()) bad("circle_angles must be an array");
      for (const auto& a : angles) {
        if (!a.is_string()) bad("circle angles are expression strings, got " + a.dump());
        comp.circle_angles.push_back(AngleExpr::parse(a.get<std::string>()));
      }
    }
    desc.components.push_back(std::move(comp));
  }
  return desc;
}

json spectrum_to_json(const SpectrumDescription& desc) {
  json comps = json::array();
  for (const auto& c : desc.components) {
    json angles = json::array();
    for (const auto& a : c.circle_angles) angles.push_back(a.source());
    json region = std::holds_alternative<AnnulusSector>(c.region) ? sector_to_json(std::get<AnnulusSector>(c.region))
                                                                  : convex_to_json(std::get<ConvexCompact>(c.region));
    comps.push_back({{"region", region}, {"is_clopen", c.is_clopen}, {"circle_angles", angles}});
  }
  return {{"schema", kSpectrumSchema}, {"components", comps}};
}

RationalBorel borel_from_json(const json& j) {
  expect_schema(j, kBorelSchema);
  const json& poles = field(j, "poles");
  if (!poles.is_array()) bad("poles must be an array");
  std::vector<BorelPole> out;
  for (const auto& p : poles) out.emplace_back(complex_from_json(field(p, "location")), complex_list(field(p, "principal")));
  return RationalBorel(std::move(out));
}

json borel_to_json(const RationalBorel& b) {
  json poles = json::array();
  for (const auto& p : b.poles())
    poles.push_back({{"location", complex_to_json(p.location())}, {"principal", complex_list_json(p.principal())}});
  return {{"schema", kBorelSchema}, {"poles", poles}};
}

ExpPolynomial exppoly_from_json(const json& j) {
  expect_schema(j, kExpPolySchema);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  std::vector<ExpTerm> out;
  for (const auto& t : terms) out.push_back({complex_from_json(field(t, "frequency")), complex_list(field(t, "coefficients"))});
  return ExpPolynomial(std::move(out));
}

json exppoly_to_json(const ExpPolynomial& f) {
  json terms = json::array();
  for (const auto& t : f.terms())
    terms.push_back({{"frequency", complex_to_json(t.frequency)}, {"coefficients", complex_list_json(t.coefficients)}});
  return {{"schema", kExpPolySchema}, {"terms", terms}};
}

CMatrix matrix_from_json(const json& j) {
  expect_schema(j, kMatrixSchema);
  const json& rows = field(j, "rows");
  if (!rows.is_array() || rows.empty()) bad("rows must be a nonempty array");
  const std::size_t n = rows.size();
  CMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) bad("matrix must be square");
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(rows[r][c]);
  }
  return m;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"schema", kMatrixSchema}, {"rows", rows}};
}

std::vector<Region> regions_from_json(const json& j) {
  expect_schema(j, kRegionsSchema);
  const json& list = field(j, "regions");
  if (!list.is_array()) bad("regions must be an array");
  std::vector<Region> out;
  for (const auto& r : list) {
    const json& kind = field(r, "kind");
    if (!kind.is_string()) bad("region kind must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "plane")
      out.push_back(Region::whole_plane());
    else if (k == "slit_plane")
      out.push_back(Region::slit_plane());
    else if (k == "annulus_sector")
      out.emplace_back(sector_from_json(r));
    else
      out.emplace_back(convex_from_json(r, k));
  }
  return out;
}

std::vector<std::int64_t> sequence_from_json(const json& j) {
  expect_schema(j, kSequenceSchema);
  if (j.contains("naturals")) {
    const json& h = j.at("naturals");
    if (!h.is_number_integer() || h.get<std::int64_t>() < 1) bad("naturals horizon must be a positive integer");
    return IndexSequence::naturals().up_to(h.get<std::int64_t>());
  }
  const json& el = field(j, "elements");
  if (!el.is_array()) bad("elements must be an array");
  std::vector<std::int64_t> out;
  for (const auto& e : el) {
    if (!e.is_number_integer()) bad("sequence elements must be integers");
    out.push_back(e.get<std::int64_t>());
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1]) bad("sequence must be strictly increasing");
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace dynlab::io
