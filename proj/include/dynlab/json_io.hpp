#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "dynlab/density.hpp"
#include "dynlab/exp_polynomial.hpp"
#include "dynlab/gate.hpp"
#include "dynlab/geometry.hpp"
#include "dynlab/rational_borel.hpp"
#include "dynlab/resolvent.hpp"

// Versioned JSON documents. Complex numbers are [re, im]; a bare number is
// accepted as a real. Malformed input raises Error(InvalidArgument) or, for
// angle text, ParseError.
namespace dynlab::io {

using nlohmann::json;

inline constexpr const char* kSpectrumSchema = "dynlab.spectrum/1";
inline constexpr const char* kBorelSchema = "dynlab.borel/1";
inline constexpr const char* kExpPolySchema = "dynlab.exppoly/1";
inline constexpr const char* kMatrixSchema = "dynlab.matrix/1";
inline constexpr const char* kRegionsSchema = "dynlab.regions/1";
inline constexpr const char* kSequenceSchema = "dynlab.sequence/1";

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

SpectrumDescription spectrum_from_json(const json& j);
json spectrum_to_json(const SpectrumDescription& desc);

RationalBorel borel_from_json(const json& j);
json borel_to_json(const RationalBorel& b);

ExpPolynomial exppoly_from_json(const json& j);
json exppoly_to_json(const ExpPolynomial& f);

CMatrix matrix_from_json(const json& j);
json matrix_to_json(const CMatrix& m);

std::vector<Region> regions_from_json(const json& j);

/// {"elements": [...]} or {"naturals": horizon}.
std::vector<std::int64_t> sequence_from_json(const json& j);

json read_file(const std::string& path);

}  // namespace dynlab::io
