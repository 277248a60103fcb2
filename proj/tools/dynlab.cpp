#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dynlab/density.hpp"
#include "dynlab/error.hpp"
#include "dynlab/exptype.hpp"
#include "dynlab/gate.hpp"
#include "dynlab/json_io.hpp"
#include "dynlab/kronecker.hpp"
#include "dynlab/resolvent.hpp"

using namespace dynlab;
using nlohmann::json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  if (out.empty()) throw Error(Errc::InvalidArgument, "empty list");
  return out;
}

std::vector<Real> angle_list(const std::string& s) {
  std::vector<Real> out;
  for (const auto& item : split(s)) out.push_back(AngleExpr::parse(item).value());
  return out;
}

Complex complex_arg(const std::string& s) {
  const auto parts = angle_list(s);
  if (parts.size() != 2) throw Error(Errc::InvalidArgument, "expected 're,im', got '" + s + "'");
  return {parts[0], parts[1]};
}

// Entries are "re" or "re:im".
CVector coefficient_vector(const std::string& s) {
  const auto items = split(s);
  CVector v(static_cast<Eigen::Index>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto colon = items[i].find(':');
    const Real re = AngleExpr::parse(items[i].substr(0, colon)).value();
    const Real im = colon == std::string::npos ? 0 : AngleExpr::parse(items[i].substr(colon + 1)).value();
    v(static_cast<Eigen::Index>(i)) = Complex{re, im};
  }
  return v;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json real_json(Real x) { return static_cast<double>(x); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynlab: exponential-type functions, Kronecker search, spectral exclusion gate"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string spec_file, format = "json";
  GateConfig cfg;
  auto* gate = app.add_subcommand("gate", "Run the exclusion gate on a spectrum description");
  gate->add_option("--spec", spec_file, "dynlab.spectrum/1 JSON file")->required()->check(CLI::ExistingFile);
  gate->add_option("--bound", cfg.bound, "Coefficient bound for relation searches")->check(CLI::PositiveNumber);
  gate->add_option("--tol", cfg.tol, "Residual tolerance for relation searches")->check(CLI::PositiveNumber);
  gate->add_option("--n-max", cfg.n_max, "Largest shift multiplier")->check(CLI::PositiveNumber);
  gate->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string alpha_text, beta_text, window_text = "0,10000";
  double eps = 0;
  auto* kron = app.add_subcommand("kronecker", "Find t with |e^{i t alpha_j} - e^{i beta_j}| < eps");
  kron->add_option("--alpha", alpha_text, "Frequencies, comma separated expressions")->required();
  kron->add_option("--beta", beta_text, "Target phases, comma separated expressions")->required();
  kron->add_option("--eps", eps, "Chordal tolerance")->required();
  kron->add_option("--window", window_text, "Search window a,b");

  auto* t0 = app.add_subcommand("t0", "Window length guaranteeing every target is hit");
  t0->add_option("--alpha", alpha_text, "Frequencies, comma separated expressions")->required();
  t0->add_option("--eps", eps, "Chordal tolerance")->required();

  std::string borel_file, z_text;
  auto* polya = app.add_subcommand("polya", "Evaluate f(z) from its Borel transform by contour quadrature");
  polya->add_option("--borel", borel_file, "dynlab.borel/1 JSON file")->required()->check(CLI::ExistingFile);
  polya->add_option("--z", z_text, "Point re,im")->required();

  std::string matrix_file, lambda_text, x_text;
  auto* resolvent = app.add_subcommand("resolvent", "Lambda((zI - T)^{-1} x) by series and by direct solve");
  resolvent->add_option("--matrix", matrix_file, "dynlab.matrix/1 JSON file")->required()->check(CLI::ExistingFile);
  resolvent->add_option("--lambda", lambda_text, "Functional coefficients, entries re or re:im")->required();
  resolvent->add_option("--x", x_text, "Vector entries, re or re:im")->required();
  resolvent->add_option("--z", z_text, "Point re,im")->required();

  std::string seq_file;
  double t0_value = 0;
  auto* density = app.add_subcommand("density", "Thin an index sequence and estimate lower densities");
  density->add_option("--seq", seq_file, "dynlab.sequence/1 JSON file")->required()->check(CLI::ExistingFile);
  density->add_option("--t0", t0_value, "Minimum gap")->required()->check(CLI::PositiveNumber);

  std::string regions_file;
  auto* decompose = app.add_subcommand("decompose", "Split a Borel transform by pole regions");
  decompose->add_option("--borel", borel_file, "dynlab.borel/1 JSON file")->required()->check(CLI::ExistingFile);
  decompose->add_option("--regions", regions_file, "dynlab.regions/1 JSON file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*gate) {
      const auto verdict = evaluate_gate(io::spectrum_from_json(io::read_file(spec_file)), cfg);
      std::cout << report_emit(verdict, format == "json" ? ReportFormat::Json : ReportFormat::Text);
    } else if (*kron) {
      const auto alpha = angle_list(alpha_text);
      const auto beta = angle_list(beta_text);
      const auto window = angle_list(window_text);
      if (window.size() != 2) throw Error(Errc::InvalidArgument, "--window expects a,b");
      const auto t = kronecker_time(alpha, beta, eps, window[0], window[1]);
      json out = {{"found", t.has_value()}, {"step", real_json(kronecker_step(alpha, eps))}};
      out["t"] = t ? real_json(*t) : json(nullptr);
      out["sup_chord"] = t ? real_json(sup_chord(alpha, beta, *t)) : json(nullptr);
      print(out);
    } else if (*t0) {
      const auto w = uniform_window_t0(angle_list(alpha_text), eps);
      print({{"t0", real_json(w.t0)}, {"beta_step", real_json(w.beta_step)}, {"cells", w.cells}});
    } else if (*polya) {
      const auto b = io::borel_from_json(io::read_file(borel_file));
      const Complex z = complex_arg(z_text);
      print({{"z", io::complex_to_json(z)},
             {"quadrature", io::complex_to_json(polya_eval(b, z))},
             {"exact", io::complex_to_json(inverse_borel(b)(z))}});
    } else if (*resolvent) {
      const MatrixOperator op(io::matrix_from_json(io::read_file(matrix_file)));
      const DualFunctional lambda(coefficient_vector(lambda_text));
      const CVector x = coefficient_vector(x_text);
      if (x.size() != op.dim() || lambda.coefficients().size() != op.dim())
        throw Error(Errc::InvalidArgument, "--lambda and --x must match the matrix dimension");
      const Complex z = complex_arg(z_text);
      print({{"spectral_radius", real_json(op.spectral_radius())},
             {"series", io::complex_to_json(resolvent_series(op, lambda, x, z))},
             {"direct", io::complex_to_json(resolvent_direct(op, lambda, x, z))}});
    } else if (*density) {
      const auto elements = io::sequence_from_json(io::read_file(seq_file));
      if (elements.empty()) throw Error(Errc::EmptySet, "sequence has no elements");
      const std::int64_t horizon = elements.back();
      const IndexSequence seq(elements);
      const auto thinned = thin_sequence(seq, t0_value, horizon).up_to(horizon);
      std::vector<Real> radii;
      for (int k = 1; k <= 100; ++k) radii.push_back(static_cast<Real>(horizon) * k / 100);
      print({{"horizon", horizon},
             {"count", elements.size()},
             {"thinned_count", thinned.size()},
             {"thinned", thinned},
             {"lower_density", real_json(lower_density_estimate(seq, radii))},
             {"thinned_lower_density", real_json(lower_density_estimate(IndexSequence(thinned), radii))}});
    } else if (*decompose) {
      const auto parts =
          decompose_by_singularities(io::borel_from_json(io::read_file(borel_file)), io::regions_from_json(io::read_file(regions_file)));
      json out = json::array();
      for (const auto& p : parts) out.push_back(io::borel_to_json(p));
      print({{"parts", out}});
    }
  } catch (const Error& e) {
    std::cerr << "dynlab: " << e.what() << "\n";
    return is_contract_violation(e.code()) ? kExitInternal : kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "dynlab: malformed JSON: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "dynlab: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
