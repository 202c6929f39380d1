#include "rigidity_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "rigidity/chplane/geodesic.hpp"
#include "rigidity/flatsurf/cylinders.hpp"
#include "rigidity/flatsurf/foliation.hpp"
#include "rigidity/flatsurf/io.hpp"
#include "rigidity/flatsurf/saddle_connections.hpp"
#include "rigidity/format.hpp"
#include "rigidity/symdom/io.hpp"
#include "rigidity/symdom/monodromy.hpp"
#include "rigidity/symdom/smoothness.hpp"

namespace rigidity::cli {

namespace {

using Json = nlohmann::ordered_json;

Json pair(std::complex<double> z) { return Json::array({round15(z.real()), round15(z.imag())}); }

bool write_file(const std::filesystem::path& path, const std::string& text, std::ostream& err) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write " << path.string() << "\n";
    return false;
  }
  return true;
}

int emit(const Json& report, const std::optional<std::filesystem::path>& path, std::ostream& out,
         std::ostream& err) {
  const std::string text = report.dump(2) + "\n";
  out << text;
  if (path && !write_file(*path, text, err)) return kInputError;
  return kOk;
}

}  // namespace

int cmd_intersection(const IntersectionConfig& config, std::ostream& out, std::ostream& err) {
  if (config.samples < 8) {
    err << "error: --samples must be at least 8\n";
    return kInputError;
  }
  if (!(config.tolerance > 0.0)) {
    err << "error: --tolerance must be positive\n";
    return kInputError;
  }
  try {
    const auto origami = flatsurf::read_origami(config.origami);
    const auto decomposition = flatsurf::cylinder_decomposition(origami, {1, 0});
    const auto g = flatsurf::core_multicurve(decomposition);
    const auto samples = flatsurf::sample_profile(g, config.samples);

    double max = samples.front().value;
    double min = samples.front().value;
    for (const auto& s : samples) {
      max = std::max(max, s.value);
      min = std::min(min, s.value);
    }
    const bool refuted = max - min > config.tolerance;
    double witness = 0.0;
    if (refuted) witness = flatsurf::profile_nonconstancy(g, config.samples, config.tolerance).witness_theta;

    Json report;
    report["squares"] = origami.squares();
    report["genus"] = origami.genus();
    report["cylinders"] = decomposition.cylinders.size();
    report["mass"] = flatsurf::intersection_q_horizontal(origami);
    report["saddle_connections"] = flatsurf::saddle_connections(origami, config.length_bound).size();
    report["samples"] = config.samples;
    report["max"] = round15(max);
    report["min"] = round15(min);
    report["witness_theta"] = round15(witness);
    report["constant_half_refuted"] = refuted;
    if (config.out && !write_file(*config.out, flatsurf::profile_csv(samples), err)) return kInputError;
    return emit(report, std::nullopt, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_horocycle(const HorocycleConfig& config, std::ostream& out, std::ostream& err) {
  if (!(config.tolerance > 0.0)) {
    err << "error: --tolerance must be positive\n";
    return kInputError;
  }
  try {
    const auto result = chplane::step2_verify(config.theta_twist);
    Json report = Json::parse(chplane::step2_json(result));
    const double error = std::abs(result.distance - std::numbers::ln2);
    report["theta_twist"] = round15(config.theta_twist);
    report["log2_error"] = round15(error);
    report["tolerance"] = round15(config.tolerance);
    report["within_tolerance"] = error <= config.tolerance;
    const int code = emit(report, config.out, out, err);
    if (code != kOk) return code;
    if (error > config.tolerance) {
      err << "error: |distance - log 2| = " << format_real(error) << " exceeds tolerance "
          << format_real(config.tolerance) << "\n";
      return kToleranceViolation;
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_smoothness(const SmoothnessConfig& config, std::ostream& out, std::ostream& err) {
  if (!(config.epsilon > 0.0)) {
    err << "error: --epsilon must be positive\n";
    return kInputError;
  }
  try {
    const auto input = symdom::read_symdom_input(config.input);
    const symdom::SmoothnessOptions options{config.degree, config.samples};
    symdom::SmoothnessReport report;
    std::optional<symdom::BivariatePolynomial> polynomial;
    std::string mode;
    if (const auto* path = std::get_if<symdom::PolynomialMatrixPath>(&input)) {
      mode = "path";
      polynomial = symdom::charpoly_path(*path);
      report = symdom::smoothness_report(*path, config.epsilon, options);
    } else {
      mode = "polynomial";
      polynomial = std::get<symdom::BivariatePolynomial>(input);
      report = symdom::smoothness_report(*polynomial, config.epsilon, options);
    }
    const double radius = config.radius.value_or(symdom::isolating_radius(*polynomial));
    const int monodromy = symdom::monodromy_branch_index(*polynomial, radius);
    const bool agree = monodromy == report.branch.K;

    Json j;
    j["mode"] = mode;
    j["characteristic_polynomial"] = polynomial->to_string();
    j["K"] = report.K;
    j["puiseux_K"] = report.branch.K;
    j["monodromy_K"] = monodromy;
    j["agreement"] = agree;
    j["base_value"] = pair(report.branch.base_value);
    j["leading_exponent"] = report.branch.leading_exponent.str();
    j["leading_coefficient"] = pair(report.branch.leading_coefficient);
    j["exact"] = report.branch.exact;
    j["epsilon"] = round15(config.epsilon);
    j["monodromy_radius"] = round15(radius);
    j["degree"] = report.degree;
    j["samples"] = report.samples;
    j["fit_residual"] = round15(report.fit_residual);
    j["naive_residual"] = round15(report.naive_residual);
    const int code = emit(j, config.out, out, err);
    if (code != kOk) return code;
    if (!agree) {
      err << "error: Newton-Puiseux K = " << report.branch.K << " but monodromy K = " << monodromy
          << "\n";
      return kOracleDisagreement;
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for Teichmuller rigidity computations"};
  app.require_subcommand(1);

  IntersectionConfig ic;
  auto* intersection = app.add_subcommand("intersection", "theta-profile of i(F(e^{i theta} q), G)");
  intersection->add_option("origami", ic.origami, "origami JSON file")->required();
  intersection->add_option("--samples", ic.samples, "theta grid size (>= 8)");
  intersection->add_option("--length-bound", ic.length_bound, "saddle connection length bound");
  intersection->add_option("--tolerance", ic.tolerance, "constancy tolerance");
  intersection->add_option("--out", ic.out, "CSV output path");

  HorocycleConfig hc;
  auto* horocycle = app.add_subcommand("horocycle", "horocycle distance check in CH^2");
  horocycle->add_option("--tolerance", hc.tolerance, "allowed |distance - log 2|");
  horocycle->add_option("--theta-twist", hc.theta_twist, "precompose with diag(e^{-i theta}, 1, 1)");
  horocycle->add_option("--out", hc.out, "JSON output path");

  SmoothnessConfig sc;
  auto* smoothness = app.add_subcommand("smoothness", "branching index of the distance along a path");
  smoothness->add_option("input", sc.input, "path or polynomial JSON file")->required();
  smoothness->add_option("--epsilon", sc.epsilon, "sampling interval [0, epsilon]");
  smoothness->add_option("--degree", sc.degree, "fit degree");
  smoothness->add_option("--samples", sc.samples, "number of samples");
  smoothness->add_option("--radius", sc.radius, "monodromy circle radius");
  smoothness->add_option("--out", sc.out, "JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }
  if (*intersection) return cmd_intersection(ic, out, err);
  if (*horocycle) return cmd_horocycle(hc, out, err);
  return cmd_smoothness(sc, out, err);
}

}  // namespace rigidity::cli
