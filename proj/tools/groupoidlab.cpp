#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "groupoidlab/io.hpp"
#include "groupoidlab/spectra.hpp"
#include "groupoidlab/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

gl::GroupoidPtr require_groupoid(gl::LoadedArtifact const& art) {
  if (!art.groupoid) {
    gl::fail("ParseError", "a groupoid (or groupoid-bearing) artifact is required");
  }
  return art.groupoid;
}

int cmd_validate(std::string const& path) {
  auto art = gl::load_artifact(path);
  std::cout << "ok: " << art.kind << " artifact from " << path << "\n";
  return kExitPass;
}

int cmd_info(std::string const& path) {
  auto art = gl::load_artifact(path);
  auto g = require_groupoid(art);
  gl::Json body;
  body["elements"] = g->size();
  body["units"] = g->units().size();
  body["transitive"] = g->is_transitive();
  body["principal"] = g->is_principal();
  body["group_bundle"] = g->is_group_bundle();
  auto orbits = g->orbits();
  body["orbits"] = gl::Json::array();
  for (auto const& block : orbits.blocks) {
    gl::Json orbit;
    orbit["units"] = gl::Json::array();
    for (int u : block) {
      orbit["units"].push_back(g->label(u));
    }
    orbit["isotropy_order"] = g->isotropy(block.front())->size();
    body["orbits"].push_back(std::move(orbit));
  }
  std::cout << body.dump(2) << "\n";
  return kExitPass;
}

int cmd_haar(std::string const& mode, std::string const& path,
             std::string const& weights_path) {
  if (mode == "check") {
    auto art = gl::load_artifact(path);
    if (!art.haar) {
      gl::fail("ParseError", "expected a haar artifact");
    }
    auto report = gl::check_haar(*art.haar);
    if (!report.ok) {
      for (auto const& v : report.violations) {
        std::cerr << v << "\n";
      }
      return kExitViolation;
    }
    std::cout << "ok\n";
    return kExitPass;
  }
  auto g = require_groupoid(gl::load_artifact(path));
  if (mode == "canonical") {
    std::cout << gl::haar_to_json(gl::counting_haar(g)).dump(2) << "\n";
    return kExitPass;
  }
  if (mode == "from-weights") {
    auto weights = gl::load_json_file(weights_path);
    std::map<int, gl::Rational> c;
    for (auto const& [label, text] : weights.items()) {
      c[g->index(label)] = gl::parse_rational(text.get<std::string>());
    }
    std::cout << gl::haar_to_json(gl::haar_from_unit_weights(g, c)).dump(2)
              << "\n";
    return kExitPass;
  }
  gl::fail("ParseError", "haar mode must be check, canonical or from-weights");
}

int cmd_norm(std::string const& groupoid_path, std::string const& haar_path,
             std::string const& element_path, std::string const& kind,
             std::string const& morphism_path, std::string const& measure_path) {
  auto g = require_groupoid(gl::load_artifact(groupoid_path));
  auto haar_art = gl::load_artifact(haar_path);
  auto element_art = gl::load_artifact(element_path);
  if (!haar_art.haar || !element_art.element) {
    gl::fail("ParseError", "expected a haar artifact and an element artifact");
  }
  // the three files must describe one consistent algebra (by labels/weights)
  auto consistent = [&](gl::GroupoidPtr const& other) {
    if (other->size() != g->size()) {
      return false;
    }
    for (int x = 0; x < g->size(); ++x) {
      if (!other->has_label(g->label(x))) {
        return false;
      }
    }
    return true;
  };
  if (!consistent(haar_art.haar->groupoid()) ||
      !consistent(element_art.element->groupoid())) {
    gl::fail("GroupoidMismatch", "the artifacts describe different groupoids");
  }
  auto const& f = *element_art.element;
  gl::Json out;
  out["element"] = element_path;
  if (kind == "red") {
    out["reduced"] = gl::reduced_norm(f);
  } else if (kind == "I") {
    out["i_norm"] = gl::i_norm(f);
  } else if (kind == "II") {
    auto measure_art = gl::load_artifact(measure_path);
    if (!measure_art.measure) {
      gl::fail("ParseError", "--kind II needs --measure");
    }
    out["ii_norm"] = gl::ii_norm(f.haar(), *measure_art.measure, f);
  } else if (kind == "h") {
    auto morphism_art = gl::load_artifact(morphism_path);
    if (!morphism_art.morphism) {
      gl::fail("ParseError", "--kind h needs --morphism");
    }
    out["h_norm"] = gl::norm_h(*morphism_art.morphism, f);
  } else {
    gl::fail("ParseError", "--kind must be red, I, II or h");
  }
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int cmd_morphism(std::string const& mode, std::string const& path,
                 std::string const& second_path) {
  if (mode == "check") {
    auto art = gl::load_artifact(path);  // construction verifies everything
    if (!art.morphism) {
      gl::fail("ParseError", "expected a morphism artifact");
    }
    std::cout << "ok: morphism with " << art.morphism->delta().values().size()
              << " cocycle entries\n";
    return kExitPass;
  }
  if (mode == "delta") {
    auto art = gl::load_artifact(path);
    if (!art.morphism) {
      gl::fail("ParseError", "expected a morphism artifact");
    }
    auto const& m = *art.morphism;
    gl::Json out = gl::Json::array();
    for (auto const& [key, value] : m.delta().values()) {
      out.push_back(gl::Json::array({m.target()->label(key.first),
                                     m.source()->label(key.second),
                                     gl::format_rational(value)}));
    }
    std::cout << out.dump(2) << "\n";
    return kExitPass;
  }
  if (mode == "compose") {
    auto first = gl::load_artifact(path);
    auto second = gl::load_artifact(second_path);
    if (!first.morphism || !second.morphism) {
      gl::fail("ParseError", "expected two morphism artifacts");
    }
    auto composite = gl::compose_morphisms(*first.morphism, *second.morphism);
    std::cout << gl::morphism_to_json(composite).dump(2) << "\n";
    return kExitPass;
  }
  gl::fail("ParseError", "morphism mode must be check, delta or compose");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for finite groupoids, Haar systems,"
               " morphisms and their convolution algebras"};
  app.require_subcommand(1);

  std::string path;
  std::string second_path;
  std::string mode;
  std::string kind = "red";
  std::string morphism_path;
  std::string measure_path;
  std::string scenario_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  int cases = 100;
  bool random_mode = false;

  auto* validate = app.add_subcommand("validate", "parse and validate a definition file");
  validate->add_option("file", path)->required();

  auto* info = app.add_subcommand("info", "summarize a groupoid");
  info->add_option("file", path)->required();

  auto* haar = app.add_subcommand("haar", "check or build Haar systems");
  haar->add_option("mode", mode)->required()
      ->check(CLI::IsMember({"check", "canonical", "from-weights"}));
  haar->add_option("file", path)->required();
  haar->add_option("weights", second_path);

  auto* norm = app.add_subcommand("norm", "compute norms of an algebra element");
  norm->add_option("groupoid", path)->required();
  norm->add_option("haar", second_path)->required();
  std::string element_path;
  norm->add_option("element", element_path)->required();
  norm->add_option("--kind", kind)->check(CLI::IsMember({"red", "I", "II", "h"}));
  norm->add_option("--morphism", morphism_path);
  norm->add_option("--measure", measure_path);

  auto* morphism = app.add_subcommand("morphism", "morphism calculus");
  morphism->add_option("mode", mode)->required()
      ->check(CLI::IsMember({"check", "delta", "compose"}));
  morphism->add_option("file", path)->required();
  morphism->add_option("second", second_path);

  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--scenario", scenario_path);
  verify->add_flag("--random", random_mode);
  verify->add_option("--seed", seed);
  verify->add_option("--cases", cases);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      return cmd_validate(path);
    }
    if (info->parsed()) {
      return cmd_info(path);
    }
    if (haar->parsed()) {
      return cmd_haar(mode, path, second_path);
    }
    if (norm->parsed()) {
      return cmd_norm(path, second_path, element_path, kind, morphism_path,
                      measure_path);
    }
    if (morphism->parsed()) {
      return cmd_morphism(mode, path, second_path);
    }
    if (verify->parsed()) {
      gl::VerificationReport report;
      if (!scenario_path.empty()) {
        auto body = gl::load_json_file(scenario_path);
        report = gl::run_scenario(
            body, std::filesystem::path(scenario_path).parent_path());
      } else if (random_mode) {
        report = gl::run_random_suite(seed, cases);
      } else {
        report = gl::run_builtin_suite(seed);
      }
      if (format == "text") {
        std::cout << gl::report_to_text(report);
      } else {
        std::cout << gl::report_to_json(report).dump(2) << "\n";
      }
      return report.pass ? kExitPass : kExitViolation;
    }
  } catch (gl::Error const& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInputError;
  } catch (std::exception const& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
