#ifndef GROUPOIDLAB_IO_HPP_
#define GROUPOIDLAB_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "groupoidlab/algebra.hpp"
#include "groupoidlab/haar.hpp"
#include "groupoidlab/morphism.hpp"

namespace gl {

using Json = nlohmann::json;

// One parsed definition file. kind is one of groupoid, haar, measure,
// algebra-element, morphism, scenario. Loading runs every module-level
// validation; errors carry code ParseError or the violated axiom's code.
struct LoadedArtifact {
  std::string kind;
  GroupoidPtr groupoid;
  std::optional<HaarSystem> haar;
  std::optional<UnitMeasure> measure;
  std::optional<AlgebraElement> element;
  std::optional<Morphism> morphism;
  Json scenario;  // raw body for kind == scenario
};

Json load_json_file(std::filesystem::path const& path);

// Nested references inside a file ("groupoid": "other.json") resolve
// relative to base_dir.
LoadedArtifact artifact_from_json(Json const& body,
                                  std::filesystem::path const& base_dir);
LoadedArtifact load_artifact(std::filesystem::path const& path);

Json groupoid_to_json(GroupoidPtr const& g);
GroupoidPtr groupoid_from_json(Json const& body);

Json haar_to_json(HaarSystem const& h);
HaarSystem haar_from_json(Json const& body, std::filesystem::path const& base_dir);

Json measure_to_json(UnitMeasure const& mu);
UnitMeasure measure_from_json(Json const& body, std::filesystem::path const& base_dir);

Json element_to_json(AlgebraElement const& f);
AlgebraElement element_from_json(Json const& body, std::filesystem::path const& base_dir);

Json morphism_to_json(Morphism const& m);
Morphism morphism_from_json(Json const& body, std::filesystem::path const& base_dir);

}  // namespace gl
#endif  // GROUPOIDLAB_IO_HPP_
