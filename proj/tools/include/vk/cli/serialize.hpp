#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "vk/complex.hpp"
#include "vk/group_analysis.hpp"
#include "vk/jordan.hpp"
#include "vk/pushout.hpp"

namespace vk::cli {

using nlohmann::json;

inline constexpr int schema_version = 1;

/// Parses JSON text; ErrorKind::parse errors carry line and column.
json parse_text(std::string_view text);
/// Reads and parses a file; ErrorKind::io when it cannot be read.
json load_json(const std::filesystem::path& path);
void store_json(const std::filesystem::path& path, const json& doc);

/// Wraps a body with the schema name and version.
json document(std::string_view schema, json body);
/// Throws ErrorKind::schema unless `doc` declares `schema` at the current version.
void expect_schema(const json& doc, std::string_view schema);

json to_json(const Letters& w);
json to_json(const Word& w);
json to_json(const GroupPresentation& p);
json to_json(const GroupoidPresentation& g);
json to_json(const GroupoidMorphismData& m);
json to_json(const PushoutInput& in);
json to_json(const CellComplex& x);
json to_json(const AbelianInvariants& a);

/// Schema errors name the offending field path, e.g. `$.relations[2]`.
Letters letters_from_json(const json& j, const std::string& path = "$");
Word word_from_json(const json& j, const std::string& path = "$");
GroupPresentation group_presentation_from_json(const json& j, const std::string& path = "$");
GroupoidPresentation groupoid_from_json(const json& j, const std::string& path = "$");
GroupoidMorphismData morphism_from_json(const json& j, const std::string& path = "$");
/// Also runs the pushout hypothesis checks, so their errors surface at load time.
PushoutInput pushout_input_from_json(const json& j, const std::string& path = "$");

/// A complex given explicitly or as `{"model": name, "n": size}`.
struct ComplexSource {
  CellComplex complex;
  std::optional<Model> model;
  std::size_t size = 0;
};

json to_json(const ComplexSource& s);
ComplexSource complex_from_json(const json& j, const std::string& path = "$");

/// Cell names resolved against a complex.
CellSet cell_set_from_json(const CellComplex& x, const json& j, const std::string& path);
CellId cell_from_json(const CellComplex& x, const json& j, const std::string& path);
json to_json(const CellComplex& x, const CellSet& s);

struct PbpFile {
  ComplexSource source;
  CellSet d;
  CellSet e;
  CellId a = 0;
  CellId b = 0;
};

json to_json(const PbpFile& f);
PbpFile pbp_file_from_json(const json& j, const std::string& path = "$");

struct ArcFile {
  ComplexSource source;
  CellSet arc;
  std::optional<CellId> a;
  std::optional<CellId> b;
};

json to_json(const ArcFile& f);
ArcFile arc_file_from_json(const json& j, const std::string& path = "$");

json to_json(const Certificate& c);
json to_json(const PbpReport& r);
json to_json(const PipelineSummary& s, const CellComplex& x);
json to_json(const JordanReport& r, const CellComplex& x);
json to_json(const BisectionResult& r, const CellComplex& x);

}  // namespace vk::cli
