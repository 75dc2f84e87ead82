#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "grashof/expansion.hpp"
#include "grashof/order.hpp"
#include "grashof/spectral.hpp"

namespace grashof {

namespace fs = std::filesystem;
using json = nlohmann::json;

class MissingInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 17 significant digits, enough to round-trip any double.
std::string format_double(double x);

// Writes to a temporary sibling and renames it over `path`.
void write_text_atomic(const fs::path& path, const std::string& content);
void write_json_atomic(const fs::path& path, const json& j);
json read_json(const fs::path& path);

json field_to_json(const SpectralField& f);
SpectralField field_from_json(const json& j, const std::string& origin = "field");
void write_field(const fs::path& path, const SpectralField& f);
SpectralField read_field(const fs::path& path);

struct ManifestEntry {
  int n = 0;
  double alpha = 0.0;
  std::string field;  // path relative to the manifest
  double residual_H = 0.0;
  double bound_check = 0.0;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::optional<std::string> forcing;  // limit forcing, relative path
  std::vector<std::string> notes;
  fs::path base;                       // directory holding the manifest

  fs::path resolve(const std::string& rel) const { return base / rel; }
};

void write_manifest(const fs::path& path, const Manifest& m);
Manifest read_manifest(const fs::path& path);
SequenceData load_sequence(const Manifest& m);

// Field payloads go to `<stem>_fields/` next to the expansion file.
void write_expansion(const fs::path& path, const ExpansionResult& e);
ExpansionResult read_expansion(const fs::path& path);

json classification_to_json(const ClassificationReport& r);
void write_classification(const fs::path& path, const ClassificationReport& r);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render() const;
};

}  // namespace grashof
