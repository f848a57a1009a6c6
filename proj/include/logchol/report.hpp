#ifndef LOGCHOL_REPORT_HPP
#define LOGCHOL_REPORT_HPP

// Machine-readable experiment reports and ellipsoid glyph records.

#include "logchol/tri_core.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace logchol {

inline constexpr const char* kReportSchema = "logchol.report";
inline constexpr int kReportSchemaVersion = 1;

enum class RecordKind { Scalar, Sequence, Text };

struct Record {
  std::string name;
  RecordKind kind = RecordKind::Scalar;
  double value = 0.0;
  std::vector<double> values;
  std::string text;
  /// Required for Scalar and Sequence records ("1" for dimensionless).
  std::string units;
  /// Accuracy claim or acceptance threshold attached to the value.
  std::optional<double> tolerance;
  /// Wall-clock derived; excluded from determinism comparisons.
  bool timing = false;

  friend bool operator==(const Record&, const Record&) = default;
};

struct ExperimentReport {
  std::string experiment;
  std::vector<std::string> metrics;
  /// Description of the inputs (fixture name, sampling law, ...).
  std::string inputs;
  std::uint64_t seed = 0;
  std::size_t dimension = 0;
  std::size_t repetitions = 0;
  /// Free-form command parameters.
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<Record> results;

  void add_scalar(std::string name, double value, std::string units,
                  std::optional<double> tolerance = std::nullopt, bool timing = false);
  void add_sequence(std::string name, std::vector<double> values, std::string units,
                    std::optional<double> tolerance = std::nullopt);
  void add_flag(std::string name, bool value);
  void add_text(std::string name, std::string text);

  /// nullptr if absent.
  const Record* find(const std::string& name) const;
  /// Throws InvalidValue if absent or not a scalar.
  double scalar(const std::string& name) const;
  const std::vector<double>& sequence(const std::string& name) const;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

nlohmann::json to_json(const ExperimentReport& r);
/// Throws ParseError on a schema mismatch or a malformed document.
ExperimentReport report_from_json(const nlohmann::json& j);
/// The JSON document with all timing records removed.
nlohmann::json without_timing(const nlohmann::json& report_json);

/// One row per scalar and per sequence element: record,index,value,units.
std::string to_csv(const ExperimentReport& r);

/// An SPD matrix drawn as an ellipsoid at a grid position.
struct GlyphRecord {
  std::size_t row = 0;
  std::size_t col = 0;
  std::vector<double> eigenvalues;   // descending, all positive
  std::vector<double> eigenvectors;  // m x m row-major, column k pairs with eigenvalues[k]
  double determinant = 0.0;
};

/// Throws NotSpd if an eigenvalue is not positive.
GlyphRecord make_glyph(std::size_t row, std::size_t col, const SymMatrix& s);
nlohmann::json to_json(const GlyphRecord& g);
GlyphRecord glyph_from_json(const nlohmann::json& j);

}  // namespace logchol

#endif  // LOGCHOL_REPORT_HPP
