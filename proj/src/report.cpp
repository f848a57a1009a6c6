#include "logchol/report.hpp"

#include "logchol/errors.hpp"
#include "logchol/spectral.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace logchol {

using nlohmann::json;

void ExperimentReport::add_scalar(std::string name, double value, std::string units,
                                  std::optional<double> tolerance, bool timing) {
  Record r;
  r.name = std::move(name);
  r.kind = RecordKind::Scalar;
  r.value = value;
  r.units = std::move(units);
  r.tolerance = tolerance;
  r.timing = timing;
  results.push_back(std::move(r));
}

void ExperimentReport::add_sequence(std::string name, std::vector<double> values,
                                    std::string units, std::optional<double> tolerance) {
  Record r;
  r.name = std::move(name);
  r.kind = RecordKind::Sequence;
  r.values = std::move(values);
  r.units = std::move(units);
  r.tolerance = tolerance;
  results.push_back(std::move(r));
}

void ExperimentReport::add_flag(std::string name, bool value) {
  add_scalar(std::move(name), value ? 1.0 : 0.0, "flag", 0.0);
}

void ExperimentReport::add_text(std::string name, std::string text) {
  Record r;
  r.name = std::move(name);
  r.kind = RecordKind::Text;
  r.text = std::move(text);
  results.push_back(std::move(r));
}

const Record* ExperimentReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

double ExperimentReport::scalar(const std::string& name) const {
  const Record* r = find(name);
  if (!r || r->kind != RecordKind::Scalar) throw InvalidValue("report has no scalar '" + name + "'");
  return r->value;
}

const std::vector<double>& ExperimentReport::sequence(const std::string& name) const {
  const Record* r = find(name);
  if (!r || r->kind != RecordKind::Sequence) {
    throw InvalidValue("report has no sequence '" + name + "'");
  }
  return r->values;
}

namespace {

const char* kind_name(RecordKind k) {
  switch (k) {
    case RecordKind::Scalar: return "scalar";
    case RecordKind::Sequence: return "sequence";
    case RecordKind::Text: return "text";
  }
  return "?";
}

RecordKind parse_kind(const std::string& s) {
  if (s == "scalar") return RecordKind::Scalar;
  if (s == "sequence") return RecordKind::Sequence;
  if (s == "text") return RecordKind::Text;
  throw ParseError("unknown record kind '" + s + "'");
}

// Non-finite doubles have no JSON representation; they travel as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double parse_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw ParseError("expected a number, got " + j.dump());
}

}  // namespace

json to_json(const ExperimentReport& r) {
  json results = json::array();
  for (const auto& rec : r.results) {
    json e = {{"name", rec.name}, {"kind", kind_name(rec.kind)}};
    switch (rec.kind) {
      case RecordKind::Scalar: e["value"] = number(rec.value); break;
      case RecordKind::Sequence: {
        json vals = json::array();
        for (double v : rec.values) vals.push_back(number(v));
        e["values"] = std::move(vals);
        break;
      }
      case RecordKind::Text: e["text"] = rec.text; break;
    }
    if (rec.kind != RecordKind::Text) {
      e["units"] = rec.units;
      e["tolerance"] = rec.tolerance ? number(*rec.tolerance) : json(nullptr);
    }
    if (rec.timing) e["timing"] = true;
    results.push_back(std::move(e));
  }
  return json{{"schema", kReportSchema},
              {"schema_version", kReportSchemaVersion},
              {"experiment", r.experiment},
              {"metrics", r.metrics},
              {"inputs", {{"description", r.inputs}, {"seed", r.seed}}},
              {"environment", {{"m", r.dimension}, {"repetitions", r.repetitions}}},
              {"parameters", r.parameters},
              {"results", std::move(results)}};
}

ExperimentReport report_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kReportSchema) throw ParseError("not a report");
    const int version = j.at("schema_version").get<int>();
    if (version != kReportSchemaVersion) {
      throw ParseError("unsupported report schema version " + std::to_string(version));
    }
    ExperimentReport r;
    r.experiment = j.at("experiment").get<std::string>();
    r.metrics = j.at("metrics").get<std::vector<std::string>>();
    r.inputs = j.at("inputs").at("description").get<std::string>();
    r.seed = j.at("inputs").at("seed").get<std::uint64_t>();
    r.dimension = j.at("environment").at("m").get<std::size_t>();
    r.repetitions = j.at("environment").at("repetitions").get<std::size_t>();
    r.parameters = j.at("parameters");
    for (const auto& e : j.at("results")) {
      Record rec;
      rec.name = e.at("name").get<std::string>();
      rec.kind = parse_kind(e.at("kind").get<std::string>());
      switch (rec.kind) {
        case RecordKind::Scalar: rec.value = parse_number(e.at("value")); break;
        case RecordKind::Sequence:
          for (const auto& v : e.at("values")) rec.values.push_back(parse_number(v));
          break;
        case RecordKind::Text: rec.text = e.at("text").get<std::string>(); break;
      }
      if (rec.kind != RecordKind::Text) {
        rec.units = e.at("units").get<std::string>();
        if (rec.units.empty()) throw ParseError("record '" + rec.name + "' has no units");
        if (!e.at("tolerance").is_null()) rec.tolerance = parse_number(e.at("tolerance"));
      }
      rec.timing = e.value("timing", false);
      r.results.push_back(std::move(rec));
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

json without_timing(const json& report_json) {
  json out = report_json;
  json kept = json::array();
  for (const auto& e : report_json.at("results")) {
    if (!e.value("timing", false)) kept.push_back(e);
  }
  out["results"] = std::move(kept);
  return out;
}

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "record,index,value,units\n";
  for (const auto& rec : r.results) {
    if (rec.kind == RecordKind::Scalar) {
      out << rec.name << ",0," << rec.value << ',' << rec.units << '\n';
    } else if (rec.kind == RecordKind::Sequence) {
      for (std::size_t i = 0; i < rec.values.size(); ++i) {
        out << rec.name << ',' << i << ',' << rec.values[i] << ',' << rec.units << '\n';
      }
    }
  }
  return out.str();
}

GlyphRecord make_glyph(std::size_t row, std::size_t col, const SymMatrix& s) {
  const SymEig e = sym_eig(s.to_dense());
  const auto m = static_cast<Eigen::Index>(s.dim());
  GlyphRecord g;
  g.row = row;
  g.col = col;
  g.determinant = 1.0;
  g.eigenvalues.resize(static_cast<std::size_t>(m));
  g.eigenvectors.resize(static_cast<std::size_t>(m * m));
  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::Index src = m - 1 - k;  // solver order is ascending
    const double lambda = e.values(src);
    if (!(lambda > 0.0)) throw NotSpd("make_glyph: non-positive eigenvalue");
    g.eigenvalues[static_cast<std::size_t>(k)] = lambda;
    g.determinant *= lambda;
    for (Eigen::Index i = 0; i < m; ++i) {
      g.eigenvectors[static_cast<std::size_t>(i * m + k)] = e.vectors(i, src);
    }
  }
  return g;
}

json to_json(const GlyphRecord& g) {
  return json{{"i", g.row},
              {"j", g.col},
              {"eigenvalues", g.eigenvalues},
              {"eigenvectors", g.eigenvectors},
              {"det", g.determinant}};
}

GlyphRecord glyph_from_json(const json& j) {
  try {
    GlyphRecord g;
    g.row = j.at("i").get<std::size_t>();
    g.col = j.at("j").get<std::size_t>();
    g.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
    g.eigenvectors = j.at("eigenvectors").get<std::vector<double>>();
    g.determinant = j.at("det").get<double>();
    if (g.eigenvectors.size() != g.eigenvalues.size() * g.eigenvalues.size()) {
      throw ParseError("glyph eigenvector matrix has the wrong size");
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed glyph: ") + e.what());
  }
}

}  // namespace logchol
