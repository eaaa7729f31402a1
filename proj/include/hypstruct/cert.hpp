#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hypstruct/errors.hpp"
#include "hypstruct/metric.hpp"

namespace hyp {

using json = nlohmann::ordered_json;

// Shortest round-trippable decimal form of x.
std::string real_str(double x);

inline constexpr const char* kEnvelopeSchema = "hypstruct-envelope/1";
inline constexpr const char* kToolVersion = "1.0.0";

// Common wrapper for experiment output. wall_time_ms sits outside payload so
// payloads stay byte-identical across runs.
json make_envelope(const std::string& experiment, std::uint64_t seed, const json& config,
                   const json& payload, double wall_time_ms);

// Two-space indented dump with a trailing newline.
std::string dump_json(const json& doc);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

json parse_json(const std::string& text);

// Minimal JSON-schema checker: type, enum, pattern, minimum, required,
// properties, additionalProperties (boolean), items. Returns one message per
// violation; empty means valid.
std::vector<std::string> schema_validate(const json& schema, const json& doc);

// The builtin schema for envelopes (docs/envelope.schema.json carries the
// same content for external consumers).
const json& envelope_schema();

// Square matrix from CSV text: one row per line, comma separated, '#' starts
// a comment line.
PointCloud read_csv_matrix(const std::string& text, bool exact = false);

// Deterministic line plot. Axes are scaled to the data range; output is a
// self-contained SVG document.
struct SeriesPlot {
  std::string title, x_label, y_label;
  struct Series {
    std::string label;
    std::vector<double> xs, ys;
  };
  std::vector<Series> series;
};

std::string render_svg(const SeriesPlot& plot);

}  // namespace hyp
