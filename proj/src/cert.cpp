#include "hypstruct/cert.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

namespace hyp {

std::string real_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json make_envelope(const std::string& experiment, std::uint64_t seed, const json& config,
                   const json& payload, double wall_time_ms) {
  json doc;
  doc["schema"] = kEnvelopeSchema;
  doc["experiment"] = experiment;
  doc["version"] = kToolVersion;
  doc["seed"] = seed;
  doc["config"] = config;
  doc["payload"] = payload;
  doc["wall_time_ms"] = wall_time_ms;
  return doc;
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::NotFound, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::MalformedInput, "cannot write " + path);
  out << content;
  require(out.good(), ErrorKind::Internal, "short write to " + path);
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  require(!doc.is_discarded(), ErrorKind::MalformedInput, "invalid JSON");
  return doc;
}

namespace {

bool type_matches(const std::string& t, const json& node) {
  if (t == "object") return node.is_object();
  if (t == "array") return node.is_array();
  if (t == "string") return node.is_string();
  if (t == "integer") return node.is_number_integer() || node.is_number_unsigned();
  if (t == "number") return node.is_number();
  if (t == "boolean") return node.is_boolean();
  if (t == "null") return node.is_null();
  return false;
}

void validate_node(const json& schema, const json& node, const std::string& where,
                   std::vector<std::string>& issues) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), node);
    } else {
      for (const json& alt : t) ok = ok || type_matches(alt.get<std::string>(), node);
    }
    if (!ok) {
      issues.push_back(where + ": expected type " + t.dump());
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const json& alt : schema["enum"]) found = found || alt == node;
    if (!found) issues.push_back(where + ": value not in enum");
  }
  if (schema.contains("pattern") && node.is_string()) {
    std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_search(node.get<std::string>(), re))
      issues.push_back(where + ": string does not match pattern");
  }
  if (schema.contains("minimum") && node.is_number()) {
    if (node.get<double>() < schema["minimum"].get<double>())
      issues.push_back(where + ": below minimum");
  }
  if (node.is_object()) {
    if (schema.contains("required"))
      for (const json& key : schema["required"])
        if (!node.contains(key.get<std::string>()))
          issues.push_back(where + ": missing required key " + key.get<std::string>());
    const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (props && props->contains(it.key())) {
        validate_node((*props)[it.key()], it.value(), where + "/" + it.key(), issues);
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        issues.push_back(where + ": unexpected key " + it.key());
      }
    }
  }
  if (node.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < node.size(); ++i)
      validate_node(schema["items"], node[i], where + "/" + std::to_string(i), issues);
  }
}

}  // namespace

std::vector<std::string> schema_validate(const json& schema, const json& doc) {
  std::vector<std::string> issues;
  validate_node(schema, doc, "$", issues);
  return issues;
}

const json& envelope_schema() {
  static const json schema = {
      {"type", "object"},
      {"required",
       json::array({"schema", "experiment", "version", "seed", "config", "payload",
                    "wall_time_ms"})},
      {"properties",
       {{"schema", {{"type", "string"}, {"pattern", "^hypstruct-envelope/1$"}}},
        {"experiment", {{"type", "string"}}},
        {"version", {{"type", "string"}}},
        {"seed", {{"type", "integer"}, {"minimum", 0}}},
        {"config", {{"type", "object"}}},
        {"payload", {{"type", "object"}}},
        {"wall_time_ms", {{"type", "number"}, {"minimum", 0}}}}},
      {"additionalProperties", false}};
  return schema;
}

PointCloud read_csv_matrix(const std::string& text, bool exact) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        double v = std::stod(cell, &used);
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        require(used == cell.size(), ErrorKind::MalformedInput, "trailing junk in CSV cell");
        row.push_back(v);
      } catch (const std::invalid_argument&) {
        fail(ErrorKind::MalformedInput, "non-numeric CSV cell: " + cell);
      } catch (const std::out_of_range&) {
        fail(ErrorKind::MalformedInput, "CSV cell out of range: " + cell);
      }
    }
    require(!row.empty(), ErrorKind::MalformedInput, "empty CSV row");
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), ErrorKind::MalformedInput, "CSV matrix is empty");
  std::size_t n = rows.size();
  std::vector<double> d;
  d.reserve(n * n);
  for (const auto& row : rows) {
    require(row.size() == n, ErrorKind::MalformedInput, "CSV matrix is not square");
    d.insert(d.end(), row.begin(), row.end());
  }
  return PointCloud::from_matrix(n, std::move(d), exact);
}

namespace {

std::string svg_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const SeriesPlot& plot) {
  require(!plot.series.empty(), ErrorKind::InvalidParameter, "plot needs at least one series");
  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  bool first = true;
  for (const auto& s : plot.series) {
    require(s.xs.size() == s.ys.size() && !s.xs.empty(), ErrorKind::InvalidParameter,
            "series must be non-empty with matching coordinate counts");
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (first) {
        x_lo = x_hi = s.xs[i];
        y_lo = y_hi = s.ys[i];
        first = false;
      }
      x_lo = std::min(x_lo, s.xs[i]);
      x_hi = std::max(x_hi, s.xs[i]);
      y_lo = std::min(y_lo, s.ys[i]);
      y_hi = std::max(y_hi, s.ys[i]);
    }
  }
  if (x_hi == x_lo) x_hi = x_lo + 1;
  if (y_hi == y_lo) y_hi = y_lo + 1;

  const double W = 640, H = 400, ml = 60, mr = 20, mt = 40, mb = 50;
  auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (W - ml - mr); };
  auto py = [&](double y) { return H - mb - (y - y_lo) / (y_hi - y_lo) * (H - mt - mb); };
  static const char* colors[] = {"#1f6fb2", "#c23b22", "#2d8a4e", "#8a2d7a", "#b28a1f"};

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
         "viewBox=\"0 0 640 400\">\n";
  svg += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"14\">" + xml_escape(plot.title) + "</text>\n";
  svg += "<line x1=\"" + svg_num(ml) + "\" y1=\"" + svg_num(H - mb) + "\" x2=\"" + svg_num(W - mr) +
         "\" y2=\"" + svg_num(H - mb) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + svg_num(ml) + "\" y1=\"" + svg_num(mt) + "\" x2=\"" + svg_num(ml) +
         "\" y2=\"" + svg_num(H - mb) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"320\" y=\"390\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"12\">" + xml_escape(plot.x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"200\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"12\" transform=\"rotate(-90 16 200)\">" + xml_escape(plot.y_label) +
         "</text>\n";
  for (const char* lim : {"lo", "hi"}) {
    bool is_lo = lim[0] == 'l';
    svg += "<text x=\"" + svg_num(is_lo ? px(x_lo) : px(x_hi)) + "\" y=\"" + svg_num(H - mb + 16) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"10\">" +
           real_str(is_lo ? x_lo : x_hi) + "</text>\n";
    svg += "<text x=\"" + svg_num(ml - 6) + "\" y=\"" + svg_num(is_lo ? py(y_lo) : py(y_hi)) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\">" +
           real_str(is_lo ? y_lo : y_hi) + "</text>\n";
  }
  for (std::size_t si = 0; si < plot.series.size(); ++si) {
    const auto& s = plot.series[si];
    const char* color = colors[si % 5];
    std::string pts;
    for (std::size_t i = 0; i < s.xs.size(); ++i)
      pts += svg_num(px(s.xs[i])) + "," + svg_num(py(s.ys[i])) + " ";
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" "
           "points=\"" + pts + "\"/>\n";
    svg += "<text x=\"" + svg_num(W - mr) + "\" y=\"" + svg_num(mt + 14.0 * static_cast<double>(si)) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\" fill=\"" + color +
           "\">" + xml_escape(s.label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace hyp
