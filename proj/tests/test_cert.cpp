#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "hypstruct/cert.hpp"
#include "hypstruct/experiments.hpp"

using namespace hyp;

TEST_CASE("real_str round-trips doubles") {
  for (double x : {0.0, 1.0, 0.1, -0.25, 1e300, -1e-300, 2.718281828459045,
                   0.4949329230945269, 123456789.123456789}) {
    std::string s = real_str(x);
    CHECK(std::stod(s) == x);
  }
}

TEST_CASE("envelopes validate against the builtin schema") {
  json env = make_envelope("demo", 7, json{{"key", "value"}}, json{{"n", 3}}, 1.25);
  CHECK(env["schema"] == "hypstruct-envelope/1");
  CHECK(env["experiment"] == "demo");
  CHECK(env["seed"] == 7);
  CHECK(env["version"] == kToolVersion);
  CHECK(schema_validate(envelope_schema(), env).empty());

  json missing = env;
  missing.erase("payload");
  CHECK_FALSE(schema_validate(envelope_schema(), missing).empty());

  json wrong_type = env;
  wrong_type["seed"] = "seven";
  CHECK_FALSE(schema_validate(envelope_schema(), wrong_type).empty());

  json extra = env;
  extra["surprise"] = 1;
  CHECK_FALSE(schema_validate(envelope_schema(), extra).empty());

  json bad_schema_tag = env;
  bad_schema_tag["schema"] = "hypstruct-envelope/2";
  CHECK_FALSE(schema_validate(envelope_schema(), bad_schema_tag).empty());
}

TEST_CASE("schema checker features") {
  json schema = json::parse(R"({
    "type": "object",
    "required": ["kind", "count"],
    "properties": {
      "kind": {"type": "string", "enum": ["x", "y"]},
      "count": {"type": "integer", "minimum": 0},
      "items": {"type": "array", "items": {"type": "number"}},
      "tag": {"type": "string", "pattern": "^v[0-9]+$"}
    },
    "additionalProperties": false
  })");
  CHECK(schema_validate(schema, json{{"kind", "x"}, {"count", 2}}).empty());
  CHECK_FALSE(schema_validate(schema, json{{"kind", "z"}, {"count", 2}}).empty());
  CHECK_FALSE(schema_validate(schema, json{{"kind", "x"}, {"count", -1}}).empty());
  CHECK_FALSE(schema_validate(schema, json{{"kind", "x"}}).empty());
  CHECK_FALSE(
      schema_validate(schema, json{{"kind", "x"}, {"count", 2}, {"bogus", 1}}).empty());
  auto issues = schema_validate(
      schema, json{{"kind", "x"}, {"count", 2}, {"items", json::array({1, "two"})}});
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].find("items") != std::string::npos);
  CHECK_FALSE(
      schema_validate(schema, json{{"kind", "x"}, {"count", 2}, {"tag", "1.2"}}).empty());
  CHECK(
      schema_validate(schema, json{{"kind", "x"}, {"count", 2}, {"tag", "v12"}}).empty());
}

TEST_CASE("shipped schema file matches the builtin") {
  std::filesystem::path here(__FILE__);
  auto schema_path = here.parent_path().parent_path() / "docs" / "envelope.schema.json";
  json shipped = parse_json(read_text_file(schema_path.string()));
  CHECK(shipped == envelope_schema());
}

TEST_CASE("config parsing") {
  Config cfg = parse_config("# comment\nexperiment=phi-xi\n\nxi = 1.4142\n");
  CHECK(cfg.at("experiment") == "phi-xi");
  CHECK(cfg.at("xi") == "1.4142");
  CHECK(cfg.size() == 2);
  CHECK_THROWS_AS(parse_config("novalue\n"), Error);
  CHECK_THROWS_AS(parse_config("a=1\na=2\n"), Error);
}

TEST_CASE("experiments reject unknown names and keys") {
  CHECK_THROWS_AS(run_experiment("no-such-experiment", {}), Error);
  CHECK_THROWS_AS(run_experiment("lineal-antichain", {{"bogus_key", "1"}}), Error);
  CHECK_FALSE(experiment_names().empty());
}

TEST_CASE("experiment envelopes are deterministic modulo wall time") {
  Config cfg{{"i_max", "20"}};
  json a = run_experiment("lineal-antichain", cfg);
  json b = run_experiment("lineal-antichain", cfg);
  CHECK(schema_validate(envelope_schema(), a).empty());
  a.erase("wall_time_ms");
  b.erase("wall_time_ms");
  CHECK(dump_json(a) == dump_json(b));
}

TEST_CASE("csv matrices") {
  PointCloud P = read_csv_matrix("# tree\n0,1,2\n1,0,1\n2,1,0\n");
  CHECK(P.n == 3);
  CHECK(P.at(0, 2) == 2.0);

  PointCloud Q = read_csv_matrix("0, 1.5\r\n1.5, 0\r\n");
  CHECK(Q.at(1, 0) == 1.5);

  CHECK_THROWS_AS(read_csv_matrix("0,1\n1,0,2\n"), Error);          // ragged
  CHECK_THROWS_AS(read_csv_matrix("0,1\n"), Error);                 // not square
  CHECK_THROWS_AS(read_csv_matrix("0,x\nx,0\n"), Error);            // junk cell
  CHECK_THROWS_AS(read_csv_matrix(""), Error);                      // empty
  CHECK_THROWS_AS(read_csv_matrix("0,1.5\n1.5,0\n", true), Error);  // exact wants integers
  CHECK_NOTHROW(read_csv_matrix("0,5\n5,0\n", true));
}

TEST_CASE("svg rendering") {
  SeriesPlot plot;
  plot.title = "growth";
  plot.x_label = "n";
  plot.y_label = "value";
  plot.series.push_back({"linear", {0, 1, 2, 3}, {0, 1, 2, 3}});
  plot.series.push_back({"const", {0, 1, 2, 3}, {1, 1, 1, 1}});
  std::string svg = render_svg(plot);
  CHECK(svg == render_svg(plot));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("growth") != std::string::npos);
  CHECK(svg.find("linear") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  SeriesPlot empty;
  CHECK_THROWS_AS(render_svg(empty), Error);
  SeriesPlot ragged = plot;
  ragged.series[0].ys.pop_back();
  CHECK_THROWS_AS(render_svg(ragged), Error);

  // Labels are XML-escaped.
  SeriesPlot esc = plot;
  esc.title = "a<b&c";
  std::string esvg = render_svg(esc);
  CHECK(esvg.find("a<b&c") == std::string::npos);
  CHECK(esvg.find("a&lt;b&amp;c") != std::string::npos);
}

TEST_CASE("json io helpers") {
  CHECK_THROWS_AS(parse_json("{ not json"), Error);
  CHECK(parse_json("{\"a\": 1}")["a"] == 1);
  std::string dumped = dump_json(json{{"a", 1}});
  CHECK(dumped.back() == '\n');
  CHECK_THROWS_AS(read_text_file("/nonexistent/path/file.json"), Error);

  std::string tmp = "/tmp/hypstruct_cert_test.json";
  write_text_file(tmp, dumped);
  CHECK(read_text_file(tmp) == dumped);
  std::remove(tmp.c_str());
}
