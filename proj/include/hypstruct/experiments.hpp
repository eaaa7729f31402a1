#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "hypstruct/actions.hpp"
#include "hypstruct/cert.hpp"

namespace hyp {

// key=value configuration, one pair per line, '#' comments. The experiment
// name lives under the key "experiment".
using Config = std::map<std::string, std::string>;

Config parse_config(const std::string& text);

std::vector<std::string> experiment_names();

// Runs a named experiment and returns the full output envelope (payload plus
// wall time). Unknown experiments and unknown config keys are rejected.
json run_experiment(const std::string& name, const Config& cfg);

// Optional plot of an envelope produced by run_experiment.
std::optional<SeriesPlot> experiment_plot(const json& envelope);

// Shared CLI helpers.
std::vector<int> parse_seed_list(const std::string& text);  // "12,13"
std::unique_ptr<ActionModel> make_model(const std::string& name);
GroupElement parse_model_element(const std::string& model, const std::string& text);

}  // namespace hyp
