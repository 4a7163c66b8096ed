#include "imwn/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <type_traits>

#include <fmt/core.h>

#include "imwn/errors.hpp"

namespace imwn {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) throw ConfigError(fmt::format("{}: '{}' is not a number", key, value));
  return out;
}

int to_int(std::string_view key, std::string_view value) {
  int out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) throw ConfigError(fmt::format("{}: '{}' is not an integer", key, value));
  return out;
}

template <typename F>
auto to_list(std::string_view value, F&& convert) {
  std::vector<decltype(convert(std::string_view{}))> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const auto item = trim(value.substr(0, comma));
    if (!item.empty()) out.push_back(convert(item));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

template <typename T>
std::string join(const std::vector<T>& items) {
  std::string out;
  for (const auto& v : items) {
    if (!out.empty()) out += ",";
    if constexpr (std::is_same_v<T, Mode>) {
      out += to_string(v);
    } else {
      out += fmt::format("{}", v);
    }
  }
  return out;
}

}  // namespace

void ExperimentSpec::validate() const {
  LayoutConfig probe = layout;
  probe.num_streams = 2;
  probe.validate();
  radio.validate();
  if (modes.empty() || z_values.empty() || hop_counts.empty() || stream_counts.empty()) {
    throw ConfigError("modes, z_values, hop_counts and streams must all be non-empty");
  }
  const int max_hops = *std::max_element(hop_counts.begin(), hop_counts.end());
  for (int h : hop_counts) {
    if (h < 2 || h > layout.nodes_per_stream - 1) {
      throw ConfigError(fmt::format("hop count {} outside [2, {}]", h, layout.nodes_per_stream - 1));
    }
  }
  for (int z : z_values) {
    if (z < 2 || z > max_hops + 1) throw ConfigError(fmt::format("period {} outside [2, {}]", z, max_hops + 1));
  }
  for (int s : stream_counts) {
    if (s != 1 && s != 2) throw ConfigError(fmt::format("stream count {} must be 1 or 2", s));
  }
}

void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view raw) {
  const auto value = trim(raw);
  auto& r = spec.radio;
  if (key == "nodes_per_stream") spec.layout.nodes_per_stream = to_int(key, value);
  else if (key == "hop_length_m") spec.layout.hop_length_m = to_double(key, value);
  else if (key == "row_separation_m") spec.layout.row_separation_m = to_double(key, value);
  else if (key == "tx_power_w") r.tx_power_w = to_double(key, value);
  else if (key == "tx_gain") r.tx_gain = to_double(key, value);
  else if (key == "rx_gain") r.rx_gain = to_double(key, value);
  else if (key == "frequency_hz") r.frequency_hz = to_double(key, value);
  else if (key == "path_loss_exponent") r.path_loss_exponent = to_double(key, value);
  else if (key == "noise_figure") r.noise_figure = to_double(key, value);
  else if (key == "noise_figure_unit") {
    const auto v = lower(value);
    if (v == "db") r.noise_figure_unit = NoiseFigureUnit::Decibel;
    else if (v == "linear") r.noise_figure_unit = NoiseFigureUnit::Linear;
    else throw ConfigError(fmt::format("noise_figure_unit must be dB or linear, got '{}'", value));
  } else if (key == "temperature_k") r.temperature_k = to_double(key, value);
  else if (key == "bandwidth_hz") r.bandwidth_hz = to_double(key, value);
  else if (key == "modes") spec.modes = to_list(value, [](std::string_view s) { return parse_mode(s); });
  else if (key == "z_values") spec.z_values = to_list(value, [&](std::string_view s) { return to_int(key, s); });
  else if (key == "hop_counts") spec.hop_counts = to_list(value, [&](std::string_view s) { return to_int(key, s); });
  else if (key == "streams") spec.stream_counts = to_list(value, [&](std::string_view s) { return to_int(key, s); });
  else if (key == "stream_phase") {
    const auto v = lower(value);
    if (v == "same") spec.phase = StreamPhase::Same;
    else if (v == "opposite") spec.phase = StreamPhase::Opposite;
    else throw ConfigError(fmt::format("stream_phase must be same or opposite, got '{}'", value));
  } else if (key == "output") spec.output_path = std::string(value);
  else throw ConfigError(fmt::format("unknown config key '{}'", key));
}

ExperimentSpec parse_config(std::istream& in, ExperimentSpec base) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no));
    try {
      apply_setting(base, trim(view.substr(0, eq)), view.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  base.validate();
  return base;
}

ExperimentSpec load_config(const std::filesystem::path& path, ExperimentSpec base) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
  return parse_config(in, std::move(base));
}

std::string format_config(const ExperimentSpec& spec) {
  const auto& r = spec.radio;
  std::string out;
  out += fmt::format("nodes_per_stream = {}        # nodes per row\n", spec.layout.nodes_per_stream);
  out += fmt::format("hop_length_m = {}            # metres between adjacent nodes\n", spec.layout.hop_length_m);
  out += fmt::format("row_separation_m = {}        # metres between the two rows\n", spec.layout.row_separation_m);
  out += fmt::format("tx_power_w = {}              # watts\n", r.tx_power_w);
  out += fmt::format("tx_gain = {}                 # linear\n", r.tx_gain);
  out += fmt::format("rx_gain = {}                 # linear\n", r.rx_gain);
  out += fmt::format("frequency_hz = {}            # hertz\n", r.frequency_hz);
  out += fmt::format("path_loss_exponent = {}\n", r.path_loss_exponent);
  out += fmt::format("noise_figure = {}\n", r.noise_figure);
  out += fmt::format("noise_figure_unit = {}       # dB or linear\n",
                     r.noise_figure_unit == NoiseFigureUnit::Decibel ? "dB" : "linear");
  out += fmt::format("temperature_k = {}           # kelvin\n", r.temperature_k);
  out += fmt::format("bandwidth_hz = {}            # hertz\n", r.bandwidth_hz);
  out += fmt::format("modes = {}\n", join(spec.modes));
  out += fmt::format("z_values = {}                # timeslots\n", join(spec.z_values));
  out += fmt::format("hop_counts = {}\n", join(spec.hop_counts));
  out += fmt::format("streams = {}\n", join(spec.stream_counts));
  out += fmt::format("stream_phase = {}            # same or opposite\n",
                     spec.phase == StreamPhase::Same ? "same" : "opposite");
  if (!spec.output_path.empty()) out += fmt::format("output = {}\n", spec.output_path);
  return out;
}

}  // namespace imwn
