#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "imwn/capacity.hpp"
#include "imwn/layout.hpp"
#include "imwn/radio.hpp"
#include "imwn/schedule.hpp"

namespace imwn {

/// Everything a sweep needs. Defaults are the study's reference parameters:
/// 6 nodes per row, 100 m hops, rows 300 m apart, 100 mW at 2 GHz, eta = 4,
/// 4 dB noise figure, 300 K, 1 MHz, Z and hop counts 2..5, one and two streams.
struct ExperimentSpec {
  LayoutConfig layout;  // num_streams is ignored; see stream_counts
  RadioConfig radio;
  std::vector<Mode> modes{Mode::TR, Mode::NC};
  std::vector<int> z_values{2, 3, 4, 5};
  std::vector<int> hop_counts{2, 3, 4, 5};
  std::vector<int> stream_counts{1, 2};
  StreamPhase phase = StreamPhase::Same;
  std::string output_path;

  // Throws ConfigError.
  void validate() const;
};

// Applies one `key = value` setting. Unknown keys and bad values throw ConfigError.
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);

// Flat key/value text: one `key = value` per line, `#` starts a comment.
ExperimentSpec parse_config(std::istream& in, ExperimentSpec base = {});
ExperimentSpec load_config(const std::filesystem::path& path, ExperimentSpec base = {});

// Round-trippable dump with a unit note per key.
std::string format_config(const ExperimentSpec& spec);

}  // namespace imwn
