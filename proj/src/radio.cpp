#include "imwn/radio.hpp"

#include <cmath>

#include <fmt/core.h>

#include "imwn/errors.hpp"

namespace imwn {

void RadioConfig::validate() const {
  if (!(tx_power_w > 0.0)) throw ConfigError(fmt::format("tx_power_w must be positive, got {}", tx_power_w));
  if (!(tx_gain > 0.0) || !(rx_gain > 0.0)) {
    throw ConfigError(fmt::format("antenna gains must be positive, got {} and {}", tx_gain, rx_gain));
  }
  if (!(frequency_hz > 0.0)) throw ConfigError(fmt::format("frequency_hz must be positive, got {}", frequency_hz));
  if (!(path_loss_exponent >= 2.0 && path_loss_exponent <= 6.0)) {
    throw ConfigError(fmt::format("path_loss_exponent must lie in [2, 6], got {}", path_loss_exponent));
  }
  if (reference_distance_m != 1.0) {
    throw ConfigError(fmt::format("reference_distance_m is fixed at 1 m, got {}", reference_distance_m));
  }
  if (!(temperature_k > 0.0)) throw ConfigError(fmt::format("temperature_k must be positive, got {}", temperature_k));
  if (!(bandwidth_hz > 0.0)) throw ConfigError(fmt::format("bandwidth_hz must be positive, got {}", bandwidth_hz));
  if (noise_figure_unit == NoiseFigureUnit::Linear && !(noise_figure > 0.0)) {
    throw ConfigError(fmt::format("linear noise factor must be positive, got {}", noise_figure));
  }
  if (!std::isfinite(noise_figure)) throw ConfigError("noise_figure must be finite");
}

double RadioConfig::noise_factor() const {
  return noise_figure_unit == NoiseFigureUnit::Decibel ? std::pow(10.0, noise_figure / 10.0) : noise_figure;
}

double path_constant(const RadioConfig& config) {
  const double ratio = config.wavelength_m() / (4.0 * kPi * config.reference_distance_m);
  return config.tx_gain * config.rx_gain * ratio * ratio;
}

double received_power(const RadioConfig& config, double distance_m) {
  if (!(distance_m >= config.reference_distance_m)) {
    throw ConfigError(fmt::format("distance {} m is below the {} m reference distance", distance_m,
                                  config.reference_distance_m));
  }
  return config.tx_power_w * path_constant(config) *
         std::pow(config.reference_distance_m / distance_m, config.path_loss_exponent);
}

double noise_power(const RadioConfig& config) {
  return config.noise_factor() * kBoltzmann * config.temperature_k * config.bandwidth_hz;
}

double sinr(double signal_w, double interference_w, double noise_w) {
  return signal_w / (interference_w + noise_w);
}

double shannon_rate(const RadioConfig& config, double sinr) {
  return config.bandwidth_hz * std::log2(1.0 + sinr);
}

}  // namespace imwn
