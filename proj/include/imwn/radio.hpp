#pragma once

namespace imwn {

inline constexpr double kSpeedOfLight = 2.998e8;  // m/s
inline constexpr double kBoltzmann = 1.38e-23;    // J/K
inline constexpr double kPi = 3.14159265358979323846;

enum class NoiseFigureUnit { Decibel, Linear };

/// Link-budget parameters. Powers are linear watts throughout; the noise
/// figure is the only quantity that may be given in dB.
struct RadioConfig {
  double tx_power_w = 0.1;
  double tx_gain = 1.0;
  double rx_gain = 1.0;
  double frequency_hz = 2.0e9;
  double path_loss_exponent = 4.0;
  double reference_distance_m = 1.0;
  double noise_figure = 4.0;
  NoiseFigureUnit noise_figure_unit = NoiseFigureUnit::Decibel;
  double temperature_k = 300.0;
  double bandwidth_hz = 1.0e6;

  // Throws ConfigError.
  void validate() const;

  double wavelength_m() const { return kSpeedOfLight / frequency_hz; }
  double noise_factor() const;
};

// K = G_tx * G_rx * (lambda / (4 pi d_ref))^2
double path_constant(const RadioConfig& config);

// P_tx * K * (d_ref / d)^eta. Distances below the reference distance are rejected.
double received_power(const RadioConfig& config, double distance_m);

// F * k * T * B with F linear.
double noise_power(const RadioConfig& config);

double sinr(double signal_w, double interference_w, double noise_w);

// Shannon bound B * log2(1 + sinr), in bit/s.
double shannon_rate(const RadioConfig& config, double sinr);

}  // namespace imwn
