#pragma once

// Reference computations that do not go through the library's code paths:
// per-node slot assignment instead of the set formulas, textbook Friis,
// closed-form latencies, and SINR summed straight from grid coordinates.

#include <cmath>
#include <vector>

namespace oracle {

inline constexpr double c = 2.998e8;
inline constexpr double k_b = 1.38e-23;
inline constexpr double pi = 3.14159265358979323846;

// P_r = P_t G_t G_r lambda^2 / (4 pi d)^2
inline double friis(double pt, double gt, double gr, double freq, double d) {
  const double lambda = c / freq;
  return pt * gt * gr * lambda * lambda / ((4 * pi * d) * (4 * pi * d));
}

// Forward slot owned by node j (1-based), or 0 if j never transmits forward.
inline int forward_slot_of(int j, int n_o, int z) { return j <= n_o - 1 ? (j - 1) % z + 1 : 0; }
inline int reverse_slot_of(int j, int n_o, int z) { return j >= 2 ? (n_o - j) % z + 1 : 0; }
inline int broadcast_slot_of(int j, int z) { return (j - 1) % z + 1; }

inline std::vector<int> nodes_in_forward_slot(int n_o, int z, int slot) {
  std::vector<int> out;
  for (int j = 1; j <= n_o; ++j)
    if (forward_slot_of(j, n_o, z) == slot) out.push_back(j);
  return out;
}

inline std::vector<int> nodes_in_reverse_slot(int n_o, int z, int slot) {
  std::vector<int> out;
  for (int j = n_o; j >= 1; --j)
    if (reverse_slot_of(j, n_o, z) == slot) out.push_back(j);
  return out;
}

inline long tr_latency(int n_o, int z) { return n_o - 1 + z * ((n_o - 2) / z); }
inline long nc_forward_latency(int n_o) { return n_o - 1; }
inline long nc_reverse_latency(int n_o, int z) { return static_cast<long>(n_o - 2) * (z - 1) + 1; }

struct Radio {
  double pt = 0.1;
  double g = 1.0;
  double freq = 2e9;
  double eta = 4.0;
  double noise_factor_db = 4.0;
  double temp = 300.0;
  double bw = 1e6;
};

inline double power_at(const Radio& r, double d) {
  const double lambda = c / r.freq;
  return r.pt * r.g * r.g * std::pow(lambda / (4 * pi), 2) / std::pow(d, r.eta);
}

inline double noise(const Radio& r) { return std::pow(10.0, r.noise_factor_db / 10.0) * k_b * r.temp * r.bw; }

struct Tx {
  int row;
  int node;
  int dir;  // +1 forward, -1 reverse, 0 broadcast
};

// Bottleneck rates of row 0 by brute-force enumeration of who transmits when.
struct Bottlenecks {
  double forward;
  double reverse;
};

inline Bottlenecks bottlenecks(const Radio& r, bool nc, int rows, int hops, int z, double d0 = 100.0,
                               double d1 = 300.0) {
  const int n_o = hops + 1;
  const int period = nc ? z : 2 * z;
  double fwd = INFINITY, rev = INFINITY;
  for (int slot = 1; slot <= period; ++slot) {
    std::vector<Tx> active;
    for (int row = 0; row < rows; ++row) {
      for (int j = 1; j <= n_o; ++j) {
        if (nc) {
          if (broadcast_slot_of(j, z) == slot) active.push_back({row, j, 0});
        } else if (slot <= z) {
          if (forward_slot_of(j, n_o, z) == slot) active.push_back({row, j, +1});
        } else if (reverse_slot_of(j, n_o, z) == slot - z) {
          active.push_back({row, j, -1});
        }
      }
    }
    for (const auto& t : active) {
      if (t.row != 0) continue;
      for (int rx : {t.node - 1, t.node + 1}) {
        if (rx < 1 || rx > n_o) continue;
        if (t.dir == +1 && rx < t.node) continue;
        if (t.dir == -1 && rx > t.node) continue;
        double interference = 0.0;
        for (const auto& o : active) {
          if (o.row == t.row && o.node == t.node) continue;
          interference += power_at(r, std::hypot((o.node - rx) * d0, o.row * d1));
        }
        const double s = power_at(r, std::abs(t.node - rx) * d0) / (interference + noise(r));
        const double rate = r.bw * std::log2(1.0 + s);
        if (rx > t.node) fwd = std::min(fwd, rate);
        else rev = std::min(rev, rate);
      }
    }
  }
  return {fwd, rev};
}

}  // namespace oracle
