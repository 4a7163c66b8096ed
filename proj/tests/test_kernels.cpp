#include <doctest.h>

#include <omp.h>

#include "imwn/capacity.hpp"
#include "imwn/harness.hpp"

using namespace imwn;

TEST_CASE("parallel power matrix equals the serial one") {
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    const auto geo = build_layout({40, 2, 80.0, 250.0});
    RadioConfig radio;
    radio.path_loss_exponent = 3.3;
    CHECK(received_power_matrix(geo, radio) == received_power_matrix_serial(geo, radio));
  }
}

TEST_CASE("parallel event evaluation equals the serial reference") {
  const auto geo = build_layout({60, 2, 100.0, 300.0});
  const auto routes = leading_routes(geo, 59);
  for (Mode mode : {Mode::TR, Mode::NC}) {
    const auto events = reception_events(make_schedule({4, 60, mode}), geo, routes);
    for (int threads : {1, 3}) {
      omp_set_num_threads(threads);
      const auto par = evaluate_events(events, geo, RadioConfig{});
      const auto ser = evaluate_events_serial(events, geo, RadioConfig{});
      REQUIRE(par.size() == ser.size());
      for (std::size_t k = 0; k < par.size(); ++k) {
        CHECK(par[k].signal_w == ser[k].signal_w);
        CHECK(par[k].interference_w == ser[k].interference_w);
        CHECK(par[k].rate_bps == ser[k].rate_bps);
      }
    }
  }
}

TEST_CASE("parallel sweep equals the serial sweep") {
  ExperimentSpec spec;
  for (int threads : {1, 4}) {
    omp_set_num_threads(threads);
    CHECK(run_sweep(spec) == run_sweep_serial(spec));
  }
}
