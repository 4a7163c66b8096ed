#include <doctest.h>

#include <algorithm>
#include <set>

#include "imwn/errors.hpp"
#include "imwn/schedule.hpp"
#include "oracles.hpp"

using namespace imwn;
using V = std::vector<int>;

TEST_CASE("forward sets") {
  CHECK(forward_set(5, 3, 1) == V{1, 4});
  CHECK(forward_set(5, 3, 2) == V{2});
  CHECK(forward_set(5, 3, 3) == V{3});
  CHECK(forward_set(3, 2, 1) == V{1});
  CHECK(forward_set(3, 2, 2) == V{2});
  CHECK(forward_set(3, 5, 4).empty());
  CHECK_THROWS_AS(forward_set(5, 3, 4), ConfigError);
  CHECK_THROWS_AS(forward_set(5, 3, 0), ConfigError);
}

TEST_CASE("reverse sets") {
  CHECK(reverse_set(5, 3, 1) == V{5, 2});
  CHECK(reverse_set(5, 3, 2) == V{4});
  CHECK(reverse_set(5, 3, 3) == V{3});
  CHECK(reverse_set(4, 5, 1) == V{4});
  CHECK(reverse_set(4, 5, 5).empty());
}

TEST_CASE("set formulas agree with per-node slot assignment") {
  for (int n = 3; n <= 12; ++n) {
    for (int z = 2; z <= 8; ++z) {
      for (int i = 1; i <= z; ++i) {
        CHECK(forward_set(n, z, i) == oracle::nodes_in_forward_slot(n, z, i));
        CHECK(reverse_set(n, z, i) == oracle::nodes_in_reverse_slot(n, z, i));
      }
    }
  }
}

TEST_CASE("schedule structure properties") {
  for (int n = 3; n <= 12; ++n) {
    for (int z = 2; z <= 8; ++z) {
      std::multiset<int> fwd_seen, rev_seen;
      for (int i = 1; i <= z; ++i) {
        const auto f = forward_set(n, z, i);
        const auto r = reverse_set(n, z, i);
        for (int v : f) {
          CHECK(v >= 1);
          CHECK(v <= n - 1);
          CHECK((v - f.front()) % z == 0);
          fwd_seen.insert(v);
        }
        for (int v : r) {
          CHECK(v >= 2);
          CHECK(v <= n);
          rev_seen.insert(v);
        }
        // A longer period never adds transmitters to a slot.
        if (i <= z) CHECK(forward_set(n, z + 1, i).size() <= f.size());
      }
      // Every sender appears exactly once per period.
      CHECK(fwd_seen.size() == static_cast<std::size_t>(n - 1));
      CHECK(std::set<int>(fwd_seen.begin(), fwd_seen.end()).size() == static_cast<std::size_t>(n - 1));
      CHECK(std::set<int>(rev_seen.begin(), rev_seen.end()).size() == static_cast<std::size_t>(n - 1));

      const auto tr = tr_schedule({z, n, Mode::TR});
      const auto nc = nc_schedule({z, n, Mode::NC});
      CHECK(tr.period() == 2 * z);
      CHECK(nc.period() == z);
      for (const auto& s : tr.slots) CHECK(satisfies_half_duplex(s, n));
      for (const auto& s : nc.slots) CHECK(satisfies_half_duplex(s, n));
    }
  }
}

TEST_CASE("TR schedule alternates forward and reverse halves") {
  const auto s = tr_schedule({3, 5, Mode::TR});
  REQUIRE(s.period() == 6);
  auto nodes = [&](int slot) {
    V out;
    for (const auto& t : s.at(slot).transmitters) out.push_back(t.node);
    return out;
  };
  CHECK(nodes(1) == V{1, 4});
  CHECK(nodes(4) == V{5, 2});
  CHECK(nodes(7) == V{1, 4});  // wraps
  for (int slot = 1; slot <= 3; ++slot)
    for (const auto& t : s.at(slot).transmitters) CHECK(t.direction == Direction::Forward);
  for (int slot = 4; slot <= 6; ++slot)
    for (const auto& t : s.at(slot).transmitters) CHECK(t.direction == Direction::Reverse);

  const auto small = tr_schedule({2, 3, Mode::TR});
  CHECK(small.slots[0].transmitters == std::vector<Transmission>{{1, Direction::Forward}});
  CHECK(small.slots[1].transmitters == std::vector<Transmission>{{2, Direction::Forward}});
  CHECK(small.slots[2].transmitters == std::vector<Transmission>{{3, Direction::Reverse}});
  CHECK(small.slots[3].transmitters == std::vector<Transmission>{{2, Direction::Reverse}});
}

TEST_CASE("NC schedule: both sources inject, relays broadcast") {
  const auto s = nc_schedule({4, 5, Mode::NC});
  auto nodes = [&](int slot) {
    V out;
    for (const auto& t : s.at(slot).transmitters) out.push_back(t.node);
    return out;
  };
  CHECK(nodes(1) == V{1, 5});
  CHECK(nodes(2) == V{2});
  CHECK(nodes(3) == V{3});
  CHECK(nodes(4) == V{4});
  CHECK(intended_receivers(s.at(4).transmitters[0], 5) == V{3, 5});
  CHECK(intended_receivers({1, Direction::Broadcast}, 5) == V{2});
  CHECK(intended_receivers({5, Direction::Broadcast}, 5) == V{4});

  // The last node keeps its place in the rotation, so it never shares a
  // slot with its neighbour.
  CHECK(broadcast_set(6, 4, 1) == V{1, 5});
  CHECK(broadcast_set(6, 4, 2) == V{2, 6});
  for (int n = 3; n <= 12; ++n)
    for (int z = 2; z <= 8; ++z)
      for (int i = 1; i <= z; ++i) {
        for (int node : broadcast_set(n, z, i)) CHECK(oracle::broadcast_slot_of(node, z) == i);
      }
}

TEST_CASE("half-duplex check catches adjacent transmitters") {
  TransmitSet bad{1, {{2, Direction::Forward}, {3, Direction::Forward}}};
  CHECK_FALSE(satisfies_half_duplex(bad, 5));
  TransmitSet ok{1, {{1, Direction::Forward}, {3, Direction::Forward}}};
  CHECK(satisfies_half_duplex(ok, 5));
}

TEST_CASE("invalid schedule configs") {
  CHECK_THROWS_AS(tr_schedule({1, 5, Mode::TR}), ConfigError);
  CHECK_THROWS_AS(tr_schedule({3, 2, Mode::TR}), ConfigError);
  CHECK_THROWS_AS(tr_schedule({3, 5, Mode::NC}), ConfigError);
  CHECK_THROWS_AS(nc_schedule({3, 5, Mode::TR}), ConfigError);
  CHECK(parse_mode("nc") == Mode::NC);
  CHECK_THROWS_AS(parse_mode("xx"), ConfigError);
}
