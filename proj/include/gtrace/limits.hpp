#pragma once

#include <cstdint>

namespace gtrace {

struct Limits {
  std::uint64_t max_group_order = 1000;
  // points of a single rep-set space L_P
  std::uint64_t max_lp_points = 1'000'000;
  // orbit representatives held at any refinement level of a product G-set
  std::uint64_t max_orbit_entries = 10'000'000;
  // collected polynomial size and projected product expansion size
  std::uint64_t max_monomials = 1'000'000;
  std::uint64_t max_partitions = 64;
};

}  // namespace gtrace
