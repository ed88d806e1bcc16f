#pragma once

#include <cstdint>

namespace overpath {

// Global node budget for the exhaustive enumerators.  A budget of 0 means
// unlimited.  Each recursive enumeration step charges one node; exceeding
// the budget throws std::runtime_error so callers can bail out of searches
// that would take too long instead of hanging.
void set_node_budget(std::uint64_t nodes);
std::uint64_t node_budget();
std::uint64_t nodes_charged();
void reset_node_counter();
void charge_node();

}  // namespace overpath
