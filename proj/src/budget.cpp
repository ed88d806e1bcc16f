#include "overpath/budget.hpp"

#include <stdexcept>
#include <string>

namespace overpath {

namespace {
std::uint64_t g_budget = 0;   // 0 = unlimited
std::uint64_t g_charged = 0;
}  // namespace

void set_node_budget(std::uint64_t nodes) {
    g_budget = nodes;
    g_charged = 0;
}

std::uint64_t node_budget() { return g_budget; }

std::uint64_t nodes_charged() { return g_charged; }

void reset_node_counter() { g_charged = 0; }

void charge_node() {
    ++g_charged;
    if (g_budget != 0 && g_charged > g_budget)
        throw std::runtime_error(
            "node budget exceeded: enumeration visited more than " +
            std::to_string(g_budget) +
            " search nodes; raise the budget (--budget / OVERPATH_BUDGET) or "
            "shrink the request");
}

}  // namespace overpath
