#pragma once

#include <cstdint>

#include "smdedge/types.hpp"

namespace smdedge {

// Drops every edge pixel that has no edge among its 8 neighbours;
// neighbours outside the map count as empty. All decisions read the input
// snapshot, so the result is order-independent and the pass is idempotent.
// The number of dropped pixels lands in *removed when given.
EdgeMap eliminate_isolated(const EdgeMap& map, std::int64_t* removed = nullptr);

}  // namespace smdedge
