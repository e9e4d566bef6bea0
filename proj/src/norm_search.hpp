#pragma once

#include "a4csl/golden.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace a4csl::detail {

using SmallZ = std::array<std::int32_t, 8>;

/// All x (Z-coordinates over the icosian basis) with nr(x) = delta,
/// sorted. Fincke-Pohst on x -> Tr(nr x) in an LLL-reduced basis; the
/// last coordinate is solved exactly.
std::vector<SmallZ> search_norm(const GoldenInt& delta, bool primitive_only, unsigned threads);

/// Number of tree nodes visited by the most recent search on this thread.
std::uint64_t last_search_nodes();

}  // namespace a4csl::detail
