#pragma once

#include <cstdint>

namespace hom3lie {

// Default seed for every randomized property suite in the repo. Keeping it
// here makes reruns reproducible bit-for-bit.
inline constexpr std::uint64_t kDefaultSeed = 20260809ull;

} // namespace hom3lie
