#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace xyz {

/// Calls body(i) for i in [0, count) on up to `threads` workers (0 means
/// hardware concurrency). Exceptions from the body are rethrown after all
/// workers join; the first one by index wins.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

/// Independent generator for one trial, derived from (seed, stream, index) so
/// results do not depend on scheduling or on the total trial count.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace xyz
