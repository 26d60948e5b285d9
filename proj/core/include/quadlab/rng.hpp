#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace quadlab {

/// splitmix64 mixer; the usual constant-increment generator finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives an independent stream seed from a root seed and a consumer label.
/// Every random consumer in a run (environment, exploration noise, weight
/// init, replay sampling, ...) gets its own label so streams never alias.
std::uint64_t split_seed(std::uint64_t root, std::string_view label);

/// Label plus index variant for per-episode / per-cell streams.
std::uint64_t split_seed(std::uint64_t root, std::string_view label, std::uint64_t index);

/// Engine seeded from a derived stream seed.
std::mt19937_64 make_rng(std::uint64_t root, std::string_view label);
std::mt19937_64 make_rng(std::uint64_t root, std::string_view label, std::uint64_t index);

}  // namespace quadlab
