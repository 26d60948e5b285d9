#include "quadlab/rng.hpp"

namespace quadlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}
}  // namespace

std::uint64_t split_seed(std::uint64_t root, std::string_view label) {
  return splitmix64(root ^ fnv1a(label));
}

std::uint64_t split_seed(std::uint64_t root, std::string_view label, std::uint64_t index) {
  return splitmix64(split_seed(root, label) + splitmix64(index));
}

std::mt19937_64 make_rng(std::uint64_t root, std::string_view label) {
  return std::mt19937_64(split_seed(root, label));
}

std::mt19937_64 make_rng(std::uint64_t root, std::string_view label, std::uint64_t index) {
  return std::mt19937_64(split_seed(root, label, index));
}

}  // namespace quadlab
