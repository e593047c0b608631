#include "floodbc/rng.hpp"

#include <algorithm>
#include <set>

namespace floodbc {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

uint64_t derive_key(uint64_t root, std::string_view domain, uint64_t index) {
  uint64_t h = splitmix64(root ^ fnv1a64(domain));
  return splitmix64(h ^ (index * 0x9e3779b97f4a7c15ULL + 1));
}

uint64_t derive_subkey(uint64_t key, uint64_t index) {
  return splitmix64(key ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

uint64_t RngStream::below(uint64_t bound) {
  if (bound <= 1) return 0;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

std::vector<int> RngStream::sample_distinct(int lo, int hi, int k) {
  // Floyd's algorithm: k iterations regardless of range size.
  const int range = hi - lo + 1;
  std::set<int> chosen;
  for (int j = range - k; j < range; ++j) {
    int t = lo + static_cast<int>(below(static_cast<uint64_t>(j) + 1));
    if (!chosen.insert(t).second) chosen.insert(lo + j);
  }
  return std::vector<int>(chosen.begin(), chosen.end());
}

}  // namespace floodbc
