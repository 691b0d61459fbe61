#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclgr {

/// A k-subset of [1,n] stored as a bitmask (bit i-1 set means i is in).
/// Ambient n <= 64.
struct KSubset {
  std::uint64_t bits = 0;
  int n = 0;

  KSubset() = default;
  KSubset(std::uint64_t bits, int n) : bits(bits), n(n) {}
  KSubset(const std::vector<int>& elems, int n) : n(n) {
    for (int e : elems) {
      if (e < 1 || e > n) throw std::invalid_argument("element out of range");
      bits |= std::uint64_t{1} << (e - 1);
    }
  }

  int size() const { return std::popcount(bits); }
  bool contains(int e) const { return (bits >> (e - 1)) & 1; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int e = 1; e <= n; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  KSubset with(int e) const {
    return KSubset(bits | (std::uint64_t{1} << (e - 1)), n);
  }
  KSubset without(int e) const {
    return KSubset(bits & ~(std::uint64_t{1} << (e - 1)), n);
  }

  bool operator==(const KSubset& o) const {
    return bits == o.bits && n == o.n;
  }
  bool operator<(const KSubset& o) const { return bits < o.bits; }

  std::string str() const;
};

/// I shifted by +s modulo n (cyclic rotation of the ground set).
KSubset rotate(const KSubset& I, int s);

/// Representative of v in [1,n].
inline int mod1(std::int64_t v, int n) {
  std::int64_t r = v % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

/// All k-subsets of [1,n] in lexicographic order of sorted elements.
std::vector<KSubset> all_subsets(int n, int k);

/// No cyclic alternation a < b < c < d with a,c in I\J and b,d in J\I.
bool weakly_separated(const KSubset& I, const KSubset& J);

bool is_ws_collection(const std::vector<KSubset>& collection);

}  // namespace cyclgr
