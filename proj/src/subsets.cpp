#include "cyclgr/subsets.hpp"

#include <sstream>

namespace cyclgr {

std::string KSubset::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

KSubset rotate(const KSubset& I, int s) {
  s %= I.n;
  if (s < 0) s += I.n;
  if (s == 0) return I;
  std::uint64_t mask = (I.n == 64) ? ~std::uint64_t{0}
                                   : ((std::uint64_t{1} << I.n) - 1);
  std::uint64_t b = ((I.bits << s) | (I.bits >> (I.n - s))) & mask;
  return KSubset(b, I.n);
}

std::vector<KSubset> all_subsets(int n, int k) {
  std::vector<KSubset> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(cur, n);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

bool weakly_separated(const KSubset& I, const KSubset& J) {
  // Walk the circle once; I\J and J\I must form at most two arcs.
  const std::uint64_t a = I.bits & ~J.bits;
  const std::uint64_t b = J.bits & ~I.bits;
  int changes = 0;
  int prev = 0;  // 0 = unseen, 1 = in I\J, 2 = in J\I
  int first = 0;
  for (int e = 1; e <= I.n; ++e) {
    int cur = 0;
    if ((a >> (e - 1)) & 1)
      cur = 1;
    else if ((b >> (e - 1)) & 1)
      cur = 2;
    if (cur == 0) continue;
    if (prev != 0 && cur != prev) ++changes;
    if (first == 0) first = cur;
    prev = cur;
  }
  if (prev != 0 && first != prev) ++changes;
  return changes <= 2;
}

bool is_ws_collection(const std::vector<KSubset>& collection) {
  for (std::size_t i = 0; i < collection.size(); ++i)
    for (std::size_t j = i + 1; j < collection.size(); ++j)
      if (!weakly_separated(collection[i], collection[j])) return false;
  return true;
}

}  // namespace cyclgr
