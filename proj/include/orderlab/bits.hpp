#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace orderlab {

/// A subset of some finite index set {0, ..., n-1}.
using Subset = boost::dynamic_bitset<>;

/// Thrown when an exhaustive enumeration would exceed its element cap.
class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on structurally invalid input (non-poset relation, non-T0 space, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Subset singleton(std::size_t n, std::size_t i) {
  Subset s(n);
  s.set(i);
  return s;
}

inline Subset full_set(std::size_t n) {
  Subset s(n);
  s.set();
  return s;
}

inline std::vector<int> members(const Subset& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

/// Order used wherever enumerations must be deterministic: by size, then by
/// the sorted member list.
inline bool subset_less(const Subset& a, const Subset& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != Subset::npos && j != Subset::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

struct SubsetHash {
  std::size_t operator()(const Subset& s) const {
    std::size_t h = std::hash<std::size_t>{}(s.size());
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
      h ^= i + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace orderlab
