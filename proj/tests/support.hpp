#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "orderlab/finspace.hpp"
#include "orderlab/poset.hpp"

namespace support {

inline oracle::Rel rel(const orderlab::Poset& p) {
  oracle::Rel r(p.size(), std::vector<bool>(p.size()));
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) r[a][b] = p.le(a, b);
  }
  return r;
}

inline orderlab::PosetRef poset(const oracle::Rel& r) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < r.size(); ++a) {
    labels.push_back("p" + std::to_string(a));
    for (std::size_t b = 0; b < r.size(); ++b) {
      if (a != b && r[a][b]) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return orderlab::make_poset_indexed(labels, pairs);
}

inline oracle::Mask mask(const orderlab::Subset& s) {
  oracle::Mask m = 0;
  for (auto i = s.find_first(); i != orderlab::Subset::npos; i = s.find_next(i)) m |= oracle::Mask{1} << i;
  return m;
}

inline orderlab::Subset subset(std::size_t n, oracle::Mask m) {
  orderlab::Subset s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (oracle::bit(m, static_cast<int>(i))) s.set(i);
  }
  return s;
}

inline std::vector<oracle::Mask> open_masks(const orderlab::FinSpace& x) {
  std::vector<oracle::Mask> out;
  for (const auto& u : x.opens()) out.push_back(mask(u));
  return out;
}

inline orderlab::MonotoneMap map(const orderlab::PosetRef& dom, const orderlab::PosetRef& cod,
                                 const std::vector<std::string>& images) {
  std::vector<int> t;
  for (const auto& l : images) t.push_back(cod->index_of(l));
  return orderlab::MonotoneMap(dom, cod, t);
}

}  // namespace support
