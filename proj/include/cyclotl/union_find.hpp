#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace cyclotl {

// Disjoint sets over 0..size-1 with path halving and union by size.
class union_find {
 public:
  explicit union_find(std::size_t size) : _parent(size), _size(size, 1) {
    std::iota(_parent.begin(), _parent.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }

  // Returns false when x and y were already joined.
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_size[x] < _size[y]) {
      std::swap(x, y);
    }
    _parent[y] = x;
    _size[x] += _size[y];
    return true;
  }

  std::size_t size() const noexcept { return _parent.size(); }

 private:
  std::vector<std::uint32_t> _parent;
  std::vector<std::uint32_t> _size;
};

}  // namespace cyclotl
