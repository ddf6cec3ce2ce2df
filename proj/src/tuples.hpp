#pragma once

#include <cstddef>
#include <vector>

namespace uag::detail {

/// Advances t to the next tuple over {0..n-1} in lexicographic order
/// (last position fastest). Returns false after the last tuple.
template <class T>
bool next_tuple(std::vector<T>& t, std::size_t n) {
  for (std::size_t pos = t.size(); pos-- > 0;) {
    if (static_cast<std::size_t>(++t[pos]) < n) return true;
    t[pos] = 0;
  }
  return false;
}

}  // namespace uag::detail
