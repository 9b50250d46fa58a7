#include "cayley/tree.hpp"

#include <string>

#include "padic/errors.hpp"

namespace cayley {

namespace {

std::int64_t pow3(int m) {
  std::int64_t r = 1;
  for (int i = 0; i < m; ++i) r *= 3;
  return r;
}

}  // namespace

TreeSlice::TreeSlice(int depth) : depth_(depth) {
  if (depth < 0 || depth > kMaxDepth) {
    throw padic::DomainError("tree depth must be in [0, " + std::to_string(kMaxDepth) + "], got " +
                             std::to_string(depth));
  }
}

std::int64_t TreeSlice::level_begin(int m) { return (pow3(m) - 1) / 2; }

std::int64_t TreeSlice::level_size(int m) { return pow3(m); }

std::int64_t TreeSlice::ball_size(int m) { return m < 0 ? 0 : level_begin(m + 1); }

int TreeSlice::level(std::int64_t v) const {
  int m = 0;
  while (level_begin(m + 1) <= v) ++m;
  return m;
}

std::int64_t TreeSlice::parent(std::int64_t v) const {
  if (v == 0) return -1;
  const int m = level(v);
  return level_begin(m - 1) + (v - level_begin(m)) / kOrder;
}

std::vector<std::int64_t> TreeSlice::successors(std::int64_t v) const {
  const int m = level(v);
  if (m >= depth_) return {};
  const std::int64_t first = level_begin(m + 1) + (v - level_begin(m)) * kOrder;
  return {first, first + 1, first + 2};
}

std::vector<int> TreeSlice::coordinates(std::int64_t v) const {
  std::vector<int> out(static_cast<std::size_t>(level(v)));
  for (std::size_t i = out.size(); i-- > 0;) {
    const int m = static_cast<int>(i) + 1;
    out[i] = static_cast<int>((v - level_begin(m)) % kOrder) + 1;
    v = parent(v);
  }
  return out;
}

std::int64_t hamiltonian(const Configuration& config, const TreeSlice& slice) {
  if (static_cast<std::int64_t>(config.size()) != slice.vertex_count()) {
    throw padic::DomainError("configuration size does not match the slice");
  }
  std::int64_t h = 0;
  for (int m = 1; m <= slice.depth(); ++m) {
    const std::int64_t begin = TreeSlice::level_begin(m);
    const std::int64_t parent_begin = TreeSlice::level_begin(m - 1);
    for (std::int64_t v = begin; v < begin + TreeSlice::level_size(m); ++v) {
      const std::int64_t u = parent_begin + (v - begin) / TreeSlice::kOrder;
      h += config[static_cast<std::size_t>(v)] == config[static_cast<std::size_t>(u)] ? 1 : 0;
    }
  }
  return h;
}

}  // namespace cayley
