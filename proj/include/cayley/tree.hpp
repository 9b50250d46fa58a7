#pragma once

#include <cstdint>
#include <vector>

// Level-n slices of the rooted Cayley tree of order 3.
namespace cayley {

/// Vertices of V_n = W_0 u ... u W_n in breadth-first order; the root is
/// vertex 0 and level m occupies indices [(3^m - 1)/2, (3^{m+1} - 1)/2).
/// The root is part of V_n, so |L_n| = |V_n| - 1.
class TreeSlice {
 public:
  static constexpr int kOrder = 3;
  static constexpr int kMaxDepth = 18;

  /// DomainError for depth < 0 or beyond kMaxDepth.
  explicit TreeSlice(int depth);

  int depth() const { return depth_; }
  std::int64_t vertex_count() const { return level_begin(depth_ + 1); }
  std::int64_t edge_count() const { return vertex_count() - 1; }

  /// First index of level m; level_begin(n + 1) is |V_n|.
  static std::int64_t level_begin(int m);
  /// |W_m| = 3^m.
  static std::int64_t level_size(int m);
  /// |V_m| = (3^{m+1} - 1)/2, and 0 for m < 0.
  static std::int64_t ball_size(int m);

  int level(std::int64_t v) const;
  /// -1 for the root.
  std::int64_t parent(std::int64_t v) const;
  /// Empty on the last level.
  std::vector<std::int64_t> successors(std::int64_t v) const;
  /// The tuple (i_1, ..., i_m), i_j in {1, 2, 3}, addressing v from the root.
  std::vector<int> coordinates(std::int64_t v) const;

 private:
  int depth_;
};

/// Spin in {0, ..., q-1} for every vertex of the slice, by vertex index.
using Configuration = std::vector<std::uint8_t>;

/// Number of edges of the slice whose endpoints carry equal spins.
/// DomainError if the configuration does not cover the slice.
std::int64_t hamiltonian(const Configuration& config, const TreeSlice& slice);

}  // namespace cayley
