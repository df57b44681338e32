#pragma once

// Finite graph windows with BFS metrics, interior margins, metric balls and
// exact isoperimetric profiles. A window is a finite truncation of a larger
// graph; vertices that may be missing neighbours are marked as boundary and
// interior(k) keeps only vertices whose k-ball is undistorted.

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace afd::graphlab {

struct GeneratorSpec {
  enum class Type { Grid, Tree, Cycle, CayleyF2, File };
  Type type = Type::Grid;
  int rows = 0, cols = 0;   // grid
  int degree = 0;           // tree
  int radius = 0;           // tree / cayley_f2
  int length = 0;           // cycle
  std::string path;         // file

  // "grid:5", "grid:5x7", "tree:3,5", "cycle:10", "cayley_f2:3", "file:PATH"
  static GeneratorSpec parse(const std::string& text);
  std::string to_string() const;
};

class WindowGraph {
 public:
  static WindowGraph generate(const GeneratorSpec& spec);
  // First line "n m", then m lines "u v" (0-based).
  static WindowGraph from_file(const std::string& path);
  static WindowGraph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges);
  void write(std::ostream& out) const;

  std::size_t size() const { return adj_.size(); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  const GeneratorSpec& spec() const { return spec_; }
  std::optional<std::pair<int, int>> grid_dims() const { return grid_dims_; }

  // BFS distances from source to every vertex (window metric).
  const std::vector<int>& distances_from(int source) const;
  int distance(int u, int v) const { return distances_from(u).at(v); }

  // Vertices that may have neighbours outside the window.
  const std::vector<int>& boundary() const { return boundary_; }
  // distance to the boundary; size() (= "infinite") when boundary is empty
  int boundary_distance(int v) const;
  // Vertices whose full k-ball lies in the window.
  std::vector<int> interior(int k) const;

  // Deterministic center: minimum eccentricity, smallest id wins.
  int center_vertex() const;

  bool is_connected() const;

 private:
  WindowGraph() = default;
  void finish(GeneratorSpec spec, std::vector<int> boundary);

  std::vector<std::vector<int>> adj_;
  std::vector<int> boundary_;
  GeneratorSpec spec_;
  std::optional<std::pair<int, int>> grid_dims_;
  std::vector<std::vector<int>> dist_cache_;
};

using GraphPtr = std::shared_ptr<const WindowGraph>;

// Exact k-neighborhood of F via BFS; throws on out-of-range vertices.
std::vector<int> ball(const WindowGraph& g, const std::vector<int>& F, int k);

// Exact ratios |B_k(F_n)| / |F_n|. Every F_n must keep interior margin >= k
// so the window does not distort the ball; a set touching the margin throws.
std::vector<mpq_class> iso_profile(const WindowGraph& g,
                                   const std::vector<std::vector<int>>& exhaustion,
                                   int k);

}  // namespace afd::graphlab
