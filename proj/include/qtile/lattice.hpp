#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qtile/bipoly.hpp"
#include "qtile/partition.hpp"
#include "qtile/qrational.hpp"

namespace qtile {

/// Triangular-lattice geometry.
///
/// Lattice points are integer pairs (x, y) in the basis e1 = (1, 0),
/// e2 = (1/2, sqrt(3)/2). The unit triangle up(x, y) has vertices
/// (x,y), (x+1,y), (x,y+1); down(x, y) has vertices (x+1,y), (x,y+1),
/// (x+1,y+1). A unit cube corner (i, j, h) of a pile projects to the
/// lattice point (i - j, j - h), so the hexagon H_{r,c,n} has its north
/// vertex at (0, -n) and its axis is the lattice line x = 0.

struct LatticePoint {
  int x = 0;
  int y = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

struct TriCoord {
  int x = 0;
  int y = 0;
  bool up = true;
  auto operator<=>(const TriCoord&) const = default;
};

std::string to_string(const TriCoord& t);
std::array<LatticePoint, 3> vertices(const TriCoord& t);
/// The three edge-adjacent triangles (all of the opposite class).
std::array<TriCoord, 3> neighbors(const TriCoord& t);

/// Horizontal: top of a cube column, up(x,y) + down(x-1,y).
/// Right: the faces that lie on lozenge paths with the horizontal ones,
/// up(x,y) + down(x,y). Left: up(x,y) + down(x,y-1).
enum class Orientation { Left, Right, Horizontal };

std::string to_string(Orientation o);

struct Lozenge {
  Orientation orientation = Orientation::Horizontal;
  TriCoord up;
  TriCoord down;
  auto operator<=>(const Lozenge&) const = default;
};

/// Throws std::invalid_argument unless the triangles share an edge.
Lozenge make_lozenge(const TriCoord& a, const TriCoord& b);

/// H_{r,c,n}, optionally with some unit triangles deleted. Deleted
/// triangles keep the parent's coordinates, so weights of the remaining
/// lozenges are those of the full hexagon.
class HexagonRegion {
 public:
  HexagonRegion() = default;
  explicit HexagonRegion(const BoxBounds& b);

  const BoxBounds& bounds() const { return bounds_; }
  const std::set<TriCoord>& removed() const { return removed_; }
  bool is_full() const { return removed_.empty(); }

  /// Sorted triangles of the region.
  const std::vector<TriCoord>& triangles() const { return triangles_; }
  bool contains(const TriCoord& t) const;
  /// Counter-clockwise from the north vertex: N, upper W, lower W (the
  /// south-west corner), S, lower E, upper E. Sides N-W has length r,
  /// W has n, SW has c, SE has r, E has n, NE has c.
  std::array<LatticePoint, 6> corners() const;
  LatticePoint north_vertex() const { return {0, -bounds_.n}; }
  bool on_axis(const Lozenge& l) const;

  /// Deletes triangles; each must currently belong to the region.
  HexagonRegion without(const std::vector<TriCoord>& ts) const;

 private:
  BoxBounds bounds_;
  std::set<TriCoord> removed_;
  std::vector<TriCoord> triangles_;
};

/// Triangles of H_b translated by offset, sorted.
std::vector<TriCoord> hexagon_triangles(const BoxBounds& b, LatticePoint offset = {});
/// If the region's triangles are exactly a translate of H_target, returns
/// the translation.
std::optional<LatticePoint> match_translate(const HexagonRegion& region, const BoxBounds& target);

class LozengeTiling {
 public:
  /// Throws std::invalid_argument unless the lozenges cover every
  /// triangle of the region exactly once.
  LozengeTiling(HexagonRegion region, std::vector<Lozenge> lozenges);

  const HexagonRegion& region() const { return region_; }
  const std::vector<Lozenge>& lozenges() const { return lozenges_; }
  /// Lozenge covering the triangle, if any.
  const Lozenge* covering(const TriCoord& t) const;
  bool operator==(const LozengeTiling& o) const { return lozenges_ == o.lozenges_; }

 private:
  HexagonRegion region_;
  std::vector<Lozenge> lozenges_;            // sorted
  std::vector<std::pair<TriCoord, int>> by_triangle_;  // sorted lookup
};

struct PathStep {
  Lozenge lozenge;
  int height = 0;  ///< column height while the step is taken
};

/// The i-th lozenge path (1-based, top to bottom): c horizontal and n right
/// lozenges from the north-west side to the south-east side.
struct LozengePath {
  int index = 0;
  std::vector<PathStep> steps;
  int horizontal_count() const;
};

/// The tiling whose horizontal lozenges are the tops of the columns of pi
/// (floor tiles at height 0 included). Throws std::invalid_argument when pi
/// does not fit in b.
LozengeTiling pp_to_tiling(const PlanePartition& pi, const BoxBounds& b);
/// Inverse of pp_to_tiling, read off by walking the lozenge paths.
/// Throws std::invalid_argument for punctured regions.
PlanePartition tiling_to_pp(const LozengeTiling& t);
std::vector<LozengePath> tiling_to_paths(const LozengeTiling& t);

/// t = n - h + (i - 1) with h the column height and i the path index of l.
int depth(const LozengeTiling& t, const Lozenge& l);
/// Closed form n + x + y of the up triangle of a horizontal position.
/// Throws std::invalid_argument for non-horizontal lozenges.
int positional_depth(const HexagonRegion& region, const Lozenge& l);
/// Lattice distance from the top vertex of l to the line of the side of
/// length c through the north vertex.
int geometric_depth(const HexagonRegion& region, const Lozenge& l);

/// a^tr q^|pi| computed lozenge by lozenge: q^h, or (aq)^h on the axis.
BiPoly natural_weight(const LozengeTiling& t);
/// Tiling-independent weight: 1, q^{-t}, or on the axis
/// (aq)^{-t} (q^n;q^-1)_{n-t} / (aq^n;q^-1)_{n-t}.
QRational wt_weight(const HexagonRegion& region, const Lozenge& l);
QRational tiling_wt(const LozengeTiling& t);
/// Sum of tiling_wt over all tilings of H_b, via the plane partition
/// bijection.
QRational tiling_gen_fn(const BoxBounds& b);

struct LemmaCheck {
  bool holds_as_printed = false;  ///< A wt(T) == a^{-d(d+1)/2-(n+1)d} q^{..} q^|pi| a^tr w_n
  bool holds_corrected = false;   ///< wt(T) == A a^{-d(d+1)/2-(n-1)d} q^{..} q^|pi| a^tr w_n
  QRational prefactor;            ///< A wt(T) / (q^|pi| a^tr w_n)
  QRational residual;             ///< A wt(T) / printed right side
};

LemmaCheck lemma_check(const PlanePartition& pi, const BoxBounds& b);

}  // namespace qtile
