#pragma once

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qtile/lattice.hpp"
#include "qtile/products.hpp"
#include "qtile/qrational.hpp"

namespace qtile {

/// Planar bipartite graph whose vertices are named by TriCoord; the class of
/// a vertex is its `up` flag. Built from a region the vertices are the unit
/// triangles and each edge carries the wt weight of its lozenge.
class DualGraph {
 public:
  struct Edge {
    int u = 0;  ///< index of the up-class end
    int v = 0;  ///< index of the down-class end
    QRational weight;
  };

  DualGraph() = default;
  explicit DualGraph(const HexagonRegion& region);
  /// Generic graph; every edge must join the two classes.
  DualGraph(std::vector<TriCoord> vertices, const std::vector<std::tuple<TriCoord, TriCoord, QRational>>& edges);

  const std::vector<TriCoord>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident(int vertex) const { return adj_[vertex]; }
  std::optional<int> index_of(const TriCoord& t) const;
  bool contains(const TriCoord& t) const { return index_of(t).has_value(); }
  int up_count() const;
  int down_count() const { return static_cast<int>(vertices_.size()) - up_count(); }

  /// Deletes vertices together with their edges; unknown vertices throw.
  DualGraph without(const std::vector<TriCoord>& ts) const;

  /// One line per edge, `u_coord v_coord weight_json`, in edge order.
  std::string to_edge_list() const;

 private:
  void build_adjacency();

  std::vector<TriCoord> vertices_;  // sorted
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

DualGraph dual_graph(const HexagonRegion& region);

/// Calls f with the edge indices of every perfect matching.
void for_each_matching(const DualGraph& g, const std::function<void(const std::vector<int>&)>& f);
/// Sum over perfect matchings of the product of edge weights. 1 for the
/// empty graph, 0 when the classes are unbalanced.
QRational matching_gen_fn(const DualGraph& g);
long long count_matchings(const DualGraph& g);

struct ForcedReduction {
  HexagonRegion residual;
  QRational factor{1};
  std::vector<Lozenge> forced;
};

/// Repeatedly takes the unique lozenge at a triangle with one free
/// neighbour. M(region) = factor * M(residual), the residual keeping the
/// weights of the parent hexagon.
ForcedReduction remove_forced(const HexagonRegion& region);

struct KuoResult {
  bool holds = false;
  QRational lhs;  ///< M(G) M(G-{u,v,w,s})
  QRational rhs;  ///< M(G-{u,v}) M(G-{w,s}) + M(G-{u,s}) M(G-{v,w})
};

/// u, w must be in one class and v, s in the other (std::invalid_argument
/// otherwise). That they lie on one face in cyclic order is not checked.
KuoResult kuo_check(const DualGraph& g, const TriCoord& u, const TriCoord& v, const TriCoord& w,
                    const TriCoord& s);

/// u at the south-west corner, then v, w, s counter-clockwise: up(r-1,0),
/// down(r-c-1,c-1), up(-c,c-1), down(-c,c-n-1). Needs r, c, n >= 1.
std::array<TriCoord, 4> kuo_corners(const BoxBounds& b);

enum class ReductionForm {
  AsPrinted,      ///< factors exactly as displayed (with the halved exponent in (iii))
  AxisCorrected,  ///< (i), (v) times axis_correction when r > c; (iii) when r >= c
};

struct ReductionCheck {
  std::string name;              ///< "i" .. "v"
  std::vector<TriCoord> removed;
  BoxBounds target;              ///< hexagon left after the forced lozenges
  QRational factor;              ///< stated factor
  QRational lhs;                 ///< M(G - removed), by matching enumeration
  QRational rhs;                 ///< factor * M(H_target), by tiling enumeration
  bool holds = false;
  QRational forced_factor;       ///< weight of the forced lozenges
  std::optional<LatticePoint> residual_offset;  ///< residual == H_target + offset (empty if degenerate)
  bool transport_holds = false;  ///< lhs == forced_factor * M(residual)
};

std::vector<ReductionCheck> reduction_suite(const BoxBounds& b, ReductionForm form = ReductionForm::AsPrinted);

struct RecurrenceResult {
  bool holds = false;
  QRational lhs;
  QRational rhs;
};

/// M(H_{r,c,n}) M(H_{r-1,c-1,n}) against the two-term right side, every M
/// taken from tiling_gen_fn. Needs r, c, n >= 1.
RecurrenceResult recurrence_check(const BoxBounds& b, RecurrenceForm form = RecurrenceForm::AsPrinted);

/// Random planar test case: a rows x cols grid graph (vertex (i,j) is
/// TriCoord{i, j, (i+j) even}) with weights in 1..5, some interior edges
/// deleted, and four outer-face vertices of alternating class in cyclic
/// order.
struct GridCase {
  int rows = 0;
  int cols = 0;
  DualGraph graph;
  std::array<TriCoord, 4> uvws;
};

GridCase random_grid_case(std::mt19937& rng);

}  // namespace qtile
