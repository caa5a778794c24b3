#include "qtile/matching.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace qtile {

DualGraph::DualGraph(const HexagonRegion& region) : vertices_(region.triangles()) {
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    const TriCoord& t = vertices_[i];
    if (!t.up) continue;
    for (const auto& nb : neighbors(t)) {
      auto j = index_of(nb);
      if (!j) continue;
      edges_.push_back({i, *j, wt_weight(region, make_lozenge(t, nb))});
    }
  }
  build_adjacency();
}

DualGraph::DualGraph(std::vector<TriCoord> vertices,
                     const std::vector<std::tuple<TriCoord, TriCoord, QRational>>& edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("duplicate vertex");
  for (const auto& [a, b, w] : edges) {
    auto i = index_of(a), j = index_of(b);
    if (!i || !j) throw std::invalid_argument("edge endpoint is not a vertex");
    if (a.up == b.up) throw std::invalid_argument("edge " + to_string(a) + " " + to_string(b) + " within one class");
    if (a.up)
      edges_.push_back({*i, *j, w});
    else
      edges_.push_back({*j, *i, w});
  }
  build_adjacency();
}

void DualGraph::build_adjacency() {
  adj_.assign(vertices_.size(), {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    adj_[edges_[e].u].push_back(e);
    adj_[edges_[e].v].push_back(e);
  }
}

std::optional<int> DualGraph::index_of(const TriCoord& t) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), t);
  if (it == vertices_.end() || *it != t) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

int DualGraph::up_count() const {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(), [](const TriCoord& t) { return t.up; }));
}

DualGraph DualGraph::without(const std::vector<TriCoord>& ts) const {
  std::set<TriCoord> gone;
  for (const auto& t : ts) {
    if (!contains(t)) throw std::invalid_argument("vertex " + to_string(t) + " is not in the graph");
    gone.insert(t);
  }
  DualGraph g;
  for (const auto& t : vertices_)
    if (!gone.count(t)) g.vertices_.push_back(t);
  for (const auto& e : edges_) {
    auto i = g.index_of(vertices_[e.u]), j = g.index_of(vertices_[e.v]);
    if (i && j) g.edges_.push_back({*i, *j, e.weight});
  }
  g.build_adjacency();
  return g;
}

std::string DualGraph::to_edge_list() const {
  std::string out;
  for (const auto& e : edges_)
    out += to_string(vertices_[e.u]) + " " + to_string(vertices_[e.v]) + " " + e.weight.to_json().dump() + "\n";
  return out;
}

DualGraph dual_graph(const HexagonRegion& region) { return DualGraph(region); }

namespace {

class Matcher {
 public:
  explicit Matcher(const DualGraph& g) : g_(g), covered_(g.vertices().size(), false) {}

  template <class Leaf>
  void run(Leaf&& leaf) {
    if (g_.up_count() != g_.down_count()) return;
    rec(0, leaf);
  }

  std::vector<int> chosen;

 private:
  int free_degree(int x) const {
    int k = 0;
    for (int e : g_.incident(x))
      if (!covered_[other(e, x)]) ++k;
    return k;
  }
  int other(int e, int x) const {
    const auto& ed = g_.edges()[e];
    return ed.u == x ? ed.v : ed.u;
  }
  // A free neighbour of x left with no free neighbour of its own.
  bool strands_neighbour(int x) const {
    for (int e : g_.incident(x)) {
      int y = other(e, x);
      if (!covered_[y] && free_degree(y) == 0) return true;
    }
    return false;
  }

  template <class Leaf>
  void rec(int from, Leaf& leaf) {
    const int nv = static_cast<int>(covered_.size());
    while (from < nv && covered_[from]) ++from;
    if (from == nv) {
      leaf(chosen);
      return;
    }
    for (int e : g_.incident(from)) {
      int y = other(e, from);
      if (covered_[y]) continue;
      covered_[from] = covered_[y] = true;
      if (!strands_neighbour(from) && !strands_neighbour(y)) {
        chosen.push_back(e);
        rec(from + 1, leaf);
        chosen.pop_back();
      }
      covered_[from] = covered_[y] = false;
    }
  }

  const DualGraph& g_;
  std::vector<bool> covered_;
};

}  // namespace

void for_each_matching(const DualGraph& g, const std::function<void(const std::vector<int>&)>& f) {
  Matcher m(g);
  m.run([&](const std::vector<int>& es) { f(es); });
}

QRational matching_gen_fn(const DualGraph& g) {
  QSum sum;
  for_each_matching(g, [&](const std::vector<int>& es) {
    QRational w(1);
    for (int e : es) w *= g.edges()[e].weight;
    sum.add(w);
  });
  return sum.total();
}

long long count_matchings(const DualGraph& g) {
  long long k = 0;
  for_each_matching(g, [&](const std::vector<int>&) { ++k; });
  return k;
}

ForcedReduction remove_forced(const HexagonRegion& region) {
  std::set<TriCoord> left(region.triangles().begin(), region.triangles().end());
  ForcedReduction res;
  std::vector<TriCoord> taken;
  auto free_nbs = [&](const TriCoord& t) {
    std::vector<TriCoord> out;
    for (const auto& nb : neighbors(t))
      if (left.count(nb)) out.push_back(nb);
    return out;
  };
  std::deque<TriCoord> queue(left.begin(), left.end());
  while (!queue.empty()) {
    TriCoord t = queue.front();
    queue.pop_front();
    if (!left.count(t)) continue;
    auto nbs = free_nbs(t);
    if (nbs.size() != 1) continue;
    const TriCoord partner = nbs[0];
    Lozenge l = make_lozenge(t, partner);
    res.forced.push_back(l);
    res.factor *= wt_weight(region, l);
    left.erase(t);
    left.erase(partner);
    taken.push_back(t);
    taken.push_back(partner);
    for (const auto& nb : neighbors(partner))
      if (left.count(nb)) queue.push_back(nb);
  }
  res.residual = region.without(taken);
  return res;
}

KuoResult kuo_check(const DualGraph& g, const TriCoord& u, const TriCoord& v, const TriCoord& w,
                    const TriCoord& s) {
  if (u.up != w.up || v.up != s.up || u.up == v.up)
    throw std::invalid_argument("u, w and v, s must lie in opposite classes");
  for (const auto& t : {u, v, w, s})
    if (!g.contains(t)) throw std::invalid_argument("vertex " + to_string(t) + " is not in the graph");
  auto M = [&](std::vector<TriCoord> ts) { return matching_gen_fn(g.without(ts)); };
  KuoResult r;
  r.lhs = matching_gen_fn(g) * M({u, v, w, s});
  r.rhs = M({u, v}) * M({w, s}) + M({u, s}) * M({v, w});
  r.holds = r.lhs == r.rhs;
  return r;
}

std::array<TriCoord, 4> kuo_corners(const BoxBounds& b) {
  if (b.r < 1 || b.c < 1 || b.n < 1) throw std::invalid_argument("kuo_corners needs r, c, n >= 1");
  const int r = b.r, c = b.c, n = b.n;
  return {TriCoord{r - 1, 0, true}, TriCoord{r - c - 1, c - 1, false}, TriCoord{-c, c - 1, true},
          TriCoord{-c, c - n - 1, false}};
}

std::vector<ReductionCheck> reduction_suite(const BoxBounds& b, ReductionForm form) {
  if (b.r < 1 || b.c < 1 || b.n < 1) throw std::invalid_argument("reduction_suite needs r, c, n >= 1");
  const int r = b.r, c = b.c, n = b.n, d = b.d();
  const auto [u, v, w, s] = kuo_corners(b);
  const HexagonRegion full(b);
  const DualGraph g(full);

  const QRational f1 = QRational::monomial(0, -(2 * n + r - 2) * (r - 1) / 2);
  const QRational f3 = QRational::monomial(0, -(2 * n + r - 1) * r / 2);
  const QRational f4 = (QRational::one_minus(1, n + 1) / QRational::one_minus(0, n + 1)).pow(d - 1);
  const QRational f5 = f1 * (QRational::one_minus(0, n) / QRational::one_minus(1, n)).pow(d);
  const bool corrected = form == ReductionForm::AxisCorrected;
  const QRational E = axis_correction(b);

  struct Spec {
    const char* name;
    std::vector<TriCoord> removed;
    BoxBounds target;
    QRational factor;
  };
  std::vector<Spec> specs = {
      {"i", {u, v, w, s}, {r - 1, c - 1, n}, corrected && r > c ? f1 * E : f1},
      {"ii", {u, v}, {r - 1, c, n}, QRational(1)},
      {"iii", {w, s}, {r, c - 1, n}, corrected && r >= c ? f3 * E : f3},
      {"iv", {u, s}, {r - 1, c - 1, n + 1}, f4},
      {"v", {v, w}, {r, c, n - 1}, corrected && r > c ? f5 * E : f5},
  };

  std::vector<ReductionCheck> out;
  for (auto& sp : specs) {
    ReductionCheck ck;
    ck.name = sp.name;
    ck.removed = sp.removed;
    ck.target = sp.target;
    ck.factor = sp.factor;
    ck.lhs = matching_gen_fn(g.without(sp.removed));
    ck.rhs = sp.factor * tiling_gen_fn(sp.target);
    ck.holds = ck.lhs == ck.rhs;
    ForcedReduction fr = remove_forced(full.without(sp.removed));
    ck.forced_factor = fr.factor;
    // A hexagon with a zero side has a single tiling, so it is forced away
    // completely.
    if (sp.target.r == 0 || sp.target.c == 0 || sp.target.n == 0) {
      if (fr.residual.triangles().empty()) ck.residual_offset = LatticePoint{};
    } else {
      ck.residual_offset = match_translate(fr.residual, sp.target);
    }
    ck.transport_holds = ck.lhs == fr.factor * matching_gen_fn(DualGraph(fr.residual));
    out.push_back(std::move(ck));
  }
  return out;
}

RecurrenceResult recurrence_check(const BoxBounds& b, RecurrenceForm form) {
  if (b.r < 1 || b.c < 1 || b.n < 1) throw std::invalid_argument("recurrence_check needs r, c, n >= 1");
  const int r = b.r, c = b.c, n = b.n;
  auto M = [](int rr, int cc, int nn) { return tiling_gen_fn(BoxBounds{rr, cc, nn}); };
  QRational k1 = recurrence_first_coeff(b);
  if (form == RecurrenceForm::AxisCorrected && r == c) k1 *= axis_correction(b);
  RecurrenceResult res;
  res.lhs = M(r, c, n) * M(r - 1, c - 1, n);
  res.rhs = k1 * M(r - 1, c, n) * M(r, c - 1, n) +
            recurrence_second_coeff(b) * M(r - 1, c - 1, n + 1) * M(r, c, n - 1);
  res.holds = res.lhs == res.rhs;
  return res;
}

GridCase random_grid_case(std::mt19937& rng) {
  std::uniform_int_distribution<int> side(2, 4), weight(1, 5), coin(0, 3);
  GridCase gc;
  gc.rows = side(rng);
  gc.cols = side(rng);
  const int R = gc.rows, C = gc.cols;
  auto vtx = [](int i, int j) { return TriCoord{i, j, (i + j) % 2 == 0}; };

  // Outer boundary, clockwise from the top-left corner.
  std::vector<TriCoord> ring;
  for (int j = 0; j < C; ++j) ring.push_back(vtx(0, j));
  for (int i = 1; i < R; ++i) ring.push_back(vtx(i, C - 1));
  for (int j = C - 2; j >= 0; --j) ring.push_back(vtx(R - 1, j));
  for (int i = R - 2; i >= 1; --i) ring.push_back(vtx(i, 0));
  std::set<std::pair<TriCoord, TriCoord>> ring_edges;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    TriCoord a = ring[k], b = ring[(k + 1) % ring.size()];
    ring_edges.insert({std::min(a, b), std::max(a, b)});
  }

  std::vector<TriCoord> vs;
  std::vector<std::tuple<TriCoord, TriCoord, QRational>> es;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) vs.push_back(vtx(i, j));
  auto add = [&](TriCoord a, TriCoord b) {
    bool on_ring = ring_edges.count({std::min(a, b), std::max(a, b)}) > 0;
    // Interior edges may be dropped; the outer face stays the ring.
    if (!on_ring && coin(rng) == 0) return;
    es.emplace_back(a, b, QRational(weight(rng)));
  };
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) {
      if (j + 1 < C) add(vtx(i, j), vtx(i, j + 1));
      if (i + 1 < R) add(vtx(i, j), vtx(i + 1, j));
    }
  gc.graph = DualGraph(vs, es);

  // Four ring positions with odd gaps, so the classes alternate.
  const int L = static_cast<int>(ring.size());
  std::uniform_int_distribution<int> pos(0, L - 1);
  for (;;) {
    std::array<int, 4> p{pos(rng), pos(rng), pos(rng), pos(rng)};
    std::sort(p.begin(), p.end());
    bool ok = true;
    for (int k = 0; k < 3; ++k)
      if ((p[k + 1] - p[k]) % 2 == 0) ok = false;
    if (!ok) continue;
    for (int k = 0; k < 4; ++k) gc.uvws[k] = ring[p[k]];
    break;
  }
  return gc;
}

}  // namespace qtile
