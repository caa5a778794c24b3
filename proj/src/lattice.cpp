#include "qtile/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtile/products.hpp"

namespace qtile {

std::string to_string(const TriCoord& t) {
  return std::string(t.up ? "U" : "D") + "(" + std::to_string(t.x) + "," + std::to_string(t.y) + ")";
}

std::array<LatticePoint, 3> vertices(const TriCoord& t) {
  if (t.up) return {LatticePoint{t.x, t.y}, {t.x + 1, t.y}, {t.x, t.y + 1}};
  return {LatticePoint{t.x + 1, t.y}, {t.x, t.y + 1}, {t.x + 1, t.y + 1}};
}

std::array<TriCoord, 3> neighbors(const TriCoord& t) {
  if (t.up) return {TriCoord{t.x, t.y, false}, {t.x - 1, t.y, false}, {t.x, t.y - 1, false}};
  return {TriCoord{t.x, t.y, true}, {t.x + 1, t.y, true}, {t.x, t.y + 1, true}};
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::Left: return "left";
    case Orientation::Right: return "right";
    case Orientation::Horizontal: return "horizontal";
  }
  return "?";
}

Lozenge make_lozenge(const TriCoord& a, const TriCoord& b) {
  if (a.up == b.up) throw std::invalid_argument("lozenge needs one up and one down triangle");
  const TriCoord& up = a.up ? a : b;
  const TriCoord& down = a.up ? b : a;
  Orientation o;
  if (down.x == up.x && down.y == up.y)
    o = Orientation::Right;
  else if (down.x == up.x - 1 && down.y == up.y)
    o = Orientation::Horizontal;
  else if (down.x == up.x && down.y == up.y - 1)
    o = Orientation::Left;
  else
    throw std::invalid_argument("triangles " + to_string(a) + " and " + to_string(b) +
                                " do not share an edge");
  return {o, up, down};
}

namespace {

// Cartesian coordinates scaled by 2: (2x + y, y) times (1, sqrt 3) keeps
// orientation tests in integers.
long long cross(LatticePoint o, LatticePoint a, LatticePoint b) {
  long long ax = 2LL * (a.x - o.x) + (a.y - o.y), ay = a.y - o.y;
  long long bx = 2LL * (b.x - o.x) + (b.y - o.y), by = b.y - o.y;
  return ax * by - ay * bx;
}

std::array<LatticePoint, 6> hexagon_corners(const BoxBounds& b) {
  return {LatticePoint{0, -b.n}, {b.r, -b.n}, {b.r, 0}, {b.r - b.c, b.c}, {-b.c, b.c}, {-b.c, b.c - b.n}};
}

// Triangles whose centroid lies strictly inside the hexagon.
std::vector<TriCoord> triangles_inside(const BoxBounds& b) {
  std::vector<TriCoord> out;
  auto corners = hexagon_corners(b);
  int lo_x = -b.c - 1, hi_x = b.r + 1, lo_y = -b.n - 1, hi_y = b.c + 1;
  for (int x = lo_x; x <= hi_x; ++x) {
    for (int y = lo_y; y <= hi_y; ++y) {
      for (bool up : {false, true}) {
        TriCoord t{x, y, up};
        auto v = vertices(t);
        // Centroid times 3, compared against corners times 3.
        LatticePoint g{v[0].x + v[1].x + v[2].x, v[0].y + v[1].y + v[2].y};
        bool inside = true, any_edge = false;
        for (int k = 0; k < 6 && inside; ++k) {
          LatticePoint p{3 * corners[k].x, 3 * corners[k].y};
          LatticePoint q{3 * corners[(k + 1) % 6].x, 3 * corners[(k + 1) % 6].y};
          if (p == q) continue;
          any_edge = true;
          // The corner list is counter-clockwise in these coordinates (the
          // rendered picture mirrors it).
          if (cross(p, q, g) <= 0) inside = false;
        }
        if (inside && any_edge) out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

HexagonRegion::HexagonRegion(const BoxBounds& b) : bounds_(b) {
  if (!b.valid()) throw std::invalid_argument("box bounds must be non-negative");
  triangles_ = triangles_inside(b);
}

bool HexagonRegion::contains(const TriCoord& t) const {
  return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

std::array<LatticePoint, 6> HexagonRegion::corners() const { return hexagon_corners(bounds_); }

bool HexagonRegion::on_axis(const Lozenge& l) const {
  return l.orientation == Orientation::Horizontal && l.up.x == 0;
}

HexagonRegion HexagonRegion::without(const std::vector<TriCoord>& ts) const {
  HexagonRegion r = *this;
  for (const auto& t : ts) {
    if (!r.contains(t)) throw std::invalid_argument("triangle " + to_string(t) + " is not in the region");
    r.removed_.insert(t);
    r.triangles_.erase(std::lower_bound(r.triangles_.begin(), r.triangles_.end(), t));
  }
  return r;
}

std::vector<TriCoord> hexagon_triangles(const BoxBounds& b, LatticePoint offset) {
  auto ts = triangles_inside(b);
  for (auto& t : ts) {
    t.x += offset.x;
    t.y += offset.y;
  }
  return ts;
}

std::optional<LatticePoint> match_translate(const HexagonRegion& region, const BoxBounds& target) {
  auto base = hexagon_triangles(target);
  const auto& ts = region.triangles();
  if (base.size() != ts.size()) return std::nullopt;
  if (base.empty()) return LatticePoint{};
  // Both lists are sorted and translation preserves the order.
  LatticePoint off{ts[0].x - base[0].x, ts[0].y - base[0].y};
  for (std::size_t k = 0; k < ts.size(); ++k)
    if (ts[k] != TriCoord{base[k].x + off.x, base[k].y + off.y, base[k].up}) return std::nullopt;
  return off;
}

LozengeTiling::LozengeTiling(HexagonRegion region, std::vector<Lozenge> lozenges)
    : region_(std::move(region)), lozenges_(std::move(lozenges)) {
  std::sort(lozenges_.begin(), lozenges_.end());
  for (int k = 0; k < static_cast<int>(lozenges_.size()); ++k) {
    const auto& l = lozenges_[k];
    for (const auto& t : {l.up, l.down}) {
      if (!region_.contains(t))
        throw std::invalid_argument("lozenge covers " + to_string(t) + " outside the region");
      by_triangle_.push_back({t, k});
    }
  }
  std::sort(by_triangle_.begin(), by_triangle_.end());
  for (std::size_t k = 1; k < by_triangle_.size(); ++k)
    if (by_triangle_[k].first == by_triangle_[k - 1].first)
      throw std::invalid_argument("lozenges overlap at " + to_string(by_triangle_[k].first));
  if (by_triangle_.size() != region_.triangles().size())
    throw std::invalid_argument("lozenges leave part of the region uncovered");
}

const Lozenge* LozengeTiling::covering(const TriCoord& t) const {
  auto it = std::lower_bound(by_triangle_.begin(), by_triangle_.end(), std::pair<TriCoord, int>{t, -1});
  if (it == by_triangle_.end() || it->first != t) return nullptr;
  return &lozenges_[it->second];
}

int LozengePath::horizontal_count() const {
  int k = 0;
  for (const auto& s : steps)
    if (s.lozenge.orientation == Orientation::Horizontal) ++k;
  return k;
}

LozengeTiling pp_to_tiling(const PlanePartition& pi, const BoxBounds& b) {
  if (!b.valid()) throw std::invalid_argument("box bounds must be non-negative");
  if (!pi.fits(b)) throw std::invalid_argument("plane partition does not fit in box " + to_string(b));
  auto proj = [](int i, int j, int h) { return LatticePoint{i - j, j - h}; };
  std::vector<Lozenge> ls;
  // Column tops.
  for (int i = 0; i < b.r; ++i)
    for (int j = 0; j < b.c; ++j) {
      auto p = proj(i, j, pi.at(i, j));
      ls.push_back({Orientation::Horizontal, {p.x, p.y, true}, {p.x - 1, p.y, false}});
    }
  // Walls facing +x: the face {x = #rows of column j above z} for each (j, z).
  for (int j = 0; j < b.c; ++j)
    for (int z = 0; z < b.n; ++z) {
      int cnt = 0;
      while (cnt < b.r && pi.at(cnt, j) > z) ++cnt;
      auto p = proj(cnt, j, z);
      ls.push_back({Orientation::Left, {p.x - 1, p.y, true}, {p.x - 1, p.y - 1, false}});
    }
  // Walls facing +y.
  for (int i = 0; i < b.r; ++i)
    for (int z = 0; z < b.n; ++z) {
      int cnt = 0;
      while (cnt < b.c && pi.at(i, cnt) > z) ++cnt;
      auto p = proj(i, cnt, z);
      ls.push_back({Orientation::Right, {p.x, p.y - 1, true}, {p.x, p.y - 1, false}});
    }
  return LozengeTiling(HexagonRegion(b), std::move(ls));
}

std::vector<LozengePath> tiling_to_paths(const LozengeTiling& t) {
  const auto& region = t.region();
  if (!region.is_full()) throw std::invalid_argument("lozenge paths need the full hexagon");
  const BoxBounds& b = region.bounds();
  std::vector<LozengePath> paths;
  for (int i = 0; i < b.r; ++i) {
    LozengePath path;
    path.index = i + 1;
    // Rung = lattice edge (x,y)-(x+1,y) crossing the strip of row i. The
    // walk starts on the north-west side and each step moves one rung on.
    LatticePoint rung{i, -b.n};
    int height = b.n;
    for (int step = 0; step < b.c + b.n; ++step) {
      const Lozenge* l = t.covering(TriCoord{rung.x, rung.y, true});
      if (l == nullptr) throw std::logic_error("lozenge path left the region");
      path.steps.push_back({*l, height});
      if (l->orientation == Orientation::Horizontal) {
        rung = {rung.x - 1, rung.y + 1};
      } else if (l->orientation == Orientation::Right) {
        rung = {rung.x, rung.y + 1};
        --height;
      } else {
        throw std::logic_error("lozenge path met a left lozenge");
      }
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

PlanePartition tiling_to_pp(const LozengeTiling& t) {
  if (!t.region().is_full()) throw std::invalid_argument("tiling_to_pp needs the full hexagon");
  const BoxBounds& b = t.region().bounds();
  std::vector<std::vector<int>> rows;
  for (const auto& path : tiling_to_paths(t)) {
    std::vector<int> row;
    for (const auto& s : path.steps)
      if (s.lozenge.orientation == Orientation::Horizontal) row.push_back(s.height);
    rows.push_back(std::move(row));
  }
  return PlanePartition(rows, b);
}

int depth(const LozengeTiling& t, const Lozenge& l) {
  if (l.orientation != Orientation::Horizontal) throw std::invalid_argument("depth needs a horizontal lozenge");
  const int n = t.region().bounds().n;
  for (const auto& path : tiling_to_paths(t))
    for (const auto& s : path.steps)
      if (s.lozenge == l) return n - s.height + (path.index - 1);
  throw std::invalid_argument("lozenge is not part of the tiling");
}

int positional_depth(const HexagonRegion& region, const Lozenge& l) {
  if (l.orientation != Orientation::Horizontal)
    throw std::invalid_argument("positional_depth needs a horizontal lozenge");
  return region.bounds().n + l.up.x + l.up.y;
}

int geometric_depth(const HexagonRegion& region, const Lozenge& l) {
  if (l.orientation != Orientation::Horizontal)
    throw std::invalid_argument("geometric_depth needs a horizontal lozenge");
  // The side from N to the upper E corner runs along direction (-1, 1);
  // count parallel lattice lines between it and the top vertex of l.
  const LatticePoint north = region.north_vertex();
  const LatticePoint top{l.up.x, l.up.y};
  const LatticePoint dir{-1, 1};
  long long c = static_cast<long long>(dir.x) * (top.y - north.y) - static_cast<long long>(dir.y) * (top.x - north.x);
  return static_cast<int>(c < 0 ? -c : c);
}

BiPoly natural_weight(const LozengeTiling& t) {
  int ea = 0, eq = 0;
  for (const auto& path : tiling_to_paths(t)) {
    for (const auto& s : path.steps) {
      if (s.lozenge.orientation != Orientation::Horizontal) continue;
      eq += s.height;
      if (t.region().on_axis(s.lozenge)) ea += s.height;
    }
  }
  return BiPoly::monomial(ea, eq);
}

QRational wt_weight(const HexagonRegion& region, const Lozenge& l) {
  if (l.orientation != Orientation::Horizontal) return QRational(1);
  const int t = positional_depth(region, l);
  if (!region.on_axis(l)) return QRational::monomial(0, -t);
  const int n = region.bounds().n;
  return QRational::monomial(-t, -t) * poch(0, n, -1, n - t) / poch(1, n, -1, n - t);
}

QRational tiling_wt(const LozengeTiling& t) {
  QRational w(1);
  for (const auto& l : t.lozenges()) w *= wt_weight(t.region(), l);
  return w;
}

QRational tiling_gen_fn(const BoxBounds& b) {
  QSum sum;
  for_each_in_box(b, [&](const PlanePartition& pi) { sum.add(tiling_wt(pp_to_tiling(pi, b))); });
  return sum.total();
}

LemmaCheck lemma_check(const PlanePartition& pi, const BoxBounds& b) {
  const QRational wt = tiling_wt(pp_to_tiling(pi, b));
  const QRational A = lemma_factor_A(b);
  const QRational stats = QRational::monomial(static_cast<int>(trace(pi)), static_cast<int>(norm(pi))) *
                          kamioka_weight(pi, b.n);
  const QRational printed_rhs = lemma_monomial(b, LemmaExponent::AsPrinted) * stats;
  LemmaCheck res;
  res.holds_as_printed = A * wt == printed_rhs;
  res.holds_corrected = wt == A * lemma_monomial(b, LemmaExponent::Corrected) * stats;
  res.prefactor = A * wt / stats;
  res.residual = A * wt / printed_rhs;
  return res;
}

}  // namespace qtile
