// Boundary classification of the frequency partition: overlap sets B(j,nu),
// exclusive sets C(j,nu), and the regular/singular split of the partition
// boundaries. The classification itself is combinatorial and is carried out
// in exact rational arithmetic (coordinates as fractions of pi), so it cannot
// depend on float noise; epsilon only selects the neighborhood regime and is
// validated against its legal range.
#pragma once

#include <map>
#include <numeric>
#include <optional>

#include "qshear/region.hpp"

namespace qshear {

struct BoundaryTriple {
  int j1 = 0, j2 = 0;  // j1 < j2
  Vec2 shift;          // canonical representative of {nu, -nu}
  bool operator<(const BoundaryTriple& o) const {
    if (j1 != o.j1) return j1 < o.j1;
    if (j2 != o.j2) return j2 < o.j2;
    if (std::abs(shift.x - o.shift.x) > 1e-12) return shift.x < o.shift.x;
    return shift.y < o.shift.y - 1e-12;
  }
};

namespace rational {

struct Rat {
  long long n = 0, d = 1;
  Rat() = default;
  Rat(long long n_, long long d_ = 1) : n(n_), d(d_) { norm(); }
  void norm() {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(std::llabs(n), d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }
  Rat operator+(const Rat& o) const { return Rat(n * o.d + o.n * d, d * o.d); }
  Rat operator-(const Rat& o) const { return Rat(n * o.d - o.n * d, d * o.d); }
  Rat operator*(const Rat& o) const { return Rat(n * o.n, d * o.d); }
  Rat operator-() const { return Rat(-n, d); }
  bool operator==(const Rat& o) const { return n == o.n && d == o.d; }
  bool operator<(const Rat& o) const { return n * o.d < o.n * d; }
  bool operator<=(const Rat& o) const { return n * o.d <= o.n * d; }
  double val() const { return double(n) / double(d); }
};

struct RVec {
  Rat x, y;
  RVec operator+(const RVec& o) const { return {x + o.x, y + o.y}; }
  RVec operator-(const RVec& o) const { return {x - o.x, y - o.y}; }
  bool operator==(const RVec& o) const { return x == o.x && y == o.y; }
};

// Oriented boundary segment with its two adjacent channels.
struct RSeg {
  RVec a, b;
  int c1 = 0, c2 = 0;  // adjacent channels, c1 < c2
};

inline Rat cross(const RVec& u, const RVec& v) { return u.x * v.y - u.y * v.x; }

// Wrap a scalar into [-1, 1) by even-integer shifts.
inline Rat wrap1(const Rat& r) {
  Rat t = r;
  while (!(Rat(-1) <= t)) t = t + Rat(2);
  while (t == Rat(1) || Rat(1) < t) t = t - Rat(2);
  return t;
}

// The 28 maximal boundary segments with constant adjacent-channel pair.
inline std::vector<RSeg> boundary_catalog() {
  std::vector<RSeg> segs;
  auto add = [&](Rat x1, Rat y1, Rat x2, Rat y2, int c1, int c2) {
    if (c1 > c2) std::swap(c1, c2);
    segs.push_back({{x1, y1}, {x2, y2}, c1, c2});
  };
  const Rat h(1, 2), s(1, 6), t3(1, 3), one(1);
  // S1 edges, split where the ring channel changes.
  add(h, -s, h, s, 0, 5);   add(h, s, h, h, 0, 4);    add(h, -h, h, -s, 0, 6);
  add(-h, -s, -h, s, 0, 5); add(-h, s, -h, h, 0, 6);  add(-h, -h, -h, -s, 0, 4);
  add(-s, h, s, h, 0, 2);   add(s, h, h, h, 0, 3);    add(-h, h, -s, h, 0, 1);
  add(-s, -h, s, -h, 0, 2); add(s, -h, h, -h, 0, 1);  add(-h, -h, -s, -h, 0, 3);
  // Radial ring segments (both components of each line).
  add(h, h, one, one, 3, 4);     add(-h, -h, -one, -one, 3, 4);
  add(h, -h, one, -one, 1, 6);   add(-h, h, -one, one, 1, 6);
  add(h, s, one, t3, 4, 5);      add(-h, -s, -one, -t3, 4, 5);
  add(h, -s, one, -t3, 5, 6);    add(-h, s, -one, t3, 5, 6);
  add(s, h, t3, one, 2, 3);      add(-s, -h, -t3, -one, 2, 3);
  add(-s, h, -t3, one, 1, 2);    add(s, -h, t3, -one, 1, 2);
  // Seam segments (wrapped representatives x = -1 resp. y = -1).
  add(-one, t3, -one, one, 4, 6);    add(-one, -one, -one, -t3, 4, 6);
  add(t3, -one, one, -one, 1, 3);    add(-one, -one, -t3, -one, 1, 3);
  return segs;
}

inline std::vector<RVec> lambda_shifts() {
  const Rat h(1, 2), th(3, 2), one(1), z(0);
  return {{z, one}, {one, z}, {one, one}, {h, h}, {h, th}, {th, h}, {th, th}};
}

// Split a rational segment at wrap lines (odd integers) and wrap each piece;
// returns pieces together with their parameter sub-intervals of [0,1].
struct Piece {
  RVec a, b;
  Rat t0, t1;
};

inline std::vector<Piece> wrap_split(const RVec& A, const RVec& B) {
  std::vector<Rat> cuts{Rat(0), Rat(1)};
  auto push_axis = [&](const Rat& p, const Rat& q) {
    if (p == q) return;
    Rat den = q - p;
    for (long long k = -5; k <= 5; ++k) {
      Rat c(2 * k + 1);
      Rat lo = p < q ? p : q, hi = p < q ? q : p;
      if (lo < c && c < hi) {
        Rat t = Rat((c - p).n * den.d, (c - p).d * den.n);
        cuts.push_back(t);
      }
    }
  };
  push_axis(A.x, B.x);
  push_axis(A.y, B.y);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Piece> out;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rat t0 = cuts[i], t1 = cuts[i + 1];
    auto at = [&](const Rat& t) -> RVec {
      return {A.x + (B.x - A.x) * t, A.y + (B.y - A.y) * t};
    };
    RVec pa = at(t0), pb = at(t1);
    // wrap by the midpoint's even-shift (no odd line inside the piece)
    Rat mx = (pa.x + pb.x) * Rat(1, 2), my = (pa.y + pb.y) * Rat(1, 2);
    Rat sx = wrap1(mx) - mx, sy = wrap1(my) - my;
    pa = {pa.x + sx, pa.y + sy};
    pb = {pb.x + sx, pb.y + sy};
    out.push_back({pa, pb, t0, t1});
  }
  return out;
}

// Collinear overlap of piece P with catalog segment S; if the overlap has
// positive length, returns the parameter sub-interval of P.
inline std::optional<std::pair<Rat, Rat>> collinear_overlap(const Piece& P,
                                                            const RSeg& S) {
  RVec dP = P.b - P.a, dS = S.b - S.a;
  if (!(cross(dP, dS) == Rat(0))) return std::nullopt;
  if (!(cross(dS, RVec{P.a.x - S.a.x, P.a.y - S.a.y}) == Rat(0)))
    return std::nullopt;
  // Parametrize S's endpoints in P's parameter: use the dominant axis of dP.
  bool use_x = !(dP.x == Rat(0));
  auto paramP = [&](const RVec& q) -> Rat {
    Rat num = use_x ? q.x - P.a.x : q.y - P.a.y;
    Rat den = use_x ? dP.x : dP.y;
    return Rat(num.n * den.d, num.d * den.n);
  };
  Rat sa = paramP(S.a), sb = paramP(S.b);
  Rat lo = sa < sb ? sa : sb, hi = sa < sb ? sb : sa;
  Rat l = Rat(0) < lo ? lo : Rat(0);
  Rat r = hi < Rat(1) ? hi : Rat(1);
  if (!(l < r)) return std::nullopt;
  // map back to the original segment's parameter range
  Rat span = P.t1 - P.t0;
  return std::make_pair(P.t0 + span * l, P.t0 + span * r);
}

}  // namespace rational

struct BoundarySegment {
  Vec2 a, b;  // radians
  int c1 = 0, c2 = 0;
};

struct BoundaryClassification {
  std::vector<BoundaryTriple> regular;             // the canonical triple set
  std::vector<BoundarySegment> regular_segments;   // pieces per triple order
  std::vector<BoundarySegment> singular;           // uncancellable pieces
};

// Classify every partition boundary segment as regular (smoothable via some
// shift pair) or singular. epsilon is validated but the outcome is epsilon-
// independent: the classification is combinatorial.
inline BoundaryClassification classify_boundaries(double epsilon) {
  using namespace rational;
  if (!(epsilon > 0.0) || !(epsilon < pi / 12))
    throw std::invalid_argument("epsilon out of range (0, pi/12)");
  auto catalog = boundary_catalog();
  auto shifts = lambda_shifts();
  BoundaryClassification out;
  std::map<std::tuple<int, int, long long, long long, long long, long long>,
           bool>
      seen;

  for (const auto& seg : catalog) {
    std::vector<std::pair<Rat, Rat>> regular_ivals;
    for (const auto& nu : shifts) {
      RVec A = seg.a + nu, B = seg.b + nu;
      for (const auto& piece : wrap_split(A, B)) {
        for (const auto& tau : catalog) {
          if (tau.c1 != seg.c1 || tau.c2 != seg.c2) continue;
          auto ov = collinear_overlap(piece, tau);
          if (!ov) continue;
          regular_ivals.push_back(*ov);
          // canonical shift representative: lex-min of {nu, -nu mod 2}
          Rat nx = wrap1(nu.x), ny = wrap1(nu.y);
          // represent shifts in [0,2)
          auto to02 = [](Rat r) {
            while (r < Rat(0)) r = r + Rat(2);
            while (Rat(2) <= r) r = r - Rat(2);
            return r;
          };
          Rat px = to02(nu.x), py = to02(nu.y);
          Rat qx = to02(-nu.x), qy = to02(-nu.y);
          bool keep_p = px < qx || (px == qx && (py < qy || py == qy));
          Rat cx = keep_p ? px : qx, cy = keep_p ? py : qy;
          auto key = std::make_tuple(seg.c1, seg.c2, cx.n, cx.d, cy.n, cy.d);
          if (!seen.count(key)) {
            seen[key] = true;
            out.regular.push_back(
                {seg.c1, seg.c2, Vec2{cx.val() * pi, cy.val() * pi}});
          }
          auto at = [&](const Rat& t) -> Vec2 {
            return {(seg.a.x + (seg.b.x - seg.a.x) * t).val() * pi,
                    (seg.a.y + (seg.b.y - seg.a.y) * t).val() * pi};
          };
          out.regular_segments.push_back(
              {at(ov->first), at(ov->second), seg.c1, seg.c2});
        }
      }
    }
    // complement of the union of regular intervals -> singular pieces
    std::sort(regular_ivals.begin(), regular_ivals.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    Rat cur(0);
    auto emit = [&](const Rat& t0, const Rat& t1) {
      if (!(t0 < t1)) return;
      auto at = [&](const Rat& t) -> Vec2 {
        return {(seg.a.x + (seg.b.x - seg.a.x) * t).val() * pi,
                (seg.a.y + (seg.b.y - seg.a.y) * t).val() * pi};
      };
      out.singular.push_back({at(t0), at(t1), seg.c1, seg.c2});
    };
    for (const auto& iv : regular_ivals) {
      if (cur < iv.first) emit(cur, iv.first);
      if (cur < iv.second) cur = iv.second;
    }
    emit(cur, Rat(1));
  }
  std::sort(out.regular.begin(), out.regular.end());
  return out;
}

// Support predicates used by the overlap/exclusive sets.
inline std::function<bool(int, const Vec2&)> sharp_supports() {
  return [](int j, const Vec2& xi) { return closed_contains(j, xi); };
}
inline std::function<bool(int, const Vec2&)> enlarged_supports(double eps) {
  return [eps](int j, const Vec2& xi) { return region_distance(j, xi) <= eps; };
}

// B(j,nu) = supp(M_j) cap (supp(M_j) - nu), as a derived region.
inline Region overlap_set(
    int j, const Vec2& nu,
    const std::function<bool(int, const Vec2&)>& supports = sharp_supports()) {
  if (j < 0 || j > 6) throw std::invalid_argument("bad region index");
  Region r;
  r.kind = Region::Kind::derived;
  r.membership = [j, nu, supports](const Vec2& xi) {
    return supports(j, xi) && supports(j, wrap_pi(xi + nu));
  };
  return r;
}

// C(j,nu) = B(j,nu) \ union_{j' != j} B(j',nu).
inline Region exclusive_set(
    int j, const Vec2& nu,
    const std::function<bool(int, const Vec2&)>& supports = sharp_supports()) {
  if (j < 0 || j > 6) throw std::invalid_argument("bad region index");
  Region r;
  r.kind = Region::Kind::derived;
  r.membership = [j, nu, supports](const Vec2& xi) {
    if (!(supports(j, xi) && supports(j, wrap_pi(xi + nu)))) return false;
    for (int k = 0; k <= 6; ++k) {
      if (k == j) continue;
      if (supports(k, xi) && supports(k, wrap_pi(xi + nu))) return false;
    }
    return true;
  };
  return r;
}

// Monte-Carlo-free area estimate of a predicate on a midpoint grid.
inline double grid_measure(const std::function<bool(const Vec2&)>& pred,
                           int n) {
  long long count = 0;
  double h = two_pi / n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (pred({-pi + (i + 0.5) * h, -pi + (k + 0.5) * h})) ++count;
  return double(count) * h * h;
}

}  // namespace qshear
