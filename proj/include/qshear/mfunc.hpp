// The M-function families: Shannon indicators, the smoothed orthonormal
// quasi-shearlet design (pairwise boundary smoothing + integer phases), and
// the dyadic tight-frame variant with corner bands.
//
// Evaluation contract (all variants): 2pi-biperiodic, |M_j| <= 1,
// M_j(-xi) = conj(M_j(xi)), M_0(0)=1, and on every sampling grid with
// 4 | N the identity summation and shift cancellation conditions hold to
// roundoff. Sharp boundaries carry half-open ownership; at the finitely many
// lattice points fixed by a shift involution (multiples of pi/2, and the
// radial-line midpoints at odd multiples of pi/4) no 0/1 assignment can
// satisfy identity + cancellation + Hermitian symmetry at once, so those
// samples take the unitary split values listed in special_table().
#pragma once

#include <map>
#include <optional>

#include "qshear/intmat.hpp"
#include "qshear/partition.hpp"
#include "qshear/region.hpp"

namespace qshear {

struct SmoothingConfig {
  double epsilon = pi / 24;  // transition half-width
  double delta = pi / 24;    // endpoint taper length
  std::string profile = "meyer";
};

inline void validate_config(const SmoothingConfig& cfg) {
  if (!(cfg.epsilon > 0.0) || !(cfg.epsilon <= pi / 12))
    throw std::invalid_argument("epsilon out of range (0, pi/12]");
  if (!(cfg.delta > 0.0) || !(cfg.delta <= cfg.epsilon))
    throw std::invalid_argument("delta out of range (0, epsilon]");
  if (cfg.profile != "meyer")
    throw std::invalid_argument("unknown profile: " + cfg.profile);
  // Transition cones at shared vertices have half-angle atan(eps/delta);
  // neighboring lenses meet at 108.4 degrees, so the cones collide unless
  // eps/delta stays close to 1.
  if (cfg.epsilon / cfg.delta > 1.25)
    throw std::invalid_argument("triple overlap");
}

// Transition strip around a boundary segment. d = ndir.(xi - base) is the
// signed crossing coordinate, u = tdir.(xi - base) the position along the
// segment; the half-width tapers to zero at both endpoints so neighboring
// strips meet only at vertices.
struct Lens {
  Vec2 base, tdir, ndir;
  double ua = 0, ub = 0;
  int jneg = 0, jpos = 0;  // channels on the d<0 / d>0 sides
  double eps = 0, delta = 0;

  double eff_width(double u) const {
    double m = std::min({1.0, (u - ua) / delta, (ub - u) / delta});
    return eps * std::max(0.0, m);
  }
};

struct LensValue {
  int jneg, jpos;
  double vneg, vpos;
};

namespace detail {

inline std::optional<LensValue> lens_value(const Lens& L, const Vec2& q) {
  // Strip membership is open with a small guard: taper-cone edges of the
  // slope +-1 strips run exactly along grid lines, and exact-boundary
  // samples must fall to the sharp ownership rules deterministically.
  constexpr double guard = 1e-9;
  Vec2 r = q - L.base;
  double u = L.tdir.dot(r);
  if (u <= L.ua + guard || u >= L.ub - guard) return std::nullopt;
  double w = L.eff_width(u);
  double d = L.ndir.dot(r);
  if (std::abs(d) >= w - guard) return std::nullopt;
  double x = 0.5 * (d / w + 1.0);
  return LensValue{L.jneg, L.jpos, ramp_cos(x), ramp_sin(x)};
}

// Canonical lens list; the mirror images are obtained by evaluating at -xi
// (the real profiles are even, the channel pairs are symmetric).
inline std::vector<Lens> canonical_lenses(const SmoothingConfig& cfg,
                                          bool with_diagonals) {
  const double e = cfg.epsilon, dl = cfg.delta;
  const double s10 = std::sqrt(10.0), s2 = std::sqrt(2.0);
  std::vector<Lens> out;
  // S1 edge middle thirds: (0,5) across x=+-pi/2, (0,2) across y=+-pi/2.
  out.push_back({{pi / 2, 0}, {0, 1}, {-1, 0}, -pi / 6, pi / 6, 5, 0, e, dl});
  out.push_back({{0, pi / 2}, {1, 0}, {0, 1}, -pi / 6, pi / 6, 0, 2, e, dl});
  // Radial ring segments; spans are radii along the line through the origin.
  auto radial = [&](double tx, double ty, double nx, double ny, int jn,
                    int jp, double ra, double rb) {
    out.push_back({{0, 0}, {tx, ty}, {nx, ny}, ra, rb, jn, jp, e, dl});
  };
  if (with_diagonals) {
    radial(1 / s2, 1 / s2, -1 / s2, 1 / s2, 4, 3, pi / s2, pi * s2);    // r+
    radial(1 / s2, -1 / s2, 1 / s2, 1 / s2, 1, 6, pi / s2, pi * s2);    // m-
  }
  const double ri = pi * s10 / 6, ro = pi * s10 / 3;
  radial(3 / s10, 1 / s10, -1 / s10, 3 / s10, 5, 4, ri, ro);            // g+
  radial(3 / s10, -1 / s10, 1 / s10, 3 / s10, 6, 5, ri, ro);            // h+
  radial(1 / s10, 3 / s10, -3 / s10, 1 / s10, 3, 2, ri, ro);            // u+
  radial(-1 / s10, 3 / s10, -3 / s10, -1 / s10, 2, 1, ri, ro);          // v+
  return out;
}

// Unitary sample conventions at the lattice-special points, keyed by
// coordinates quantized to pi/4. Each entry lists (channel, value).
inline const std::map<std::pair<int, int>, std::vector<std::pair<int, cplx>>>&
special_table() {
  static const auto table = [] {
    std::map<std::pair<int, int>, std::vector<std::pair<int, cplx>>> t;
    const double r = 1.0 / std::sqrt(2.0);
    const cplx I(0.0, 1.0);
    // S1 corners: {0,3} on the ++/-- pair, {1,6} on the +-/-+ pair.
    t[{2, 2}] = {{0, r}, {3, I * r}};
    t[{-2, -2}] = {{0, r}, {3, -I * r}};
    t[{2, -2}] = {{1, r}, {6, I * r}};
    t[{-2, 2}] = {{1, r}, {6, -I * r}};
    // S1 edge midpoints (centers of the middle-third transitions).
    t[{2, 0}] = {{0, r}, {5, I * r}};
    t[{-2, 0}] = {{0, r}, {5, -I * r}};
    t[{0, 2}] = {{0, r}, {2, I * r}};
    t[{0, -2}] = {{0, r}, {2, -I * r}};
    // Seam midpoints (the unsmoothed (4,6)/(1,3) boundary centers).
    t[{-4, 2}] = {{4, -r}, {6, -I * r}};
    t[{-4, -2}] = {{4, -r}, {6, I * r}};
    t[{2, -4}] = {{1, r}, {3, -I * r}};
    t[{-2, -4}] = {{1, r}, {3, I * r}};
    // S0 corner (Nyquist checkerboard frequency).
    t[{-4, -4}] = {{4, 1.0}};
    // Radial midpoints, phase formula at the half-value point.
    t[{3, 3}] = {{3, r}, {4, -I * r}};
    t[{-3, -3}] = {{3, r}, {4, I * r}};
    t[{3, -3}] = {{1, r}, {6, I * r}};
    t[{-3, 3}] = {{1, r}, {6, -I * r}};
    t[{1, 3}] = {{2, -r}, {3, -I * r}};
    t[{-1, -3}] = {{2, -r}, {3, I * r}};
    t[{-1, 3}] = {{1, r}, {2, I * r}};
    t[{1, -3}] = {{1, r}, {2, -I * r}};
    t[{3, 1}] = {{4, I * r}, {5, -r}};
    t[{-3, -1}] = {{4, -I * r}, {5, -r}};
    t[{3, -1}] = {{5, I * r}, {6, -r}};
    t[{-3, 1}] = {{5, -I * r}, {6, -r}};
    return t;
  }();
  return table;
}

inline std::optional<std::pair<int, int>> quantize_quarter(const Vec2& p) {
  auto q = [](double x) -> std::optional<int> {
    double s = x / (pi / 4);
    double r = std::round(s);
    if (std::abs(s - r) > 1e-9) return std::nullopt;
    int k = int(r);
    if (k == 4) k = -4;
    return k;
  };
  auto qx = q(p.x), qy = q(p.y);
  if (!qx || !qy) return std::nullopt;
  return std::make_pair(*qx, *qy);
}

}  // namespace detail

enum class Variant { shannon, smooth_onb, tight_dyadic };

inline std::string variant_name(Variant v) {
  switch (v) {
    case Variant::shannon: return "shannon";
    case Variant::smooth_onb: return "smooth-onb";
    case Variant::tight_dyadic: return "tight-dyadic";
  }
  return "?";
}

inline Variant variant_from_name(const std::string& s) {
  if (s == "shannon") return Variant::shannon;
  if (s == "smooth-onb" || s == "smooth") return Variant::smooth_onb;
  if (s == "tight-dyadic" || s == "tight") return Variant::tight_dyadic;
  throw std::invalid_argument("unknown variant: " + s);
}

// Integer phase vectors of Prop-4 type; index 0..6.
inline std::array<Vec2i, 7> phase_solution() {
  return {Vec2i{0, 0}, {0, 0}, {1, 1}, {1, -1}, {0, 2}, {1, 1}, {-1, 1}};
}

inline double verify_phases(const std::array<Vec2i, 7>& eta,
                            const std::vector<BoundaryTriple>& triples) {
  if (triples.empty()) throw std::invalid_argument("empty triple set");
  double worst = 0.0;
  for (const auto& tr : triples) {
    Vec2i d{eta[tr.j1].x - eta[tr.j2].x, eta[tr.j1].y - eta[tr.j2].y};
    cplx z = std::exp(cplx(0.0, tr.shift.x * d.x + tr.shift.y * d.y));
    worst = std::max(worst, std::abs(z + 1.0));
  }
  return worst;
}

// The complete design artifact: seven 2pi-biperiodic evaluators plus the
// per-channel downsampling matrices.
struct MFunctionSet {
  Variant variant = Variant::shannon;
  SmoothingConfig cfg;
  std::array<Vec2i, 7> phases{};       // zero for shannon
  std::array<IntMat2, 7> downsampling;
  std::vector<Lens> lenses;            // empty for shannon

  // Tamper hooks for the negative controls; identity-preserving designs
  // keep scale = 1 and magnitudes_only = false.
  std::array<double, 7> channel_scale{1, 1, 1, 1, 1, 1, 1};
  bool magnitudes_only = false;

  // Tight-frame corner-band parameters (radians).
  double band_rho_dep = pi / 12;   // inward reach of the corner bands
  double band_rho_inf = pi / 8;    // width taper radius at the S0 corner
  double band_chi_halfwidth = 0;   // phase-ramp half-width along the loop

  std::array<cplx, 7> evaluate_all(const Vec2& xi) const {
    std::array<cplx, 7> vals{};
    const Vec2 p = wrap_pi(xi);
    bool from_table = false;
    if (auto key = detail::quantize_quarter(p)) {
      const auto& tbl = detail::special_table();
      auto it = tbl.find(*key);
      if (it != tbl.end() && table_applies(*key)) {
        for (const auto& [j, v] : it->second) vals[j] = v;
        from_table = true;
      }
    }
    if (!from_table) {
      bool handled = false;
      if (variant == Variant::tight_dyadic) handled = eval_band(p, vals);
      if (!handled) {
        for (const auto& L : lenses) {
          if (auto lv = detail::lens_value(L, p)) {
            vals[lv->jneg] = lv->vneg;
            vals[lv->jpos] = lv->vpos;
            handled = true;
            break;
          }
          Vec2 m = wrap_pi(-p);
          if (auto lv = detail::lens_value(L, m)) {  // mirror lens, even
            vals[lv->jneg] = lv->vneg;
            vals[lv->jpos] = lv->vpos;
            handled = true;
            break;
          }
        }
      }
      if (!handled) vals[locate(p)] = 1.0;
      for (int j = 0; j < 7; ++j)
        if (vals[j] != cplx(0.0) && (phases[j].x || phases[j].y))
          vals[j] *= std::exp(
              cplx(0.0, p.x * double(phases[j].x) + p.y * double(phases[j].y)));
    }
    for (int j = 0; j < 7; ++j) vals[j] *= channel_scale[j];
    if (magnitudes_only)
      for (auto& v : vals) v = std::abs(v);
    return vals;
  }

  cplx evaluate(int j, const Vec2& xi) const {
    if (j < 0 || j > 6) throw std::invalid_argument("bad channel index");
    return evaluate_all(xi)[j];
  }

 private:
  // Which table points are genuine discontinuities of this variant; at the
  // others the closed-form evaluator is continuous and takes over.
  bool table_applies(const std::pair<int, int>& key) const {
    if (variant == Variant::shannon) return true;
    auto [ax, ay] = std::pair{std::abs(key.first), std::abs(key.second)};
    bool corner = ax == 2 && ay == 2;
    bool seam_mid = (ax == 4 && ay == 2) || (ax == 2 && ay == 4);
    bool s0_corner = ax == 4 && ay == 4;
    if (variant == Variant::smooth_onb) return corner || seam_mid || s0_corner;
    return seam_mid || s0_corner;  // tight: corners are smooth
  }

  // Tight-frame diagonal bands through the S1 corners; see header comment.
  bool eval_band(const Vec2& p, std::array<cplx, 7>& vals) const {
    const double W0 = cfg.epsilon;
    auto band = [&](bool main_diag) -> bool {
      // main_diag: the y=x loop (channels 3/4 through corners ++/--);
      // else the y=-x loop (channels 1/6 through corners +-/-+).
      double diff = main_diag ? p.y - p.x : p.x + p.y;
      double k = std::round(diff / two_pi);
      double d = (diff - two_pi * k) / std::sqrt(2.0);
      if (std::abs(d) >= W0) return false;
      double t = main_diag ? 0.5 * (p.x + p.y) - pi * k
                           : 0.5 * (p.x - p.y) - pi * k;
      t = wrap_pi(t);
      double W = W0 * std::min(1.0, (pi - std::abs(t)) / band_rho_inf);
      if (std::abs(d) >= W) return false;
      double xd = 0.5 * (d / W + 1.0);
      if (t < 0) xd = 1.0 - xd;  // the channel side flips across the origin
      double F = 1.0;
      double depth = pi / 2 - std::max(std::abs(p.x), std::abs(p.y));
      if (depth > 0.0) {  // inside S1: M_0 takes over with increasing depth
        double dw = band_rho_dep * (1.0 - std::abs(d) / W);
        double xF = dw > 0.0 ? std::clamp(depth / dw, 0.0, 1.0) : 1.0;
        F = ramp_cos(xF);
        vals[0] = ramp_sin(xF);
      }
      double a = std::abs(t);
      double xc =
          std::clamp((a - (pi / 2 - band_chi_halfwidth)) /
                         (2.0 * band_chi_halfwidth),
                     0.0, 1.0);
      double chi = pi * meyer_beta(xc) * (t >= 0 ? 1.0 : -1.0);
      int hi = main_diag ? 3 : 6;   // channel on the xd=1 side
      int lo = main_diag ? 4 : 1;
      vals[hi] = F * ramp_sin(xd);
      vals[lo] = F * ramp_cos(xd);
      int flip = main_diag ? 4 : 6;  // carries the corner phase ramp
      vals[flip] *= std::exp(cplx(0.0, chi));
      return true;
    };
    if (band(true)) return true;
    return band(false);
  }
};

inline MFunctionSet shannon_design() {
  MFunctionSet s;
  s.variant = Variant::shannon;
  s.downsampling[0] = kD2;
  for (int j = 1; j < 7; ++j) s.downsampling[j] = kQ;
  return s;
}

inline MFunctionSet smoothed_onb_design(const SmoothingConfig& cfg = {}) {
  validate_config(cfg);
  MFunctionSet s;
  s.variant = Variant::smooth_onb;
  s.cfg = cfg;
  s.phases = phase_solution();
  s.downsampling[0] = kD2;
  for (int j = 1; j < 7; ++j) s.downsampling[j] = kQ;
  s.lenses = detail::canonical_lenses(cfg, /*with_diagonals=*/true);
  return s;
}

inline MFunctionSet tight_frame_design(const SmoothingConfig& cfg = {}) {
  validate_config(cfg);
  MFunctionSet s;
  s.variant = Variant::tight_dyadic;
  s.cfg = cfg;
  s.phases = phase_solution();
  for (int j = 0; j < 7; ++j) s.downsampling[j] = kD2;
  s.lenses = detail::canonical_lenses(cfg, /*with_diagonals=*/false);
  s.band_chi_halfwidth = s.band_rho_dep + 2.0 * cfg.epsilon;
  return s;
}

// Tampered copies for the negative controls.
inline MFunctionSet scale_channel(MFunctionSet s, int j, double factor) {
  if (j < 0 || j > 6) throw std::invalid_argument("bad channel index");
  s.channel_scale[j] *= factor;
  return s;
}
inline MFunctionSet zero_phases(MFunctionSet s) {
  s.magnitudes_only = true;
  return s;
}

// grid[k1][k2] = M_j(-pi + 2 pi k1/N, -pi + 2 pi k2/N), row-major.
inline std::vector<cplx> sample_grid(const MFunctionSet& set, int j, int N) {
  if (j < 0 || j > 6) throw std::invalid_argument("bad channel index");
  if (N < 4 || N % 4 != 0)
    throw std::invalid_argument("grid size must be a multiple of 4");
  std::vector<cplx> g(size_t(N) * N);
  for (int k1 = 0; k1 < N; ++k1)
    for (int k2 = 0; k2 < N; ++k2)
      g[size_t(k1) * N + k2] =
          set.evaluate(j, {-pi + two_pi * k1 / N, -pi + two_pi * k2 / N});
  return g;
}

// All seven channels in one pass (shared geometry work).
inline std::array<std::vector<cplx>, 7> sample_all_grids(
    const MFunctionSet& set, int N) {
  if (N < 4 || N % 4 != 0)
    throw std::invalid_argument("grid size must be a multiple of 4");
  std::array<std::vector<cplx>, 7> g;
  for (auto& v : g) v.resize(size_t(N) * N);
  for (int k1 = 0; k1 < N; ++k1)
    for (int k2 = 0; k2 < N; ++k2) {
      auto vals =
          set.evaluate_all({-pi + two_pi * k1 / N, -pi + two_pi * k2 / N});
      for (int j = 0; j < 7; ++j) g[j][size_t(k1) * N + k2] = vals[j];
    }
  return g;
}

}  // namespace qshear
