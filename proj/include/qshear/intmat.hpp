// Integer-lattice and coset algebra: sublattices A*Z^2, spatial coset
// representatives, reciprocal (frequency) shift sets, and the numerical
// "frequency support" check.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "qshear/common.hpp"

namespace qshear {

// 2x2 integer matrix acting on Z^2. Lattice membership is decided exactly
// over the rationals, never in floating point.
struct IntMat2 {
  long long a11 = 1, a12 = 0, a21 = 0, a22 = 1;

  long long det() const { return a11 * a22 - a12 * a21; }

  Vec2i apply(const Vec2i& m) const {
    return {a11 * m.x + a12 * m.y, a21 * m.x + a22 * m.y};
  }
  Vec2 apply(const Vec2& v) const {
    return {double(a11) * v.x + double(a12) * v.y,
            double(a21) * v.x + double(a22) * v.y};
  }
  IntMat2 transpose() const { return {a11, a21, a12, a22}; }

  // v in A*Z^2  <=>  A*m = v has an integer solution (Cramer, exact).
  bool lattice_contains(const Vec2i& v) const {
    long long d = det();
    if (d == 0) throw std::invalid_argument("non-invertible dilation");
    long long n1 = a22 * v.x - a12 * v.y;
    long long n2 = -a21 * v.x + a11 * v.y;
    return n1 % d == 0 && n2 % d == 0;
  }
};

inline const IntMat2 kD2{2, 0, 0, 2};          // dyadic dilation, |det| = 4
inline const IntMat2 kQ{2, 2, -2, 2};          // quincunx dilation, |det| = 8

// Coset representatives of Z^2 modulo A*Z^2: exactly |det A| vectors, each the
// lexicographically smallest non-negative member of its coset, (0,0) first.
inline std::vector<Vec2i> coset_representatives(const IntMat2& A) {
  long long d = A.det();
  if (d == 0) throw std::invalid_argument("non-invertible dilation");
  long long q = std::llabs(d);
  std::vector<Vec2i> reps;
  long long span = 2 * q;  // bounding box certainly covering all cosets
  for (long long x = 0; x <= span && (long long)reps.size() < q; ++x)
    for (long long y = 0; y <= span && (long long)reps.size() < q; ++y) {
      Vec2i v{x, y};
      bool fresh = true;
      for (const auto& r : reps)
        if (A.lattice_contains({v.x - r.x, v.y - r.y})) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(v);
    }
  if ((long long)reps.size() != q)
    throw std::runtime_error("coset enumeration failed");
  std::sort(reps.begin() + 1, reps.end());
  return reps;
}

// Frequency shifts lambda_m in [0,2pi)^2 such that (1/2pi) A^T lambda_m are
// coset representatives of Z^2 modulo A^T Z^2; lexicographic order.
inline std::vector<Vec2> reciprocal_shift_set(const IntMat2& A) {
  long long d = A.det();
  if (d == 0) throw std::invalid_argument("non-invertible dilation");
  IntMat2 At = A.transpose();
  // lambda = 2pi (A^T)^{-1} n over integer n; keep those landing in [0,2pi)^2,
  // pairwise distinct mod 2pi Z^2 (equivalently n distinct mod A^T Z^2).
  long long q = std::llabs(d);
  std::vector<Vec2> shifts;
  std::vector<Vec2i> used;
  long long span = 4 * q;
  for (long long nx = -span; nx <= span; ++nx)
    for (long long ny = -span; ny <= span; ++ny) {
      // lambda = 2pi/d * adj(A^T) n
      long long l1 = At.a22 * nx - At.a12 * ny;
      long long l2 = -At.a21 * nx + At.a11 * ny;
      // need lambda/(2pi) = (l1/d, l2/d) in [0,1)^2
      double f1 = double(l1) / double(d), f2 = double(l2) / double(d);
      if (f1 < 0.0 || f1 >= 1.0 || f2 < 0.0 || f2 >= 1.0) continue;
      Vec2i n{nx, ny};
      bool fresh = true;
      for (const auto& u : used)
        if (At.lattice_contains({n.x - u.x, n.y - u.y})) {
          fresh = false;
          break;
        }
      if (!fresh) continue;
      used.push_back(n);
      shifts.push_back({two_pi * f1, two_pi * f2});
    }
  if ((long long)shifts.size() != q)
    throw std::runtime_error("reciprocal shift enumeration failed");
  std::sort(shifts.begin(), shifts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return shifts;
}

// Lemma 2 residual: max_n |sum_m exp(i lambda_m . lt_n)| over n = 1..q-1.
inline double verify_shift_duality(const std::vector<Vec2>& freq,
                                   const std::vector<Vec2i>& spatial) {
  if (freq.size() != spatial.size())
    throw std::invalid_argument("mismatched shift set lengths");
  double worst = 0.0;
  for (size_t n = 1; n < spatial.size(); ++n) {
    cplx s = 0.0;
    for (const auto& l : freq)
      s += std::exp(cplx(0.0, l.x * double(spatial[n].x) +
                              l.y * double(spatial[n].y)));
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

struct FrequencySupportReport {
  double diag_value = 0.0;
  double expected = 0.0;
  double max_offdiag = 0.0;
};

// Midpoint-rule check of the frequency-support property of a region against
// the lattice A*Z^2: integrals of e^{i n.xi} over the region for n = A m.
inline FrequencySupportReport is_frequency_support(
    const std::function<bool(const Vec2&)>& region_member, const IntMat2& A,
    int n_max, int quad_n) {
  if (A.det() == 0) throw std::invalid_argument("non-invertible dilation");
  if (quad_n < 4) throw std::invalid_argument("quad_n too small");
  double h = two_pi / quad_n;
  std::vector<Vec2> pts;
  pts.reserve(size_t(quad_n) * 8);
  for (int i = 0; i < quad_n; ++i)
    for (int j = 0; j < quad_n; ++j) {
      Vec2 xi{-pi + (i + 0.5) * h, -pi + (j + 0.5) * h};
      if (region_member(xi)) pts.push_back(xi);
    }
  if (pts.empty()) throw std::invalid_argument("empty region");
  FrequencySupportReport rep;
  rep.diag_value = double(pts.size()) * h * h;
  rep.expected = two_pi * two_pi / double(std::llabs(A.det()));
  for (int mx = -n_max; mx <= n_max; ++mx)
    for (int my = -n_max; my <= n_max; ++my) {
      if (mx == 0 && my == 0) continue;
      Vec2i n = A.apply(Vec2i{mx, my});
      cplx s = 0.0;
      for (const auto& xi : pts)
        s += std::exp(cplx(0.0, double(n.x) * xi.x + double(n.y) * xi.y));
      rep.max_offdiag = std::max(rep.max_offdiag, std::abs(s) * h * h);
    }
  return rep;
}

}  // namespace qshear
