#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "qshear/intmat.hpp"
#include "qshear/region.hpp"

using namespace qshear;

namespace {
// Independent oracle: every point of a box belongs to exactly one coset
// A*Z^2 + rep, deciding membership by brute-force enumeration of A*m.
bool covers_box_once(const IntMat2& A, const std::vector<Vec2i>& reps,
                     int box) {
  std::set<std::pair<long long, long long>> lattice;
  for (long long mx = -4 * box; mx <= 4 * box; ++mx)
    for (long long my = -4 * box; my <= 4 * box; ++my) {
      auto v = A.apply(Vec2i{mx, my});
      lattice.insert({v.x, v.y});
    }
  for (long long x = -box; x <= box; ++x)
    for (long long y = -box; y <= box; ++y) {
      int owners = 0;
      for (const auto& r : reps)
        if (lattice.count({x - r.x, y - r.y})) ++owners;
      if (owners != 1) return false;
    }
  return true;
}
}  // namespace

TEST_CASE("coset representatives") {
  SECTION("identity matrix has the single trivial coset") {
    auto reps = coset_representatives(IntMat2{1, 0, 0, 1});
    REQUIRE(reps.size() == 1);
    CHECK(reps[0] == Vec2i{0, 0});
  }
  SECTION("D2 cosets") {
    auto reps = coset_representatives(kD2);
    REQUIRE(reps.size() == 4);
    CHECK(reps[0] == Vec2i{0, 0});
    std::set<std::pair<long long, long long>> got;
    for (auto& r : reps) got.insert({r.x, r.y});
    std::set<std::pair<long long, long long>> want{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(got == want);
  }
  SECTION("Q cosets: brute-force membership rule") {
    auto reps = coset_representatives(kQ);
    REQUIRE(reps.size() == 8);
    CHECK(reps[0] == Vec2i{0, 0});
    // membership rule (x,y) in Q Z^2 iff x,y even and x+y = 0 mod 4,
    // itself verified against direct enumeration
    for (long long x = -8; x <= 8; ++x)
      for (long long y = -8; y <= 8; ++y) {
        bool rule = (x % 2 == 0) && (y % 2 == 0) && ((x + y) % 4 == 0);
        CHECK(kQ.lattice_contains({x, y}) == rule);
      }
    CHECK(covers_box_once(kQ, reps, 8));
  }
  SECTION("box covering for all test dilations") {
    for (const IntMat2& A :
         {kD2, kQ, IntMat2{1, 1, -1, 1}, IntMat2{2, 0, 0, 1}}) {
      auto reps = coset_representatives(A);
      CHECK((long long)reps.size() == std::llabs(A.det()));
      CHECK(covers_box_once(A, reps, 8));
    }
  }
  SECTION("singular matrix rejected") {
    CHECK_THROWS_AS(coset_representatives(IntMat2{1, 2, 2, 4}),
                    std::invalid_argument);
  }
}

TEST_CASE("reciprocal shift sets") {
  SECTION("D2 gives Gamma") {
    auto g = reciprocal_shift_set(kD2);
    REQUIRE(g.size() == 4);
    std::set<std::pair<double, double>> got;
    for (auto& v : g) got.insert({v.x, v.y});
    std::vector<Vec2> want{{0, 0}, {0, pi}, {pi, 0}, {pi, pi}};
    for (auto& w : want) {
      bool found = false;
      for (auto& v : g)
        if (std::abs(v.x - w.x) < 1e-12 && std::abs(v.y - w.y) < 1e-12)
          found = true;
      CHECK(found);
    }
  }
  SECTION("Q gives Lambda") {
    auto l = reciprocal_shift_set(kQ);
    REQUIRE(l.size() == 8);
    std::vector<Vec2> want{{pi / 2, pi / 2},     {3 * pi / 2, pi / 2},
                           {pi / 2, 3 * pi / 2}, {3 * pi / 2, 3 * pi / 2},
                           {0, 0},               {0, pi},
                           {pi, 0},              {pi, pi}};
    for (auto& w : want) {
      bool found = false;
      for (auto& v : l)
        if (std::abs(v.x - w.x) < 1e-12 && std::abs(v.y - w.y) < 1e-12)
          found = true;
      CHECK(found);
    }
  }
  SECTION("identity") {
    auto s = reciprocal_shift_set(IntMat2{1, 0, 0, 1});
    REQUIRE(s.size() == 1);
    CHECK(std::abs(s[0].x) + std::abs(s[0].y) < 1e-15);
  }
  SECTION("images (1/2pi) A^T lambda are pairwise distinct mod A^T Z^2") {
    for (const IntMat2& A :
         {kD2, kQ, IntMat2{1, 1, -1, 1}, IntMat2{2, 0, 0, 1}}) {
      auto l = reciprocal_shift_set(A);
      IntMat2 At = A.transpose();
      for (size_t i = 0; i < l.size(); ++i)
        for (size_t k = i + 1; k < l.size(); ++k) {
          Vec2 d = At.apply(l[i] - l[k]);
          Vec2i n{(long long)std::llround(d.x / two_pi),
                  (long long)std::llround(d.y / two_pi)};
          REQUIRE(std::abs(d.x / two_pi - n.x) < 1e-9);
          REQUIRE(std::abs(d.y / two_pi - n.y) < 1e-9);
          CHECK_FALSE(At.lattice_contains(n));
        }
    }
  }
}

TEST_CASE("shift duality (Lemma 2)") {
  CHECK(verify_shift_duality(reciprocal_shift_set(kD2),
                             coset_representatives(kD2)) < 1e-12);
  CHECK(verify_shift_duality(reciprocal_shift_set(kQ),
                             coset_representatives(kQ)) < 1e-12);
  for (const IntMat2& A : {IntMat2{1, 1, -1, 1}, IntMat2{2, 0, 0, 1}})
    CHECK(verify_shift_duality(reciprocal_shift_set(A),
                               coset_representatives(A)) < 1e-12);
  SECTION("trivial single-shift case") {
    CHECK(verify_shift_duality({{0, 0}}, {{0, 0}}) == 0.0);
  }
  SECTION("mismatched lengths rejected") {
    CHECK_THROWS_AS(verify_shift_duality({{0, 0}}, {{0, 0}, {1, 0}}),
                    std::invalid_argument);
  }
}

TEST_CASE("frequency support check") {
  auto in_S0 = [](const Vec2&) { return true; };
  auto in_S1 = [](const Vec2& xi) { return locate(xi) == 0; };
  auto in_C5 = [](const Vec2& xi) { return locate(xi) == 5; };

  SECTION("S0 vs integer lattice") {
    auto rep = is_frequency_support(in_S0, IntMat2{1, 0, 0, 1}, 3, 1024);
    CHECK(rep.diag_value == Catch::Approx(two_pi * two_pi).epsilon(1e-9));
    CHECK(rep.max_offdiag <= 1e-3 * two_pi * two_pi);
  }
  SECTION("S1 vs D2") {
    auto rep = is_frequency_support(in_S1, kD2, 3, 1024);
    CHECK(rep.expected == Catch::Approx(pi * pi));
    CHECK(rep.diag_value == Catch::Approx(pi * pi).epsilon(1e-6));
    CHECK(rep.max_offdiag < 1e-9);
  }
  SECTION("C5 vs Q, quadrature converges") {
    auto r1 = is_frequency_support(in_C5, kQ, 3, 256);
    auto r2 = is_frequency_support(in_C5, kQ, 3, 512);
    CHECK(r1.expected == Catch::Approx(pi * pi / 2));
    CHECK(r2.diag_value == Catch::Approx(pi * pi / 2).epsilon(5e-3));
    CHECK((r2.max_offdiag < r1.max_offdiag / 1.8 || r2.max_offdiag < 1e-10));
  }
  SECTION("empty region rejected") {
    CHECK_THROWS_AS(
        is_frequency_support([](const Vec2&) { return false; }, kD2, 1, 16),
        std::invalid_argument);
  }
}
