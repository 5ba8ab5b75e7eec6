#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cones/core.hpp"
#include "oracle_helpers.hpp"

using namespace cones;

namespace {

PointVec orthant_pt(ConePtr c, std::initializer_list<double> vals) {
  Vector v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v(i++) = x;
  return make_point(std::move(c), v);
}

constexpr double kLog2 = 0.6931471805599453;
constexpr double kLog3 = 1.0986122886681098;
constexpr double kLog4 = 1.3862943611198906;

}  // namespace

TEST_CASE("order bounds on the orthant match the bisection oracle") {
  auto c = ConeHandle::orthant(2);
  auto x = orthant_pt(c, {1, 2});
  auto y = orthant_pt(c, {2, 1});
  auto b = order_bounds(x, y);
  REQUIRE(b.comparable);
  CHECK(b.M == Catch::Approx(2.0).epsilon(1e-14));
  CHECK(b.m == Catch::Approx(0.5).epsilon(1e-14));

  auto brute = oracle::orthant_bounds_bisect(x.coords, y.coords);
  CHECK(std::abs(brute.big - b.M) < 1e-10);
  CHECK(std::abs(brute.small - b.m) < 1e-10);

  auto g = oracle::rng(101);
  for (int t = 0; t < 50; ++t) {
    auto u = make_point(c, oracle::random_interior_orthant(g, 2));
    auto v = make_point(c, oracle::random_interior_orthant(g, 2));
    auto ob = order_bounds(u, v);
    auto bb = oracle::orthant_bounds_bisect(u.coords, v.coords);
    CHECK(std::abs(ob.M - bb.big) < 1e-9 * bb.big);
    CHECK(std::abs(ob.m - bb.small) < 1e-9 * bb.small);
  }
}

TEST_CASE("order bounds identity and incomparable cases") {
  auto c = ConeHandle::orthant(3);
  auto x = orthant_pt(c, {0.3, 1.1, 2.0});
  auto b = order_bounds(x, x);
  REQUIRE(b.comparable);
  CHECK(b.M == 1.0);
  CHECK(b.m == 1.0);

  auto c2 = ConeHandle::orthant(2);
  auto e1 = orthant_pt(c2, {1, 0});
  auto e2 = orthant_pt(c2, {0, 1});
  auto ob = order_bounds(e1, e2);
  CHECK_FALSE(ob.comparable);
  CHECK(std::isinf(ob.M));

  auto zero = orthant_pt(c2, {0, 0});
  CHECK_THROWS_AS(order_bounds(e1, zero), ZeroDenominator);
}

TEST_CASE("hilbert distance examples") {
  auto c = ConeHandle::orthant(2);
  auto x = orthant_pt(c, {1, 2});
  auto y = orthant_pt(c, {2, 1});
  CHECK(hilbert_distance(x, y) == Catch::Approx(kLog4).margin(1e-14));

  auto x3 = orthant_pt(c, {3, 6});
  CHECK(hilbert_distance(x, x3) == Catch::Approx(0.0).margin(1e-14));

  auto bnd = orthant_pt(c, {1, 0});
  auto inter = orthant_pt(c, {1, 1});
  CHECK(std::isinf(hilbert_distance(bnd, inter)));
}

TEST_CASE("thompson distance examples") {
  auto c = ConeHandle::orthant(2);
  auto x = orthant_pt(c, {1, 2});
  auto y = orthant_pt(c, {2, 1});
  CHECK(thompson_distance(x, y) == Catch::Approx(kLog2).margin(1e-14));
  auto x2 = orthant_pt(c, {2, 4});
  CHECK(thompson_distance(x, x2) == Catch::Approx(kLog2).margin(1e-14));
  CHECK(thompson_distance(x, x) == 0.0);
}

TEST_CASE("funk weak metric examples and decomposition") {
  auto c = ConeHandle::orthant(2);
  auto x = orthant_pt(c, {1, 4});
  auto y = orthant_pt(c, {1, 1});
  CHECK(funk_weak_metric(x, y) == Catch::Approx(kLog4).margin(1e-14));
  CHECK(funk_weak_metric(y, x) == Catch::Approx(0.0).margin(1e-14));
  CHECK(funk_weak_metric(x, x) == Catch::Approx(0.0).margin(1e-14));

  auto g = oracle::rng(7);
  for (int t = 0; t < 100; ++t) {
    auto u = make_point(c, oracle::random_interior_orthant(g, 2));
    auto v = make_point(c, oracle::random_interior_orthant(g, 2));
    double f = funk_weak_metric(u, v) + funk_weak_metric(v, u);
    CHECK(std::abs(f - hilbert_distance(u, v)) < 1e-12);
  }

  auto bnd = orthant_pt(c, {1, 0});
  CHECK_THROWS_AS(funk_weak_metric(bnd, y), NotInterior);
}

TEST_CASE("same part via supports") {
  auto c = ConeHandle::orthant(3);
  CHECK(same_part(orthant_pt(c, {1, 0, 2}), orthant_pt(c, {3, 0, 1})));
  auto c2 = ConeHandle::orthant(2);
  CHECK_FALSE(same_part(orthant_pt(c2, {1, 0}), orthant_pt(c2, {1, 1})));
  CHECK(same_part(orthant_pt(c2, {0, 0}), orthant_pt(c2, {0, 0})));
  CHECK_FALSE(same_part(orthant_pt(c2, {0, 0}), orthant_pt(c2, {1, 1})));
}

TEST_CASE("zero vector conventions") {
  auto c = ConeHandle::orthant(2);
  auto zero = orthant_pt(c, {0, 0});
  auto x = orthant_pt(c, {1, 1});
  CHECK(hilbert_distance(zero, zero) == 0.0);
  CHECK(std::isinf(hilbert_distance(x, zero)));
  CHECK(std::isinf(thompson_distance(zero, x)));
}

TEST_CASE("metric axioms on random interior triples across cone families") {
  auto g = oracle::rng(42);

  auto audit = [&](auto make_random, ConePtr cone) {
    for (int t = 0; t < 60; ++t) {
      auto x = make_point(cone, make_random());
      auto y = make_point(cone, make_random());
      auto z = make_point(cone, make_random());
      double dxy = hilbert_distance(x, y);
      double dyx = hilbert_distance(y, x);
      double dxz = hilbert_distance(x, z);
      double dyz = hilbert_distance(y, z);
      REQUIRE(dxy >= 0.0);
      CHECK(std::abs(dxy - dyx) < 1e-9);
      CHECK(dxz <= dxy + dyz + 1e-9);
      double lam = oracle::uniform(g, 0.1, 10.0);
      double mu = oracle::uniform(g, 0.1, 10.0);
      auto xs = make_point(cone, Vector(lam * x.coords));
      auto ys = make_point(cone, Vector(mu * y.coords));
      CHECK(std::abs(hilbert_distance(xs, ys) - dxy) < 1e-9);

      double txy = thompson_distance(x, y);
      CHECK(txy >= 0.0);
      CHECK(std::abs(txy - thompson_distance(y, x)) < 1e-9);
      CHECK(thompson_distance(x, z) <= txy + thompson_distance(y, z) + 1e-9);
    }
  };

  audit([&] { return oracle::random_interior_orthant(g, 4); }, ConeHandle::orthant(4));

  Matrix basis = Matrix::Identity(3, 3) + 0.2 * Matrix::Random(3, 3);
  auto simp = ConeHandle::simplicial(basis);
  audit([&] { return Vector(basis * oracle::random_interior_orthant(g, 3)); }, simp);

  auto ps = ConeHandle::psd(3);
  audit([&] { return oracle::random_symmetric_flat(g, 3, 0.4, 3.0); }, ps);

  auto lc = ConeHandle::lorentz(3);
  audit([&] { return oracle::random_interior_lorentz(g, 3); }, lc);
}

TEST_CASE("d(x,y) = 0 iff proportional") {
  auto g = oracle::rng(5);
  auto c = ConeHandle::orthant(4);
  auto x = make_point(c, oracle::random_interior_orthant(g, 4));
  auto xs = make_point(c, Vector(2.5 * x.coords));
  CHECK(hilbert_distance(x, xs) < 1e-12);

  auto y = make_point(c, oracle::random_interior_orthant(g, 4));
  if (hilbert_distance(x, y) < 1e-6) return;  // astronomically unlikely collision
  CHECK(hilbert_distance(x, y) > 1e-6);

  auto ps = ConeHandle::psd(3);
  auto a = make_point(ps, oracle::random_symmetric_flat(g, 3, 0.5, 2.0));
  auto a3 = make_point(ps, Vector(3.0 * a.coords));
  CHECK(hilbert_distance(a, a3) < 1e-10);
  CHECK(thompson_distance(a, a3) == Catch::Approx(std::log(3.0)).margin(1e-10));
}

TEST_CASE("order bound submultiplicativity") {
  auto g = oracle::rng(13);
  auto c = ConeHandle::orthant(5);
  for (int t = 0; t < 100; ++t) {
    auto x = make_point(c, oracle::random_interior_orthant(g, 5));
    auto y = make_point(c, oracle::random_interior_orthant(g, 5));
    auto z = make_point(c, oracle::random_interior_orthant(g, 5));
    auto xy = order_bounds(x, y);
    auto yz = order_bounds(y, z);
    auto xz = order_bounds(x, z);
    CHECK(xz.m >= xy.m * yz.m - 1e-9 * xz.m);
    CHECK(xz.M <= xy.M * yz.M + 1e-9 * xz.M);
  }
}

TEST_CASE("cone-preserving linear isomorphisms are isometries") {
  auto g = oracle::rng(99);
  auto c = ConeHandle::orthant(4);
  // positive diagonal times a permutation maps the orthant onto itself
  Vector d(4);
  for (int i = 0; i < 4; ++i) d(i) = oracle::uniform(g, 0.2, 5.0);
  std::vector<int> perm = {2, 0, 3, 1};
  auto apply = [&](const Vector& v) {
    Vector w(4);
    for (int i = 0; i < 4; ++i) w(i) = d(i) * v(perm[i]);
    return w;
  };
  for (int t = 0; t < 100; ++t) {
    auto x = make_point(c, oracle::random_interior_orthant(g, 4));
    auto y = make_point(c, oracle::random_interior_orthant(g, 4));
    auto lx = make_point(c, apply(x.coords));
    auto ly = make_point(c, apply(y.coords));
    CHECK(std::abs(hilbert_distance(lx, ly) - hilbert_distance(x, y)) < 1e-9);
  }
}

TEST_CASE("simplicial cone metric equals orthant metric after basis change") {
  auto g = oracle::rng(21);
  Matrix basis(3, 3);
  basis << 2, 1, 0, 0, 1, 0.5, 0.3, 0, 1;
  auto simp = ConeHandle::simplicial(basis);
  auto orth = ConeHandle::orthant(3);
  for (int t = 0; t < 50; ++t) {
    Vector lx = oracle::random_interior_orthant(g, 3);
    Vector ly = oracle::random_interior_orthant(g, 3);
    auto xs = make_point(simp, Vector(basis * lx));
    auto ys = make_point(simp, Vector(basis * ly));
    auto xo = make_point(orth, lx);
    auto yo = make_point(orth, ly);
    CHECK(std::abs(hilbert_distance(xs, ys) - hilbert_distance(xo, yo)) < 1e-10);
  }
}

TEST_CASE("PSD boundary parts") {
  auto ps = ConeHandle::psd(2);
  Matrix a(2, 2), b(2, 2), cdiag(2, 2);
  a << 1, 0, 0, 0;
  b << 2, 0, 0, 0;
  cdiag << 0, 0, 0, 1;
  auto pa = make_psd_point(ps, a);
  auto pb = make_psd_point(ps, b);
  auto pc = make_psd_point(ps, cdiag);
  CHECK(hilbert_distance(pa, pb) == Catch::Approx(0.0).margin(1e-10));
  CHECK(thompson_distance(pa, pb) == Catch::Approx(kLog2).margin(1e-10));
  CHECK(std::isinf(hilbert_distance(pa, pc)));
  CHECK(same_part(pa, pb));
  CHECK_FALSE(same_part(pa, pc));
}

TEST_CASE("homogenize the unit interval") {
  Matrix a(2, 1);
  a << -1, 1;
  Vector b(2);
  b << 0, 1;
  Vector w(1);
  w << 0.4;
  auto cone = homogenize(a, b, w);
  REQUIRE(cone->facet_count() == 2);
  REQUIRE(cone->ambient_dim() == 2);
  // points (lambda v, lambda) are members for v in [0,1]
  for (double v : {0.0, 0.25, 1.0}) {
    Vector z(2);
    z << 2.0 * v, 2.0;
    CHECK_NOTHROW(make_point(cone, z));
  }
  Vector outside(2);
  outside << 1.5, 1.0;
  CHECK_THROWS(make_point(cone, outside));
}

TEST_CASE("homogenized standard simplex is isometric to the orthant") {
  auto g = oracle::rng(33);
  for (int n : {2, 3, 4}) {
    // vertices of conv(0, e_1, .., e_{n-1}) as rows
    Matrix verts = Matrix::Zero(n, n - 1);
    for (int i = 1; i < n; ++i) verts(i, i - 1) = 1.0;
    auto cone = homogenize(verts);
    REQUIRE(cone->facet_count() == n);
    auto orth = ConeHandle::orthant(n);
    for (int t = 0; t < 30; ++t) {
      Vector lam = oracle::random_interior_orthant(g, n);
      Vector mu = oracle::random_interior_orthant(g, n);
      lam /= lam.sum();
      mu /= mu.sum();
      // simplex point: barycentric weights on {0, e_i} -> z = weights 1..n-1
      Vector x = lam.tail(n - 1);
      Vector y = mu.tail(n - 1);
      auto px = lift_to_cone(cone, x);
      auto py = lift_to_cone(cone, y);
      auto ox = make_point(orth, lam);
      auto oy = make_point(orth, mu);
      CHECK(std::abs(hilbert_distance(px, py) - hilbert_distance(ox, oy)) < 1e-10);
    }
  }
}

TEST_CASE("homogenize the unit square from vertices") {
  Matrix verts(4, 2);
  verts << 0, 0, 1, 0, 0, 1, 1, 1;
  auto cone = homogenize(verts);
  CHECK(cone->facet_count() == 4);
  CHECK(cone->ambient_dim() == 3);
}

TEST_CASE("degenerate polytopes are rejected") {
  Matrix flat(3, 2);
  flat << 0, 0, 1, 1, 2, 2;  // collinear
  CHECK_THROWS_AS(homogenize(flat), DegeneratePolytope);
}

TEST_CASE("dimension mismatches are reported") {
  auto c2 = ConeHandle::orthant(2);
  auto c3 = ConeHandle::orthant(3);
  auto x = orthant_pt(c2, {1, 1});
  auto y = orthant_pt(c3, {1, 1, 1});
  CHECK_THROWS_AS(hilbert_distance(x, y), ConeMismatch);
  Vector bad(3);
  bad << 1, 1, 1;
  CHECK_THROWS_AS(make_point(c2, bad), DimensionMismatch);
}
