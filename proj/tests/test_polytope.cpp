#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "eulervol/combinatorics.hpp"
#include "eulervol/errors.hpp"
#include "eulervol/polytope.hpp"
#include "eulervol/rational.hpp"

using namespace eulervol;

namespace {

Point pt(const std::vector<long>& coords) {
  Point p;
  for (long c : coords) p.push_back(Rational(c));
  return p;
}

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/* independent 2d oracle: monotone chain, counterclockwise, strict vertices */
std::vector<Point> chain_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;
  std::vector<Point> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  const int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

Rational shoelace(const std::vector<Point>& ccw) {
  Rational twice = 0;
  const int n = static_cast<int>(ccw.size());
  for (int i = 0; i < n; ++i) {
    const Point& a = ccw[i];
    const Point& b = ccw[(i + 1) % n];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return abs(twice) / Rational(2);
}

/* every facet must be supporting, touch exactly its listed vertices, and be
   stored in canonical shape */
void require_consistent_facets(const VPolytope& p) {
  REQUIRE(p.full_dimensional());
  REQUIRE(!p.facets().empty());
  const auto& vs = p.vertices();
  REQUIRE(std::is_sorted(vs.begin(), vs.end()));
  REQUIRE(std::adjacent_find(vs.begin(), vs.end()) == vs.end());
  for (const Facet& f : p.facets()) {
    Integer g = 0;
    for (const Integer& a : f.normal)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    CHECK(g == 1);
    REQUIRE(std::is_sorted(f.vertices.begin(), f.vertices.end()));
    REQUIRE(static_cast<int>(f.vertices.size()) >= p.ambient_dim());
    std::set<int> on(f.vertices.begin(), f.vertices.end());
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
      Rational lhs = 0;
      for (int j = 0; j < p.ambient_dim(); ++j)
        lhs += Rational(f.normal[j]) * vs[i][j];
      if (on.count(i))
        CHECK(lhs == f.offset);
      else
        CHECK(lhs < f.offset);
    }
  }
}

std::vector<Point> cube_corners(int dim, const Rational& side) {
  std::vector<Point> out;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    Point p(dim, Rational(0));
    for (int j = 0; j < dim; ++j)
      if (mask & (1u << j)) p[j] = side;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("hull of the unit cube") {
  std::vector<Point> pts = cube_corners(3, 1);
  pts.push_back(pt({0, 0, 0}));  // duplicate corner
  Point center(3, Rational(1, 2));
  pts.push_back(center);  // interior point
  const VPolytope cube = convex_hull(pts);
  CHECK(cube.ambient_dim() == 3);
  CHECK(cube.affine_dim() == 3);
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.facets().size() == 6);
  CHECK(volume(cube).value == Rational(1));
  CHECK(volume(cube).full_dimensional);
  require_consistent_facets(cube);
  for (const Facet& f : cube.facets()) CHECK(f.vertices.size() == 4);

  std::set<std::pair<std::vector<long>, Rational>> seen;
  for (const Facet& f : cube.facets()) {
    std::vector<long> a;
    for (const Integer& x : f.normal) a.push_back(x.get_si());
    seen.insert({a, f.offset});
  }
  std::set<std::pair<std::vector<long>, Rational>> expected = {
      {{-1, 0, 0}, Rational(0)}, {{1, 0, 0}, Rational(1)},
      {{0, -1, 0}, Rational(0)}, {{0, 1, 0}, Rational(1)},
      {{0, 0, -1}, Rational(0)}, {{0, 0, 1}, Rational(1)}};
  CHECK(seen == expected);
}

TEST_CASE("interior points are dropped") {
  std::vector<Point> pts = {pt({0, 0}), pt({1, 0}), pt({0, 1})};
  Point quarter(2, Rational(1, 4));
  pts.push_back(quarter);
  const VPolytope tri = convex_hull(pts);
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.facets().size() == 3);
  CHECK(volume(tri).value == Rational(1, 2));
  require_consistent_facets(tri);
}

TEST_CASE("lower-dimensional input takes the coordinate-chart path") {
  // lattice points at level 2 of the nonnegative orthant in R^3
  std::vector<Point> pts = {pt({2, 0, 0}), pt({0, 2, 0}), pt({0, 0, 2}),
                            pt({1, 1, 0}), pt({1, 0, 1}), pt({0, 1, 1})};
  const VPolytope tri = convex_hull(pts);
  CHECK(tri.ambient_dim() == 3);
  CHECK(tri.affine_dim() == 2);
  CHECK(!tri.full_dimensional());
  CHECK(tri.facets().empty());
  CHECK(volume(tri).value == Rational(0));
  CHECK(!volume(tri).full_dimensional);
  const std::vector<Point> expected = {pt({0, 0, 2}), pt({0, 2, 0}), pt({2, 0, 0})};
  CHECK(tri.vertices() == expected);
}

TEST_CASE("degenerate inputs") {
  SUBCASE("collinear points with duplicates") {
    const std::vector<Point> pts = {pt({0, 0}), pt({2, 2}), pt({1, 1}),
                                    pt({0, 0}), pt({2, 2})};
    const VPolytope seg = convex_hull(pts);
    CHECK(seg.affine_dim() == 1);
    const std::vector<Point> expected = {pt({0, 0}), pt({2, 2})};
    CHECK(seg.vertices() == expected);
  }
  SUBCASE("single point") {
    Point p = {Rational(3, 2), Rational(-1)};
    const VPolytope v = convex_hull({p});
    CHECK(v.affine_dim() == 0);
    REQUIRE(v.vertices().size() == 1);
    CHECK(v.vertices()[0] == p);
  }
  SUBCASE("two distinct points in R^1 are full-dimensional") {
    const VPolytope seg = convex_hull({pt({5}), pt({2}), pt({3})});
    CHECK(seg.full_dimensional());
    CHECK(seg.vertices().size() == 2);
    CHECK(volume(seg).value == Rational(3));
    require_consistent_facets(seg);
  }
}

TEST_CASE("volumes of reference solids") {
  SUBCASE("unit cubes") {
    for (int d = 2; d <= 4; ++d)
      CHECK(volume(convex_hull(cube_corners(d, 1))).value == Rational(1));
  }
  SUBCASE("rational cube") {
    const VPolytope c = convex_hull(cube_corners(3, Rational(5, 2)));
    CHECK(volume(c).value == Rational(125, 8));
    require_consistent_facets(c);
  }
  SUBCASE("standard corner simplices") {
    for (int d = 2; d <= 5; ++d) {
      std::vector<Point> pts = {Point(d, Rational(0))};
      for (int i = 0; i < d; ++i) {
        Point e(d, Rational(0));
        e[i] = 1;
        pts.push_back(std::move(e));
      }
      CHECK(volume(convex_hull(pts)).value == Rational(1, factorial(d)));
    }
  }
  SUBCASE("octahedron") {
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i)
      for (int s : {-1, 1}) {
        Point e(3, Rational(0));
        e[i] = s;
        pts.push_back(std::move(e));
      }
    const VPolytope oct = convex_hull(pts);
    CHECK(volume(oct).value == Rational(4, 3));
    CHECK(oct.facets().size() == 8);
    require_consistent_facets(oct);
  }
  SUBCASE("square scaled by 3") {
    const VPolytope sq = convex_hull(cube_corners(2, 1));
    CHECK(volume(scale(sq, 3)).value == Rational(9));
  }
}

TEST_CASE("scaling is homogeneous of ambient degree") {
  std::mt19937 rng(20240817);
  for (int round = 0; round < 10; ++round) {
    std::vector<Point> pts;
    const int count = 4 + static_cast<int>(rng() % 8);
    for (int i = 0; i < count; ++i) {
      std::vector<long> c(3);
      for (long& x : c) x = static_cast<long>(rng() % 5);
      pts.push_back(pt(c));
    }
    const VPolytope p = convex_hull(pts);
    if (!p.full_dimensional()) continue;
    const Rational t(3, 2);
    const VPolytope scaled = scale(p, t);
    CHECK(volume(scaled).value == pow(t, 3) * volume(p).value);

    // scaling the generators first must agree with scaling the hull
    std::vector<Point> scaled_pts;
    for (const Point& q : pts) {
      Point s(3);
      for (int j = 0; j < 3; ++j) s[j] = q[j] * t;
      scaled_pts.push_back(std::move(s));
    }
    const VPolytope rebuilt = convex_hull(scaled_pts);
    CHECK(rebuilt.vertices() == scaled.vertices());
    CHECK(volume(rebuilt).value == volume(scaled).value);
    require_consistent_facets(rebuilt);
  }
}

TEST_CASE("random planar hulls match the monotone-chain oracle") {
  std::mt19937 rng(987654321);
  int full_rounds = 0;
  for (int round = 0; round < 60; ++round) {
    std::vector<Point> pts;
    const int count = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < count; ++i) {
      Point p(2);
      for (int j = 0; j < 2; ++j) {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = 1 + static_cast<long>(rng() % 4);
        p[j] = Rational(num, den);
      }
      pts.push_back(std::move(p));
    }
    const std::vector<Point> oracle = chain_hull(pts);
    const VPolytope hull = convex_hull(pts);
    if (oracle.size() <= 2) {
      CHECK(!hull.full_dimensional());
      continue;
    }
    ++full_rounds;
    std::vector<Point> expected = oracle;
    std::sort(expected.begin(), expected.end());
    CHECK(hull.vertices() == expected);
    CHECK(volume(hull).value == shoelace(oracle));
    require_consistent_facets(hull);
    for (const Facet& f : hull.facets()) CHECK(f.vertices.size() == 2);
    CHECK(hull.facets().size() == hull.vertices().size());
  }
  CHECK(full_rounds >= 50);
}

TEST_CASE("random spatial hulls keep exact facet structure") {
  std::mt19937 rng(424242);
  int full_rounds = 0;
  for (int round = 0; round < 15; ++round) {
    std::vector<Point> pts;
    const int count = 4 + static_cast<int>(rng() % 9);
    for (int i = 0; i < count; ++i) {
      std::vector<long> c(3);
      for (long& x : c) x = static_cast<long>(rng() % 5);
      pts.push_back(pt(c));
    }
    const VPolytope p = convex_hull(pts);
    if (!p.full_dimensional()) continue;
    ++full_rounds;
    require_consistent_facets(p);
    CHECK(volume(p).value.sign() > 0);

    // translation leaves the volume alone
    std::vector<Point> shifted;
    for (const Point& q : pts) {
      Point s(3);
      for (int j = 0; j < 3; ++j) s[j] = q[j] + Rational(7 - 2 * j, 3);
      shifted.push_back(std::move(s));
    }
    CHECK(volume(convex_hull(shifted)).value == volume(p).value);
  }
  CHECK(full_rounds >= 8);
}

TEST_CASE("minkowski sums") {
  SUBCASE("adding the origin changes nothing") {
    const VPolytope sq = convex_hull(cube_corners(2, 1));
    const VPolytope origin = convex_hull({pt({0, 0})});
    const VPolytope sum = minkowski_sum(sq, origin);
    CHECK(sum.vertices() == sq.vertices());
    CHECK(volume(sum).value == volume(sq).value);
  }
  SUBCASE("two axis segments make the unit square") {
    const VPolytope a = convex_hull({pt({0, 0}), pt({1, 0})});
    const VPolytope b = convex_hull({pt({0, 0}), pt({0, 1})});
    const VPolytope sum = minkowski_sum(a, b);
    CHECK(sum.vertices().size() == 4);
    CHECK(volume(sum).value == Rational(1));
  }
  SUBCASE("triangle plus the long diagonal is a prism") {
    const VPolytope prism = minkowski_sum(hypersimplex(1, 3), diagonal_segment(3));
    CHECK(prism.full_dimensional());
    CHECK(prism.vertices().size() == 6);
    CHECK(prism.facets().size() == 5);
    CHECK(volume(prism).value == Rational(3, 2));
    require_consistent_facets(prism);
  }
  SUBCASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(minkowski_sum(convex_hull({pt({0, 0})}), convex_hull({pt({0})})),
                    std::invalid_argument);
  }
}

TEST_CASE("mixed volume") {
  SUBCASE("crossed segments span a parallelogram") {
    const VPolytope a = convex_hull({pt({1, 0}), pt({0, 1})});
    const VPolytope b = convex_hull({pt({0, 0}), pt({1, 1})});
    CHECK(mixed_volume({a, b}) == Rational(2));
  }
  SUBCASE("equal arguments reduce to a scaled volume") {
    const VPolytope sq = convex_hull(cube_corners(2, 1));
    CHECK(mixed_volume({sq, sq}) == Rational(2));
    const VPolytope cube = convex_hull(cube_corners(3, 1));
    CHECK(mixed_volume({cube, cube, cube}) == Rational(6));
    std::vector<Point> tet = {pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 3, 0}), pt({1, 1, 2})};
    const VPolytope t = convex_hull(tet);
    CHECK(mixed_volume({t, t, t}) == Rational(6) * volume(t).value);
  }
  SUBCASE("symmetric under permutation of the arguments") {
    const VPolytope a = convex_hull(cube_corners(3, 1));
    const VPolytope b = convex_hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
    const VPolytope c = convex_hull({pt({0, 0, 0}), pt({1, 2, 0})});
    const Rational ref = mixed_volume({a, b, c});
    CHECK(mixed_volume({b, c, a}) == ref);
    CHECK(mixed_volume({c, a, b}) == ref);
    CHECK(mixed_volume({a, c, b}) == ref);
  }
  SUBCASE("multilinear on scaled copies") {
    const VPolytope q = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    const Rational base = Rational(2) * volume(q).value;
    CHECK(mixed_volume({scale(q, 2), scale(q, 5)}) == Rational(10) * base);
    CHECK(mixed_volume({scale(q, Rational(1, 2)), scale(q, 3)}) == Rational(3, 2) * base);
  }
  SUBCASE("argument validation") {
    const VPolytope sq = convex_hull(cube_corners(2, 1));
    CHECK_THROWS_AS(mixed_volume({}), std::invalid_argument);
    CHECK_THROWS_AS(mixed_volume({sq}), std::invalid_argument);          // 1 polytope in R^2
    CHECK_THROWS_AS(mixed_volume({sq, sq, sq}), std::invalid_argument);  // 3 in R^2
    const VPolytope seg = convex_hull({pt({0}), pt({1})});
    CHECK_THROWS_AS(mixed_volume({seg, seg, seg, seg, seg, seg, seg}), CapExceeded);
  }
}

TEST_CASE("hypersimplex vertex sets") {
  for (int n = 2; n <= 6; ++n) {
    const VPolytope simplex = hypersimplex(1, n);
    CHECK(simplex.vertices().size() == static_cast<std::size_t>(n));
    CHECK(simplex.affine_dim() == n - 1);
    for (const Point& v : simplex.vertices()) {
      Rational s = 0;
      for (const Rational& x : v) s += x;
      CHECK(s == Rational(1));
    }
  }
  CHECK(hypersimplex(2, 4).vertices().size() == 6);
  CHECK(hypersimplex(2, 5).vertices().size() == 10);

  // swapping 0s and 1s is a congruence
  for (int n = 4; n <= 5; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      CHECK(hypersimplex(k, n).vertices().size() == hypersimplex(n - k, n).vertices().size());
      CHECK(normalized_volume_slice(hypersimplex(k, n)) ==
            normalized_volume_slice(hypersimplex(n - k, n)));
    }

  CHECK_THROWS_AS(hypersimplex(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(hypersimplex(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(hypersimplex(-1, 4), std::invalid_argument);
  CHECK_THROWS_AS(hypersimplex(3, 10), CapExceeded);
}

TEST_CASE("cube slice vertex sets") {
  SUBCASE("the hexagon") {
    const VPolytope hex = cube_slice(SliceSpec(3, 2, 3));
    const std::vector<Point> expected = {pt({0, 1, 2}), pt({0, 2, 1}), pt({1, 0, 2}),
                                         pt({1, 2, 0}), pt({2, 0, 1}), pt({2, 1, 0})};
    CHECK(hex.vertices() == expected);
    CHECK(hex.affine_dim() == 2);
  }
  SUBCASE("denominator one reduces to the integer slice") {
    for (int n = 2; n <= 5; ++n)
      for (int k = 1; k < n; ++k)
        CHECK(cube_slice(SliceSpec(k, 1, n)).vertices() == hypersimplex(k, n).vertices());
  }
  SUBCASE("a segment slice") {
    const VPolytope seg = cube_slice(SliceSpec(1, 2, 2));
    const std::vector<Point> expected = {pt({0, 1}), pt({1, 0})};
    CHECK(seg.vertices() == expected);
    CHECK(seg.affine_dim() == 1);
  }
  SUBCASE("one-dimensional ambient space gives a point") {
    const VPolytope p = cube_slice(SliceSpec(1, 2, 1));
    REQUIRE(p.vertices().size() == 1);
    CHECK(p.vertices()[0][0] == Rational(1));
    CHECK(p.affine_dim() == 0);
  }
  SUBCASE("spec validation") {
    CHECK_THROWS_AS(SliceSpec(2, 4, 3), std::invalid_argument);   // gcd(c,d) > 1
    CHECK_THROWS_AS(SliceSpec(0, 1, 3), std::invalid_argument);   // c = 0
    CHECK_THROWS_AS(SliceSpec(3, 1, 3), std::invalid_argument);   // c = d*n
    CHECK_THROWS_AS(SliceSpec(7, 2, 3), std::invalid_argument);   // c > d*n
    CHECK_THROWS_AS(SliceSpec(1, 0, 3), std::invalid_argument);   // d = 0
    CHECK_THROWS_AS(SliceSpec(1, 2, 0), std::invalid_argument);   // n = 0
    CHECK_THROWS_AS(SliceSpec(3, 2, 10), CapExceeded);
  }
}

TEST_CASE("normalized slice volumes") {
  for (int n = 2; n <= 6; ++n)
    CHECK(normalized_volume_slice(hypersimplex(1, n)) == Rational(1));
  CHECK(normalized_volume_slice(hypersimplex(2, 4)) == Rational(4));
  CHECK(normalized_volume_slice(cube_slice(SliceSpec(3, 2, 3))) == Rational(6));
  CHECK(normalized_volume_slice(cube_slice(SliceSpec(1, 2, 1))) == Rational(1));

  // agreement with the classical triangle of descent counts
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(normalized_volume_slice(hypersimplex(k, n)) ==
            Rational(eulerian(n - 1, k - 1)));

  const VPolytope sq = convex_hull(cube_corners(2, 1));
  CHECK_THROWS_AS(normalized_volume_slice(sq), std::invalid_argument);
}

TEST_CASE("mixed-volume family values") {
  CHECK(mv_family(1, 2) == 2);
  CHECK(mv_family(1, 3) == 6);
  CHECK(mv_family(2, 3) == 6);
  CHECK(mv_family(2, 4) == 96);

  for (int n_total = 2; n_total <= 4; ++n_total)
    for (int m = 1; m < n_total; ++m)
      CHECK(mv_family(m, n_total) ==
            factorial(n_total) * eulerian(n_total - 1, m - 1));

  CHECK_THROWS_AS(mv_family(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(mv_family(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(mv_family(2, 6), CapExceeded);
}

TEST_CASE("hull input validation and caps") {
  CHECK_THROWS_AS(convex_hull({}), std::invalid_argument);
  CHECK_THROWS_AS(convex_hull({pt({0, 0}), pt({0})}), std::invalid_argument);
  CHECK_THROWS_AS(convex_hull({Point{}}), std::invalid_argument);

  std::vector<Point> nine = {Point(9, Rational(0))};
  CHECK_THROWS_AS(convex_hull(nine), CapExceeded);

  HullOptions tight;
  tight.max_points = 4;
  std::vector<Point> five;
  for (long i = 0; i < 5; ++i) five.push_back(pt({i, i * i}));
  CHECK_THROWS_AS(convex_hull(five, tight), CapExceeded);
  // parabola points are in convex position; the default cap admits them all
  CHECK(convex_hull(five).vertices().size() == 5);
}

TEST_CASE("facets keep rational offsets exactly") {
  std::vector<Point> pts;
  for (long a = 0; a <= 1; ++a)
    for (long b = 0; b <= 1; ++b)
      pts.push_back({Rational(a, 2), Rational(b, 2)});
  const VPolytope sq = convex_hull(pts);
  CHECK(volume(sq).value == Rational(1, 4));
  std::set<std::pair<std::vector<long>, Rational>> seen;
  for (const Facet& f : sq.facets()) {
    std::vector<long> a;
    for (const Integer& x : f.normal) a.push_back(x.get_si());
    seen.insert({a, f.offset});
  }
  const std::set<std::pair<std::vector<long>, Rational>> expected = {
      {{-1, 0}, Rational(0)},
      {{1, 0}, Rational(1, 2)},
      {{0, -1}, Rational(0)},
      {{0, 1}, Rational(1, 2)}};
  CHECK(seen == expected);
}

TEST_CASE("text exchange") {
  SUBCASE("roundtrip keeps the polytope") {
    const VPolytope hex = cube_slice(SliceSpec(3, 2, 3));
    const std::string doc = polytope_to_text(hex);
    const VPolytope back = polytope_from_text(doc);
    CHECK(back.ambient_dim() == hex.ambient_dim());
    CHECK(back.vertices() == hex.vertices());
    CHECK(polytope_to_text(back) == doc);
  }
  SUBCASE("fractions and integers both parse") {
    const std::string doc = R"({"ambient_dim": 2,
      "vertices": [["0", "0"], [1, "0"], ["0", 1], ["1/2", "1/2"]]})";
    const VPolytope p = polytope_from_text(doc);
    CHECK(p.vertices().size() == 3);
    CHECK(volume(p).value == Rational(1, 2));
  }
  SUBCASE("malformed documents are rejected") {
    CHECK_THROWS_AS(polytope_from_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(polytope_from_text("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(polytope_from_text(R"({"ambient_dim": 2})"), std::invalid_argument);
    CHECK_THROWS_AS(polytope_from_text(R"({"ambient_dim": 2, "vertices": [["1"]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(polytope_from_text(R"({"ambient_dim": 2, "vertices": [["1", true]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(polytope_from_text(R"({"ambient_dim": 1, "vertices": [["1.5"]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(polytope_from_text(R"({"ambient_dim": 2, "vertices": []})"),
                    std::invalid_argument);
  }
}
