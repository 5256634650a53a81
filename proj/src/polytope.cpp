#include "eulervol/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "eulervol/errors.hpp"

namespace eulervol {

namespace {

using IVec = std::vector<Integer>;

Integer dot(const IVec& a, const IVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/* Bareiss fraction-free determinant; the empty matrix has determinant 1 */
Integer int_det(std::vector<IVec> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

void divide_by_content(IVec& v) {
  Integer g = 0;
  for (const Integer& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (Integer& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/* incremental fraction-free reduced row echelon over the integers; rows are
   kept mutually reduced so membership tests are a single pass */
class IntEchelon {
 public:
  explicit IntEchelon(int cols) : cols_(cols) {}

  /* true (absorbing the row) exactly when it enlarges the span */
  bool add(IVec v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int p = pivots_[i];
      if (v[p] == 0) continue;
      const Integer mult = v[p];
      const Integer scale = rows_[i][p];
      for (int j = 0; j < cols_; ++j) v[j] = v[j] * scale - rows_[i][j] * mult;
      divide_by_content(v);
    }
    int q = -1;
    for (int j = 0; j < cols_; ++j)
      if (v[j] != 0) { q = j; break; }
    if (q < 0) return false;
    divide_by_content(v);
    if (v[q] < 0)
      for (Integer& x : v) x = -x;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      IVec& r = rows_[i];
      if (r[q] == 0) continue;
      const Integer mult = r[q];
      const Integer scale = v[q];
      for (int j = 0; j < cols_; ++j) r[j] = r[j] * scale - v[j] * mult;
      divide_by_content(r);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(q);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& pivot_columns() const { return pivots_; }

 private:
  int cols_;
  std::vector<IVec> rows_;
  std::vector<int> pivots_;
};

/* primitive normal of the hyperplane through d affinely independent points
   of Z^d, via cofactors of the difference matrix; sign is arbitrary */
IVec hyperplane_normal(const std::vector<IVec>& pts) {
  const int d = static_cast<int>(pts[0].size());
  std::vector<IVec> diff;
  diff.reserve(d - 1);
  for (int j = 1; j < d; ++j) {
    IVec row(d);
    for (int i = 0; i < d; ++i) row[i] = pts[j][i] - pts[0][i];
    diff.push_back(std::move(row));
  }
  IVec a(d);
  std::vector<IVec> minor(d - 1, IVec(d - 1));
  for (int k = 0; k < d; ++k) {
    for (int r = 0; r < d - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == k) continue;
        minor[r][cc++] = diff[r][c];
      }
    }
    a[k] = int_det(minor);
    if (k % 2 == 1) a[k] = -a[k];
  }
  divide_by_content(a);
  bool zero = true;
  for (const Integer& x : a)
    if (x != 0) { zero = false; break; }
  if (zero) throw std::logic_error("hyperplane through affinely dependent points");
  return a;
}

struct IntFacet {
  std::vector<int> verts;  // point indices, ascending
  IVec normal;             // primitive outward
  Integer offset;
  bool alive = true;
};

struct IntMergedFacet {
  IVec normal;
  Integer offset;
  std::vector<int> points;  // boundary points on the facet, ascending
};

struct IntHullOutput {
  bool full = false;
  int affine_dim = 0;
  std::vector<char> is_vertex;
  std::vector<IntMergedFacet> facets;  // full-dimensional case only
  Rational volume;                     // ditto
};

/* incremental hull of deduplicated, lexicographically sorted integer points
   whose affine span is all of R^d; simplex holds d+1 affinely independent
   point indices */
IntHullOutput core_hull(const std::vector<IVec>& pts, const std::vector<int>& simplex) {
  const int d = static_cast<int>(pts[0].size());
  const int count = static_cast<int>(pts.size());

  // interior reference, scaled by d+1 to stay integral
  IVec ref(d, 0);
  for (int idx : simplex)
    for (int i = 0; i < d; ++i) ref[i] += pts[idx][i];

  std::vector<IntFacet> facets;
  std::vector<IVec> fpts(d, IVec(d));
  auto make_facet = [&](std::vector<int> verts) {
    for (int i = 0; i < d; ++i) fpts[i] = pts[verts[i]];
    IVec a = hyperplane_normal(fpts);
    Integer b = dot(a, fpts[0]);
    const Integer side = dot(a, ref) - (d + 1) * b;
    if (side == 0) throw std::logic_error("interior reference on a facet hyperplane");
    if (side > 0) {
      for (Integer& x : a) x = -x;
      b = -b;
    }
    std::sort(verts.begin(), verts.end());
    facets.push_back(IntFacet{std::move(verts), std::move(a), std::move(b), true});
  };

  for (int skip = 0; skip <= d; ++skip) {
    std::vector<int> verts;
    verts.reserve(d);
    for (int i = 0; i <= d; ++i)
      if (i != skip) verts.push_back(simplex[i]);
    make_facet(std::move(verts));
  }

  std::vector<char> in_simplex(count, 0);
  for (int idx : simplex) in_simplex[idx] = 1;

  std::vector<int> visible;
  for (int p = 0; p < count; ++p) {
    if (in_simplex[p]) continue;
    visible.clear();
    for (int f = 0; f < static_cast<int>(facets.size()); ++f)
      if (facets[f].alive && dot(facets[f].normal, pts[p]) > facets[f].offset)
        visible.push_back(f);
    if (visible.empty()) continue;

    // a ridge of the visible region is on the horizon exactly when it is
    // shared with a facet that stays
    std::map<std::vector<int>, int> ridge_count;
    std::vector<int> ridge(d - 1);
    for (int f : visible)
      for (int drop = 0; drop < d; ++drop) {
        int cc = 0;
        for (int i = 0; i < d; ++i)
          if (i != drop) ridge[cc++] = facets[f].verts[i];
        ++ridge_count[ridge];
      }
    std::vector<std::vector<int>> horizon;
    for (int f : visible) {
      const std::vector<int> verts = facets[f].verts;
      for (int drop = 0; drop < d; ++drop) {
        int cc = 0;
        for (int i = 0; i < d; ++i)
          if (i != drop) ridge[cc++] = verts[i];
        if (ridge_count[ridge] == 1) horizon.push_back(ridge);
      }
      facets[f].alive = false;
    }
    for (std::vector<int>& r : horizon) {
      r.push_back(p);
      make_facet(std::move(r));
    }
  }

  IntHullOutput out;
  out.full = true;
  out.affine_dim = d;

  // volume: cone the boundary triangulation from the interior reference
  Integer det_sum = 0;
  std::vector<IVec> rows(d, IVec(d));
  for (const IntFacet& f : facets) {
    if (!f.alive) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        rows[i][j] = (d + 1) * pts[f.verts[i]][j] - ref[j];
    Integer det = int_det(rows);
    if (det < 0) det = -det;
    det_sum += det;
  }
  Integer denominator = factorial(d);
  for (int i = 0; i < d; ++i) denominator *= d + 1;
  out.volume = Rational(det_sum, denominator);

  // merge coplanar simplicial pieces into true facets
  std::map<std::pair<IVec, Integer>, std::set<int>> groups;
  for (const IntFacet& f : facets) {
    if (!f.alive) continue;
    auto& pts_on = groups[{f.normal, f.offset}];
    pts_on.insert(f.verts.begin(), f.verts.end());
  }

  std::vector<std::vector<int>> incident(count);
  int group_id = 0;
  out.facets.reserve(groups.size());
  for (const auto& [key, on] : groups) {
    out.facets.push_back(IntMergedFacet{key.first, key.second,
                                        std::vector<int>(on.begin(), on.end())});
    for (int q : on) incident[q].push_back(group_id);
    ++group_id;
  }

  // a boundary point is a vertex exactly when its active facet normals span
  out.is_vertex.assign(count, 0);
  for (int q = 0; q < count; ++q) {
    if (incident[q].empty()) continue;
    IntEchelon rank_test(d);
    for (int g : incident[q]) rank_test.add(out.facets[g].normal);
    if (rank_test.rank() == d) out.is_vertex[q] = 1;
  }
  return out;
}

/* hull of deduplicated sorted integer points in any position: full-rank sets
   go straight to core_hull, lower-dimensional ones recurse on an injective
   coordinate projection of their affine span */
IntHullOutput int_hull(const std::vector<IVec>& pts, const HullOptions& options) {
  const int dim = static_cast<int>(pts[0].size());
  if (dim > options.max_dimension)
    throw CapExceeded("hull dimension above the configured cap");
  if (static_cast<int>(pts.size()) > options.max_points)
    throw CapExceeded("hull point count above the configured cap");

  IntEchelon echelon(dim);
  std::vector<int> basis = {0};
  IVec delta(dim);
  for (int i = 1; i < static_cast<int>(pts.size()) && echelon.rank() < dim; ++i) {
    for (int j = 0; j < dim; ++j) delta[j] = pts[i][j] - pts[0][j];
    if (echelon.add(delta)) basis.push_back(i);
  }
  const int r = echelon.rank();

  if (r == dim) return core_hull(pts, basis);

  IntHullOutput out;
  out.full = false;
  out.affine_dim = r;
  if (r == 0) {
    out.is_vertex.assign(pts.size(), 0);
    out.is_vertex[0] = 1;  // deduplicated input: a single point
    return out;
  }

  // the pivot columns of the difference echelon give coordinates that are
  // injective on the affine span
  const std::vector<int>& cols = echelon.pivot_columns();
  std::vector<IVec> proj(pts.size(), IVec(r));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int j = 0; j < r; ++j) proj[i][j] = pts[i][cols[j]];
  IntHullOutput inner = int_hull(proj, options);
  out.is_vertex = std::move(inner.is_vertex);
  return out;
}

Integer lcm_of_denominators(const std::vector<Point>& points) {
  Integer L = 1;
  for (const Point& p : points)
    for (const Rational& x : p)
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.denominator().get_mpz_t());
  return L;
}

constexpr int kMaxContainerDim = 9;

}  // namespace

VPolytope VPolytope::from_vertex_container(int ambient_dim, int affine_dim,
                                           std::vector<Point> vertices) {
  VPolytope p;
  p.ambient_dim_ = ambient_dim;
  p.affine_dim_ = affine_dim;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  p.vertices_ = std::move(vertices);
  return p;
}

VPolytope convex_hull(const std::vector<Point>& points, const HullOptions& options) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  const int dim = static_cast<int>(points[0].size());
  if (dim < 1) throw std::invalid_argument("hull of zero-dimensional points");
  for (const Point& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("hull points of differing dimension");

  const Integer L = lcm_of_denominators(points);
  std::vector<IVec> ipts;
  ipts.reserve(points.size());
  for (const Point& p : points) {
    IVec v(dim);
    for (int j = 0; j < dim; ++j) {
      v[j] = p[j].numerator() * L;
      mpz_divexact(v[j].get_mpz_t(), v[j].get_mpz_t(), p[j].denominator().get_mpz_t());
    }
    ipts.push_back(std::move(v));
  }
  std::sort(ipts.begin(), ipts.end());
  ipts.erase(std::unique(ipts.begin(), ipts.end()), ipts.end());

  IntHullOutput hull = int_hull(ipts, options);

  VPolytope out;
  out.ambient_dim_ = dim;
  out.affine_dim_ = hull.affine_dim;

  std::vector<int> new_index(ipts.size(), -1);
  for (std::size_t i = 0; i < ipts.size(); ++i) {
    if (!hull.is_vertex[i]) continue;
    new_index[i] = static_cast<int>(out.vertices_.size());
    Point p(dim);
    for (int j = 0; j < dim; ++j) p[j] = Rational(ipts[i][j], L);
    out.vertices_.push_back(std::move(p));
  }

  if (hull.full) {
    out.volume_ = hull.volume / pow(Rational(L), dim);
    out.facets_.reserve(hull.facets.size());
    for (const IntMergedFacet& f : hull.facets) {
      Facet facet;
      facet.normal = f.normal;
      facet.offset = Rational(f.offset, L);
      for (int q : f.points)
        if (new_index[q] >= 0) facet.vertices.push_back(new_index[q]);
      out.facets_.push_back(std::move(facet));
    }
  }
  return out;
}

VolumeResult volume(const VPolytope& p) {
  return VolumeResult{p.euclidean_volume(), p.full_dimensional()};
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q, const HullOptions& options) {
  if (p.ambient_dim() != q.ambient_dim())
    throw std::invalid_argument("minkowski sum of polytopes in different dimensions");
  const int dim = p.ambient_dim();
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const Point& a : p.vertices())
    for (const Point& b : q.vertices()) {
      Point s(dim);
      for (int j = 0; j < dim; ++j) s[j] = a[j] + b[j];
      sums.push_back(std::move(s));
    }
  return convex_hull(sums, options);
}

Rational mixed_volume(const std::vector<VPolytope>& polytopes, const HullOptions& options) {
  const int n = static_cast<int>(polytopes.size());
  if (n < 1) throw std::invalid_argument("mixed volume of an empty family");
  if (n > 6) throw CapExceeded("mixed volume family size above the cap");
  for (const VPolytope& p : polytopes)
    if (p.ambient_dim() != n)
      throw std::invalid_argument("mixed volume needs n polytopes in R^n");

  Rational total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int bits = 0;
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        ++bits;
        if (first < 0) first = i;
      }
    VPolytope sum = polytopes[first];
    for (int i = first + 1; i < n; ++i)
      if (mask & (1u << i)) sum = minkowski_sum(sum, polytopes[i], options);
    const Rational vol = volume(sum).value;
    if ((n - bits) % 2 == 0)
      total += vol;
    else
      total -= vol;
  }
  return total;
}

VPolytope hypersimplex(int k, int n) {
  if (n < 2 || k <= 0 || k >= n)
    throw std::invalid_argument("hypersimplex needs 0 < k < n");
  if (n > kMaxContainerDim) throw CapExceeded("hypersimplex dimension above the cap");
  std::vector<Point> verts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Point p(n);
    for (int j = 0; j < n; ++j) p[j] = (mask & (1u << j)) ? 1 : 0;
    verts.push_back(std::move(p));
  }
  return VPolytope::from_vertex_container(n, n - 1, std::move(verts));
}

SliceSpec::SliceSpec(int c_, int d_, int n_) : c(c_), d(d_), n(n_) {
  if (n < 1) throw std::invalid_argument("slice: n must be positive");
  if (d < 1) throw std::invalid_argument("slice: d must be positive");
  if (std::gcd(c, d) != 1) throw std::invalid_argument("slice: c and d must be coprime");
  if (c <= 0 || c >= static_cast<long>(d) * n)
    throw std::invalid_argument("slice: c out of (0, d*n)");
  if (n > kMaxContainerDim) throw CapExceeded("slice dimension above the cap");
}

VPolytope cube_slice(const SliceSpec& spec) {
  const int n = spec.n, d = spec.d, c = spec.c;
  std::vector<Point> verts;
  if (d == 1) return hypersimplex(c, n);  // 0 < c < n guaranteed by the SliceSpec ctor
  // vertices take the value d on j coordinates, the remainder t on one more,
  // and 0 elsewhere; d does not divide c, so t is forced into (0, d)
  const int j = c / d;
  const int t = c - j * d;
  const int m = n - 1;
  for (int frac = 0; frac < n; ++frac) {
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
      if (i != frac) others.push_back(i);
    std::vector<int> pick(j);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Point p(n, Rational(0));
      p[frac] = t;
      for (int idx : pick) p[others[idx]] = d;
      verts.push_back(std::move(p));
      int pos = j - 1;
      while (pos >= 0 && pick[pos] == m - j + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int q = pos + 1; q < j; ++q) pick[q] = pick[q - 1] + 1;
    }
  }
  return VPolytope::from_vertex_container(n, n == 1 ? 0 : n - 1, std::move(verts));
}

VPolytope scale(const VPolytope& p, const Rational& factor) {
  if (factor.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
  VPolytope out;
  out.ambient_dim_ = p.ambient_dim();
  out.affine_dim_ = p.affine_dim();
  out.vertices_.reserve(p.vertices().size());
  for (const Point& v : p.vertices()) {
    Point s(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) s[j] = v[j] * factor;
    out.vertices_.push_back(std::move(s));
  }
  out.facets_.reserve(p.facets().size());
  for (const Facet& f : p.facets()) {
    Facet g = f;
    g.offset = f.offset * factor;
    out.facets_.push_back(std::move(g));
  }
  out.volume_ = p.euclidean_volume() * pow(factor, p.ambient_dim());
  return out;
}

VPolytope diagonal_segment(int dim) {
  if (dim < 1 || dim > kMaxContainerDim)
    throw std::invalid_argument("diagonal segment dimension out of range");
  std::vector<Point> ends(2, Point(dim, Rational(0)));
  for (int j = 0; j < dim; ++j) ends[1][j] = 1;
  if (dim == 1) return convex_hull(ends);
  return VPolytope::from_vertex_container(dim, 1, std::move(ends));
}

Rational normalized_volume_slice(const VPolytope& p, const HullOptions& options) {
  const int n = p.ambient_dim();
  if (p.vertices().empty()) throw std::invalid_argument("slice volume of an empty polytope");
  Rational sum0 = 0;
  for (const Rational& x : p.vertices()[0]) sum0 += x;
  for (const Point& v : p.vertices()) {
    Rational s = 0;
    for (const Rational& x : v) s += x;
    if (s != sum0)
      throw std::invalid_argument("vertices do not lie in a constant-sum hyperplane");
  }
  if (n == 1) return 1;  // a single point: one lattice-normalized unit

  std::vector<Point> projected;
  projected.reserve(p.vertices().size());
  for (const Point& v : p.vertices())
    projected.emplace_back(v.begin(), v.end() - 1);
  VPolytope flat = convex_hull(projected, options);
  if (!flat.full_dimensional()) return 0;
  return flat.euclidean_volume() * Rational(factorial(n - 1));
}

Integer mv_family(int m, int n_total, const HullOptions& options) {
  if (n_total < 2 || m <= 0 || m >= n_total)
    throw std::invalid_argument("mv family needs 0 < m < n_total");
  if (n_total > 5) throw CapExceeded("mv family size above the cap");
  const VPolytope delta = hypersimplex(m, n_total);
  std::vector<VPolytope> polys;
  for (int i = 1; i <= n_total - 1; ++i) polys.push_back(scale(delta, i));
  polys.push_back(diagonal_segment(n_total));
  const Rational mv = mixed_volume(polys, options);
  if (!mv.is_integer()) throw std::logic_error("mixed volume of lattice polytopes not integral");
  return mv.numerator();
}

std::string polytope_to_text(const VPolytope& p) {
  nlohmann::json doc;
  doc["ambient_dim"] = p.ambient_dim();
  nlohmann::json verts = nlohmann::json::array();
  for (const Point& v : p.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& x : v) row.push_back(x.str());
    verts.push_back(std::move(row));
  }
  doc["vertices"] = std::move(verts);
  return doc.dump(2) + "\n";
}

VPolytope polytope_from_text(const std::string& text, const HullOptions& options) {
  std::vector<Point> points;
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || !doc.contains("ambient_dim") || !doc.contains("vertices"))
      throw std::invalid_argument("polytope document must carry ambient_dim and vertices");
    const int dim = doc.at("ambient_dim").get<int>();
    if (!doc.at("vertices").is_array())
      throw std::invalid_argument("polytope document: vertices must be an array");
    for (const auto& row : doc.at("vertices")) {
      Point p;
      for (const auto& cell : row) {
        if (cell.is_number_integer())
          p.push_back(Rational(cell.get<long>()));
        else if (cell.is_string())
          p.push_back(Rational::parse(cell.get<std::string>()));
        else
          throw std::invalid_argument("polytope document: coordinates must be strings or integers");
      }
      if (static_cast<int>(p.size()) != dim)
        throw std::invalid_argument("polytope document: vertex length differs from ambient_dim");
      points.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("polytope document: ") + e.what());
  }
  return convex_hull(points, options);
}

}  // namespace eulervol
