#pragma once

#include <string>
#include <vector>

#include "eulervol/rational.hpp"

namespace eulervol {

using Point = std::vector<Rational>;

/* one (merged, non-simplicial in general) facet of a full-dimensional
   polytope: normal . x == offset on the facet, <= offset over the polytope */
struct Facet {
  std::vector<Integer> normal;  // primitive integer outward direction
  Rational offset;
  std::vector<int> vertices;    // indices into VPolytope::vertices(), ascending
};

struct HullOptions {
  int max_dimension = 8;
  int max_points = 5000;
};

struct SliceSpec {
  SliceSpec(int c, int d, int n);
  int c, d, n;
};

class VPolytope;

VPolytope convex_hull(const std::vector<Point>& points, const HullOptions& options = {});
VPolytope hypersimplex(int k, int n);
VPolytope cube_slice(const SliceSpec& spec);
VPolytope scale(const VPolytope& p, const Rational& factor);
VPolytope diagonal_segment(int dim);

/* vertex-described convex polytope; full-dimensional instances always come
   out of convex_hull and carry facets plus an exact Euclidean volume */
class VPolytope {
 public:
  int ambient_dim() const { return ambient_dim_; }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == ambient_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const Rational& euclidean_volume() const { return volume_; }

 private:
  VPolytope() = default;
  static VPolytope from_vertex_container(int ambient_dim, int affine_dim,
                                         std::vector<Point> vertices);
  int ambient_dim_ = 0;
  int affine_dim_ = 0;
  std::vector<Point> vertices_;  // lexicographically sorted
  std::vector<Facet> facets_;    // present only when full-dimensional
  Rational volume_;              // 0 unless full-dimensional

  friend VPolytope convex_hull(const std::vector<Point>&, const HullOptions&);
  friend VPolytope hypersimplex(int, int);
  friend VPolytope cube_slice(const SliceSpec&);
  friend VPolytope scale(const VPolytope&, const Rational&);
  friend VPolytope diagonal_segment(int);
};

struct VolumeResult {
  Rational value;
  bool full_dimensional;
};

/* Euclidean volume; degenerate polytopes report 0 with the flag cleared */
VolumeResult volume(const VPolytope& p);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q,
                        const HullOptions& options = {});

/* inclusion-exclusion over sub-sums; expects exactly n polytopes living in
   R^n with n <= 6 */
Rational mixed_volume(const std::vector<VPolytope>& polytopes,
                      const HullOptions& options = {});

/* normalized volume of a polytope lying in a hyperplane of constant
   coordinate sum: (n-1)! times the Euclidean volume of its projection
   along the last coordinate */
Rational normalized_volume_slice(const VPolytope& p, const HullOptions& options = {});

/* mixed volume of (1..n_total-1 scaled copies of the hypersimplex, plus the
   unit diagonal segment); n_total <= 5 */
Integer mv_family(int m, int n_total, const HullOptions& options = {});

/* JSON text exchange: {"ambient_dim": n, "vertices": [["p/q", ...], ...]} */
std::string polytope_to_text(const VPolytope& p);
VPolytope polytope_from_text(const std::string& text, const HullOptions& options = {});

}  // namespace eulervol
