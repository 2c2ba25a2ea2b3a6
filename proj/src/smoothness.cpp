#include "togliatti/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "togliatti/errors.hpp"
#include "togliatti/exact_linalg.hpp"

namespace togliatti {

using linalg::IntMatrix;

namespace {

std::int64_t small_det(std::vector<LatticeVector> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<LatticeVector> minor;
    for (std::size_t i = 1; i < n; ++i) {
      LatticeVector row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const std::int64_t term = m[0][c] * small_det(std::move(minor));
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t affine_rank(const std::vector<LatticeVector>& coords, const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  const std::size_t k = coords[idx[0]].size();
  IntMatrix m(idx.size() - 1, k);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i - 1, j) = coords[idx[i]][j] - coords[idx[0]][j];
  }
  return linalg::rank(m);
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<LatticeVector> lattice_coordinates(const std::vector<Monomial>& points, int n, int& dim) {
  std::vector<LatticeVector> proj;
  for (const auto& p : points) {
    LatticeVector y(n);
    for (int i = 0; i < n; ++i) y[i] = p[i + 1];
    proj.push_back(std::move(y));
  }
  IntMatrix diffs(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (int j = 0; j < n; ++j) diffs(i - 1, j) = proj[i][j] - proj[0][j];
  }
  dim = static_cast<int>(linalg::rank(diffs));
  if (dim == n) return proj;

  // (x - p0) * right vanishes beyond the first dim entries for every x in
  // the affine span, and right is unimodular, so those entries are lattice
  // coordinates of Z^n ∩ Aff.
  const auto snf = linalg::smith_normal_form(diffs);
  std::vector<LatticeVector> coords;
  for (const auto& y : proj) {
    LatticeVector c(dim);
    for (int j = 0; j < dim; ++j) {
      mpz_class s = 0;
      for (int i = 0; i < n; ++i) s += (y[i] - proj[0][i]) * snf.right(i, j);
      c[j] = s.get_si();
    }
    coords.push_back(std::move(c));
  }
  return coords;
}

// Points that are not the midpoint of two other points of the set. Every
// vertex survives, so facets are still spanned by k-subsets of these.
std::vector<std::size_t> vertex_candidates(const std::vector<LatticeVector>& coords) {
  std::set<LatticeVector> all(coords.begin(), coords.end());
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < coords.size(); ++p) {
    bool midpoint = false;
    for (std::size_t q = 0; q < coords.size() && !midpoint; ++q) {
      if (q == p) continue;
      LatticeVector mirror(coords[p].size());
      for (std::size_t j = 0; j < mirror.size(); ++j) mirror[j] = 2 * coords[p][j] - coords[q][j];
      midpoint = all.count(mirror) > 0;
    }
    if (!midpoint) out.push_back(p);
  }
  return out;
}

void compute_facets(LatticePolytope& P) {
  const std::size_t k = static_cast<std::size_t>(P.dim);
  const std::vector<std::size_t> cand = vertex_candidates(P.coords);
  std::vector<LatticeVector> pts;
  for (auto i : cand) pts.push_back(P.coords[i]);
  const std::size_t m = pts.size();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    // a subset lying on a known facet plane can only span that plane again
    bool on_known = false;
    for (std::size_t f = 0; f < P.facet_normals.size() && !on_known; ++f) {
      on_known = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) {
        return dot(P.facet_normals[f], pts[i]) == P.facet_offsets[f];
      });
    }
    if (!on_known) {
      std::vector<LatticeVector> rows;
      for (std::size_t i = 1; i < k; ++i) {
        LatticeVector r(k);
        for (std::size_t j = 0; j < k; ++j) r[j] = pts[idx[i]][j] - pts[idx[0]][j];
        rows.push_back(std::move(r));
      }
      LatticeVector normal(k);
      for (std::size_t c = 0; c < k; ++c) {
        std::vector<LatticeVector> minor;
        for (const auto& r : rows) {
          LatticeVector row;
          for (std::size_t j = 0; j < k; ++j) {
            if (j != c) row.push_back(r[j]);
          }
          minor.push_back(std::move(row));
        }
        const std::int64_t det = small_det(std::move(minor));
        normal[c] = (c % 2 == 0) ? det : -det;
      }
      if (std::any_of(normal.begin(), normal.end(), [](std::int64_t x) { return x != 0; })) {
        const std::int64_t offset = dot(normal, pts[idx[0]]);
        bool above = false, below = false;
        for (std::size_t i = 0; i < m && !(above && below); ++i) {
          const std::int64_t v = dot(normal, pts[i]);
          above |= v > offset;
          below |= v < offset;
        }
        if (!(above && below)) {
          std::int64_t g = 0;
          for (auto x : normal) g = std::gcd(g, x);
          if (above) g = -g;
          for (auto& x : normal) x /= g;
          P.facet_normals.push_back(normal);
          P.facet_offsets.push_back(dot(normal, pts[idx[0]]));
        }
      }
    }
    // next k-subset in lexicographic order
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void compute_faces(LatticePolytope& P) {
  const std::size_t m = P.points.size();
  std::vector<std::vector<std::size_t>> facet_sets;
  for (std::size_t f = 0; f < P.facet_normals.size(); ++f) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(P.facet_normals[f], P.coords[i]) == P.facet_offsets[f]) s.push_back(i);
    }
    facet_sets.push_back(std::move(s));
  }

  std::set<std::vector<std::size_t>> seen(facet_sets.begin(), facet_sets.end());
  std::vector<std::vector<std::size_t>> queue(seen.begin(), seen.end());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& f : facet_sets) {
      std::vector<std::size_t> inter;
      std::set_intersection(queue[q].begin(), queue[q].end(), f.begin(), f.end(), std::back_inserter(inter));
      if (!inter.empty() && seen.insert(inter).second) queue.push_back(std::move(inter));
    }
  }
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{0});
  seen.insert(all);

  for (const auto& s : seen) {
    Face face;
    face.point_indices = s;
    face.dim = static_cast<int>(affine_rank(P.coords, s));
    for (std::size_t f = 0; f < facet_sets.size(); ++f) {
      if (is_subset(s, facet_sets[f])) face.facets.push_back(f);
    }
    P.faces.push_back(std::move(face));
  }
  std::sort(P.faces.begin(), P.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.point_indices < b.point_indices;
  });
  for (const auto& f : P.faces) {
    if (f.dim == 0) P.vertices.push_back(f.point_indices.front());
  }
  std::sort(P.vertices.begin(), P.vertices.end());
  for (auto& f : P.faces) {
    for (auto i : f.point_indices) {
      if (std::binary_search(P.vertices.begin(), P.vertices.end(), i)) f.vertex_indices.push_back(i);
    }
  }
}

std::string point_text(const Monomial& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.num_vars(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

Monomial offset_point(const Monomial& base, const std::vector<int>& delta, int t, bool& valid) {
  std::vector<int> e(base.num_vars());
  valid = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = base[i] + t * delta[i];
    if (e[i] < 0) valid = false;
  }
  if (!valid) return base;
  return Monomial(std::move(e));
}

std::vector<int> primitive_direction(const Monomial& from, const Monomial& to) {
  std::vector<int> dir(from.num_vars());
  int g = 0;
  for (std::size_t i = 0; i < dir.size(); ++i) {
    dir[i] = to[i] - from[i];
    g = std::gcd(g, dir[i]);
  }
  for (auto& x : dir) x /= g;
  return dir;
}

int lattice_length(const Monomial& from, const Monomial& to) {
  int g = 0;
  for (std::size_t i = 0; i < from.num_vars(); ++i) g = std::gcd(g, to[i] - from[i]);
  return g;
}

}  // namespace

std::vector<const Face*> LatticePolytope::faces_of_dim(int k) const {
  std::vector<const Face*> out;
  for (const auto& f : faces) {
    if (f.dim == k) out.push_back(&f);
  }
  return out;
}

LatticePolytope polytope_of_points(int n, int d, std::vector<Monomial> points) {
  if (points.empty()) throw InputError(InputErrorKind::invalid_argument, "empty point set has no polytope");
  std::sort(points.begin(), points.end(), std::greater<>());
  LatticePolytope P;
  P.n = n;
  P.d = d;
  P.points = std::move(points);
  P.coords = lattice_coordinates(P.points, n, P.dim);
  if (P.dim > 0) compute_facets(P);
  compute_faces(P);
  return P;
}

LatticePolytope polytope_of(const MonomialIdeal& ideal) {
  auto A = inverse_system(ideal);
  if (A.points.empty()) throw InputError(InputErrorKind::invalid_argument, "inverse system is empty");
  return polytope_of_points(ideal.n(), ideal.d(), std::move(A.points));
}

std::string to_string(SmoothnessCondition c) {
  switch (c) {
    case SmoothnessCondition::vertex_basis: return "vertex-basis";
    case SmoothnessCondition::edge_saturation: return "edge-saturation";
    case SmoothnessCondition::face_lattice: return "face-lattice";
  }
  return "unknown";
}

SmoothnessReport is_smooth(const LatticePolytope& P) {
  SmoothnessReport report;
  report.criterion_caveat = P.n >= 4;
  auto vertices_of = [&P](const Face& f) {
    std::vector<Monomial> out;
    for (auto i : f.vertex_indices) out.push_back(P.points[i]);
    return out;
  };
  const auto edges = P.faces_of_dim(1);

  for (auto v : P.vertices) {
    std::vector<LatticeVector> dirs;
    for (const Face* e : edges) {
      if (!std::binary_search(e->vertex_indices.begin(), e->vertex_indices.end(), v)) continue;
      const std::size_t w = e->vertex_indices[0] == v ? e->vertex_indices[1] : e->vertex_indices[0];
      LatticeVector dir(P.dim);
      std::int64_t g = 0;
      for (int j = 0; j < P.dim; ++j) {
        dir[j] = P.coords[w][j] - P.coords[v][j];
        g = std::gcd(g, dir[j]);
      }
      for (auto& x : dir) x /= g;
      dirs.push_back(std::move(dir));
    }
    if (dirs.size() != static_cast<std::size_t>(P.dim)) {
      report.failures.push_back({SmoothnessCondition::vertex_basis, 0, {P.points[v]},
                                 "vertex " + point_text(P.points[v]) + " lies on " + std::to_string(dirs.size()) +
                                     " edges, expected " + std::to_string(P.dim)});
      continue;
    }
    const std::int64_t det = small_det(dirs);
    if (det != 1 && det != -1) {
      report.failures.push_back({SmoothnessCondition::vertex_basis, 0, {P.points[v]},
                                 "edge directions at vertex " + point_text(P.points[v]) + " have determinant " +
                                     std::to_string(det)});
    }
  }

  for (const Face* e : edges) {
    const Monomial& a = P.points[e->vertex_indices[0]];
    const Monomial& b = P.points[e->vertex_indices[1]];
    const auto dir = primitive_direction(a, b);
    const int len = lattice_length(a, b);
    std::string missing;
    for (int t = 1; t < len; ++t) {
      bool valid = true;
      auto p = offset_point(a, dir, t, valid);
      if (!std::binary_search(P.points.begin(), P.points.end(), p, std::greater<>())) {
        missing += (missing.empty() ? "" : " ") + point_text(p);
      }
    }
    if (!missing.empty()) {
      report.failures.push_back({SmoothnessCondition::edge_saturation, 1, vertices_of(*e),
                                 "edge " + point_text(a) + "-" + point_text(b) + " misses lattice points " + missing});
    }
  }

  for (const auto& f : P.faces) {
    if (f.dim < 1) continue;
    IntMatrix diffs(f.point_indices.size() - 1, P.dim);
    const auto& base = P.coords[f.point_indices[0]];
    for (std::size_t i = 1; i < f.point_indices.size(); ++i) {
      for (int j = 0; j < P.dim; ++j) diffs(i - 1, j) = P.coords[f.point_indices[i]][j] - base[j];
    }
    mpz_class index = 1;
    for (const auto& x : linalg::smith_normal_form(diffs).diagonal) {
      if (sgn(x) != 0) index *= x;
    }
    if (index != 1) {
      report.failures.push_back({SmoothnessCondition::face_lattice, f.dim, vertices_of(f),
                                 std::to_string(f.dim) + "-dimensional face generates a sublattice of index " +
                                     index.get_str()});
    }
  }
  report.is_smooth = report.failures.empty();
  return report;
}

SmoothnessReport is_smooth(const MonomialIdeal& ideal) { return is_smooth(polytope_of(ideal)); }

bool trivial_smoothness_classifier(int n, int d, const Monomial& m) {
  if (n < 2) throw InputError(InputErrorKind::invalid_argument, "classifier needs n >= 2");
  if (m.num_vars() != static_cast<std::size_t>(n) + 1) {
    throw InputError(InputErrorKind::malformed, "monomial has wrong number of variables");
  }
  if (d < 2 || m.degree() != d - 1) throw InputError(InputErrorKind::invalid_argument, "m must have degree d-1");
  if (d == 2) return n == 2 || n == 3;
  if (d == 3) return n == 2 && m.is_pure_power();
  return m.is_pure_power() || m.support_size() >= 3;
}

bool vertex_osculation_defect(const MonomialIdeal& ideal, const Monomial& vertex, int s) {
  if (ideal.n() != 2) throw InputError(InputErrorKind::invalid_argument, "osculation test is implemented for n = 2");
  if (s < 1 || s > ideal.d() - 1) throw InputError(InputErrorKind::invalid_argument, "s must lie in 1..d-1");
  const auto P = polytope_of(ideal);
  if (P.dim != 2) throw InputError(InputErrorKind::invalid_argument, "polytope is not two-dimensional");
  std::size_t v = P.points.size();
  for (auto i : P.vertices) {
    if (P.points[i] == vertex) v = i;
  }
  if (v == P.points.size()) throw InputError(InputErrorKind::invalid_argument, point_text(vertex) + " is not a vertex");

  std::vector<std::vector<int>> dirs;
  for (const Face* e : P.faces_of_dim(1)) {
    if (!std::binary_search(e->vertex_indices.begin(), e->vertex_indices.end(), v)) continue;
    const std::size_t w = e->vertex_indices[0] == v ? e->vertex_indices[1] : e->vertex_indices[0];
    dirs.push_back(primitive_direction(P.points[v], P.points[w]));
  }
  for (int a = 0; a <= s; ++a) {
    for (int b = 0; a + b <= s; ++b) {
      std::vector<int> e(3);
      bool valid = true;
      for (int i = 0; i < 3; ++i) {
        e[i] = vertex[i] + a * dirs[0][i] + b * dirs[1][i];
        valid = valid && e[i] >= 0;
      }
      if (!valid) return false;
      if (!std::binary_search(P.points.begin(), P.points.end(), Monomial(e), std::greater<>())) return false;
    }
  }
  return true;
}

std::string polygon_svg(const MonomialIdeal& ideal) {
  if (ideal.n() != 2) throw InputError(InputErrorKind::invalid_argument, "SVG output is implemented for n = 2");
  const int d = ideal.d();
  const double unit = 40.0, margin = 20.0;
  const double height = d * unit * std::sqrt(3.0) / 2.0;
  auto xy = [&](const Monomial& p) {
    const double x = margin + unit * (p[1] + p[2] / 2.0);
    const double y = margin + height - unit * p[2] * std::sqrt(3.0) / 2.0;
    return std::pair<double, double>{x, y};
  };
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\">\n",
                2 * margin + d * unit, 2 * margin + height);
  out += buf;
  const auto A = inverse_system(ideal);
  if (!A.points.empty()) {
    const auto P = polytope_of(ideal);
    std::vector<std::pair<double, double>> corners;
    for (auto i : P.vertices) corners.push_back(xy(P.points[i]));
    double cx = 0, cy = 0;
    for (auto [x, y] : corners) cx += x, cy += y;
    cx /= corners.size();
    cy /= corners.size();
    std::sort(corners.begin(), corners.end(), [&](auto a, auto b) {
      return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
    });
    out += "<polygon fill=\"#dde8f5\" stroke=\"#1f4e89\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < corners.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", corners[i].first, corners[i].second);
      out += buf;
    }
    out += "\"/>\n";
  }
  for (const auto& p : simplex_points_list(2, d)) {
    auto [x, y] = xy(p);
    if (A.contains(p)) {
      std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"black\"/>\n", x, y);
    } else {
      std::snprintf(buf, sizeof buf,
                    "<path d=\"M%.2f %.2fL%.2f %.2fM%.2f %.2fL%.2f %.2f\" stroke=\"#b22222\" stroke-width=\"2\"/>\n",
                    x - 5, y - 5, x + 5, y + 5, x - 5, y + 5, x + 5, y - 5);
    }
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

nlohmann::json to_json(const SmoothnessReport& report) {
  auto failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    auto verts = nlohmann::json::array();
    for (const auto& v : f.face_vertices) verts.push_back(std::vector<int>(v.exponents().begin(), v.exponents().end()));
    failures.push_back({{"condition", to_string(f.condition)},
                        {"face_dim", f.face_dim},
                        {"face_vertices", verts},
                        {"detail", f.detail}});
  }
  nlohmann::json j{{"is_smooth", report.is_smooth}, {"failures", failures}};
  if (report.criterion_caveat) j["caveat"] = "criterion-as-implemented for n >= 4";
  return j;
}

}  // namespace togliatti
