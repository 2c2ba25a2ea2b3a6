#pragma once

// Lattice polytope P_I = conv(A_I) with its face lattice, and the
// combinatorial smoothness test for the toric variety of A_I.
//
// Points are first expressed in integer coordinates of the affine lattice
// Z^{n+1} ∩ Aff(P_I) (dropping x0, then an SNF change of basis when P_I is
// not full-dimensional), so every hull computation below runs in Z^k with
// k = dim P_I.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "togliatti/monomial.hpp"

namespace togliatti {

using LatticeVector = std::vector<std::int64_t>;

struct Face {
  int dim = 0;
  std::vector<std::size_t> point_indices;   // into LatticePolytope::points
  std::vector<std::size_t> vertex_indices;  // subset of point_indices
  std::vector<std::size_t> facets;          // facets containing this face
};

struct LatticePolytope {
  int n = 0;
  int d = 0;
  int dim = 0;
  std::vector<Monomial> points;              // A_I, descending
  std::vector<LatticeVector> coords;         // coordinates in Z^dim
  std::vector<std::size_t> vertices;         // indices into points
  std::vector<LatticeVector> facet_normals;  // facet i: normal . x <= offset
  std::vector<std::int64_t> facet_offsets;
  std::vector<Face> faces;                   // every nonempty face, P itself last

  std::vector<const Face*> faces_of_dim(int k) const;
};

/// Throws InputError when A_I is empty.
LatticePolytope polytope_of(const MonomialIdeal& ideal);
LatticePolytope polytope_of_points(int n, int d, std::vector<Monomial> points);

enum class SmoothnessCondition { vertex_basis, edge_saturation, face_lattice };

std::string to_string(SmoothnessCondition c);

struct SmoothnessFailure {
  SmoothnessCondition condition;
  int face_dim = 0;
  std::vector<Monomial> face_vertices;
  std::string detail;
};

struct SmoothnessReport {
  bool is_smooth = true;
  std::vector<SmoothnessFailure> failures;
  /// Set for n >= 4, where only the implemented criterion is claimed.
  bool criterion_caveat = false;
};

/// Checks at every vertex that it is simple with a unimodular set of
/// primitive edge directions, that every lattice point on an edge lies in
/// A_I, and that A_I ∩ Γ affinely generates Z^{n+1} ∩ Aff(Γ) for every face.
SmoothnessReport is_smooth(const MonomialIdeal& ideal);
SmoothnessReport is_smooth(const LatticePolytope& polytope);

/// Closed-form verdict for (x0,...,xn)m + (x0^d,...,xn^d), d = deg m + 1.
bool trivial_smoothness_classifier(int n, int d, const Monomial& m);

/// n = 2 only. True when the s-th osculating space at the torus-fixed point
/// of vertex v has full dimension: with e1, e2 the primitive edge vectors at
/// v, every point v + a*e1 + b*e2 with a, b >= 0 and a + b <= s lies in A_I.
bool vertex_osculation_defect(const MonomialIdeal& ideal, const Monomial& vertex, int s);

/// SVG drawing of dΔ_2 with A_I as dots, removed points as crosses and P_I
/// outlined. n = 2 only.
std::string polygon_svg(const MonomialIdeal& ideal);

nlohmann::json to_json(const SmoothnessReport& report);

}  // namespace togliatti
