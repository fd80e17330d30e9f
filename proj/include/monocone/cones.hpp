#pragma once

// Exact rational cone geometry: double description conversion between the
// half-space and ray representations, extremal rays with activity proofs,
// and certificate-producing cone membership via phase-one simplex.
//
// Cones pass through the origin; there is no inhomogeneous support and no
// floating-point fast path.

#include <optional>
#include <utility>
#include <vector>

#include "monocone/rational.hpp"

namespace monocone {

// {x : <a, x> >= 0 for every normal a}. Normals are integer, gcd-reduced,
// never zero.
struct HCone {
  int dim = 0;
  std::vector<ZVec> normals;

  static HCone make(int dim, std::vector<ZVec> normals);
};

// {sum lambda_i r_i : lambda_i >= 0}. Rays are integer with gcd 1, never zero.
struct VCone {
  int dim = 0;
  std::vector<ZVec> rays;

  static VCone make(int dim, std::vector<ZVec> rays);
};

// Separating functional proving non-membership: nonnegative on every ray of
// the cone, strictly negative on the target.
struct FarkasCertificate {
  QVec separator;
  QVec target;

  bool valid_against(const VCone& cone) const;
};

struct DDOptions {
  // Re-derive each combinatorial adjacency decision by the algebraic rank
  // test. Always on in debug builds; selectable in tests otherwise.
  bool cross_check_adjacency = false;
};

// Extremal rays of the intersection of half-spaces. Rays come back integer
// normalized and sorted lexicographically. Throws NotPointed when the
// normals do not span (the cone contains a line).
VCone dd_h_to_v(const HCone& cone, const DDOptions& options = {});

// Minimal facet description of the conic hull. Lower-dimensional ray sets
// yield both orientations of each supporting equality plus the facets within
// the span.
HCone dd_v_to_h(const VCone& cone, const DDOptions& options = {});

struct ExtremalRay {
  ZVec ray;
  std::vector<int> tight;  // indices into the input normal list, rank dim-1
};

struct ExtremalRayList {
  int dim = 0;
  std::vector<ExtremalRay> rays;
};

// dd_h_to_v plus, per ray, the tight input normals certifying extremality.
ExtremalRayList extremal_rays(const HCone& cone, const DDOptions& options = {});

struct MembershipResult {
  bool member = false;
  // ray index -> strictly positive coefficient; re-verified against the
  // target by exact multiplication before being returned.
  std::vector<std::pair<int, Rat>> coefficients;
  std::optional<FarkasCertificate> farkas;
};

// Exact feasibility of target in the conic hull, phase-one simplex with
// Bland's rule. Either outcome carries its certificate.
MembershipResult membership(const VCone& cone, const QVec& target);

}  // namespace monocone
