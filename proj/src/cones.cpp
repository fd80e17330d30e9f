#include "monocone/cones.hpp"

#include <algorithm>
#include <numeric>

#include "monocone/linalg.hpp"

namespace monocone {

namespace {

// Fixed-width bit rows tracking which constraints a ray satisfies with
// equality. Bits are only meaningful for constraints processed so far.
struct BitRow {
  std::vector<std::uint64_t> words;

  explicit BitRow(int bits = 0) : words((bits + 63) / 64, 0) {}
  void set(int i) { words[i / 64] |= 1ull << (i % 64); }
  bool test(int i) const { return (words[i / 64] >> (i % 64)) & 1ull; }
};

int popcount_and(const BitRow& a, const BitRow& b) {
  int c = 0;
  for (std::size_t w = 0; w < a.words.size(); ++w)
    c += __builtin_popcountll(a.words[w] & b.words[w]);
  return c;
}

void assign_and(BitRow& out, const BitRow& a, const BitRow& b) {
  for (std::size_t w = 0; w < a.words.size(); ++w) out.words[w] = a.words[w] & b.words[w];
}

bool subset_of(const BitRow& sub, const BitRow& super) {
  for (std::size_t w = 0; w < sub.words.size(); ++w)
    if (sub.words[w] & ~super.words[w]) return false;
  return true;
}

struct DDRay {
  ZVec coords;
  BitRow tight;
};

ZVec reduced(ZVec v) {
  reduce_by_gcd(v);
  return v;
}

int nonzeros(const ZVec& v) {
  int c = 0;
  for (const Int& x : v)
    if (x != 0) ++c;
  return c;
}

}  // namespace

HCone HCone::make(int dim, std::vector<ZVec> normals) {
  for (ZVec& a : normals) {
    if (static_cast<int>(a.size()) != dim)
      throw Error(ErrorKind::DimensionMismatch, "normal length does not match cone dimension");
    if (is_zero(a)) throw Error(ErrorKind::ValidationError, "zero normal");
    reduce_by_gcd(a);
  }
  return HCone{dim, std::move(normals)};
}

VCone VCone::make(int dim, std::vector<ZVec> rays) {
  for (ZVec& r : rays) {
    if (static_cast<int>(r.size()) != dim)
      throw Error(ErrorKind::DimensionMismatch, "ray length does not match cone dimension");
    if (is_zero(r)) throw Error(ErrorKind::ValidationError, "zero ray");
    reduce_by_gcd(r);
  }
  return VCone{dim, std::move(rays)};
}

bool FarkasCertificate::valid_against(const VCone& cone) const {
  if (static_cast<int>(separator.size()) != cone.dim ||
      static_cast<int>(target.size()) != cone.dim)
    return false;
  for (const ZVec& r : cone.rays) {
    Rat s = 0;
    for (int i = 0; i < cone.dim; ++i) s += separator[i] * r[i];
    if (s < 0) return false;
  }
  return dot(separator, target) < 0;
}

VCone dd_h_to_v(const HCone& cone, const DDOptions& options) {
  const int d = cone.dim;
  const int m = static_cast<int>(cone.normals.size());
  check_internal(d >= 1, "dd_h_to_v: empty dimension");

  // Insertion order: fewest nonzero coefficients first, ties lexicographic.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int na = nonzeros(cone.normals[a]), nb = nonzeros(cone.normals[b]);
    if (na != nb) return na < nb;
    return lex_less(cone.normals[a], cone.normals[b]);
  });
  std::vector<const ZVec*> A(m);
  for (int i = 0; i < m; ++i) A[i] = &cone.normals[order[i]];

  // Pick the first d independent constraints; they bound the starting
  // simplicial cone. Fewer than d of them means the cone contains a line.
  RowBasis basis(d);
  std::vector<int> init;
  std::vector<char> is_init(m, 0);
  for (int i = 0; i < m && static_cast<int>(init.size()) < d; ++i) {
    if (basis.try_add(to_rational(*A[i]))) {
      init.push_back(i);
      is_init[i] = 1;
    }
  }
  if (static_cast<int>(init.size()) < d)
    throw Error(ErrorKind::NotPointed, "constraint normals do not span the space");

  // Initial rays: columns of the inverse of the basis rows, so that
  // <a_i, r_j> = delta_ij.
  std::vector<DDRay> rays;
  {
    std::vector<QVec> M(d);
    for (int k = 0; k < d; ++k) M[k] = to_rational(*A[init[k]]);
    std::vector<QVec> Minv = invert(M);
    for (int j = 0; j < d; ++j) {
      QVec col(d);
      for (int i = 0; i < d; ++i) col[i] = Minv[i][j];
      DDRay r{normalize_ray(col), BitRow(m)};
      for (int k = 0; k < d; ++k)
        if (k != j) r.tight.set(init[k]);
      rays.push_back(std::move(r));
    }
  }

  auto adjacency_rank_check = [&](const BitRow& common, int upto) {
    std::vector<QVec> tight_rows;
    for (int j = 0; j <= upto; ++j)
      if (common.test(j)) tight_rows.push_back(to_rational(*A[j]));
    return rank_of(tight_rows, d) == d - 2;
  };

  BitRow common(m);
  std::vector<Int> value(0);
  for (int i = 0; i < m; ++i) {
    if (is_init[i]) continue;

    value.assign(rays.size(), Int(0));
    std::vector<int> pos, neg, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(*A[i], rays[r].coords);
      int s = sgn(value[r]);
      if (s > 0)
        pos.push_back(static_cast<int>(r));
      else if (s < 0)
        neg.push_back(static_cast<int>(r));
      else
        zero.push_back(static_cast<int>(r));
    }

    if (neg.empty()) {
      for (int r : zero) rays[r].tight.set(i);
      continue;
    }

    std::vector<DDRay> next;
    next.reserve(pos.size() + zero.size());
    for (int r : pos) next.push_back(std::move(rays[r]));
    for (int r : zero) {
      rays[r].tight.set(i);
      next.push_back(std::move(rays[r]));
    }

    // Each adjacent (positive, negative) pair contributes the ray where the
    // new hyperplane cuts their common 2-face.
    for (int rp : pos) {
      const DDRay& p = rays[rp];
      for (int rn : neg) {
        const DDRay& q = rays[rn];
        assign_and(common, p.tight, q.tight);
        bool adjacent = popcount_and(p.tight, q.tight) >= d - 2;
        if (adjacent) {
          for (std::size_t r3 = 0; r3 < rays.size() && adjacent; ++r3) {
            if (static_cast<int>(r3) == rp || static_cast<int>(r3) == rn) continue;
            if (subset_of(common, rays[r3].tight)) adjacent = false;
          }
        }
#ifndef NDEBUG
        check_internal(adjacency_rank_check(common, i - 1) == adjacent,
                       "dd adjacency tests disagree");
#else
        if (options.cross_check_adjacency)
          check_internal(adjacency_rank_check(common, i - 1) == adjacent,
                         "dd adjacency tests disagree");
#endif
        if (!adjacent) continue;

        ZVec combo(d);
        for (int k = 0; k < d; ++k)
          combo[k] = value[rp] * q.coords[k] - value[rn] * p.coords[k];
        DDRay fresh{reduced(std::move(combo)), BitRow(m)};
        assign_and(fresh.tight, p.tight, q.tight);
        fresh.tight.set(i);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<ZVec> out;
  out.reserve(rays.size());
  for (DDRay& r : rays) out.push_back(std::move(r.coords));
  std::sort(out.begin(), out.end(), lex_less);
  return VCone{d, std::move(out)};
}

HCone dd_v_to_h(const VCone& cone, const DDOptions& options) {
  const int d = cone.dim;
  if (cone.rays.empty())
    throw Error(ErrorKind::ValidationError, "dd_v_to_h requires a nonempty ray list");

  // Span basis from the rays themselves, in input order.
  RowBasis rb(d);
  std::vector<int> basis_idx;
  for (std::size_t i = 0; i < cone.rays.size(); ++i)
    if (rb.try_add(to_rational(cone.rays[i]))) basis_idx.push_back(static_cast<int>(i));
  const int k = static_cast<int>(basis_idx.size());

  std::vector<ZVec> normals;

  std::vector<ZVec> facets;
  if (k == d) {
    // Full-dimensional: facet normals are the extremal rays of the polar.
    HCone polar = HCone::make(d, cone.rays);
    facets = dd_h_to_v(polar, options).rays;
  } else {
    // Supporting equalities: both orientations of a null-space basis.
    std::vector<QVec> brows(k);
    for (int j = 0; j < k; ++j) brows[j] = to_rational(cone.rays[basis_idx[j]]);
    for (const ZVec& nv : null_space(brows, d)) {
      normals.push_back(nv);
      ZVec flipped(nv.size());
      for (std::size_t t = 0; t < nv.size(); ++t) flipped[t] = -nv[t];
      normals.push_back(std::move(flipped));
    }

    // Work inside the span: coordinates t with B^T t = r via the Gram matrix.
    std::vector<QVec> gram(k, QVec(k, Rat(0)));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int t = 0; t < d; ++t) gram[a][b] += brows[a][t] * brows[b][t];

    std::vector<ZVec> coords;
    coords.reserve(cone.rays.size());
    for (const ZVec& r : cone.rays) {
      QVec br(k, Rat(0));
      for (int a = 0; a < k; ++a)
        for (int t = 0; t < d; ++t) br[a] += brows[a][t] * Rat(r[t]);
      QVec t = solve(gram, br);
      // Consistency: r must be reproduced exactly from its coordinates.
      for (int c = 0; c < d; ++c) {
        Rat back = 0;
        for (int a = 0; a < k; ++a) back += t[a] * brows[a][c];
        check_internal(back == Rat(r[c]), "dd_v_to_h: ray escapes its own span");
      }
      coords.push_back(normalize_ray(t));
    }

    HCone polar = HCone::make(k, std::move(coords));
    for (const ZVec& u : dd_h_to_v(polar, options).rays) {
      // Lift the facet normal back orthogonally to the lineality directions.
      QVec w = solve(gram, to_rational(u));
      QVec a(d, Rat(0));
      for (int c = 0; c < d; ++c)
        for (int j = 0; j < k; ++j) a[c] += w[j] * brows[j][c];
      facets.push_back(normalize_ray(a));
    }
    std::sort(facets.begin(), facets.end(), lex_less);
  }

  normals.insert(normals.end(), std::make_move_iterator(facets.begin()),
                 std::make_move_iterator(facets.end()));
  return HCone{d, std::move(normals)};
}

ExtremalRayList extremal_rays(const HCone& cone, const DDOptions& options) {
  VCone v = dd_h_to_v(cone, options);
  ExtremalRayList out;
  out.dim = cone.dim;
  for (ZVec& ray : v.rays) {
    ExtremalRay er;
    std::vector<QVec> tight_rows;
    for (std::size_t j = 0; j < cone.normals.size(); ++j)
      if (dot(cone.normals[j], ray) == 0) {
        er.tight.push_back(static_cast<int>(j));
        tight_rows.push_back(to_rational(cone.normals[j]));
      }
    check_internal(rank_of(tight_rows, cone.dim) == cone.dim - 1,
                   "extremal ray without a rank dim-1 active set");
    er.ray = std::move(ray);
    out.rays.push_back(std::move(er));
  }
  return out;
}

MembershipResult membership(const VCone& cone, const QVec& target) {
  const int d = cone.dim;
  const int m = static_cast<int>(cone.rays.size());
  if (static_cast<int>(target.size()) != d)
    throw Error(ErrorKind::DimensionMismatch, "target dimension does not match cone");

  // Phase-one simplex: rows scaled so the artificial basis starts feasible,
  // minimize the artificial total, Bland's rule throughout.
  const int cols = m + d;
  std::vector<QVec> tab(d, QVec(cols, Rat(0)));
  QVec rhs(d);
  std::vector<int> sign(d, 1);
  for (int i = 0; i < d; ++i) {
    if (target[i] < 0) sign[i] = -1;
    for (int j = 0; j < m; ++j) tab[i][j] = Rat(cone.rays[j][i]) * sign[i];
    tab[i][m + i] = 1;
    rhs[i] = target[i] * sign[i];
  }

  std::vector<int> basis(d);
  QVec obj(cols, Rat(0));  // reduced costs under the artificial basis
  for (int i = 0; i < d; ++i) basis[i] = m + i;
  for (int j = 0; j < cols; ++j) {
    Rat c = j >= m ? Rat(1) : Rat(0);
    for (int i = 0; i < d; ++i) c -= tab[i][j];
    obj[j] = c + (j >= m ? Rat(0) : Rat(0));
  }
  // obj[j] = cost_j - sum_i tab[i][j] (artificial costs are all 1)

  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    Rat best;
    for (int i = 0; i < d; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rat ratio = rhs[i] / tab[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    check_internal(leave >= 0, "phase-one simplex claims unbounded descent");

    Rat scale = 1 / tab[leave][enter];
    for (int j = 0; j < cols; ++j) tab[leave][j] *= scale;
    rhs[leave] *= scale;
    for (int i = 0; i < d; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rat f = tab[i][enter];
      for (int j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    Rat f = obj[enter];
    for (int j = 0; j < cols; ++j) obj[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }

  Rat artificial_total = 0;
  for (int i = 0; i < d; ++i)
    if (basis[i] >= m) artificial_total += rhs[i];

  MembershipResult result;
  if (artificial_total == 0) {
    QVec lambda(m, Rat(0));
    for (int i = 0; i < d; ++i)
      if (basis[i] < m) lambda[basis[i]] = rhs[i];
    // Re-verify the decomposition by multiplication before returning it.
    for (int i = 0; i < d; ++i) {
      Rat sum = 0;
      for (int j = 0; j < m; ++j)
        if (lambda[j] != 0) sum += lambda[j] * Rat(cone.rays[j][i]);
      check_internal(sum == target[i], "membership: decomposition fails to reproduce target");
    }
    result.member = true;
    for (int j = 0; j < m; ++j)
      if (lambda[j] > 0) result.coefficients.emplace_back(j, lambda[j]);
    return result;
  }

  // Infeasible: the simplex multipliers give the separating functional.
  FarkasCertificate cert;
  cert.target = target;
  cert.separator.assign(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    Rat pi = Rat(1) - obj[m + i];
    cert.separator[i] = -(pi * sign[i]);
  }
  check_internal(cert.valid_against(cone), "membership: Farkas certificate failed validation");
  result.member = false;
  result.farkas = std::move(cert);
  return result;
}

}  // namespace monocone
