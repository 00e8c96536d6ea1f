#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "ordered_group.hpp"

namespace toric {

// A polyhedral cone given by its (primitive, sorted) generating rays.
// Cones stored in a Fan are maximal, simplicial and full-dimensional.
struct Cone {
  std::vector<IntVec> rays;
};

struct Fan {
  std::size_t ambient = 0;
  std::vector<Cone> cones;
};

inline Cone normalize_cone(std::vector<IntVec> rays) {
  for (IntVec& r : rays) r = primitive_vector(std::move(r));
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  rays.erase(std::remove_if(rays.begin(), rays.end(), is_zero_vec), rays.end());
  return {std::move(rays)};
}

inline IntMat ray_matrix(const Cone& c) { return IntMat(c.rays.begin(), c.rays.end()); }

inline std::size_t cone_rank(const Cone& c) {
  return c.rays.empty() ? 0 : rank_int(ray_matrix(c));
}

inline bool is_simplicial(const Cone& c) { return cone_rank(c) == c.rays.size(); }

// Index of a simplicial cone in the lattice it spans: gcd of maximal minors.
inline Int cone_index(const Cone& c) {
  if (c.rays.empty()) return 1;
  return minors_gcd(ray_matrix(c), c.rays.size());
}

inline bool is_regular(const Cone& c) {
  return is_simplicial(c) && cone_index(c) == 1;
}

inline Fan positive_orthant_fan(std::size_t n) {
  Cone c;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    c.rays.push_back(std::move(e));
  }
  return {n, {c}};
}

inline void sort_fan(Fan& f) {
  std::sort(f.cones.begin(), f.cones.end(),
            [](const Cone& a, const Cone& b) { return a.rays < b.rays; });
  f.cones.erase(std::unique(f.cones.begin(), f.cones.end(),
                            [](const Cone& a, const Cone& b) { return a.rays == b.rays; }),
                f.cones.end());
}

// Inequality description of a full-dimensional simplicial cone: primitive
// integer normals a with cone = { x : a . x >= 0 for all a }.
inline std::vector<IntVec> cone_inequalities(const Cone& c) {
  const std::size_t n = c.rays.empty() ? 0 : c.rays[0].size();
  require(c.rays.size() == n && is_simplicial(c), "unsupported",
          "inequalities need a full-dimensional simplicial cone");
  RatMat inv = rat_inverse(to_rat(ray_matrix(c)));
  std::vector<IntVec> ineqs;
  for (std::size_t j = 0; j < n; ++j) {
    Int den = 1;
    for (std::size_t i = 0; i < n; ++i)
      den = den / gcd(den, inv[i][j].get_den()) * inv[i][j].get_den();
    IntVec a(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rat scaled = inv[i][j] * den;
      a[i] = scaled.get_num();
    }
    ineqs.push_back(primitive_vector(std::move(a)));
  }
  return ineqs;
}

namespace detail {

// Rational nullspace basis of a set of row vectors inside Q^n.
inline RatMat nullspace_cols(const std::vector<IntVec>& rows, std::size_t n) {
  if (rows.empty()) {
    RatMat basis(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
    return basis;
  }
  return rat_nullspace(to_rat(IntMat(rows.begin(), rows.end())));
}

}  // namespace detail

// Extreme rays of the pointed cone { x : a . x >= 0 for all a in ineqs },
// enumerated from (n-1)-subsets of active constraints.
inline std::vector<IntVec> extreme_rays(const std::vector<IntVec>& ineqs, std::size_t n) {
  std::set<IntVec> found;
  if (n == 0) return {};
  for_each_subset(ineqs.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVec> sel;
    for (std::size_t i : idx) sel.push_back(ineqs[i]);
    RatMat ns = detail::nullspace_cols(sel, n);
    if (ns.size() != 1) return;
    Int den = 1;
    for (const Rat& x : ns[0]) den = den / gcd(den, x.get_den()) * x.get_den();
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rat scaled = ns[0][i] * den;
      v[i] = scaled.get_num();
    }
    v = primitive_vector(std::move(v));
    for (int s : {1, -1}) {
      IntVec cand = s == 1 ? v : vec_scale(Int(-1), v);
      bool ok = true;
      for (const IntVec& a : ineqs)
        if (dot(a, cand) < 0) {
          ok = false;
          break;
        }
      if (ok) {
        found.insert(std::move(cand));
        break;
      }
    }
  });
  return {found.begin(), found.end()};
}

namespace detail {

// Pulling triangulation of cone(rays), whose facets are cut out by `ineqs`.
inline void pulling_triangulation(const std::vector<IntVec>& rays,
                                  const std::vector<IntVec>& ineqs, std::size_t n,
                                  std::vector<std::vector<IntVec>>& out) {
  if (rays.empty()) return;
  std::size_t rk = rank_int(IntMat(rays.begin(), rays.end()));
  if (rk == rays.size()) {
    out.push_back(rays);
    return;
  }
  const IntVec& r0 = rays.front();
  std::set<std::vector<IntVec>> facets;
  for (const IntVec& a : ineqs) {
    if (dot(a, r0) <= 0) continue;  // facet contains r0 (or wrong side)
    std::vector<IntVec> f;
    for (const IntVec& r : rays)
      if (dot(a, r) == 0) f.push_back(r);
    if (f.empty()) continue;
    if (rank_int(IntMat(f.begin(), f.end())) != rk - 1) continue;
    facets.insert(std::move(f));
  }
  for (const std::vector<IntVec>& f : facets) {
    std::vector<std::vector<IntVec>> sub;
    pulling_triangulation(f, ineqs, n, sub);
    for (std::vector<IntVec>& s : sub) {
      s.push_back(r0);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
}

}  // namespace detail

// Refine a fan of full-dimensional simplicial cones so that every cone lies
// on one side of each given hyperplane (normals), re-triangulating the pieces.
inline Fan refine_with_hyperplanes(const Fan& f, const std::vector<IntVec>& normals) {
  const std::size_t n = f.ambient;
  Fan out{n, {}};
  std::vector<IntVec> hs;
  for (const IntVec& h : normals) {
    IntVec p = primitive_vector(h);
    if (!is_zero_vec(p)) hs.push_back(std::move(p));
  }
  for (const Cone& c : f.cones) {
    std::vector<IntVec> base = cone_inequalities(c);
    const std::size_t L = hs.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << L); ++mask) {
      std::vector<IntVec> ineqs = base;
      for (std::size_t l = 0; l < L; ++l)
        ineqs.push_back((mask >> l) & 1 ? vec_scale(Int(-1), hs[l]) : hs[l]);
      std::vector<IntVec> rays = extreme_rays(ineqs, n);
      if (rays.size() < n) continue;
      if (rank_int(IntMat(rays.begin(), rays.end())) < n) continue;
      std::vector<std::vector<IntVec>> tris;
      detail::pulling_triangulation(rays, ineqs, n, tris);
      for (std::vector<IntVec>& t : tris) out.cones.push_back(normalize_cone(std::move(t)));
    }
  }
  sort_fan(out);
  return out;
}

// Barycentric-style coordinates of x in a full-dimensional simplicial cone.
inline RatVec coords_in_cone(const Cone& c, const RatVec& x) {
  RatMat Rt = to_rat(transpose(ray_matrix(c)));
  auto sol = rat_solve(Rt, x);
  require(sol.has_value(), "internal", "coordinates in simplicial cone");
  return *sol;
}

inline bool cone_contains(const Cone& c, const IntVec& x) {
  RatVec xq(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) xq[i] = x[i];
  for (const Rat& t : coords_in_cone(c, xq))
    if (t < 0) return false;
  return true;
}

// Lattice point of the half-open parallelepiped of a non-regular cone with
// minimal coordinate sum (ties: lexicographically least coordinates, then
// lexicographically least point).  Such a point is automatically primitive.
inline IntVec subdivision_point(const Cone& c) {
  const std::size_t n = c.rays.size();
  IntMat R = ray_matrix(c);
  SnfResult s = snf(R);
  IntMat Vinv;
  {
    RatMat vi = rat_inverse(to_rat(s.V));
    Vinv.assign(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        require(vi[i][j].get_den() == 1, "internal", "unimodular inverse not integral");
        Vinv[i][j] = vi[i][j].get_num();
      }
  }
  RatMat Rinv = rat_inverse(to_rat(R));
  std::optional<IntVec> best;
  RatVec best_c;
  Rat best_sum;
  IntVec z(n, 0);
  while (true) {
    // coset representative z * V^{-1}, reduced into the half-open box
    IntVec x0 = mat_vec(transpose(Vinv), z);
    RatVec cq(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) cq[j] += x0[i] * Rinv[i][j];
    IntVec x = x0;
    RatVec cfrac(n);
    for (std::size_t j = 0; j < n; ++j) {
      Int fl = floor_rat(cq[j]);
      cfrac[j] = cq[j] - fl;
      if (fl != 0) x = vec_sub(x, vec_scale(fl, R[j]));
    }
    if (!is_zero_vec(x)) {
      Rat sum(0);
      for (const Rat& t : cfrac) sum += t;
      if (!best || sum < best_sum || (sum == best_sum && (cfrac < best_c || (cfrac == best_c && x < *best)))) {
        best = x;
        best_c = cfrac;
        best_sum = sum;
      }
    }
    // advance z through the product of Z/d_i (only indices with d_i > 1 move)
    std::size_t i = 0;
    while (i < n) {
      Int di = i < s.d.size() ? s.d[i] : Int(1);
      if (di == 0) di = 1;
      z[i] += 1;
      if (z[i] < di) break;
      z[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  require(best.has_value(), "internal", "regular cone has no subdivision point");
  return *best;
}

// Stellar subdivision of the fan at the primitive lattice point x: every
// maximal cone containing x is split along the faces opposite to x.
inline void stellar_subdivide(Fan& f, const IntVec& x) {
  std::vector<Cone> next;
  for (const Cone& c : f.cones) {
    RatVec xq(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xq[i] = x[i];
    RatVec t = coords_in_cone(c, xq);
    bool inside = std::all_of(t.begin(), t.end(), [](const Rat& v) { return v >= 0; });
    if (!inside) {
      next.push_back(c);
      continue;
    }
    bool is_ray = false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] != 0 && c.rays[i] == x) is_ray = true;
    if (is_ray) {
      next.push_back(c);
      continue;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == 0) continue;
      std::vector<IntVec> rays;
      for (std::size_t j = 0; j < c.rays.size(); ++j)
        if (j != i) rays.push_back(c.rays[j]);
      rays.push_back(x);
      next.push_back(normalize_cone(std::move(rays)));
    }
  }
  f.cones = std::move(next);
  sort_fan(f);
}

// A protected face: a set of rays that must survive as a face of the fan.
inline bool fan_contains_face(const Fan& f, const std::vector<IntVec>& face) {
  for (const Cone& c : f.cones) {
    bool all = true;
    for (const IntVec& r : face)
      if (!std::binary_search(c.rays.begin(), c.rays.end(), r)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

// Iterated stellar subdivision until every cone is regular.  Protected faces
// (already regular) are never subdivided; their survival is re-verified.
// The worklist is keyed by ray sets so the subdivision order (lex-least
// non-regular cone first) is deterministic, and cones touched by a stellar
// step are located through a per-ray incidence index instead of a full scan.
inline Fan regularize(Fan f, const std::vector<std::vector<IntVec>>& protected_faces = {}) {
  for (const auto& face : protected_faces)
    require(fan_contains_face(f, face), "protected-face-destroyed",
            "protected face absent before regularization");
  const std::size_t n = f.ambient;
  std::vector<Cone> store;
  std::vector<bool> alive;
  std::map<IntVec, std::vector<std::size_t>> by_ray;
  std::map<std::vector<IntVec>, std::size_t> nonregular;
  auto add_cone = [&](Cone c) {
    Int d = abs(det_int(ray_matrix(c)));
    std::size_t id = store.size();
    for (const IntVec& r : c.rays) by_ray[r].push_back(id);
    if (d != 1) nonregular.emplace(c.rays, id);
    store.push_back(std::move(c));
    alive.push_back(true);
  };
  for (Cone& c : f.cones) add_cone(std::move(c));
  while (!nonregular.empty()) {
    std::size_t bad = nonregular.begin()->second;
    IntVec x = subdivision_point(store[bad]);
    RatVec xq(n);
    for (std::size_t i = 0; i < n; ++i) xq[i] = x[i];
    // carrier face of x inside the bad cone: every cone containing x
    // meets the bad cone in a face containing x, so its rays include these
    RatVec tc = coords_in_cone(store[bad], xq);
    std::vector<IntVec> carrier;
    for (std::size_t i = 0; i < n; ++i)
      if (tc[i] != 0) carrier.push_back(store[bad].rays[i]);
    // candidates: live cones incident to the least-used carrier ray
    const std::vector<std::size_t>* shortest = nullptr;
    for (const IntVec& r : carrier) {
      const std::vector<std::size_t>& lst = by_ray[r];
      if (!shortest || lst.size() < shortest->size()) shortest = &lst;
    }
    std::vector<std::size_t> affected;
    for (std::size_t ci : *shortest) {
      if (!alive[ci]) continue;
      const Cone& c = store[ci];
      bool has_carrier = true;
      for (const IntVec& r : carrier)
        if (!std::binary_search(c.rays.begin(), c.rays.end(), r)) {
          has_carrier = false;
          break;
        }
      if (!has_carrier) continue;
      RatVec t = coords_in_cone(c, xq);
      if (std::all_of(t.begin(), t.end(), [](const Rat& v) { return v >= 0; }))
        affected.push_back(ci);
    }
    for (std::size_t ci : affected) {
      alive[ci] = false;
      nonregular.erase(store[ci].rays);
      RatVec t = coords_in_cone(store[ci], xq);
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == 0) continue;
        std::vector<IntVec> rays;
        for (std::size_t j = 0; j < store[ci].rays.size(); ++j)
          if (j != i) rays.push_back(store[ci].rays[j]);
        rays.push_back(x);
        add_cone(normalize_cone(std::move(rays)));
      }
    }
  }
  f.cones.clear();
  for (std::size_t i = 0; i < store.size(); ++i)
    if (alive[i]) f.cones.push_back(std::move(store[i]));
  sort_fan(f);
  for (const auto& face : protected_faces)
    require(fan_contains_face(f, face), "protected-face-destroyed",
            "protected face destroyed during regularization");
  return f;
}

// ---------------------------------------------------------------------------
// Weight cones.
// ---------------------------------------------------------------------------

// sigma(b) = b^T (dual of cone(columns of b)) inside the weight space R^N.
struct WeightCone {
  IntMat b;                                   // r x N degree matrix
  std::vector<IntVec> rays;                   // rays of sigma(b) in Z^N
  std::vector<std::vector<IntVec>> regular_faces;  // faces (ray sets) that are regular
};

inline WeightCone weight_cone(const IntMat& b) {
  const std::size_t r = nrows(b), N = ncols(b);
  SnfResult s = snf(b);
  bool gen = s.rank == r;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d[i] != 1) gen = false;
  require(gen, "group-not-generated", "columns of b must generate Z^r");
  // dual of cone(gamma_1..gamma_N) in R^r, the gamma_i being the columns
  std::vector<IntVec> gammas;
  for (std::size_t j = 0; j < N; ++j) {
    IntVec g(r);
    for (std::size_t i = 0; i < r; ++i) g[i] = b[i][j];
    gammas.push_back(std::move(g));
  }
  std::vector<IntVec> drays = extreme_rays(gammas, r);
  WeightCone wc;
  wc.b = b;
  IntMat bt = transpose(b);
  auto push_image = [&](const std::vector<IntVec>& ys, std::vector<IntVec>& out) {
    for (const IntVec& y : ys) out.push_back(primitive_vector(mat_vec(bt, y)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  };
  push_image(drays, wc.rays);
  // faces of the dual via the closure operator on vanishing sets
  std::set<std::vector<IntVec>> faces;
  const std::size_t K = drays.size();
  require(K <= 20, "too-large", "dual cone has too many extreme rays");
  for (std::size_t mask = 1; mask < (std::size_t(1) << K); ++mask) {
    std::vector<IntVec> T;
    for (std::size_t i = 0; i < K; ++i)
      if ((mask >> i) & 1) T.push_back(drays[i]);
    std::vector<std::size_t> vanish;
    for (std::size_t g = 0; g < gammas.size(); ++g) {
      bool all0 = true;
      for (const IntVec& y : T)
        if (dot(gammas[g], y) != 0) {
          all0 = false;
          break;
        }
      if (all0) vanish.push_back(g);
    }
    std::vector<IntVec> closure;
    for (const IntVec& y : drays) {
      bool ok = true;
      for (std::size_t g : vanish)
        if (dot(gammas[g], y) != 0) {
          ok = false;
          break;
        }
      if (ok) closure.push_back(y);
    }
    if (closure == T) faces.insert(T);
  }
  for (const std::vector<IntVec>& F : faces) {
    std::vector<IntVec> img;
    push_image(F, img);
    IntMat m(img.begin(), img.end());
    std::size_t k = img.size();
    if (rank_int(m) == k && minors_gcd(m, k) == 1) wc.regular_faces.push_back(img);
  }
  std::sort(wc.regular_faces.begin(), wc.regular_faces.end());
  wc.regular_faces.erase(std::unique(wc.regular_faces.begin(), wc.regular_faces.end()),
                         wc.regular_faces.end());
  return wc;
}

// ---------------------------------------------------------------------------
// RES fans: hyperplane-compatible regular fans protecting sigma(b).
// ---------------------------------------------------------------------------

// `extra` hyperplanes (for instance tail-term weight differences) refine the
// fan further without being part of the ker(b) spanning requirement.
inline Fan build_RES_fan(const IntMat& b, const std::vector<IntVec>& normals,
                         WeightCone* wc_out = nullptr,
                         const std::vector<IntVec>& extra = {}) {
  const std::size_t r = nrows(b), N = ncols(b);
  for (const IntVec& h : normals)
    require(is_zero_vec(mat_vec(b, h)), "normals-do-not-span",
            "hyperplane normal not orthogonal to the degree rows");
  require(normals.empty() ? r == N
                          : rank_int(IntMat(normals.begin(), normals.end())) == N - r,
          "normals-do-not-span", "hyperplane normals must span ker(b) over Q");
  WeightCone wc = weight_cone(b);
  if (wc_out) *wc_out = wc;
  std::vector<IntVec> hyps = normals;
  hyps.insert(hyps.end(), extra.begin(), extra.end());
  Fan f = refine_with_hyperplanes(positive_orthant_fan(N), hyps);
  // presence of the protected faces; carve missing ones by extra hyperplanes
  std::vector<IntVec> carve;
  for (const auto& face : wc.regular_faces)
    if (!fan_contains_face(f, face))
      for (const IntVec& h : kernel_lattice(IntMat(face.begin(), face.end())))
        carve.push_back(h);
  if (!carve.empty()) {
    std::vector<IntVec> all = hyps;
    all.insert(all.end(), carve.begin(), carve.end());
    f = refine_with_hyperplanes(positive_orthant_fan(N), all);
  }
  for (const auto& face : wc.regular_faces)
    require(fan_contains_face(f, face), "res-fan-construction-failed",
            "weight cone face not realized in the refined fan");
  return regularize(std::move(f), wc.regular_faces);
}

// ---------------------------------------------------------------------------
// Locating weights and reading off charts.
// ---------------------------------------------------------------------------

// Index of the first maximal cone containing the weight point w (coordinates
// are elements of the ordered group `spec`).
inline std::size_t locate_weight(const Fan& f, const OrderSpec& spec,
                                 const std::vector<GroupElement>& w) {
  require(w.size() == f.ambient, "shape-mismatch", "weight point dimension");
  for (std::size_t ci = 0; ci < f.cones.size(); ++ci) {
    const Cone& c = f.cones[ci];
    if (c.rays.size() != f.ambient) continue;
    RatMat Rt = to_rat(transpose(ray_matrix(c)));
    RatMat inv;
    try {
      inv = rat_inverse(Rt);
    } catch (const Error&) {
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < f.ambient && ok; ++i) {
      GroupElement ci_elt = ge_zero(spec);
      for (std::size_t j = 0; j < f.ambient; ++j)
        ci_elt = ge_add(ci_elt, ge_scale(inv[i][j], w[j]));
      if (compare(spec, ci_elt, ge_zero(spec)) < 0) ok = false;
    }
    if (ok) return ci;
  }
  fail("weight-not-in-support", "weight point lies in no maximal cone");
}

// Chart of a regular full-dimensional cone: the matrix M with rows a^j = rays
// (in stored order); the monomial substitution is U_i -> prod_j Y_j^{M[j][i]}.
inline IntMat chart_of(const Cone& c) {
  require(is_regular(c) && c.rays.size() == (c.rays.empty() ? 0 : c.rays[0].size()),
          "chart-not-regular", "chart requires a regular full-dimensional cone");
  return ray_matrix(c);
}

}  // namespace toric
