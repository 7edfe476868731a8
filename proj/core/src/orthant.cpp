#include "equidim/orthant.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "equidim/errors.hpp"

namespace equidim {

namespace {

constexpr std::size_t kMaxSubsetDim = 20;

std::int64_t to_i64(const Integer& x, const char* what) {
  if (!x.fits_slong_p()) throw ResourceCapError(std::string(what) + " exceeds 64-bit range");
  return x.get_si();
}

// Integer basis of the rational equations cutting out span(L).
std::vector<IntVector> span_equations(const Sublattice& lattice) {
  const std::size_t n = lattice.ambient_rank();
  if (lattice.rank() == 0) return Sublattice::full(n).basis();
  return kernel_basis(IntMatrix::from_rows(lattice.basis(), n));
}

std::vector<IntVector> primitive_rays(const std::vector<IntVector>& eqs, std::size_t n) {
  if (n > kMaxSubsetDim) throw ResourceCapError("ray enumeration: ambient dimension " + std::to_string(n) + " too large");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  std::vector<std::uint32_t> supports;
  std::vector<IntVector> rays;
  for (std::uint32_t m : masks) {
    if (std::any_of(supports.begin(), supports.end(), [m](std::uint32_t s) { return (s & m) == s; })) continue;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (1u << i)) cols.push_back(i);
    std::vector<IntVector> ker;
    if (eqs.empty()) {
      if (cols.size() == 1) ker.push_back(IntVector{1});
    } else {
      IntMatrix sub(eqs.size(), cols.size());
      for (std::size_t r = 0; r < eqs.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = eqs[r][cols[c]];
      ker = kernel_basis(sub);
    }
    if (ker.size() != 1) continue;
    IntVector k = ker.front();
    int sign = 0;
    bool ok = true;
    for (const auto& x : k) {
      int s = sgn(x);
      if (s == 0 || (sign != 0 && s != sign)) { ok = false; break; }
      sign = s;
    }
    if (!ok) continue;
    Integer g = gcd_of(k);
    IntVector ray(n);
    for (std::size_t c = 0; c < cols.size(); ++c) ray[cols[c]] = k[c] * sign / g;
    supports.push_back(m);
    rays.push_back(std::move(ray));
  }
  return rays;
}

// Pulling triangulation of a cone whose faces are coordinate faces.
void triangulate(const std::vector<Point>& rays, const std::vector<std::size_t>& idx, std::size_t dim,
                 std::vector<std::vector<std::size_t>>& out) {
  if (idx.size() == dim) {
    out.push_back(idx);
    return;
  }
  const std::size_t r0 = idx.front();
  const std::size_t n = rays[r0].size();
  std::set<std::vector<std::size_t>> facets;
  for (std::size_t i = 0; i < n; ++i) {
    if (rays[r0][i] == 0) continue;
    std::vector<std::size_t> f;
    for (std::size_t j : idx)
      if (rays[j][i] == 0) f.push_back(j);
    if (f.size() + 1 < dim) continue;
    std::vector<IntVector> vs;
    for (std::size_t j : f) vs.push_back(to_integers(rays[j]));
    if (rank_of(vs, n) == dim - 1) facets.insert(std::move(f));
  }
  for (const auto& f : facets) {
    std::vector<std::vector<std::size_t>> sub;
    triangulate(rays, f, dim - 1, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), r0);
      out.push_back(std::move(s));
    }
  }
}

// Inverse of a nonsingular integer matrix, scaled by |det|: returns (D, D*M^{-1}).
std::pair<Integer, IntMatrix> scaled_inverse(const IntMatrix& m) {
  const std::size_t d = m.rows();
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = m(i, j);
    a[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t j = 0; j < 2 * d; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Integer det = abs(determinant(m));
  IntMatrix inv(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      mpq_class v = a[i][d + j] * det;
      inv(i, j) = v.get_num();
    }
  return {det, inv};
}

template <class Keep>
std::vector<Point> hilbert_basis_filtered(const Sublattice& lattice, const ResourceCaps& caps, Keep keep) {
  const std::size_t n = lattice.ambient_rank();
  std::vector<Point> rays = extreme_rays(lattice, caps);
  if (rays.empty()) return {};
  std::vector<IntVector> ray_ints;
  for (const auto& r : rays) ray_ints.push_back(to_integers(r));
  const std::size_t dim = rank_of(ray_ints, n);
  Sublattice cone_lattice = intersect(lattice, saturate(Sublattice(n, ray_ints)));

  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  triangulate(rays, all, dim, simplices);

  struct Prepared {
    std::vector<std::size_t> rays;
    std::vector<std::int64_t> box;   // residue box of Z^d / (ray lattice)
    std::vector<std::vector<std::int64_t>> inv;  // |det| * R^{-1}
    std::int64_t det = 1;
  };
  std::vector<Prepared> prepared;
  Integer total = 0;
  for (const auto& s : simplices) {
    IntMatrix coords(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      auto c = cone_lattice.coordinates(ray_ints[s[j]]);
      if (!c) throw InvariantViolation("extreme ray outside the cone lattice");
      for (std::size_t i = 0; i < dim; ++i) coords(i, j) = (*c)[i];
    }
    Prepared p;
    p.rays = s;
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < dim; ++j) cols.push_back(coords.column(j));
    auto h = hermite_basis(cols, dim);
    for (std::size_t i = 0; i < dim; ++i) p.box.push_back(to_i64(h[i][i], "parallelotope size"));
    auto [det, inv] = scaled_inverse(coords);
    p.det = to_i64(det, "simplex volume");
    p.inv.assign(dim, std::vector<std::int64_t>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) p.inv[i][j] = to_i64(inv(i, j), "simplex inverse");
    total += det;
    if (total > Integer(static_cast<unsigned long>(caps.max_candidates)))
      throw ResourceCapError("Hilbert basis: more than " + std::to_string(caps.max_candidates) +
                             " parallelotope candidates (" + std::to_string(simplices.size()) +
                             " simplices, " + std::to_string(rays.size()) + " extreme rays)");
    prepared.push_back(std::move(p));
  }

  std::vector<Point> cand;
  for (const auto& r : rays)
    if (keep(r)) cand.push_back(r);
  for (const auto& p : prepared) {
    std::vector<std::int64_t> y(dim, 0);
    std::vector<__int128> frac(dim);
    for (;;) {
      // fractional parts of R^{-1} y, times det
      bool nonzero = false;
      for (std::size_t i = 0; i < dim; ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < dim; ++j) acc += static_cast<__int128>(p.inv[i][j]) * y[j];
        acc %= p.det;
        if (acc < 0) acc += p.det;
        frac[i] = acc;
        nonzero |= acc != 0;
      }
      if (nonzero) {
        Point x(n);
        for (std::size_t c = 0; c < n; ++c) {
          __int128 acc = 0;
          for (std::size_t i = 0; i < dim; ++i) acc += frac[i] * rays[p.rays[i]][c];
          x[c] = static_cast<std::int64_t>(acc / p.det);
        }
        if (keep(x)) cand.push_back(std::move(x));
      }
      std::size_t k = 0;
      while (k < dim && ++y[k] == p.box[k]) y[k++] = 0;
      if (k == dim) break;
    }
  }
  sort_graded(cand);
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Point> basis;
  for (const auto& x : cand) {
    bool reducible = std::any_of(basis.begin(), basis.end(), [&](const Point& h) { return dominates(x, h); });
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace

Point to_point(const IntVector& v) {
  Point p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = to_i64(v[i], "coordinate");
  return p;
}

std::int64_t degree(const Point& p) {
  std::int64_t d = 0;
  for (auto x : p) d += x;
  return d;
}

bool graded_less(const Point& a, const Point& b) {
  auto da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

bool dominates(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

void sort_graded(std::vector<Point>& pts) { std::sort(pts.begin(), pts.end(), graded_less); }

std::vector<Point> extreme_rays(const Sublattice& lattice, const ResourceCaps&) {
  const std::size_t n = lattice.ambient_rank();
  if (lattice.rank() == 0) return {};
  std::vector<IntVector> eqs = lattice.rank() == n ? std::vector<IntVector>{} : span_equations(lattice);
  FgAbGroup quotient = FgAbGroup::quotient(lattice);
  std::vector<Point> rays;
  for (const auto& r : primitive_rays(eqs, n)) {
    Order m = quotient.order_of(r);
    if (!m) throw InvariantViolation("extreme ray has no multiple in the lattice");
    rays.push_back(to_point(*m * r));
  }
  sort_graded(rays);
  return rays;
}

std::vector<Point> orthant_hilbert_basis(const Sublattice& lattice, const ResourceCaps& caps) {
  return hilbert_basis_filtered(lattice, caps, [](const Point&) { return true; });
}

std::vector<Point> orthant_coset_minima(const IntVector& offset, const Sublattice& lattice,
                                        const ResourceCaps& caps) {
  const std::size_t n = lattice.ambient_rank();
  if (offset.size() != n) throw InputError("offset length does not match lattice");
  if (lattice.contains(offset)) return {Point(n, 0)};
  // homogenize: (x, k) with x - k*offset in L
  std::vector<IntVector> gens;
  for (const auto& b : lattice.basis()) {
    IntVector g = b;
    g.push_back(0);
    gens.push_back(std::move(g));
  }
  IntVector top = offset;
  top.push_back(1);
  gens.push_back(std::move(top));
  Sublattice lifted(n + 1, std::move(gens));
  auto basis = hilbert_basis_filtered(lifted, caps, [n](const Point& x) { return x[n] <= 1; });
  std::vector<Point> out;
  for (auto& x : basis)
    if (x[n] == 1) {
      x.pop_back();
      out.push_back(std::move(x));
    }
  sort_graded(out);
  return out;
}

CosetTest::CosetTest(const IntVector& offset, const Sublattice& lattice) {
  SmithForm f = smith_normal_form(lattice.basis_matrix());
  rank_ = f.rank;
  const std::size_t n = lattice.ambient_rank();
  IntVector c = f.left * offset;
  for (std::size_t i = 0; i < n; ++i) {
    Integer mod = i < f.rank ? Integer(f.diagonal(i, i)) : Integer(0);
    if (mod == 1) continue;  // no constraint
    std::vector<std::int64_t> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = to_i64(f.left(i, j), "membership transform");
    rows_.push_back(std::move(row));
    moduli_.push_back(to_i64(mod, "lattice modulus"));
    target_.push_back(to_i64(mod == 0 ? c[i] : mod_floor(c[i], mod), "coset offset"));
  }
}

bool CosetTest::operator()(const Point& x) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += static_cast<__int128>(rows_[r][j]) * x[j];
    if (moduli_[r] == 0) {
      if (acc != target_[r]) return false;
    } else {
      acc %= moduli_[r];
      if (acc < 0) acc += moduli_[r];
      if (acc != target_[r]) return false;
    }
  }
  return true;
}

std::uint64_t graded_count(std::size_t n, int d) {
  // C(n + d, n)
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    c = c * static_cast<unsigned>(d + static_cast<int>(i)) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<Point> enumerate_orthant_coset(const IntVector& offset, const Sublattice& lattice,
                                           int max_degree, const ResourceCaps& caps) {
  const std::size_t n = lattice.ambient_rank();
  if (max_degree < 0) return {};
  if (graded_count(n, max_degree) > caps.max_candidates)
    throw ResourceCapError("enumeration to degree " + std::to_string(max_degree) + " in dimension " +
                           std::to_string(n) + " exceeds " + std::to_string(caps.max_candidates) +
                           " candidates");
  CosetTest test(offset, lattice);
  std::vector<Point> out;
  for_each_graded(n, max_degree, [&](const Point& x) {
    if (test(x)) out.push_back(x);
  });
  return out;
}

}  // namespace equidim
