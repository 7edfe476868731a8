#include "equidim/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "equidim/errors.hpp"

namespace equidim {

// ---------------------------------------------------------------- helpers

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  Integer am = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Order lcm(const Order& a, const Order& b) {
  if (!a || !b) return std::nullopt;
  return lcm(*a, *b);
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::string to_string(const Order& o) { return o ? o->get_str() : std::string("infinite"); }

IntVector operator+(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector operator*(const Integer& s, const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

IntVector to_integers(const std::vector<long>& v) {
  IntVector r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    assert(cols[j].size() == rows);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<long>(i * cols_),
                   data_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols_ == b.rows_);
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  assert(a.cols_ == v.size());
  IntVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) r[i] += a(i, k) * v[k];
  return r;
}

// ---------------------------------------------------------------- Smith form

namespace {

struct SmithWork {
  IntMatrix s, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s(a, j), s(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s(i, a), s(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
  }
  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < s.cols(); ++j) s(dst, j) += q * s(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += q * u(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < s.rows(); ++i) s(i, dst) += q * s(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += q * v(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < s.cols(); ++j) s(r, j) = -s(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
  }
};

// Quotient rounded to nearest, so remainders stay small.
Integer round_div(const Integer& a, const Integer& b) {
  Integer twice = 2 * a + b;
  return floor_div(twice, 2 * b);
}

}  // namespace

std::vector<Integer> SmithForm::factors() const {
  std::vector<Integer> f;
  for (std::size_t i = 0; i < rank; ++i) f.push_back(diagonal(i, i));
  return f;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (w.s(i, j) != 0 && (pi == rows || abs(w.s(i, j)) < abs(w.s(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.s(i, t) == 0) continue;
        w.add_row(i, t, -round_div(w.s(i, t), w.s(t, t)));
        if (w.s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.s(t, j) == 0) continue;
        w.add_col(j, t, -round_div(w.s(t, j), w.s(t, t)));
        if (w.s(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (w.s(i, t) != 0 && abs(w.s(i, t)) < abs(w.s(bi, bj))) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.s(t, j) != 0 && abs(w.s(t, j)) < abs(w.s(bi, bj))) { bi = t; bj = j; }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // divisibility: fold an offending row into the pivot row and repeat
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.s(i, j) % w.s(t, t) != 0) { bad = i; break; }
      if (bad == rows) break;
      w.add_row(t, bad, 1);
    }
    if (w.s(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.s), std::move(w.u), std::move(w.v), t};
}

// ---------------------------------------------------------------- elimination

Integer determinant(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank_of(const std::vector<IntVector>& vectors, std::size_t dim) {
  return hermite_basis(vectors, dim).size();
}

std::size_t rank(const IntMatrix& m) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rank_of(rows, m.cols());
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m);
  std::vector<IntVector> k;
  for (std::size_t j = f.rank; j < m.cols(); ++j) k.push_back(f.right.column(j));
  return k;
}

std::vector<IntVector> hermite_basis(std::vector<IntVector> rows, std::size_t dim) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < dim && pivot_row < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q = rows[r][col] / rows[pivot_row][col];
        for (std::size_t j = col; j < dim; ++j) rows[r][j] -= q * rows[pivot_row][j];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (pivot_row >= rows.size() || rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    const Integer& piv = rows[pivot_row][col];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q = floor_div(rows[r][col], piv);
      if (q == 0) continue;
      for (std::size_t j = col; j < dim; ++j) rows[r][j] -= q * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

// ---------------------------------------------------------------- Sublattice

Sublattice::Sublattice(std::size_t ambient, std::vector<IntVector> generators) : ambient_(ambient) {
  for (const auto& g : generators)
    if (g.size() != ambient) throw InputError("generator length does not match ambient rank");
  basis_ = hermite_basis(std::move(generators), ambient);
}

Sublattice Sublattice::full(std::size_t ambient) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < ambient; ++i) {
    IntVector e(ambient);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return Sublattice(ambient, std::move(gens));
}

Sublattice Sublattice::from_columns(const IntMatrix& m) {
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < m.cols(); ++j) gens.push_back(m.column(j));
  return Sublattice(m.rows(), std::move(gens));
}

IntMatrix Sublattice::basis_matrix() const { return IntMatrix::from_columns(basis_, ambient_); }

std::optional<IntVector> Sublattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw InputError("vector length does not match ambient rank");
  IntVector rest = v;
  IntVector coeff(basis_.size());
  std::size_t col = 0;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const IntVector& b = basis_[r];
    while (b[col] == 0) {
      if (rest[col] != 0) return std::nullopt;
      ++col;
    }
    if (rest[col] % b[col] != 0) return std::nullopt;
    coeff[r] = rest[col] / b[col];
    for (std::size_t j = col; j < ambient_; ++j) rest[j] -= coeff[r] * b[j];
    ++col;
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeff;
}

bool Sublattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Sublattice::contains(const Sublattice& other) const {
  if (other.ambient_ != ambient_) throw InputError("ambient mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const IntVector& b) { return contains(b); });
}

bool Sublattice::is_saturated() const { return saturate(*this) == *this; }

Order Sublattice::index_in_ambient() const {
  if (rank() != ambient_) return std::nullopt;
  Integer idx = 1;
  std::size_t col = 0;
  for (const auto& b : basis_) {
    while (b[col] == 0) ++col;
    idx *= b[col];
    ++col;
  }
  return idx;
}

namespace {
void require_same_ambient(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw InputError("ambient mismatch");
}
}  // namespace

Sublattice sum(const Sublattice& a, const Sublattice& b) {
  require_same_ambient(a, b);
  std::vector<IntVector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Sublattice(a.ambient_rank(), std::move(gens));
}

Sublattice intersect(const Sublattice& a, const Sublattice& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_rank(), ka = a.rank(), kb = b.rank();
  if (ka == 0 || kb == 0) return Sublattice(n);
  // kernel of [A | -B]; the A-part of each kernel vector gives an element
  IntMatrix stacked(n, ka + kb);
  for (std::size_t j = 0; j < ka; ++j)
    for (std::size_t i = 0; i < n; ++i) stacked(i, j) = a.basis()[j][i];
  for (std::size_t j = 0; j < kb; ++j)
    for (std::size_t i = 0; i < n; ++i) stacked(i, ka + j) = -b.basis()[j][i];
  std::vector<IntVector> gens;
  for (const auto& k : kernel_basis(stacked)) {
    IntVector x(n);
    for (std::size_t j = 0; j < ka; ++j)
      for (std::size_t i = 0; i < n; ++i) x[i] += k[j] * a.basis()[j][i];
    gens.push_back(std::move(x));
  }
  return Sublattice(n, std::move(gens));
}

Sublattice scale(const Integer& m, const Sublattice& a) {
  std::vector<IntVector> gens;
  for (const auto& b : a.basis()) gens.push_back(m * b);
  return Sublattice(a.ambient_rank(), std::move(gens));
}

Sublattice saturate(const Sublattice& a) {
  const std::size_t n = a.ambient_rank();
  if (a.rank() == 0) return Sublattice(n);
  // orthogonal complement, then its orthogonal complement again
  IntMatrix bt = IntMatrix::from_rows(a.basis(), n);
  std::vector<IntVector> orth = kernel_basis(bt);
  if (orth.empty()) return Sublattice::full(n);
  return Sublattice(n, kernel_basis(IntMatrix::from_rows(orth, n)));
}

Sublattice preimage(const IntMatrix& map, const Sublattice& target) {
  if (map.rows() != target.ambient_rank()) throw InputError("ambient mismatch");
  const std::size_t n = map.cols(), m = map.rows(), k = target.rank();
  if (m == 0) return Sublattice::full(n);
  IntMatrix stacked(m, n + k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) stacked(i, j) = map(i, j);
    for (std::size_t j = 0; j < k; ++j) stacked(i, n + j) = -target.basis()[j][i];
  }
  std::vector<IntVector> gens;
  for (const auto& kv : kernel_basis(stacked)) gens.emplace_back(kv.begin(), kv.begin() + static_cast<long>(n));
  return Sublattice(n, std::move(gens));
}

Sublattice image(const IntMatrix& map, const Sublattice& source) {
  if (map.cols() != source.ambient_rank()) throw InputError("ambient mismatch");
  std::vector<IntVector> gens;
  for (const auto& b : source.basis()) gens.push_back(map * b);
  return Sublattice(map.rows(), std::move(gens));
}

// ---------------------------------------------------------------- solving

std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw InputError("right-hand side length does not match matrix rows");
  SmithForm f = smith_normal_form(m);
  IntVector c = f.left * b;
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < f.rank) {
      const Integer& d = f.diagonal(i, i);
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<IntVector> ker;
  for (std::size_t j = f.rank; j < m.cols(); ++j) ker.push_back(f.right.column(j));
  return DiophantineSolution{f.right * y, Sublattice(m.cols(), std::move(ker))};
}

Order class_order(const IntVector& v, const Sublattice& lattice) {
  return FgAbGroup::quotient(lattice).order_of(v);
}

// ---------------------------------------------------------------- FgAbGroup

FgAbGroup::FgAbGroup(std::size_t n_generators, const IntMatrix& relations)
    : n_(n_generators), relations_(relations) {
  if (relations.rows() != n_generators) throw InputError("relation matrix has wrong row count");
  SmithForm f = smith_normal_form(relations);
  left_ = std::move(f.left);
  diag_.assign(n_, 0);
  for (std::size_t i = 0; i < f.rank; ++i) diag_[i] = f.diagonal(i, i);
  for (std::size_t i = 0; i < n_; ++i)
    if (diag_[i] != 1) {
      factors_.push_back(diag_[i]);
      kept_.push_back(i);
    }
}

FgAbGroup FgAbGroup::quotient(const Sublattice& relations) {
  return FgAbGroup(relations.ambient_rank(), relations.basis_matrix());
}

IntVector FgAbGroup::coordinates(const IntVector& v) const {
  if (v.size() != n_) throw InputError("element has wrong length");
  IntVector w = left_ * v;
  IntVector c;
  for (std::size_t i : kept_) c.push_back(diag_[i] == 0 ? w[i] : mod_floor(w[i], diag_[i]));
  return c;
}

bool FgAbGroup::is_zero(const IntVector& v) const { return equidim::is_zero(coordinates(v)); }

Order FgAbGroup::order_of(const IntVector& v) const {
  IntVector c = coordinates(v);
  Integer ord = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Integer& d = factors_[k];
    if (d == 0) {
      if (c[k] != 0) return std::nullopt;
      continue;
    }
    ord = lcm(ord, d / gcd(c[k], d));
  }
  return ord;
}

Order FgAbGroup::order() const {
  Integer o = 1;
  for (const auto& d : factors_) {
    if (d == 0) return std::nullopt;
    o *= d;
  }
  return o;
}

Order FgAbGroup::exponent() const {
  Integer e = 1;
  for (const auto& d : factors_) {
    if (d == 0) return std::nullopt;
    e = lcm(e, d);
  }
  return e;
}

Sublattice FgAbGroup::relation_lattice() const { return Sublattice::from_columns(relations_); }

std::vector<Integer> FgAbGroup::subgroup_invariants(const std::vector<IntVector>& elements) const {
  Sublattice rel = relation_lattice();
  Sublattice big = sum(rel, Sublattice(n_, elements));
  return quotient_invariants(big, rel);
}

std::vector<Integer> quotient_invariants(const Sublattice& big, const Sublattice& small) {
  require_same_ambient(big, small);
  const std::size_t k = big.rank();
  IntMatrix coords(k, small.rank());
  for (std::size_t j = 0; j < small.rank(); ++j) {
    auto c = big.coordinates(small.basis()[j]);
    if (!c) throw InvariantViolation("quotient_invariants: lattice not contained");
    for (std::size_t i = 0; i < k; ++i) coords(i, j) = (*c)[i];
  }
  return FgAbGroup(k, coords).invariant_factors();
}

}  // namespace equidim
