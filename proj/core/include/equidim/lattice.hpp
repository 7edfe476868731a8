#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace equidim {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;
// Order of a group element or group; std::nullopt means infinite.
using Order = std::optional<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);
  static IntMatrix from_ints(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  IntMatrix diagonal;  // U * M * V
  IntMatrix left;      // U
  IntMatrix right;     // V
  std::size_t rank = 0;

  // The nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<Integer> factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Exact determinant (fraction-free elimination); matrix must be square.
Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank_of(const std::vector<IntVector>& vectors, std::size_t dim);

// Basis of {x : m x = 0} over Z.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

// Canonical row echelon basis of the lattice spanned by the given vectors:
// positive pivots, entries above each pivot reduced into [0, pivot).
std::vector<IntVector> hermite_basis(std::vector<IntVector> generators, std::size_t dim);

class Sublattice {
 public:
  Sublattice() = default;
  explicit Sublattice(std::size_t ambient) : ambient_(ambient) {}
  Sublattice(std::size_t ambient, std::vector<IntVector> generators);

  static Sublattice full(std::size_t ambient);
  static Sublattice from_columns(const IntMatrix& m);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  IntMatrix basis_matrix() const;  // basis vectors as columns

  bool contains(const IntVector& v) const;
  bool contains(const Sublattice& other) const;
  // Coefficients of v in the stored basis, or nullopt if v is not in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool is_saturated() const;
  bool is_full() const { return rank() == ambient_ && index_in_ambient() == 1; }
  // Index in Z^n; nullopt if the rank is deficient.
  Order index_in_ambient() const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> basis_;
};

Sublattice sum(const Sublattice& a, const Sublattice& b);
Sublattice intersect(const Sublattice& a, const Sublattice& b);
Sublattice scale(const Integer& m, const Sublattice& a);
Sublattice saturate(const Sublattice& a);
// {x : map * x in target}.
Sublattice preimage(const IntMatrix& map, const Sublattice& target);
// Image of a lattice under a linear map.
Sublattice image(const IntMatrix& map, const Sublattice& source);

struct DiophantineSolution {
  IntVector particular;
  Sublattice kernel;
};

std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& m, const IntVector& b);

// Order of v + L in Z^n / L.
Order class_order(const IntVector& v, const Sublattice& lattice);

// Z^n modulo the column span of a relation matrix.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  FgAbGroup(std::size_t n_generators, const IntMatrix& relations);
  static FgAbGroup quotient(const Sublattice& relations);

  std::size_t n_generators() const { return n_; }
  const IntMatrix& relations() const { return relations_; }
  // d_1 | d_2 | ... with units dropped; 0 encodes a free factor.
  const std::vector<Integer>& invariant_factors() const { return factors_; }

  // Coordinates of the class of v against invariant_factors(); torsion
  // coordinates reduced into [0, d).
  IntVector coordinates(const IntVector& v) const;
  bool is_zero(const IntVector& v) const;
  Order order_of(const IntVector& v) const;
  Order order() const;
  Order exponent() const;
  bool is_trivial() const { return factors_.empty(); }
  // Invariant factors of the subgroup generated by the classes of elements.
  std::vector<Integer> subgroup_invariants(const std::vector<IntVector>& elements) const;
  // Lattice of Z^n given by relations plus the elements.
  Sublattice relation_lattice() const;

 private:
  std::size_t n_ = 0;
  IntMatrix relations_;
  IntMatrix left_;  // U of the Smith form
  std::vector<Integer> diag_;  // length n_: d_i for i < rank, 0 afterwards
  std::vector<Integer> factors_;
  std::vector<std::size_t> kept_;  // indices into diag_ that appear in factors_
};

// Invariant factors of big / small (small must be contained in big).
std::vector<Integer> quotient_invariants(const Sublattice& big, const Sublattice& small);

Integer lcm(const Integer& a, const Integer& b);
Order lcm(const Order& a, const Order& b);
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& m);  // in [0, |m|)
Integer gcd_of(const IntVector& v);
std::string to_string(const Order& o);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Integer& s, const IntVector& v);
IntVector to_integers(const std::vector<long>& v);
bool is_zero(const IntVector& v);

}  // namespace equidim
