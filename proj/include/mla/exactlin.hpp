// Exact rational linear algebra: matrices, subspaces, forms, polynomials.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mla {

using Q = mpq_class;
using Vec = std::vector<Q>;

Q parse_rational(const std::string& s);  // throws std::invalid_argument
std::string to_string(const Q& q);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Q& s, const Vec& a);
void axpy(Vec& y, const Q& a, const Vec& x);  // y += a x
Q dot(const Vec& a, const Vec& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
  static Matrix identity(std::size_t n);
  static Matrix from_cols(std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Matrix diag(const Vec& d);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Q& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  std::vector<Vec> col_list() const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return r_ == c_; }
  bool is_symmetric() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Q& s) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Q> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix block_diag(const std::vector<Matrix>& blocks);

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(const Matrix& m);
// Columns form a basis of ker m, one per free variable.
Matrix kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

struct AffineSolution {
  std::optional<Vec> particular;
  Matrix kernel;  // columns
};
AffineSolution solve_affine(const Matrix& a, const Vec& b);

// Incremental sparse linear system sum_j c_j x_j = rhs.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t nvars) : n_(nvars) {}
  using Row = std::vector<std::pair<std::size_t, Q>>;
  void add(const Row& lhs, const Q& rhs = 0);
  void add_dense(const Vec& lhs, const Q& rhs = 0);
  std::size_t nvars() const { return n_; }
  bool consistent() const { return consistent_; }
  AffineSolution solve() const;

 private:
  std::size_t n_;
  bool consistent_ = true;
  std::vector<std::pair<std::size_t, Row>> piv_;  // pivot column, normalized row incl. rhs at index n_
  std::vector<long> where_;                       // pivot column -> index into piv_, or -1
};

// Subspace of Q^n kept in reduced column-echelon form so equality is syntactic.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t n) : n_(n), b_(n, 0) {}
  static Subspace span(std::size_t n, const std::vector<Vec>& vs);
  static Subspace from_cols(const Matrix& m);
  static Subspace whole(std::size_t n);
  static Subspace kernel_of(const Matrix& m);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return b_.cols(); }
  const Matrix& basis() const { return b_; }
  Vec vec(std::size_t i) const { return b_.col(i); }
  std::vector<Vec> vecs() const { return b_.col_list(); }
  bool is_zero() const { return dim() == 0; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  std::optional<Vec> coords(const Vec& v) const;  // coefficients in basis, if contained
  bool operator==(const Subspace& o) const { return n_ == o.n_ && b_ == o.b_; }

 private:
  std::size_t n_ = 0;
  Matrix b_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace image(const Matrix& m, const Subspace& u);
Subspace preimage(const Matrix& m, const Subspace& w);
// Basis of a complement of w inside v (w must lie in v).
std::vector<Vec> complement_basis(const Subspace& v, const Subspace& w);

struct Signature {
  std::size_t p = 0;  // negative
  std::size_t q = 0;  // positive
  std::size_t r = 0;  // nullity
  bool operator==(const Signature&) const = default;
};
Signature signature(const Matrix& s);
Subspace radical_of_form(const Matrix& s);
// Gram matrix of s restricted to span of columns of b.
Matrix restrict_form(const Matrix& s, const Matrix& b);
bool nondegenerate_on(const Matrix& s, const Subspace& u);

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Q> c);  // low degree first
  static Poly monomial(const Q& c, std::size_t deg);
  static Poly x_minus(const Q& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Q>& coeffs() const { return c_; }
  Q coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Q(0); }
  Q lead() const { return c_.empty() ? Q(0) : c_.back(); }
  Poly monic() const;
  Poly derivative() const;
  Q eval(const Q& x) const;
  Matrix eval(const Matrix& a) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  std::string str() const;

 private:
  void trim();
  std::vector<Q> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic (or zero)
// g = s a + t b with g = gcd(a,b) monic.
void ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);
std::vector<Q> rational_roots(const Poly& p);

Poly minimal_polynomial(const Matrix& a);
Poly squarefree_part(const Poly& m);
bool is_semisimple_operator(const Matrix& a);
std::vector<Matrix> spectral_idempotents(const Matrix& a);

}  // namespace mla
