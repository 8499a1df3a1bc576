#pragma once
// Exact integer arithmetic, vectors/matrices over Z, and the integer linear
// algebra kernel (Bareiss determinants, exact solves, Hermite and Smith normal
// forms, kernels, saturation). Everything is arbitrary precision; no floating
// point is used anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gorpoly {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Domain errors: invalid or out-of-domain input (reported to the user; CLI
// exit code 1 with a machine-readable payload).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Internal errors: a proven invariant failed. Must never happen on valid
// inputs; indicates a bug, not a user mistake.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& message)
      : std::logic_error(message) {}
};

#define GORPOLY_CHECK(cond, msg)                                   \
  do {                                                             \
    if (!(cond)) throw ::gorpoly::InternalError(std::string(msg)); \
  } while (0)

// ---------------------------------------------------------------------------
// Int helpers
// ---------------------------------------------------------------------------

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// Floor division/modulo (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  GORPOLY_CHECK(b != 0, "floor_div by zero");
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}
inline Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Extended gcd: returns (g, x, y) with g = gcd(a,b) >= 0 and a*x + b*y = g.
struct XGcd {
  Int g, x, y;
};
XGcd xgcd(const Int& a, const Int& b);

Int binomial(const Int& n, long k);  // n may be negative (polynomial binomial)

// Checked narrowing for interfaces that want machine integers.
long long to_ll(const Int& v);

// ---------------------------------------------------------------------------
// Vec helpers
// ---------------------------------------------------------------------------

Int dot(const Vec& a, const Vec& b);
Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Int& k, const Vec& a);
bool is_zero(const Vec& a);
Int gcd_vec(const Vec& a);
// Divides by gcd; zero vector stays zero. Does not normalize sign.
Vec primitivize(const Vec& a);
std::string vec_to_string(const Vec& a);

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// ---------------------------------------------------------------------------
// Matrices (dense, row-major)
// ---------------------------------------------------------------------------

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_cols(const std::vector<Vec>& cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Int& operator()(int i, int j) { return e_[size_t(i) * c_ + j]; }
  const Int& operator()(int i, int j) const { return e_[size_t(i) * c_ + j]; }
  Vec row(int i) const;
  Vec col(int j) const;
  Mat transpose() const;
  Mat mul(const Mat& other) const;
  Vec mul_vec(const Vec& x) const;
  bool operator==(const Mat& other) const {
    return r_ == other.r_ && c_ == other.c_ && e_ == other.e_;
  }

  void swap_rows(int i, int j);
  void negate_row(int i);
  // row(i) += k * row(j)
  void add_row_multiple(int i, int j, const Int& k);
  // rows (i,j) <- (x*row_i + y*row_j, u*row_i + v*row_j); caller keeps det ±1.
  void combine_rows(int i, int j, const Int& x, const Int& y, const Int& u,
                    const Int& v);

 private:
  int r_ = 0, c_ = 0;
  std::vector<Int> e_;
};

// ---------------------------------------------------------------------------
// Exact linear algebra
// ---------------------------------------------------------------------------

// Determinant by fraction-free (Bareiss) elimination. Square input.
Int det(const Mat& a);

int rank(const Mat& a);

// Exact rational: num/den with den > 0, reduced.
struct Rat {
  Int num, den;
  Rat() : num(0), den(1) {}
  Rat(Int n, Int d);
  explicit Rat(const Int& n) : num(n), den(1) {}
  bool is_integer() const { return den == 1; }
};
Rat rat_add(const Rat& a, const Rat& b);
Rat rat_sub(const Rat& a, const Rat& b);
Rat rat_mul(const Rat& a, const Rat& b);
Rat rat_div(const Rat& a, const Rat& b);
bool rat_eq(const Rat& a, const Rat& b);
bool rat_lt(const Rat& a, const Rat& b);

// Solves A x = b exactly for square nonsingular A; returns nullopt when A is
// singular or the system is inconsistent on the given b.
std::optional<std::vector<Rat>> solve_square(const Mat& a, const Vec& b);

// Solves A x = b for rectangular A (least structure: returns any exact
// solution if one exists, nullopt otherwise). Used for membership tests.
std::optional<std::vector<Rat>> solve_rect(const Mat& a, const Vec& b);

// Hermite normal form (row style): returns (H, U) with H = U * A, U
// unimodular, H in row-echelon HNF: pivot columns strictly increase, pivots
// positive, entries above each pivot reduced into [0, pivot).
struct HnfResult {
  Mat h, u;
  std::vector<int> pivot_cols;  // one per pivot row
};
HnfResult hermite_normal_form(const Mat& a);

// Smith normal form: returns (S, U, V) with S = U * A * V diagonal,
// s_1 | s_2 | ... , s_i >= 0, U and V unimodular.
struct SnfResult {
  Mat s, u, v;
};
SnfResult smith_normal_form(const Mat& a);

// Basis of the integer kernel {x in Z^cols : A x = 0}; returned as a list of
// vectors. The lattice they span is saturated (it is a kernel).
std::vector<Vec> kernel_basis(const Mat& a);

// Basis of the saturation (span_Q(vectors) ∩ Z^dim) of the lattice spanned by
// the given vectors; size = rank. Deterministic.
std::vector<Vec> saturated_span_basis(const std::vector<Vec>& vectors, int dim);

// Product of |diagonal| of the full-rank square part: |det| of the lattice
// spanned by the rows (rows must be linearly independent).
Int lattice_index_of_rows(const std::vector<Vec>& rows);

}  // namespace gorpoly
