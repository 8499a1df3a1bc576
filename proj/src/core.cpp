#include "gorpoly/core.hpp"

#include <algorithm>
#include <sstream>

namespace gorpoly {

XGcd xgcd(const Int& a, const Int& b) {
  // Iterative extended Euclid; returns g >= 0.
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division is fine for correctness here
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Int binomial(const Int& n, long k) {
  if (k < 0) return 0;
  // Product formula works for negative n as well (polynomial binomial).
  Int num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  GORPOLY_CHECK(den != 0 && num % den == 0, "binomial not integral");
  return num / den;
}

long long to_ll(const Int& v) {
  GORPOLY_CHECK(v >= std::numeric_limits<long long>::min() &&
                    v <= std::numeric_limits<long long>::max(),
                "integer does not fit in 64 bits");
  return v.convert_to<long long>();
}

Int dot(const Vec& a, const Vec& b) {
  GORPOLY_CHECK(a.size() == b.size(), "dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vadd(const Vec& a, const Vec& b) {
  GORPOLY_CHECK(a.size() == b.size(), "vadd: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vsub(const Vec& a, const Vec& b) {
  GORPOLY_CHECK(a.size() == b.size(), "vsub: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vscale(const Int& k, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool is_zero(const Vec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

Int gcd_vec(const Vec& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd_int(g, x);
  return g;
}

Vec primitivize(const Vec& a) {
  Int g = gcd_vec(a);
  if (g <= 1) return a;
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

std::string vec_to_string(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << ")";
  return os.str();
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    GORPOLY_CHECK(rows[i].size() == rows[0].size(), "ragged rows");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat(0, 0);
  Mat m(int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    GORPOLY_CHECK(cols[j].size() == cols[0].size(), "ragged cols");
    for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::row(int i) const {
  Vec r(c_);
  for (int j = 0; j < c_; ++j) r[j] = (*this)(i, j);
  return r;
}

Vec Mat::col(int j) const {
  Vec r(r_);
  for (int i = 0; i < r_; ++i) r[i] = (*this)(i, j);
  return r;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::mul(const Mat& other) const {
  GORPOLY_CHECK(c_ == other.r_, "mul: shape mismatch");
  Mat out(r_, other.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.c_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

Vec Mat::mul_vec(const Vec& x) const {
  GORPOLY_CHECK(int(x.size()) == c_, "mul_vec: shape mismatch");
  Vec out(r_);
  for (int i = 0; i < r_; ++i) {
    Int s = 0;
    for (int j = 0; j < c_; ++j) s += (*this)(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

void Mat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void Mat::negate_row(int i) {
  for (int k = 0; k < c_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void Mat::add_row_multiple(int i, int j, const Int& k) {
  if (k == 0) return;
  for (int t = 0; t < c_; ++t) (*this)(i, t) += k * (*this)(j, t);
}

void Mat::combine_rows(int i, int j, const Int& x, const Int& y, const Int& u,
                       const Int& v) {
  for (int t = 0; t < c_; ++t) {
    Int a = (*this)(i, t), b = (*this)(j, t);
    (*this)(i, t) = x * a + y * b;
    (*this)(j, t) = u * a + v * b;
  }
}

Int det(const Mat& a) {
  GORPOLY_CHECK(a.rows() == a.cols(), "det: not square");
  int n = a.rows();
  if (n == 0) return 1;
  Mat m = a;
  Int prev = 1;
  int swaps = 0;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      ++swaps;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        GORPOLY_CHECK(v % prev == 0, "bareiss divisibility");
        m(i, j) = v / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int d = m(n - 1, n - 1);
  return (swaps % 2) ? Int(-d) : d;
}

int rank(const Mat& a) {
  Mat m = a;
  int r = 0;
  int rows = m.rows(), cols = m.cols();
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(r, p);
    for (int i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Int x = m(r, c), y = m(i, c);
      // row_i <- x*row_i - y*row_r  (kills column c; scaling is fine for rank)
      for (int j = c; j < cols; ++j) m(i, j) = x * m(i, j) - y * m(r, j);
    }
    ++r;
  }
  return r;
}

Rat::Rat(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  GORPOLY_CHECK(den != 0, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd_int(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rat rat_add(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rat rat_sub(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rat rat_mul(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
Rat rat_div(const Rat& a, const Rat& b) {
  GORPOLY_CHECK(b.num != 0, "rational division by zero");
  return Rat(a.num * b.den, a.den * b.num);
}
bool rat_eq(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
bool rat_lt(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }

namespace {

// Fraction-free forward elimination of [A|b]; then exact back substitution.
// Returns a solution of A x = b (all consistency rows checked), or nullopt.
std::optional<std::vector<Rat>> solve_impl(const Mat& a, const Vec& b,
                                           bool require_square_nonsingular) {
  int rows = a.rows(), cols = a.cols();
  GORPOLY_CHECK(int(b.size()) == rows, "solve: rhs size mismatch");
  Mat m(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(r, p);
    for (int i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Int x = m(r, c), y = m(i, c);
      for (int j = c; j <= cols; ++j) m(i, j) = x * m(i, j) - y * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (require_square_nonsingular && (rows != cols || r != cols)) return std::nullopt;
  // Consistency: rows below r must have zero rhs.
  for (int i = r; i < rows; ++i)
    if (m(i, cols) != 0) return std::nullopt;
  // Back substitution; free variables (non-pivot columns) set to 0.
  std::vector<Rat> x(cols, Rat(Int(0)));
  for (int i = r - 1; i >= 0; --i) {
    int c = pivot_col[i];
    Rat s(m(i, cols));
    for (int j = c + 1; j < cols; ++j) {
      if (m(i, j) == 0) continue;
      s = rat_sub(s, rat_mul(Rat(m(i, j)), x[j]));
    }
    x[c] = rat_div(s, Rat(m(i, c)));
  }
  return x;
}

}  // namespace

std::optional<std::vector<Rat>> solve_square(const Mat& a, const Vec& b) {
  return solve_impl(a, b, true);
}

std::optional<std::vector<Rat>> solve_rect(const Mat& a, const Vec& b) {
  return solve_impl(a, b, false);
}

HnfResult hermite_normal_form(const Mat& a) {
  int rows = a.rows(), cols = a.cols();
  HnfResult res{a, Mat::identity(rows), {}};
  Mat& h = res.h;
  Mat& u = res.u;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Clear column c below row r into row r via extended gcd row operations.
    for (int i = r + 1; i < rows; ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        h.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      XGcd g = xgcd(h(r, c), h(i, c));
      Int p = h(r, c) / g.g, q = h(i, c) / g.g;
      // [x y; -q p] has determinant x*p + y*q = (x*a + y*b)/g = 1.
      h.combine_rows(r, i, g.x, g.y, -q, p);
      u.combine_rows(r, i, g.x, g.y, -q, p);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
      }
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  return res;
}

SnfResult smith_normal_form(const Mat& a) {
  int rows = a.rows(), cols = a.cols();
  SnfResult res{a, Mat::identity(rows), Mat::identity(cols)};
  Mat& s = res.s;
  Mat& u = res.u;
  Mat& v = res.v;

  auto col_combine = [&](int i, int j, const Int& x, const Int& y, const Int& p,
                         const Int& q) {
    // cols (i,j) <- (x*col_i + y*col_j, p*col_i + q*col_j) on s and v.
    for (Mat* m : {&s, &v}) {
      for (int t = 0; t < m->rows(); ++t) {
        Int ci = (*m)(t, i), cj = (*m)(t, j);
        (*m)(t, i) = x * ci + y * cj;
        (*m)(t, j) = p * ci + q * cj;
      }
    }
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (Mat* m : {&s, &v})
      for (int t = 0; t < m->rows(); ++t) std::swap((*m)(t, i), (*m)(t, j));
  };
  auto col_negate = [&](int i) {
    for (Mat* m : {&s, &v})
      for (int t = 0; t < m->rows(); ++t) (*m)(t, i) = -(*m)(t, i);
  };

  int k = 0;
  int n = std::min(rows, cols);
  while (k < n) {
    // Find a nonzero pivot in the remaining block.
    int pi = -1, pj = -1;
    for (int i = k; i < rows && pi < 0; ++i)
      for (int j = k; j < cols; ++j)
        if (s(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    s.swap_rows(k, pi);
    u.swap_rows(k, pi);
    col_swap(k, pj);
    // Alternate row/column clearing until the cross is clean.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = k + 1; i < rows; ++i) {
        if (s(i, k) == 0) continue;
        XGcd g = xgcd(s(k, k), s(i, k));
        Int p = s(k, k) / g.g, q = s(i, k) / g.g;
        s.combine_rows(k, i, g.x, g.y, -q, p);
        u.combine_rows(k, i, g.x, g.y, -q, p);
      }
      for (int j = k + 1; j < cols; ++j) {
        if (s(k, j) == 0) continue;
        XGcd g = xgcd(s(k, k), s(k, j));
        Int p = s(k, k) / g.g, q = s(k, j) / g.g;
        col_combine(k, j, g.x, g.y, -q, p);
        dirty = true;  // column ops may repopulate the pivot column
      }
    }
    // Divisibility: make s(k,k) divide everything in the remaining block.
    bool restart = false;
    for (int i = k + 1; i < rows && !restart; ++i)
      for (int j = k + 1; j < cols; ++j)
        if (s(i, j) % s(k, k) != 0) {
          s.add_row_multiple(k, i, 1);
          u.add_row_multiple(k, i, 1);
          restart = true;
          break;
        }
    if (restart) continue;
    if (s(k, k) < 0) {
      s.negate_row(k);
      u.negate_row(k);
    }
    ++k;
  }
  // Sanity: diagonal divisibility chain.
  for (int i = 0; i + 1 < n; ++i) {
    if (s(i, i) != 0 && s(i + 1, i + 1) != 0)
      GORPOLY_CHECK(s(i + 1, i + 1) % s(i, i) == 0, "SNF divisibility chain");
  }
  return res;
}

std::vector<Vec> kernel_basis(const Mat& a) {
  // Row-HNF of A^T: H = U * A^T; zero rows of H correspond to rows of U that
  // are in the kernel of x -> A x (as column vectors).
  HnfResult hr = hermite_normal_form(a.transpose());
  int rk = int(hr.pivot_cols.size());
  std::vector<Vec> basis;
  for (int i = rk; i < hr.u.rows(); ++i) basis.push_back(hr.u.row(i));
  // Verify.
  for (const Vec& x : basis) GORPOLY_CHECK(is_zero(a.mul_vec(x)), "kernel_basis");
  return basis;
}

std::vector<Vec> saturated_span_basis(const std::vector<Vec>& vectors, int dim) {
  std::vector<Vec> nonzero;
  for (const Vec& v : vectors) {
    GORPOLY_CHECK(int(v.size()) == dim, "saturated_span_basis: dim mismatch");
    if (!is_zero(v)) nonzero.push_back(v);
  }
  if (nonzero.empty()) return {};
  // Functionals vanishing on the span:
  std::vector<Vec> perp = kernel_basis(Mat::from_rows(nonzero));
  if (perp.empty()) {
    std::vector<Vec> std_basis;
    for (int i = 0; i < dim; ++i) {
      Vec e(dim, Int(0));
      e[i] = 1;
      std_basis.push_back(e);
    }
    return std_basis;
  }
  // Saturation = vectors killed by all those functionals.
  std::vector<Vec> basis = kernel_basis(Mat::from_rows(perp));
  GORPOLY_CHECK(int(basis.size()) == dim - int(perp.size()),
                "saturated_span_basis rank");
  return basis;
}

Int lattice_index_of_rows(const std::vector<Vec>& rows) {
  HnfResult hr = hermite_normal_form(Mat::from_rows(rows));
  GORPOLY_CHECK(int(hr.pivot_cols.size()) == int(rows.size()),
                "lattice_index_of_rows: rows dependent");
  Int p = 1;
  for (size_t i = 0; i < rows.size(); ++i) p *= hr.h(int(i), hr.pivot_cols[i]);
  return p;
}

}  // namespace gorpoly
