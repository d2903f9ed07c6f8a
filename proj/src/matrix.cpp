#include "erdos/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "erdos/errors.hpp"

namespace erdos {

namespace {

using IntRows = std::vector<std::vector<BigInt>>;

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

// Multiplies a rational row by the lcm of its denominators.
std::vector<BigInt> integer_row(std::span<const Rational> row) {
  BigInt l = 1;
  for (const auto& q : row) {
    const BigInt d = q.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(q.num() * (l / q.den()));
  return out;
}

// Fraction-free (Bareiss) forward elimination. Pivots are searched in the
// first `pivot_cols` columns; the remaining columns ride along. Every entry
// after step k is a (k+1)-minor of the input, so the division by the
// previous pivot is exact. Returns the pivot columns, one per pivot row.
std::vector<std::size_t> bareiss(IntRows& a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  BigInt prev = 1;
  BigInt t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const BigInt& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), piv.get_mpz_t());
        mpz_mul(t.get_mpz_t(), lead.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_sub(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), t.get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Solves an upper-triangular integer system produced by `bareiss` for each
// right-hand column, dividing into rationals only at this stage.
RationalMatrix back_substitute(const IntRows& u, std::size_t n, std::size_t rhs_cols) {
  RationalMatrix x(n, rhs_cols);
  for (std::size_t col = 0; col < rhs_cols; ++col) {
    for (std::size_t k = n; k-- > 0;) {
      Rational acc(u[k][n + col]);
      for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(u[k][j]) * x(j, col);
      acc /= Rational(u[k][k]);
      x(k, col) = std::move(acc);
    }
  }
  return x;
}

RationalMatrix solve_integer_system(IntRows a, std::size_t n, std::size_t rhs_cols) {
  const auto pivots = bareiss(a, n);
  if (pivots.size() < n) throw SingularMatrixError("matrix is singular (rank " + std::to_string(pivots.size()) + " < " + std::to_string(n) + ")");
  return back_substitute(a, n, rhs_cols);
}

void require_same_n(std::span<const Permutation> perms) {
  for (const auto& p : perms) {
    if (p.size() != perms.front().size()) throw DimensionError("permutations of mixed sizes");
  }
}

std::size_t perm_set_rank(std::span<const Permutation> perms, bool affine) {
  if (perms.empty()) return 0;
  require_same_n(perms);
  IntRows rows;
  rows.reserve(perms.size());
  for (const auto& p : perms) {
    const auto ind = perm_indicator(p);
    std::vector<BigInt> row(ind.begin(), ind.end());
    if (affine) row.emplace_back(1);
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.front().size();
  return bareiss(rows, cols).size();
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged rows in matrix literal");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("cannot multiply " + shape(a.rows_, a.cols_) + " by " + shape(b.rows_, b.cols_));
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("cannot add matrices of different shapes");
  RationalMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix c = m;
  for (auto& q : c.data_) q *= s;
  return c;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged rows in integer matrix");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix IntMatrix::to_rational() const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

BistochasticMatrix BistochasticMatrix::from(RationalMatrix m) {
  using Kind = NotBistochasticError::Kind;
  if (!m.square() || m.rows() == 0) {
    throw NotBistochasticError("matrix is " + shape(m.rows(), m.cols()) + ", expected a non-empty square matrix", Kind::shape, -1);
  }
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j).sign() < 0) {
        throw NotBistochasticError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is negative: " + m(i, j).str(), Kind::entry, static_cast<int>(i * n + j));
      }
  for (std::size_t i = 0; i < n; ++i) {
    Rational s;
    for (std::size_t j = 0; j < n; ++j) s += m(i, j);
    if (s != 1) throw NotBistochasticError("row " + std::to_string(i + 1) + " sums to " + s.str(), Kind::row, static_cast<int>(i));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i) s += m(i, j);
    if (s != 1) throw NotBistochasticError("column " + std::to_string(j + 1) + " sums to " + s.str(), Kind::column, static_cast<int>(j));
  }
  return BistochasticMatrix(std::move(m));
}

BistochasticMatrix BistochasticMatrix::identity(std::size_t n) { return BistochasticMatrix(RationalMatrix::identity(n)); }

BistochasticMatrix BistochasticMatrix::uniform(std::size_t n) {
  RationalMatrix m(n, n);
  const Rational v(BigInt(1), BigInt(static_cast<long>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v;
  return BistochasticMatrix(std::move(m));
}

BistochasticMatrix perm_to_matrix(const Permutation& p) {
  RationalMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, static_cast<std::size_t>(p(i))) = 1;
  return BistochasticMatrix::from(std::move(m));
}

std::vector<long> perm_indicator(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<long> v(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + static_cast<std::size_t>(p(i))] = 1;
  return v;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntRows a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(integer_row(m.row(i)));
  return bareiss(a, m.cols()).size();
}

RationalVector solve(const RationalMatrix& m, std::span<const Rational> rhs) {
  if (!m.square()) throw DimensionError("solve needs a square matrix, got " + shape(m.rows(), m.cols()));
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side has length " + std::to_string(rhs.size()) + ", expected " + std::to_string(m.rows()));
  const std::size_t n = m.rows();
  IntRows a;
  a.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(m.row(i).begin(), m.row(i).end());
    row.push_back(rhs[i]);
    a.push_back(integer_row(row));
  }
  const RationalMatrix x = solve_integer_system(std::move(a), n, 1);
  RationalVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x(i, 0);
  return out;
}

RationalVector solve(const IntMatrix& m, std::span<const Rational> rhs) {
  if (m.rows() != m.cols()) throw DimensionError("solve needs a square matrix, got " + shape(m.rows(), m.cols()));
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side has length " + std::to_string(rhs.size()) + ", expected " + std::to_string(m.rows()));
  const std::size_t n = m.rows();
  BigInt l = 1;
  for (const auto& q : rhs) {
    const BigInt d = q.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IntRows a(n, std::vector<BigInt>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = BigInt(m(i, j)) * l;
    a[i][n] = rhs[i].num() * (l / rhs[i].den());
  }
  const RationalMatrix x = solve_integer_system(std::move(a), n, 1);
  RationalVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x(i, 0);
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("inverse needs a square matrix, got " + shape(m.rows(), m.cols()));
  const std::size_t n = m.rows();
  IntRows a;
  a.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(m.row(i).begin(), m.row(i).end());
    row.resize(2 * n);
    row[n + i] = 1;
    a.push_back(integer_row(row));
  }
  return solve_integer_system(std::move(a), n, n);
}

std::vector<RationalVector> null_space(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RationalMatrix r = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t p = pr;
    while (p < rows && r(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != pr)
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(p, j), r(pr, j));
    const Rational inv = Rational(1) / r(pr, c);
    for (std::size_t j = c; j < cols; ++j) r(pr, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr || r(i, c).is_zero()) continue;
      const Rational f = r(i, c);
      for (std::size_t j = c; j < cols; ++j) r(i, j) -= f * r(pr, j);
    }
    pivot_cols.push_back(c);
    ++pr;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("determinant needs a square matrix, got " + shape(m.rows(), m.cols()));
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntRows a;
  a.reserve(n);
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    auto row = integer_row(m.row(i));
    // integer_row multiplied row i by lcm(dens); undo that factor at the end.
    BigInt l = 1;
    for (const auto& q : m.row(i)) {
      const BigInt d = q.den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    scale *= Rational(l);
    a.push_back(std::move(row));
  }
  // Bareiss with explicit swap tracking; the last pivot is the determinant.
  int sign = 1;
  BigInt prev = 1;
  BigInt t;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        mpz_mul(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), a[c][c].get_mpz_t());
        mpz_mul(t.get_mpz_t(), a[i][c].get_mpz_t(), a[c][j].get_mpz_t());
        mpz_sub(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), t.get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return Rational(BigInt(sign * a[n - 1][n - 1])) / scale;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("principal minors need a square matrix");
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    minors.push_back(determinant(sub));
  }
  return minors;
}

bool linear_independent(std::span<const Permutation> perms) {
  return perm_set_rank(perms, false) == perms.size();
}

bool affine_independent(std::span<const Permutation> perms) {
  return perm_set_rank(perms, true) == perms.size();
}

Rational frobenius_inner(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("Frobenius inner product of " + shape(a.rows(), a.cols()) + " and " + shape(b.rows(), b.cols()));
  }
  Rational s;
  for (std::size_t k = 0; k < a.flat().size(); ++k) {
    if (a.flat()[k].is_zero() || b.flat()[k].is_zero()) continue;
    s += a.flat()[k] * b.flat()[k];
  }
  return s;
}

bool IncrementalBasis::push_if_independent(std::span<const long> v) {
  if (v.size() != dim_) throw DimensionError("vector length does not match basis dimension");
  std::vector<BigInt> w(v.begin(), v.end());
  BigInt t;
  for (const auto& row : rows_) {
    if (w[row.pivot] == 0) continue;
    const BigInt lead = w[row.pivot];
    const BigInt& piv = row.coeffs[row.pivot];
    for (std::size_t j = 0; j < dim_; ++j) {
      mpz_mul(w[j].get_mpz_t(), w[j].get_mpz_t(), piv.get_mpz_t());
      mpz_mul(t.get_mpz_t(), lead.get_mpz_t(), row.coeffs[j].get_mpz_t());
      mpz_sub(w[j].get_mpz_t(), w[j].get_mpz_t(), t.get_mpz_t());
    }
    BigInt g = 0;
    for (const auto& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  const auto it = std::find_if(w.begin(), w.end(), [](const BigInt& x) { return x != 0; });
  if (it == w.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - w.begin());
  rows_.push_back(Row{std::move(w), pivot});
  return true;
}

void IncrementalBasis::pop() {
  if (rows_.empty()) throw InternalError("pop on empty basis");
  rows_.pop_back();
}

RationalMatrix parse_matrix(std::string_view text) {
  std::vector<RationalVector> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string line(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    std::istringstream in(line);
    std::string token;
    RationalVector row;
    bool comment = false;
    while (in >> token) {
      if (row.empty() && token.front() == '#') {
        comment = true;
        break;
      }
      try {
        row.push_back(Rational::parse(token));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), token, line_no);
      }
    }
    if (comment || row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()), line, line_no);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows found", "", 0);
  return RationalMatrix::from_rows(rows);
}

std::string format_matrix(const RationalMatrix& m) {
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width[j] = std::max(width[j], m(i, j).str().size());
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string s = m(i, j).str();
      if (j > 0) out += "  ";
      out += std::string(width[j] - s.size(), ' ') + s;
    }
    out += '\n';
  }
  return out;
}

}  // namespace erdos
