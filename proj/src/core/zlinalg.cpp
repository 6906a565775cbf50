#include "pbclass/zlinalg.hpp"

#include "pbclass/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace pbclass::zlinalg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MismatchError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  std::span<const Vector> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw MismatchError("column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector IntMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector IntMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw MismatchError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw MismatchError("matrix sum shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

Vector operator*(const IntMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw MismatchError("matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw MismatchError("hconcat row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

IntMatrix block_diagonal(const IntMatrix& block, std::size_t copies) {
  IntMatrix m(block.rows() * copies, block.cols() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j)
        m(c * block.rows() + i, c * block.cols() + j) = block(i, j);
  return m;
}

IntMatrix select_rows(const IntMatrix& m, std::span<const std::size_t> rows) {
  IntMatrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rows[i], j);
  return out;
}

IntMatrix select_cols(const IntMatrix& m, std::span<const std::size_t> cols) {
  IntMatrix out(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(i, cols[j]);
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw MismatchError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

Vector SnfDecomposition::diagonal() const {
  const std::size_t n = std::min(D.rows(), D.cols());
  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = D(i, i);
  return d;
}

namespace {

// Working state: every operation on D is mirrored on U (rows) or V (cols),
// and the inverse operation on U_inv (cols) or V_inv (rows).
struct SnfState {
  SnfDecomposition s;

  void swap_rows(std::size_t a, std::size_t b) {
    s.D.swap_rows(a, b);
    s.U.swap_rows(a, b);
    s.U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    s.D.swap_cols(a, b);
    s.V.swap_cols(a, b);
    s.V_inv.swap_rows(a, b);
  }
  // row dst += k * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    s.D.add_row_multiple(dst, src, k);
    s.U.add_row_multiple(dst, src, k);
    s.U_inv.add_col_multiple(src, dst, -k);
  }
  // col dst += k * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    s.D.add_col_multiple(dst, src, k);
    s.V.add_col_multiple(dst, src, k);
    s.V_inv.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t i) {
    s.D.negate_row(i);
    s.U.negate_row(i);
    s.U_inv.negate_col(i);
  }
};

Integer truncated_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  SnfState st{{IntMatrix::identity(r), m, IntMatrix::identity(c),
               IntMatrix::identity(r), IntMatrix::identity(c)}};
  IntMatrix& d = st.s.D;

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block.
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == r || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == r) return st.s;
      st.swap_rows(t, pi);
      st.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        st.add_row(i, t, -truncated_quotient(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        st.add_col(j, t, -truncated_quotient(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            st.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) st.negate_row(t);
  }
  return st.s;
}

Cokernel cokernel(const IntMatrix& m) {
  const SnfDecomposition snf = smith_normal_form(m);
  const std::size_t r = m.rows();
  const std::size_t diag = std::min(m.rows(), m.cols());

  std::vector<std::size_t> torsion_rows;
  std::vector<std::size_t> free_rows;
  Cokernel out;
  for (std::size_t i = 0; i < r; ++i) {
    const Integer f = i < diag ? Integer(snf.D(i, i)) : Integer(0);
    if (f == 1) continue;
    if (f == 0) {
      free_rows.push_back(i);
    } else {
      torsion_rows.push_back(i);
      out.torsion.push_back(f);
    }
  }
  out.free_rank = free_rows.size();
  std::vector<std::size_t> keep = torsion_rows;
  keep.insert(keep.end(), free_rows.begin(), free_rows.end());
  out.projection = select_rows(snf.U, keep);
  out.lift = select_cols(snf.U_inv, keep);
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const SnfDecomposition snf = smith_normal_form(m);
  std::vector<std::size_t> cols;
  for (std::size_t j = snf.rank(); j < m.cols(); ++j) cols.push_back(j);
  return select_cols(snf.V, cols);
}

std::optional<Vector> solve(const IntMatrix& m, const Vector& v) {
  if (v.size() != m.rows()) throw MismatchError("solve: vector length mismatch");
  const SnfDecomposition snf = smith_normal_form(m);
  const Vector y = snf.U * v;
  const std::size_t rank = snf.rank();
  Vector w(m.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < rank) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), snf.D(i, i).get_mpz_t()))
        return std::nullopt;
      w[i] = y[i] / snf.D(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * w;
}

bool in_column_span(const IntMatrix& m, const Vector& v) {
  if (v.size() != m.rows())
    throw MismatchError("in_column_span: vector length " +
                        std::to_string(v.size()) + " does not match " +
                        std::to_string(m.rows()) + " rows");
  return solve(m, v).has_value();
}

Cokernel subquotient(const IntMatrix& gens, const IntMatrix& relations) {
  if (gens.rows() != relations.rows())
    throw MismatchError("subquotient: ambient dimension mismatch");
  const IntMatrix k = kernel_basis(hconcat(gens, relations));
  std::vector<std::size_t> head(gens.cols());
  for (std::size_t i = 0; i < head.size(); ++i) head[i] = i;
  return cokernel(select_rows(k, head));
}

} // namespace pbclass::zlinalg
