#include "grk/intlinalg.hpp"

#include "grk/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace grk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("IntMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntVector IntMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void IntMatrix::append_row(std::span<const Integer> values) {
  if (values.size() != cols_) {
    throw DimensionMismatch("append_row: expected " + std::to_string(cols_) + " entries, got " +
                            std::to_string(values.size()));
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntMatrix::append_rows(const IntMatrix& other) {
  if (other.rows_ == 0) return;
  if (other.cols_ != cols_) throw DimensionMismatch("append_rows: column counts differ");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
  IntMatrix out(std::min(count, rows_), cols_);
  std::copy_n(data_.begin(), out.rows_ * cols_, out.data_.begin());
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (auto& x : row(r)) x = -x;
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntVector operator*(std::span<const Integer> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("vector-matrix product: length mismatch");
  IntVector out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  const auto& x = a.entries();
  const auto& y = b.entries();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](const Integer& p, const Integer& q) { return p < q; });
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "," : "") << to_string(m.row(r));
  os << ']';
  return os.str();
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Row index in [from, rows) holding the nonzero entry of least magnitude in
// column c, or rows if the column is zero there.
std::size_t min_abs_in_col(const IntMatrix& m, std::size_t c, std::size_t from) {
  std::size_t best = m.rows();
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (m(i, c) == 0) continue;
    if (best == m.rows() || cmpabs(m(i, c), m(best, c)) < 0) best = i;
  }
  return best;
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.rows()), 0, {}};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    std::size_t p = min_abs_in_col(h, c, r);
    if (p == h.rows()) continue;
    // Euclid down the column until only row r is nonzero.
    for (;;) {
      h.swap_rows(r, p);
      u.swap_rows(r, p);
      bool clear = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q = h(i, c) / h(r, c);
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) clear = false;
      }
      if (clear) break;
      p = min_abs_in_col(h, c, r);
    }
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

IntMatrix canonical_basis(const IntMatrix& a) {
  auto form = hnf(a);
  return form.H.top_rows(form.rank);
}

SmithForm snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm out{a, IntMatrix::identity(m), IntMatrix::identity(n), {}, 0};
  IntMatrix& s = out.S;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;

  auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
    s.swap_rows(t, i);
    u.swap_rows(t, i);
    s.swap_cols(t, j);
    v.swap_cols(t, j);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (s(i, j) != 0 && (bi == m || cmpabs(s(i, j), s(bi, bj)) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    move_to_pivot(t, bi, bj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        dirty = dirty || s(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        dirty = dirty || s(t, j) != 0;
      }
      if (dirty) {
        // A remainder survived in row t or column t; it is smaller than the pivot.
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (s(i, t) != 0 && cmpabs(s(i, t), s(bi2, bj2)) < 0) {
            bi2 = i;
            bj2 = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(t, j) != 0 && cmpabs(s(t, j), s(bi2, bj2)) < 0) {
            bi2 = t;
            bj2 = j;
          }
        move_to_pivot(t, bi2, bj2);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      s.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  out.rank = t;
  for (std::size_t i = 0; i < std::min(m, n); ++i) out.invariant_factors.push_back(s(i, i));
  return out;
}

IntVector reduce_modulo(const IntMatrix& h, std::span<const Integer> v) {
  if (v.size() != h.cols()) {
    throw DimensionMismatch("reduce_modulo: vector has " + std::to_string(v.size()) +
                            " entries, lattice lives in Z^" + std::to_string(h.cols()));
  }
  IntVector w(v.begin(), v.end());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (p == h.cols()) continue;
    Integer q = floor_div(w[p], h(r, p));
    if (q == 0) continue;
    for (std::size_t c = p; c < h.cols(); ++c) w[c] -= q * h(r, c);
  }
  return w;
}

bool lattice_member(const IntMatrix& basis, std::span<const Integer> v) {
  if (v.size() != basis.cols()) {
    throw DimensionMismatch("lattice_member: vector has " + std::to_string(v.size()) +
                            " entries, basis has " + std::to_string(basis.cols()) + " columns");
  }
  auto w = reduce_modulo(canonical_basis(basis), v);
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto form = hnf(m);
  if (form.H != IntMatrix::identity(m.rows())) return std::nullopt;
  return form.U;
}

}  // namespace grk
