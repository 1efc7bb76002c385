#include "groupoidkit/linalg.hpp"

#include <stdexcept>

namespace gk {

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// row -= factor * other
void axpy(Vector& row, const GaussianRational& factor, const Vector& other) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!other[j].is_zero()) row[j] -= factor * other[j];
}

void scale(Vector& row, const GaussianRational& factor) {
  for (auto& x : row)
    if (!x.is_zero()) x *= factor;
}

}  // namespace

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const GaussianRational c = v[pivots_[r]];
    if (!c.is_zero()) axpy(v, c, rows_[r]);
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vector& v) {
  Vector w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  scale(w, w[p].inverse());
  for (auto& row : rows_) {
    const GaussianRational c = row[p];
    if (!c.is_zero()) axpy(row, c, w);
  }
  // Keep rows ordered by pivot column.
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < p) ++at;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(w));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
  return true;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  if (m.empty()) return m;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][c].is_zero() && (best == rows || m[i][c].height() < m[best][c].height())) best = i;
    if (best == rows) continue;
    std::swap(m[r], m[best]);
    scale(m[r], m[r][c].inverse());
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const GaussianRational f = m[i][c];
      axpy(m[i], f, m[r]);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  m.resize(r);
  return m;
}

std::size_t rank(const Matrix& m) { return rref(m).size(); }

Matrix nullspace(const Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, &pivots);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  Matrix out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) v[pivots[i]] = -r[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

EchelonBasis span_of(const Matrix& rows, std::size_t dim) {
  EchelonBasis b(dim);
  for (const auto& row : rows) b.insert(row);
  return b;
}

std::size_t intersection_dim(const Matrix& a, const Matrix& b, std::size_t dim) {
  EchelonBasis sum = span_of(a, dim);
  const std::size_t da = sum.rank();
  const std::size_t db = span_of(b, dim).rank();
  for (const auto& row : b) sum.insert(row);
  return da + db - sum.rank();
}

bool same_span(const Matrix& a, const Matrix& b, std::size_t dim) {
  const EchelonBasis sa = span_of(a, dim), sb = span_of(b, dim);
  if (sa.rank() != sb.rank()) return false;
  for (const auto& row : b)
    if (!sa.contains(row)) return false;
  for (const auto& row : a)
    if (!sb.contains(row)) return false;
  return true;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
  Vector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  Matrix out(a.size(), Vector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("mat_mul: dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace gk
