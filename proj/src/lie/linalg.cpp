#include "verba/lie/linalg.hpp"

#include "verba/numeric.hpp"

namespace verba::lie::fp {

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, Vec(cols, 0)); }

Matrix identity(std::size_t n) {
  Matrix m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix mul(const Matrix& a, const Matrix& b, std::int64_t p) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix c = zeros(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      const std::int64_t x = a[i][l];
      if (!x) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + x * b[l][j]) % p;
    }
  return c;
}

Vec apply(const Matrix& a, const Vec& v, std::int64_t p) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s = (s + a[i][j] * v[j]) % p;
    out[i] = s;
  }
  return out;
}

Matrix reduce(Matrix a, std::int64_t p) {
  for (auto& row : a)
    for (auto& x : row) x = mod(x, p);
  return a;
}

Echelon rref(Matrix a, std::int64_t p) {
  a = reduce(std::move(a), p);
  Echelon e;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const std::int64_t inv = mod_inverse(a[r][c], p);
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

std::size_t rank(const Matrix& a, std::int64_t p) { return rref(a, p).rows.size(); }

Matrix nullspace(const Matrix& a, std::size_t cols, std::int64_t p) {
  const Echelon e = rref(a, p);
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : e.pivots) is_pivot[c] = 1;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = mod(-e.rows[r][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& a, std::int64_t p) {
  const std::size_t n = a.size();
  Matrix aug = zeros(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = mod(a[i][j], p);
    aug[i][n + i] = 1;
  }
  const Echelon e = rref(std::move(aug), p);
  if (e.rows.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

std::int64_t det(Matrix a, std::int64_t p) {
  a = reduce(std::move(a), p);
  const std::size_t n = a.size();
  std::int64_t d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = mod(-d, p);
    }
    d = d * a[c][c] % p;
    const std::int64_t inv = mod_inverse(a[c][c], p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::int64_t f = a[i][c] * inv % p;
      if (!f) continue;
      for (std::size_t j = c; j < n; ++j) a[i][j] = mod(a[i][j] - f * a[c][j], p);
    }
  }
  return d;
}

Matrix power(const Matrix& a, std::uint64_t e, std::int64_t p) {
  Matrix result = identity(a.size()), base = reduce(a, p);
  while (e) {
    if (e & 1) result = mul(result, base, p);
    e >>= 1;
    if (e) base = mul(base, base, p);
  }
  return result;
}

void SpanBuilder::eliminate(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::int64_t f = v[pivots_[r]];
    if (!f) continue;
    for (std::size_t j = 0; j < dim_; ++j) v[j] = mod(v[j] - f * rows_[r][j], p_);
  }
}

bool SpanBuilder::insert(Vec v) {
  for (auto& x : v) x = mod(x, p_);
  eliminate(v);
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  const std::int64_t inv = mod_inverse(v[piv], p_);
  for (auto& x : v) x = x * inv % p_;
  // Keep the basis reduced so that elimination is a single pass.
  for (auto& row : rows_) {
    const std::int64_t f = row[piv];
    if (!f) continue;
    for (std::size_t j = 0; j < dim_; ++j) row[j] = mod(row[j] - f * v[j], p_);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool SpanBuilder::contains(Vec v) const {
  for (auto& x : v) x = mod(x, p_);
  eliminate(v);
  for (auto x : v)
    if (x) return false;
  return true;
}

}  // namespace verba::lie::fp
