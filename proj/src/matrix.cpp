#include "beauville/matrix.hpp"

#include <stdexcept>

namespace beauville {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ExactScalar(1));
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("ExactMatrix: dimension mismatch");
  ExactMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const ExactScalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const ExactScalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.e_[i * n_ + j] += aik * bkj;
      }
    }
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return n_ == o.n_ && e_ == o.e_;
}

ExactMatrix ExactMatrix::inverse() const {
  // Gauss-Jordan on [A | I], exact field arithmetic.
  std::size_t n = n_;
  ExactMatrix a = *this;
  ExactMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("ExactMatrix: singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.e_[piv * n + j], a.e_[col * n + j]);
        std::swap(inv.e_[piv * n + j], inv.e_[col * n + j]);
      }
    ExactScalar d = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.e_[col * n + j] = a.e_[col * n + j] / d;
      inv.e_[col * n + j] = inv.e_[col * n + j] / d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      ExactScalar f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.e_[i * n + j] = a.e_[i * n + j] - f * a.e_[col * n + j];
        inv.e_[i * n + j] = inv.e_[i * n + j] - f * inv.e_[col * n + j];
      }
    }
  }
  return inv;
}

ExactMatrix ExactMatrix::pow(std::uint64_t k) const {
  ExactMatrix r = identity(n_);
  ExactMatrix b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

ExactScalar ExactMatrix::trace() const {
  ExactScalar t;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool ExactMatrix::is_identity() const {
  const ExactScalar one(1);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j ? !(at(i, j) == one) : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

std::optional<std::uint64_t> ExactMatrix::order(std::uint64_t cap) const {
  ExactMatrix p = *this;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (p.is_identity()) return m;
    p = p * *this;
  }
  return std::nullopt;
}

std::vector<ExactScalar> ExactMatrix::char_poly() const {
  std::size_t n = n_;
  std::vector<ExactScalar> c(n + 1);
  c[0] = ExactScalar(1);
  ExactMatrix m(n);  // zero
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A * (M_{k-1} + c_{k-1} I);  c_k = -tr(M_k)/k
    for (std::size_t i = 0; i < n; ++i)
      m.set(i, i, m.at(i, i) + c[k - 1]);
    m = *this * m;
    c[k] = -(m.trace() / ExactScalar(static_cast<std::int64_t>(k)));
  }
  return c;
}

std::vector<ExactScalar> ExactMatrix::apply(const std::vector<ExactScalar>& v) const {
  if (v.size() != n_) throw std::invalid_argument("ExactMatrix: vector dimension mismatch");
  std::vector<ExactScalar> r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    ExactScalar s;
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      s += at(i, j) * v[j];
    }
    r[i] = std::move(s);
  }
  return r;
}

std::string ExactMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ",";
      s += at(i, j).to_string();
    }
  }
  return s + "]";
}

std::string ExactMatrix::key() const { return to_string(); }

std::string vector_key(const ExactVector& v) {
  std::string s;
  for (const auto& x : v) {
    s += x.to_string();
    s += "|";
  }
  return s;
}

std::optional<ExactVector> kernel_vector(const ExactMatrix& m) {
  std::size_t n = m.dim();
  // row-reduce a copy, tracking pivot columns
  std::vector<std::vector<ExactScalar>> a(n, std::vector<ExactScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    ExactScalar d = a[row][col];
    for (std::size_t j = 0; j < n; ++j) a[row][j] = a[row][j] / d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      ExactScalar f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() == n) return std::nullopt;
  // pick the first free column, back-substitute
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  ExactVector v(n);
  v[free_col] = ExactScalar(1);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    v[pivot_col[r]] = -a[r][free_col];
  return v;
}

std::size_t rank_of(const std::vector<ExactVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<ExactVector> a = rows;
  std::size_t n = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    ExactScalar d = a[rank][col];
    for (std::size_t j = 0; j < n; ++j) a[rank][j] = a[rank][j] / d;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      ExactScalar f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace beauville
