#include "ssk3/fmatrix.hpp"

#include <algorithm>

namespace ssk3::fmatrix {

FMatrix::FMatrix(FieldCtxPtr ctx, size_t rows, size_t cols)
    : ctx_(std::move(ctx)), r_(rows), c_(cols), a_(rows * cols, ctx_->zero()) {}

FMatrix FMatrix::identity(const FieldCtxPtr& ctx, size_t n) {
  FMatrix m(ctx, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = ctx->one();
  return m;
}

FMatrix FMatrix::from_rows(const FieldCtxPtr& ctx, const std::vector<std::vector<FieldElement>>& rows) {
  size_t c = rows.empty() ? 0 : rows[0].size();
  FMatrix m(ctx, rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

std::vector<FieldElement> FMatrix::row(size_t i) const {
  return std::vector<FieldElement>(a_.begin() + static_cast<long>(i * c_),
                                   a_.begin() + static_cast<long>((i + 1) * c_));
}

void FMatrix::set_row(size_t i, const std::vector<FieldElement>& v) {
  if (v.size() != c_) throw std::invalid_argument("row length mismatch");
  for (size_t j = 0; j < c_; ++j) at(i, j) = v[j];
}

FMatrix FMatrix::transpose() const {
  FMatrix m(ctx_, c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix dimension mismatch");
  FMatrix m(ctx_, r_, o.c_);
  for (size_t i = 0; i < r_; ++i) {
    for (size_t k = 0; k < c_; ++k) {
      const FieldElement& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.c_; ++j) m.at(i, j) = m.at(i, j) + x * o.at(k, j);
    }
  }
  return m;
}

std::vector<FieldElement> FMatrix::mul_vec(const std::vector<FieldElement>& v) const {
  if (v.size() != c_) throw std::invalid_argument("vector length mismatch");
  std::vector<FieldElement> out(r_, ctx_->zero());
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j)
      if (!at(i, j).is_zero()) out[i] = out[i] + at(i, j) * v[j];
  return out;
}

bool FMatrix::operator==(const FMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

FMatrix FMatrix::frobenius_map(i64 e) const {
  FMatrix m(ctx_, r_, c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(i, j) = ffield::frobenius(at(i, j), e);
  return m;
}

FMatrix FMatrix::rref() const {
  FMatrix m = *this;
  size_t pr = 0;
  for (size_t col = 0; col < c_ && pr < r_; ++col) {
    size_t piv = pr;
    while (piv < r_ && m.at(piv, col).is_zero()) ++piv;
    if (piv == r_) continue;
    if (piv != pr)
      for (size_t j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(pr, j));
    FieldElement s = m.at(pr, col).inv();
    for (size_t j = col; j < c_; ++j) m.at(pr, j) = m.at(pr, j) * s;
    for (size_t i = 0; i < r_; ++i) {
      if (i == pr || m.at(i, col).is_zero()) continue;
      FieldElement f = m.at(i, col);
      for (size_t j = col; j < c_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(pr, j);
    }
    ++pr;
  }
  return m;
}

size_t FMatrix::rank() const {
  FMatrix r = rref();
  size_t rank = 0;
  for (size_t i = 0; i < r_; ++i) {
    bool nonzero = false;
    for (size_t j = 0; j < c_; ++j)
      if (!r.at(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rank;
  }
  return rank;
}

FMatrix FMatrix::kernel() const {
  FMatrix r = rref();
  std::vector<long> pivot_of_col(c_, -1);
  size_t rank = 0;
  for (size_t i = 0; i < r_; ++i) {
    size_t j = 0;
    while (j < c_ && r.at(i, j).is_zero()) ++j;
    if (j < c_) {
      pivot_of_col[j] = static_cast<long>(i);
      ++rank;
    }
  }
  FMatrix out(ctx_, c_ - rank, c_);
  size_t k = 0;
  for (size_t j = 0; j < c_; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    out.at(k, j) = ctx_->one();
    for (size_t jj = 0; jj < c_; ++jj) {
      if (pivot_of_col[jj] >= 0) out.at(k, jj) = -r.at(static_cast<size_t>(pivot_of_col[jj]), j);
    }
    ++k;
  }
  return out;
}

std::optional<FMatrix> FMatrix::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
  FMatrix aug(ctx_, r_, 2 * c_);
  for (size_t i = 0; i < r_; ++i) {
    for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_ + i) = ctx_->one();
  }
  FMatrix r = aug.rref();
  for (size_t i = 0; i < r_; ++i)
    if (!(r.at(i, i).is_one())) return std::nullopt;
  FMatrix inv(ctx_, r_, c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) inv.at(i, j) = r.at(i, c_ + j);
  return inv;
}

FMatrix FMatrix::row_space() const {
  FMatrix r = rref();
  std::vector<std::vector<FieldElement>> rows;
  for (size_t i = 0; i < r_; ++i) {
    bool nonzero = false;
    for (size_t j = 0; j < c_; ++j)
      if (!r.at(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) rows.push_back(r.row(i));
  }
  FMatrix out(ctx_, rows.size(), c_);
  for (size_t i = 0; i < rows.size(); ++i) out.set_row(i, rows[i]);
  return out;
}

FMatrix FMatrix::vstack(const FMatrix& top, const FMatrix& bottom) {
  if (top.c_ != bottom.c_) throw std::invalid_argument("vstack width mismatch");
  FMatrix m(top.ctx_, top.r_ + bottom.r_, top.c_);
  for (size_t i = 0; i < top.r_; ++i) m.set_row(i, top.row(i));
  for (size_t i = 0; i < bottom.r_; ++i) m.set_row(top.r_ + i, bottom.row(i));
  return m;
}

FMatrix FMatrix::intersect_row_spaces(const FMatrix& a, const FMatrix& b) {
  if (a.c_ != b.c_) throw std::invalid_argument("intersection width mismatch");
  size_t n = a.c_;
  FMatrix big(a.ctx_, a.r_ + b.r_, 2 * n);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t j = 0; j < n; ++j) {
      big.at(i, j) = a.at(i, j);
      big.at(i, n + j) = a.at(i, j);
    }
  for (size_t i = 0; i < b.r_; ++i)
    for (size_t j = 0; j < n; ++j) big.at(a.r_ + i, j) = b.at(i, j);
  FMatrix r = big.rref();
  std::vector<std::vector<FieldElement>> rows;
  for (size_t i = 0; i < r.rows(); ++i) {
    bool left_zero = true, right_zero = true;
    for (size_t j = 0; j < n; ++j) {
      if (!r.at(i, j).is_zero()) left_zero = false;
      if (!r.at(i, n + j).is_zero()) right_zero = false;
    }
    if (left_zero && !right_zero) {
      std::vector<FieldElement> v;
      v.reserve(n);
      for (size_t j = 0; j < n; ++j) v.push_back(r.at(i, n + j));
      rows.push_back(std::move(v));
    }
  }
  FMatrix out(a.ctx_, rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i) out.set_row(i, rows[i]);
  return out.row_space();
}

}  // namespace ssk3::fmatrix
