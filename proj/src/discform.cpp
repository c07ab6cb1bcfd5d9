#include "ssk3/discform.hpp"

#include <algorithm>

namespace ssk3::discform {

namespace {

// Trace to the prime field; the result must be a constant.
u64 trace_to_fp(const FieldElement& x) {
  const auto& ctx = x.ctx();
  FieldElement t = x;
  FieldElement acc = x;
  for (unsigned i = 1; i < ctx->degree(); ++i) {
    t = ffield::frobenius(t, 1);
    acc = acc + t;
  }
  const auto& c = acc.coeffs();
  for (size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) throw SelfCheckError("trace landed outside the prime field");
  }
  return c[0];
}

u64 rank_mod_p(std::vector<std::vector<u64>> m, u64 p) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, pr = 0, rank = 0;
  for (size_t col = 0; col < cols && pr < rows; ++col) {
    size_t piv = pr;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[pr]);
    u64 inv = inv_mod(m[pr][col], p);
    for (size_t j = col; j < cols; ++j) m[pr][j] = mul_mod(m[pr][j], inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr || m[i][col] == 0) continue;
      u64 f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] = (m[i][j] + mul_mod(p - f, m[pr][j], p)) % p;
    }
    ++pr;
    ++rank;
  }
  return rank;
}

u64 eval_form(const std::vector<std::vector<u64>>& gram, const std::vector<u64>& x, u64 p) {
  u128 total = 0;
  size_t n = x.size();
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    u128 row = 0;
    for (size_t j = 0; j < n; ++j) row += u128(gram[i][j]) * x[j] % p;
    total += u128(x[i]) * static_cast<u64>(row % p) % p;
  }
  return static_cast<u64>(total % p);
}

u64 pair_rows(const std::vector<std::vector<u64>>& gram, const std::vector<u64>& x,
              const std::vector<u64>& y, u64 p) {
  u128 total = 0;
  size_t n = x.size();
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    u128 row = 0;
    for (size_t j = 0; j < n; ++j) row += u128(gram[i][j]) * y[j] % p;
    total += u128(x[i]) * static_cast<u64>(row % p) % p;
  }
  return static_cast<u64>(total % p);
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtVector
// ---------------------------------------------------------------------------

namespace {

void require_same_space(const ExtVector& a, const ExtVector& b) {
  const auto& s = a.space();
  const auto& t = b.space();
  if (s == t) return;
  if (!s || !t || s->p() != t->p() || s->sigma() != t->sigma() ||
      s->working_degree() != t->working_degree())
    throw std::invalid_argument("discriminant space mismatch");
}

}  // namespace

ExtVector::ExtVector(DiscSpacePtr space, std::vector<FieldElement> coords)
    : space_(std::move(space)), c_(std::move(coords)) {
  if (!space_) throw std::invalid_argument("null space");
  if (c_.size() != space_->dim()) throw std::invalid_argument("coordinate vector has wrong length");
  for (const auto& x : c_) {
    if (!x.ctx()->same_field(*space_->work()))
      throw std::invalid_argument("coordinates must live in the working field");
  }
}

bool ExtVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

ExtVector operator+(const ExtVector& a, const ExtVector& b) {
  require_same_space(a, b);
  std::vector<FieldElement> r;
  r.reserve(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) r.push_back(a.c_[i] + b.c_[i]);
  return ExtVector(a.space_, std::move(r));
}

ExtVector operator-(const ExtVector& a, const ExtVector& b) {
  require_same_space(a, b);
  std::vector<FieldElement> r;
  r.reserve(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) r.push_back(a.c_[i] - b.c_[i]);
  return ExtVector(a.space_, std::move(r));
}

ExtVector operator*(const FieldElement& s, const ExtVector& v) {
  std::vector<FieldElement> r;
  r.reserve(v.c_.size());
  for (const auto& x : v.c_) r.push_back(s * x);
  return ExtVector(v.space_, std::move(r));
}

bool operator==(const ExtVector& a, const ExtVector& b) {
  require_same_space(a, b);
  return a.c_ == b.c_;
}

bool operator!=(const ExtVector& a, const ExtVector& b) { return !(a == b); }

// ---------------------------------------------------------------------------
// DiscSpace
// ---------------------------------------------------------------------------

DiscSpace::DiscSpace(u64 p, unsigned sigma, FieldCtxPtr model, FieldCtxPtr work, DiscOptions opts,
                     FieldElement lambda, std::vector<std::vector<u64>> gram, FMatrix gram_work)
    : p_(p),
      sigma_(sigma),
      model_(std::move(model)),
      work_(std::move(work)),
      opts_(opts),
      lambda_(std::move(lambda)),
      gram_(std::move(gram)),
      gram_work_(std::move(gram_work)) {}

DiscSpacePtr DiscSpace::build(u64 p, unsigned sigma, DiscOptions opts) {
  if (sigma < 1 || sigma > 10) throw std::invalid_argument("artin invariant must lie in 1..10");
  unsigned n = 2 * sigma;
  unsigned D = opts.working_degree == 0 ? n : opts.working_degree;
  if (D % n != 0) throw std::invalid_argument("working degree must be a multiple of 2*sigma");

  ffield::FieldOptions fopts;
  fopts.allow_small_characteristic = opts.allow_small_characteristic;
  FieldCtxPtr model = ffield::FieldCtx::create(p, n, fopts);
  FieldCtxPtr work = D == n ? model : ffield::FieldCtx::create(p, D, fopts);

  FieldElement theta = model->element(p);  // power-basis generator T
  std::vector<FieldElement> pow_basis;
  pow_basis.reserve(n);
  {
    FieldElement cur = model->one();
    for (unsigned i = 0; i < n; ++i) {
      pow_basis.push_back(cur);
      cur = cur * theta;
    }
  }

  // Scan scalars in canonical order for one in the degree-sigma subfield
  // whose pairing passes the self-checks.
  for (u64 code = 1; code < model->order(); ++code) {
    FieldElement lambda = model->element(code);
    if (ffield::frobenius(lambda, static_cast<i64>(sigma)) != lambda) continue;

    std::vector<std::vector<u64>> gram(n, std::vector<u64>(n, 0));
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        FieldElement v = lambda * pow_basis[i] * ffield::frobenius(pow_basis[j], static_cast<i64>(sigma));
        gram[i][j] = trace_to_fp(v);
      }
    }

    bool symmetric = true;
    for (unsigned i = 0; i < n && symmetric; ++i)
      for (unsigned j = 0; j < i; ++j)
        if (gram[i][j] != gram[j][i]) {
          symmetric = false;
          break;
        }
    if (!symmetric) continue;
    if (rank_mod_p(gram, p) != n) continue;

    FMatrix gw(work, n, n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) gw.at(i, j) = work->from_int(gram[i][j]);

    auto space = DiscSpacePtr(
        new DiscSpace(p, sigma, model, work, opts, lambda, std::move(gram), std::move(gw)));

    // Certify the non-split type by the zero count whenever enumerable.
    if (model->order() <= opts.enumeration_budget) {
      if (isotropic_vector_count(*space) != non_split_isotropic_count(p, sigma)) continue;
    }
    return space;
  }
  throw SelfCheckError("no pairing scalar passed the discriminant self-checks");
}

ExtVector DiscSpace::vector(std::vector<FieldElement> coords) const {
  return ExtVector(shared_from_this(), std::move(coords));
}

ExtVector DiscSpace::rational_vector(const std::vector<u64>& residues) const {
  if (residues.size() != dim()) throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<FieldElement> c;
  c.reserve(dim());
  for (u64 r : residues) c.push_back(work_->from_int(r));
  return ExtVector(shared_from_this(), std::move(c));
}

ExtVector DiscSpace::basis_vector(unsigned i) const {
  if (i >= dim()) throw std::invalid_argument("basis index out of range");
  std::vector<u64> r(dim(), 0);
  r[i] = 1;
  return rational_vector(r);
}

ExtVector DiscSpace::zero_vector() const {
  return rational_vector(std::vector<u64>(dim(), 0));
}

std::vector<std::vector<u64>> DiscSpace::mult_matrix(const FieldElement& z) const {
  if (!z.ctx()->same_field(*model_)) throw std::invalid_argument("multiplier must live in the model field");
  unsigned n = dim();
  std::vector<std::vector<u64>> m(n, std::vector<u64>(n, 0));
  FieldElement theta = model_->element(p_);
  FieldElement cur = z;
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) m[i][j] = cur.coeffs()[i];
    cur = cur * theta;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Pairing and scans
// ---------------------------------------------------------------------------

FieldElement bilinear(const ExtVector& u, const ExtVector& w) {
  require_same_space(u, w);
  const auto& space = *u.space();
  const auto& gram = space.gram();
  const auto& work = space.work();
  FieldElement total = work->zero();
  unsigned n = space.dim();
  for (unsigned i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    FieldElement row = work->zero();
    for (unsigned j = 0; j < n; ++j) {
      if (gram[i][j] == 0) continue;
      row = row + w[j].mul_int(gram[i][j]);
    }
    total = total + u[i] * row;
  }
  return total;
}

ExtVector frob_semilinear(const ExtVector& x, i64 e) {
  std::vector<FieldElement> c;
  c.reserve(x.coords().size());
  for (const auto& v : x.coords()) c.push_back(ffield::frobenius(v, e));
  return ExtVector(x.space(), std::move(c));
}

u64 non_split_isotropic_count(u64 p, unsigned sigma) {
  u64 ps = checked_pow(p, sigma, 1ull << 62);
  u64 p2s1 = checked_pow(p, 2 * sigma - 1, 1ull << 62);
  u64 ps1 = checked_pow(p, sigma - 1, 1ull << 62);
  return p2s1 - ps + ps1;
}

u64 isotropic_vector_count(const DiscSpace& space) {
  u64 p = space.p();
  unsigned n = space.dim();
  u64 total = checked_pow(p, n, 1ull << 62);
  if (total > space.options().enumeration_budget)
    throw BudgetError("isotropic vector count exceeds the enumeration budget");
  std::vector<u64> x(n, 0);
  u64 count = 0;
  for (u64 it = 0;; ++it) {
    if (eval_form(space.gram(), x, p) == 0) ++count;
    unsigned k = 0;
    while (k < n && ++x[k] == p) x[k++] = 0;
    if (k == n) break;
  }
  return count;
}

u64 subspace_count(u64 p, unsigned n, unsigned dim) {
  // Gaussian binomial via the Pascal recurrence
  // [n k] = [n-1 k-1] + p^k [n-1 k], kept below 2^62 throughout.
  if (dim > n) return 0;
  const u128 limit = u128(1) << 62;
  std::vector<u128> row(n + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned k = std::min(m, dim); k >= 1; --k) {
      u128 pk = 1;
      for (unsigned i = 0; i < k; ++i) {
        pk *= p;
        if (pk > limit) throw std::overflow_error("subspace_count overflow");
      }
      row[k] = row[k - 1] + pk * row[k];
      if (row[k] > limit) throw std::overflow_error("subspace_count overflow");
    }
  }
  return static_cast<u64>(row[dim]);
}

namespace {

// Visit every dim-dimensional subspace once via reduced echelon forms.
template <typename Fn>
bool scan_echelon_subspaces(u64 p, unsigned n, unsigned dim, u64 budget, Fn&& visit) {
  std::vector<unsigned> pivots(dim);
  for (unsigned i = 0; i < dim; ++i) pivots[i] = i;
  u64 visited = 0;
  while (true) {
    // free positions: column j > pivot[i], j not itself a pivot
    std::vector<std::pair<unsigned, unsigned>> free_cells;
    std::vector<bool> is_pivot(n, false);
    for (unsigned c : pivots) is_pivot[c] = true;
    for (unsigned i = 0; i < dim; ++i)
      for (unsigned j = pivots[i] + 1; j < n; ++j)
        if (!is_pivot[j]) free_cells.emplace_back(i, j);

    u64 combos = checked_pow(p, static_cast<unsigned>(free_cells.size()), 1ull << 62);
    std::vector<std::vector<u64>> rows(dim, std::vector<u64>(n, 0));
    for (unsigned i = 0; i < dim; ++i) rows[i][pivots[i]] = 1;
    std::vector<u64> digits(free_cells.size(), 0);
    for (u64 c = 0; c < combos; ++c) {
      if (++visited > budget) throw BudgetError("subspace scan exceeds the enumeration budget");
      for (size_t k = 0; k < free_cells.size(); ++k) rows[free_cells[k].first][free_cells[k].second] = digits[k];
      if (visit(rows)) return true;
      size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size() && !digits.empty()) break;
      if (digits.empty()) break;
    }

    // next pivot combination in lexicographic order
    int i = static_cast<int>(dim) - 1;
    while (i >= 0 && pivots[static_cast<size_t>(i)] == n - dim + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++pivots[static_cast<size_t>(i)];
    for (unsigned k = static_cast<unsigned>(i) + 1; k < dim; ++k) pivots[k] = pivots[k - 1] + 1;
  }
  return false;
}

}  // namespace

bool has_totally_isotropic_subspace(const DiscSpace& space, unsigned dim) {
  if (dim == 0 || dim > space.dim()) throw std::invalid_argument("subspace dimension out of range");
  u64 p = space.p();
  unsigned n = space.dim();
  u64 count = subspace_count(p, n, dim);
  if (count > space.options().enumeration_budget)
    throw BudgetError("subspace scan exceeds the enumeration budget");
  const auto& gram = space.gram();
  return scan_echelon_subspaces(p, n, dim, space.options().enumeration_budget,
                                [&](const std::vector<std::vector<u64>>& rows) {
                                  for (size_t i = 0; i < rows.size(); ++i) {
                                    for (size_t j = i; j < rows.size(); ++j) {
                                      if (pair_rows(gram, rows[i], rows[j], p) != 0) return false;
                                    }
                                  }
                                  return true;
                                });
}

}  // namespace ssk3::discform
