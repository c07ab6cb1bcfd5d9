#include "ssk3/latred.hpp"

#include <algorithm>
#include <numeric>

namespace ssk3::latred {

namespace {

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

i64 dot(const IntMat& gram, const IntVec& x, const IntVec& y) {
  i64 acc = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    i64 row = 0;
    for (size_t j = 0; j < y.size(); ++j) row = checked_add(row, checked_mul(gram[i][j], y[j]));
    acc = checked_add(acc, checked_mul(x[i], row));
  }
  return acc;
}

IntMat identity_mat(size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

IntegralLattice IntegralLattice::from_gram(IntMat gram) {
  size_t n = gram.size();
  if (n == 0) throw std::invalid_argument("empty gram matrix");
  for (const auto& row : gram)
    if (row.size() != n) throw std::invalid_argument("gram matrix must be square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("gram matrix must be symmetric");
  IntegralLattice L;
  L.rank = static_cast<unsigned>(n);
  L.gram = std::move(gram);
  if (L.det() == 0) throw std::invalid_argument("gram matrix must be nondegenerate");
  return L;
}

bool IntegralLattice::is_even() const {
  for (unsigned i = 0; i < rank; ++i)
    if (gram[i][i] % 2 != 0) return false;
  return true;
}

i64 IntegralLattice::det() const { return det_int(gram); }

i64 det_int(const IntMat& m) {
  size_t n = m.size();
  std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  i128 prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[s], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  i128 d = a[n - 1][n - 1] * sign;
  if (d > i128(INT64_MAX) || d < i128(INT64_MIN)) throw std::overflow_error("determinant overflow");
  return static_cast<i64>(d);
}

SmithResult smith_normal_form(const IntMat& m) {
  size_t rows = m.size();
  size_t cols = rows == 0 ? 0 : m[0].size();
  SmithResult res;
  res.d = m;
  res.u = identity_mat(rows);
  res.v = identity_mat(cols);
  auto& d = res.d;
  auto& u = res.u;
  auto& v = res.v;

  auto swap_rows = [&](size_t a, size_t b) {
    std::swap(d[a], d[b]);
    std::swap(u[a], u[b]);
  };
  auto swap_cols = [&](size_t a, size_t b) {
    for (size_t i = 0; i < rows; ++i) std::swap(d[i][a], d[i][b]);
    for (size_t i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
  };
  auto add_row = [&](size_t dst, size_t src, i64 c) {  // row dst += c * row src
    for (size_t j = 0; j < cols; ++j) d[dst][j] = checked_add(d[dst][j], checked_mul(c, d[src][j]));
    for (size_t j = 0; j < rows; ++j) u[dst][j] = checked_add(u[dst][j], checked_mul(c, u[src][j]));
  };
  auto add_col = [&](size_t dst, size_t src, i64 c) {  // col dst += c * col src
    for (size_t i = 0; i < rows; ++i) d[i][dst] = checked_add(d[i][dst], checked_mul(c, d[i][src]));
    for (size_t i = 0; i < cols; ++i) v[i][dst] = checked_add(v[i][dst], checked_mul(c, v[i][src]));
  };
  auto negate_row = [&](size_t r) {
    for (auto& x : d[r]) x = -x;
    for (auto& x : u[r]) x = -x;
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // locate a pivot of least absolute value
    size_t pi = t, pj = t;
    i64 best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 && (best == 0 || std::abs(d[i][j]) < best)) {
          best = std::abs(d[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        i64 q = d[i][t] / d[t][t];
        add_row(i, t, -q);
        if (d[i][t] != 0) {
          swap_rows(i, t);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        i64 q = d[t][j] / d[t][t];
        add_col(j, t, -q);
        if (d[t][j] != 0) {
          swap_cols(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // force divisibility of the remaining block by the pivot
      for (size_t i = t + 1; i < rows && clean; ++i) {
        for (size_t j = t + 1; j < cols && clean; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            add_row(t, i, 1);
            clean = false;
          }
        }
      }
    }
    if (d[t][t] < 0) negate_row(t);
    ++t;
  }
  return res;
}

Frac::Frac(i64 n, i64 d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i64 g = std::gcd(std::abs(n), d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Frac Frac::operator+(const Frac& o) const {
  return Frac(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)), checked_mul(den, o.den));
}

Frac Frac::operator*(const Frac& o) const { return Frac(checked_mul(num, o.num), checked_mul(den, o.den)); }

Frac Frac::mod_one() const {
  i64 n = num % den;
  if (n < 0) n += den;
  return Frac(n, den);
}

u64 DiscGroup::size() const {
  u64 s = 1;
  for (i64 d : orders) s *= static_cast<u64>(d);
  return s;
}

DiscGroup disc_group(const IntegralLattice& L) {
  SmithResult snf = smith_normal_form(L.gram);
  DiscGroup g;
  // dual generators: column i of V divided by d_i, since G * V = U^{-1} * D
  for (unsigned i = 0; i < L.rank; ++i) {
    i64 di = snf.d[i][i];
    if (di <= 1) continue;
    g.orders.push_back(di);
    std::vector<Frac> w;
    for (unsigned r = 0; r < L.rank; ++r) w.emplace_back(snf.v[r][i], di);
    g.gens.push_back(std::move(w));
  }
  size_t k = g.orders.size();
  g.pairing.assign(k, std::vector<Frac>(k));
  // b(w_i, w_j) = (v_i^T G v_j) / (d_i d_j) taken mod 1
  std::vector<IntVec> cols;
  std::vector<i64> ds;
  for (unsigned i = 0; i < L.rank; ++i) {
    if (snf.d[i][i] <= 1) continue;
    IntVec c(L.rank);
    for (unsigned r = 0; r < L.rank; ++r) c[r] = snf.v[r][i];
    cols.push_back(std::move(c));
    ds.push_back(snf.d[i][i]);
  }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      g.pairing[i][j] = Frac(dot(L.gram, cols[i], cols[j]), checked_mul(ds[i], ds[j])).mod_one();
  return g;
}

namespace {

IntMat rank_one_reflection(const IntegralLattice& L, const IntVec& v, i64 sign) {
  if (v.size() != L.rank) throw std::invalid_argument("vector length mismatch");
  IntMat R = identity_mat(L.rank);
  // columns: R e_j = e_j + sign * (v . e_j) v
  for (size_t j = 0; j < L.rank; ++j) {
    i64 pj = 0;
    for (size_t i = 0; i < L.rank; ++i) pj = checked_add(pj, checked_mul(L.gram[j][i], v[i]));
    for (size_t i = 0; i < L.rank; ++i) R[i][j] = checked_add(R[i][j], checked_mul(sign, checked_mul(pj, v[i])));
  }
  return R;
}

}  // namespace

IntMat reflect_minus2(const IntegralLattice& L, const IntVec& v) {
  if (dot(L.gram, v, v) != -2) throw std::invalid_argument("reflection vector must have norm -2");
  return rank_one_reflection(L, v, +1);
}

IntMat reflect_plus2(const IntegralLattice& L, const IntVec& u) {
  if (dot(L.gram, u, u) != 2) throw std::invalid_argument("reflection vector must have norm +2");
  return rank_one_reflection(L, u, -1);
}

bool preserves_gram(const IntegralLattice& L, const IntMat& R) {
  size_t n = L.rank;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      i64 acc = 0;
      for (size_t i = 0; i < n; ++i) {
        if (R[i][a] == 0) continue;
        i64 row = 0;
        for (size_t j = 0; j < n; ++j) row = checked_add(row, checked_mul(L.gram[i][j], R[j][b]));
        acc = checked_add(acc, checked_mul(R[i][a], row));
      }
      if (acc != L.gram[a][b]) return false;
    }
  }
  return true;
}

bool disc_action_is_identity(const IntegralLattice& L, const IntMat& R) {
  DiscGroup g = disc_group(L);
  for (const auto& w : g.gens) {
    for (size_t r = 0; r < L.rank; ++r) {
      Frac img(0, 1);
      for (size_t c = 0; c < L.rank; ++c) img = img + Frac(R[r][c], 1) * w[c];
      Frac diff = img + Frac(-w[r].num, w[r].den);
      if (!diff.mod_one().is_integral() || diff.mod_one().num != 0) return false;
    }
  }
  return true;
}

std::vector<IntVec> vectors_of_norm(const IntegralLattice& L, i64 norm, i64 bound) {
  if (bound < 0) throw std::invalid_argument("coordinate bound must be non-negative");
  std::vector<IntVec> out;
  IntVec x(L.rank, -bound);
  while (true) {
    bool zero = std::all_of(x.begin(), x.end(), [](i64 c) { return c == 0; });
    if (!zero && dot(L.gram, x, x) == norm) out.push_back(x);
    size_t k = 0;
    while (k < L.rank && ++x[k] > bound) x[k++] = -bound;
    if (k == L.rank) break;
  }
  return out;
}

IntegralLattice named_lattice(const std::string& key) {
  if (key == "A1") return IntegralLattice::from_gram({{-2}});
  if (key == "A1+") return IntegralLattice::from_gram({{2}});
  if (key == "A2") return IntegralLattice::from_gram({{-2, 1}, {1, -2}});
  if (key == "U") return IntegralLattice::from_gram({{0, 1}, {1, 0}});
  if (key == "U+A1") return IntegralLattice::from_gram({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
  if (key == "diag(2,-2)") return IntegralLattice::from_gram({{2, 0}, {0, -2}});
  if (key == "E8") {
    // negative definite E8: branch node 1; arms 2 | 3-4 | 5-6-7-8
    IntMat g(8, IntVec(8, 0));
    for (int i = 0; i < 8; ++i) g[i][i] = -2;
    auto edge = [&](int a, int b) { g[a][b] = g[b][a] = 1; };
    edge(0, 1);
    edge(0, 2);
    edge(2, 3);
    edge(0, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    return IntegralLattice::from_gram(std::move(g));
  }
  throw std::invalid_argument("unknown lattice key: " + key);
}

std::vector<std::string> named_lattice_keys() {
  return {"A1", "A1+", "A2", "U", "U+A1", "diag(2,-2)", "E8"};
}

}  // namespace ssk3::latred
