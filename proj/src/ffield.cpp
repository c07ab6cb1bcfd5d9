#include "ssk3/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ssk3::ffield {

namespace {

constexpr u64 kMaxCharacteristic = (1ull << 31) - 1;
constexpr u64 kMaxOrder = 1ull << 62;

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, ascending coefficients stored as residues.
// ---------------------------------------------------------------------------

using Poly = std::vector<u64>;

int pdeg(const Poly& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[d] == 0) --d;
  return d;
}

void ptrim(Poly& f) { f.resize(static_cast<size_t>(pdeg(f) + 1)); }

Poly psub(u64 p, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  ptrim(r);
  return r;
}

Poly pmul(u64 p, const Poly& a, const Poly& b) {
  if (pdeg(a) < 0 || pdeg(b) < 0) return {};
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] += u128(a[i]) * b[j] % p;
  }
  Poly r(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
  ptrim(r);
  return r;
}

// Division with remainder; g must be nonzero.
void pdivmod(u64 p, const Poly& f, const Poly& g, Poly& q, Poly& r) {
  int dg = pdeg(g);
  if (dg < 0) throw std::invalid_argument("polynomial division by zero");
  u64 lead_inv = inv_mod(g[dg], p);
  r = f;
  ptrim(r);
  q.assign(r.size() > static_cast<size_t>(dg) ? r.size() - dg : 0, 0);
  for (int i = pdeg(r); i >= dg; --i) {
    u64 c = mul_mod(r[i], lead_inv, p);
    if (c == 0) continue;
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j) {
      r[i - dg + j] = (r[i - dg + j] + p - mul_mod(c, g[j], p)) % p;
    }
  }
  ptrim(q);
  ptrim(r);
}

Poly pmod(u64 p, const Poly& f, const Poly& g) {
  Poly q, r;
  pdivmod(p, f, g, q, r);
  return r;
}

Poly pmonic(u64 p, Poly f) {
  int d = pdeg(f);
  if (d < 0) return f;
  u64 s = inv_mod(f[d], p);
  for (auto& c : f) c = mul_mod(c, s, p);
  return f;
}

Poly pgcd(u64 p, Poly a, Poly b) {
  ptrim(a);
  ptrim(b);
  while (pdeg(b) >= 0) {
    a = pmod(p, a, b);
    std::swap(a, b);
  }
  return pmonic(p, a);
}

// base^e mod f.
Poly ppowmod(u64 p, Poly base, u64 e, const Poly& f) {
  Poly r{1};
  base = pmod(p, base, f);
  while (e) {
    if (e & 1) r = pmod(p, pmul(p, r, base), f);
    base = pmod(p, pmul(p, base, base), f);
    e >>= 1;
  }
  return r;
}

// Rabin's test for a monic polynomial of degree >= 1.
bool is_irreducible(u64 p, unsigned d, const Poly& f, u64 order) {
  if (d == 1) return true;
  const Poly x{0, 1};
  Poly xq = ppowmod(p, x, order, f);  // T^(p^d) mod f
  if (pdeg(psub(p, xq, x)) >= 0) return false;
  for (auto [q, e] : factorize(d)) {
    (void)e;
    u64 sub = 1;
    for (unsigned i = 0; i < d / q; ++i) sub *= p;
    Poly xs = ppowmod(p, x, sub, f);
    Poly g = pgcd(p, psub(p, xs, x), f);
    if (pdeg(g) != 0) return false;
  }
  return true;
}

Poly canonical_modulus(u64 p, unsigned d, u64 order) {
  Poly f(d + 1, 0);
  f[d] = 1;
  for (u64 code = 0;; ++code) {
    u64 v = code;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = v % p;
      v /= p;
    }
    if (is_irreducible(p, d, f, order)) return f;
    if (code + 1 == order) break;
  }
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

// Product reduced by the monic modulus m (length d+1).
std::vector<u64> mul_reduce(u64 p, const std::vector<u64>& m, const std::vector<u64>& a,
                            const std::vector<u64>& b) {
  size_t d = m.size() - 1;
  if (d == 1) return {mul_mod(a[0], b[0], p)};
  std::vector<u128> acc(2 * d - 1, 0);
  for (size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) acc[i + j] += u128(a[i]) * b[j] % p;
  }
  std::vector<u64> buf(2 * d - 1);
  for (size_t i = 0; i < buf.size(); ++i) buf[i] = static_cast<u64>(acc[i] % p);
  for (size_t i = 2 * d - 2; i >= d; --i) {
    u64 t = buf[i];
    if (t) {
      buf[i] = 0;
      for (size_t j = 0; j < d; ++j) {
        buf[i - d + j] = (buf[i - d + j] + mul_mod(p - m[j] % p, t, p) % p) % p;
      }
    }
  }
  buf.resize(d);
  return buf;
}

// Inverse of a modulo the irreducible m; a nonzero and reduced.
std::vector<u64> inv_mod_poly(u64 p, const Poly& m, Poly a) {
  ptrim(a);
  Poly r0 = m, r1 = a, t0{}, t1{1};
  while (pdeg(r1) > 0) {
    Poly q, r;
    pdivmod(p, r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly nt = psub(p, t0, pmul(p, q, t1));
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (pdeg(r1) != 0) throw std::invalid_argument("element not invertible");
  u64 s = inv_mod(r1[0], p);
  for (auto& c : t1) c = mul_mod(c, s, p);
  t1.resize(m.size() - 1, 0);
  return t1;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

FieldCtx::FieldCtx(u64 p, unsigned d, std::vector<u64> modulus, FieldOptions opts)
    : p_(p), d_(d), modulus_(std::move(modulus)), opts_(opts) {
  order_ = 1;
  for (unsigned i = 0; i < d_; ++i) order_ *= p_;
}

FieldCtxPtr FieldCtx::create(u64 p, unsigned d, FieldOptions opts) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (p == 2) throw std::invalid_argument("even characteristic is not supported");
  if (p == 3 && !opts.allow_small_characteristic)
    throw std::invalid_argument("characteristic 3 requires the small-characteristic override");
  if (p > kMaxCharacteristic) throw std::invalid_argument("characteristic too large");
  if (d == 0) throw std::invalid_argument("extension degree must be positive");
  u64 order = checked_pow(p, d, kMaxOrder);
  Poly modulus = canonical_modulus(p, d, order);
  return FieldCtxPtr(new FieldCtx(p, d, std::move(modulus), opts));
}

FieldElement FieldCtx::zero() const { return FieldElement(shared_from_this(), std::vector<u64>(d_, 0)); }

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(u64 v) const {
  std::vector<u64> c(d_, 0);
  c[0] = v % p_;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::element(u64 code) const {
  if (code >= order_) throw std::invalid_argument("element code out of range");
  std::vector<u64> c(d_, 0);
  for (unsigned i = 0; i < d_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_coeffs(std::vector<u64> coeffs) const {
  if (coeffs.size() > d_) {
    // reduce higher-degree input by the modulus
    Poly r = pmod(p_, coeffs, modulus_);
    r.resize(d_, 0);
    coeffs = std::move(r);
  }
  coeffs.resize(d_, 0);
  for (auto& c : coeffs) c %= p_;
  return FieldElement(shared_from_this(), std::move(coeffs));
}

const std::vector<std::pair<u64, int>>& FieldCtx::unit_order_factors() const {
  std::call_once(factors_once_, [this] { factors_ = factorize(order_ - 1); });
  return factors_;
}

const std::vector<std::vector<u64>>& FieldCtx::frobenius_rows() const {
  std::call_once(frob_once_, [this] {
    Poly xp = ppowmod(p_, Poly{0, 1}, p_, modulus_);
    xp.resize(d_, 0);
    frob_rows_.assign(d_, std::vector<u64>(d_, 0));
    frob_rows_[0][0] = 1;
    if (d_ > 1) frob_rows_[1] = xp;
    for (unsigned i = 2; i < d_; ++i) frob_rows_[i] = mul_reduce(p_, modulus_, frob_rows_[i - 1], xp);
  });
  return frob_rows_;
}

const std::vector<std::vector<u64>>& FieldCtx::inverse_frobenius_rows() const {
  std::call_once(inv_frob_once_, [this] {
    u64 e = 1;
    for (unsigned i = 0; i + 1 < d_; ++i) e *= p_;  // p^(d-1), the inverse power
    Poly xq = ppowmod(p_, Poly{0, 1}, e, modulus_);
    xq.resize(d_, 0);
    inv_frob_rows_.assign(d_, std::vector<u64>(d_, 0));
    inv_frob_rows_[0][0] = 1;
    if (d_ > 1) inv_frob_rows_[1] = xq;
    for (unsigned i = 2; i < d_; ++i) inv_frob_rows_[i] = mul_reduce(p_, modulus_, inv_frob_rows_[i - 1], xq);
  });
  return inv_frob_rows_;
}

FieldElement FieldCtx::generator() const {
  std::call_once(gen_once_, [this] {
    const auto& factors = unit_order_factors();
    u64 n = order_ - 1;
    for (u64 code = 2; code < order_; ++code) {
      FieldElement x = element(code);
      bool primitive = true;
      for (auto [q, e] : factors) {
        (void)e;
        if (x.pow(static_cast<i64>(n / q)).is_one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen_code_ = code;
        return;
      }
    }
    throw std::logic_error("no generator found");  // unreachable for a field
  });
  return element(gen_code_);
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

namespace {

void require_compat(const FieldElement& a, const FieldElement& b) {
  if (a.ctx() == b.ctx()) return;
  if (!a.ctx() || !b.ctx() || !a.ctx()->same_field(*b.ctx()))
    throw std::invalid_argument("field context mismatch");
}

}  // namespace

FieldElement::FieldElement(FieldCtxPtr ctx, std::vector<u64> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  if (!ctx_) throw std::invalid_argument("null field context");
  if (c_.size() != ctx_->degree()) throw std::invalid_argument("coefficient vector has wrong length");
  for (auto& x : c_) x %= ctx_->p();
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](u64 x) { return x == 0; });
}

u64 FieldElement::encode() const {
  u64 v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = v * ctx_->p() + c_[i];
  return v;
}

FieldElement FieldElement::operator-() const {
  std::vector<u64> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = (ctx_->p() - c_[i]) % ctx_->p();
  return FieldElement(ctx_, std::move(r));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_compat(a, b);
  u64 p = a.ctx_->p();
  std::vector<u64> r(a.c_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = (a.c_[i] + b.c_[i]) % p;
  return FieldElement(a.ctx_, std::move(r));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_compat(a, b);
  u64 p = a.ctx_->p();
  std::vector<u64> r(a.c_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = (a.c_[i] + p - b.c_[i]) % p;
  return FieldElement(a.ctx_, std::move(r));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_compat(a, b);
  return FieldElement(a.ctx_, mul_reduce(a.ctx_->p(), a.ctx_->modulus(), a.c_, b.c_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_compat(a, b);
  return a.c_ == b.c_;
}

bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

FieldElement FieldElement::inv() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  return FieldElement(ctx_, inv_mod_poly(ctx_->p(), ctx_->modulus(), c_));
}

FieldElement FieldElement::pow(i64 e) const {
  if (e < 0) return inv().pow(-e);
  FieldElement base = *this, r = ctx_->one();
  u64 exp = static_cast<u64>(e);
  while (exp) {
    if (exp & 1) r = r * base;
    base = base * base;
    exp >>= 1;
  }
  return r;
}

FieldElement FieldElement::mul_int(u64 s) const {
  u64 p = ctx_->p();
  s %= p;
  std::vector<u64> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = mul_mod(c_[i], s, p);
  return FieldElement(ctx_, std::move(r));
}

FieldElement frobenius(const FieldElement& x, i64 e) {
  unsigned d = x.ctx()->degree();
  u64 em = static_cast<u64>(((e % d) + d) % d);
  if (em == 0 || d == 1) return x;
  // walk the shorter way around the cyclic Galois group
  bool reverse = em > d - em;
  u64 steps = reverse ? d - em : em;
  const auto& rows = reverse ? x.ctx()->inverse_frobenius_rows() : x.ctx()->frobenius_rows();
  u64 p = x.ctx()->p();
  std::vector<u64> cur = x.coeffs();
  std::vector<u128> acc(d);
  for (u64 step = 0; step < steps; ++step) {
    std::fill(acc.begin(), acc.end(), 0);
    for (unsigned i = 0; i < d; ++i) {
      if (cur[i] == 0) continue;
      for (unsigned j = 0; j < d; ++j) acc[j] += u128(cur[i]) * rows[i][j] % p;
    }
    for (unsigned j = 0; j < d; ++j) cur[j] = static_cast<u64>(acc[j] % p);
  }
  return FieldElement(x.ctx(), std::move(cur));
}

u64 mult_order(const FieldElement& x) {
  if (x.is_zero()) throw std::invalid_argument("multiplicative order of zero");
  u64 n = x.ctx()->unit_order();
  for (auto [q, e] : x.ctx()->unit_order_factors()) {
    for (int i = 0; i < e; ++i) {
      if (n % q == 0 && x.pow(static_cast<i64>(n / q)).is_one())
        n /= q;
      else
        break;
    }
  }
  return n;
}

FieldElement root_of_unity(const FieldCtxPtr& ctx, u64 n) {
  if (n == 0) throw std::invalid_argument("root order must be positive");
  if (ctx->unit_order() % n != 0)
    throw std::invalid_argument("no roots of unity of the requested order in this field");
  return ctx->generator().pow(static_cast<i64>(ctx->unit_order() / n));
}

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

namespace {

using EPoly = std::vector<FieldElement>;  // ascending, all sharing one context

int edeg(const EPoly& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[static_cast<size_t>(d)].is_zero()) --d;
  return d;
}

EPoly emul(const EPoly& a, const EPoly& b, const FieldCtxPtr& ctx) {
  if (a.empty() || b.empty()) return {};
  EPoly r(a.size() + b.size() - 1, ctx->zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

EPoly emod(const EPoly& f, const EPoly& g, const FieldCtxPtr& ctx) {
  int dg = edeg(g);
  if (dg < 0) throw std::invalid_argument("polynomial division by zero");
  EPoly r = f;
  FieldElement lead_inv = g[static_cast<size_t>(dg)].inv();
  for (int i = edeg(r); i >= dg; i = edeg(r)) {
    FieldElement c = r[static_cast<size_t>(i)] * lead_inv;
    for (int j = 0; j <= dg; ++j) {
      r[static_cast<size_t>(i - dg + j)] = r[static_cast<size_t>(i - dg + j)] - c * g[static_cast<size_t>(j)];
    }
    r[static_cast<size_t>(i)] = ctx->zero();
  }
  r.resize(static_cast<size_t>(edeg(r) + 1), ctx->zero());  // keep sizes degree-bounded
  return r;
}

EPoly emonic(EPoly f) {
  int d = edeg(f);
  if (d < 0) return f;
  FieldElement s = f[static_cast<size_t>(d)].inv();
  for (auto& c : f) c = c * s;
  f.resize(static_cast<size_t>(d + 1), f[0]);
  return f;
}

EPoly egcd(EPoly a, EPoly b, const FieldCtxPtr& ctx) {
  while (edeg(b) >= 0) {
    EPoly r = emod(a, b, ctx);
    a = std::move(b);
    b = std::move(r);
    b.resize(static_cast<size_t>(edeg(b) + 1), ctx->zero());
  }
  return emonic(std::move(a));
}

EPoly epowmod(EPoly base, u64 e, const EPoly& f, const FieldCtxPtr& ctx) {
  EPoly r{ctx->one()};
  base = emod(base, f, ctx);
  while (e) {
    if (e & 1) r = emod(emul(r, base, ctx), f, ctx);
    base = emod(emul(base, base, ctx), f, ctx);
    e >>= 1;
  }
  return r;
}

void split_linear_product(const EPoly& g, const FieldCtxPtr& ctx, std::vector<FieldElement>& out) {
  int d = edeg(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(-(g[0] / g[1]));
    return;
  }
  // g is a product of distinct linear factors; separate roots by quadratic
  // residuosity of (T + s), walking s through the canonical element order.
  u64 half = ctx->unit_order() / 2;
  for (u64 code = 0; code < ctx->order(); ++code) {
    EPoly shift{ctx->element(code), ctx->one()};
    EPoly w = epowmod(shift, half, g, ctx);
    w.resize(std::max<size_t>(w.size(), 1), ctx->zero());
    w[0] = w[0] - ctx->one();
    EPoly h = egcd(g, w, ctx);
    int dh = edeg(h);
    if (dh > 0 && dh < d) {
      EPoly q, r;
      // divide g by h
      {
        EPoly rem = g;
        int dhh = edeg(h);
        FieldElement lead_inv = h[static_cast<size_t>(dhh)].inv();
        q.assign(g.size(), ctx->zero());
        for (int i = edeg(rem); i >= dhh; i = edeg(rem)) {
          FieldElement c = rem[static_cast<size_t>(i)] * lead_inv;
          q[static_cast<size_t>(i - dhh)] = c;
          for (int j = 0; j <= dhh; ++j)
            rem[static_cast<size_t>(i - dhh + j)] = rem[static_cast<size_t>(i - dhh + j)] - c * h[static_cast<size_t>(j)];
        }
        r = rem;
      }
      split_linear_product(h, ctx, out);
      split_linear_product(q, ctx, out);
      return;
    }
  }
  throw std::logic_error("root splitting failed to separate factors");  // unreachable
}

}  // namespace

std::vector<FieldElement> poly_roots(const std::vector<FieldElement>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("zero polynomial");
  FieldCtxPtr ctx = coeffs[0].ctx();
  for (const auto& c : coeffs) require_compat(coeffs[0], c);
  EPoly f = coeffs;
  int d = edeg(f);
  if (d < 0) throw std::invalid_argument("zero polynomial");
  if (d == 0) throw std::invalid_argument("constant polynomial has no roots to find");

  std::vector<FieldElement> roots;
  if (ctx->order() <= ctx->options().root_scan_threshold) {
    for (u64 code = 0; code < ctx->order(); ++code) {
      FieldElement x = ctx->element(code);
      FieldElement v = ctx->zero();
      for (size_t i = f.size(); i-- > 0;) v = v * x + f[i];
      if (v.is_zero()) roots.push_back(x);
    }
  } else {
    f = emonic(std::move(f));
    // gcd with T^q - T isolates the distinct roots in this field
    EPoly xq = epowmod(EPoly{ctx->zero(), ctx->one()}, ctx->order(), f, ctx);
    EPoly lin = xq;
    lin.resize(std::max<size_t>(lin.size(), 2), ctx->zero());
    lin[1] = lin[1] - ctx->one();
    EPoly g = egcd(f, lin, ctx);
    split_linear_product(g, ctx, roots);
  }
  std::sort(roots.begin(), roots.end(),
            [](const FieldElement& a, const FieldElement& b) { return a.encode() < b.encode(); });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string to_string(const FieldElement& x) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (i) os << ",";
    os << x.coeffs()[i];
  }
  os << "]";
  return os.str();
}

}  // namespace ssk3::ffield
