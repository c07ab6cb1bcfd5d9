#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ssk3/common.hpp"

namespace ssk3::ffield {

struct FieldOptions {
  /// Permit characteristic 3 (characteristic 2 is never supported).
  bool allow_small_characteristic = false;
  /// poly_roots enumerates the whole field when its order is at most this;
  /// above it, a gcd-with-(T^q - T) split is used instead.
  u64 root_scan_threshold = 1u << 16;
};

class FieldCtx;
class FieldElement;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Arithmetic context for GF(p^d).
///
/// The modulus is the canonical irreducible: the lexicographically smallest
/// monic irreducible of degree d, ordering polynomials by their coefficient
/// vector read as base-p digits (constant term least significant). Two
/// contexts built from the same (p, d) therefore agree coefficient for
/// coefficient, and values are reproducible across runs.
///
/// Contexts are immutable after construction and safe to share across
/// threads; the lazily built caches are guarded by std::once_flag.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  /// Requires p an odd prime (p >= 5 unless overridden), d >= 1 and
  /// p^d <= 2^62 so that element codes and exponents fit in 64 bits.
  static FieldCtxPtr create(u64 p, unsigned d, FieldOptions opts = {});

  u64 p() const { return p_; }
  unsigned degree() const { return d_; }
  /// Monic modulus, ascending coefficients, length degree()+1.
  const std::vector<u64>& modulus() const { return modulus_; }
  u64 order() const { return order_; }            // p^d
  u64 unit_order() const { return order_ - 1; }   // p^d - 1
  const FieldOptions& options() const { return opts_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The residue v mod p, embedded in the prime subfield.
  FieldElement from_int(u64 v) const;
  /// The element whose coefficient vector is code written in base p.
  FieldElement element(u64 code) const;
  FieldElement from_coeffs(std::vector<u64> coeffs) const;
  /// Smallest-code element of full multiplicative order (cached).
  FieldElement generator() const;

  const std::vector<std::pair<u64, int>>& unit_order_factors() const;

  bool same_field(const FieldCtx& o) const { return p_ == o.p_ && d_ == o.d_; }

 private:
  FieldCtx(u64 p, unsigned d, std::vector<u64> modulus, FieldOptions opts);

  const std::vector<std::vector<u64>>& frobenius_rows() const;
  const std::vector<std::vector<u64>>& inverse_frobenius_rows() const;

  u64 p_;
  unsigned d_;
  std::vector<u64> modulus_;
  u64 order_;
  FieldOptions opts_;

  mutable std::once_flag factors_once_, frob_once_, inv_frob_once_, gen_once_;
  mutable std::vector<std::pair<u64, int>> factors_;
  mutable std::vector<std::vector<u64>> frob_rows_;      // row i: coords of theta^(i*p)
  mutable std::vector<std::vector<u64>> inv_frob_rows_;  // row i: coords of theta^(i*p^(d-1))
  mutable u64 gen_code_ = 0;

  friend class FieldElement;
  friend FieldElement frobenius(const FieldElement& x, i64 e);
};

/// An element of GF(p^d): a fully reduced coefficient vector over F_p in the
/// power basis of the context's modulus. Elements of distinct fields never
/// mix in one operation.
class FieldElement {
 public:
  FieldElement(FieldCtxPtr ctx, std::vector<u64> coeffs);

  const FieldCtxPtr& ctx() const { return ctx_; }
  const std::vector<u64>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  /// Coefficient vector read as base-p digits; induces the canonical
  /// element order used for all deterministic tie-breaking.
  u64 encode() const;

  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(i64 e) const;
  /// Multiplication by a prime-field scalar given as a residue.
  FieldElement mul_int(u64 s) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b);

 private:
  FieldCtxPtr ctx_;
  std::vector<u64> c_;

  friend class FieldCtx;
  friend FieldElement frobenius(const FieldElement& x, i64 e);
};

/// x^(p^e); negative e applies the inverse Frobenius (e is taken mod d).
FieldElement frobenius(const FieldElement& x, i64 e);

/// Order of x in the multiplicative group; requires x != 0.
u64 mult_order(const FieldElement& x);

/// Deterministic element of exact multiplicative order n; requires
/// n | p^d - 1.
FieldElement root_of_unity(const FieldCtxPtr& ctx, u64 n);

/// All distinct roots in the coefficient field of the polynomial with the
/// given ascending coefficients (degree >= 1), sorted by element code.
std::vector<FieldElement> poly_roots(const std::vector<FieldElement>& coeffs);

std::string to_string(const FieldElement& x);

}  // namespace ssk3::ffield
