#include "ssk3/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ssk3::arith {

u64 euler_phi(u64 n) {
  if (n == 0) throw std::invalid_argument("euler_phi of zero");
  u64 r = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

namespace {

// Exact division of integer polynomials, ascending coefficients.
std::vector<i64> poly_div_exact(std::vector<i64> num, const std::vector<i64>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  std::vector<i64> q(num.size() - den.size() + 1, 0);
  i64 lead = den.back();
  for (size_t i = num.size(); i-- >= den.size();) {
    i64 c = num[i] / lead;
    if (c * lead != num[i]) throw std::logic_error("cyclotomic division not exact");
    q[i - den.size() + 1] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i - den.size() + 1 + j] -= c * den[j];
    if (i == den.size() - 1) break;
  }
  for (i64 c : num)
    if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

}  // namespace

std::vector<i64> cyclotomic_poly(u64 n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
  static std::map<u64, std::vector<i64>> cache;  // small n only; guarded by caller patterns
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<i64> result;
  if (n == 1) {
    result = {-1, 1};
  } else {
    // T^n - 1 divided by the product of all proper-divisor cyclotomics
    std::vector<i64> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (u64 d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      num = poly_div_exact(std::move(num), cyclotomic_poly(d));
    }
    result = std::move(num);
  }
  cache.emplace(n, result);
  return result;
}

std::vector<u64> admissible_complex_indices(u64 rank_bound) {
  if (rank_bound == 0) throw std::invalid_argument("rank bound must be positive");
  // phi(N) >= sqrt(N/2), so nothing beyond 2*bound^2 qualifies
  u64 limit = 2 * rank_bound * rank_bound + 1;
  std::vector<u64> out;
  for (u64 n = 1; n <= limit; ++n)
    if (euler_phi(n) <= rank_bound) out.push_back(n);
  return out;
}

std::optional<unsigned> neg_one_exponent(u64 p, u64 N) {
  if (N == 0) throw std::invalid_argument("modulus must be positive");
  if (std::gcd(p % N == 0 ? N : p % N, N) != 1 && N > 1)
    throw std::invalid_argument("p and N must be coprime");
  if (N == 1) return 1u;  // every congruence holds mod 1
  u64 x = p % N;
  u64 target = N - 1;
  for (unsigned m = 1; m <= N; ++m) {
    if (x == target) return m;
    if (x == 1) return std::nullopt;  // cycled back without hitting -1
    x = mul_mod(x, p % N, N);
  }
  return std::nullopt;
}

ReductionClass classify_reduction(u64 N, u64 p) {
  ReductionClass r;
  r.N = N;
  r.p = p;
  if (N == 0) throw std::invalid_argument("N must be positive");
  if (std::gcd(p % N == 0 ? N : p % N, N) != 1 && N > 1) {
    r.kind = ReductionKind::Invalid;
    return r;
  }
  auto m = neg_one_exponent(p, N);
  if (m) {
    r.kind = ReductionKind::Supersingular;
    r.artin = *m;
  } else {
    r.kind = ReductionKind::FiniteHeight;
  }
  return r;
}

std::vector<u64> residue_classes_for_artin(u64 N, unsigned m) {
  if (N < 2) throw std::invalid_argument("modulus must be at least 2");
  std::vector<u64> out;
  for (u64 r = 1; r < N; ++r) {
    if (std::gcd(r, N) != 1) continue;
    auto e = neg_one_exponent(r, N);
    if (e && *e == m) out.push_back(r);
  }
  return out;
}

const std::vector<PublishedList>& published_residue_lists() {
  static const std::vector<PublishedList> lists = {
      {38, 1, {37}},
      {38, 3, {27, 31}},
      {38, 9, {3, 13, 15, 19, 29, 33}},
  };
  return lists;
}

ResiduePartition residue_partition(u64 N) {
  if (N < 2) throw std::invalid_argument("modulus must be at least 2");
  ResiduePartition part;
  part.N = N;
  std::map<unsigned, std::vector<u64>> classes;
  for (u64 r = 1; r < N; ++r) {
    if (std::gcd(r, N) != 1) {
      part.non_units.push_back(r);
      continue;
    }
    auto m = neg_one_exponent(r, N);
    if (m)
      classes[*m].push_back(r);
    else
      part.finite_height.push_back(r);
  }
  for (auto& [m, residues] : classes) part.classes.emplace_back(m, std::move(residues));

  for (const auto& pub : published_residue_lists()) {
    if (pub.N != N) continue;
    std::vector<u64> computed;
    for (const auto& [m, residues] : part.classes)
      if (m == pub.m) computed = residues;
    if (computed != pub.residues) {
      Erratum e;
      e.N = N;
      e.m = pub.m;
      e.computed = computed;
      e.published = pub.residues;
      e.note = "computed residue classes disagree with the published table for this order";
      for (u64 r : pub.residues) {
        if (std::gcd(r, N) != 1) {
          e.note += "; " + std::to_string(r) + " is not a unit mod " + std::to_string(N);
        }
      }
      part.errata.push_back(std::move(e));
    }
  }
  return part;
}

}  // namespace ssk3::arith
