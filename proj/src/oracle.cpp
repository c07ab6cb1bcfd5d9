#include "ssk3/oracle.hpp"

#include <numeric>

namespace ssk3::oracle {

using discform::bilinear;
using discform::frob_semilinear;

namespace {

FMatrix vbasis_matrix(const CharSubspace& K) {
  const auto& space = K.space();
  unsigned n = space->dim();
  FMatrix V(space->work(), n, n);
  for (unsigned i = 0; i < n; ++i) {
    const auto& v = K.distinguished_basis()[i];
    for (unsigned r = 0; r < n; ++r) V.at(r, i) = v[r];
  }
  return V;
}

EigenIsometry build_with_inverse(const CharSubspace& K, const FieldElement& xi, const FMatrix& V,
                                 const FMatrix& Vinv) {
  const auto& space = K.space();
  unsigned n = space->dim();
  const auto& work = space->work();

  FMatrix D(work, n, n);
  for (unsigned i = 0; i < n; ++i) D.at(i, i) = ffield::frobenius(xi, 1 - static_cast<i64>(i + 1));
  EigenIsometry iso{xi, V * D * Vinv, false, false, false};

  const FMatrix& gw = space->gram_work();
  iso.orthogonal = iso.matrix.transpose() * gw * iso.matrix == gw;

  // rational iff it commutes with the coordinatewise Frobenius; on the
  // rational basis vectors that is a column-by-column comparison
  iso.rational = true;
  for (unsigned j = 0; j < n && iso.rational; ++j) {
    std::vector<FieldElement> col;
    col.reserve(n);
    for (unsigned i = 0; i < n; ++i) col.push_back(iso.matrix.at(i, j));
    ExtVector ge = space->vector(col);                 // g(f(e_j)) with f(e_j) = e_j
    if (frob_semilinear(ge, 1) != ge) iso.rational = false;
  }

  // diagonal action on v_1 .. v_sigma keeps the subspace; assert it
  iso.preserves_subspace = true;
  for (unsigned i = 0; i < space->sigma() && iso.preserves_subspace; ++i) {
    const auto& v = K.distinguished_basis()[i];
    ExtVector img = space->vector(iso.matrix.mul_vec(v.coords()));
    if (img != D.at(i, i) * v) iso.preserves_subspace = false;
  }
  return iso;
}

}  // namespace

EigenIsometry build_eigen_isometry(const CharSubspace& K, const FieldElement& xi) {
  if (xi.is_zero()) throw std::invalid_argument("eigenvalue must be nonzero");
  FMatrix V = vbasis_matrix(K);
  auto Vinv = V.inverse();
  if (!Vinv) throw SelfCheckError("distinguished basis matrix is singular");
  return build_with_inverse(K, xi, V, *Vinv);
}

OracleResult enumerate_index(const CharSubspace& K, u64 budget) {
  const auto& space = K.space();
  u64 n = checked_pow(space->p(), space->sigma(), 1ull << 62) + 1;
  if (n > budget) throw BudgetError("eigenvalue enumeration exceeds its budget");

  FieldElement zeta = ffield::root_of_unity(space->work(), n);
  FMatrix V = vbasis_matrix(K);
  auto Vinv = V.inverse();
  if (!Vinv) throw SelfCheckError("distinguished basis matrix is singular");

  OracleResult result;
  result.modulus = n;
  FieldElement xi = space->work()->one();
  for (u64 j = 0; j < n; ++j) {
    EigenIsometry iso = build_with_inverse(K, xi, V, *Vinv);
    if (iso.admissible()) result.kept_exponents.push_back(j);
    xi = xi * zeta;
  }

  // the kept exponents must form a subgroup of Z/n
  u64 size = result.kept_exponents.size();
  if (size == 0 || n % size != 0) throw SelfCheckError("admissible eigenvalues do not form a subgroup");
  u64 step = n / size;
  for (u64 i = 0; i < size; ++i) {
    if (result.kept_exponents[i] != i * step)
      throw SelfCheckError("admissible eigenvalues do not form a subgroup");
  }
  result.index = size;
  for (u64 j : result.kept_exponents) result.kept_orders.push_back(n / std::gcd(n, j == 0 ? n : j));
  std::sort(result.kept_orders.begin(), result.kept_orders.end());
  return result;
}

EigenvalueConstraints eigenvalue_constraints(const FieldElement& xi, unsigned sigma) {
  if (xi.is_zero()) throw std::invalid_argument("eigenvalue must be nonzero");
  EigenvalueConstraints out;
  out.n = ffield::mult_order(xi);
  FieldElement inv = xi.inv();
  bool found = false;
  for (unsigned m = 0; m <= 2 * sigma; ++m) {
    if (ffield::frobenius(xi, -static_cast<i64>(m)) == inv) {
      out.m = m;
      found = true;
      break;
    }
  }
  if (!found)
    throw std::invalid_argument("eigenvalue lies outside the admissible root-of-unity locus");
  if (out.m >= 1) {
    u64 p = xi.ctx()->p();
    if (out.n <= 2) throw SelfCheckError("m >= 1 requires an eigenvalue of order > 2");
    if (mult_order_mod(p, out.n) != 2ull * out.m)
      throw SelfCheckError("order of p modulo n is not 2m");
    if (pow_mod(p, out.m, out.n) != out.n - 1)
      throw SelfCheckError("p^m is not -1 modulo n");
  }
  return out;
}

}  // namespace ssk3::oracle
