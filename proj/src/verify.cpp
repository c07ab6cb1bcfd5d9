#include "ssk3/verify.hpp"

#include <random>

#include "ssk3/arith.hpp"
#include "ssk3/charspace.hpp"
#include "ssk3/latred.hpp"
#include "ssk3/oracle.hpp"
#include "ssk3/strata.hpp"

namespace ssk3::verify {

using ffield::FieldCtx;
using ffield::FieldElement;
using ffield::frobenius;

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void add(SuiteReport& r, const std::string& name, bool pass, std::string detail = "") {
  r.checks.push_back({name, pass, std::move(detail)});
}

template <typename Fn>
void add_checked(SuiteReport& r, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    add(r, name, false, e.what());
  }
}

}  // namespace

SuiteReport verify_fields(u64 p, unsigned d, u64 samples, u64 seed) {
  SuiteReport report{"fields", "p=" + std::to_string(p) + " d=" + std::to_string(d), {}};
  add_checked(report, "suite", [&] {
    auto ctx = FieldCtx::create(p, d);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> dist(0, ctx->order() - 1);
    auto sample = [&] { return ctx->element(dist(rng)); };

    bool axioms = true, frob_hom = true, frob_order = true, orders_divide = true;
    for (u64 it = 0; it < samples; ++it) {
      auto a = sample(), b = sample(), c = sample();
      axioms = axioms && (a + b) + c == a + (b + c) && a * (b + c) == a * b + a * c &&
               a * b == b * a && a + (-a) == ctx->zero();
      if (!a.is_zero()) axioms = axioms && (a * a.inv()).is_one();
      frob_hom = frob_hom && frobenius(a + b, 1) == frobenius(a, 1) + frobenius(b, 1) &&
                 frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1);
      frob_order = frob_order && frobenius(a, static_cast<i64>(d)) == a &&
                   frobenius(frobenius(a, 1), -1) == a;
      if (!a.is_zero()) orders_divide = orders_divide && ctx->unit_order() % mult_order(a) == 0;
    }
    add(report, "field axioms", axioms);
    add(report, "frobenius is a ring map", frob_hom);
    add(report, "frobenius has order d", frob_order);
    add(report, "element orders divide p^d - 1", orders_divide);

    bool roots_exact = true;
    for (u64 n = 1; n <= ctx->unit_order() && n <= 64; ++n) {
      if (ctx->unit_order() % n != 0) continue;
      roots_exact = roots_exact && mult_order(ffield::root_of_unity(ctx, n)) == n;
    }
    add(report, "roots of unity have exact order", roots_exact);
  });
  return report;
}

SuiteReport verify_discform(u64 p, unsigned sigma) {
  SuiteReport report{"discform", "p=" + std::to_string(p) + " sigma=" + std::to_string(sigma), {}};
  add_checked(report, "suite", [&] {
    auto space = discform::DiscSpace::build(p, sigma);
    u64 count = discform::isotropic_vector_count(*space);
    u64 expected = discform::non_split_isotropic_count(p, sigma);
    add(report, "isotropic vector count matches the non-split formula", count == expected,
        "zero_count=" + std::to_string(count));
    add(report, "no totally isotropic subspace of half dimension",
        !discform::has_totally_isotropic_subspace(*space, sigma));

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<u64> dist(0, space->work()->order() - 1);
    auto rand_vec = [&] {
      std::vector<FieldElement> c;
      for (unsigned i = 0; i < space->dim(); ++i) c.push_back(space->work()->element(dist(rng)));
      return space->vector(std::move(c));
    };
    bool rational = true, semilinear = true, symmetric = true;
    for (int it = 0; it < 25; ++it) {
      auto u = rand_vec(), w = rand_vec();
      auto c = space->work()->element(dist(rng));
      symmetric = symmetric && discform::bilinear(u, w) == discform::bilinear(w, u);
      rational = rational && frobenius(discform::bilinear(u, w), -1) ==
                                 discform::bilinear(discform::frob_semilinear(u, -1),
                                                    discform::frob_semilinear(w, -1));
      semilinear = semilinear && discform::frob_semilinear(c * u, 1) ==
                                     frobenius(c, 1) * discform::frob_semilinear(u, 1);
    }
    add(report, "pairing is symmetric", symmetric);
    add(report, "pairing is rational", rational);
    add(report, "frobenius action is semilinear", semilinear);
  });
  return report;
}

SuiteReport verify_charspace(u64 p, unsigned sigma, bool quick) {
  SuiteReport report{"charspace", "p=" + std::to_string(p) + " sigma=" + std::to_string(sigma), {}};
  add_checked(report, "suite", [&] {
    auto space = discform::DiscSpace::build(p, sigma);
    auto K = charspace::CharSubspace::special(space);

    auto rep = charspace::verify_characteristic(space, K.basis());
    add(report, "special subspace satisfies all defining conditions", rep.all());

    bool azero = true;
    for (const auto& a : K.a_vector()) azero = azero && a.is_zero();
    add(report, "special subspace has zero moduli coordinates", azero);

    auto gram = K.gram_in_vbasis();  // throws unless the block shape holds
    bool a_identity = true;
    for (unsigned i = 0; i < sigma; ++i)
      for (unsigned j = 0; j < sigma; ++j) {
        bool is_one = gram.at(i, sigma + j).is_one();
        bool is_zero = gram.at(i, sigma + j).is_zero();
        a_identity = a_identity && (i == j ? is_one : is_zero);
      }
    add(report, "pairing block of the special subspace is the identity", a_identity);

    bool chain = true;
    for (unsigned i = 0; i + 1 < 2 * sigma; ++i)
      chain = chain && discform::frob_semilinear(K.distinguished_basis()[i], -1) ==
                           K.distinguished_basis()[i + 1];
    add(report, "inverse frobenius steps through the distinguished basis", chain);

    if (!quick && sigma <= 2) {
      auto found = charspace::search_subspace(space, strata::ZeroPattern::all_zero(sigma));
      add(report, "search finds the all-zero pattern", found.has_value());
    }
  });
  return report;
}

SuiteReport verify_oracle(u64 p, unsigned sigma) {
  SuiteReport report{"oracle", "p=" + std::to_string(p) + " sigma=" + std::to_string(sigma), {}};
  add_checked(report, "suite", [&] {
    auto space = discform::DiscSpace::build(p, sigma);
    auto K = charspace::CharSubspace::special(space);
    auto r = oracle::enumerate_index(K);
    auto c = strata::nonsymplectic_index(p, sigma, K.zero_pattern());
    add(report, "oracle agrees with the divisor criterion", r.index == c.index,
        "index=" + std::to_string(r.index));
    add(report, "index is even", r.index % 2 == 0);
    add(report, "index divides p^sigma + 1", r.modulus % r.index == 0);
    bool has_minus_id = false;
    for (u64 j : r.kept_exponents) has_minus_id = has_minus_id || j == r.modulus / 2;
    add(report, "the negation map is always admissible", has_minus_id);
  });
  return report;
}

SuiteReport verify_lattices() {
  SuiteReport report{"lattices", "", {}};
  add_checked(report, "suite", [&] {
    bool all_ok = true;
    for (const auto& key : latred::named_lattice_keys()) {
      auto L = latred::named_lattice(key);
      all_ok = all_ok && latred::disc_group(L).size() == static_cast<u64>(std::abs(L.det()));
      for (i64 norm : {i64{-2}, i64{2}}) {
        for (const auto& v : latred::vectors_of_norm(L, norm, 2)) {
          auto R = norm == -2 ? latred::reflect_minus2(L, v) : latred::reflect_plus2(L, v);
          all_ok = all_ok && latred::preserves_gram(L, R) && latred::disc_action_is_identity(L, R);
        }
      }
    }
    add(report, "reflections preserve the pairing and fix the discriminant group", all_ok);
  });
  return report;
}

SuiteReport verify_arith() {
  SuiteReport report{"arith", "", {}};
  add_checked(report, "suite", [&] {
    bool deg_ok = true;
    for (u64 n = 1; n <= 200; ++n)
      deg_ok = deg_ok && arith::cyclotomic_poly(n).size() == arith::euler_phi(n) + 1;
    add(report, "cyclotomic degree equals the totient", deg_ok);
    add(report, "largest admissible complex index is 66",
        arith::admissible_complex_indices(20).back() == 66);
    auto part = arith::residue_partition(38);
    u64 covered = part.finite_height.size() + part.non_units.size();
    for (const auto& [m, rs] : part.classes) {
      (void)m;
      covered += rs.size();
    }
    add(report, "order-38 residues partition correctly", covered == 37);
  });
  return report;
}

std::vector<SuiteReport> verify_all(bool quick) {
  std::vector<SuiteReport> out;
  out.push_back(verify_fields(5, 4, quick ? 40 : 200, 2026));
  out.push_back(verify_discform(5, 1));
  out.push_back(verify_discform(5, 2));
  out.push_back(verify_charspace(5, 1, quick));
  out.push_back(verify_charspace(5, 2, quick));
  out.push_back(verify_oracle(5, 1));
  out.push_back(verify_oracle(5, 2));
  out.push_back(verify_lattices());
  out.push_back(verify_arith());
  return out;
}

}  // namespace ssk3::verify
