#include "ssk3/json_io.hpp"

namespace ssk3::ffield {

void to_json(nlohmann::json& j, const FieldElement& x) { j = x.coeffs(); }

void to_json(nlohmann::json& j, const FieldCtx& ctx) {
  j = nlohmann::json{{"p", ctx.p()}, {"d", ctx.degree()}, {"modulus", ctx.modulus()}};
}

}  // namespace ssk3::ffield

namespace ssk3::discform {

void to_json(nlohmann::json& j, const DiscSpace& s) {
  j = nlohmann::json{{"p", s.p()},
                     {"sigma", s.sigma()},
                     {"working_degree", s.working_degree()},
                     {"gram", s.gram()}};
}

}  // namespace ssk3::discform

namespace ssk3::charspace {

void to_json(nlohmann::json& j, const CharSubspace& k) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < k.basis().rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t c = 0; c < k.basis().cols(); ++c) row.push_back(k.basis().at(i, c).coeffs());
    rows.push_back(std::move(row));
  }
  j = nlohmann::json{{"p", k.space()->p()},
                     {"sigma", k.space()->sigma()},
                     {"D", k.space()->working_degree()},
                     {"basis", std::move(rows)}};
}

void to_json(nlohmann::json& j, const Psi& psi) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : psi.a) a.push_back(x.coeffs());
  nlohmann::json canonical = nlohmann::json::array();
  for (const auto& x : psi.canonical) canonical.push_back(x.coeffs());
  j = nlohmann::json{{"a", std::move(a)}, {"canonical", std::move(canonical)}};
}

}  // namespace ssk3::charspace

namespace ssk3::strata {

void to_json(nlohmann::json& j, const ZeroPattern& z) {
  nlohmann::json flags = nlohmann::json::array();
  for (bool b : z.nonzero) flags.push_back(b ? 1 : 0);
  j = nlohmann::json{{"sigma", z.sigma}, {"nonzero", std::move(flags)}};
}

void to_json(nlohmann::json& j, const Stratum& s) {
  j = nlohmann::json{{"m", s.m},
                     {"dimension", s.dimension},
                     {"label", s.label},
                     {"index_symbolic", s.index_symbolic}};
  if (s.index)
    j["index"] = *s.index;
  else
    j["index"] = nullptr;
}

void to_json(nlohmann::json& j, const IndexResult& r) {
  j = nlohmann::json{{"p", r.p},
                     {"sigma", r.sigma},
                     {"m", r.m},
                     {"index", r.index},
                     {"provenance", r.provenance}};
}

}  // namespace ssk3::strata

namespace ssk3::oracle {

void to_json(nlohmann::json& j, const OracleResult& r) {
  j = nlohmann::json{{"index", r.index},
                     {"modulus", r.modulus},
                     {"kept_exponents", r.kept_exponents},
                     {"kept_orders", r.kept_orders}};
}

}  // namespace ssk3::oracle

namespace ssk3::arith {

namespace {
const char* kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::Supersingular: return "supersingular";
    case ReductionKind::FiniteHeight: return "finite_height";
    case ReductionKind::Invalid: return "invalid";
  }
  return "invalid";
}
}  // namespace

void to_json(nlohmann::json& j, const ReductionClass& r) {
  j = nlohmann::json{{"N", r.N}, {"p", r.p}, {"outcome", kind_name(r.kind)}};
  if (r.kind == ReductionKind::Supersingular) j["artin_invariant"] = r.artin;
}

void to_json(nlohmann::json& j, const Erratum& e) {
  j = nlohmann::json{{"N", e.N},
                     {"m", e.m},
                     {"computed", e.computed},
                     {"published", e.published},
                     {"note", e.note}};
}

void to_json(nlohmann::json& j, const ResiduePartition& p) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [m, residues] : p.classes)
    classes.push_back(nlohmann::json{{"artin_invariant", m}, {"residues", residues}});
  j = nlohmann::json{{"N", p.N},
                     {"classes", std::move(classes)},
                     {"finite_height", p.finite_height},
                     {"non_units", p.non_units},
                     {"errata", p.errata}};
}

}  // namespace ssk3::arith

namespace ssk3::latred {

void to_json(nlohmann::json& j, const IntegralLattice& L) {
  j = nlohmann::json{{"rank", L.rank}, {"gram", L.gram}};
}

void from_json(const nlohmann::json& j, IntegralLattice& L) {
  L = IntegralLattice::from_gram(j.at("gram").get<IntMat>());
}

void to_json(nlohmann::json& j, const Frac& f) {
  j = nlohmann::json{{"num", f.num}, {"den", f.den}};
}

void to_json(nlohmann::json& j, const DiscGroup& g) {
  j = nlohmann::json{{"orders", g.orders}, {"gens", g.gens}, {"pairing", g.pairing}};
}

}  // namespace ssk3::latred

namespace ssk3::verify {

void to_json(nlohmann::json& j, const CheckResult& c) {
  j = nlohmann::json{{"name", c.name}, {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
}

void to_json(nlohmann::json& j, const SuiteReport& r) {
  j = nlohmann::json{{"suite", r.suite}, {"params", r.params}, {"checks", r.checks}, {"pass", r.pass()}};
}

}  // namespace ssk3::verify
