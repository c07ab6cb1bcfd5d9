#pragma once

#include <json.hpp>

#include "ssk3/arith.hpp"
#include "ssk3/charspace.hpp"
#include "ssk3/latred.hpp"
#include "ssk3/oracle.hpp"
#include "ssk3/strata.hpp"
#include "ssk3/verify.hpp"

namespace ssk3::ffield {
void to_json(nlohmann::json& j, const FieldElement& x);
void to_json(nlohmann::json& j, const FieldCtx& ctx);
}  // namespace ssk3::ffield

namespace ssk3::discform {
void to_json(nlohmann::json& j, const DiscSpace& s);
}

namespace ssk3::charspace {
void to_json(nlohmann::json& j, const CharSubspace& k);
void to_json(nlohmann::json& j, const Psi& psi);
}  // namespace ssk3::charspace

namespace ssk3::strata {
void to_json(nlohmann::json& j, const ZeroPattern& z);
void to_json(nlohmann::json& j, const Stratum& s);
void to_json(nlohmann::json& j, const IndexResult& r);
}  // namespace ssk3::strata

namespace ssk3::oracle {
void to_json(nlohmann::json& j, const OracleResult& r);
}

namespace ssk3::arith {
void to_json(nlohmann::json& j, const ReductionClass& r);
void to_json(nlohmann::json& j, const Erratum& e);
void to_json(nlohmann::json& j, const ResiduePartition& p);
}  // namespace ssk3::arith

namespace ssk3::latred {
void to_json(nlohmann::json& j, const IntegralLattice& L);
void from_json(const nlohmann::json& j, IntegralLattice& L);
void to_json(nlohmann::json& j, const Frac& f);
void to_json(nlohmann::json& j, const DiscGroup& g);
}  // namespace ssk3::latred

namespace ssk3::verify {
void to_json(nlohmann::json& j, const CheckResult& c);
void to_json(nlohmann::json& j, const SuiteReport& r);
}  // namespace ssk3::verify
