#include "ssk3/strata.hpp"
#include <array>

#include <algorithm>
#include <sstream>

namespace ssk3::strata {

ZeroPattern ZeroPattern::all_zero(unsigned sigma) {
  if (sigma < 1) throw std::invalid_argument("artin invariant must be positive");
  ZeroPattern z;
  z.sigma = sigma;
  z.nonzero.assign(sigma - 1, false);
  return z;
}

ZeroPattern ZeroPattern::parse(unsigned sigma, const std::string& csv) {
  ZeroPattern z = all_zero(sigma);
  if (csv.empty()) {
    if (sigma != 1) throw std::invalid_argument("pattern must have sigma-1 entries");
    return z;
  }
  std::stringstream ss(csv);
  std::string tok;
  size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= z.nonzero.size()) throw std::invalid_argument("pattern must have sigma-1 entries");
    if (tok == "0")
      z.nonzero[i] = false;
    else if (tok == "1")
      z.nonzero[i] = true;
    else
      throw std::invalid_argument("pattern entries must be 0 or 1");
    ++i;
  }
  if (i != z.nonzero.size()) throw std::invalid_argument("pattern must have sigma-1 entries");
  return z;
}

bool ZeroPattern::is_all_zero() const {
  return std::none_of(nonzero.begin(), nonzero.end(), [](bool b) { return b; });
}

std::string ZeroPattern::to_csv() const {
  std::string s;
  for (size_t i = 0; i < nonzero.size(); ++i) {
    if (i) s += ',';
    s += nonzero[i] ? '1' : '0';
  }
  return s;
}

std::vector<unsigned> admissible_m(unsigned sigma, const ZeroPattern& pattern) {
  if (sigma < 1 || sigma > 10) throw std::invalid_argument("artin invariant must lie in 1..10");
  if (pattern.sigma != sigma || pattern.nonzero.size() != sigma - 1)
    throw std::invalid_argument("pattern length does not match sigma");
  std::vector<unsigned> out;
  for (unsigned m = 1; m <= sigma; ++m) {
    if (sigma % m != 0) continue;
    if ((sigma / m) % 2 == 0) continue;
    bool ok = true;
    for (unsigned i = 1; i < sigma; ++i) {
      if (pattern.nonzero[i - 1] && i % (2 * m) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(m);
  }
  return out;
}

namespace {

u64 index_value(u64 p, unsigned m) {
  if (m == 0) return 2;
  return checked_pow(p, m, (1ull << 63) - 2) + 1;
}

std::string index_symbol(unsigned m) {
  if (m == 0) return "2";
  if (m == 1) return "p+1";
  return "p^" + std::to_string(m) + "+1";
}

std::string dimension_label(unsigned sigma, unsigned m, unsigned dim) {
  if (dim == 0) return "unique";
  if (m == 0 && sigma >= 2) return "generic";
  return std::to_string(dim) + " dimensional";
}

}  // namespace

IndexResult nonsymplectic_index(u64 p, unsigned sigma, const ZeroPattern& pattern) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("p must be a prime >= 5");
  auto ms = admissible_m(sigma, pattern);
  IndexResult r;
  r.p = p;
  r.sigma = sigma;
  r.m = ms.empty() ? 0 : ms.back();
  r.index = index_value(p, r.m);
  r.provenance = "criterion";
  return r;
}

unsigned stratum_dimension(unsigned sigma, unsigned m) {
  if (sigma < 1 || sigma > 10) throw std::invalid_argument("artin invariant must lie in 1..10");
  if (m == 0) return sigma - 1;
  if (sigma % m != 0 || (sigma / m) % 2 == 0) throw std::invalid_argument("inadmissible m");
  return (sigma - 1) / (2 * m);
}

std::vector<Stratum> strata_for(unsigned sigma, std::optional<u64> p) {
  if (p && (!is_prime(*p) || *p < 5)) throw std::invalid_argument("p must be a prime >= 5");
  std::vector<Stratum> out;
  if (sigma >= 2) {
    Stratum s;
    s.m = 0;
    s.dimension = sigma - 1;
    s.label = dimension_label(sigma, 0, s.dimension);
    s.index_symbolic = index_symbol(0);
    if (p) s.index = index_value(*p, 0);
    out.push_back(std::move(s));
  }
  for (unsigned m : admissible_m(sigma, ZeroPattern::all_zero(sigma))) {
    Stratum s;
    s.m = m;
    s.dimension = stratum_dimension(sigma, m);
    s.label = dimension_label(sigma, m, s.dimension);
    s.index_symbolic = index_symbol(m);
    if (p) s.index = index_value(*p, m);
    out.push_back(std::move(s));
  }
  return out;
}

Table table1(std::optional<u64> p) {
  Table t;
  for (unsigned sigma = 1; sigma <= 10; ++sigma) t.emplace_back(sigma, strata_for(sigma, p));
  return t;
}

std::string render_table_text(const Table& table) {
  std::vector<std::array<std::string, 3>> lines;
  lines.push_back({"sigma", "index", "family"});
  for (const auto& [sigma, strata] : table) {
    bool first = true;
    for (const auto& s : strata) {
      std::string idx = s.index ? std::to_string(*s.index) : s.index_symbolic;
      lines.push_back({first ? std::to_string(sigma) : "", idx, s.label});
      first = false;
    }
  }
  size_t w0 = 0, w1 = 0, w2 = 0;
  for (const auto& l : lines) {
    w0 = std::max(w0, l[0].size());
    w1 = std::max(w1, l[1].size());
    w2 = std::max(w2, l[2].size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, size_t w) { return s + std::string(w - s.size(), ' '); };
  for (size_t i = 0; i < lines.size(); ++i) {
    os << pad(lines[i][0], w0) << " | " << pad(lines[i][1], w1) << " | " << lines[i][2] << "\n";
    if (i == 0) os << std::string(w0, '-') << "-+-" << std::string(w1, '-') << "-+-" << std::string(w2, '-') << "\n";
  }
  return os.str();
}

}  // namespace ssk3::strata
