#include <jacder/cli/serialize.hpp>

namespace jacder::cli {

namespace {

void append_power(std::string& out, char var, std::uint32_t e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  if (e > 1) out += "^" + std::to_string(e);
}

// One signed term, e.g. "-3/2*x^2*y".
std::string format_term(const Rational& c, std::uint32_t ex, std::uint32_t ey, char xvar, char yvar) {
  std::string body;
  if (ex == 0 && ey == 0) return to_string(c);
  if (c == -1) {
    body = "-";
  } else if (c != 1) {
    body = to_string(c);
  }
  std::string vars;
  append_power(vars, xvar, ex);
  append_power(vars, yvar, ey);
  if (!body.empty() && body != "-") body += '*';
  return body + vars;
}

void join(std::string& out, const std::string& term) {
  if (!out.empty() && term.front() != '-') out += '+';
  out += term;
}

}  // namespace

std::string to_text(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) join(out, format_term(c, m.ex, m.ey, 'x', 'y'));
  return out;
}

std::string to_text(const UnivarPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (is_zero(c[i])) continue;
    join(out, format_term(c[i], static_cast<std::uint32_t>(i), 0, 't', 't'));
  }
  return out;
}

std::string to_text(const Rational& r) { return to_string(r); }

nlohmann::ordered_json to_json(const Derivation& d) {
  return {{"P", to_text(d.P)}, {"Q", to_text(d.Q)}};
}

nlohmann::ordered_json to_json(const Decomposition& d) {
  return {{"p", to_text(d.p)}, {"theta", to_text(d.theta)}};
}

nlohmann::ordered_json to_json(const CriterionReport& r) {
  nlohmann::ordered_json j;
  j["commutes"] = r.commutes;
  j["p"] = to_text(r.p);
  j["theta"] = to_text(r.theta);
  j["psi"] = r.psi ? nlohmann::ordered_json(to_text(*r.psi)) : nlohmann::ordered_json(nullptr);
  j["lhs"] = r.lhs ? nlohmann::ordered_json(to_text(*r.lhs)) : nlohmann::ordered_json(nullptr);
  j["rhs"] = r.rhs ? nlohmann::ordered_json(to_text(*r.rhs)) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const CentralizerResult& r) {
  nlohmann::ordered_json j;
  j["rank"] = r.rank;
  j["certified"] = r.certified == RankCertificate::RankTwoCertified ? "RankTwoCertified" : "RankOneUpToBound";
  j["degree_bound"] = r.degree_bound;
  j["p"] = to_text(r.p);
  j["generator_dp"] = to_json(r.generator_dp);
  j["generator_t0"] = r.generator_t0 ? to_json(*r.generator_t0) : nlohmann::ordered_json(nullptr);
  j["psi0"] = r.psi0 ? nlohmann::ordered_json(to_text(*r.psi0)) : nlohmann::ordered_json(nullptr);
  j["solution_dimension"] = r.solution_dimension;
  return j;
}

nlohmann::ordered_json to_json(const BasisCoordinates& b) {
  return {{"q", to_text(b.q)}, {"delta", to_text(b.delta)}};
}

nlohmann::ordered_json to_json(const EigenPair& e) {
  return {{"g", to_text(e.g)}, {"lambda", to_text(e.lambda)}};
}

nlohmann::ordered_json to_json(const OdeSystem& s) {
  nlohmann::ordered_json j;
  j["dx_dt"] = to_text(s.rhs_x);
  j["dy_dt"] = to_text(s.rhs_y);
  j["first_integrals"] = nlohmann::ordered_json::array();
  for (const auto& h : s.first_integrals) j["first_integrals"].push_back(to_text(h));
  j["commuting_fields"] = nlohmann::ordered_json::array();
  for (const auto& d : s.commuting_fields) j["commuting_fields"].push_back(to_json(d));
  return j;
}

}  // namespace jacder::cli
