#include <jacder/centralizer.hpp>
#include <jacder/cli/expr.hpp>
#include <jacder/cli/run.hpp>
#include <jacder/cli/serialize.hpp>
#include <jacder/derivation.hpp>
#include <jacder/eigen.hpp>
#include <jacder/error.hpp>
#include <jacder/kernel.hpp>
#include <jacder/ode.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace jacder::cli {

using json = nlohmann::ordered_json;

int max_degree_cap() {
  const char* env = std::getenv("JACDER_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return 32;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used != std::string_view(env).size() || v < 0) throw std::invalid_argument("negative");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::UsageError, std::string("JACDER_MAX_DEGREE is not a non-negative integer: ") + env);
  }
}

namespace {

std::string resolve_value(const std::string& raw) {
  if (raw.empty() || raw.front() != '@') return raw;
  std::ifstream in(raw.substr(1));
  if (!in) throw Error(ErrorCode::UsageError, "cannot read " + raw.substr(1));
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

bool has(const JobSpec& job, const std::string& key) { return job.inputs.count(key) != 0; }

BivarPoly poly_input(const JobSpec& job, const std::string& key) {
  auto it = job.inputs.find(key);
  if (it == job.inputs.end()) {
    throw Error(ErrorCode::UsageError, "'" + job.command + "' requires -" + key);
  }
  try {
    return parse_poly(it->second);
  } catch (const Error& e) {
    throw Error(e.code(), "-" + key + ": " + e.what());
  }
}

bool has_field(const JobSpec& job) { return has(job, "T.P") || has(job, "T.Q"); }

Derivation field_input(const JobSpec& job) {
  Derivation t;
  if (has(job, "T.P")) t.P = poly_input(job, "T.P");
  if (has(job, "T.Q")) t.Q = poly_input(job, "T.Q");
  return t;
}

// T when given, otherwise D_f.
Derivation field_or_jacobian(const JobSpec& job) {
  if (has_field(job)) return field_input(job);
  if (has(job, "f")) return jacobian_derivation(poly_input(job, "f"));
  throw Error(ErrorCode::UsageError, "'" + job.command + "' requires --T.P/--T.Q or -f");
}

int resolve_bound(const JobSpec& job, const BivarPoly& f) {
  const int cap = max_degree_cap();
  if (job.degree_bound) {
    if (*job.degree_bound < 0) throw Error(ErrorCode::UsageError, "--bound must be non-negative");
    if (*job.degree_bound > cap) {
      throw Error(ErrorCode::UsageError, "--bound " + std::to_string(*job.degree_bound) +
                                             " exceeds JACDER_MAX_DEGREE=" + std::to_string(cap));
    }
    return *job.degree_bound;
  }
  return std::min(default_degree_bound(f), cap);
}

json dispatch(const JobSpec& job) {
  const std::string& cmd = job.command;
  if (cmd == "jac") return to_json(jacobian_derivation(poly_input(job, "f")));
  if (cmd == "apply") {
    Derivation d = field_or_jacobian(job);
    return {{"result", to_text(apply(d, poly_input(job, "h")))}};
  }
  if (cmd == "bracket") {
    if (has_field(job)) return to_json(bracket(field_input(job), jacobian_derivation(poly_input(job, "f"))));
    return to_json(bracket(jacobian_derivation(poly_input(job, "f")), jacobian_derivation(poly_input(job, "g"))));
  }
  if (cmd == "div") return {{"div", to_text(divergence(field_or_jacobian(job)))}};
  if (cmd == "potential") {
    auto g = potential(field_or_jacobian(job));
    if (!g) throw Error(ErrorCode::NotDivergenceFree, "field has nonzero divergence");
    return {{"potential", to_text(*g)}};
  }
  if (cmd == "kernel") {
    KernelBasis kb = kernel_generator(poly_input(job, "f"));
    return {{"p", to_text(kb.p)}, {"degree_bound", kb.degree_bound}};
  }
  if (cmd == "decompose") return to_json(decompose(poly_input(job, "f")));
  if (cmd == "member") {
    auto psi = membership(poly_input(job, "h"), poly_input(job, "f"));
    if (!psi) throw Error(ErrorCode::NotMember, "h is not a polynomial in p");
    return {{"psi", to_text(*psi)}};
  }
  if (cmd == "commute") {
    const Derivation first = has_field(job) ? field_input(job) : jacobian_derivation(poly_input(job, "g"));
    return {{"commutes", commute_check(first, jacobian_derivation(poly_input(job, "f")))}};
  }
  if (cmd == "criterion") {
    if (!has_field(job)) throw Error(ErrorCode::UsageError, "'criterion' requires --T.P/--T.Q");
    return to_json(criterion_check(field_input(job), poly_input(job, "f")));
  }
  if (cmd == "centralizer") {
    BivarPoly f = poly_input(job, "f");
    return to_json(centralizer_solve(f, resolve_bound(job, f)));
  }
  if (cmd == "basis-decompose") {
    if (!has_field(job)) throw Error(ErrorCode::UsageError, "'basis-decompose' requires --T.P/--T.Q");
    BivarPoly f = poly_input(job, "f");
    CentralizerResult c = centralizer_solve(f, resolve_bound(job, f));
    return to_json(basis_decompose(field_input(job), c, f));
  }
  if (cmd == "eigen") {
    BivarPoly f = poly_input(job, "f");
    const int bound = resolve_bound(job, f);
    json pairs = json::array();
    for (const auto& e : eigen_search(f, bound)) pairs.push_back(to_json(e));
    return {{"degree_bound", bound}, {"pairs", pairs}};
  }
  if (cmd == "pair") return to_json(commuting_pair_construct(poly_input(job, "f"), poly_input(job, "g")));
  if (cmd == "ode") {
    Derivation d = field_or_jacobian(job);
    std::optional<int> bound;
    if (job.degree_bound) {
      auto g = potential(d);
      bound = resolve_bound(job, g ? *g : BivarPoly());
    }
    return to_json(ode_export(d, bound));
  }
  throw Error(ErrorCode::UsageError, "unknown command '" + cmd + "'");
}

std::string render_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  if (v.is_object() && v.contains("P") && v.contains("Q")) {
    return "P = " + v["P"].get<std::string>() + ", Q = " + v["Q"].get<std::string>();
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [k, inner] : v.items()) {
      if (!out.empty()) out += ", ";
      out += k + " = " + render_value(inner);
    }
    return out;
  }
  return v.dump();
}

std::string render_text(const json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_array()) {
      if (value.empty()) out += key + ": none\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += key + "[" + std::to_string(i) + "]: " + render_value(value[i]) + "\n";
      }
    } else {
      out += key + ": " + render_value(value) + "\n";
    }
  }
  return out;
}

struct HelpRequested {
  std::string text;
};

RunResult error_result(ErrorCode code, const std::string& message, OutputFormat format) {
  RunResult r;
  r.exit_code = exit_code(code);
  if (format == OutputFormat::Json) {
    json j{{"error", std::string(error_name(code))}, {"message", message}};
    r.out = j.dump() + "\n";
  } else {
    r.err = "error: " + std::string(error_name(code)) + ": " + message + "\n";
  }
  return r;
}

}  // namespace

JobSpec parse_job(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations with Jacobian derivations of K[x, y]", "jacder"};
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1);

  std::map<std::string, std::string> raw;
  std::optional<int> bound;
  bool as_json = false;
  const std::map<std::string_view, std::string> about{
      {"jac", "Jacobian derivation D_f"},
      {"apply", "apply T (or D_f) to h"},
      {"bracket", "[T, D_f] or [D_f, D_g]"},
      {"div", "divergence of T (or D_f)"},
      {"potential", "g with D_g = T"},
      {"kernel", "generator p of Ker D_f"},
      {"decompose", "f = theta(p) with p closed"},
      {"member", "psi with h = psi(p), p given by -f"},
      {"commute", "whether T (or D_g) commutes with D_f"},
      {"criterion", "commutation criterion report for T and f"},
      {"centralizer", "rank and generators of the centralizer of D_f"},
      {"basis-decompose", "T = q(p) T0 + delta(p) D_p"},
      {"eigen", "rational eigenpairs D_f(g) = lambda g"},
      {"pair", "f D_g - g D_f for D_f(g) = g"},
      {"ode", "ODE system of T (or D_f) with first integrals"}};
  for (auto name : kCommands) {
    CLI::App* sub = app.add_subcommand(std::string(name), about.at(name));
    sub->set_help_flag("--help", "Print help and exit");
    for (const char* key : {"f", "g", "h"}) {
      sub->add_option_function<std::string>(
          std::string("-") + key, [&raw, key](const std::string& v) { raw[key] = v; },
          std::string("polynomial ") + key);
    }
    for (const char* key : {"T.P", "T.Q"}) {
      sub->add_option_function<std::string>(
          std::string("--") + key, [&raw, key](const std::string& v) { raw[key] = v; },
          std::string("component ") + key + " of the derivation T");
    }
    sub->add_option_function<int>("--bound", [&bound](int v) { bound = v; }, "degree bound");
    sub->add_flag("--json", as_json, "emit JSON");
  }

  // The short spellings -T.P / -T.Q are accepted alongside --T.P / --T.Q.
  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    if (a == "-T.P" || a == "-T.Q") argv.push_back("-" + a);
    else if (a.rfind("-T.P=", 0) == 0 || a.rfind("-T.Q=", 0) == 0) argv.push_back("-" + a);
    else argv.push_back(a);
  }
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::UsageError, e.what());
  }

  JobSpec job;
  job.command = app.get_subcommands().front()->get_name();
  for (auto& [k, v] : raw) job.inputs[k] = resolve_value(v);
  job.degree_bound = bound;
  job.format = as_json ? OutputFormat::Json : OutputFormat::Text;
  return job;
}

RunResult run(const JobSpec& job) {
  try {
    json result = dispatch(job);
    RunResult r;
    r.out = job.format == OutputFormat::Json ? result.dump() + "\n" : render_text(result);
    return r;
  } catch (const Error& e) {
    return error_result(e.code(), e.what(), job.format);
  }
}

RunResult run_cli(const std::vector<std::string>& args) {
  const bool wants_json = std::find(args.begin(), args.end(), "--json") != args.end();
  JobSpec job;
  try {
    job = parse_job(args);
  } catch (const HelpRequested& h) {
    return {0, h.text, ""};
  } catch (const Error& e) {
    return error_result(e.code(), e.what(), wants_json ? OutputFormat::Json : OutputFormat::Text);
  }
  return run(job);
}

}  // namespace jacder::cli
