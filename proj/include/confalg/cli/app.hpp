#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "confalg/autgroup/covering.hpp"
#include "confalg/autgroup/triangular.hpp"
#include "confalg/configspace/charts.hpp"
#include "confalg/configspace/mobius.hpp"
#include "confalg/configspace/roots.hpp"
#include "confalg/configspace/vieta.hpp"
#include "confalg/elliptic/quartic.hpp"
#include "confalg/errors.hpp"
#include "confalg/exactalg/resultant.hpp"
#include "confalg/io/json.hpp"
#include "confalg/verify/suites.hpp"

namespace confalg::cli {

using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kDomainError = 3 };

inline const std::vector<std::string>& compute_commands() {
  static const std::vector<std::string> cmds{"discriminant", "vieta",       "roots",         "apply-aut",   "compose-aut",
                                             "aut-order",    "tame-map",    "resolvent",     "tschirnhausen", "j-invariant",
                                             "mu12",         "preimages",   "h-n",           "sigma-iso",   "mobius"};
  return cmds;
}

struct Invocation {
  std::string command;
  std::string mode;  // "exact" or "float"; empty: from input, default exact
  int n = 0;
  double tol = 1e-9;
  std::uint64_t seed = 7;
  std::string suite;
  std::string in_file;
};

namespace detail {

inline void check_n(const Invocation& inv, int n) {
  if (inv.n != 0 && inv.n != n)
    throw InputError("--n " + std::to_string(inv.n) + " does not match the input size " + std::to_string(n));
}

template <Field F>
json config_out(const Configuration<F>& q) {
  return io::configuration_to_json(q);
}

/// Exact inputs may only use roots of unity that live in Q(i) or Q(sqrt -3).
template <Field F>
void require_root_of_unity(const F& zeta, int order, double tol) {
  if constexpr (is_exact_v<F>) {
    (void)tol;
    if (!(power(zeta, order) == from_int<F>(1)))
      throw DomainError("exact mode supports roots of unity of order <= 6 only; use --mode float");
  } else {
    require_12th_root(zeta, tol);
  }
}

template <Field F>
json compute(const Invocation& inv, const json& in) {
  const std::string& cmd = inv.command;
  const double tol = inv.tol;
  if (cmd == "discriminant") {
    if (in.contains("points")) {
      auto q = io::configuration_from_json<F>(in);
      check_n(inv, q.n());
      return {{"D", io::scalar_to_json(disc_config(q))}};
    }
    if (in.contains("z")) {
      CoeffPoint<F> z{io::scalars_from_json<F>(in.at("z"))};
      check_n(inv, z.n());
      if (z.n() < 1) throw InputError("empty coefficient vector");
      return {{"D", io::scalar_to_json(disc_coeffs(z))}};
    }
    const int n = in.value("n", inv.n);
    if (n < 2 || n > 6) throw InputError("symbolic discriminant supports 2 <= n <= 6");
    auto d = universal_discriminant<Rational>(n);
    return {{"n", n}, {"d_n", d.to_string()}, {"terms", d.num_terms()}};
  }
  if (cmd == "vieta") {
    auto q = io::configuration_from_json<F>(in);
    check_n(inv, q.n());
    return {{"z", io::scalars_to_json(vieta_map(q).z)}};
  }
  if (cmd == "apply-aut") {
    auto f = io::aut_from_json<F>(in.at("aut"), tol);
    auto q = io::configuration_from_json<F>(in);
    check_n(inv, q.n());
    return config_out(apply_aut(f, q, tol));
  }
  if (cmd == "compose-aut") {
    const std::string op = in.value("op", "compose");
    auto a = io::aut_from_json<F>(in.at("a"), tol);
    check_n(inv, a.n);
    if (op == "invert") return {{"op", op}, {"result", io::aut_to_json(invert(a))}};
    auto b = io::aut_from_json<F>(in.at("b"), tol);
    if (op == "compose") return {{"op", op}, {"result", io::aut_to_json(compose(a, b))}};
    if (op == "commutator") return {{"op", op}, {"result", io::aut_to_json(commutator(a, b))}};
    throw InputError("op must be compose, invert or commutator");
  }
  if (cmd == "aut-order") {
    auto f = io::aut_from_json<F>(in.at("aut"), tol);
    const int bound = in.value("bound", 24);
    auto m = aut_order(f, bound, tol);
    json out{{"bound", bound}, {"detected", m.has_value()}};
    out["order"] = m ? json(*m) : json(nullptr);
    return out;
  }
  if (cmd == "tame-map") {
    auto f = io::aut_from_json<F>(in.at("aut"), tol);
    auto q = io::configuration_from_json<F>(in);
    check_n(inv, q.n());
    if (f.space != AutSpace::Cn) throw DomainError("tame-map needs an automorphism of Cn");
    if (!in_aut_space(f, q, tol)) throw DomainError("configuration is not in Cn");
    auto t = tame_affine_map(f, q, tol);
    Configuration<F> img = q;
    for (auto& p : img.points) p = t(p);
    return {{"a", io::scalar_to_json(t.a)}, {"b", io::scalar_to_json(t.b)}, {"image", config_out(img)}};
  }
  if (cmd == "resolvent") {
    auto c = cubic_resolvent(io::quartic_from_json<F>(in));
    return {{"cubic", json::array({io::scalar_to_json(c.v1), io::scalar_to_json(c.v2), io::scalar_to_json(c.v3)})},
            {"discriminant", io::scalar_to_json(cubic_discriminant(c))}};
  }
  if (cmd == "tschirnhausen") {
    auto f = io::quartic_from_json<F>(in);
    json out = io::base_to_json(tschirnhausen(f));
    out["discriminant"] = io::scalar_to_json(quartic_discriminant(f));
    return out;
  }
  if (cmd == "j-invariant") {
    auto j = j_invariant(io::base_from_json<F>(in), tol);
    return {{"j", io::scalar_to_json(j.oracle)}, {"displayed_formula", io::scalar_to_json(j.displayed)}, {"sign", j.sign}};
  }
  if (cmd == "mu12") {
    const F zeta = io::scalar_from_json<F>(in.at("zeta"));
    require_root_of_unity(zeta, 12, tol);
    if (in.contains("u2")) return io::base_to_json(mu12_action_base(zeta, io::base_from_json<F>(in)));
    return io::quartic_to_json(mu12_action(zeta, io::quartic_from_json<F>(in)));
  }
  if (cmd == "h-n") {
    auto q = io::configuration_from_json<F>(in);
    check_n(inv, q.n());
    return {{"h", io::scalar_to_json(h_n(q, tol))}};
  }
  if (cmd == "sigma-iso") {
    const std::string map = in.value("map", "phi");
    if (map == "U") {
      auto z = io::scalars_from_json<F>(in.at("z"));
      if (z.size() != 2) throw InputError("U acts on (z1, z2)");
      auto [a, b] = involution_U(z[0], z[1]);
      return {{"z", json::array({io::scalar_to_json(a), io::scalar_to_json(b)})}};
    }
    if (map == "eta_inv") {
      EtaImage<F> e{Configuration<F>(io::scalars_from_json<F>(in.at("ratios")), true), io::scalar_from_json<F>(in.at("y"))};
      return config_out(eta_inv(e));
    }
    auto q = io::configuration_from_json<F>(in, true);
    if (map == "phi") return config_out(sigma_blc_phi(q, tol));
    if (map == "psi") return config_out(sigma_blc_psi(q, tol));
    if (map == "eta") {
      auto e = eta(q, tol);
      return {{"ratios", io::scalars_to_json(e.ratios.points)}, {"y", io::scalar_to_json(e.y)}};
    }
    if (map == "phi_tilde") return config_out(phi_tilde(q, tol));
    if (map == "phi_tilde_inv") return config_out(phi_tilde_inv(q));
    static const std::vector<std::pair<std::string, Involution>> invols{{"iota", Involution::Iota},
                                                                        {"tau_inv", Involution::TauInv},
                                                                        {"upsilon", Involution::Upsilon},
                                                                        {"sigma_prime", Involution::SigmaPrime},
                                                                        {"rho", Involution::Rho}};
    for (const auto& [name, w] : invols)
      if (map == name) return config_out(involution(q, w, tol));
    throw InputError("unknown map: " + map);
  }
  if (cmd == "mobius") {
    auto q = io::configuration_from_json<F>(in, true);
    auto sigma = io::perm_from_json(in.at("perm"));
    return config_out(mobius_action(sigma, q, std::min(tol, 1e-12)));
  }
  throw InputError("unknown subcommand: " + cmd);
}

/// Commands that are float by nature.
inline json compute_float_only(const Invocation& inv, const json& in) {
  if (inv.command == "roots") {
    std::vector<Complex> z = io::scalars_from_json<Complex>(in.at("z"));
    check_n(inv, static_cast<int>(z.size()));
    return io::configuration_to_json(roots_numeric(z, std::min(inv.tol, 1e-12)));
  }
  // preimages
  auto q = io::configuration_from_json<Complex>(in);
  check_n(inv, q.n());
  const Complex c = io::scalar_from_json<Complex>(in.value("c", json(1)));
  const int m = in.value("m", 1);
  auto r = covering_preimages(c, m, q, inv.tol);
  json pre = json::array();
  for (const auto& p : r.preimages) pre.push_back(io::scalars_to_json(p.points));
  return {{"N", r.degree}, {"omegas", io::scalars_to_json(r.omegas)}, {"preimages", pre}, {"max_residual", r.max_residual}};
}

inline json read_input(const Invocation& inv, std::istream& stdin_stream) {
  std::string text;
  if (!inv.in_file.empty()) {
    std::ifstream f(inv.in_file);
    if (!f) throw InputError("cannot open " + inv.in_file);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(stdin_stream), {});
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
  json j = json::parse(text);
  if (!j.is_object()) throw InputError("input must be a JSON object");
  return j;
}

inline json run_compute(const Invocation& inv, const json& in) {
  if (inv.command == "roots" || inv.command == "preimages") return compute_float_only(inv, in);
  std::string mode = inv.mode.empty() ? in.value("mode", "exact") : inv.mode;
  if (mode == "float") return compute<Complex>(inv, in);
  if (mode != "exact") throw InputError("mode must be exact or float");
  const std::string field = in.value("field", "Q(i)");
  if (field == "Q") return compute<Rational>(inv, in);
  if (field == "Q(i)") return compute<Gaussian>(inv, in);
  if (field == "Q(sqrt-3)") return compute<Eisenstein>(inv, in);
  throw InputError("unknown field " + field + " (expected Q, Q(i) or Q(sqrt-3))");
}

inline json run_verify(const Invocation& inv, bool& all_ok) {
  verify::Options opts{inv.seed, inv.tol, inv.n};
  const std::string name = inv.suite.empty() ? "all" : inv.suite;
  auto results = verify::run_suite(name, opts);
  json suites = json::array();
  int passed = 0, failed = 0;
  for (const auto& res : results) {
    json rep = io::report_to_json(res.checks);
    passed += rep["passed"].get<int>();
    failed += rep["failed"].get<int>();
    rep["suite"] = res.suite;
    suites.push_back(rep);
  }
  all_ok = failed == 0;
  return {{"suite", name}, {"seed", inv.seed}, {"tol", inv.tol}, {"n", inv.n},
          {"suites", suites}, {"passed", passed},  {"failed", failed}, {"status", all_ok ? "pass" : "fail"}};
}

inline json error_body(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace detail

/// Full command-line entry point; returns the process exit code.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out) {
  CLI::App app{"Exact computations and identity checks on configuration spaces"};
  app.require_subcommand(1);
  Invocation inv;
  auto add_common = [&inv](CLI::App* sub) {
    sub->add_option("--mode", inv.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--n", inv.n, "number of points");
    sub->add_option("--tol", inv.tol, "float tolerance");
    sub->add_option("--seed", inv.seed, "seed for randomized suites");
    sub->add_option("--in", inv.in_file, "input JSON file (default: standard input)");
  };
  for (const auto& name : compute_commands()) add_common(app.add_subcommand(name, "compute " + name));
  auto* verify_cmd = app.add_subcommand("verify", "run an identity-verification suite");
  add_common(verify_cmd);
  verify_cmd->add_option("suite,--suite", inv.suite, "suite name")->check(CLI::IsMember(verify::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << detail::error_body("InputError", e.what()).dump(2) << "\n";
    return kInputError;
  }
  for (auto* sub : app.get_subcommands()) inv.command = sub->get_name();

  try {
    if (inv.command == "verify") {
      bool ok = false;
      json rep = detail::run_verify(inv, ok);
      out << rep.dump(2) << "\n";
      return ok ? kOk : kVerifyFailed;
    }
    json input = detail::read_input(inv, in);
    out << detail::run_compute(inv, input).dump(2) << "\n";
    return kOk;
  } catch (const DomainError& e) {
    out << detail::error_body("DomainError", e.what()).dump(2) << "\n";
    return kDomainError;
  } catch (const InputError& e) {
    out << detail::error_body("InputError", e.what()).dump(2) << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    out << detail::error_body("InputError", e.what()).dump(2) << "\n";
    return kInputError;
  }
}

}  // namespace confalg::cli
