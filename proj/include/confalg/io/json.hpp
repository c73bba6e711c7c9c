#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "confalg/autgroup/triangular.hpp"
#include "confalg/configspace/configuration.hpp"
#include "confalg/coxeter/perm.hpp"
#include "confalg/derivations/derivation.hpp"
#include "confalg/elliptic/quartic.hpp"
#include "confalg/errors.hpp"
#include "confalg/report.hpp"

namespace confalg::io {

using nlohmann::json;

/// Shortest round-trip text for a double.
inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <Field F>
F scalar_from_json(const json& j) {
  if constexpr (is_exact_v<F>) {
    if (j.is_number_integer()) return from_int<F>(j.get<long>());
    if (j.is_string()) return field_traits<F>::parse(j.get<std::string>());
    throw InputError("exact scalar must be an integer or a string, got " + j.dump());
  } else {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
      return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_string()) return {Rational::parse(j.get<std::string>()).to_double(), 0.0};
    throw InputError("float scalar must be a number or [re, im], got " + j.dump());
  }
}

template <Field F>
json scalar_to_json(const F& x) {
  if constexpr (is_exact_v<F>) {
    return field_traits<F>::to_string(x);
  } else {
    return json::array({x.real(), x.imag()});
  }
}

template <Field F>
std::vector<F> scalars_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of scalars");
  std::vector<F> out;
  for (const auto& x : j) out.push_back(scalar_from_json<F>(x));
  return out;
}

template <Field F>
json scalars_to_json(const std::vector<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

template <Field F>
Configuration<F> configuration_from_json(const json& j, bool ordered = false) {
  if (!j.contains("points")) throw InputError("missing \"points\"");
  return Configuration<F>(scalars_from_json<F>(j.at("points")), j.value("ordered", ordered));
}

template <Field F>
json configuration_to_json(const Configuration<F>& q) {
  json out{{"mode", is_exact_v<F> ? "exact" : "float"},
           {"field", std::string(field_traits<F>::tag)},
           {"points", scalars_to_json(q.points)}};
  if (q.ordered) out["ordered"] = true;
  return out;
}

template <Field F>
BalancedFunction<F> balanced_from_json(int n, const json& j) {
  BalancedFunction<F> b(n);
  if (j.is_null()) return b;
  if (!j.is_array()) throw InputError("\"b\" must be an array of terms");
  for (const auto& term : j) {
    const F c = scalar_from_json<F>(term.at("c"));
    const int m = term.value("m", 0);
    if (term.contains("S")) {
      b = b + BalancedFunction<F>::s_term(n, c, term.at("S").get<int>(), m);
    } else {
      auto e = term.value("w_exp", std::vector<unsigned>(n - 1, 0));
      b = b + BalancedFunction<F>::w_monomial(n, c, e, m);
    }
  }
  return b;
}

template <Field F>
json balanced_to_json(const BalancedFunction<F>& b) {
  json out = json::array();
  for (const auto& t : b.terms()) {
    json term{{"c", scalar_to_json(t.c)}, {"m", t.m}};
    if (t.is_s) term["S"] = t.s_power;
    else term["w_exp"] = t.w_exp;
    out.push_back(term);
  }
  return out;
}

template <Field F>
TriangularAut<F> aut_from_json(const json& j, double tol) {
  const int n = j.at("n").get<int>();
  return make_aut(parse_aut_space(j.value("space", "Cn")), n, scalar_from_json<F>(j.value("s", json(1))),
                  scalar_from_json<F>(j.value("t", json(1))), j.value("k", 0),
                  balanced_from_json<F>(n, j.value("b", json::array())), tol);
}

template <Field F>
json aut_to_json(const TriangularAut<F>& f) {
  return {{"space", std::string(aut_space_name(f.space))},
          {"n", f.n},
          {"s", scalar_to_json(f.s)},
          {"t", scalar_to_json(f.t)},
          {"k", f.k},
          {"b", balanced_to_json(f.b)}};
}

template <Field F>
Quartic<F> quartic_from_json(const json& j) {
  return {scalar_from_json<F>(j.at("z2")), scalar_from_json<F>(j.at("z3")), scalar_from_json<F>(j.at("z4"))};
}

template <Field F>
json quartic_to_json(const Quartic<F>& f) {
  return {{"z2", scalar_to_json(f.z2)}, {"z3", scalar_to_json(f.z3)}, {"z4", scalar_to_json(f.z4)}};
}

template <Field F>
BasePoint<F> base_from_json(const json& j) {
  return {scalar_from_json<F>(j.at("u2")), scalar_from_json<F>(j.at("u3"))};
}

template <Field F>
json base_to_json(const BasePoint<F>& p) {
  return {{"u2", scalar_to_json(p.u2)}, {"u3", scalar_to_json(p.u3)}};
}

/// Polynomials as {"vars": [...], "terms": [{"c": ..., "exp": [...]}]}.
template <Field F>
json poly_to_json(const MultiPoly<F>& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"c", scalar_to_json(it->second)}, {"exp", it->first}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

template <Field F>
MultiPoly<F> poly_from_json(const json& j) {
  MultiPoly<F> p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) p.add_term(t.at("exp").get<std::vector<unsigned>>(), scalar_from_json<F>(t.at("c")));
  return p;
}

template <Field F>
json derivation_to_json(const Derivation<F>& d) {
  json images = json::object();
  for (const auto& v : d.vars()) images[v] = poly_to_json(d.image(v));
  return {{"vars", d.vars()}, {"images", images}};
}

template <Field F>
Derivation<F> derivation_from_json(const json& j) {
  std::map<std::string, MultiPoly<F>> images;
  for (const auto& [v, p] : j.at("images").items()) images.emplace(v, poly_from_json<F>(p));
  return Derivation<F>(j.at("vars").get<std::vector<std::string>>(), std::move(images));
}

inline Perm perm_from_json(const json& j) { return Perm::from_images(j.get<std::vector<int>>()); }
inline json perm_to_json(const Perm& p) { return p.images(); }

inline json signed_perm_to_json(const SignedPerm& p) {
  return {{"perm", p.perm().images()}, {"signs", p.signs()}};
}

inline json report_to_json(const Report& r) {
  json checks = json::array();
  int failed = 0;
  for (const auto& c : r) {
    checks.push_back({{"name", c.name}, {"anchor", c.anchor}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    if (!c.passed) ++failed;
  }
  return {{"checks", checks},
          {"passed", static_cast<int>(r.size()) - failed},
          {"failed", failed},
          {"status", failed ? "fail" : "pass"}};
}

}  // namespace confalg::io
