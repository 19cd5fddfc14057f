#include "ghc/cli/run.hpp"

#include <cstdlib>
#include <set>

#include "ghc/error.hpp"
#include "ghc/fk/fk.hpp"
#include "ghc/kernels/census.hpp"
#include "ghc/mathieu/mathieu.hpp"
#include "ghc/principal/principal.hpp"
#include "ghc/rootsys/closed_sets.hpp"
#include "ghc/shadow/shadow.hpp"

namespace ghc::cli {

namespace {

using exact::QVector;
using exact::Rational;
using rootsys::RootSet;
using rootsys::RootSystem;

constexpr int kCensusMaxRank = 4;

// ---- parameter access -------------------------------------------------------

class Params {
public:
  Params(const Json &p, std::set<std::string> allowed) : p_(p) {
    if (!p_.is_object()) throw InputError("parameters must be a JSON object");
    for (const auto &[key, value] : p_.items()) {
      if (!allowed.contains(key)) throw InputError("unknown parameter '" + key + "'");
    }
  }

  bool has(const std::string &key) const { return p_.contains(key) && !p_.at(key).is_null(); }

  const Json &at(const std::string &key) const {
    if (!has(key)) throw InputError("missing parameter '" + key + "'");
    return p_.at(key);
  }

  std::string str(const std::string &key) const {
    const auto &v = at(key);
    if (!v.is_string()) throw InputError("parameter '" + key + "' must be a string");
    return v.get<std::string>();
  }

  std::int64_t integer(const std::string &key) const {
    const auto &v = at(key);
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) {
      auto q = Rational::parse(v.get<std::string>());
      if (q.is_integer()) return q.num();
    }
    throw InputError("parameter '" + key + "' must be an integer");
  }

  std::int64_t integer_or(const std::string &key, std::int64_t fallback) const {
    return has(key) ? integer(key) : fallback;
  }

  bool boolean_or(const std::string &key, bool fallback) const {
    if (!has(key)) return fallback;
    const auto &v = at(key);
    if (!v.is_boolean()) throw InputError("parameter '" + key + "' must be a boolean");
    return v.get<bool>();
  }

  Rational rational(const std::string &key) const { return to_rational(at(key), key); }

  std::vector<Rational> rationals(const std::string &key) const {
    const auto &v = at(key);
    std::vector<Rational> out;
    if (v.is_string()) {
      for (const auto &x : QVector::parse_list(v.get<std::string>())) out.push_back(x);
    } else if (v.is_array()) {
      for (const auto &x : v) out.push_back(to_rational(x, key));
    } else {
      throw InputError("parameter '" + key + "' must be a list of rationals");
    }
    return out;
  }

  std::vector<std::int64_t> indices(const std::string &key) const {
    const auto &v = at(key);
    std::vector<std::int64_t> out;
    if (v.is_string()) {
      const auto text = v.get<std::string>();
      if (text.empty()) return out;
      for (const auto &x : QVector::parse_list(text)) {
        if (!x.is_integer()) throw InputError("parameter '" + key + "' must list root indices");
        out.push_back(x.num());
      }
    } else if (v.is_array()) {
      for (const auto &x : v) {
        if (!x.is_number_integer()) throw InputError("parameter '" + key + "' must list root indices");
        out.push_back(x.get<std::int64_t>());
      }
    } else {
      throw InputError("parameter '" + key + "' must be a list of root indices");
    }
    return out;
  }

private:
  static Rational to_rational(const Json &x, const std::string &key) {
    if (x.is_number_integer()) return Rational(x.get<std::int64_t>());
    if (x.is_string()) return Rational::parse(x.get<std::string>());
    throw InputError("parameter '" + key + "' entries must be integers or rational strings");
  }

  const Json &p_;
};

// ---- shared conversions ----------------------------------------------------

RootSystem root_system(const Params &p) {
  const auto rank = p.integer("rank");
  if (rank < 0 || rank > 1000) throw InputError("rank out of range");
  return RootSystem::build(rootsys::parse_series(p.str("series")), static_cast<int>(rank),
                           {.max_rank = max_rank_from_env()});
}

RootSet subset(const RootSystem &rs, const Params &p, const std::string &key = "subalgebra") {
  RootSet s(rs.size());
  for (auto i : p.indices(key)) {
    if (i < 0 || static_cast<std::size_t>(i) >= rs.size()) {
      throw InputError("root index " + std::to_string(i) + " out of range for " + rs.name());
    }
    s.insert(static_cast<std::size_t>(i));
  }
  return s;
}

Json index_list(const RootSet &s) {
  Json out = Json::array();
  for (auto i : s.indices()) out.push_back(i);
  return out;
}

Json rational_list(const std::vector<Rational> &xs) {
  Json out = Json::array();
  for (const auto &x : xs) out.push_back(x.str());
  return out;
}

Json vector_json(const QVector &v) { return rational_list({v.begin(), v.end()}); }

QVector weight(const RootSystem &rs, const Params &p, const std::string &key) {
  QVector v(p.rationals(key));
  if (v.dim() != rs.ambient_dim()) {
    throw InputError("parameter '" + key + "' needs " + std::to_string(rs.ambient_dim()) + " coordinates for " + rs.name());
  }
  return v;
}

Json witness_json(const std::optional<exact::ConeWitness> &w, const RootSet &gens_a, const RootSet &gens_b) {
  if (!w) return nullptr;
  return Json{{"point", vector_json(w->point)},
              {"generators_a", index_list(gens_a)},
              {"coefficients_a", rational_list(w->coefficients_a)},
              {"generators_b", index_list(gens_b)},
              {"coefficients_b", rational_list(w->coefficients_b)}};
}

Json levi_json(const fk::LeviDecomposition &l) {
  return Json{{"k_roots", index_list(l.k_roots)}, {"n_roots", index_list(l.n_roots)}};
}

Json type_json(const fk::SimpleType &t) {
  return Json{{"series", std::string(1, rootsys::series_char(t.series))}, {"rank", t.rank}};
}

// ---- commands ----------------------------------------------------------------

Json cmd_root_system(const Json &params) {
  Params p(params, {"series", "rank"});
  auto rs = root_system(p);
  Json roots = Json::array();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    Json coeffs = Json::array();
    for (int c : rs.simple_coefficients(i)) coeffs.push_back(c);
    roots.push_back(Json{{"index", i}, {"vector", vector_json(rs.root(i))}, {"simple_coefficients", coeffs},
                         {"height", rootsys::height(rs, rs.root(i))}});
  }
  return Json{{"name", rs.name()},
              {"rank", rs.rank()},
              {"ambient_dim", rs.ambient_dim()},
              {"num_roots", rs.size()},
              {"num_positive", rs.num_positive()},
              {"cartan_matrix", rs.cartan_matrix()},
              {"roots", roots}};
}

Json cmd_shadow(const Json &params) {
  Params p(params, {"series", "rank", "subalgebra"});
  auto rs = root_system(p);
  auto sd = shadow::shadow(rs, subset(rs, p));
  return Json{{"I", index_list(sd.infinite)},
              {"F", index_list(sd.finite)},
              {"plus", index_list(sd.plus)},
              {"minus", index_list(sd.minus)},
              {"gamma", index_list(sd.gamma)},
              {"p_M", index_list(shadow::parabolic_pM(sd))},
              {"fernando_fk", index_list(shadow::fernando_fk(sd))}};
}

Json fk_verdict_json(const fk::FiniteTypeVerdict &v) {
  return Json{{"finite_type", v.finite_type},
              {"witness", witness_json(v.witness, v.singular_g_mod_l, v.singular_n)},
              {"singular_weights_g_mod_l", index_list(v.singular_g_mod_l)},
              {"singular_weights_n", index_list(v.singular_n)},
              {"levi", levi_json(v.levi)}};
}

Json cmd_fk_test(const Json &params) {
  Params p(params, {"series", "rank", "subalgebra"});
  auto rs = root_system(p);
  return fk_verdict_json(fk::cone_finite_type(rs, subset(rs, p)));
}

Json cmd_solvable_test(const Json &params) {
  Params p(params, {"series", "rank", "subalgebra"});
  auto rs = root_system(p);
  auto v = fk::solvable_finite_type(rs, subset(rs, p));
  Json comps = Json::array();
  for (const auto &t : v.levi_components) comps.push_back(type_json(t));
  return Json{{"finite_type", v.finite_type},
              {"is_parabolic_nilradical", v.is_parabolic_nilradical},
              {"levi_roots", index_list(v.levi_roots)},
              {"levi_components", comps}};
}

Json cmd_primal_test(const Json &params) {
  Params p(params, {"series", "rank", "subalgebra", "toral"});
  auto rs = root_system(p);
  auto k = subset(rs, p);
  std::vector<QVector> toral;
  const std::string mode = p.has("toral") && p.at("toral").is_string() ? p.str("toral") : "";
  if (!p.has("toral") || mode == "full") {
    for (std::size_t i = 0; i < rs.ambient_dim(); ++i) {
      QVector e(rs.ambient_dim());
      e[i] = Rational(1);
      toral.push_back(e);
    }
  } else if (mode == "coroots") {
    for (auto i : k.indices()) toral.push_back(rs.root(i));
  } else if (p.at("toral").is_array()) {
    for (const auto &row : p.at("toral")) {
      const Json wrapped{{"v", row}};
      Params holder(wrapped, {"v"});
      QVector v(holder.rationals("v"));
      if (v.dim() != rs.ambient_dim()) throw InputError("toral vectors need " + std::to_string(rs.ambient_dim()) + " coordinates");
      toral.push_back(v);
    }
  } else {
    throw InputError("toral must be \"full\", \"coroots\" or a list of vectors");
  }
  auto r = fk::is_primal(rs, k, toral);
  return Json{{"primal", r.primal},
              {"centralizer_torus_dim", r.centralizer_torus_dim},
              {"center_dim", r.center_dim},
              {"centralizer_roots", index_list(r.centralizer_roots)}};
}

Json cmd_mathieu(const Json &params) {
  Params p(params, {"series", "rank", "lambda", "eta"});
  const auto series = p.has("series") ? rootsys::parse_series(p.str("series")) : rootsys::Series::C;
  QVector x(p.rationals("lambda"));
  if (series == rootsys::Series::A) {
    const auto n = static_cast<std::int64_t>(x.dim()) - 1;
    if (p.has("rank") && p.integer("rank") != n) throw InputError("lambda for sl(n+1) needs rank+1 coordinates");
    if (p.has("eta")) throw InputError("eta applies to series C only");
    auto d = mathieu::sl_degree(x);
    Json deg = d.degree ? Json(*d.degree) : Json(nullptr);
    return Json{{"regular_integral", d.regular_integral},
                {"degree", deg},
                {"companion", Json{{"series", "A"}, {"rank", n - 1}}}};
  }
  if (series != rootsys::Series::C) throw UnsupportedTypeError("mathieu supports series C (and partial A) only");
  if (p.has("rank") && p.integer("rank") != static_cast<std::int64_t>(x.dim())) {
    throw InputError("lambda needs rank coordinates");
  }
  Json out{{"bounded", mathieu::sp_bounded(x)}};
  if (mathieu::sp_bounded(x)) {
    auto d = mathieu::describe_family(x);
    out["degree"] = mathieu::sp_degree(x);
    out["class_rep"] = vector_json(d.representative);
    out["class_degree"] = d.degree;
    out["companion"] = type_json(d.companion);
  } else {
    out["degree"] = nullptr;
    out["class_rep"] = nullptr;
    out["companion"] = Json{{"series", "D"}, {"rank", x.dim()}};
  }
  if (p.has("eta")) {
    auto eta = p.rationals("eta");
    if (eta.size() != x.dim()) throw InputError("eta needs one entry per coordinate");
    out["fiber_irreducible"] = mathieu::sp_fiber_irreducible(eta);
  }
  return out;
}

Json cmd_ktype_series(const Json &params) {
  Params p(params, {"series", "rank", "lambda", "lambda_h", "max_m"});
  auto rs = root_system(p);
  auto pd = principal::principal_data(rs);
  if (p.has("lambda") == p.has("lambda_h")) throw InputError("give exactly one of lambda and lambda_h");
  const QVector lam = p.has("lambda") ? weight(rs, p, "lambda")
                                      : principal::nonintegral_weight_with_h(pd, p.rational("lambda_h"));
  const auto max_m = p.integer_or("max_m", 20);
  if (max_m < 0 || max_m > 100000) throw InputError("max_m out of range");
  auto series = kernels::ktype_series_parallel(pd, lam, max_m);
  Json entries = Json::object();
  for (auto [m, v] : series) entries[std::to_string(m)] = v;
  const Rational lh = principal::lambda_h(pd, lam);
  const Rational shift = lh - Rational(2);
  Json minimal = shift.is_integer() && shift.sign() >= 0 ? Json(principal::minimal_ktype(pd, lam)) : Json(nullptr);
  return Json{{"lambda", vector_json(lam)},
              {"lambda_h", lh.str()},
              {"series", entries},
              {"minimal_ktype", minimal},
              {"vanishing_degree", principal::vanishing_degree(pd)}};
}

Json cmd_exponents(const Json &params) {
  Params p(params, {"series", "rank"});
  auto rs = root_system(p);
  return Json{{"exponents", principal::exponents(rs)}};
}

Json cmd_census(const Json &params) {
  Params p(params, {"series", "rank", "dedup"});
  auto rs = root_system(p);
  kernels::CensusOptions opts{.dedup = p.boolean_or("dedup", false), .max_rank = kCensusMaxRank};
  auto rows = kernels::census_parallel(rs, opts);
  Json out = Json::array();
  for (const auto &r : rows) {
    out.push_back(Json{{"subalgebra", index_list(r.subalgebra)},
                       {"levi", levi_json(r.levi)},
                       {"finite_type", r.finite_type},
                       {"witness", witness_json(r.witness, r.singular_g_mod_l, r.singular_n)}});
  }
  return Json{{"name", rs.name()}, {"dedup", opts.dedup}, {"count", rows.size()}, {"rows", out}};
}

Response failure(int code, const std::string &kind, const std::string &message) {
  return {code, Json{{"error", Json{{"kind", kind}, {"message", message}}}}, message};
}

} // namespace

int max_rank_from_env() {
  const char *env = std::getenv("GHC_MAX_RANK");
  if (env == nullptr || *env == '\0') return 8;
  char *end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 64) throw InputError("GHC_MAX_RANK must be an integer in 1..64");
  return static_cast<int>(v);
}

std::string render(const Json &doc) { return doc.dump(2) + "\n"; }

Response run(const Json &request) {
  try {
    if (!request.is_object() || !request.contains("command") || !request.at("command").is_string()) {
      throw InputError("request must be an object with a string 'command'");
    }
    for (const auto &[key, value] : request.items()) {
      if (key != "command" && key != "parameters") throw InputError("unknown request field '" + key + "'");
    }
    const auto command = request.at("command").get<std::string>();
    const Json params = request.contains("parameters") ? request.at("parameters") : Json::object();
    Json body;
    if (command == "root-system") body = cmd_root_system(params);
    else if (command == "shadow") body = cmd_shadow(params);
    else if (command == "fk-test") body = cmd_fk_test(params);
    else if (command == "solvable-test") body = cmd_solvable_test(params);
    else if (command == "primal-test") body = cmd_primal_test(params);
    else if (command == "mathieu") body = cmd_mathieu(params);
    else if (command == "ktype-series") body = cmd_ktype_series(params);
    else if (command == "exponents") body = cmd_exponents(params);
    else if (command == "census") body = cmd_census(params);
    else throw InputError("unknown command '" + command + "'");
    return {kOk, std::move(body), {}};
  } catch (const UnsupportedTypeError &e) {
    return failure(kUnsupported, "unsupported_type", e.what());
  } catch (const InputError &e) {
    return failure(kInputError, "input", e.what());
  } catch (const std::overflow_error &e) {
    return failure(kInputError, "overflow", e.what());
  } catch (const Json::exception &e) {
    return failure(kInputError, "input", e.what());
  }
}

Response run_text(const std::string &text) {
  Json request;
  try {
    request = Json::parse(text);
  } catch (const Json::parse_error &e) {
    return failure(kInputError, "malformed_json", e.what());
  }
  return run(request);
}

} // namespace ghc::cli
