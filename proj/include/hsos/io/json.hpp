#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsos/core/parse.hpp"
#include "hsos/groebner/ideal_ops.hpp"
#include "hsos/hermitian/inertia.hpp"
#include "hsos/koszul/koszul.hpp"
#include "hsos/sos/bounds.hpp"
#include "hsos/sos/search.hpp"
#include "hsos/sos/verify.hpp"

namespace hsos {

using Json = nlohmann::ordered_json;

inline constexpr const char* kIdealSchema = "hsos.ideal/1";
inline constexpr const char* kBiFormSchema = "hsos.biform/1";
inline constexpr const char* kKoszulSchema = "hsos.koszul/1";
inline constexpr const char* kReportSchema = "hsos.sos-report/1";
inline constexpr const char* kSearchSchema = "hsos.search/1";

/// Malformed JSON input: wrong shape, missing fields or bad values.
class JsonInputError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void expect_schema(const Json& j, const char* schema) {
  if (!j.is_object()) throw JsonInputError("expected a JSON object");
  if (!j.contains("schema") || !j["schema"].is_string() || j["schema"].get<std::string>() != schema) {
    throw JsonInputError(std::string("expected \"schema\": \"") + schema + "\"");
  }
}

template <class T>
T field(const Json& j, const char* name) {
  if (!j.contains(name)) throw JsonInputError(std::string("missing field \"") + name + "\"");
  try {
    return j[name].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw JsonInputError(std::string("field \"") + name + "\" has the wrong type");
  }
}

inline std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

inline Monomial monomial_from_text(const std::string& text, const RingContext& ring) {
  Polynomial p = parse_polynomial(text, ring);
  if (p.terms().size() != 1 || !p.terms().begin()->second.is_one()) {
    throw JsonInputError("\"" + text + "\" is not a monomial");
  }
  return p.terms().begin()->first;
}

}  // namespace detail

inline Json ring_to_json(const RingContext& ring) { return Json{{"vars", ring.names()}}; }

inline RingContext ring_from_json(const Json& j) {
  if (!j.is_object()) throw JsonInputError("\"ring\" must be an object");
  auto vars = detail::field<std::vector<std::string>>(j, "vars");
  return RingContext(vars);
}

inline Json ideal_to_json(const Ideal& ideal) {
  return Json{{"schema", kIdealSchema},
              {"ring", ring_to_json(ideal.ring())},
              {"generators", detail::texts(ideal.generators())}};
}

inline Ideal ideal_from_json(const Json& j) {
  detail::expect_schema(j, kIdealSchema);
  RingContext ring = ring_from_json(detail::field<Json>(j, "ring"));
  return Ideal::parse(ring, detail::field<std::vector<std::string>>(j, "generators"));
}

inline Json biform_to_json(const BiForm& r) {
  Json terms = Json::array();
  for (const auto& [key, c] : r.stored()) {
    terms.push_back(Json{{"a", key.first.str(r.ring())}, {"b", key.second.str(r.ring())}, {"c", c.str()}});
  }
  return Json{{"schema", kBiFormSchema}, {"ring", ring_to_json(r.ring())}, {"m", r.degree()}, {"terms", terms}};
}

/// Terms list c_{a,b}; each unordered pair may appear once, or twice as
/// consistent mirrors c_{b,a} = conj(c_{a,b}). Diagonal entries must be real.
inline BiForm biform_from_json(const Json& j) {
  detail::expect_schema(j, kBiFormSchema);
  RingContext ring = ring_from_json(detail::field<Json>(j, "ring"));
  auto m = detail::field<unsigned>(j, "m");
  BiForm out(ring, m);
  std::map<BiForm::Key, GaussRational> seen;
  for (const auto& t : detail::field<Json>(j, "terms")) {
    Monomial a = detail::monomial_from_text(detail::field<std::string>(t, "a"), ring);
    Monomial b = detail::monomial_from_text(detail::field<std::string>(t, "b"), ring);
    Polynomial cp = parse_polynomial(detail::field<std::string>(t, "c"), ring);
    if (!cp.is_zero() && !cp.is_constant()) throw JsonInputError("coefficient is not a constant");
    GaussRational c = cp.coefficient(Monomial(ring.n()));
    if (seen.count({a, b})) throw JsonInputError("duplicate term for (" + t["a"].dump() + ", " + t["b"].dump() + ")");
    auto mirror = seen.find({b, a});
    if (mirror != seen.end()) {
      if (mirror->second != c.conj()) throw JsonInputError("mirror coefficients are not conjugate");
      seen.emplace(BiForm::Key{a, b}, c);
      continue;
    }
    seen.emplace(BiForm::Key{a, b}, c);
    out.add(a, b, c);
  }
  return out;
}

inline Json inertia_to_json(const Inertia& in) {
  return Json{{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}};
}

inline Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

inline Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Json psd_to_json(const PsdCertificate& cert) {
  Json j{{"psd", cert.psd}};
  if (cert.psd) {
    j["diagonal"] = rationals_to_json(cert.diagonal);
    j["transform"] = matrix_to_json(cert.transform);
  } else {
    j["witness"] = vector_to_json(cert.witness);
    j["witness_value"] = to_string(cert.witness_value);
    j["principal_minor"] = cert.principal_minor;
  }
  return j;
}

inline Json decomposition_to_json(const HoloDecomposition& d) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < d.forms.size(); ++k) {
    terms.push_back(Json{{"weight", to_string(d.weights[k])}, {"form", d.forms[k].str()}});
  }
  return Json{{"positive", d.positive()}, {"negative", d.negative()}, {"terms", terms}};
}

inline Json bounds_to_json(const SosBounds& b) {
  Json bands = Json::array();
  for (const auto& [lo, hi] : b.bands) bands.push_back(Json::array({lo, hi}));
  return Json{{"n", b.n}, {"k0", b.k0}, {"threshold", b.threshold}, {"bands", bands}};
}

inline Json scaling_to_json(const ScalingResult& s) {
  Json path = Json::array();
  for (const auto& [c, ok] : s.path) path.push_back(Json{{"c", to_string(c)}, {"psd", ok}});
  Json j{{"status", s.status_name()}};
  if (s.status == ScalingResult::Status::Found) {
    j["c"] = to_string(s.c);
    j["certificate_diagonal"] = rationals_to_json(s.certificate.diagonal);
  }
  j["path"] = path;
  return j;
}

/// Differentials as arrays of polynomial text; subsets are 1-based.
inline Json koszul_to_json(const KoszulComplex& kc) {
  Json ranks = Json::array(), bases = Json::array(), diffs = Json::array();
  for (std::size_t i = 0; i < kc.bases.size(); ++i) {
    ranks.push_back(kc.rank(i));
    Json b = Json::array();
    for (const auto& s : kc.bases[i]) {
      Json one = Json::array();
      for (auto j : s) one.push_back(j + 1);
      b.push_back(one);
    }
    bases.push_back(b);
  }
  for (std::size_t i = 1; i < kc.differentials.size(); ++i) {
    Json rows = Json::array();
    for (const auto& row : kc.differentials[i]) rows.push_back(detail::texts(row));
    diffs.push_back(Json{{"stage", i}, {"matrix", rows}});
  }
  return Json{{"schema", kKoszulSchema}, {"ring", ring_to_json(kc.ring)}, {"inputs", detail::texts(kc.inputs)},
              {"ranks", ranks}, {"bases", bases}, {"differentials", diffs}, {"dd_zero", verify_dd_zero(kc)}};
}

inline Json report_to_json(const SosReport& rep) {
  Json stages = Json::array();
  for (const auto& s : rep.stages) stages.push_back(Json{{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  Json j{{"schema", kReportSchema},
         {"ring", ring_to_json(rep.ring)},
         {"n", rep.ring.n()},
         {"m", rep.m},
         {"plus", detail::texts(rep.plus)},
         {"g", rep.g.str()},
         {"passed", rep.passed()},
         {"failed_stage", rep.failed_stage() ? Json(*rep.failed_stage()) : Json(nullptr)},
         {"stages", stages}};
  j["colon"] = rep.colon ? Json(detail::texts(rep.colon->generators())) : Json(nullptr);
  j["containment"] = rep.containment ? Json(*rep.containment) : Json(nullptr);
  j["scaling"] = rep.scaling ? scaling_to_json(*rep.scaling) : Json(nullptr);
  j["inertia"] = rep.inertia ? inertia_to_json(*rep.inertia) : Json(nullptr);
  j["rho"] = rep.rho ? Json(*rep.rho) : Json(nullptr);
  j["rho_class"] = rep.rho_class ? Json(rep.rho_class->str()) : Json(nullptr);
  return j;
}

inline Json search_to_json(const SearchResult& res) {
  Json viol = Json::array();
  for (const auto& v : res.violations) viol.push_back(Json{{"plus", detail::texts(v.plus)}, {"g", v.g.str()}});
  Json coeffs = Json::array();
  for (const auto& c : res.options.coefficients) coeffs.push_back(to_string(c));
  return Json{{"schema", kSearchSchema},
              {"n", res.options.n},
              {"m", res.options.m},
              {"p", res.options.p},
              {"coefficients", coeffs},
              {"max_terms", res.options.max_terms},
              {"forms", res.forms},
              {"tuples", res.tuples},
              {"spans", res.spans},
              {"violations", viol}};
}

}  // namespace hsos
