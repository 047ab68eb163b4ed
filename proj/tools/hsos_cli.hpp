#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include "hsos/io/json.hpp"

namespace hsos::cli {

enum ExitCode : int { kTrue = 0, kFalse = 1, kInputError = 2, kInternalError = 3 };

/// Bad command-line input that is not a parse error of a polynomial.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string vars;
  std::string order = "grevlex";
  bool json = false;

  std::string ideal;
  std::string ideal_file;
  std::vector<std::string> polys;
  std::string by;
  std::string with;
  unsigned degree = 0;
  bool degree_set = false;

  std::string plus;
  std::string minus;
  std::string g;
  std::string scale = "1";
  std::string form_file;
  std::string map;
  bool times_norm = false;

  long n = 0;
  long rho = 0;
  std::string seq;
  std::size_t stage = 0;

  unsigned m = 1;
  std::size_t p = 1;
  std::string coeffs = "-1,0,1";
  std::size_t max_terms = 0;
  unsigned long long budget = 1000000;
  unsigned threads = 0;
  std::string report_file;
};

namespace detail {

inline std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = item.find_first_not_of(" \t");
    auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw UsageError("empty name in list '" + text + "'");
    out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonInputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string join(const std::vector<Polynomial>& ps, const char* open, const char* close) {
  std::string out = open;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k) out += ", ";
    out += ps[k].str();
  }
  return out + close;
}

}  // namespace detail

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  // Ring from --ideal-file, else --vars, else the identifiers in every text.
  RingContext ring(const std::vector<std::string>& texts) {
    if (!o_.ideal_file.empty()) return file_ideal().ring();
    if (!o_.vars.empty()) return RingContext(detail::split_names(o_.vars));
    std::vector<std::string> all;
    for (const auto& t : texts) {
      if (!t.empty()) all.push_back(t);
    }
    auto names = infer_variables(all);
    if (names.empty()) throw UsageError("no variables found; pass --vars");
    return RingContext(names);
  }

  Ideal file_ideal() {
    if (!file_ideal_) file_ideal_ = ideal_from_json(detail::read_json_file(o_.ideal_file));
    return *file_ideal_;
  }

  Ideal ideal(const RingContext& r) {
    if (!o_.ideal_file.empty()) return file_ideal();
    if (o_.ideal.empty()) throw UsageError("pass --ideal or --ideal-file");
    return Ideal(r, parse_polynomial_list(o_.ideal, r));
  }

  MonomialOrder order() const {
    if (o_.order != "lex" && o_.order != "grevlex") throw UsageError("--order must be lex or grevlex");
    return MonomialOrder::parse(o_.order);
  }

  // Reduced basis, largest leading monomial first.
  std::vector<Polynomial> canonical(const Ideal& i) {
    auto basis = groebner_basis(i, order()).basis();
    return std::vector<Polynomial>(basis.rbegin(), basis.rend());
  }

  int print_ideal(const Ideal& i) {
    auto gens = canonical(i);
    if (o_.json) {
      Json j = ideal_to_json(Ideal(i.ring(), gens));
      j["order"] = order().name();
      out_ << j.dump(2) << "\n";
    } else {
      out_ << detail::join(gens, "<", ">") << "\n";
    }
    return kTrue;
  }

  int print_bool(const char* key, bool value, Json extra = Json::object()) {
    if (o_.json) {
      Json j{{key, value}};
      j.update(extra);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << (value ? "true" : "false") << "\n";
    }
    return value ? kTrue : kFalse;
  }

  int print_count(const char* key, std::size_t value) {
    if (o_.json) {
      out_ << Json{{key, value}}.dump(2) << "\n";
    } else {
      out_ << value << "\n";
    }
    return kTrue;
  }

  BiForm form() {
    if (!o_.form_file.empty()) return biform_from_json(detail::read_json_file(o_.form_file));
    if (!o_.map.empty()) {
      RingContext r = ring({o_.map});
      return squared_norm_of_map(r, parse_polynomial_list(o_.map, r));
    }
    if (o_.plus.empty() && o_.minus.empty()) throw UsageError("pass --form, --map or --plus/--minus");
    RingContext r = ring({o_.plus, o_.minus});
    Rational c = parse_rational(o_.scale);
    std::vector<Polynomial> forms;
    std::vector<Rational> weights;
    for (auto& p : parse_polynomial_list(o_.plus, r)) {
      forms.push_back(std::move(p));
      weights.push_back(c);
    }
    for (auto& p : parse_polynomial_list(o_.minus, r)) {
      forms.push_back(std::move(p));
      weights.push_back(Rational(-1));
    }
    std::optional<unsigned> m;
    for (const auto& f : forms) {
      if (!f.is_zero()) m = f.degree();
    }
    if (!m) throw UsageError("all forms are zero");
    return weighted_squares(r, *m, weights, forms);
  }

  int gb() {
    RingContext r = ring({o_.ideal});
    auto basis = groebner_basis(ideal(r), order());
    if (o_.json) {
      Json j = ideal_to_json(Ideal(r, basis.basis()));
      j["order"] = order().name();
      out_ << j.dump(2) << "\n";
    } else {
      out_ << detail::join(basis.basis(), "[", "]") << "\n";
    }
    return kTrue;
  }

  int nf() {
    std::vector<std::string> texts = o_.polys;
    texts.push_back(o_.ideal);
    RingContext r = ring(texts);
    if (o_.polys.size() != 1) throw UsageError("nf takes exactly one --poly");
    Polynomial f = parse_polynomial(o_.polys.front(), r);
    Polynomial rem = groebner_basis(ideal(r), order()).reduce(f);
    if (o_.json) {
      out_ << Json{{"poly", f.str()}, {"normal_form", rem.str()}}.dump(2) << "\n";
    } else {
      out_ << rem.str() << "\n";
    }
    return kTrue;
  }

  int member() {
    std::vector<std::string> texts = o_.polys;
    texts.push_back(o_.ideal);
    RingContext r = ring(texts);
    if (o_.polys.empty()) throw UsageError("member needs at least one --poly");
    auto basis = groebner_basis(ideal(r), order());
    bool all = true;
    Json results = Json::array();
    for (const auto& text : o_.polys) {
      Polynomial f = parse_polynomial(text, r);
      bool in = basis.contains(f);
      all &= in;
      results.push_back(Json{{"poly", f.str()}, {"member", in}});
      if (!o_.json) out_ << f.str() << ": " << (in ? "true" : "false") << "\n";
    }
    if (o_.json) out_ << Json{{"all", all}, {"results", results}}.dump(2) << "\n";
    return all ? kTrue : kFalse;
  }

  int colon() {
    RingContext r = ring({o_.ideal, o_.by});
    if (o_.by.empty()) throw UsageError("pass --by");
    auto by = parse_polynomial_list(o_.by, r);
    Ideal i = ideal(r);
    return print_ideal(by.size() == 1 ? colon_poly(i, by.front()) : colon_ideal(i, Ideal(r, by)));
  }

  int intersect_cmd() {
    RingContext r = ring({o_.ideal, o_.with});
    if (o_.with.empty()) throw UsageError("pass --with");
    return print_ideal(intersect(ideal(r), Ideal(r, parse_polynomial_list(o_.with, r))));
  }

  int dim() {
    RingContext r = ring({o_.ideal});
    Ideal i = ideal(r);
    unsigned d = krull_dimension(i);
    if (o_.json) {
      out_ << Json{{"krull_dimension", d}, {"codimension", r.n() - d}}.dump(2) << "\n";
    } else {
      out_ << d << "\n";
    }
    return kTrue;
  }

  int ci() {
    RingContext r = ring({o_.ideal});
    Ideal i = ideal(r);
    bool yes = is_complete_intersection(i);
    return print_bool("complete_intersection", yes, Json{{"codimension", codimension(i)}});
  }

  int socle() {
    RingContext r = ring({o_.ideal});
    SocleResult res = maximal_ideal_associated(ideal(r));
    if (o_.json) {
      out_ << Json{{"associated", res.associated},
                   {"witness", res.witness ? Json(res.witness->str()) : Json(nullptr)},
                   {"colon", detail::join(canonical(res.colon), "<", ">")}}
                  .dump(2)
           << "\n";
    } else {
      out_ << "associated: " << (res.associated ? "true" : "false") << "\n";
      if (res.witness) out_ << "witness: " << res.witness->str() << "\n";
    }
    return res.associated ? kTrue : kFalse;
  }

  int graded_dim() {
    RingContext r = ring({o_.ideal});
    if (!o_.degree_set) throw UsageError("pass --degree");
    return print_count("dimension", graded_piece_dim(ideal(r), o_.degree));
  }

  int contain() {
    RingContext r = ring({o_.plus, o_.minus});
    if (o_.plus.empty() || o_.minus.empty()) throw UsageError("pass --plus and --minus");
    Ideal plus(r, parse_polynomial_list(o_.plus, r));
    Ideal minus(r, parse_polynomial_list(o_.minus, r));
    if (minus.is_zero()) throw UsageError("--minus has no nonzero generator");
    unsigned m = minus.generators().front().degree();
    return print_bool("contained", containment_check(plus, minus, m), Json{{"degree", m + 1}});
  }

  int inertia_cmd() {
    Inertia in = inertia(coefficient_matrix(form()));
    if (o_.json) {
      out_ << inertia_to_json(in).dump(2) << "\n";
    } else {
      out_ << in.str() << "\n";
    }
    return kTrue;
  }

  int decompose() {
    BiForm r = form();
    HoloDecomposition d = holomorphic_decomposition(r);
    if (o_.json) {
      out_ << decomposition_to_json(d).dump(2) << "\n";
      return kTrue;
    }
    if (d.forms.empty()) out_ << "0\n";
    for (std::size_t k = 0; k < d.forms.size(); ++k) {
      out_ << to_string(d.weights[k]) << " * |" << d.forms[k].str() << "|^2\n";
    }
    return kTrue;
  }

  int mulnorm() {
    BiForm r = multiply_by_norm(form());
    if (o_.json) {
      out_ << biform_to_json(r).dump(2) << "\n";
    } else {
      out_ << r.str() << "\n";
    }
    return kTrue;
  }

  int psd() {
    BiForm r = form();
    if (o_.times_norm) r = multiply_by_norm(r);
    PsdCertificate cert = is_psd(coefficient_matrix(r));
    if (o_.json) {
      out_ << psd_to_json(cert).dump(2) << "\n";
    } else if (cert.psd) {
      out_ << "psd: true\ndiagonal:";
      for (const auto& d : cert.diagonal) out_ << " " << to_string(d);
      out_ << "\n";
    } else {
      out_ << "psd: false\nwitness: " << vector_to_json(cert.witness).dump() << "\nvalue: "
           << to_string(cert.witness_value) << "\n";
      if (!cert.principal_minor.empty()) {
        out_ << "negative principal minor:";
        for (auto k : cert.principal_minor) out_ << " " << k;
        out_ << "\n";
      }
    }
    return cert.psd ? kTrue : kFalse;
  }

  int rank_cmd() {
    BiForm r = form();
    if (o_.times_norm) r = multiply_by_norm(r);
    try {
      return print_count("rank", squared_norm_rank(r));
    } catch (const NotPositiveSemidefinite& e) {
      if (o_.json) {
        out_ << Json{{"rank", nullptr}, {"psd", psd_to_json(e.certificate())}}.dump(2) << "\n";
      } else {
        out_ << "not a squared norm: coefficient matrix is not positive semidefinite\n";
      }
      return kFalse;
    }
  }

  int bounds() {
    SosBounds b = compute_bounds(o_.n);
    if (o_.json) {
      out_ << bounds_to_json(b).dump(2) << "\n";
      return kTrue;
    }
    out_ << "n=" << b.n << " k0=" << b.k0 << " threshold=" << b.threshold << " bands=";
    for (std::size_t k = 0; k < b.bands.size(); ++k) {
      out_ << (k ? " " : "") << "[" << b.bands[k].first << "," << b.bands[k].second << "]";
    }
    out_ << "\n";
    return kTrue;
  }

  int classify() {
    RankClass c = classify_rank(o_.n, o_.rho);
    if (o_.json) {
      out_ << Json{{"n", o_.n}, {"rho", o_.rho}, {"class", c.str()}}.dump(2) << "\n";
    } else {
      out_ << c.str() << "\n";
    }
    return kTrue;
  }

  int scale_cmd() {
    RingContext r = ring({o_.plus, o_.g});
    if (o_.plus.empty() || o_.g.empty()) throw UsageError("pass --plus and --g");
    ScalingResult s = find_scaling(parse_polynomial_list(o_.plus, r), parse_polynomial(o_.g, r));
    if (o_.json) {
      out_ << scaling_to_json(s).dump(2) << "\n";
    } else if (s.status == ScalingResult::Status::Found) {
      out_ << "C = " << to_string(s.c) << "\n";
    } else if (s.status == ScalingResult::Status::Impossible) {
      out_ << "impossible: containment fails, so no C exists\n";
    } else {
      out_ << "cap reached: no C up to 2^64 found\n";
    }
    switch (s.status) {
      case ScalingResult::Status::Found:
        return kTrue;
      case ScalingResult::Status::Impossible:
        return kFalse;
      case ScalingResult::Status::CapReached:
        break;
    }
    return kInternalError;
  }

  KoszulComplex koszul_complex() {
    if (o_.seq.empty()) throw UsageError("pass --seq");
    RingContext r = ring({o_.seq});
    return build_koszul(parse_polynomial_list(o_.seq, r));
  }

  int koszul() {
    KoszulComplex kc = koszul_complex();
    bool ok = verify_dd_zero(kc);
    if (o_.json) {
      out_ << koszul_to_json(kc).dump(2) << "\n";
      return ok ? kTrue : kFalse;
    }
    out_ << "ranks:";
    for (std::size_t i = 0; i <= kc.length(); ++i) out_ << " " << kc.rank(i);
    out_ << "\n";
    for (std::size_t i = 1; i <= kc.length(); ++i) {
      out_ << "d" << i << ":\n";
      for (const auto& row : kc.differentials[i]) out_ << "  " << detail::join(row, "[", "]") << "\n";
    }
    out_ << "d o d = 0: " << (ok ? "true" : "false") << "\n";
    return ok ? kTrue : kFalse;
  }

  int homology() {
    KoszulComplex kc = koszul_complex();
    if (!o_.degree_set) throw UsageError("pass --degree");
    return print_count("dimension", graded_homology_dim(kc, o_.stage, o_.degree));
  }

  int verify() {
    SosReport rep = [&] {
      if (o_.plus.empty() && o_.g.empty()) return verify_four_variable_example();
      if (o_.plus.empty() || o_.g.empty()) throw UsageError("pass both --plus and --g, or neither");
      RingContext r = ring({o_.plus, o_.g});
      return verify_example(r, parse_polynomial_list(o_.plus, r), parse_polynomial(o_.g, r));
    }();
    Json j = report_to_json(rep);
    if (!o_.report_file.empty()) {
      std::ofstream f(o_.report_file);
      if (!f) throw UsageError("cannot write '" + o_.report_file + "'");
      f << j.dump(2) << "\n";
    }
    if (o_.json) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << rep.transcript();
    }
    return rep.passed() ? kTrue : kFalse;
  }

  int search() {
    SearchOptions opt;
    if (o_.n < 1) throw UsageError("pass --n >= 1");
    opt.n = static_cast<std::size_t>(o_.n);
    opt.m = o_.m;
    opt.p = o_.p;
    opt.coefficients.clear();
    for (const auto& c : detail::split_names(o_.coeffs)) opt.coefficients.push_back(parse_rational(c));
    opt.max_terms = o_.max_terms;
    opt.budget = o_.budget;
    opt.threads = o_.threads;
    SearchResult res = exhaustive_small_search(opt);
    bool contradicts = opt.n <= 3 && opt.p < opt.n && !res.violations.empty();
    if (o_.json) {
      out_ << search_to_json(res).dump(2) << "\n";
      return contradicts ? kFalse : kTrue;
    }
    out_ << "forms: " << res.forms << ", tuples: " << res.tuples << ", distinct spans: " << res.spans << "\n";
    if (res.violations.empty()) {
      out_ << "no violations found (theorem consistent)\n";
    } else {
      out_ << res.violations.size() << " pair(s) with containment, P = " << opt.p << (opt.p < opt.n ? " < " : " >= ")
           << "n = " << opt.n
           << (contradicts ? " (contradicts the n <= 3 bound)" : "") << "\n";
      for (const auto& v : res.violations) {
        out_ << "  I+ = " << detail::join(v.plus, "<", ">") << ", g = " << v.g.str() << "\n";
      }
    }
    return contradicts ? kFalse : kTrue;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::optional<Ideal> file_ideal_;
};

/// Parses argv and runs one subcommand. Exit codes: 0 true/verified,
/// 1 checked false, 2 input error, 3 internal error or budget exceeded.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Hermitian sum-of-squares and ideal computations", "hsos"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    int (Runner::*fn)();
  };
  const std::vector<Sub> subs = {
      {"gb", "reduced Groebner basis of --ideal", &Runner::gb},
      {"nf", "normal form of --poly modulo --ideal", &Runner::nf},
      {"member", "ideal membership of each --poly", &Runner::member},
      {"colon", "colon ideal --ideal : --by", &Runner::colon},
      {"intersect", "intersection of --ideal and --with", &Runner::intersect_cmd},
      {"dim", "Krull dimension of R/I", &Runner::dim},
      {"ci", "complete intersection test", &Runner::ci},
      {"socle", "is the maximal ideal associated to I", &Runner::socle},
      {"graded-dim", "dimension of I in --degree", &Runner::graded_dim},
      {"contain", "<minus>_{m+1} contained in <plus>_{m+1}", &Runner::contain},
      {"inertia", "inertia of a Hermitian form", &Runner::inertia_cmd},
      {"decompose", "holomorphic decomposition of a Hermitian form", &Runner::decompose},
      {"mulnorm", "multiply a Hermitian form by ||z||^2", &Runner::mulnorm},
      {"psd", "positive semidefiniteness with certificate", &Runner::psd},
      {"rank", "rank of a squared norm", &Runner::rank_cmd},
      {"bounds", "rank bounds for n variables", &Runner::bounds},
      {"classify", "classify a squared-norm rank", &Runner::classify},
      {"scale", "scaling C making (C||f||^2 - |g|^2)||z||^2 PSD", &Runner::scale_cmd},
      {"koszul", "Koszul complex of --seq", &Runner::koszul},
      {"homology", "graded Koszul homology dimension", &Runner::homology},
      {"verify-example", "six-stage P < n verification", &Runner::verify},
      {"search", "exhaustive small-instance search", &Runner::search},
  };

  std::vector<std::pair<CLI::App*, int (Runner::*)()>> handlers;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    handlers.emplace_back(sub, s.fn);
    std::string name = s.name;
    sub->add_flag("--json", o.json, "JSON output");
    auto ring_opts = [&] { sub->add_option("--vars", o.vars, "comma-separated variable names"); };
    auto ideal_opts = [&] {
      ring_opts();
      sub->add_option("--ideal", o.ideal, "generator list, e.g. '[x^2, x*y]'");
      sub->add_option("--ideal-file", o.ideal_file, "ideal JSON file");
      sub->add_option("--order", o.order, "lex or grevlex")->capture_default_str();
    };
    auto form_opts = [&] {
      ring_opts();
      sub->add_option("--form", o.form_file, "Hermitian form JSON file");
      sub->add_option("--map", o.map, "components of h for ||h||^2");
      sub->add_option("--plus", o.plus, "forms with weight --scale");
      sub->add_option("--minus", o.minus, "forms with weight -1");
      sub->add_option("--scale", o.scale, "weight of the --plus forms")->capture_default_str();
    };
    if (name == "gb" || name == "dim" || name == "ci" || name == "socle") ideal_opts();
    if (name == "nf" || name == "member") {
      ideal_opts();
      sub->add_option("--poly", o.polys, "polynomial")->required();
    }
    if (name == "colon") {
      ideal_opts();
      sub->add_option("--by", o.by, "polynomial or generator list")->required();
    }
    if (name == "intersect") {
      ideal_opts();
      sub->add_option("--with", o.with, "generator list")->required();
    }
    if (name == "graded-dim") {
      ideal_opts();
      sub->add_option("--degree", o.degree, "degree")->required();
    }
    if (name == "contain") {
      ring_opts();
      sub->add_option("--plus", o.plus, "generators of I+")->required();
      sub->add_option("--minus", o.minus, "generators of I-")->required();
    }
    if (name == "inertia" || name == "decompose" || name == "mulnorm") form_opts();
    if (name == "psd" || name == "rank") {
      form_opts();
      sub->add_flag("--times-norm", o.times_norm, "test r * ||z||^2 instead of r");
    }
    if (name == "bounds") sub->add_option("--n", o.n, "number of variables")->required();
    if (name == "classify") {
      sub->add_option("--n", o.n, "number of variables")->required();
      sub->add_option("--rho", o.rho, "rank")->required();
    }
    if (name == "scale" || name == "verify-example") {
      ring_opts();
      sub->add_option("--plus", o.plus, "generators of I+");
      sub->add_option("--g", o.g, "the form g");
    }
    if (name == "verify-example") sub->add_option("--report", o.report_file, "write the JSON report here");
    if (name == "koszul" || name == "homology") {
      ring_opts();
      sub->add_option("--seq", o.seq, "input sequence")->required();
    }
    if (name == "homology") {
      sub->add_option("--stage", o.stage, "homological stage i")->required();
      sub->add_option("--degree", o.degree, "internal degree")->required();
    }
    if (name == "search") {
      sub->add_option("--n", o.n, "number of variables")->required();
      sub->add_option("--m", o.m, "degree of the forms")->capture_default_str();
      sub->add_option("--p", o.p, "number of generators of I+")->capture_default_str();
      sub->add_option("--coeffs", o.coeffs, "coefficient set")->capture_default_str();
      sub->add_option("--max-terms", o.max_terms, "only forms with at most this many terms (0: any)");
      sub->add_option("--budget", o.budget, "maximum enumerated tuples")->capture_default_str();
      sub->add_option("--threads", o.threads, "worker threads (0: HSOS_THREADS or all cores)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  for (const auto& [sub, fn] : handlers) {
    if (!sub->parsed()) continue;
    const CLI::Option* degree = sub->get_option_no_throw("--degree");
    o.degree_set = degree != nullptr && degree->count() > 0;
    Runner runner(o, out);
    try {
      return (runner.*fn)();
    } catch (const BudgetExceeded& e) {
      err << "error: " << e.what() << " (estimate " << e.estimate() << ")\n";
      return kInternalError;
    } catch (const InternalError& e) {
      err << "internal error: " << e.what() << "\n";
      return kInternalError;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << "\n";
      return kInternalError;
    }
  }
  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace hsos::cli
