/* Copyright 2026 The torus-zeta Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "torus_zeta/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "torus_zeta/schema_text.hpp"

namespace torus_zeta::cli {
namespace {

constexpr std::size_t kKroneckerRun = 4;  // consecutive vanishing Hankel determinants required

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  throw Error(Errc::ParseError, "field \"" + field + "\": " + what);
}

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw Error(Errc::ValidationError, "field \"" + field + "\": " + what);
}

std::int64_t as_int(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) parse_fail(field, "expected an integer");
  return v.get<std::int64_t>();
}

const Json& member(const Json& doc, const char* key) {
  if (!doc.contains(key)) parse_fail(key, "missing");
  return doc.at(key);
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((v % m) + m) % m);
}

// One coefficient of an entry: an integer (any e) or a coordinate list (e > 1).
FFElem parse_coefficient(const Json& v, const MatrixInput& in, const std::string& field) {
  FFElem::Coords c(static_cast<std::size_t>(in.e), 0);
  if (v.is_number_integer()) {
    c[0] = static_cast<std::uint32_t>(reduce(v.get<std::int64_t>(), in.p));
  } else if (v.is_array() && in.e > 1) {
    if (v.size() > static_cast<std::size_t>(in.e)) invalid(field, "more than e coordinates");
    for (std::size_t i = 0; i < v.size(); ++i) {
      c[i] = static_cast<std::uint32_t>(reduce(as_int(v[i], field + "[" + std::to_string(i) + "]"), in.p));
    }
  } else {
    parse_fail(field, in.e == 1 ? "expected an integer" : "expected an integer or a coordinate list");
  }
  return FFElem(in.field, c);
}

Json coefficient_json(const FFElem& x, int e) {
  if (e == 1) return x.flat()[0];
  Json coords = Json::array();
  for (const auto v : x.flat()) coords.push_back(v);
  return coords;
}

Json poly_json(const TPoly& t, int e) {
  Json out = Json::array();
  for (const auto& c : t.coeffs()) out.push_back(coefficient_json(c, e));
  return out;
}

Json fractions(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_fraction_string(x));
  return out;
}

Json qpoly_json(const QPoly& p) { return fractions(p.coeffs()); }

std::string abs_string(const AbsVal& v) { return v.zero ? "0" : "q^" + std::to_string(v.exponent); }

Json spectral_json(const SpectralData& S) {
  Json rou = Json::array(), units = Json::array();
  for (const auto& e : S.rou) rou.push_back({{"m", e.order}, {"mult", e.multiplicity}});
  for (const auto& e : S.unit_nonrou) {
    units.push_back({{"n", e.order}, {"eta1_exp", to_fraction_string(e.eta1_exponent)}, {"mult", e.multiplicity}});
  }
  return {{"R", S.r_exponent},
          {"rou", rou},
          {"unit_nonrou", units},
          {"zero_eigen_multiplicity", S.zero_eigen_multiplicity},
          {"large_eigen_count", S.large_eigen_count},
          {"small_eigen_count", S.small_eigen_count}};
}

Json verdict_json(const ZetaVerdict& v) {
  if (const auto* a = std::get_if<Algebraic>(&v)) {
    Json factors = Json::array();
    for (const auto& f : a->closed_form.combined) factors.push_back({{"L", f.L}, {"exp", to_fraction_string(f.exponent)}});
    return {{"kind", "algebraic"},
            {"closed_form",
             {{"r", "q^" + std::to_string(a->closed_form.r_exponent)},
              {"R", a->closed_form.r_exponent},
              {"leading", {{"L", 1}, {"exp", "-1/1"}}},
              {"subset_factor_count", a->closed_form.subset_factors.size()},
              {"factors", factors}}},
            {"rational", a->rational}};
  }
  const auto& t = std::get<Transcendental>(v);
  return {{"kind", "transcendental"}, {"boundary_radius", to_fraction_string(t.boundary_radius)}, {"witness", t.witness}};
}

// The oracle counts must agree with the eigenvalue formula; anything else is
// a bug in the spectral pipeline.
void cross_check(const SpectralData& S, const std::vector<AbsVal>& N, std::size_t kmax) {
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (!(nk_formula(S, k) == N[k - 1])) {
      throw Error(Errc::InternalInconsistency, "eigenvalue formula disagrees with |det(A^k - I)| at k = " +
                                                   std::to_string(k));
    }
  }
}

Json notes_json(const std::vector<AbsVal>& N, std::size_t kmax) {
  Json notes = Json::array();
  if (mixed_degeneracy(std::vector<AbsVal>(N.begin(), N.begin() + static_cast<std::ptrdiff_t>(kmax)))) {
    notes.push_back(
        "mixed_degeneracy: det(A^k - I) vanishes for some but not all k <= kmax; the verdict is read off the "
        "eigenvalue data");
  }
  return notes;
}

Json kronecker_json(const SeriesWindow& w) {
  Json out = {{"d", kKroneckerRun}};
  if (w.coeffs.empty() || w.last() < 2 * (1 + kKroneckerRun)) {
    out["found"] = false;
    out["reason"] = "window too short";
    return out;
  }
  if (const auto hit = kronecker_search(w, kKroneckerRun)) {
    out["found"] = true;
    out["m"] = hit->m;
    out["P"] = qpoly_json(hit->f.P);
    out["Q"] = qpoly_json(hit->f.Q);
  } else {
    out["found"] = false;
    out["searched_m_max"] = w.last() / 2 - kKroneckerRun;
  }
  return out;
}

std::string radical_string(const RadicalElem& x) {
  if (x.is_rational()) return to_fraction_string(x.rational());
  std::ostringstream os;
  os << x;
  return os.str();
}

Json hankel_json(const SeriesWindow& w, std::size_t hankel_max) {
  if (w.offset != 0 || w.coeffs.empty() || 2 * hankel_max > w.last()) {
    invalid("hankel-max", "needs 2 * hankel-max <= " + std::to_string(w.coeffs.empty() ? 0 : w.last()));
  }
  Json dets = Json::array(), decay = Json::array();
  for (std::size_t n = 0; n <= hankel_max; ++n) dets.push_back({{"n", n}, {"delta", radical_string(hankel_det(w, 0, n))}});
  for (const auto& row : polya_decay_report(w, hankel_max)) {
    decay.push_back({{"n", row.n}, {"abs_delta", row.abs_delta}, {"root", row.root}});
  }
  return {{"determinants", dets}, {"polya_decay", decay}};
}

Json exceptional_json(const ExceptionalSet& S) {
  Json density = Json::array();
  for (const auto& [n, count] : S.density) {
    density.push_back({{"n", n}, {"count", count}, {"bound", exceptional_density_bound(S.p, n)}});
  }
  return {{"p", S.p}, {"bound", S.bound}, {"members", S.members}, {"density", density}};
}

std::vector<AbsVal> counts(const MatrixInput& in, std::size_t upto, unsigned threads) {
  return nk_sequence(in.A, upto, threads);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(Errc::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

void emit(const Json& report, const std::string& output, std::ostream& out) {
  const std::string text = dump(report);
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream os(output, std::ios::binary);
  if (!os) throw Error(Errc::ValidationError, "field \"output\": cannot write " + output);
  os << text;
}

}  // namespace

MatrixInput parse_matrix_input(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "input must be a JSON object");
  MatrixInput in;
  const std::int64_t p = as_int(member(doc, "p"), "p");
  if (p < 2 || p > (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p))) invalid("p", "not a prime");
  in.p = static_cast<std::uint64_t>(p);
  const std::int64_t e = doc.contains("e") ? as_int(doc.at("e"), "e") : 1;
  if (e < 1 || e > 62) invalid("e", "must be between 1 and 62");
  in.e = static_cast<int>(e);
  {
    Integer q = pow_integer(Integer(static_cast<unsigned long>(in.p)), static_cast<std::uint64_t>(in.e));
    if (q > Integer("4611686018427387904")) invalid("e", "field order p^e exceeds 2^62");
  }

  const FieldDesc fp = prime_field(in.p);
  std::optional<FFPoly> modulus;
  if (doc.contains("field_modulus") && !doc.at("field_modulus").is_null()) {
    const Json& m = doc.at("field_modulus");
    if (!m.is_array()) parse_fail("field_modulus", "expected a list of integers");
    std::vector<FFElem> c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      c.emplace_back(fp, static_cast<std::int64_t>(reduce(as_int(m[i], "field_modulus[" + std::to_string(i) + "]"), in.p)));
    }
    modulus = FFPoly(fp, std::move(c));
    if (modulus->degree() != in.e || !modulus->lead().is_one()) {
      invalid("field_modulus", "must be monic of degree e = " + std::to_string(in.e));
    }
  }
  try {
    in.field = in.e == 1 ? fp : make_field(in.p, in.e, modulus);
  } catch (const Error& err) {
    invalid("field_modulus", err.what());
  }

  const std::int64_t d = as_int(member(doc, "d"), "d");
  if (d < 1 || d > 64) invalid("d", "dimension must be between 1 and 64");
  const Json& entries = member(doc, "entries");
  if (!entries.is_array()) parse_fail("entries", "expected a list of rows");
  if (entries.size() != static_cast<std::size_t>(d)) invalid("entries", "expected d = " + std::to_string(d) + " rows");
  std::vector<std::vector<TPoly>> rows;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string rname = "entries[" + std::to_string(i) + "]";
    if (!entries[i].is_array()) parse_fail(rname, "expected a row");
    if (entries[i].size() != static_cast<std::size_t>(d)) invalid(rname, "expected d = " + std::to_string(d) + " entries");
    std::vector<TPoly> row;
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      const std::string ename = rname + "[" + std::to_string(j) + "]";
      const Json& entry = entries[i][j];
      if (!entry.is_array()) parse_fail(ename, "expected a coefficient list");
      std::vector<FFElem> c;
      for (std::size_t k = 0; k < entry.size(); ++k) {
        c.push_back(parse_coefficient(entry[k], in, ename + "[" + std::to_string(k) + "]"));
      }
      row.emplace_back(in.field, std::move(c));
    }
    rows.push_back(std::move(row));
  }
  in.A = PolyMatrix(in.field, std::move(rows));

  Json mod = Json::array();
  for (const auto& c : in.field.modulus().coeffs()) mod.push_back(c.flat()[0]);
  Json echo_rows = Json::array();
  for (std::size_t i = 0; i < in.A.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < in.A.dim(); ++j) row.push_back(poly_json(in.A(i, j), in.e));
    echo_rows.push_back(row);
  }
  in.echo = {{"p", in.p}, {"e", in.e}, {"field_modulus", mod}, {"d", d}, {"entries", echo_rows}};
  return in;
}

MatrixInput load_matrix_input(const std::string& path) {
  return parse_matrix_input(parse_json_text(read_file(path), path));
}

SeriesWindow parse_window(const Json& doc) {
  if (doc.is_array()) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (doc[i].is_number_integer()) {
        v.emplace_back(Integer(std::to_string(doc[i].get<std::int64_t>())));
      } else if (doc[i].is_string()) {
        try {
          v.push_back(parse_fraction(doc[i].get<std::string>()));
        } catch (const Error&) {
          parse_fail("[" + std::to_string(i) + "]", "malformed fraction");
        }
      } else {
        parse_fail("[" + std::to_string(i) + "]", "expected a \"num/den\" string");
      }
    }
    if (v.empty()) invalid("coeffs", "window is empty");
    return SeriesWindow::from_rationals(v);
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "window must be a list or an object");
  const std::int64_t p = as_int(member(doc, "p"), "p");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) invalid("p", "not a prime");
  const std::int64_t s = as_int(member(doc, "s"), "s");
  if (s < 1 || s > 64) invalid("s", "radical index must be between 1 and 64");
  SeriesWindow w;
  w.field = RadicalField(static_cast<std::uint64_t>(p), static_cast<std::uint32_t>(s));
  if (doc.contains("offset")) {
    const std::int64_t off = as_int(doc.at("offset"), "offset");
    if (off < 0) invalid("offset", "must be nonnegative");
    w.offset = static_cast<std::size_t>(off);
  }
  const Json& coeffs = member(doc, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) parse_fail("coeffs", "expected a nonempty list");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string name = "coeffs[" + std::to_string(i) + "]";
    if (!coeffs[i].is_array() || coeffs[i].size() > static_cast<std::size_t>(s)) {
      parse_fail(name, "expected at most s coordinate strings");
    }
    std::vector<Rational> c(static_cast<std::size_t>(s), Rational(0));
    for (std::size_t j = 0; j < coeffs[i].size(); ++j) {
      if (!coeffs[i][j].is_string()) parse_fail(name, "coordinates are \"num/den\" strings");
      try {
        c[j] = parse_fraction(coeffs[i][j].get<std::string>());
      } catch (const Error&) {
        parse_fail(name, "malformed fraction");
      }
    }
    w.coeffs.emplace_back(w.field, std::move(c));
  }
  return w;
}

Json analyze_report(const MatrixInput& in, const AnalyzeOptions& opt) {
  if (opt.kmax < 1) invalid("kmax", "must be positive");
  // The series needs N_1..N_{terms-1}; only the first kmax are reported.
  const std::size_t upto = std::max(opt.kmax, opt.terms > 0 ? opt.terms - 1 : 0);
  const std::vector<AbsVal> N = counts(in, upto, opt.threads);
  const SpectralData S = spectral_data(in.A);
  cross_check(S, N, upto);
  const ZetaVerdict verdict = classify(S);

  Json nk = Json::array();
  for (std::size_t k = 1; k <= opt.kmax; ++k) nk.push_back({{"k", k}, {"value", abs_string(N[k - 1])}});
  const std::vector<Rational> series = zeta_series(N, S.q, opt.terms);

  Json report = {{"command", "analyze"},
                 {"input", in.echo},
                 {"q", S.q.get_str()},
                 {"kmax", opt.kmax},
                 {"terms", opt.terms},
                 {"N_k", nk},
                 {"spectral", spectral_json(S)},
                 {"verdict", verdict_json(verdict)},
                 {"series", fractions(series)}};
  if (const auto* a = std::get_if<Algebraic>(&verdict)) {
    if (closed_form_series(a->closed_form, opt.terms) != series) {
      throw Error(Errc::InternalInconsistency, "closed form expansion disagrees with the zeta series");
    }
    report["series_matches_closed_form"] = true;
  }
  report["notes"] = notes_json(N, opt.kmax);
  return report;
}

Json diagnose_report(const MatrixInput& in, const DiagnoseOptions& opt) {
  if (opt.kmax < 1) invalid("kmax", "must be positive");
  const std::vector<AbsVal> N = counts(in, opt.kmax, opt.threads);
  const SpectralData S = spectral_data(in.A);
  cross_check(S, N, opt.kmax);
  const ZetaVerdict verdict = classify(S);
  const SeriesWindow w = dichotomy_coefficients(S, opt.kmax);

  Json ck = Json::array();
  for (std::size_t k = 1; k <= opt.kmax; ++k) ck.push_back(to_fraction_string(w.at(k).rational()));
  Json report = {{"command", "diagnose"},
                 {"input", in.echo},
                 {"q", S.q.get_str()},
                 {"kmax", opt.kmax},
                 {"spectral", spectral_json(S)},
                 {"verdict", verdict_json(verdict)},
                 {"c_k", ck}};

  if (opt.hankel_max) report["hankel"] = hankel_json(w, *opt.hankel_max);
  if (opt.kronecker) report["kronecker"] = kronecker_json(w);
  if (opt.lcm) {
    const std::uint64_t bound = opt.exceptional_bound.value_or(opt.kmax);
    const ExceptionalSet E = build_exceptional_set(S.p, std::max<std::uint64_t>(bound, 1));
    const LcmGrowth all = lcm_den_growth(w, nullptr, opt.kmax);
    const LcmGrowth outside = lcm_den_growth(w, &E, opt.kmax);
    Json lcm = {{"n", opt.kmax},
                {"exceptional_bound", E.bound},
                {"L_n", all.L.get_str()},
                {"L_n_outside_S", outside.L.get_str()},
                {"log_growth", all.growth.back()},
                {"log_growth_outside_S", outside.growth.back()}};
    // Along k = n p^V the valuations v_p(c_k) fall without bound when the
    // zeta function is transcendental.
    Json witness = Json::array();
    if (const auto* t = std::get_if<Transcendental>(&verdict)) {
      const std::uint64_t n = S.unit_nonrou[t->witness - 1].order;
      lcm["witness_order"] = n;
      for (std::uint64_t V = 0, k = n; k <= opt.kmax; ++V, k *= S.p) {
        const Rational& c = w.at(k).rational();
        witness.push_back({{"V", V}, {"k", k}, {"c_k", to_fraction_string(c)}, {"v_p", valuation(c, S.p)}});
      }
    }
    lcm["witness_valuations"] = witness;
    report["lcm"] = lcm;
  }
  if (opt.exceptional_bound) report["exceptional_set"] = exceptional_json(build_exceptional_set(S.p, *opt.exceptional_bound));
  report["notes"] = notes_json(N, opt.kmax);
  return report;
}

Json series_report(const MatrixInput& in, std::size_t terms, unsigned threads) {
  const std::vector<AbsVal> N = counts(in, terms > 0 ? terms - 1 : 0, threads);
  const SpectralData S = spectral_data(in.A);
  cross_check(S, N, N.size());
  const ZetaVerdict verdict = classify(S);
  const std::vector<Rational> series = zeta_series(N, S.q, terms);
  Json report = {{"command", "series"},
                 {"input", in.echo},
                 {"terms", terms},
                 {"verdict", std::holds_alternative<Algebraic>(verdict) ? "algebraic" : "transcendental"},
                 {"series", fractions(series)}};
  if (const auto* a = std::get_if<Algebraic>(&verdict)) {
    const std::vector<Rational> cf = closed_form_series(a->closed_form, terms);
    if (cf != series) throw Error(Errc::InternalInconsistency, "closed form expansion disagrees with the zeta series");
    report["closed_form_series"] = fractions(cf);
    report["closed_form_matches"] = true;
  }
  return report;
}

Json window_report(const SeriesWindow& w, std::optional<std::size_t> hankel_max, bool kronecker) {
  Json report = {{"command", "window"},
                 {"field", {{"p", w.field.p()}, {"s", w.field.s()}}},
                 {"offset", w.offset},
                 {"length", w.size()}};
  if (w.is_rational()) {
    const RecurrenceFit fit = fit_polyexp(w);
    report["fit"] = {{"r", fit.r}, {"s_roots", fit.s_roots}, {"charpoly", qpoly_json(fit.charpoly)}, {"proper", fit.proper}};
  }
  if (hankel_max) report["hankel"] = hankel_json(w, *hankel_max);
  if (kronecker) {
    if (!w.is_rational() || w.offset != 0) invalid("kronecker", "needs a rational window starting at a_0");
    report["kronecker"] = kronecker_json(w);
  }
  Json dens = Json::array();
  for (const auto& x : w.coeffs) dens.push_back(denominator(x).get_str());
  report["denominators"] = dens;
  return report;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const std::string& report_schema() {
  static const std::string text = kReportSchema;
  return text;
}

unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TORUS_ZETA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) invalid("TORUS_ZETA_THREADS", "must be a positive integer");
    return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return hw;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::ValidationError:
    case Errc::NonPrime:
    case Errc::ReducibleModulus:
    case Errc::DegreeMismatch:
    case Errc::WindowTooShort:
    case Errc::InsufficientTerms:
    case Errc::PreconditionViolated:
    case Errc::Overflow:
      return 2;
    default:
      return 3;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions of x -> Ax on (F((1/t))/F[t])^d, with rationality diagnostics", "torus_zeta"};
  bool print_schema = false;
  app.add_flag("--json-schema", print_schema, "Print the JSON schema of all reports and exit");
  app.require_subcommand(0, 1);

  std::string input, output;
  AnalyzeOptions aopt;
  DiagnoseOptions dopt;
  std::size_t series_terms = 64;
  std::size_t hankel_max = 0;
  std::uint64_t exceptional_bound = 0;

  auto* analyze = app.add_subcommand("analyze", "Count periodic points, classify the zeta function, expand it");
  analyze->add_option("-i,--input", input, "Matrix JSON file")->required();
  analyze->add_option("-o,--output", output, "Write the report here instead of stdout");
  analyze->add_option("--kmax", aopt.kmax, "Number of N_k to report")->capture_default_str();
  analyze->add_option("--terms", aopt.terms, "Zeta series terms")->capture_default_str();

  auto* diagnose = app.add_subcommand("diagnose", "Rationality diagnostics on c_k = N_k / r(A)^k");
  diagnose->add_option("-i,--input", input, "Matrix JSON file")->required();
  diagnose->add_option("-o,--output", output, "Write the report here instead of stdout");
  diagnose->add_option("--kmax", dopt.kmax, "Window length")->capture_default_str();
  auto* hankel_opt = diagnose->add_option("--hankel-max", hankel_max, "Report Hankel determinants Delta_0..Delta_n");
  diagnose->add_flag("--kronecker", dopt.kronecker, "Search for a rational generating function");
  diagnose->add_flag("--lcm", dopt.lcm, "Track denominator growth and p-adic valuations");
  auto* exc_opt = diagnose->add_option("--exceptional-set", exceptional_bound, "List the exceptional index set up to a bound");

  auto* series = app.add_subcommand("series", "Print the zeta series, checked against the closed form when algebraic");
  series->add_option("-i,--input", input, "Matrix JSON file")->required();
  series->add_option("-o,--output", output, "Write the report here instead of stdout");
  series->add_option("--terms", series_terms, "Number of coefficients")->capture_default_str();

  auto* window = app.add_subcommand("window", "Diagnostics on a coefficient window file");
  window->add_option("-i,--input", input, "Window JSON file")->required();
  window->add_option("-o,--output", output, "Write the report here instead of stdout");
  auto* whankel_opt = window->add_option("--hankel-max", hankel_max, "Report Hankel determinants Delta_0..Delta_n");
  bool wkronecker = false;
  window->add_flag("--kronecker", wkronecker, "Search for a rational generating function");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (print_schema) {
      out << report_schema();
      return 0;
    }
    if (*analyze) {
      aopt.threads = thread_budget();
      emit(analyze_report(load_matrix_input(input), aopt), output, out);
    } else if (*diagnose) {
      dopt.threads = thread_budget();
      if (*hankel_opt) dopt.hankel_max = hankel_max;
      if (*exc_opt) {
        if (exceptional_bound < 1) invalid("exceptional-set", "bound must be at least 1");
        dopt.exceptional_bound = exceptional_bound;
      }
      emit(diagnose_report(load_matrix_input(input), dopt), output, out);
    } else if (*series) {
      emit(series_report(load_matrix_input(input), series_terms, thread_budget()), output, out);
    } else if (*window) {
      const SeriesWindow w = parse_window(parse_json_text(read_file(input), input));
      emit(window_report(w, *whankel_opt ? std::optional<std::size_t>(hankel_max) : std::nullopt, wkronecker), output,
           out);
    } else {
      out << app.help();
    }
    return 0;
  } catch (const Error& e) {
    err << "torus_zeta: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace torus_zeta::cli
