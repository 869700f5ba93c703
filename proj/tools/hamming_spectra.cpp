// Command-line front end. Records go to stdout, one JSON object per line with
// sorted keys; the tabular subcommands also speak --format csv. Exact values
// are serialized as decimal strings so nothing is rounded on the way out.
// Exit codes: 0 success, 1 failed verification or broken internal contract,
// 2 usage or domain errors.

#include <hamspec/chiq.hpp>
#include <hamspec/hamming.hpp>
#include <hamspec/krawtchouk.hpp>
#include <hamspec/verify.hpp>
#include <hamspec/z4.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

// Scan commands honour HAMMING_SPECTRA_THREADS; 0 or unset picks the hardware
// count inside the library.
unsigned env_threads() {
  const char* env = std::getenv("HAMMING_SPECTRA_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0 || v > 4096)
    throw std::invalid_argument(
        "HAMMING_SPECTRA_THREADS must be an integer in [0, 4096]");
  return static_cast<unsigned>(v);
}

void emit(const json& rec) { std::cout << rec.dump() << "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  return buf;
}

[[noreturn]] void reject_csv() {
  throw std::invalid_argument("csv output is only available for tabular subcommands");
}

int run_krawtchouk(int n, int j, int x, bool have_x, const std::string& format) {
  std::vector<std::pair<int, std::string>> rows;
  if (have_x) {
    rows.emplace_back(x, hamspec::krawtchouk_eval(n, j, x).get_str());
  } else {
    for (int w = 0; w <= n; ++w)
      rows.emplace_back(w, hamspec::krawtchouk_eval(n, j, w).get_str());
  }
  if (format == "csv") {
    std::cout << "n,j,w,value\n";
    for (const auto& [w, v] : rows)
      std::cout << n << ',' << j << ',' << w << ',' << v << "\n";
  } else {
    for (const auto& [w, v] : rows)
      emit({{"j", j}, {"n", n}, {"value", v}, {"w", w}});
  }
  return 0;
}

int run_hamming_min(int n, int j, const std::string& format) {
  if (format == "csv") reject_csv();
  auto r = hamspec::lambda_min_exact(n, j);
  emit({{"argmin_w", r.argmin_w},
        {"j", j},
        {"lambda_min", r.lambda_min.get_str()},
        {"n", n}});
  return 0;
}

int run_qpoly(int n, int j, bool closed, const std::string& format) {
  if (format == "csv") reject_csv();
  std::vector<std::string> coeffs;
  if (closed) {
    for (int k = 0; k <= j; ++k)
      coeffs.push_back(hamspec::q_coeff_closed_form(n, j, j - k).get_str());
  } else {
    auto q = hamspec::q_polys_by_recursion(n, j);
    for (int k = 0; k <= j; ++k)
      coeffs.push_back(q[static_cast<size_t>(j)].coeff(k).get_str());
  }
  emit({{"coefficients", coeffs},
        {"j", j},
        {"n", n},
        {"route", closed ? "closed-form" : "recursion"}});
  return 0;
}

int run_z4_spectrum(int r, int s, const std::vector<int>& type,
                    const std::string& format) {
  std::vector<hamspec::Z4EigenvalueRecord> recs;
  if (!type.empty()) {
    if (type.size() != 4)
      throw std::invalid_argument("--type takes four comma-separated counts");
    hamspec::TypeVector t{type[0], type[1], type[2], type[3]};
    recs.push_back({t, hamspec::eigenvalue_by_type(r, s, t), hamspec::multinomial(t)});
  } else {
    recs = hamspec::z4_spectrum(r, s);
  }
  if (format == "csv") {
    std::cout << "r,s,t0,t1,t2,t3,multiplicity,eigenvalue\n";
    for (const auto& rec : recs) {
      std::cout << r << ',' << s;
      for (int m = 0; m < 4; ++m) std::cout << ',' << rec.t[m];
      std::cout << ',' << rec.multiplicity.get_str() << ',' << rec.value.get_str()
                << "\n";
    }
  } else {
    for (const auto& rec : recs) {
      json t = json::array();
      for (int m = 0; m < 4; ++m) t.push_back(rec.t[m]);
      emit({{"eigenvalue", rec.value.get_str()},
            {"multiplicity", rec.multiplicity.get_str()},
            {"r", r},
            {"s", s},
            {"type", t}});
    }
  }
  return 0;
}

int run_z4_min(int r, int s, const std::string& format) {
  if (format == "csv") reject_csv();
  auto m = hamspec::lambda_min_scan(r, s, env_threads());
  json types = json::array();
  for (const auto& t : m.argmin_types) {
    json row = json::array();
    for (int i = 0; i < 4; ++i) row.push_back(t[i]);
    types.push_back(row);
  }
  emit({{"argmin_types", types},
        {"formula_value", hamspec::smallest_ev_formula(r, s).get_str()},
        {"lambda_min", m.lambda_min.get_str()},
        {"matches_formula", m.matches_formula},
        {"r", r},
        {"s", s}});
  return 0;
}

int run_chiq(const std::string& family, int n, int j, int r, int s,
             const std::string& format) {
  if (format == "csv") reject_csv();
  hamspec::BoundReport rep = family == "hamming"
                                 ? hamspec::hamming_chiq_lb(n, j)
                                 : hamspec::z4_chiq(r, s, env_threads());
  auto pairs = [](const std::vector<std::pair<std::string, double>>& xs) {
    json out = json::array();
    for (const auto& [method, value] : xs)
      out.push_back({{"method", method}, {"value", value}});
    return out;
  };
  emit({{"graph", rep.graph_id},
        {"lambda_max", rep.lambda_max.get_str()},
        {"lambda_min", rep.lambda_min.get_str()},
        {"lower_rates", pairs(rep.lower_rates)},
        {"notes", rep.notes},
        {"spectral_lower_bound", rep.spectral_lb.get_str()},
        {"upper_bounds", pairs(rep.upper_bounds)}});
  return 0;
}

int run_table_compare(const std::string& format) {
  const auto& ref = hamspec::published_rate_rows();
  std::vector<double> alphas;
  for (const auto& row : ref) alphas.push_back(row.alpha);
  const auto got = hamspec::lu_table(alphas);
  bool all_match = true;
  if (format == "csv") std::cout << "alpha,l,l_ref,u,u_ref,match\n";
  for (size_t i = 0; i < ref.size(); ++i) {
    const double l = hamspec::round3(got[i].l);
    const double u = hamspec::round3(got[i].u);
    const bool match = l == ref[i].l && u == ref[i].u;
    all_match = all_match && match;
    if (format == "csv") {
      char a[16];
      std::snprintf(a, sizeof(a), "%.2f", ref[i].alpha);
      std::cout << a << ',' << fixed3(l) << ',' << fixed3(ref[i].l) << ','
                << fixed3(u) << ',' << fixed3(ref[i].u) << ','
                << (match ? "true" : "false") << "\n";
    } else {
      emit({{"alpha", ref[i].alpha},
            {"l", l},
            {"l_ref", ref[i].l},
            {"match", match},
            {"u", u},
            {"u_ref", ref[i].u}});
    }
  }
  return all_match ? 0 : 1;
}

int run_verify(const std::string& level, int oracle_cap, bool have_cap,
               const std::string& format) {
  int z2max = 8, z4max = 8;
  if (have_cap) {
    if (oracle_cap < 4)
      throw std::invalid_argument("--oracle-cap must be at least 4");
    z2max = std::min(oracle_cap, hamspec::kDefaultZ2OracleCap);
    z4max = std::min(oracle_cap, hamspec::kDefaultZ4OracleCap);
    if (oracle_cap > 8)
      std::cerr << "note: oracle sweeps grow exponentially with n; caps beyond"
                   " 12 can take minutes\n";
  }
  const auto level_enum = level == "full" ? hamspec::CheckLevel::full
                                          : hamspec::CheckLevel::quick;
  const auto results =
      hamspec::run_checks(level_enum, env_threads(), z2max, z4max);
  int failures = 0;
  if (format == "csv") std::cout << "id,passed,seconds,description,detail\n";
  for (const auto& r : results) {
    if (!r.passed) ++failures;
    if (format == "csv") {
      std::cout << csv_field(r.id) << ',' << (r.passed ? "true" : "false") << ','
                << fixed3(r.seconds) << ',' << csv_field(r.description) << ','
                << csv_field(r.detail) << "\n";
    } else {
      emit({{"description", r.description},
            {"detail", r.detail},
            {"id", r.id},
            {"passed", r.passed},
            {"seconds", r.seconds}});
    }
  }
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra of distance graphs on binary and quaternary spaces"};
  app.require_subcommand(1);

  std::string format = "json";
  int n = 0, j = 0, x = 0, r = 0, s = 0, oracle_cap = 0;
  std::vector<int> type;
  bool closed = false;
  std::string family, level = "quick";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* kraw = app.add_subcommand("krawtchouk", "evaluate K_j over the weight column");
  kraw->add_option("--n", n)->required();
  kraw->add_option("--j", j)->required();
  auto* xopt = kraw->add_option("--x", x, "single weight instead of the column");
  add_format(kraw);

  auto* hmin = app.add_subcommand("hamming-min", "smallest eigenvalue of H(n, j)");
  hmin->add_option("--n", n)->required();
  hmin->add_option("--j", j)->required();
  add_format(hmin);

  auto* qp = app.add_subcommand("qpoly", "coefficients of the j-th normalized polynomial");
  qp->add_option("--n", n)->required();
  qp->add_option("--j", j)->required();
  qp->add_flag("--closed-form", closed, "use the closed-form route");
  add_format(qp);

  auto* zsp = app.add_subcommand("z4-spectrum", "eigenvalue per type for the quaternary graph");
  zsp->add_option("--r", r)->required();
  zsp->add_option("--s", s)->required();
  zsp->add_option("--type", type, "single type t0,t1,t2,t3")->delimiter(',');
  add_format(zsp);

  auto* zmin = app.add_subcommand("z4-min", "smallest eigenvalue over all types");
  zmin->add_option("--r", r)->required();
  zmin->add_option("--s", s)->required();
  add_format(zmin);

  auto* cq = app.add_subcommand("chiq", "spectral colouring bounds for one graph");
  cq->add_option("--family", family)->required()->check(CLI::IsMember({"hamming", "z4"}));
  cq->add_option("--n", n);
  cq->add_option("--j", j);
  cq->add_option("--r", r);
  cq->add_option("--s", s);
  add_format(cq);

  auto* tc = app.add_subcommand("table-compare", "computed rate table against the pinned rows");
  add_format(tc);

  auto* vf = app.add_subcommand("verify", "run the cross-check registry");
  vf->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  auto* capopt = vf->add_option("--oracle-cap", oracle_cap,
                                "extend the oracle sweeps up to this n");
  add_format(vf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*kraw) return run_krawtchouk(n, j, x, xopt->count() > 0, format);
    if (*hmin) return run_hamming_min(n, j, format);
    if (*qp) return run_qpoly(n, j, closed, format);
    if (*zsp) return run_z4_spectrum(r, s, type, format);
    if (*zmin) return run_z4_min(r, s, format);
    if (*cq) {
      if (family == "hamming" && (cq->count("--n") == 0 || cq->count("--j") == 0))
        throw std::invalid_argument("chiq --family hamming needs --n and --j");
      if (family == "z4" && (cq->count("--r") == 0 || cq->count("--s") == 0))
        throw std::invalid_argument("chiq --family z4 needs --r and --s");
      return run_chiq(family, n, j, r, s, format);
    }
    if (*tc) return run_table_compare(format);
    if (*vf) return run_verify(level, oracle_cap, capopt->count() > 0, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal contract failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
