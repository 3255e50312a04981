#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qvol/constructions.hpp"
#include "qvol/ehrhart.hpp"
#include "qvol/qint.hpp"
#include "qvol/qseries.hpp"
#include "qvol/selberg.hpp"
#include "qvol/tableaux.hpp"
#include "qvol/verify.hpp"

using namespace qvol;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string format = "text";
  long max_extensions = 10000000L;
  int series_degree = 20;
  bool timings = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) parts.push_back(std::stoi(tok));
  }
  return Partition(parts);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

void emit(const Options& opt, const ordered_json& payload,
          const std::function<void(std::ostream&)>& text) {
  if (opt.format == "json") {
    std::cout << payload.dump(2) << "\n";
  } else {
    text(std::cout);
  }
}

int report_outcome(bool equal) {
  return equal ? kExitPass : kExitIdentityFailure;
}

// --- subcommand implementations ------------------------------------------

int run_qvol(const Options& opt, const std::string& poset_file) {
  std::vector<int> omega;
  Poset P = poset_from_json(read_file(poset_file), &omega);
  QRat v = QRat(maj_gf(P, omega, opt.max_extensions)) /
           QRat(q_factorial(P.size()));
  MLaurent one = MLaurent::constant(P.size(), QRat(1));
  QRat integral = qint_order_polytope(one, P, omega, Bound::zero(),
                                      Bound::one(), opt.max_extensions);
  ordered_json j;
  j["n"] = P.size();
  j["q_volume"] = v.to_string();
  j["equal"] = (v == integral);
  emit(opt, j, [&](std::ostream& os) {
    os << "q-volume = " << v.to_string() << "\n";
    os << "integral route agrees: " << (v == integral ? "yes" : "NO") << "\n";
  });
  return report_outcome(v == integral);
}

int run_simplex(const Options& opt, const std::string& pi_text, int r, int s) {
  std::vector<int> word = parse_ints(pi_text);
  int n = static_cast<int>(word.size());
  std::vector<int> chain(n);
  for (int i = 0; i < n; ++i) {
    if (word[i] < 1 || word[i] > n) throw std::runtime_error("bad pi");
    chain[i] = word[i] - 1;
  }
  WordStats st = word_stats(word);
  MLaurent one = MLaurent::constant(n, QRat(1));
  QRat lhs = qint_simplex(one, chain, Bound::qpow(r), Bound::qpow(s));
  QRat rhs = QRat::q_power(s * n + static_cast<int>(st.maj)) *
             q_pochhammer_scalar(QRat::q_power(r - s - st.des), n) /
             QRat(q_factorial(n));
  ordered_json j;
  j["pi"] = word;
  j["maj"] = st.maj;
  j["des"] = st.des;
  j["integral"] = lhs.to_string();
  j["closed_form"] = rhs.to_string();
  j["equal"] = (lhs == rhs);
  emit(opt, j, [&](std::ostream& os) {
    os << "maj = " << st.maj << ", des = " << st.des << "\n";
    os << "integral    = " << lhs.to_string() << "\n";
    os << "closed form = " << rhs.to_string() << "\n";
    os << "equal: " << (lhs == rhs ? "yes" : "NO") << "\n";
  });
  return report_outcome(lhs == rhs);
}

int run_lin_ext(const Options& opt, const std::string& poset_file) {
  std::vector<int> omega;
  Poset P = poset_from_json(read_file(poset_file), &omega);
  long count = count_linear_extensions(P, opt.max_extensions);
  QPoly gf = maj_gf(P, omega, opt.max_extensions);
  ordered_json j;
  j["n"] = P.size();
  j["extensions"] = count;
  j["maj_gf"] = gf.to_string();
  emit(opt, j, [&](std::ostream& os) {
    os << "linear extensions: " << count << "\n";
    os << "maj generating function: " << gf.to_string() << "\n";
  });
  return kExitPass;
}

int run_forest(const Options& opt, const std::string& poset_file,
               const std::string& a_text) {
  std::vector<int> omega;
  Poset F = poset_from_json(read_file(poset_file), &omega);
  if (!is_forest(F)) throw std::runtime_error("poset is not a forest");
  std::vector<int> a(F.size(), 0);
  if (!a_text.empty()) {
    a = parse_ints(a_text);
    if (static_cast<int>(a.size()) != F.size()) {
      throw std::runtime_error("exponent list length must match poset size");
    }
  }
  int n = F.size();
  MLaurent f = MLaurent::monomial(n, a, QRat(1));
  std::vector<Bound> lo(n, Bound::zero()), hi(n, Bound::one());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  QRat integral = qint_eliminate(f, F, lo, hi, order);
  auto hooks = forest_hooks(attach_leaves(F, a));
  QRat product(1L);
  for (int h : hooks) product *= QRat(q_number(h)).inverse();
  ordered_json j;
  j["n"] = n;
  j["hooks"] = hooks;
  j["integral"] = integral.to_string();
  j["hook_product"] = product.to_string();
  j["equal"] = (integral == product);
  emit(opt, j, [&](std::ostream& os) {
    os << "hooks:";
    for (int h : hooks) os << " " << h;
    os << "\n";
    os << "monomial integral = " << integral.to_string() << "\n";
    os << "hook product      = " << product.to_string() << "\n";
    os << "equal: " << (integral == product ? "yes" : "NO") << "\n";
  });
  return report_outcome(integral == product);
}

int run_selberg(const Options& opt, int n, int alpha, int beta, int m,
                const std::string& route) {
  QRat closed = selberg_closed_form(n, alpha, beta, m);
  QRat value;
  if (route == "direct") {
    value = selberg_direct(n, alpha - 1, beta - 1, m);
  } else if (route == "closed") {
    value = closed;
  } else if (route == "poset") {
    value = selberg_via_poset(n, alpha - 1, beta - 1, m, opt.max_extensions);
  } else if (route == "askey") {
    CubeCheck chk = selberg_cube_form(n, alpha, beta, m);
    ordered_json j;
    j["route"] = route;
    j["cube_integral"] = chk.lhs.to_string();
    j["closed_form"] = chk.rhs.to_string();
    j["equal"] = chk.equal();
    emit(opt, j, [&](std::ostream& os) {
      os << "cube integral = " << chk.lhs.to_string() << "\n";
      os << "closed form   = " << chk.rhs.to_string() << "\n";
      os << "equal: " << (chk.equal() ? "yes" : "NO") << "\n";
    });
    return report_outcome(chk.equal());
  } else {
    throw CLI::ValidationError("--route must be direct|closed|poset|askey");
  }
  ordered_json j;
  j["route"] = route;
  j["value"] = value.to_string();
  j["closed_form"] = closed.to_string();
  j["equal"] = (value == closed);
  emit(opt, j, [&](std::ostream& os) {
    os << "value (" << route << ") = " << value.to_string() << "\n";
    os << "closed form = " << closed.to_string() << "\n";
    os << "equal: " << (value == closed ? "yes" : "NO") << "\n";
  });
  return report_outcome(value == closed);
}

int run_schur_poset(const Options& opt, int n, const std::string& lambda_text,
                    const std::string& mu_text, bool with_zero_diag) {
  Partition lambda = parse_partition(lambda_text);
  Partition mu = parse_partition(mu_text);
  auto SP = build_schur_poset(n, lambda, with_zero_diag);
  std::string poset_json = poset_to_json(SP.poset, SP.omega);
  bool equal = true;
  QRat lhs(0L), rhs(0L);
  if (!with_zero_diag) {
    lhs = schur_poset_integral(SP, mu);
    for (int j = 1; j <= n; ++j) {
      lhs *= QRat(q_factorial(lambda.part(j) + n - j));
    }
    std::vector<int> e(n);
    for (int j = 1; j <= n; ++j) e[j - 1] = mu.part(j) + n - j;
    rhs = (schur(lambda, n) * vandermonde_bar(n)).substitute_qpowers(e);
    equal = (lhs == rhs);
  }
  ordered_json j;
  j["poset"] = ordered_json::parse(poset_json);
  if (!with_zero_diag) {
    j["scaled_integral"] = lhs.to_string();
    j["schur_value"] = rhs.to_string();
    j["equal"] = equal;
  }
  emit(opt, j, [&](std::ostream& os) {
    os << poset_json << "\n";
    if (!with_zero_diag) {
      os << "scaled integral = " << lhs.to_string() << "\n";
      os << "schur value     = " << rhs.to_string() << "\n";
      os << "equal: " << (equal ? "yes" : "NO") << "\n";
    }
  });
  return report_outcome(equal);
}

int run_rpp(const Options& opt, const std::string& nu_text, int a) {
  Partition nu = parse_partition(nu_text);
  int D = opt.series_degree;
  QRat product = gf_trace_nu(nu, a);
  QSeries rhs = expand_series(product, D);
  QSeries lhs(D);
  enumerate_rpp(
      RPPShape::normal(nu), D, nullptr,
      [&](const RPPGrid& g) {
        long d = rpp_size(g) +
                 static_cast<long>(a) * rpp_trace(RPPShape::normal(nu), g);
        if (d <= D) lhs.coeff(static_cast<int>(d)) += 1;
      },
      opt.max_extensions, D);
  bool equal = (lhs == rhs);
  ordered_json j;
  j["nu"] = nu_text;
  j["a"] = a;
  j["degree"] = D;
  j["lhs_series"] = lhs.to_string();
  j["rhs_series"] = rhs.to_string();
  j["product"] = product.to_string();
  j["equal"] = equal;
  emit(opt, j, [&](std::ostream& os) {
    os << "hook/durfee product = " << product.to_string() << "\n";
    os << "enumeration: " << lhs.to_string() << "\n";
    os << "expansion:   " << rhs.to_string() << "\n";
    os << "equal to degree " << D << ": " << (equal ? "yes" : "NO") << "\n";
  });
  return report_outcome(equal);
}

int run_gt(const Options& opt, int n, const std::string& lambda_text,
           const std::string& mu_text) {
  Partition lambda = parse_partition(lambda_text);
  Partition mu = parse_partition(mu_text);
  QRat closed = gf_gt(n, lambda, mu);  // checks both displayed forms
  QRat diag = gf_rpp_fixed_rdiag(n, lambda, mu);
  bool equal = (closed == diag);
  ordered_json j;
  j["n"] = n;
  j["lambda"] = lambda_text;
  j["mu"] = mu_text;
  j["gf"] = closed.to_string();
  j["fixed_diagonal_gf"] = diag.to_string();
  j["equal"] = equal;
  emit(opt, j, [&](std::ostream& os) {
    os << "triangular-array gf = " << closed.to_string() << "\n";
    os << "fixed-diagonal gf   = " << diag.to_string() << "\n";
    os << "equal: " << (equal ? "yes" : "NO") << "\n";
  });
  return report_outcome(equal);
}

int run_warnaar(const Options& opt, int n, const std::string& lambda_text,
                const std::string& mu_text, int alpha) {
  Partition lambda = parse_partition(lambda_text);
  Partition mu = parse_partition(mu_text);
  TransformCheck tc = warnaar_integral(n, lambda, mu, alpha);
  int D = opt.series_degree;
  ordered_json j;
  j["lhs"] = tc.lhs.to_string();
  j["rhs"] = tc.rhs.to_string();
  j["lhs_series"] = expand_series(tc.lhs, D).to_string();
  j["rhs_series"] = expand_series(tc.rhs, D).to_string();
  j["degree"] = D;
  j["equal"] = tc.equal();
  emit(opt, j, [&](std::ostream& os) {
    os << "integral     = " << tc.lhs.to_string() << "\n";
    os << "product form = " << tc.rhs.to_string() << "\n";
    os << "equal: " << (tc.equal() ? "yes" : "NO") << "\n";
  });
  return report_outcome(tc.equal());
}

int run_gansner(const Options& opt, int n, const std::string& lambda_text,
                int alpha) {
  Partition lambda = parse_partition(lambda_text);
  TransformCheck tc = gansner_integral(n, lambda, alpha);
  int D = opt.series_degree;
  ordered_json j;
  j["lhs"] = tc.lhs.to_string();
  j["rhs"] = tc.rhs.to_string();
  j["lhs_series"] = expand_series(tc.lhs, D).to_string();
  j["rhs_series"] = expand_series(tc.rhs, D).to_string();
  j["degree"] = D;
  j["equal"] = tc.equal();
  emit(opt, j, [&](std::ostream& os) {
    os << "integral     = " << tc.lhs.to_string() << "\n";
    os << "product form = " << tc.rhs.to_string() << "\n";
    os << "equal: " << (tc.equal() ? "yes" : "NO") << "\n";
  });
  return report_outcome(tc.equal());
}

int run_ehrhart(const Options& opt, const std::string& poset_file, int m,
                bool series, bool fit) {
  std::vector<int> omega;
  Poset P = poset_from_json(read_file(poset_file), &omega);
  if (fit) {
    QEhrhartPolynomial E = fit_ehrhart_polynomial(P, opt.max_extensions);
    ordered_json j;
    j["coefficients"] = ordered_json::array();
    for (const QRat& ck : E.c) j["coefficients"].push_back(ck.to_string());
    j["leading_limit"] = E.leading_limit().to_string();
    emit(opt, j, [&](std::ostream& os) {
      os << "coefficients of [m]_q^k, k = 0.." << E.degree() << ":\n";
      for (int k = 0; k < static_cast<int>(E.c.size()); ++k) {
        os << "  c[" << k << "] = " << E.c[k].to_string() << "\n";
      }
      os << "leading limit (q-volume) = " << E.leading_limit().to_string()
         << "\n";
    });
    return kExitPass;
  }
  if (series) {
    EhrhartSeries S = ehrhart_series(P, opt.max_extensions);
    ordered_json j;
    j["numerator"] = ordered_json::array();
    for (const QPoly& num : S.numerator) {
      j["numerator"].push_back(num.to_string());
    }
    j["denominator"] = "(t;q)_" + std::to_string(S.n + 1);
    emit(opt, j, [&](std::ostream& os) {
      os << "numerator coefficients of t^d:\n";
      for (int d = 0; d < static_cast<int>(S.numerator.size()); ++d) {
        os << "  t^" << d << ": " << S.numerator[d].to_string() << "\n";
      }
      os << "denominator: (t;q)_" << S.n + 1 << "\n";
    });
    return kExitPass;
  }
  QPoly E = eq_ehrhart(P, m, opt.max_extensions);
  QPoly B = eq_ehrhart_brute(P, m);
  bool equal = (E == B);
  ordered_json j;
  j["m"] = m;
  j["value"] = E.to_string();
  j["equal"] = equal;
  emit(opt, j, [&](std::ostream& os) {
    os << "E(" << m << ") = " << E.to_string() << "\n";
    os << "brute-force lattice count agrees: " << (equal ? "yes" : "NO")
       << "\n";
  });
  return report_outcome(equal);
}

int run_verify_all(const Options& opt, int max_size) {
  VerifyOptions vo;
  vo.max_extensions = opt.max_extensions;
  vo.series_degree = opt.series_degree;
  vo.max_size = max_size;
  std::vector<VerificationReport> reports = verify_all(vo);
  if (opt.format == "json") {
    std::cout << render_json(reports, opt.timings);
  } else {
    std::cout << render_text(reports, opt.timings);
  }
  return report_outcome(all_equal(reports));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact q-integration over order polytopes of posets, with verified "
      "product and series evaluations"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-extensions", opt.max_extensions,
                 "Cap on enumerated linear extensions / fillings")
      ->capture_default_str();
  app.add_option("--series-degree", opt.series_degree,
                 "Truncation degree for series comparisons")
      ->capture_default_str();
  app.add_flag("--timings", opt.timings,
               "Include elapsed times in verification reports");

  std::string poset_file, pi_text, a_text, lambda_text, mu_text, nu_text,
      route = "direct";
  int n = 1, r = 0, s = 0, alpha = 1, beta = 1, m = 1, a_stat = 0,
      ehr_m = 1, max_size = 8;
  bool with_zero_diag = false, ehr_series = false, ehr_fit = false;

  auto* qvol_cmd = app.add_subcommand(
      "qvol", "q-volume of the order polytope of a poset");
  qvol_cmd->add_option("--poset", poset_file, "Poset JSON file")->required();

  auto* simplex_cmd = app.add_subcommand(
      "simplex", "Truncated-simplex q-volume versus its closed form");
  simplex_cmd->add_option("--pi", pi_text, "Permutation, e.g. 2,1,3")
      ->required();
  simplex_cmd->add_option("--r", r, "Lower bound q^r")->capture_default_str();
  simplex_cmd->add_option("--s", s, "Upper bound q^s")->capture_default_str();

  auto* lin_ext_cmd = app.add_subcommand(
      "lin-ext", "Linear extensions and the maj generating function");
  lin_ext_cmd->add_option("--poset", poset_file, "Poset JSON file")
      ->required();

  auto* forest_cmd = app.add_subcommand(
      "forest", "Monomial integral over a forest versus the hook product");
  forest_cmd->add_option("--poset", poset_file, "Forest poset JSON file")
      ->required();
  forest_cmd->add_option("--a", a_text, "Monomial exponents, e.g. 1,0,2");

  auto* selberg_cmd = app.add_subcommand(
      "selberg", "Multi-parameter product evaluation by several routes");
  selberg_cmd->add_option("--n", n, "Number of variables")->required();
  selberg_cmd->add_option("--alpha", alpha, "alpha >= 1")
      ->capture_default_str();
  selberg_cmd->add_option("--beta", beta, "beta >= 1")->capture_default_str();
  selberg_cmd->add_option("--m", m, "Pair-interaction exponent")
      ->capture_default_str();
  selberg_cmd->add_option("--route", route, "direct|closed|poset|askey")
      ->capture_default_str();

  auto* schur_cmd = app.add_subcommand(
      "schur-poset", "Staircase-cell poset builder and its Schur volume");
  schur_cmd->add_option("--n", n, "Staircase size")->required();
  schur_cmd->add_option("--lambda", lambda_text, "Partition, e.g. 2,1");
  schur_cmd->add_option("--mu", mu_text, "Evaluation partition");
  schur_cmd->add_flag("--with-zero-diag", with_zero_diag,
                      "Keep the main-diagonal cells");

  auto* rpp_cmd = app.add_subcommand(
      "rpp", "Trace-weighted plane-partition sum versus the hook product");
  rpp_cmd->add_option("--nu", nu_text, "Shape, e.g. 3,2,2")->required();
  rpp_cmd->add_option("--a", a_stat, "Trace weight exponent")
      ->capture_default_str();

  auto* gt_cmd = app.add_subcommand(
      "gt", "Triangular-array generating function closed forms");
  gt_cmd->add_option("--n", n, "Array size")->required();
  gt_cmd->add_option("--lambda", lambda_text, "Shape partition");
  gt_cmd->add_option("--mu", mu_text, "Boundary partition");

  auto* warnaar_cmd = app.add_subcommand(
      "warnaar", "Double-Schur simplex integral versus its product form");
  warnaar_cmd->add_option("--n", n, "Number of variables")->required();
  warnaar_cmd->add_option("--lambda", lambda_text, "First partition");
  warnaar_cmd->add_option("--mu", mu_text, "Second partition");
  warnaar_cmd->add_option("--alpha", alpha, "alpha >= 1")
      ->capture_default_str();

  auto* gansner_cmd = app.add_subcommand(
      "gansner", "Single-determinant simplex integral versus its product "
                 "form");
  gansner_cmd->add_option("--n", n, "Number of variables")->required();
  gansner_cmd->add_option("--lambda", lambda_text, "Partition");
  gansner_cmd->add_option("--alpha", alpha, "alpha >= 1")
      ->capture_default_str();

  auto* ehrhart_cmd = app.add_subcommand(
      "ehrhart", "Lattice-point counting for dilated poset regions");
  ehrhart_cmd->add_option("--poset", poset_file, "Poset JSON file")
      ->required();
  ehrhart_cmd->add_option("--m", ehr_m, "Dilation factor")
      ->capture_default_str();
  ehrhart_cmd->add_flag("--series", ehr_series,
                        "Print the descent series numerator");
  ehrhart_cmd->add_flag("--fit", ehr_fit,
                        "Fit the counting polynomial in [m]_q");

  auto* verify_cmd =
      app.add_subcommand("verify-all", "Run the full verification suite");
  verify_cmd->add_option("--max-size", max_size,
                         "Size cap for the inserted-chain poset sweep")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (qvol_cmd->parsed()) return run_qvol(opt, poset_file);
    if (simplex_cmd->parsed()) return run_simplex(opt, pi_text, r, s);
    if (lin_ext_cmd->parsed()) return run_lin_ext(opt, poset_file);
    if (forest_cmd->parsed()) return run_forest(opt, poset_file, a_text);
    if (selberg_cmd->parsed()) {
      return run_selberg(opt, n, alpha, beta, m, route);
    }
    if (schur_cmd->parsed()) {
      return run_schur_poset(opt, n, lambda_text, mu_text, with_zero_diag);
    }
    if (rpp_cmd->parsed()) return run_rpp(opt, nu_text, a_stat);
    if (gt_cmd->parsed()) return run_gt(opt, n, lambda_text, mu_text);
    if (warnaar_cmd->parsed()) {
      return run_warnaar(opt, n, lambda_text, mu_text, alpha);
    }
    if (gansner_cmd->parsed()) {
      return run_gansner(opt, n, lambda_text, alpha);
    }
    if (ehrhart_cmd->parsed()) {
      return run_ehrhart(opt, poset_file, ehr_m, ehr_series, ehr_fit);
    }
    if (verify_cmd->parsed()) return run_verify_all(opt, max_size);
  } catch (const cap_exceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
