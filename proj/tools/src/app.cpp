#include "app.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "codec.hpp"
#include "families.hpp"
#include "report.hpp"
#include "seifinv/dedekind.hpp"
#include "seifinv/eta.hpp"
#include "seifinv/plumbing.hpp"
#include "seifinv/swfloer.hpp"
#include "verify.hpp"

namespace seifinv::cli {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ManifoldArgs {
  std::string brieskorn;
  std::string seifert;

  void attach(CLI::App* sub, bool allow_seifert) {
    auto* b = sub->add_option("--brieskorn", brieskorn, "Brieskorn triple a,b,c");
    if (allow_seifert) {
      auto* s = sub->add_option("--seifert", seifert, "Seifert invariant g:b:a1/b1,a2/b2,...");
      b->excludes(s);
    }
  }

  SeifertData resolve() const {
    if (!brieskorn.empty()) {
      const Triple t = parse_triple_arg(brieskorn);
      return seifinv::brieskorn(t[0], t[1], t[2]);
    }
    if (!seifert.empty()) return parse_seifert(seifert);
    throw Usage("one of --brieskorn or --seifert is required");
  }

  Triple triple() const {
    if (brieskorn.empty()) throw Usage("--brieskorn a,b,c is required");
    return parse_triple_arg(brieskorn);
  }
};

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    const std::string item = text.substr(start, end - start);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw Usage("expected an integer at position " + std::to_string(start) + " of '" + text + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// --- dedekind -------------------------------------------------------------

struct DedekindCmd {
  long beta = 0, alpha = 1;
  std::string x = "0", y = "0", method = "fast";
  bool reciprocity = false, as_json = false;

  void attach(CLI::App* sub) {
    sub->add_option("--beta", beta, "beta")->required();
    sub->add_option("--alpha", alpha, "alpha > 0, coprime to beta")->required();
    sub->add_option("--x", x, "rational x (p/q)");
    sub->add_option("--y", y, "rational y (p/q)");
    sub->add_option("--method", method, "fast, direct or both")->check(CLI::IsMember({"fast", "direct", "both"}));
    sub->add_flag("--reciprocity", reciprocity, "also print R(beta, alpha; x, y)");
    sub->add_flag("--json", as_json, "JSON output");
  }

  int run(std::ostream& out) const {
    const DRInput in(beta, alpha, Rational::parse(x), Rational::parse(y));
    json j{{"beta", beta}, {"alpha", alpha}, {"x", encode(in.x())}, {"y", encode(in.y())}};
    int code = kOk;
    std::optional<Rational> value;
    if (method != "direct") value = dr_sum_fast(in);
    if (method != "fast") {
      const Rational d = dr_sum_direct(in);
      if (value && *value != d) code = kMismatch;
      j["direct"] = encode(d);
      if (!value) value = d;
    }
    j["s"] = encode(*value);
    if (reciprocity) j["R"] = encode(reciprocity_R(in));
    if (as_json) {
      out << j.dump(2) << '\n';
    } else {
      out << value->str() << '\n';
      if (j.contains("direct") && method == "both") out << "direct " << j["direct"].get<std::string>() << '\n';
      if (reciprocity) out << "R " << j["R"].get<std::string>() << '\n';
    }
    return code;
  }
};

// --- eta ------------------------------------------------------------------

struct EtaCmd {
  ManifoldArgs m;
  std::string gammas, rho, at;
  unsigned digits = kDefaultDigits;

  void attach(CLI::App* sub) {
    m.attach(sub, true);
    sub->add_option("--gammas", gammas, "singularity data g1,g2,... of the coupling bundle");
    auto* r = sub->add_option("--rho", rho, "fiber holonomy p/q in [0,1); fixes the degree of the coupling bundle");
    sub->add_option("--at", at, "also evaluate the eta function at s");
    sub->add_option("--digits", digits, "decimal digits for --at")->check(CLI::Range(30u, 2000u));
    r->needs(sub->get_option("--gammas"));
  }

  int run(std::ostream& out) const {
    const SeifertData N = m.resolve();
    json j;
    j["manifold"] = encode(N);
    std::optional<EtaContext> ctx;
    if (gammas.empty()) {
      ctx = EtaContext::trivial_class(N);
    } else {
      const std::vector<long> g = parse_list(gammas);
      if (g.size() != N.alphas().size()) throw Usage("--gammas needs one entry per singular fiber");
      std::vector<long> reduced;
      for (std::size_t i = 0; i < g.size(); ++i) reduced.push_back(mod_floor(g[i], N.alphas()[i]));
      if (rho.empty()) {
        const VLineBundle L = VLineBundle::normalized(N.base(), 0, g);
        const EtaContext pull(N, L);
        j["coupling"] = encode(L);
        j["eta0_pullback"] = encode(eta_zero_pullback(pull));
        ctx = EtaContext::canonical(N, L);
      } else {
        // c = (deg K - 2 ell rho)/2 must leave an integral smooth degree
        const Rational r = Rational::parse(rho);
        const Rational c = (rational_degree(canonical_bundle(N.base())) - Rational(2) * N.ell() * r) / Rational(2);
        Rational smooth = c;
        for (std::size_t i = 0; i < reduced.size(); ++i) smooth -= Rational(reduced[i], N.alphas()[i]);
        if (!smooth.is_integer()) {
          throw Usage("no line V-bundle with these gammas has rho = " + r.str());
        }
        ctx = EtaContext(N, VLineBundle(N.base(), smooth.num().get_si(), reduced));
        if (!ctx->is_canonical()) throw Usage("--rho must lie in [0,1)");
      }
    }
    j["canonical"] = encode(ctx->bundle());
    j["rho"] = encode(ctx->rho());
    j["eta0"] = encode(eta_zero_flat(*ctx));
    if (is_homology_sphere(N)) {
      const Rational F = froyshov_F(N);
      j["F"] = encode(F);
      j["rohlin"] = (F / Rational(8)).is_integer();
    }
    if (!at.empty()) {
      const BigFloat s = BigFloat::parse(at, digits);
      const BigFloat v = eta_series(*ctx, s, digits);
      j["at"] = at;
      j["series"] = v.str();
      j["series_error"] = v.error();
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
};

// --- swf ------------------------------------------------------------------

struct SwfCmd {
  ManifoldArgs m;
  bool as_json = false, latex = false;

  void attach(CLI::App* sub) {
    m.attach(sub, false);
    auto* js = sub->add_flag("--json", as_json, "JSON output");
    auto* lx = sub->add_flag("--latex", latex, "LaTeX row");
    js->excludes(lx);
  }

  int run(std::ostream& out) const {
    const Triple t = m.triple();
    const BrieskornFloer f(t[0], t[1], t[2]);
    const LaurentPolynomial P = f.poincare_polynomial();
    if (P.shifted(1) != f.poincare_polynomial(-1)) return kMismatch;
    if (latex) {
      out << "\\Sigma(" << triple_str(t) << ") & P =" << P.latex() << " \\\\\n";
      return kOk;
    }
    if (as_json) {
      json pts = json::array();
      for (const auto& p : f.delta()) {
        pts.push_back({{"point", {p.x, p.y, p.z}},
                       {"energy", encode(f.energy(p))},
                       {"n_plus", f.grading_plus(p)},
                       {"n_minus", f.grading_minus(p)}});
      }
      out << json{{"triple", t}, {"P", encode(P)}, {"points", pts}, {"gap_m", gap_m(P)}}.dump(2) << '\n';
      return kOk;
    }
    out << "P = " << P.str() << '\n';
    for (const auto& p : f.delta()) {
      out << "  (" << p.x << "," << p.y << "," << p.z << ")  E=" << f.energy(p) << "  n+=" << f.grading_plus(p) << '\n';
    }
    return kOk;
  }
};

// --- froyshov -------------------------------------------------------------

struct FroyshovCmd {
  ManifoldArgs m;

  void attach(CLI::App* sub) { m.attach(sub, true); }

  int run(std::ostream& out) const {
    const SeifertData N = m.resolve();
    if (!is_homology_sphere(N)) throw Usage("froyshov: the manifold is not a homology sphere");
    const Rational F = froyshov_F(N);
    json j{{"manifold", encode(N)},
           {"eta0", encode(eta_zero_flat(EtaContext::trivial_class(N)))},
           {"signature_constant", encode(eta_signature_constant(N))},
           {"F", encode(F)},
           {"rohlin", (F / Rational(8)).is_integer()}};
    if (!m.brieskorn.empty()) {
      const ReportRow row = compute_row(m.triple());
      j["eight_m"] = row.eight_m;
      j["Z"] = encode(row.Z);
      j["P"] = encode(row.P);
    }
    out << j.dump(2) << '\n';
    return j["rohlin"].get<bool>() ? kOk : kMismatch;
  }
};

// --- plumbing -------------------------------------------------------------

struct PlumbingCmd {
  ManifoldArgs m;
  bool theta = false, diagonalize = false, matrix = false;

  void attach(CLI::App* sub) {
    m.attach(sub, true);
    sub->add_flag("--theta", theta, "compute Theta");
    sub->add_flag("--diagonalize", diagonalize, "split off <-1> summands");
    sub->add_flag("--matrix", matrix, "print the intersection matrix");
  }

  int run(std::ostream& out) const {
    const SeifertData N = m.resolve();
    const PlumbingGraph G = plumbing_graph(N);
    const IntegerQuadraticForm q = plumbing_form(G);
    json j{{"weights", G.weights}, {"rank", q.rank()}, {"determinant", q.determinant().get_str()},
           {"negative_definite", q.is_negative_definite()}, {"even", is_even(q)}};
    if (matrix || !(theta || diagonalize)) j["matrix"] = encode(q);
    if (theta) j["theta"] = theta_invariant(q);
    if (diagonalize) {
      const DiagonalSplit s = hnk_split_diagonalize(q);
      j["diagonal_rank"] = s.diagonal_rank;
      j["residual_rank"] = s.residual.rank();
      j["residual"] = encode(s.residual);
      j["residual_is_minus_e8"] = looks_like_minus_e8(s.residual);
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
};

// --- table ----------------------------------------------------------------

struct TableCmd {
  std::vector<std::string> triples;
  std::string family, range = "1..1", format = "text";
  unsigned threads = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--triples", triples, "explicit triples a,b,c ...");
    auto* f = sub->add_option("--family", family, "2,3,6k+1 | 2,3,6k-1 | 2,4k+1,4k+3 | 3,3s+1,3s+2");
    sub->add_option("--k,--s", range, "index range first..last")->needs(f);
    sub->add_option("--format", format, "text, json, csv or latex")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    sub->add_option("--threads", threads, "worker threads (0 = all cores)");
  }

  int run(std::ostream& out) const {
    std::vector<Triple> list;
    for (const auto& t : triples) list.push_back(parse_triple_arg(t));
    if (!family.empty()) {
      const auto more = expand(parse_family(family), parse_range(range));
      list.insert(list.end(), more.begin(), more.end());
    }
    const Report r = build_report(list, threads);
    check_consistency(r);
    if (format == "json") out << to_json(r).dump(2) << '\n';
    else if (format == "csv") out << to_csv(r);
    else if (format == "latex") out << to_latex(r);
    else out << to_text(r);
    return kOk;
  }
};

// --- verify ---------------------------------------------------------------

struct VerifyCmd {
  std::string suite;
  VerifyOptions opt;

  void attach(CLI::App* sub) {
    sub->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(verify_suites()));
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--cases", opt.cases, "random cases")->check(CLI::PositiveNumber);
    sub->add_option("--k-max", opt.k_max, "largest family index")->check(CLI::PositiveNumber);
  }

  int run(std::ostream& out) const { return run_verify(suite, opt, out).ok ? kOk : kMismatch; }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of Seifert fibered homology spheres", "seifinv"};
  app.require_subcommand(1);

  DedekindCmd dedekind;
  EtaCmd eta;
  SwfCmd swf;
  FroyshovCmd froyshov;
  PlumbingCmd plumbing;
  TableCmd table;
  VerifyCmd verify;
  auto* s_ded = app.add_subcommand("dedekind", "Dedekind-Rademacher sum s(beta, alpha; x, y)");
  auto* s_eta = app.add_subcommand("eta", "eta invariants of adiabatic Dirac operators");
  auto* s_swf = app.add_subcommand("swf", "Floer Poincare polynomial of a Brieskorn sphere");
  auto* s_fro = app.add_subcommand("froyshov", "F, 8m and Z of a homology sphere");
  auto* s_plu = app.add_subcommand("plumbing", "plumbing intersection form, Theta, diagonalization");
  auto* s_tab = app.add_subcommand("table", "table of F, 8m, Z over triples or a family");
  auto* s_ver = app.add_subcommand("verify", "run a property suite");
  dedekind.attach(s_ded);
  eta.attach(s_eta);
  swf.attach(s_swf);
  froyshov.attach(s_fro);
  plumbing.attach(s_plu);
  table.attach(s_tab);
  verify.attach(s_ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*s_ded) return dedekind.run(out);
    if (*s_eta) return eta.run(out);
    if (*s_swf) return swf.run(out);
    if (*s_fro) return froyshov.run(out);
    if (*s_plu) return plumbing.run(out);
    if (*s_tab) return table.run(out);
    if (*s_ver) return verify.run(out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace seifinv::cli
