// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
// Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "seifinv/dedekind.hpp"
#include "seifinv/eta.hpp"
#include "seifinv/laurent.hpp"
#include "seifinv/orbifold.hpp"
#include "seifinv/plumbing.hpp"
#include "seifinv/quadratic_form.hpp"
#include "seifinv/seifert.hpp"
#include "seifinv/swfloer.hpp"

using namespace seifinv;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.ok && secs >= limit_s) {
    c.ok = false;
    c.detail = "time limit exceeded";
  }
  if (!c.ok) ++failures;
  std::printf("%s %2d  %-44s %10.3f ms (limit %g ms)%s%s\n", c.ok ? "PASS" : "FAIL", id, name, secs * 1e3,
              limit_s * 1e3, c.detail.empty() ? "" : "  ", c.detail.c_str());
  std::fflush(stdout);
}

Rational R(long n, long d = 1) { return Rational(n, d); }

bool coprime3(long a, long b, long c) { return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1; }

std::string triple(long a, long b, long c) {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

long random_coprime(std::mt19937_64& rng, long a) {
  while (true) {
    const long b = std::uniform_int_distribution<long>(1, a - 1)(rng);
    if (std::gcd(a, b) == 1) return b;
  }
}

SeifertData random_fibration(std::mt19937_64& rng, bool odd_alphas) {
  while (true) {
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<long> alphas, betas;
    for (int i = 0; i < m; ++i) {
      long a = std::uniform_int_distribution<long>(2, 30)(rng);
      if (odd_alphas && a % 2 == 0) ++a;
      alphas.push_back(a);
      betas.push_back(random_coprime(rng, a));
    }
    SeifertData N(Orbifold(0, alphas), std::uniform_int_distribution<long>(-4, 1)(rng), betas);
    if (degree_zero_guard(N)) return N;
  }
}

VLineBundle random_bundle(std::mt19937_64& rng, const Orbifold& S) {
  std::vector<long> gammas;
  for (long a : S.alphas()) gammas.push_back(std::uniform_int_distribution<long>(0, a - 1)(rng));
  return VLineBundle(S, std::uniform_int_distribution<long>(-3, 3)(rng), gammas);
}

struct TableRow {
  long a, b, c, F, eight_m, Z;
  const char* P;
};

const TableRow kTable[] = {
    {2, 3, 5, 8, 0, 8, "0"},
    {2, 3, 7, -8, 8, 0, "T^-1"},
    {2, 3, 11, 0, 8, 8, "T^-1"},
    {2, 3, 13, 0, 0, 0, "T"},
    {2, 3, 17, 8, 0, 8, "T"},
    {3, 5, 7, 0, 8, 8, "T^-1 + T"},
    {3, 5, 11, 0, 8, 8, "T^-1 + T + T^5"},
    {3, 5, 13, 8, 0, 8, "T^3 + T^5 + T^9"},
    {5, 7, 9, 0, 0, 0, "2T + T^3 + T^7 + T^9 + T^25"},
};

void c1_worked_example(Check& c) {
  const DRInput in(4, 7, R(2, 7));
  c.require(dr_sum_direct(in) == R(-3, 28), "dr_sum_direct(4,7;2/7,0) != -3/28");
  c.require(dr_sum_fast(in) == R(-3, 28), "dr_sum_fast(4,7;2/7,0) != -3/28");
}

void c2_reciprocity(Check& c) {
  std::mt19937_64 rng(2);
  int done = 0;
  while (done < 500) {
    const long alpha = std::uniform_int_distribution<long>(1, 200)(rng);
    const long beta = std::uniform_int_distribution<long>(1, 200)(rng);
    if (std::gcd(alpha, beta) != 1) continue;
    const long qx = std::uniform_int_distribution<long>(1, 12)(rng), qy = std::uniform_int_distribution<long>(1, 12)(rng);
    const Rational x(std::uniform_int_distribution<long>(-2 * qx, 2 * qx)(rng), qx);
    const Rational y(std::uniform_int_distribution<long>(-2 * qy, 2 * qy)(rng), qy);
    const DRInput in(beta, alpha, x, y);
    const Rational direct = dr_sum_direct(in);
    const std::string at = "(" + std::to_string(beta) + "," + std::to_string(alpha) + ";" + x.str() + "," + y.str() + ")";
    c.require(direct + dr_sum_direct(in.swapped()) == reciprocity_R(in), "reciprocity fails at " + at);
    c.require(dr_sum_fast(in) == direct, "fast != direct at " + at);
    ++done;
  }
}

void c3_poincare_sphere(Check& c) {
  const SeifertData N = brieskorn(2, 3, 5);
  const EtaContext ctx = EtaContext::trivial_class(N);
  c.require(ctx.rho() == R(1, 2), "rho != 1/2");
  c.require(eta_zero_flat(ctx) == R(539, 360), "eta(D0) != 539/360");
  c.require(eta_signature_constant(N) == R(181, 90), "ell/3 - sign - 4S != 181/90");
  c.require(froyshov_F(N) == R(8), "F != 8");
}

void c4_table(Check& c) {
  for (const auto& row : kTable) {
    const BrieskornFloer fl(row.a, row.b, row.c);
    const bool ok = fl.froyshov_F() == R(row.F) && 8 * fl.gap_m() == row.eight_m && fl.froyshov_Z() == R(row.Z);
    c.require(ok, "row " + triple(row.a, row.b, row.c));
  }
}

void c5_polynomials(Check& c) {
  for (const auto& row : kTable) {
    const LaurentPolynomial got = poincare_polynomial(row.a, row.b, row.c);
    c.require(got == LaurentPolynomial::parse(row.P), triple(row.a, row.b, row.c) + ": got " + got.str());
  }
}

void c6_families(Check& c) {
  for (long k = 1; k <= 50; ++k) {
    const BrieskornFloer plus(2, 3, 6 * k + 1);
    const LaurentPolynomial want_plus =
        k % 2 ? LaurentPolynomial::monomial(-1, (k + 1) / 2) : LaurentPolynomial::monomial(1, k / 2);
    c.require(plus.poincare_polynomial() == want_plus, "P(2,3,6k+1) at k = " + std::to_string(k));
    c.require(plus.froyshov_F() == R(k % 2 ? -8 : 0), "F(2,3,6k+1) at k = " + std::to_string(k));
    c.require(plus.froyshov_Z() == R(0), "Z(2,3,6k+1) at k = " + std::to_string(k));

    const BrieskornFloer minus(2, 3, 6 * k - 1);
    const LaurentPolynomial want_minus =
        k % 2 == 0 ? LaurentPolynomial::monomial(-1, k / 2) : LaurentPolynomial::monomial(1, (k - 1) / 2);
    c.require(minus.poincare_polynomial() == want_minus, "P(2,3,6k-1) at k = " + std::to_string(k));
    c.require(minus.froyshov_F() == R(k % 2 ? 8 : 0), "F(2,3,6k-1) at k = " + std::to_string(k));
    c.require(minus.froyshov_Z() == R(8), "Z(2,3,6k-1) at k = " + std::to_string(k));
  }
}

void c7_ladders(Check& c) {
  const char* four_k[] = {"T", "2T + T^5", "3T + 2T^5 + T^13", "4T + 3T^5 + 2T^13 + T^25",
                          "5T + 4T^5 + 3T^13 + 2T^25 + T^41"};
  for (long k = 1; k <= 5; ++k) {
    const BrieskornFloer fl(2, 4 * k + 1, 4 * k + 3);
    c.require(fl.poincare_polynomial() == LaurentPolynomial::parse(four_k[k - 1]),
              "P(2,4k+1,4k+3) at k = " + std::to_string(k) + ": " + fl.poincare_polynomial().str());
    c.require(fl.froyshov_F() == R(0) && fl.froyshov_Z() == R(0), "F or Z nonzero at k = " + std::to_string(k));
  }
  const char* three_s[] = {"T", "2T + T^7", "3T + 2T^7 + T^19", "4T + 3T^7 + 2T^19 + T^37"};
  for (long s = 1; s <= 4; ++s) {
    const BrieskornFloer fl(3, 3 * s + 1, 3 * s + 2);
    c.require(fl.poincare_polynomial() == LaurentPolynomial::parse(three_s[s - 1]),
              "P(3,3s+1,3s+2) at s = " + std::to_string(s) + ": " + fl.poincare_polynomial().str());
    c.require(fl.froyshov_F() == R(0) && fl.froyshov_Z() == R(0), "F or Z nonzero at s = " + std::to_string(s));
  }
}

void c8_rohlin(Check& c) {
  std::mt19937_64 rng(8);
  int done = 0;
  while (done < 100) {
    const long a = std::uniform_int_distribution<long>(2, 46)(rng);
    const long b = std::uniform_int_distribution<long>(2, 100000 / (2 * a))(rng);
    if (100000 / (a * b) < 2) continue;
    const long cc = std::uniform_int_distribution<long>(2, 100000 / (a * b))(rng);
    if (!coprime3(a, b, cc)) continue;
    const Rational F = froyshov_F(brieskorn(a, b, cc));
    c.require((F / R(8)).is_integer(), "F(" + triple(a, b, cc) + ") = " + F.str());
    ++done;
  }
}

void c9_radius(Check& c) {
  std::mt19937_64 rng(9);
  int done = 0;
  while (done < 20) {
    const long a = std::uniform_int_distribution<long>(2, 40)(rng), b = std::uniform_int_distribution<long>(2, 40)(rng),
               cc = std::uniform_int_distribution<long>(2, 40)(rng);
    if (!coprime3(a, b, cc)) continue;
    const SeifertData N = brieskorn(a, b, cc);
    const Rational half = R(4) * eta_dirac_levicivita(N, R(1, 2)) + eta_signature(N, R(1, 2));
    const Rational tenth = R(4) * eta_dirac_levicivita(N, R(1, 10)) + eta_signature(N, R(1, 10));
    c.require(half == tenth, "r-dependence at " + triple(a, b, cc));
    ++done;
  }
}

void c10_series(Check& c) {
  std::mt19937_64 rng(10);
  const BigFloat zero(0L, 30);
  int pullback = 0, flat = 0;
  while (pullback < 10) {
    const SeifertData N = random_fibration(rng, true);
    std::vector<long> half;
    for (long a : N.alphas()) half.push_back((a - 1) / 2);
    const EtaContext ctx(N, VLineBundle(N.base(), -1, half));
    c.require(ctx.rho() == R(0), "square root of K has rho != 0");
    const double diff = abs_diff(eta_series(ctx, zero, 30), BigFloat(eta_zero_flat(ctx), 30));
    c.require(diff < 1e-26, "pullback branch differs by " + std::to_string(diff));
    ++pullback;
  }
  while (flat < 10) {
    const SeifertData N = random_fibration(rng, false);
    const EtaContext ctx = EtaContext::canonical(N, random_bundle(rng, N.base()));
    if (ctx.rho() == R(0)) continue;
    const double diff = abs_diff(eta_series(ctx, zero, 30), BigFloat(eta_zero_flat(ctx), 30));
    c.require(diff < 1e-26, "fractional branch differs by " + std::to_string(diff));
    ++flat;
  }
}

void c11_lattice(Check& c) {
  const IntMatrix A{{-1, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -3, 0}, {1, 0, 0, -7}};
  const auto q = plumbing_form(2, 3, 7);
  c.require(q.matrix() == A, "plumbing_form(2,3,7) != A");
  const long B[4][4] = {{42, 21, 14, 6}, {21, 11, 7, 3}, {14, 7, 5, 2}, {6, 3, 2, 1}};
  const auto inv = q.inverse();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c.require(inv[i][j] == R(-B[i][j]), "inverse differs from B");
  for (long k = 1; k <= 8; ++k) {
    const auto plus = plumbing_form(2, 3, 6 * k + 1);
    c.require(theta_invariant(plus) == 0, "Theta(2,3,6k+1) != 0 at k = " + std::to_string(k));
    c.require(hnk_split_diagonalize(plus).residual.rank() == 0, "Gamma(2,3,6k+1) not diagonal at k = " + std::to_string(k));
    const auto minus = plumbing_form(2, 3, 6 * k - 1);
    c.require(theta_invariant(minus) == 8, "Theta(2,3,6k-1) != 8 at k = " + std::to_string(k));
    const auto res = hnk_split_diagonalize(minus).residual;
    c.require(res.rank() == 8 && is_even(res), "residual of Gamma(2,3,6k-1) at k = " + std::to_string(k));
  }
  c.require(theta_invariant(IntegerQuadraticForm::minus_e8()) == 8, "Theta(-E8) != 8");
}

void c12_properties(Check& c) {
  std::mt19937_64 rng(12);
  // sawtooth oddness against the oracle
  for (int i = 0; i < 500; ++i) {
    const long d = std::uniform_int_distribution<long>(1, 60)(rng);
    const Rational x(std::uniform_int_distribution<long>(-300, 300)(rng), d);
    c.require(sawtooth(-x) == -sawtooth(x), "sawtooth not odd at " + x.str());
    c.require(sawtooth(x).gmp() == oracle::saw(x.gmp()), "sawtooth differs from oracle at " + x.str());
  }
  // degree additivity, Serre symmetry, ro vs ro1
  for (int i = 0; i < 300; ++i) {
    const SeifertData N = random_fibration(rng, false);
    const VLineBundle L1 = random_bundle(rng, N.base()), L2 = random_bundle(rng, N.base());
    c.require(rational_degree(add_bundles(L1, L2)) == rational_degree(L1) + rational_degree(L2), "deg not additive");
    const VLineBundle dual = add_bundles(canonical_bundle(N.base()), negate_bundle(L1));
    c.require(eta_zero_pullback(EtaContext(N, L1)) == eta_zero_pullback(EtaContext(N, dual)), "Serre symmetry fails");
    const EtaContext ctx = EtaContext::canonical(N, L1);
    if (ctx.rho() == R(0)) continue;
    const SingularData d{N.alphas(), N.betas(), ctx.bundle().gammas()};
    Rational excess = 0;
    for (long a : N.alphas()) excess += R(1) - R(1, a);
    const Rational rho = ctx.rho();
    const Rational common = excess / R(2) * (R(1) - R(2) * rho) - N.ell() * rho * (R(1) - rho) + N.ell() / R(6);
    const Rational ro = common - flat_double_sum(ctx);
    const Rational ro1 = common + R(static_cast<long>(N.alphas().size())) * rho - R(2) * S_rho(d, rho) - F_rho(d, rho);
    c.require(ro == ro1, "ro != ro1");
    c.require(eta_zero_flat(ctx) == ro, "eta_zero_flat != ro");
  }
  // odd exponents of P
  for (long a = 2; a * (a + 1) * (a + 2) <= 4000; ++a)
    for (long b = a + 1; a * b * (b + 1) <= 4000; ++b)
      for (long cc = b + 1; a * b * cc <= 4000; ++cc) {
        if (!coprime3(a, b, cc)) continue;
        const LaurentPolynomial P = poincare_polynomial(a, b, cc);
        for (const auto& term : P.terms()) c.require(term.first % 2 != 0, "even exponent in P(" + triple(a, b, cc) + ")");
      }
  // P1, P2, P4 for Theta
  const auto e8 = IntegerQuadraticForm::minus_e8();
  std::vector<IntegerQuadraticForm> forms{e8, direct_sum(e8, e8)};
  for (long n = 1; n <= 4; ++n) forms.push_back(IntegerQuadraticForm::diagonal(n, -1));
  for (long k = 1; k <= 4; ++k) {
    forms.push_back(plumbing_form(2, 3, 6 * k + 1));
    forms.push_back(plumbing_form(2, 3, 6 * k - 1));
  }
  for (const auto& q1 : forms) {
    const long t = theta_invariant(q1);
    const long rk = static_cast<long>(q1.rank());
    c.require(t % 8 == 0, "P1 fails");
    c.require(t <= rk && ((t == rk) == is_even(q1)), "P2 fails");
    if (rk <= 16) {
      c.require(theta_invariant(direct_sum(q1, e8)) == t + 8, "P4 fails with -E8");
      c.require(theta_invariant(direct_sum(q1, direct_sum(e8, e8))) == t + 16, "P4 fails with -E8 + -E8");
    }
  }
}

}  // namespace

int main() {
  criterion(1, "Dedekind worked example", 1e-3, c1_worked_example);
  criterion(2, "reciprocity oracle (500 cases)", 5, c2_reciprocity);
  criterion(3, "Poincare sphere eta, signature term, F", 10e-3, c3_poincare_sphere);
  criterion(4, "F, 8m, Z table (nine rows)", 1, c4_table);
  criterion(5, "nine Poincare polynomials", 1, c5_polynomials);
  criterion(6, "Sigma(2,3,6k+-1) families, k <= 50", 30, c6_families);
  criterion(7, "ladder regressions", 30, c7_ladders);
  criterion(8, "Rohlin congruence (100 triples)", 60, c8_rohlin);
  criterion(9, "radius independence (20 spheres)", 5, c9_radius);
  criterion(10, "series at s = 0 vs exact (20 contexts)", 30, c10_series);
  criterion(11, "lattice golden values", 60, c11_lattice);
  criterion(12, "invariant property suites", 60, c12_properties);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
