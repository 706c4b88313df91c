// Acceptance suite. Each criterion prints one PASS/FAIL line with its
// runtime; `--only N` runs a single criterion. Exit status is nonzero if any
// selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kneading/dynamics.hpp"
#include "kneading/intlinalg.hpp"
#include "kneading/ktheory.hpp"
#include "kneading/markov.hpp"
#include "kneading/symbolic.hpp"

using namespace kneading;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::vector<KneadingWord> admissible_up_to(std::size_t n_max) {
  std::vector<KneadingWord> out;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (auto& w : enumerate_admissible(n)) out.push_back(std::move(w));
  return out;
}

std::string join_words(const std::vector<std::string>& words, std::size_t limit) {
  std::string s;
  for (std::size_t i = 0; i < words.size() && i < limit; ++i) s += (i ? " " : "") + words[i];
  if (words.size() > limit) s += " ...";
  return s;
}

// -- 1 --------------------------------------------------------------------
Outcome example_fixture() {
  const IntMatrix A{{0, 1, 1, 0, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}, {0, 0, 1, 1, 0}, {1, 1, 0, 0, 0}};
  const IntMatrix theta{{1, -1, 0, 0, 0, 0}, {-1, 0, 1, 0, 0, 0}, {-1, 0, 0, 1, 0, 0},
                        {1, 0, 0, 0, -1, 0}, {1, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 0, 0}};
  const IntMatrix omega{{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
                        {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0}};
  const IntMatrix phi{{-1, 1, 0, 0, 0, 0}, {0, -1, 1, 0, 0, 0}, {0, 0, -1, 1, 0, 0},
                      {0, 0, 0, -1, 1, 0}, {0, 0, 0, 0, -1, 1}};
  const IntMatrix pi{{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1},
                     {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0}};

  const KneadingWord w = parse_word("RLLRRC");
  const TheoremMatrices t = build_matrices(build_orbit(w));
  const KGroupReport r = k_groups(w);

  Outcome o;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) {
      o.pass = false;
      o.detail += std::string(o.detail.empty() ? "" : "; ") + what;
    }
  };
  expect(t.A == A, "A differs");
  expect(t.theta == theta, "theta differs");
  expect(t.omega == omega, "omega differs");
  expect(t.phi == phi, "phi differs");
  expect(t.pi == pi, "pi differs");
  expect(r.K0 == AbelianGroup{0, {2}}, "K0 != Z_2");
  expect(r.K1.is_trivial(), "K1 != 0");
  if (o.pass) o.detail = "A, theta, omega, phi, pi bit-exact; K0 = " + r.K0.to_string() + ", K1 = " + r.K1.to_string();
  return o;
}

// -- 2 --------------------------------------------------------------------
Outcome theorem_sweep() {
  const auto words = admissible_up_to(12);
  std::vector<std::string> bad;
  std::size_t zero = 0;
  for (const auto& w : words) {
    const BigInt a = closed_form_a(w);
    const IntMatrix A = build_matrices(build_orbit(w)).A;
    const IntMatrix m = IntMatrix::identity(A.rows()) - A.transpose();
    const bool k0_ok = cokernel(m) == AbelianGroup::cyclic(a);
    const bool k1_ok = (kernel_rank(m) == 1) == (a == 0) && kernel_rank(m) <= 1;
    if (a == 0) ++zero;
    if (!k0_ok || !k1_ok) bad.push_back(w.str());
  }
  std::ostringstream d;
  d << words.size() << " admissible words n = 2..12, " << zero << " with a = 0";
  if (!bad.empty()) d << "; violations: " << join_words(bad, 10);
  return {bad.empty() && words.size() == 379, d.str()};
}

// -- 3 --------------------------------------------------------------------
Outcome proof_identities() {
  const auto words = admissible_up_to(10);
  std::vector<std::string> bad;
  for (const auto& w : words) {
    const std::size_t n = w.size();
    const TheoremMatrices t = build_matrices(build_orbit(w));
    bool ok = t.A * t.eta == t.eta * t.theta && t.beta * t.eta == t.eta * t.gamma &&
              t.alpha * t.eta == t.eta * t.omega && t.theta == t.gamma * t.omega && t.A == t.beta * t.alpha &&
              t.eta.transpose() == t.Y * t.inc * t.X && is_unimodular(t.Y) && is_unimodular(t.X) &&
              t.thetaprime.block(n - 1, 0, 1, n) == IntMatrix::zero(1, n) &&
              t.thetaprime.block(0, 0, n - 1, n - 1) == t.Aprime;

    auto diag = smith_normal_form(IntMatrix::identity(n) - t.theta).diagonal();
    std::vector<BigInt> shape(n, BigInt(1));
    shape[0] = closed_form_a(w);
    std::sort(diag.begin(), diag.end());
    std::sort(shape.begin(), shape.end());
    ok = ok && diag == shape;
    if (!ok) bad.push_back(w.str());
  }
  std::ostringstream d;
  d << words.size() << " admissible words n = 2..10";
  if (!bad.empty()) d << "; violations: " << join_words(bad, 10);
  return {bad.empty(), d.str()};
}

// -- 4 --------------------------------------------------------------------
Outcome cokernel_bridge() {
  const auto words = admissible_up_to(10);
  std::vector<std::string> bad;
  for (const auto& w : words) {
    const std::size_t n = w.size();
    const TheoremMatrices t = build_matrices(build_orbit(w));
    if (cokernel(IntMatrix::identity(n - 1) - t.A) != cokernel(IntMatrix::identity(n) - t.theta))
      bad.push_back(w.str());
  }
  std::ostringstream d;
  d << words.size() << " admissible words n = 2..10";
  if (!bad.empty()) d << "; violations: " << join_words(bad, 10);
  return {bad.empty(), d.str()};
}

// -- 5 --------------------------------------------------------------------
Outcome zero_a_reducible() {
  const auto words = admissible_up_to(12);
  std::vector<std::string> counterexamples;
  std::size_t zero = 0;
  for (const auto& w : words) {
    if (closed_form_a(w) != 0) continue;
    ++zero;
    if (is_irreducible(build_matrices(build_orbit(w)).A)) counterexamples.push_back(w.str());
  }
  std::ostringstream d;
  d << zero << " words with a = 0 (n = 2..12)";
  if (!counterexamples.empty())
    d << "; " << counterexamples.size() << " have a strongly connected A: " << join_words(counterexamples, 6);
  return {counterexamples.empty(), d.str()};
}

// -- 6 --------------------------------------------------------------------
Outcome snf_properties() {
  std::mt19937 rng(6);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::size_t square_nonsingular = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    const SmithForm sf = smith_normal_form(m);
    const auto d = sf.diagonal();
    auto fail = [&](const std::string& what) {
      return Outcome{false, "trial " + std::to_string(trial) + " (" + std::to_string(r) + "x" + std::to_string(c) + "): " + what};
    };
    if (sf.U * m * sf.V != sf.D) return fail("U M V != D");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j && sf.D(i, j) != 0) return fail("D not diagonal");
    if (!is_unimodular(sf.U) || !is_unimodular(sf.V)) return fail("U or V not unimodular");
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] < 0) return fail("negative diagonal");
      if (k + 1 < d.size() && d[k] == 0 && d[k + 1] != 0) return fail("zero before nonzero");
      if (k + 1 < d.size() && d[k] != 0 && !mpz_divisible_p(d[k + 1].get_mpz_t(), d[k].get_mpz_t()))
        return fail("divisibility chain broken");
    }
    if (smith_normal_form(m.transpose()).diagonal() != d) return fail("transpose changes the diagonal");
    if (r == c) {
      const BigInt det = determinant(m);
      if (det != 0) {
        ++square_nonsingular;
        BigInt prod = 1;
        for (const auto& v : d) prod *= v;
        if (abs(det) != prod) return fail("|det| != product of diagonal");
      }
    }
  }
  return {true, "500 random matrices, " + std::to_string(square_nonsingular) + " square nonsingular"};
}

// -- 7 --------------------------------------------------------------------
Outcome dynamics_cross_validation() {
  const auto words = admissible_up_to(8);
  std::vector<std::string> bad;
  for (const auto& w : words) {
    try {
      const SuperstableResult r = find_superstable_mu(w);
      const QuadMap f(r.mu);
      const auto it = numeric_itinerary(f, f(QuadMap::turning_point), 2 * w.size(), 1e-9);
      const auto expected = SymbolSeq::periodic(w).prefix(2 * w.size());
      if (!r.word_confirmed || r.residual >= 1e-9 || it != expected) bad.push_back(w.str());
    } catch (const SolverError&) {
      bad.push_back(w.str() + "(no root)");
    }
  }
  const double mu_rc = find_superstable_mu(parse_word("RC")).mu;
  const double err_rc = std::abs(mu_rc - (1.0 + std::sqrt(5.0)));
  std::ostringstream d;
  d << words.size() << " admissible words n = 2..8; |mu(RC) - (1+sqrt 5)| = " << err_rc;
  if (!bad.empty()) d << "; failures: " << join_words(bad, 10);
  return {bad.empty() && err_rc < 1e-9, d.str()};
}

// -- 8 --------------------------------------------------------------------
Outcome monotonicity() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> mu_dist(3.0, 4.0), x_dist(0.0, 1.0);
  int trials = 0, violations = 0, skipped = 0;
  while (trials < 1000) {
    const QuadMap f(mu_dist(rng));
    double x = x_dist(rng), y = x_dist(rng);
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    const auto ix = numeric_itinerary(f, x, 30, 1e-9);
    const auto iy = numeric_itinerary(f, y, 30, 1e-9);
    auto has_c = [](const std::vector<Symbol>& s) { return std::find(s.begin(), s.end(), Symbol::C) != s.end(); };
    if (has_c(ix) || has_c(iy)) {
      ++skipped;
      continue;
    }
    ++trials;
    if (mt_compare(ix, iy) == Order::GT) ++violations;
  }
  return {violations == 0, std::to_string(trials) + " trials, " + std::to_string(violations) + " violations, " +
                               std::to_string(skipped) + " skipped for C"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "Example 1 fixture", 1.0, example_fixture},
      {2, "Theorem 1 exhaustive sweep n <= 12", 60.0, theorem_sweep},
      {3, "proof-construction identities n <= 10", 30.0, proof_identities},
      {4, "cokernel bridge n <= 10", 30.0, cokernel_bridge},
      {5, "a = 0 implies reducible A", 60.0, zero_a_reducible},
      {6, "SNF engine properties", 30.0, snf_properties},
      {7, "dynamics cross-validation n <= 8", 120.0, dynamics_cross_validation},
      {8, "monotonicity of itineraries", 30.0, monotonicity},
  };

  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.budget_seconds) {
      o.pass = false;
      o.detail += "; over time budget of " + std::to_string(c.budget_seconds) + " s";
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " [" << secs
              << " s] " << o.detail << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return failed ? 1 : 0;
}
