#include "kneading/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace kneading {

QuadMap::QuadMap(double mu) : mu_(mu) {
  if (!(mu >= 0.0 && mu <= 4.0)) throw std::domain_error("mu must lie in [0, 4]");
}

double iterate(const QuadMap& f, double x0, std::size_t k) {
  double x = x0;
  for (std::size_t i = 0; i < k; ++i) x = f(x);
  return x;
}

std::vector<Symbol> numeric_itinerary(const QuadMap& f, double x0, std::size_t depth, double tol) {
  std::vector<Symbol> out;
  out.reserve(depth);
  double x = x0;
  for (std::size_t k = 0; k < depth; ++k) {
    const double d = x - QuadMap::turning_point;
    if (std::abs(d) <= tol) out.push_back(Symbol::C);
    else out.push_back(d > 0 ? Symbol::R : Symbol::L);
    x = f(x);
  }
  return out;
}

namespace {

double return_gap(double mu, std::size_t n) {
  return iterate(QuadMap(mu), QuadMap::turning_point, n) - QuadMap::turning_point;
}

double bisect(double lo, double hi, std::size_t n, double tol) {
  double g_lo = return_gap(lo, n);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = return_gap(mid, n);
    if (g_mid == 0.0) return mid;
    if ((g_mid > 0) == (g_lo > 0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SuperstableResult find_superstable_mu(const KneadingWord& w, const SolverOptions& opts) {
  const std::size_t n = w.size();
  if (n < 2) throw DomainError("superstable search needs a word of length >= 2");
  if (!(opts.grid_step > 0.0) || !(opts.tol > 0.0)) throw std::invalid_argument("solver step and tolerance must be positive");

  const double lo = 2.0, hi = 4.0;
  const auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / opts.grid_step));
  auto grid = [&](std::size_t k) { return k == steps ? hi : lo + static_cast<double>(k) * opts.grid_step; };

  const std::vector<Symbol> expected = SymbolSeq::periodic(w).prefix(2 * n);
  std::optional<SuperstableResult> best;
  std::size_t extra = 0;

  double g_prev = return_gap(grid(0), n);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double mu_k = grid(k);
    const double g_k = return_gap(mu_k, n);
    double root;
    if (g_k == 0.0) root = mu_k;
    else if (g_prev != 0.0 && (g_prev > 0) != (g_k > 0)) root = bisect(grid(k - 1), mu_k, n, opts.tol);
    else {
      g_prev = g_k;
      continue;
    }
    g_prev = g_k;

    const QuadMap f(root);
    auto itinerary = numeric_itinerary(f, f(QuadMap::turning_point), 2 * n, opts.c_tolerance);
    if (itinerary != expected) continue;
    if (best) {
      ++extra;
      continue;
    }
    best = SuperstableResult{root, std::abs(return_gap(root, n)), true, std::move(itinerary), 0};
  }

  if (!best) throw SolverError("no superstable parameter reproduces " + w.str());
  best->extra_confirmed_roots = extra;
  return *best;
}

}  // namespace kneading
