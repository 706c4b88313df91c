#include "kneading/markov.hpp"

#include <algorithm>
#include <numeric>

namespace kneading {

OrbitModel build_orbit(const KneadingWord& w) {
  const std::size_t n = w.size();
  if (n < 2) throw DomainError("orbit model needs a word of length >= 2");

  OrbitModel m{w, {}, {}, {}, 0, 0, is_admissible(w)};
  const SymbolSeq k = SymbolSeq::periodic(w);
  for (std::size_t i = 0; i < n; ++i) m.points.push_back(shift(k, i));

  std::vector<std::vector<Symbol>> prefixes;
  for (const auto& p : m.points) prefixes.push_back(p.prefix(2 * n));

  m.rho.resize(n);
  std::iota(m.rho.begin(), m.rho.end(), std::size_t{0});
  std::stable_sort(m.rho.begin(), m.rho.end(), [&](std::size_t a, std::size_t b) {
    return mt_compare(prefixes[a], prefixes[b]) == Order::LT;
  });
  for (std::size_t k2 = 0; k2 + 1 < n; ++k2)
    if (mt_compare(prefixes[m.rho[k2]], prefixes[m.rho[k2 + 1]]) != Order::LT)
      throw ConstructionError("orbit points of " + w.str() + " are not totally ordered");

  m.position.resize(n);
  for (std::size_t k2 = 0; k2 < n; ++k2) m.position[m.rho[k2]] = k2;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w[i] == Symbol::L) ++m.left_count;
    else ++m.right_count;
  }
  if (m.position[n - 1] != m.left_count)
    throw ConstructionError("turning point is not at the left/right split");
  return m;
}

namespace {

IntMatrix shift_matrix(std::size_t n) {
  IntMatrix omega(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) omega(i, i + 1) = 1;
  omega(n - 1, 0) = 1;
  return omega;
}

IntMatrix boundary_matrix(std::size_t n) {
  IntMatrix phi(n - 1, n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    phi(k, k) = -1;
    phi(k, k + 1) = 1;
  }
  return phi;
}

}  // namespace

TheoremMatrices build_matrices(const OrbitModel& m) {
  const std::size_t n = m.period();
  const KneadingWord& w = m.word;
  TheoremMatrices t;

  t.omega = shift_matrix(n);

  t.pi = IntMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) t.pi(k, m.rho[k]) = 1;

  t.phi = boundary_matrix(n);
  t.eta = t.phi * t.pi;

  t.gamma = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    t.gamma(i, i) += value(w[i]);
    // (n,n) is hit by both clauses; e_n = 0 makes them agree.
    if (i + 1 < n) t.gamma(i, n - 1) = -value(w[i]);
  }
  if (t.gamma(n - 1, n - 1) != 0) throw ConstructionError("gamma corner must vanish");
  t.theta = t.gamma * t.omega;

  t.beta = IntMatrix(n - 1, n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) t.beta(k, k) = k < m.left_count ? 1 : -1;

  const IntMatrix eta_t = t.eta.transpose();
  const RatMatrix gram_inv = inverse(RatMatrix(t.eta * eta_t));
  const RatMatrix alpha_q = RatMatrix(t.eta * t.omega * eta_t) * gram_inv;
  if (!alpha_q.is_integral()) throw ConstructionError("alpha is not integral for " + w.str());
  t.alpha = alpha_q.to_integer();
  t.A = t.beta * t.alpha;

  t.Y = IntMatrix::identity(n);
  for (std::size_t j = 0; j + 1 < n; ++j) t.Y(n - 1, j) = -1;

  t.inc = IntMatrix(n, n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) t.inc(k, k) = 1;

  t.X = eta_t.block(0, 0, n - 1, n - 1);
  if (!is_unimodular(t.X)) throw ConstructionError("X is not unimodular for " + w.str());
  if (t.Y * t.inc * t.X != eta_t) throw ConstructionError("eta^T != Y inc X for " + w.str());

  t.Aprime = t.X * t.A.transpose() * unimodular_inverse(t.X);
  t.thetaprime = unimodular_inverse(t.Y) * t.theta.transpose() * t.Y;
  return t;
}

IntMatrix transition_matrix(const OrbitModel& m) {
  const std::size_t n = m.period();
  IntMatrix a(n - 1, n - 1);
  auto image_position = [&](std::size_t k) { return m.position[(m.rho[k] + 1) % n]; };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Orientation only swaps the endpoints; the covered range is the same.
    const std::size_t p = image_position(k), q = image_position(k + 1);
    for (std::size_t j = std::min(p, q); j < std::max(p, q); ++j) a(k, j) = 1;
  }
  return a;
}

bool has_full_support(const IntMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    bool any = false;
    for (std::size_t c = 0; c < a.cols(); ++c) any = any || a(r, c) != 0;
    if (!any) return false;
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    bool any = false;
    for (std::size_t r = 0; r < a.rows(); ++r) any = any || a(r, c) != 0;
    if (!any) return false;
  }
  return true;
}

bool is_permutation_matrix(const IntMatrix& a) {
  if (!a.square() || !is_zero_one(a)) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    int row = 0, col = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      row += a(r, c) == 1;
      col += a(c, r) == 1;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

}  // namespace kneading
