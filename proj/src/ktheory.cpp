#include "kneading/ktheory.hpp"

#include <algorithm>

namespace kneading {

BigInt closed_form_a(const KneadingWord& w) {
  if (w.size() < 2) throw DomainError("K-theory needs a word of length >= 2");
  BigInt sum = 1;
  int product = 1;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    product *= value(w[i]);
    sum += product;
  }
  return abs(sum);
}

AbelianGroup bf_group(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("Bowen-Franks group needs a square matrix");
  if (!is_zero_one(a)) throw std::invalid_argument("Bowen-Franks group needs a 0-1 matrix");
  return cokernel(IntMatrix::identity(a.rows()) - a);
}

KGroupReport k_groups(const KneadingWord& w) {
  const BigInt a = closed_form_a(w);
  const OrbitModel orbit = build_orbit(w);
  const IntMatrix A = transition_matrix(orbit);
  const IntMatrix i_minus_at = IntMatrix::identity(A.rows()) - A.transpose();

  KGroupReport r{w,         a, cokernel(i_minus_at), AbelianGroup::free(kernel_rank(i_minus_at)),
                 bf_group(A), is_irreducible(A), orbit.admissible, false};
  r.closed_form_agrees = r.K0 == AbelianGroup::cyclic(a) && r.K1.free_rank == (a == 0 ? 1u : 0u);

  if (r.admissible && !r.closed_form_agrees)
    throw TheoremViolation(w.str() + ": K0 = " + r.K0.to_string() + ", K1 = " + r.K1.to_string() +
                           " but a = " + a.get_str());
  return r;
}

WordCheck verify_word(const KneadingWord& w) {
  WordCheck c{w, closed_form_a(w), {}, 0, false, {}};
  auto fail = [&](std::string what) { c.failures.push_back(std::move(what)); };

  const OrbitModel orbit = build_orbit(w);
  const TheoremMatrices t = build_matrices(orbit);
  const std::size_t n = w.size();
  const IntMatrix i_minus_at = IntMatrix::identity(n - 1) - t.A.transpose();

  c.K0 = cokernel(i_minus_at);
  c.kernel_rank = kernel_rank(i_minus_at);
  const AbelianGroup expected = AbelianGroup::cyclic(c.a);
  if (c.K0 != expected)
    fail("K0: SNF gives " + c.K0.to_string() + ", closed form gives " + expected.to_string());
  if (c.kernel_rank != (c.a == 0 ? 1u : 0u))
    fail("K1 rank " + std::to_string(c.kernel_rank) + " with a = " + c.a.get_str());

  const IntMatrix i_minus_theta = IntMatrix::identity(n) - t.theta;
  const AbelianGroup via_a = cokernel(IntMatrix::identity(n - 1) - t.A);
  const AbelianGroup via_theta = cokernel(i_minus_theta);
  if (via_a != via_theta)
    fail("bridge: coker(I-A) = " + via_a.to_string() + ", coker(I-theta) = " + via_theta.to_string());

  auto diag = smith_normal_form(i_minus_theta).diagonal();
  std::vector<BigInt> shape(n, BigInt(1));
  shape.front() = c.a;
  std::sort(diag.begin(), diag.end());
  std::sort(shape.begin(), shape.end());
  if (diag != shape) fail("SNF of I-theta is not {a, 1, ..., 1}");

  if (transition_matrix(orbit) != t.A) fail("interval covering disagrees with beta*alpha");
  if (t.A * t.eta != t.eta * t.theta) fail("A eta != eta theta");
  if (t.beta * t.eta != t.eta * t.gamma) fail("beta eta != eta gamma");
  if (t.alpha * t.eta != t.eta * t.omega) fail("alpha eta != eta omega");
  if (t.theta != t.gamma * t.omega) fail("theta != gamma omega");
  if (t.A != t.beta * t.alpha) fail("A != beta alpha");
  if (t.eta.transpose() != t.Y * t.inc * t.X) fail("eta^T != Y inc X");
  if (!is_unimodular(t.Y) || !is_unimodular(t.X)) fail("Y or X not unimodular");
  if (t.thetaprime.block(n - 1, 0, 1, n) != IntMatrix::zero(1, n)) fail("theta' last row nonzero");
  if (t.thetaprime.block(0, 0, n - 1, n - 1) != t.Aprime) fail("theta' top-left block != A'");
  if (!is_zero_one(t.A)) fail("beta*alpha is not a 0-1 matrix");
  if (!has_full_support(t.A)) fail("A has a zero row or column");
  // For n = 2 the only possible A is [[1]].
  if (n > 2 && is_permutation_matrix(t.A)) fail("A is a permutation matrix");

  c.irreducible = is_zero_one(t.A) && is_irreducible(t.A);
  return c;
}

SweepSummary verify_sweep(std::size_t n_max) {
  if (n_max < 2) throw DomainError("sweep needs n_max >= 2");
  SweepSummary s;
  for (std::size_t n = 2; n <= n_max; ++n) {
    auto words = enumerate_admissible(n);
    s.words_per_length.push_back(words.size());
    for (const auto& w : words) {
      WordCheck c = verify_word(w);
      ++s.words;
      if (c.a == 0) ++s.zero_a_words;
      if (c.zero_a_irreducible()) s.zero_a_irreducible.push_back(c.word);
      if (!c.ok()) s.failures.push_back(std::move(c));
    }
  }
  return s;
}

}  // namespace kneading
