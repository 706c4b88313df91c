#pragma once

// K-groups of the Cuntz-Krieger algebra of a kneading transition matrix, and
// Bowen-Franks groups of 0-1 matrices.
//
// Two independent routes are computed: the closed form a = |1 + sum of the
// partial products e_1...e_l| and the Smith normal form of I - A^T.

#include <stdexcept>
#include <string>
#include <vector>

#include "kneading/intlinalg.hpp"
#include "kneading/markov.hpp"
#include "kneading/symbolic.hpp"

namespace kneading {

/// The closed form and the SNF route disagreed.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |1 + sum_{l=1}^{n-1} prod_{i=1}^{l} e_i|. Throws DomainError for n < 2.
BigInt closed_form_a(const KneadingWord& w);

struct KGroupReport {
  KneadingWord word;
  BigInt a_closed_form;
  AbelianGroup K0;
  AbelianGroup K1;
  AbelianGroup BF;
  bool irreducible = false;
  bool admissible = false;
  /// K0 = Z_a and K1 follows the a = 0 rule.
  bool closed_form_agrees = false;
};

/// K0 = coker(I - A^T), K1 = ker(I - A^T), BF = coker(I - A), with A the
/// interval-covering transition matrix. For admissible words a disagreement
/// with the closed form throws TheoremViolation; inadmissible words are not
/// realised by any map, so there it is only recorded in closed_form_agrees.
KGroupReport k_groups(const KneadingWord& w);

/// coker(I - A) for any square 0-1 matrix.
AbelianGroup bf_group(const IntMatrix& a);

/// Outcome of every check applied to one word by verify_word.
struct WordCheck {
  KneadingWord word;
  BigInt a;
  AbelianGroup K0;
  std::size_t kernel_rank = 0;
  bool irreducible = false;
  std::vector<std::string> failures;

  /// a = 0 with a strongly connected A. Reported separately: the implication
  /// a = 0 => reducible does not hold in general (RC, RLLRLRRC, ...).
  bool zero_a_irreducible() const { return a == 0 && irreducible; }

  bool ok() const { return failures.empty(); }
};

/// Runs the closed form vs SNF comparison, the K1 rank rule, the cokernel
/// bridge coker(I - A) = coker(I - theta), the SNF shape {a, 1, ..., 1} of
/// I - theta, and the proof's intertwining identities. Never throws on a
/// failed check; failures are collected with both computed values.
WordCheck verify_word(const KneadingWord& w);

struct SweepSummary {
  std::size_t words = 0;
  std::size_t zero_a_words = 0;
  std::vector<WordCheck> failures;
  std::vector<KneadingWord> zero_a_irreducible;
  std::vector<std::size_t> words_per_length;  // index n - 2

  bool ok() const { return failures.empty(); }
};

/// verify_word over every admissible word of length 2..n_max.
SweepSummary verify_sweep(std::size_t n_max);

}  // namespace kneading
