#pragma once

// Markov partition cut out by a superstable critical orbit, and the chain of
// integer matrices relating the shift on orbit points (C0, rank n) to the
// transition matrix on partition intervals (C1, rank n-1).
//
// Indices are 0-based here; orbit point z_i of the usual 1-based notation is
// points[i-1], and z_n = c is the turning point.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kneading/intlinalg.hpp"
#include "kneading/symbolic.hpp"

namespace kneading {

/// Internal consistency failure; should be unreachable for valid words.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct OrbitModel {
  KneadingWord word;
  /// points[i] = shift((w)^inf, i)
  std::vector<SymbolSeq> points;
  /// rho[k] is the index of the k-th point from the left.
  std::vector<std::size_t> rho;
  /// position[i] is the spatial rank of points[i]; inverse of rho.
  std::vector<std::size_t> position;
  std::size_t left_count = 0;   // intervals left of c
  std::size_t right_count = 0;  // intervals right of c
  bool admissible = false;

  std::size_t period() const { return word.size(); }
  std::size_t interval_count() const { return word.size() - 1; }
};

/// Sorts the orbit points in the signed order. Throws DomainError for n < 2
/// and ConstructionError if two points compare equal.
OrbitModel build_orbit(const KneadingWord& w);

struct TheoremMatrices {
  IntMatrix omega;       // n x n, shift on orbit points
  IntMatrix pi;          // n x n, orbit order -> spatial order
  IntMatrix phi;         // (n-1) x n, boundary of the spatial path
  IntMatrix eta;         // (n-1) x n, phi * pi
  IntMatrix A;           // (n-1) x (n-1), beta * alpha
  IntMatrix alpha;       // (n-1) x (n-1), signed transition matrix
  IntMatrix beta;        // (n-1) x (n-1), diag(+1 x nL, -1 x nR)
  IntMatrix gamma;       // n x n
  IntMatrix theta;       // n x n, gamma * omega
  IntMatrix Y;           // n x n, identity with last row (-1, ..., -1, 1)
  IntMatrix inc;         // n x (n-1), identity over a zero row
  IntMatrix X;           // (n-1) x (n-1), eta^T without its last row
  IntMatrix Aprime;      // X * A^T * X^-1
  IntMatrix thetaprime;  // Y^-1 * theta^T * Y
};

/// Builds every matrix exactly. alpha is evaluated as
/// eta omega eta^T (eta eta^T)^-1 over Q and must come out integral.
TheoremMatrices build_matrices(const OrbitModel& m);

/// A from interval images alone: I_k = [x_k, x_k+1] is sent onto the interval
/// spanned by the successors of its endpoints.
IntMatrix transition_matrix(const OrbitModel& m);

/// No zero row, no zero column.
bool has_full_support(const IntMatrix& a);
bool is_permutation_matrix(const IntMatrix& a);

}  // namespace kneading
