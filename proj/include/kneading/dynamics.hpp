#pragma once

// Double-precision logistic family f(x) = mu x (1 - x), used to realise
// kneading words as actual superstable maps.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kneading/symbolic.hpp"

namespace kneading {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadMap {
 public:
  static constexpr double turning_point = 0.5;

  /// Throws std::domain_error unless 0 <= mu <= 4.
  explicit QuadMap(double mu);

  double mu() const { return mu_; }
  double operator()(double x) const { return mu_ * x * (1.0 - x); }

 private:
  double mu_;
};

/// k-fold composition; k = 0 returns x0.
double iterate(const QuadMap& f, double x0, std::size_t k);

/// Symbols of x0, f(x0), ..., f^(depth-1)(x0); C when within tol of c.
std::vector<Symbol> numeric_itinerary(const QuadMap& f, double x0, std::size_t depth, double tol);

struct SolverOptions {
  double tol = 1e-12;          // bisection width in mu
  double grid_step = 1e-4;     // bracket scan step over (2, 4]
  double c_tolerance = 1e-9;   // C detection in the confirming itinerary
};

struct SuperstableResult {
  double mu = 0.0;
  double residual = 0.0;  // |f^n(c) - c|
  bool word_confirmed = false;
  /// Numeric itinerary of f(c) over 2n symbols.
  std::vector<Symbol> itinerary;
  /// Other roots in (2, 4] whose itinerary also reproduces the word.
  std::size_t extra_confirmed_roots = 0;
};

/// Finds mu with f^n(c) = c whose kneading sequence is (w)^inf. Scans the
/// grid for sign changes of f^n(c) - c, bisects each bracket, and keeps the
/// first root whose itinerary of f(c) matches the word for 2n symbols.
/// Throws DomainError for n < 2 and SolverError when no root matches.
SuperstableResult find_superstable_mu(const KneadingWord& w, const SolverOptions& opts = {});

}  // namespace kneading
