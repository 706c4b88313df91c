#include <doctest.h>

#include <cmath>

#include "kneading/dynamics.hpp"

using namespace kneading;

namespace {

const double kGoldenMu = 1.0 + std::sqrt(5.0);

std::vector<Symbol> symbols(std::string_view text) {
  std::vector<Symbol> out;
  for (char ch : text) out.push_back(symbol_from_char(ch));
  return out;
}

}  // namespace

TEST_CASE("iterate") {
  const QuadMap full(4.0);
  CHECK(iterate(full, 0.5, 0) == 0.5);
  CHECK(iterate(full, 0.5, 1) == 1.0);
  CHECK(iterate(full, 0.5, 2) == 0.0);
  CHECK(iterate(QuadMap(kGoldenMu), 0.5, 2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(QuadMap(4.5), std::domain_error);
  CHECK_THROWS_AS(QuadMap(-0.1), std::domain_error);
}

TEST_CASE("QuadMap shape") {
  for (double mu : {0.5, 2.0, 3.7, 4.0}) {
    const QuadMap f(mu);
    for (int i = 0; i <= 100; ++i) {
      const double x = i / 100.0;
      CHECK(f(x) >= 0.0);
      CHECK(f(x) <= 1.0);
      if (mu > 0 && i < 50) CHECK(f(x) < f(x + 0.01));
      if (mu > 0 && i >= 50 && i < 100) CHECK(f(x) > f(x + 0.01));
    }
  }
}

TEST_CASE("numeric_itinerary") {
  const QuadMap golden(kGoldenMu);
  CHECK(numeric_itinerary(golden, golden(0.5), 2, 1e-9) == symbols("RC"));
  CHECK(numeric_itinerary(QuadMap(4.0), 0.5, 1, 1e-9) == symbols("C"));
  CHECK(numeric_itinerary(QuadMap(4.0), 0.1, 3, 1e-9) == symbols("LLR"));
}

TEST_CASE("shift law for numeric itineraries") {
  const QuadMap f(3.9);
  for (int i = 1; i < 50; ++i) {
    const double x = i / 50.0 + 0.003;
    auto ix = numeric_itinerary(f, x, 21, 1e-9);
    auto ifx = numeric_itinerary(f, f(x), 20, 1e-9);
    if (std::find(ix.begin(), ix.end(), Symbol::C) != ix.end()) continue;
    CHECK(std::vector<Symbol>(ix.begin() + 1, ix.end()) == ifx);
  }
}

TEST_CASE("find_superstable_mu") {
  auto rc = find_superstable_mu(parse_word("RC"));
  CHECK(rc.word_confirmed);
  CHECK(std::abs(rc.mu - kGoldenMu) < 1e-9);
  CHECK(rc.extra_confirmed_roots == 0);

  // mpmath bisection oracle (tests/oracles/oracle.py)
  auto rlc = find_superstable_mu(parse_word("RLC"));
  CHECK(rlc.word_confirmed);
  CHECK(std::abs(rlc.mu - 3.8318740552833156) < 1e-8);
  CHECK(rlc.itinerary == symbols("RLCRLC"));
  const QuadMap f(rlc.mu);
  CHECK(numeric_itinerary(f, f(0.5), 6, 1e-9) == symbols("RLCRLC"));

  auto ex = find_superstable_mu(parse_word("RLLRRC"));
  CHECK(ex.word_confirmed);
  CHECK(ex.residual < 1e-9);

  CHECK_THROWS_AS(find_superstable_mu(parse_word("LRC")), SolverError);
  CHECK_THROWS_AS(find_superstable_mu(parse_word("C")), DomainError);
}

TEST_CASE("superstable parameters are ordered like their words") {
  // The signed order on kneading sequences is monotone in mu.
  std::vector<double> mus;
  for (const auto& w : enumerate_admissible(6)) mus.push_back(find_superstable_mu(w).mu);
  auto words = enumerate_admissible(6);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      auto o = mt_compare(SymbolSeq::periodic(words[i]), SymbolSeq::periodic(words[j]), 12);
      if (o == Order::LT) CHECK(mus[i] < mus[j]);
    }
}
