#pragma once

// Symbols, kneading words, itineraries and the Milnor-Thurston order for
// unimodal maps with a single turning point c.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kneading {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation needs a longer word than it was given.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Side of the turning point. The numeric value is the sign of the local
/// orientation of the map: +1 left (increasing), -1 right (decreasing).
enum class Symbol : std::int8_t { R = -1, C = 0, L = +1 };

constexpr int value(Symbol s) { return static_cast<int>(s); }

/// Position along the interval: L < C < R.
constexpr int spatial_rank(Symbol s) {
  switch (s) {
    case Symbol::L: return 0;
    case Symbol::C: return 1;
    case Symbol::R: return 2;
  }
  return 1;
}

char to_char(Symbol s);
Symbol symbol_from_char(char ch);
/// Accepts "-1", "+1", "1", "0".
Symbol symbol_from_number(std::string_view token);

std::string render(std::span<const Symbol> symbols);
/// Comma-separated "-1,+1,0" form.
std::string render_numeric(std::span<const Symbol> symbols);

/// A period-n kneading sequence (e_1 ... e_n)^inf with e_n = C and no other C.
class KneadingWord {
 public:
  explicit KneadingWord(std::vector<Symbol> symbols);

  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }
  std::string str() const { return render(symbols_); }

  friend bool operator==(const KneadingWord&, const KneadingWord&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Parses "RLLRRC" or "-1,+1,+1,-1,-1,0". Surrounding whitespace is ignored.
KneadingWord parse_word(std::string_view text);

/// Eventually periodic sequence: preperiod followed by period repeated forever.
class SymbolSeq {
 public:
  SymbolSeq(std::vector<Symbol> preperiod, std::vector<Symbol> period);
  static SymbolSeq periodic(const KneadingWord& w);

  Symbol at(std::size_t k) const;
  std::vector<Symbol> prefix(std::size_t depth) const;
  const std::vector<Symbol>& preperiod() const { return preperiod_; }
  const std::vector<Symbol>& period() const { return period_; }

  /// Structural equality of the representation, not of the infinite sequence.
  friend bool operator==(const SymbolSeq&, const SymbolSeq&) = default;

 private:
  std::vector<Symbol> preperiod_;
  std::vector<Symbol> period_;
};

/// Drops the first i symbols. The result is kept in reduced form: a fully
/// consumed preperiod leaves a rotated period.
SymbolSeq shift(const SymbolSeq& seq, std::size_t i);

/// Entry k is the product of the first k+1 symbol values.
using ThetaPrefix = std::vector<int>;

ThetaPrefix invariant_coordinate(const SymbolSeq& seq, std::size_t depth);

enum class Order { LT, EQ, GT };

const char* to_string(Order o);

/// Signed (Milnor-Thurston) order over the common length of two finite
/// prefixes. A shared C before the first disagreement means both points
/// reach the turning point together and their futures coincide, so EQ.
Order mt_compare(std::span<const Symbol> a, std::span<const Symbol> b);
Order mt_compare(const SymbolSeq& a, const SymbolSeq& b, std::size_t depth);

/// Shift-maximality of (w)^inf in the signed order. Words of length 1 are
/// never admissible.
bool is_admissible(const KneadingWord& w);

/// All admissible words of length n, in lexicographic text order.
std::vector<KneadingWord> enumerate_admissible(std::size_t n);

}  // namespace kneading
