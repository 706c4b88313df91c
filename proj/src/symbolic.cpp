#include "kneading/symbolic.hpp"

#include <algorithm>
#include <cctype>

namespace kneading {

char to_char(Symbol s) {
  switch (s) {
    case Symbol::R: return 'R';
    case Symbol::C: return 'C';
    case Symbol::L: return 'L';
  }
  return '?';
}

Symbol symbol_from_char(char ch) {
  switch (ch) {
    case 'R': return Symbol::R;
    case 'C': return Symbol::C;
    case 'L': return Symbol::L;
    default: break;
  }
  throw ParseError(std::string("unknown symbol '") + ch + "'");
}

Symbol symbol_from_number(std::string_view token) {
  if (token == "-1") return Symbol::R;
  if (token == "0" || token == "+0" || token == "-0") return Symbol::C;
  if (token == "+1" || token == "1") return Symbol::L;
  throw ParseError("unknown symbol '" + std::string(token) + "'");
}

std::string render(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(to_char(s));
  return out;
}

std::string render_numeric(std::span<const Symbol> symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out.push_back(',');
    switch (symbols[i]) {
      case Symbol::R: out += "-1"; break;
      case Symbol::C: out += "0"; break;
      case Symbol::L: out += "+1"; break;
    }
  }
  return out;
}

KneadingWord::KneadingWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw ParseError("empty kneading word");
  if (symbols_.back() != Symbol::C) throw ParseError("kneading word must end with C");
  auto first_c = std::find(symbols_.begin(), symbols_.end(), Symbol::C);
  if (first_c + 1 != symbols_.end())
    throw ParseError("C may only appear in the final position");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

KneadingWord parse_word(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty kneading word");

  std::vector<Symbol> symbols;
  bool numeric = text.find_first_of(",0123456789+-") != std::string_view::npos;
  if (numeric) {
    while (true) {
      auto comma = text.find(',');
      symbols.push_back(symbol_from_number(trim(text.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    for (char ch : text) symbols.push_back(symbol_from_char(ch));
  }
  return KneadingWord(std::move(symbols));
}

SymbolSeq::SymbolSeq(std::vector<Symbol> preperiod, std::vector<Symbol> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("SymbolSeq needs a nonempty period");
}

SymbolSeq SymbolSeq::periodic(const KneadingWord& w) {
  return SymbolSeq({}, {w.symbols().begin(), w.symbols().end()});
}

Symbol SymbolSeq::at(std::size_t k) const {
  if (k < preperiod_.size()) return preperiod_[k];
  return period_[(k - preperiod_.size()) % period_.size()];
}

std::vector<Symbol> SymbolSeq::prefix(std::size_t depth) const {
  std::vector<Symbol> out(depth);
  for (std::size_t k = 0; k < depth; ++k) out[k] = at(k);
  return out;
}

SymbolSeq shift(const SymbolSeq& seq, std::size_t i) {
  const auto& pre = seq.preperiod();
  if (i <= pre.size())
    return SymbolSeq({pre.begin() + static_cast<std::ptrdiff_t>(i), pre.end()}, seq.period());
  std::size_t r = (i - pre.size()) % seq.period().size();
  std::vector<Symbol> period = seq.period();
  std::rotate(period.begin(), period.begin() + static_cast<std::ptrdiff_t>(r), period.end());
  return SymbolSeq({}, std::move(period));
}

ThetaPrefix invariant_coordinate(const SymbolSeq& seq, std::size_t depth) {
  ThetaPrefix theta(depth);
  int product = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    product *= value(seq.at(k));
    theta[k] = product;
  }
  return theta;
}

const char* to_string(Order o) {
  switch (o) {
    case Order::LT: return "LT";
    case Order::EQ: return "EQ";
    case Order::GT: return "GT";
  }
  return "?";
}

Order mt_compare(std::span<const Symbol> a, std::span<const Symbol> b) {
  int sign = 1;
  const std::size_t depth = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < depth; ++k) {
    if (a[k] != b[k]) {
      int d = spatial_rank(a[k]) < spatial_rank(b[k]) ? -1 : 1;
      return d * sign < 0 ? Order::LT : Order::GT;
    }
    sign *= value(a[k]);
    if (sign == 0) return Order::EQ;
  }
  return Order::EQ;
}

Order mt_compare(const SymbolSeq& a, const SymbolSeq& b, std::size_t depth) {
  auto pa = a.prefix(depth);
  auto pb = b.prefix(depth);
  return mt_compare(pa, pb);
}

bool is_admissible(const KneadingWord& w) {
  const std::size_t n = w.size();
  if (n < 2) return false;
  const SymbolSeq k = SymbolSeq::periodic(w);
  for (std::size_t i = 1; i < n; ++i)
    if (mt_compare(shift(k, i), k, 2 * n) == Order::GT) return false;
  return true;
}

// An L-initial word loses to its own C-initial shift, so only words starting
// with R need to be tried.
std::vector<KneadingWord> enumerate_admissible(std::size_t n) {
  if (n < 2) throw DomainError("enumeration needs n >= 2");
  if (n > 40) throw DomainError("enumeration is limited to n <= 40");
  std::vector<KneadingWord> out;
  const std::size_t free_symbols = n - 2;
  const std::uint64_t count = std::uint64_t{1} << free_symbols;
  std::vector<Symbol> symbols(n);
  symbols.front() = Symbol::R;
  symbols.back() = Symbol::C;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    // Most significant bit first, L = 0 < R = 1, so increasing masks are in
    // lexicographic text order.
    for (std::size_t j = 0; j < free_symbols; ++j) {
      bool bit = (mask >> (free_symbols - 1 - j)) & 1U;
      symbols[1 + j] = bit ? Symbol::R : Symbol::L;
    }
    KneadingWord w(symbols);
    if (is_admissible(w)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace kneading
