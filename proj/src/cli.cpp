#include "kneading/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "kneading/dynamics.hpp"
#include "kneading/intlinalg.hpp"
#include "kneading/ktheory.hpp"
#include "kneading/markov.hpp"
#include "kneading/symbolic.hpp"

namespace kneading::cli {
namespace {

using nlohmann::json;

enum class Format { Text, Machine };

struct Options {
  Format format = Format::Text;
  int precision = 10;
  bool force = false;
};

// Integers that fit in a machine word become JSON numbers, larger ones strings.
json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const IntMatrix& m) {
  json data = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(to_json(t));
  return {{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

std::string decimal(double x, int precision) {
  std::ostringstream s;
  s << std::setprecision(precision) << x;
  return s.str();
}

void emit(std::ostream& out, const std::string& command, json inputs, json results) {
  json doc{{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}};
  out << doc.dump(2) << '\n';
}

KneadingWord checked_word(const std::string& text, const Options& opts, bool need_admissible) {
  KneadingWord w = parse_word(text);
  if (w.size() < 2) throw DomainError("word " + w.str() + " has period 1; need n >= 2");
  if (need_admissible && !opts.force && !is_admissible(w))
    throw DomainError("word " + w.str() + " is not admissible; pass --force to proceed anyway");
  return w;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- kgroups

int cmd_kgroups(const std::string& text, const Options& opts, std::ostream& out) {
  const KneadingWord w = checked_word(text, opts, true);
  const KGroupReport r = k_groups(w);
  if (opts.format == Format::Machine) {
    emit(out, "kgroups", {{"word", w.str()}, {"force", opts.force}},
         {{"a", to_json(r.a_closed_form)},
          {"K0", to_json(r.K0)},
          {"K1", to_json(r.K1)},
          {"BF", to_json(r.BF)},
          {"admissible", r.admissible},
          {"irreducible", r.irreducible},
          {"closed_form_agrees", r.closed_form_agrees}});
    return kOk;
  }
  out << "word         " << w.str() << '\n'
      << "admissible   " << yes_no(r.admissible) << '\n'
      << "a            " << r.a_closed_form.get_str() << '\n'
      << "K0           " << r.K0.to_string() << '\n'
      << "K1           " << r.K1.to_string() << '\n'
      << "BF           " << r.BF.to_string() << '\n'
      << "irreducible  " << yes_no(r.irreducible) << '\n'
      << "closed form  " << (r.closed_form_agrees ? "agrees" : "disagrees") << '\n';
  return kOk;
}

// --------------------------------------------------------------- matrices

const std::vector<std::string>& matrix_names() {
  static const std::vector<std::string> names{"A",   "theta", "omega", "phi", "pi", "eta",     "alpha",
                                              "beta", "gamma", "Y",     "inc", "X",  "Aprime", "thetaprime"};
  return names;
}

const IntMatrix& select(const TheoremMatrices& t, const std::string& name) {
  static const std::map<std::string, IntMatrix TheoremMatrices::*> table{
      {"A", &TheoremMatrices::A},         {"theta", &TheoremMatrices::theta},
      {"omega", &TheoremMatrices::omega}, {"phi", &TheoremMatrices::phi},
      {"pi", &TheoremMatrices::pi},       {"eta", &TheoremMatrices::eta},
      {"alpha", &TheoremMatrices::alpha}, {"beta", &TheoremMatrices::beta},
      {"gamma", &TheoremMatrices::gamma}, {"Y", &TheoremMatrices::Y},
      {"inc", &TheoremMatrices::inc},     {"X", &TheoremMatrices::X},
      {"Aprime", &TheoremMatrices::Aprime}, {"thetaprime", &TheoremMatrices::thetaprime}};
  auto it = table.find(name);
  if (it == table.end()) throw ParseError("unknown matrix '" + name + "'");
  return t.*(it->second);
}

int cmd_matrices(const std::string& text, std::vector<std::string> which, const Options& opts,
                 std::ostream& out) {
  const KneadingWord w = checked_word(text, opts, true);
  if (which.empty()) which = matrix_names();
  const TheoremMatrices t = build_matrices(build_orbit(w));
  for (const auto& name : which) (void)select(t, name);

  if (opts.format == Format::Machine) {
    json results = json::object();
    for (const auto& name : which) results[name] = to_json(select(t, name));
    emit(out, "matrices", {{"word", w.str()}, {"which", which}, {"force", opts.force}}, std::move(results));
    return kOk;
  }
  for (std::size_t i = 0; i < which.size(); ++i) {
    const IntMatrix& m = select(t, which[i]);
    if (i) out << '\n';
    out << which[i] << " (" << m.rows() << "x" << m.cols() << ")\n" << m.to_text();
  }
  return kOk;
}

// -------------------------------------------------------------- enumerate

int cmd_enumerate(int n, bool count_only, const Options& opts, std::ostream& out) {
  if (n < 2) throw DomainError("enumerate needs n >= 2");
  const auto words = enumerate_admissible(static_cast<std::size_t>(n));
  if (opts.format == Format::Machine) {
    json results{{"count", words.size()}};
    if (!count_only) {
      json list = json::array();
      for (const auto& w : words) list.push_back({{"word", w.str()}, {"a", to_json(closed_form_a(w))}});
      results["words"] = std::move(list);
    }
    emit(out, "enumerate", {{"n", n}, {"count_only", count_only}}, std::move(results));
    return kOk;
  }
  if (count_only) {
    out << words.size() << '\n';
    return kOk;
  }
  for (const auto& w : words) out << w.str() << "  a=" << closed_form_a(w).get_str() << '\n';
  return kOk;
}

// ----------------------------------------------------------------- verify

int cmd_verify(int n_max, const Options& opts, std::ostream& out) {
  if (n_max < 2) throw DomainError("verify needs n_max >= 2");
  const SweepSummary s = verify_sweep(static_cast<std::size_t>(n_max));

  if (opts.format == Format::Machine) {
    json per_length = json::array();
    for (std::size_t i = 0; i < s.words_per_length.size(); ++i)
      per_length.push_back({{"n", i + 2}, {"words", s.words_per_length[i]}});
    json failures = json::array();
    for (const auto& f : s.failures)
      failures.push_back({{"word", f.word.str()},
                          {"a", to_json(f.a)},
                          {"K0", to_json(f.K0)},
                          {"kernel_rank", f.kernel_rank},
                          {"messages", f.failures}});
    json remark = json::array();
    for (const auto& w : s.zero_a_irreducible) remark.push_back(w.str());
    emit(out, "verify", {{"n_max", n_max}},
         {{"words", s.words},
          {"zero_a_words", s.zero_a_words},
          {"per_length", std::move(per_length)},
          {"failures", std::move(failures)},
          {"zero_a_irreducible", std::move(remark)},
          {"passed", s.ok()}});
    return s.ok() ? kOk : kVerificationFailed;
  }

  out << "n    words\n";
  for (std::size_t i = 0; i < s.words_per_length.size(); ++i)
    out << std::setw(2) << i + 2 << "   " << s.words_per_length[i] << '\n';
  for (const auto& f : s.failures)
    for (const auto& msg : f.failures)
      out << "FAIL " << f.word.str() << " (a=" << f.a.get_str() << ", K0=" << f.K0.to_string()
          << ", ker rank=" << f.kernel_rank << "): " << msg << '\n';
  out << "checked " << s.words << " admissible words, n = 2.." << n_max << ", " << s.zero_a_words
      << " with a = 0\n";
  out << "a = 0 with irreducible A: " << s.zero_a_irreducible.size() << " word(s)";
  for (const auto& w : s.zero_a_irreducible) out << ' ' << w.str();
  out << '\n';
  out << (s.ok() ? "all checks passed\n" : "VERIFICATION FAILED\n");
  return s.ok() ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- find-mu

int cmd_find_mu(const std::string& text, double tol, double grid_step, const Options& opts, std::ostream& out) {
  const KneadingWord w = checked_word(text, opts, true);
  SolverOptions so;
  so.tol = tol;
  so.grid_step = grid_step;
  const SuperstableResult r = find_superstable_mu(w, so);
  const std::string mu = decimal(r.mu, opts.precision);
  const std::string residual = decimal(r.residual, opts.precision);
  if (opts.format == Format::Machine) {
    emit(out, "find-mu", {{"word", w.str()}, {"tol", decimal(tol, opts.precision)},
                          {"grid_step", decimal(grid_step, opts.precision)}},
         {{"mu", mu},
          {"residual", residual},
          {"word_confirmed", r.word_confirmed},
          {"itinerary", render(r.itinerary)},
          {"extra_confirmed_roots", r.extra_confirmed_roots}});
    return kOk;
  }
  out << "word            " << w.str() << '\n'
      << "mu              " << mu << '\n'
      << "residual        " << residual << '\n'
      << "word_confirmed  " << yes_no(r.word_confirmed) << '\n'
      << "itinerary       " << render(r.itinerary) << '\n';
  if (r.extra_confirmed_roots) out << "note: " << r.extra_confirmed_roots << " further confirmed root(s)\n";
  return kOk;
}

// ------------------------------------------------------------- admissible

int cmd_admissible(const std::string& text, const Options& opts, std::ostream& out) {
  const KneadingWord w = checked_word(text, opts, false);
  const bool ok = is_admissible(w);
  json violating = nullptr;
  const SymbolSeq k = SymbolSeq::periodic(w);
  for (std::size_t i = 1; i < w.size() && !ok; ++i)
    if (mt_compare(shift(k, i), k, 2 * w.size()) == Order::GT) {
      violating = i;
      break;
    }
  if (opts.format == Format::Machine) {
    emit(out, "admissible", {{"word", w.str()}}, {{"admissible", ok}, {"violating_shift", violating}});
    return kOk;
  }
  out << w.str() << ": " << (ok ? "admissible" : "not admissible");
  if (!ok) out << " (shift by " << violating.get<std::size_t>() << " exceeds the word)";
  out << '\n';
  return kOk;
}

// -------------------------------------------------------------- itinerary

int cmd_itinerary(double mu, std::optional<double> x0, int depth, double tol, const Options& opts,
                  std::ostream& out) {
  if (depth < 1) throw DomainError("depth must be >= 1");
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  const QuadMap f(mu);
  const double start = x0 ? *x0 : f(QuadMap::turning_point);
  if (!(start >= 0.0 && start <= 1.0)) throw DomainError("x0 must lie in [0, 1]");
  const std::string it = render(numeric_itinerary(f, start, static_cast<std::size_t>(depth), tol));
  if (opts.format == Format::Machine) {
    emit(out, "itinerary",
         {{"mu", decimal(mu, opts.precision)},
          {"x0", decimal(start, opts.precision)},
          {"depth", depth},
          {"tol", decimal(tol, opts.precision)}},
         {{"itinerary", it}});
    return kOk;
  }
  out << it << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kneading sequences, Markov transition matrices and Cuntz-Krieger K-groups", "kneading"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--precision", opts.precision, "Significant digits for reals")->check(CLI::Range(1, 17));
  app.add_flag("--force", opts.force, "Proceed on inadmissible words");

  std::string word;
  auto* kgroups = app.add_subcommand("kgroups", "K0, K1 and Bowen-Franks group of a kneading word");
  kgroups->add_option("word", word, "Kneading word, e.g. RLLRRC or -1,+1,0")->required();

  std::vector<std::string> which;
  auto* matrices = app.add_subcommand("matrices", "Print the matrices of the Markov construction");
  matrices->add_option("word", word, "Kneading word")->required();
  matrices->add_option("--which", which, "Subset of A theta omega phi pi eta alpha beta gamma Y inc X Aprime thetaprime")
      ->delimiter(',');

  int n = 0;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List admissible words of length n");
  enumerate->add_option("n", n, "Word length")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the number of words");

  int n_max = 0;
  auto* verify = app.add_subcommand("verify", "Check the closed form against the SNF route for all n <= n_max");
  verify->add_option("n_max", n_max, "Largest word length")->required();

  double tol = 1e-12, grid_step = 1e-4;
  auto* find_mu = app.add_subcommand("find-mu", "Superstable logistic parameter for a kneading word");
  find_mu->add_option("word", word, "Kneading word")->required();
  find_mu->add_option("--tol", tol, "Bisection tolerance in mu")->capture_default_str();
  find_mu->add_option("--grid-step", grid_step, "Bracket scan step")->capture_default_str();

  auto* admissible = app.add_subcommand("admissible", "Shift-maximality test");
  admissible->add_option("word", word, "Kneading word")->required();

  double mu = 0.0;
  std::optional<double> x0;
  int depth = 20;
  double it_tol = 1e-9;
  auto* itinerary = app.add_subcommand("itinerary", "Numeric itinerary of a point under mu x (1 - x)");
  itinerary->add_option("--mu", mu, "Parameter in [0, 4]")->required();
  itinerary->add_option("--x0", x0, "Starting point; defaults to f(1/2)");
  itinerary->add_option("--depth", depth, "Number of symbols")->capture_default_str();
  itinerary->add_option("--tol", it_tol, "Distance from 1/2 counted as C")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  opts.format = format == "machine" ? Format::Machine : Format::Text;

  try {
    if (kgroups->parsed()) return cmd_kgroups(word, opts, out);
    if (matrices->parsed()) return cmd_matrices(word, which, opts, out);
    if (enumerate->parsed()) return cmd_enumerate(n, count_only, opts, out);
    if (verify->parsed()) return cmd_verify(n_max, opts, out);
    if (find_mu->parsed()) return cmd_find_mu(word, tol, grid_step, opts, out);
    if (admissible->parsed()) return cmd_admissible(word, opts, out);
    if (itinerary->parsed()) return cmd_itinerary(mu, x0, depth, it_tol, opts, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kSolverFailed;
  } catch (const TheoremViolation& e) {
    err << "THEOREM VIOLATION: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const ConstructionError& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kParseError;
}

}  // namespace kneading::cli
