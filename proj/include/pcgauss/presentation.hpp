#pragma once

#include "pcgauss/errors.hpp"
#include "pcgauss/integer.hpp"

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcgauss {

// Generator indices are 0-based in the C++ interface and 1-based in every
// text format (presentation files, words on the command line).

struct GenPower {
  std::size_t gen;
  Integer exp;
  friend bool operator==(const GenPower&, const GenPower&) = default;
};

/// Right-hand side of a relation: strictly increasing generator indices,
/// nonzero exponents.
struct Tail {
  std::vector<GenPower> entries;
  friend bool operator==(const Tail&, const Tail&) = default;
};

/// An arbitrary product of generator powers, in any order.
struct Word {
  std::vector<GenPower> entries;
  friend bool operator==(const Word&, const Word&) = default;
};

using GenPair = std::pair<std::size_t, std::size_t>;  // (i, j) with j < i

/// Raw relation data of a polycyclic presentation.
///
///   conjugates[(i, j)]         g_i g_j    = g_j    * tail   (g_i^{g_j})
///   inverse_conjugates[(i, j)] g_i g_j^-1 = g_j^-1 * tail   (g_i^{g_j^-1})
///   powers[i]                  g_i^{r_i}  = tail
///
/// Missing conjugate entries mean g_i and g_j commute, missing powers mean
/// g_i^{r_i} = 1. An order of 0 stands for an infinite cyclic factor.
struct Relations {
  std::vector<Integer> orders;
  std::map<GenPair, Tail> conjugates;
  std::map<GenPair, Tail> inverse_conjugates;
  std::map<std::size_t, Tail> powers;
  friend bool operator==(const Relations&, const Relations&) = default;
};

/// A validated polycyclic presentation. Immutable; shared by every Element
/// bound to it.
class PcPresentation {
 public:
  /// Validates `rel` and throws ValidationError on the first violation.
  static std::shared_ptr<const PcPresentation> create(Relations rel) {
    validate(rel);
    return std::shared_ptr<const PcPresentation>(
        new PcPresentation(std::move(rel)));
  }

  PcPresentation(const PcPresentation&) = delete;
  PcPresentation& operator=(const PcPresentation&) = delete;

  std::size_t size() const { return rel_.orders.size(); }
  const Integer& order(std::size_t i) const { return rel_.orders[i]; }
  const std::vector<Integer>& orders() const { return rel_.orders; }
  bool is_infinite_at(std::size_t i) const { return rel_.orders[i] == 0; }
  const Relations& relations() const { return rel_; }

  struct TailRef {
    const Tail* tail = nullptr;
    bool commutative = false;  // entries pairwise commute
  };

  /// g_i^{g_j}; null tail when the pair commutes.
  const TailRef& conjugate(std::size_t i, std::size_t j) const {
    return conj_[i * size() + j];
  }
  /// g_i^{g_j^-1}; null tail when the pair commutes.
  const TailRef& inverse_conjugate(std::size_t i, std::size_t j) const {
    return inv_conj_[i * size() + j];
  }
  /// g_i^{r_i}; null tail for the identity.
  const TailRef& power(std::size_t i) const { return power_[i]; }

  bool commutes(std::size_t i, std::size_t j) const {
    if (i == j) return true;
    if (i < j) std::swap(i, j);
    return conjugate(i, j).tail == nullptr;
  }

  /// |G| = r_1 ... r_n, infinite if any r_i = 0.
  Cardinal group_order() const {
    Cardinal c = Cardinal::finite(1);
    for (const auto& r : rel_.orders)
      c *= r == 0 ? Cardinal::infinite() : Cardinal::finite(r);
    return c;
  }
  bool is_finite() const { return group_order().is_finite(); }

  /// Z^n: every order infinite and every pair commuting.
  bool is_free_abelian() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (rel_.orders[i] != 0) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (!commutes(i, j)) return false;
    }
    return true;
  }

  friend bool operator==(const PcPresentation& a, const PcPresentation& b) {
    return a.rel_ == b.rel_;
  }

 private:
  explicit PcPresentation(Relations rel) : rel_(std::move(rel)) {
    const std::size_t n = size();
    conj_.resize(n * n);
    inv_conj_.resize(n * n);
    power_.resize(n);
    for (const auto& [key, tail] : rel_.conjugates)
      if (!is_trivial(key.first, tail))
        conj_[key.first * n + key.second].tail = &tail;
    for (const auto& [key, tail] : rel_.inverse_conjugates)
      if (!is_trivial(key.first, tail))
        inv_conj_[key.first * n + key.second].tail = &tail;
    for (const auto& [i, tail] : rel_.powers)
      if (!tail.entries.empty()) power_[i].tail = &tail;
    auto mark = [this](TailRef& ref) {
      if (!ref.tail) return;
      ref.commutative = true;
      const auto& e = ref.tail->entries;
      for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = a + 1; b < e.size(); ++b)
          if (!commutes(e[b].gen, e[a].gen)) ref.commutative = false;
    };
    for (auto& r : conj_) mark(r);
    for (auto& r : inv_conj_) mark(r);
    for (auto& r : power_) mark(r);
  }

  static bool is_trivial(std::size_t i, const Tail& t) {
    return t.entries.size() == 1 && t.entries[0].gen == i &&
           t.entries[0].exp == 1;
  }

  static std::string pair_name(const char* kind, const GenPair& k) {
    return std::string(kind) + " " + std::to_string(k.first + 1) + " " +
           std::to_string(k.second + 1);
  }

  static void validate_tail(const Relations& rel, const Tail& tail,
                            std::size_t min_gen, const std::string& where) {
    const std::size_t n = rel.orders.size();
    std::size_t prev = 0;
    bool first = true;
    for (const auto& [gen, exp] : tail.entries) {
      if (gen >= n)
        throw ValidationError(where + ": generator " +
                              std::to_string(gen + 1) + " out of range");
      if (gen < min_gen)
        throw ValidationError(where + ": tail index " +
                              std::to_string(gen + 1) + " not > " +
                              std::to_string(min_gen));
      if (!first && gen <= prev)
        throw ValidationError(where +
                              ": tail indices not strictly increasing");
      if (exp == 0) throw ValidationError(where + ": zero exponent in tail");
      const Integer& r = rel.orders[gen];
      if (r > 0 && (exp < 0 || exp >= r))
        throw ValidationError(where + ": exponent " + exp.str() +
                              " of generator " + std::to_string(gen + 1) +
                              " outside [0, " + r.str() + ")");
      prev = gen;
      first = false;
    }
  }

  static void validate(const Relations& rel) {
    const std::size_t n = rel.orders.size();
    if (n == 0) throw ValidationError("presentation needs at least one generator");
    for (std::size_t i = 0; i < n; ++i)
      if (rel.orders[i] < 0)
        throw ValidationError("negative relative order for generator " +
                              std::to_string(i + 1));
    auto check_key = [n](const GenPair& k, const char* kind) {
      if (k.first >= n || k.second >= k.first)
        throw ValidationError(pair_name(kind, k) +
                              ": need 1 <= j < i <= n");
    };
    for (const auto& [k, tail] : rel.conjugates) {
      check_key(k, "conj");
      validate_tail(rel, tail, k.second + 1, pair_name("conj", k));
    }
    for (const auto& [k, tail] : rel.inverse_conjugates) {
      check_key(k, "invconj");
      validate_tail(rel, tail, k.second + 1, pair_name("invconj", k));
    }
    for (const auto& [i, tail] : rel.powers) {
      const std::string where = "power " + std::to_string(i + 1);
      if (i >= n) throw ValidationError(where + ": generator out of range");
      if (rel.orders[i] == 0)
        throw ValidationError(where + ": generator has infinite order");
      validate_tail(rel, tail, i + 1, where);
    }
    // Collection rewrites g_i g_j^-1 only when g_j can carry a negative
    // exponent, i.e. when r_j = 0.
    for (std::size_t j = 0; j < n; ++j) {
      if (rel.orders[j] != 0) continue;
      for (std::size_t i = j + 1; i < n; ++i) {
        auto c = rel.conjugates.find({i, j});
        auto ic = rel.inverse_conjugates.find({i, j});
        const bool conj_trivial =
            c == rel.conjugates.end() || is_trivial(i, c->second);
        const bool inv_trivial = ic == rel.inverse_conjugates.end() ||
                                 is_trivial(i, ic->second);
        if (!conj_trivial && ic == rel.inverse_conjugates.end())
          throw ValidationError(pair_name("conj", {i, j}) +
                                ": missing invconj tail (r_j = 0)");
        if (conj_trivial && !inv_trivial)
          throw ValidationError(pair_name("invconj", {i, j}) +
                                ": nontrivial tail for a commuting pair");
      }
    }
  }

  Relations rel_;
  std::vector<TailRef> conj_;
  std::vector<TailRef> inv_conj_;
  std::vector<TailRef> power_;
};

using Presentation = std::shared_ptr<const PcPresentation>;

namespace detail {

inline Integer parse_integer(std::string_view s, std::size_t line) {
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
  if (pos == s.size())
    throw SyntaxError(line, "expected integer, got '" + std::string(s) + "'");
  for (std::size_t k = pos; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9')
      throw SyntaxError(line, "expected integer, got '" + std::string(s) + "'");
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

inline std::size_t parse_index(std::string_view s, std::size_t line) {
  Integer v = parse_integer(s, line);
  if (v < 1 || v > 1'000'000)
    throw SyntaxError(line, "bad generator index '" + std::string(s) + "'");
  return static_cast<std::size_t>(v) - 1;
}

/// `[g]<i>[^<e>]`, returns 0-based index.
inline GenPower parse_gen_power(std::string_view tok, std::size_t line,
                                bool require_g) {
  if (!tok.empty() && tok[0] == 'g') {
    tok.remove_prefix(1);
  } else if (require_g) {
    throw SyntaxError(line, "expected 'g<i>', got '" + std::string(tok) + "'");
  }
  auto caret = tok.find('^');
  if (caret == std::string_view::npos)
    return {parse_index(tok, line), Integer(1)};
  return {parse_index(tok.substr(0, caret), line),
          parse_integer(tok.substr(caret + 1), line)};
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

}  // namespace detail

/// Parses the line-oriented presentation format:
///
///     pcp <n>
///     orders <r_1> ... <r_n>
///     conj <i> <j> <k>^<e> ...      # g_i^{g_j}
///     invconj <i> <j> <k>^<e> ...   # g_i^{g_j^-1}
///     power <i> <k>^<e> ...         # g_i^{r_i}
///
/// Throws SyntaxError or ValidationError.
inline Presentation load_presentation(std::istream& in) {
  Relations rel;
  std::size_t n = 0;
  bool have_header = false, have_orders = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto tok = detail::split_ws(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (!have_header) {
      if (kw != "pcp" || tok.size() != 2)
        throw SyntaxError(lineno, "expected 'pcp <n>'");
      Integer v = detail::parse_integer(tok[1], lineno);
      if (v < 1 || v > 100000)
        throw SyntaxError(lineno, "generator count out of range");
      n = static_cast<std::size_t>(v);
      have_header = true;
      continue;
    }
    if (!have_orders) {
      if (kw != "orders") throw SyntaxError(lineno, "expected 'orders'");
      if (tok.size() != n + 1)
        throw SyntaxError(lineno, "expected " + std::to_string(n) + " orders");
      for (std::size_t k = 1; k < tok.size(); ++k)
        rel.orders.push_back(detail::parse_integer(tok[k], lineno));
      have_orders = true;
      continue;
    }
    auto read_tail = [&](std::size_t from) {
      Tail t;
      for (std::size_t k = from; k < tok.size(); ++k)
        t.entries.push_back(detail::parse_gen_power(tok[k], lineno, false));
      return t;
    };
    if (kw == "conj" || kw == "invconj") {
      if (tok.size() < 3) throw SyntaxError(lineno, kw + " needs <i> <j>");
      GenPair key{detail::parse_index(tok[1], lineno),
                  detail::parse_index(tok[2], lineno)};
      auto& table = kw == "conj" ? rel.conjugates : rel.inverse_conjugates;
      if (!table.emplace(key, read_tail(3)).second)
        throw ValidationError("line " + std::to_string(lineno) +
                              ": duplicate " + kw + " entry");
    } else if (kw == "power") {
      if (tok.size() < 2) throw SyntaxError(lineno, "power needs <i>");
      if (!rel.powers.emplace(detail::parse_index(tok[1], lineno), read_tail(2))
               .second)
        throw ValidationError("line " + std::to_string(lineno) +
                              ": duplicate power entry");
    } else {
      throw SyntaxError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_header) throw SyntaxError(0, "missing 'pcp <n>' header");
  if (!have_orders) throw SyntaxError(0, "missing 'orders' line");
  return PcPresentation::create(std::move(rel));
}

inline Presentation load_presentation(const std::string& text) {
  std::istringstream is(text);
  return load_presentation(is);
}

inline Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_presentation(in);
}

inline void save_presentation(std::ostream& os, const PcPresentation& p) {
  const Relations& rel = p.relations();
  auto tail = [&os](const Tail& t) {
    for (const auto& [g, e] : t.entries) os << ' ' << g + 1 << '^' << e;
  };
  os << "pcp " << rel.orders.size() << "\norders";
  for (const auto& r : rel.orders) os << ' ' << r;
  os << '\n';
  for (const auto& [k, t] : rel.conjugates) {
    os << "conj " << k.first + 1 << ' ' << k.second + 1;
    tail(t);
    os << '\n';
  }
  for (const auto& [k, t] : rel.inverse_conjugates) {
    os << "invconj " << k.first + 1 << ' ' << k.second + 1;
    tail(t);
    os << '\n';
  }
  for (const auto& [i, t] : rel.powers) {
    os << "power " << i + 1;
    tail(t);
    os << '\n';
  }
}

inline std::string to_text(const PcPresentation& p) {
  std::ostringstream os;
  save_presentation(os, p);
  return os.str();
}

/// Parses `g<i>^<e>` tokens joined by `*`, e.g. `g1^2*g3^-1`. An omitted
/// exponent means 1; `1` or an empty string is the empty word.
inline Word parse_word(std::string_view text, std::size_t n) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  Word w;
  if (s.empty() || s == "1") return w;
  std::size_t start = 0;
  while (true) {
    auto star = s.find('*', start);
    std::string_view tok = std::string_view(s).substr(
        start, star == std::string::npos ? std::string::npos : star - start);
    if (tok.empty()) throw SyntaxError(0, "empty factor in word '" + s + "'");
    GenPower gp = detail::parse_gen_power(tok, 0, true);
    if (gp.gen >= n)
      throw ValidationError("generator g" + std::to_string(gp.gen + 1) +
                            " out of range in word '" + s + "'");
    w.entries.push_back(std::move(gp));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return w;
}

inline std::string format_word(const Word& w) {
  if (w.entries.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : w.entries) {
    if (!out.empty()) out += '*';
    out += 'g' + std::to_string(g + 1);
    if (e != 1) out += '^' + e.str();
  }
  return out;
}

}  // namespace pcgauss
