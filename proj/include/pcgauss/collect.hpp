#pragma once

#include "pcgauss/errors.hpp"
#include "pcgauss/integer.hpp"
#include "pcgauss/presentation.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pcgauss {

/// A group element in normal form g_1^{e_1} ... g_n^{e_n}, with
/// 0 <= e_k < r_k whenever r_k > 0.
class Element {
 public:
  /// The identity of `pres`.
  explicit Element(Presentation pres)
      : pres_(std::move(pres)), exps_(pres_->size()) {}

  /// Throws ValidationError if `exps` is not a normal form for `pres`.
  static Element from_exponents(Presentation pres, std::vector<Integer> exps) {
    if (exps.size() != pres->size())
      throw ValidationError("exponent vector has wrong length");
    for (std::size_t k = 0; k < exps.size(); ++k) {
      const Integer& r = pres->order(k);
      if (r > 0 && (exps[k] < 0 || exps[k] >= r))
        throw ValidationError("exponent " + exps[k].str() + " of g" +
                              std::to_string(k + 1) + " not reduced");
    }
    Element e(std::move(pres));
    e.exps_ = std::move(exps);
    return e;
  }

  const Presentation& presentation() const { return pres_; }
  const std::vector<Integer>& exponents() const { return exps_; }
  const Integer& operator[](std::size_t k) const { return exps_[k]; }
  std::size_t size() const { return exps_.size(); }

  /// Index of the first nonzero exponent; size() for the identity.
  std::size_t depth() const {
    std::size_t d = 0;
    while (d < exps_.size() && exps_[d] == 0) ++d;
    return d;
  }
  bool is_identity() const { return depth() == exps_.size(); }

  /// Exponent at the depth position. Precondition: not the identity.
  const Integer& leading_exponent() const { return exps_[depth()]; }

  Word to_word() const {
    Word w;
    for (std::size_t k = 0; k < exps_.size(); ++k)
      if (exps_[k] != 0) w.entries.push_back({k, exps_[k]});
    return w;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.pres_ == b.pres_ && a.exps_ == b.exps_;
  }
  friend bool operator<(const Element& a, const Element& b) {
    return a.exps_ < b.exps_;
  }

 private:
  friend class Collector;
  Presentation pres_;
  std::vector<Integer> exps_;
};

inline std::string to_string(const Element& e) {
  return format_word(e.to_word());
}

inline std::ostream& operator<<(std::ostream& os, const Element& e) {
  return os << to_string(e);
}

/// Collection from the left on an exponent vector. The vector always holds
/// a normal form; multiplying by g_j^m on the right moves g_j across the
/// suffix g_{j+1}^{e_{j+1}} ... g_n^{e_n} by conjugating that suffix, and
/// folds overflowing powers of finite-order generators with the power
/// relations. Every rewrite only touches positions >= j, which bounds the
/// recursion.
class Collector {
 public:
  explicit Collector(const PcPresentation& pres) : p_(pres) {}

  using Exps = std::vector<Integer>;

  /// e <- e * g_j^m
  void mul_gen(Exps& e, std::size_t j, const Integer& m) const {
    if (m == 0) return;
    const Integer& r = p_.order(j);
    if (r > 0) {
      // g_j^m = g_j^rem * (g_j^r)^q, and g_j^r is the power tail.
      Integer q = floor_div(m, r);
      Integer rem = m - q * r;
      if (rem != 0) step_up(e, j, rem);
      if (q != 0) {
        const auto& pt = p_.power(j);
        if (pt.tail) mul_tail(e, pt, q);
      }
      return;
    }
    if (m > 0)
      step_up(e, j, m);
    else
      step_down(e, j, -m);
  }

  /// e <- e * tail^p
  void mul_tail(Exps& e, const PcPresentation::TailRef& ref,
                const Integer& p) const {
    const auto& entries = ref.tail->entries;
    if (entries.size() == 1) {
      mul_gen(e, entries[0].gen, entries[0].exp * p);
      return;
    }
    if (ref.commutative) {
      // Entries commute pairwise, so tail^p = prod g_k^{c_k p}. Finite
      // factors may still spill into later positions through their power
      // relations, which is why this goes through mul_gen.
      for (const auto& [k, c] : entries) mul_gen(e, k, c * p);
      return;
    }
    if (p > 0) {
      for (Integer t = 0; t < p; ++t)
        for (const auto& [k, c] : entries) mul_gen(e, k, c);
    } else {
      for (Integer t = 0; t < -p; ++t)
        for (auto it = entries.rbegin(); it != entries.rend(); ++it)
          mul_gen(e, it->gen, -it->exp);
    }
  }

  /// e <- e * f where f is a normal form over positions >= from.
  void mul_exps(Exps& e, const Exps& f, std::size_t from = 0) const {
    for (std::size_t k = from; k < f.size(); ++k)
      if (f[k] != 0) mul_gen(e, k, f[k]);
  }

  void mul_word(Exps& e, const Word& w) const {
    for (const auto& [k, m] : w.entries) mul_gen(e, k, m);
  }

 private:
  // Whether g_j commutes with every generator present in the suffix of e.
  bool suffix_commutes(const Exps& e, std::size_t j) const {
    for (std::size_t k = j + 1; k < e.size(); ++k)
      if (e[k] != 0 && p_.conjugate(k, j).tail) return false;
    return true;
  }

  Exps take_suffix(Exps& e, std::size_t j) const {
    Exps s(e.size());
    for (std::size_t k = j + 1; k < e.size(); ++k) std::swap(s[k], e[k]);
    return s;
  }

  // e <- e * g_j^count, count > 0 (and count < r_j when r_j > 0).
  void step_up(Exps& e, std::size_t j, const Integer& count) const {
    const Integer& r = p_.order(j);
    const auto& pt = p_.power(j);
    if (suffix_commutes(e, j)) {
      e[j] += count;
      if (r > 0 && e[j] >= r) {
        e[j] -= r;
        if (pt.tail) {
          Exps s = take_suffix(e, j);
          mul_tail(e, pt, 1);
          mul_exps(e, s, j + 1);
        }
      }
      return;
    }
    for (Integer t = 0; t < count; ++t) {
      Exps s = take_suffix(e, j);
      e[j] += 1;
      if (r > 0 && e[j] == r) {
        e[j] = 0;
        if (pt.tail) mul_tail(e, pt, 1);
      }
      for (std::size_t k = j + 1; k < s.size(); ++k) {
        if (s[k] == 0) continue;
        const auto& ct = p_.conjugate(k, j);
        if (ct.tail)
          mul_tail(e, ct, s[k]);
        else
          mul_gen(e, k, s[k]);
      }
    }
  }

  // e <- e * g_j^-count, count > 0, r_j = 0.
  void step_down(Exps& e, std::size_t j, const Integer& count) const {
    if (suffix_commutes(e, j)) {
      e[j] -= count;
      return;
    }
    for (Integer t = 0; t < count; ++t) {
      Exps s = take_suffix(e, j);
      e[j] -= 1;
      for (std::size_t k = j + 1; k < s.size(); ++k) {
        if (s[k] == 0) continue;
        const auto& ct = p_.inverse_conjugate(k, j);
        if (ct.tail)
          mul_tail(e, ct, s[k]);
        else
          mul_gen(e, k, s[k]);
      }
    }
  }

  const PcPresentation& p_;

 public:
  static Element make(Presentation pres, Exps exps) {
    Element e(std::move(pres));
    e.exps_ = std::move(exps);
    return e;
  }
};

/// Normal form of `w`.
inline Element collect(const Presentation& pres, const Word& w) {
  for (const auto& gp : w.entries)
    if (gp.gen >= pres->size())
      throw ValidationError("word uses generator outside the presentation");
  Collector::Exps e(pres->size());
  Collector(*pres).mul_word(e, w);
  return Collector::make(pres, std::move(e));
}

/// The generator g_{i+1} (0-based `i`).
inline Element generator(const Presentation& pres, std::size_t i) {
  return collect(pres, Word{{{i, Integer(1)}}});
}

namespace detail {
inline void check_binding(const Element& a, const Element& b) {
  if (a.presentation() != b.presentation()) throw BindingError();
}
}  // namespace detail

inline Element multiply(const Element& a, const Element& b) {
  detail::check_binding(a, b);
  Collector::Exps e = a.exponents();
  Collector(*a.presentation()).mul_exps(e, b.exponents());
  return Collector::make(a.presentation(), std::move(e));
}

inline Element operator*(const Element& a, const Element& b) {
  return multiply(a, b);
}

/// (g_1^{e_1} ... g_n^{e_n})^-1 = g_n^{-e_n} ... g_1^{-e_1}
inline Element inverse(const Element& a) {
  const auto& pres = a.presentation();
  Collector c(*pres);
  Collector::Exps e(pres->size());
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != 0) c.mul_gen(e, k, -a[k]);
  return Collector::make(pres, std::move(e));
}

/// a^k for any integer k, by repeated squaring.
inline Element power(const Element& a, const Integer& k) {
  Element base = k < 0 ? inverse(a) : a;
  Integer m = abs(k);
  Element result(a.presentation());
  if (a.is_identity()) return result;
  while (m != 0) {
    if (m & 1) result = multiply(result, base);
    m >>= 1;
    if (m != 0) base = multiply(base, base);
  }
  return result;
}

/// a^b = b^-1 a b
inline Element conjugate(const Element& a, const Element& b) {
  detail::check_binding(a, b);
  return multiply(multiply(inverse(b), a), b);
}

/// [a, b] = a^-1 b^-1 a b
inline Element commutator(const Element& a, const Element& b) {
  detail::check_binding(a, b);
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

struct ElementStats {
  std::size_t depth;  // 0-based; n for the identity
  std::optional<Integer> leading_exponent;
  std::optional<Cardinal> relative_order;
};

/// Order of a modulo G_{d+1}: r_d / gcd(e_d, r_d), infinite when r_d = 0.
inline Cardinal relative_order(const Element& a) {
  const std::size_t d = a.depth();
  if (d == a.size()) throw PreconditionError("relative order of the identity");
  const Integer& r = a.presentation()->order(d);
  if (r == 0) return Cardinal::infinite();
  return Cardinal::finite(r / gcd(a[d], r));
}

inline ElementStats stats(const Element& a) {
  ElementStats s{a.depth(), std::nullopt, std::nullopt};
  if (s.depth < a.size()) {
    s.leading_exponent = a[s.depth];
    s.relative_order = relative_order(a);
  }
  return s;
}

/// The power of `a` whose leading exponent generates the image of <a> in
/// the cyclic factor G_d / G_{d+1} canonically.
///
/// For r_d = 0 this is a^{sign(l)}. For r_d = m > 0 write l = x*y with
/// x = gcd(l, m); the exponent is z = y^-1 mod (m/x), which always exists,
/// and the result has leading exponent exactly x. (y need not be
/// invertible mod m itself: l = 4, m = 6.)
inline Element normalise(const Element& a) {
  const std::size_t d = a.depth();
  if (d == a.size()) throw PreconditionError("normalise: identity element");
  const Integer& lead = a[d];
  const Integer& m = a.presentation()->order(d);
  if (m == 0) return lead > 0 ? a : inverse(a);
  Integer x = gcd(lead, m);
  Integer y = lead / x;
  auto z = mod_inverse(y, m / x);
  if (!z) throw InvariantViolation("normalise: no inverse modulo m/x");
  if (*z == 0) *z = 1;  // only when m/x == 1, which normal forms exclude
  return power(a, *z);
}

inline bool is_normalised(const Element& a) {
  return !a.is_identity() && normalise(a) == a;
}

/// Checks every stored inverse-conjugate tail: (g_j^-1 * tail) * g_j must
/// collect to g_i. Returns the failing (i, j) pairs, 0-based.
inline std::vector<GenPair> validate_inverse_tails(const Presentation& pres) {
  std::vector<GenPair> bad;
  for (const auto& [key, tail] : pres->relations().inverse_conjugates) {
    const auto [i, j] = key;
    Word w;
    w.entries.push_back({j, Integer(-1)});
    w.entries.insert(w.entries.end(), tail.entries.begin(), tail.entries.end());
    w.entries.push_back({j, Integer(1)});
    if (collect(pres, w) != generator(pres, i)) bad.push_back(key);
  }
  return bad;
}

}  // namespace pcgauss
