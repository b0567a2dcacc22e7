#pragma once

#include "pcgauss/collect.hpp"
#include "pcgauss/errors.hpp"
#include "pcgauss/integer.hpp"
#include "pcgauss/presentation.hpp"

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pcgauss {

/// Length-n array whose slot d is empty or holds a normalised element of
/// depth exactly d.
class PartialIgs {
 public:
  explicit PartialIgs(Presentation pres)
      : pres_(std::move(pres)), slots_(pres_->size()) {}

  const Presentation& presentation() const { return pres_; }
  std::size_t size() const { return slots_.size(); }
  const std::optional<Element>& operator[](std::size_t d) const {
    return slots_[d];
  }
  bool empty() const {
    for (const auto& s : slots_)
      if (s) return false;
    return true;
  }

  /// Occupied slots in depth order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (const auto& s : slots_)
      if (s) out.push_back(*s);
    return out;
  }

  friend bool operator==(const PartialIgs&, const PartialIgs&) = default;

 private:
  friend struct PigsUpdate;
  Presentation pres_;
  std::vector<std::optional<Element>> slots_;
};

/// Induced generating sequence u_1, ..., u_m with strictly increasing
/// depths.
class Igs {
 public:
  explicit Igs(Presentation pres) : pres_(std::move(pres)) {}
  Igs(Presentation pres, std::vector<Element> gens)
      : pres_(std::move(pres)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.presentation() != pres_) throw BindingError();
  }
  explicit Igs(const PartialIgs& pigs)
      : pres_(pigs.presentation()), gens_(pigs.elements()) {}

  const Presentation& presentation() const { return pres_; }
  const std::vector<Element>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Element& operator[](std::size_t i) const { return gens_[i]; }
  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

  friend bool operator==(const Igs&, const Igs&) = default;

 private:
  Presentation pres_;
  std::vector<Element> gens_;
};

struct AddGenResult {
  PartialIgs pigs;
  std::vector<std::size_t> changed;  // slots whose content differs
};

// Mutating helper behind add_gen_to_pigs; PartialIgs itself stays a value.
struct PigsUpdate {
  static std::optional<Element>& slot(PartialIgs& p, std::size_t d) {
    return p.slots_[d];
  }
};

namespace detail {

// Work list ordered by depth, FIFO among equal depths.
class DepthQueue {
 public:
  void push(Element e) {
    const std::size_t d = e.depth();
    queues_[d].push_back(std::move(e));
  }
  bool empty() const { return queues_.empty(); }
  Element pop() {
    auto it = queues_.begin();
    Element e = std::move(it->second.front());
    it->second.pop_front();
    if (it->second.empty()) queues_.erase(it);
    return e;
  }

 private:
  std::map<std::size_t, std::deque<Element>> queues_;
};

// h * k^{-q}
inline Element left_quotient(const Element& h, const Element& k,
                             const Integer& q) {
  return multiply(h, power(k, -q));
}

// Smallest l such that slots l..n-1 all hold elements of leading
// exponent 1; n if slot n-1 does not.
inline std::size_t unit_suffix_start(const PartialIgs& p) {
  std::size_t l = p.size();
  while (l > 0 && p[l - 1] && p[l - 1]->leading_exponent() == 1) --l;
  return l;
}

}  // namespace detail

/// Adds `g` to the partial igs `pigs`; the result generates <pigs, g>.
///
/// The work list is processed shallowest first. An element h of depth d is
/// either stored (normalised) in an empty slot, or combined with the slot
/// element k through the extended gcd of the leading exponents; the
/// remainders h * I[d]^{-l(h)/l(I[d])} and k * I[d]^{-l(k)/l(I[d])} go back
/// to the work list with depth > d.
///
/// Two shortcuts are applied: once slots l..n all have leading exponent 1
/// they hold G_l, so they are replaced by g_l..g_n and deeper work elements
/// are dropped; and a combination whose normalised leading exponent equals
/// the current slot's is not stored, leaving a single remainder.
inline AddGenResult add_gen_to_pigs(const PartialIgs& pigs, const Element& g) {
  if (g.presentation() != pigs.presentation()) throw BindingError();
  const Presentation& pres = pigs.presentation();
  const std::size_t n = pres->size();
  PartialIgs out = pigs;

  detail::DepthQueue work;
  work.push(g);
  std::size_t unit_from = detail::unit_suffix_start(out);

  auto enqueue = [&work](Element e, std::size_t d) {
    if (e.depth() <= d)
      throw InvariantViolation("add_gen_to_pigs: remainder of depth " +
                               std::to_string(e.depth() + 1) +
                               " does not exceed " + std::to_string(d + 1));
    if (!e.is_identity()) work.push(std::move(e));
  };
  auto store = [&](std::size_t d, Element e) {
    auto& slot = PigsUpdate::slot(out, d);
    if (slot && slot->leading_exponent() % e.leading_exponent() != 0)
      throw InvariantViolation("add_gen_to_pigs: leading exponent of slot " +
                               std::to_string(d + 1) + " grew");
    slot = std::move(e);
    unit_from = detail::unit_suffix_start(out);
    for (std::size_t k = unit_from; k < n; ++k) {
      Element gk = generator(pres, k);
      if (PigsUpdate::slot(out, k) != gk) PigsUpdate::slot(out, k) = gk;
    }
  };

  while (!work.empty()) {
    Element h = work.pop();
    const std::size_t d = h.depth();
    if (d >= n || d >= unit_from) continue;
    const Integer a = h.leading_exponent();
    if (!out[d]) {
      Element normed = normalise(h);
      const Integer ln = normed.leading_exponent();
      store(d, normed);
      if (pres->order(d) > 0)
        enqueue(detail::left_quotient(h, *out[d], a / ln), d);
      continue;
    }
    const Element k = *out[d];
    const Integer b = k.leading_exponent();
    const Bezout bz = extended_gcd(a, b);
    Element w = multiply(power(h, bz.u), power(k, bz.v));
    Element normed = normalise(w);
    const Integer e = normed.leading_exponent();
    if (e == b) {
      enqueue(detail::left_quotient(h, k, a / b), d);
      continue;
    }
    store(d, normed);
    enqueue(detail::left_quotient(h, normed, a / e), d);
    enqueue(detail::left_quotient(k, normed, b / e), d);
  }

  AddGenResult result{std::move(out), {}};
  for (std::size_t d = 0; d < n; ++d)
    if (result.pigs[d] != pigs[d]) result.changed.push_back(d);
  return result;
}

/// Computes an igs of the subgroup generated by `gens`. After each
/// insertion the relative-order powers and the commutators of every changed
/// slot with every other occupied slot are fed back in, so the result
/// satisfies the closure conditions checked by verify_igs.
inline Igs igs_by_generators(const Presentation& pres,
                             std::span<const Element> gens) {
  for (const auto& g : gens)
    if (g.presentation() != pres) throw BindingError();
  PartialIgs pigs(pres);
  std::deque<Element> work;
  for (const auto& g : gens)
    if (!g.is_identity()) work.push_back(g);
  while (!work.empty()) {
    Element g = std::move(work.front());
    work.pop_front();
    AddGenResult step = add_gen_to_pigs(pigs, g);
    pigs = std::move(step.pigs);
    for (std::size_t d : step.changed) {
      const Element& u = *pigs[d];
      Cardinal r = relative_order(u);
      if (r.is_finite()) {
        Element p = power(u, r.value());
        if (!p.is_identity()) work.push_back(std::move(p));
      }
      for (std::size_t e = 0; e < pigs.size(); ++e) {
        if (e == d || !pigs[e]) continue;
        Element c = commutator(u, *pigs[e]);
        if (!c.is_identity()) work.push_back(std::move(c));
      }
    }
  }
  return Igs(pigs);
}

inline Igs igs_by_generators(const Presentation& pres,
                             const std::vector<Element>& gens) {
  return igs_by_generators(pres, std::span<const Element>(gens));
}

struct SiftResult {
  Element residue;
  bool member;
};

/// Divides `g` depth by depth by `gens` (sorted by strictly increasing
/// depth). At a finite position the quotient q solves
/// q * l(u) = e_d (mod r_d); for normalised u this is plain division.
/// Membership is exact when `gens` is an igs.
inline SiftResult sift(std::span<const Element> gens, Element g) {
  for (const auto& u : gens) {
    const std::size_t du = u.depth();
    const std::size_t dg = g.depth();
    if (dg == g.size()) break;
    if (dg < du) break;
    if (dg > du) continue;
    const Integer& l = u[du];
    const Integer& r = g.presentation()->order(du);
    Integer q;
    if (r == 0) {
      if (g[du] % l != 0) break;
      q = g[du] / l;
    } else {
      Integer c = gcd(l, r);
      if (g[du] % c != 0) break;
      auto inv = mod_inverse(l / c, r / c);
      q = floor_mod((g[du] / c) * *inv, r / c);
    }
    g = detail::left_quotient(g, u, q);
  }
  const bool member = g.is_identity();
  return {std::move(g), member};
}

inline SiftResult sift(const Igs& igs, const Element& g) {
  if (g.presentation() != igs.presentation()) throw BindingError();
  return sift(std::span<const Element>(igs.generators()), g);
}

/// Closure test for a candidate igs u_1..u_m:
///   depths strictly increase,
///   u_i^{u_j} lies in <u_{j+1}, ..., u_m> for j < i,
///   u_i^{r(u_i)} lies in <u_{i+1}, ..., u_m> when r(u_i) is finite.
/// Checked from the tail forwards, so every sift runs against a suffix that
/// has already passed.
inline bool verify_igs(std::span<const Element> cand) {
  const std::size_t m = cand.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (cand[i].is_identity()) return false;
    if (i > 0 && cand[i - 1].depth() >= cand[i].depth()) return false;
    if (cand[i].presentation() != cand[0].presentation()) return false;
  }
  for (std::size_t i = m; i-- > 0;) {
    auto rest = cand.subspan(i + 1);
    Cardinal r = relative_order(cand[i]);
    if (r.is_finite() && !sift(rest, power(cand[i], r.value())).member)
      return false;
    for (std::size_t k = i + 1; k < m; ++k)
      if (!sift(rest, conjugate(cand[k], cand[i])).member) return false;
  }
  return true;
}

inline bool verify_igs(const Igs& igs) {
  return verify_igs(std::span<const Element>(igs.generators()));
}

/// |U| = r(u_1) ... r(u_m)
inline Cardinal subgroup_order(const Igs& igs) {
  Cardinal c = Cardinal::finite(1);
  for (const auto& u : igs) c *= relative_order(u);
  return c;
}

/// [G:U] = l(u_1) ... l(u_m) * prod of r_d over depths d without a
/// generator. A missing depth with r_d = 0 makes the index infinite.
inline Cardinal subgroup_index(const Igs& igs) {
  const Presentation& pres = igs.presentation();
  std::vector<std::optional<Integer>> lead(pres->size());
  for (const auto& u : igs) lead[u.depth()] = u.leading_exponent();
  Cardinal c = Cardinal::finite(1);
  for (std::size_t d = 0; d < pres->size(); ++d) {
    const Integer& r = pres->order(d);
    if (!lead[d])
      c *= r == 0 ? Cardinal::infinite() : Cardinal::finite(r);
    else
      c *= Cardinal::finite(r == 0 ? abs(*lead[d]) : gcd(*lead[d], r));
  }
  return c;
}

/// Reduces, for every generator u_k of depth d, the d-th exponent of every
/// earlier generator into [0, l(u_k)) by u_i <- u_i * u_k^{-q}. Pivots are
/// processed in increasing depth; multiplying by an element of G_d leaves
/// positions < d untouched, so earlier reductions stay in place.
inline Igs canonical_igs(const Igs& igs) {
  std::vector<Element> u = igs.generators();
  for (std::size_t k = 0; k < u.size(); ++k) {
    const std::size_t d = u[k].depth();
    const Integer l = u[k].leading_exponent();
    for (std::size_t i = 0; i < k; ++i) {
      Integer q = floor_div(u[i][d], l);
      if (q != 0) u[i] = detail::left_quotient(u[i], u[k], q);
    }
  }
  return Igs(igs.presentation(), std::move(u));
}

/// U = V iff their canonical igs coincide.
inline bool subgroups_equal(const Presentation& pres,
                            std::span<const Element> u_gens,
                            std::span<const Element> v_gens) {
  return canonical_igs(igs_by_generators(pres, u_gens)) ==
         canonical_igs(igs_by_generators(pres, v_gens));
}

inline bool subgroups_equal(const Presentation& pres,
                            const std::vector<Element>& u_gens,
                            const std::vector<Element>& v_gens) {
  return subgroups_equal(pres, std::span<const Element>(u_gens),
                         std::span<const Element>(v_gens));
}

}  // namespace pcgauss
