#pragma once

// Brute-force reference implementations. Nothing here calls into igs.hpp;
// these are the yardsticks the Gauss algorithm is measured against.

#include "pcgauss/collect.hpp"
#include "pcgauss/errors.hpp"
#include "pcgauss/integer.hpp"
#include "pcgauss/presentation.hpp"

#include <cstddef>
#include <deque>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace pcgauss::oracle {

inline constexpr std::size_t default_bound = 4096;

using ElementSet = std::set<std::vector<Integer>>;

namespace detail {
inline void require_finite(const PcPresentation& p, std::size_t bound) {
  Cardinal order = p.group_order();
  if (order.is_infinite())
    throw OracleError("enumeration needs a finite group");
  if (order.value() > bound)
    throw OracleError("group order " + order.to_string() +
                      " exceeds enumeration bound " + std::to_string(bound));
}
}  // namespace detail

/// Every normal form of a finite presentation.
class FiniteGroupTable {
 public:
  explicit FiniteGroupTable(Presentation pres,
                            std::size_t bound = default_bound)
      : pres_(std::move(pres)) {
    detail::require_finite(*pres_, bound);
    const std::size_t n = pres_->size();
    std::vector<Integer> e(n);
    while (true) {
      elements_.push_back(Element::from_exponents(pres_, e));
      std::size_t k = n;
      while (k > 0) {
        --k;
        if (++e[k] < pres_->order(k)) break;
        e[k] = 0;
        if (k == 0) return;
      }
    }
  }

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  Presentation pres_;
  std::vector<Element> elements_;
};

/// Closure of `gens` under right multiplication, starting from the
/// identity. In a finite group this is the generated subgroup.
inline ElementSet enumerate_subgroup(const Presentation& pres,
                                     std::span<const Element> gens,
                                     std::size_t bound = default_bound) {
  detail::require_finite(*pres, bound);
  for (const auto& g : gens)
    if (g.presentation() != pres) throw BindingError();
  Element one(pres);
  ElementSet seen{one.exponents()};
  std::deque<Element> frontier{one};
  while (!frontier.empty()) {
    Element x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Element y = multiply(x, g);
      if (seen.insert(y.exponents()).second) frontier.push_back(std::move(y));
    }
  }
  return seen;
}

inline ElementSet enumerate_subgroup(const Presentation& pres,
                                     const std::vector<Element>& gens,
                                     std::size_t bound = default_bound) {
  return enumerate_subgroup(pres, std::span<const Element>(gens), bound);
}

using Matrix = std::vector<std::vector<Integer>>;

struct HermiteForm {
  Matrix rows;                        // nonzero rows only
  std::vector<std::size_t> columns;   // pivot column of each row
  std::vector<Integer> pivots;        // positive pivot entries
};

/// Row-style Hermite normal form over Z: positive pivots, entries above a
/// pivot reduced into [0, pivot), zero rows dropped. Plain Euclid by row
/// swaps and subtractions.
inline HermiteForm hermite_normal_form(Matrix m) {
  HermiteForm out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < m.size(); ++c) {
    while (true) {
      // smallest nonzero |entry| in column c at or below `top`
      std::size_t best = m.size();
      for (std::size_t r = top; r < m.size(); ++r)
        if (m[r][c] != 0 &&
            (best == m.size() || abs(m[r][c]) < abs(m[best][c])))
          best = r;
      if (best == m.size()) break;
      std::swap(m[top], m[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < m.size(); ++r) {
        if (m[r][c] == 0) continue;
        Integer q = m[r][c] / m[top][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] -= q * m[top][k];
        if (m[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (top < m.size() && m[top][c] != 0) {
      if (m[top][c] < 0)
        for (auto& x : m[top]) x = -x;
      for (std::size_t r = 0; r < top; ++r) {
        Integer q = floor_div(m[r][c], m[top][c]);
        if (q == 0) continue;
        for (std::size_t k = 0; k < cols; ++k) m[r][k] -= q * m[top][k];
      }
      out.columns.push_back(c);
      out.pivots.push_back(m[top][c]);
      ++top;
    }
  }
  m.resize(top);
  out.rows = std::move(m);
  return out;
}

/// Index of the row lattice in Z^cols: product of pivots, infinite when
/// the rank is short.
inline Cardinal lattice_index(const HermiteForm& h, std::size_t cols) {
  if (h.pivots.size() < cols) return Cardinal::infinite();
  Integer p = 1;
  for (const auto& x : h.pivots) p *= x;
  return Cardinal::finite(p);
}

}  // namespace pcgauss::oracle
