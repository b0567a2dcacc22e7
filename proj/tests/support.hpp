#pragma once

// Shared fixtures for the unit and acceptance suites: group corpus,
// seeded random elements and words, and matrix representations used as an
// independent check on collection.

#include "pcgauss/pcgauss.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace pcgauss::testing {

inline Presentation load_group(const std::string& name) {
  return load_presentation_file(std::string(PCGAUSS_GROUPS_DIR) + "/" + name +
                                ".pcp");
}

inline Presentation cyclic(int m) {
  return load_presentation("pcp 1\norders " + std::to_string(m) + "\n");
}

inline Presentation free_abelian(std::size_t n) {
  std::string text = "pcp " + std::to_string(n) + "\norders";
  for (std::size_t i = 0; i < n; ++i) text += " 0";
  return load_presentation(text + "\n");
}

struct NamedGroup {
  std::string name;
  Presentation pres;
};

/// Z/2 ... Z/12, D8, Q8, the order-27 Heisenberg group, S4, D16 and Z/27
/// refined as 3 x 3 x 3.
inline std::vector<NamedGroup> finite_corpus() {
  std::vector<NamedGroup> out;
  for (int m = 2; m <= 12; ++m) out.push_back({"Z/" + std::to_string(m), cyclic(m)});
  for (const char* g : {"d8", "q8", "heis27", "s4", "d16", "z27"})
    out.push_back({g, load_group(g)});
  return out;
}

inline std::vector<NamedGroup> infinite_corpus() {
  return {{"infdihedral", load_group("infdihedral")},
          {"heisenberg", load_group("heisenberg")},
          {"Z^2", load_group("z2")},
          {"klein", load_group("klein")},
          {"zz5", load_group("zz5")},
          {"zroot", load_group("zroot")},
          {"Z^3", free_abelian(3)}};
}

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random normal form; infinite positions draw from [-spread, spread].
inline Element random_element(const Presentation& p, Rng& rng, long spread = 4) {
  std::vector<Integer> e(p->size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    const Integer& r = p->order(k);
    e[k] = r == 0 ? Integer(uniform(rng, -spread, spread))
                  : Integer(uniform(rng, 0, static_cast<long>(r) - 1));
  }
  return Element::from_exponents(p, std::move(e));
}

inline Word random_word(const Presentation& p, Rng& rng, std::size_t max_len = 6,
                        long spread = 3) {
  Word w;
  const std::size_t len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
  for (std::size_t t = 0; t < len; ++t)
    w.entries.push_back({static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(p->size()) - 1)),
                         Integer(uniform(rng, -spread, spread))});
  return w;
}

inline std::vector<Element> random_generators(const Presentation& p, Rng& rng,
                                              std::size_t max_count = 3,
                                              long spread = 4) {
  std::vector<Element> out;
  const long count = uniform(rng, 0, static_cast<long>(max_count));
  for (long t = 0; t < count; ++t) out.push_back(random_element(p, rng, spread));
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.entries.insert(w.entries.end(), b.entries.begin(), b.entries.end());
  return w;
}

// ---------------------------------------------------------------------------
// Matrix representations

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Representation g_k -> gens[k]; entries reduced mod `modulus` when it
/// is nonzero.
struct MatrixRep {
  std::vector<IntMatrix> gens;
  std::vector<IntMatrix> inverses;
  Integer modulus = 0;

  IntMatrix mul(const IntMatrix& a, const IntMatrix& b) const {
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (a[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    if (modulus != 0)
      for (auto& row : c)
        for (auto& x : row) x = floor_mod(x, modulus);
    return c;
  }

  IntMatrix image(const Word& w) const {
    IntMatrix m = identity_matrix(gens[0].size());
    for (const auto& [g, e] : w.entries) {
      const IntMatrix& base = e < 0 ? inverses[g] : gens[g];
      for (Integer t = 0; t < abs(e); ++t) m = mul(m, base);
    }
    return m;
  }
  IntMatrix image(const Element& x) const { return image(x.to_word()); }
};

inline IntMatrix unit(std::size_t n, std::size_t i, std::size_t j, long v = 1) {
  IntMatrix m = identity_matrix(n);
  m[i][j] += v;
  return m;
}

inline IntMatrix permutation_matrix(const std::vector<std::size_t>& p) {
  IntMatrix m(p.size(), std::vector<Integer>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) m[i][p[i]] = 1;
  return m;
}

// Left multiplication by a unit quaternion on the basis (1, i, j, k).
inline IntMatrix quaternion_matrix(int unit_index) {
  // table[a][b] = (sign, index) of basis_a * basis_b
  static const int sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int idx[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  IntMatrix m(4, std::vector<Integer>(4));
  for (int b = 0; b < 4; ++b) m[idx[unit_index][b]][b] = sign[unit_index][b];
  return m;
}

inline IntMatrix negate(IntMatrix m) {
  for (auto& row : m)
    for (auto& x : row) x = -x;
  return m;
}

/// Matrix representation for the named corpus group, if one is known.
inline std::optional<MatrixRep> representation(const std::string& name,
                                               const Presentation& p) {
  if (name.rfind("Z/", 0) == 0) {
    return MatrixRep{{unit(2, 0, 1)}, {unit(2, 0, 1, -1)}, p->order(0)};
  }
  if (name == "d8") {
    IntMatrix s{{1, 0}, {0, -1}}, r{{0, -1}, {1, 0}};
    IntMatrix r3{{0, 1}, {-1, 0}};
    return MatrixRep{{s, r, negate(identity_matrix(2))},
                     {s, r3, negate(identity_matrix(2))}};
  }
  if (name == "q8") {
    IntMatrix i = quaternion_matrix(1), j = quaternion_matrix(2);
    IntMatrix minus = negate(identity_matrix(4));
    return MatrixRep{{i, j, minus}, {negate(i), negate(j), minus}};
  }
  if (name == "heis27" || name == "heisenberg") {
    MatrixRep rep{{unit(3, 1, 2), unit(3, 0, 1), unit(3, 0, 2)},
                  {unit(3, 1, 2, -1), unit(3, 0, 1, -1), unit(3, 0, 2, -1)}};
    if (name == "heis27") rep.modulus = 3;
    return rep;
  }
  if (name == "s4") {
    auto f1 = permutation_matrix({1, 0, 2, 3});
    auto f2 = permutation_matrix({1, 2, 0, 3});
    auto f2i = permutation_matrix({2, 0, 1, 3});
    auto f3 = permutation_matrix({1, 0, 3, 2});
    auto f4 = permutation_matrix({2, 3, 0, 1});
    return MatrixRep{{f1, f2, f3, f4}, {f1, f2i, f3, f4}};
  }
  if (name == "infdihedral") {
    IntMatrix s{{-1, 0}, {0, 1}};
    return MatrixRep{{s, unit(2, 0, 1)}, {s, unit(2, 0, 1, -1)}};
  }
  if (name == "d16") {
    std::vector<std::size_t> s(8), r(8), ri(8);
    for (std::size_t i = 0; i < 8; ++i) {
      s[i] = (8 - i) % 8;
      r[i] = (i + 1) % 8;
      ri[i] = (i + 7) % 8;
    }
    return MatrixRep{{permutation_matrix(s), permutation_matrix(r)},
                     {permutation_matrix(s), permutation_matrix(ri)}};
  }
  if (name == "z27") {
    return MatrixRep{{unit(2, 0, 1), unit(2, 0, 1, 3), unit(2, 0, 1, 9)},
                     {unit(2, 0, 1, -1), unit(2, 0, 1, -3), unit(2, 0, 1, -9)},
                     27};
  }
  if (name == "klein") {
    IntMatrix a{{-1, 0, 0}, {0, 1, 1}, {0, 0, 1}};
    IntMatrix ai{{-1, 0, 0}, {0, 1, -1}, {0, 0, 1}};
    return MatrixRep{{a, unit(3, 0, 2)}, {ai, unit(3, 0, 2, -1)}};
  }
  if (name == "zroot") {
    return MatrixRep{{unit(2, 0, 1), unit(2, 0, 1, 2)},
                     {unit(2, 0, 1, -1), unit(2, 0, 1, -2)}};
  }
  if (name == "zz5") {
    // Not faithful: the image is Z/4 acting on Z/5 by x -> 3x.
    IntMatrix a{{3, 0}, {0, 1}}, ai{{2, 0}, {0, 1}};
    return MatrixRep{{a, unit(2, 0, 1)}, {ai, unit(2, 0, 1, -1)}, 5};
  }
  if (name.rfind("Z^", 0) == 0) {
    const std::size_t n = p->size();
    MatrixRep rep;
    for (std::size_t k = 0; k < n; ++k) {
      rep.gens.push_back(unit(n + 1, k, n));
      rep.inverses.push_back(unit(n + 1, k, n, -1));
    }
    return rep;
  }
  return std::nullopt;
}

/// Subgroup generated by `gens` together with g_from, ..., g_n.
inline std::vector<Element> with_series_tail(const Presentation& p,
                                             std::vector<Element> gens,
                                             std::size_t from) {
  for (std::size_t k = from; k < p->size(); ++k) gens.push_back(generator(p, k));
  return gens;
}

}  // namespace pcgauss::testing
