#pragma once
/// @file root_system.hpp
/// @brief Finite crystallographic root systems with exact arithmetic.
///
/// Root systems are built in their standard coordinate realizations:
///
///   A_l : e_i - e_j               in R^{l+1}
///   B_l : +-e_i, +-e_i +- e_j     in R^l
///   C_l : +-2e_i, +-e_i +- e_j    in R^l
///   D_l : +-e_i +- e_j            in R^l
///   E_8 : +-e_i +- e_j (i<j) together with (1/2)sum(+-e_i) where the
///         number of minus signs is even, in R^8; E_7 and E_6 are the
///         subsystems orthogonal to e_7+e_8 resp. {e_6+e_8, e_7+e_8}
///         (0-based: e_6+e_7 resp. {e_5+e_7, e_6+e_7})
///   F_4 : +-e_i, +-e_i +- e_j, (1/2)(+-e_1 +-e_2 +-e_3 +-e_4) in R^4
///   G_2 : +-(e_i - e_j), +-(2e_i - e_j - e_k) in R^3
///
/// with the simple bases numbered in the Bourbaki convention.  Direct
/// sums (block-diagonal coordinates) are supported so realified complex
/// algebras can carry a pair of isomorphic diagrams.
///
/// Every root stores its expansion in the simple basis, so support,
/// positivity and membership queries are table lookups.  Node indices
/// in this API are 0-based; the command line layer converts to the
/// 1-based labelling used in printed diagrams.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "minorb/errors.hpp"
#include "minorb/linalg.hpp"
#include "minorb/rational.hpp"

namespace minorb {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan type of one irreducible system, e.g. {Family::E, 6}.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

[[nodiscard]] inline std::string to_string(SimpleType t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

/// Order of the Weyl group of an irreducible type.
[[nodiscard]] inline long long weyl_order(SimpleType t) {
  const auto factorial = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const int l = t.rank;
  switch (t.family) {
    case Family::A:
      return factorial(l + 1);
    case Family::B:
    case Family::C:
      return (1LL << l) * factorial(l);
    case Family::D:
      return (1LL << (l - 1)) * factorial(l);
    case Family::E:
      if (l == 6) return 51840;
      if (l == 7) return 2903040;
      return 696729600;
    case Family::F:
      return 1152;
    case Family::G:
      return 12;
  }
  throw DomainError("weyl_order: unknown family");
}

/// A root system, possibly a direct sum of irreducible blocks.
struct RootSystem {
  std::vector<SimpleType> components;
  std::vector<int> node_offset;   // components.size()+1 prefix sums of ranks
  std::vector<int> coord_offset;  // prefix sums of ambient dimensions
  int rank = 0;                   // number of simple roots
  int dim = 0;                    // ambient coordinate dimension

  std::vector<Vec> simple_roots;                      // [rank]
  std::vector<Vec> roots;                             // all roots, both signs
  std::vector<std::vector<long long>> simple_coeffs;  // expansion of roots[i]
  std::map<Vec, int> index_of;                        // root -> index in roots

  [[nodiscard]] int component_of(int node) const {
    for (std::size_t c = 0; c + 1 < node_offset.size(); ++c)
      if (node >= node_offset[c] && node < node_offset[c + 1]) return static_cast<int>(c);
    throw DomainError("node index out of range");
  }
};

namespace detail {

[[nodiscard]] inline Vec basis_vec(int dim, int i, Rational value = 1) {
  Vec v(dim);
  v[i] = value;
  return v;
}

/// Enumerates the roots of one irreducible type in its realization.
[[nodiscard]] inline std::vector<Vec> enumerate_roots(SimpleType t) {
  std::vector<Vec> out;
  const int l = t.rank;
  const auto both_signs = [&out](Vec v) {
    out.push_back(v);
    out.push_back(-v);
  };
  switch (t.family) {
    case Family::A: {
      const int n = l + 1;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) {
            Vec v(n);
            v[i] = 1;
            v[j] = -1;
            out.push_back(v);
          }
      return out;
    }
    case Family::B: {
      for (int i = 0; i < l; ++i) both_signs(basis_vec(l, i));
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
          for (int sj : {1, -1}) {
            Vec v(l);
            v[i] = 1;
            v[j] = sj;
            both_signs(v);
          }
      return out;
    }
    case Family::C: {
      for (int i = 0; i < l; ++i) both_signs(basis_vec(l, i, 2));
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
          for (int sj : {1, -1}) {
            Vec v(l);
            v[i] = 1;
            v[j] = sj;
            both_signs(v);
          }
      return out;
    }
    case Family::D: {
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
          for (int sj : {1, -1}) {
            Vec v(l);
            v[i] = 1;
            v[j] = sj;
            both_signs(v);
          }
      return out;
    }
    case Family::E: {
      std::vector<Vec> e8;
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              Vec v(8);
              v[i] = si;
              v[j] = sj;
              e8.push_back(v);
            }
      for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;  // even number of minus signs
        Vec v(8);
        for (int i = 0; i < 8; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
        e8.push_back(v);
      }
      if (l == 8) return e8;
      std::vector<Vec> walls;
      walls.push_back(basis_vec(8, 6) + basis_vec(8, 7));             // e_7 + e_8 (1-based)
      if (l == 6) walls.push_back(basis_vec(8, 5) + basis_vec(8, 7));  // e_6 + e_8 (1-based)
      for (const auto& r : e8) {
        bool ok = true;
        for (const auto& w : walls) ok = ok && dot(r, w).is_zero();
        if (ok) out.push_back(r);
      }
      return out;
    }
    case Family::F: {
      for (int i = 0; i < 4; ++i) both_signs(basis_vec(4, i));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int sj : {1, -1}) {
            Vec v(4);
            v[i] = 1;
            v[j] = sj;
            both_signs(v);
          }
      for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (int i = 0; i < 4; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
        out.push_back(v);
      }
      return out;
    }
    case Family::G: {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          Vec v(3);
          v[i] = 1;
          v[j] = -1;
          out.push_back(v);  // e_i - e_j, all ordered pairs: both signs included
        }
      for (int i = 0; i < 3; ++i) {
        Vec v(3, Rational(-1));
        v[i] = 2;
        both_signs(v);
      }
      return out;
    }
  }
  throw DomainError("enumerate_roots: unknown family");
}

/// Bourbaki simple basis of one irreducible type.
[[nodiscard]] inline std::vector<Vec> simple_basis(SimpleType t) {
  std::vector<Vec> out;
  const int l = t.rank;
  switch (t.family) {
    case Family::A: {
      const int n = l + 1;
      for (int i = 0; i + 1 < n; ++i) out.push_back(basis_vec(n, i) - basis_vec(n, i + 1));
      return out;
    }
    case Family::B: {
      for (int i = 0; i + 1 < l; ++i) out.push_back(basis_vec(l, i) - basis_vec(l, i + 1));
      out.push_back(basis_vec(l, l - 1));
      return out;
    }
    case Family::C: {
      for (int i = 0; i + 1 < l; ++i) out.push_back(basis_vec(l, i) - basis_vec(l, i + 1));
      out.push_back(basis_vec(l, l - 1, 2));
      return out;
    }
    case Family::D: {
      for (int i = 0; i + 1 < l; ++i) out.push_back(basis_vec(l, i) - basis_vec(l, i + 1));
      out.push_back(basis_vec(l, l - 2) + basis_vec(l, l - 1));
      return out;
    }
    case Family::E: {
      Vec a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      out.push_back(a1);                                 // alpha_1
      out.push_back(basis_vec(8, 0) + basis_vec(8, 1));  // alpha_2
      for (int j = 3; j <= l; ++j)                       // alpha_j = e_{j-1} - e_{j-2} (1-based)
        out.push_back(basis_vec(8, j - 2) - basis_vec(8, j - 3));
      return out;
    }
    case Family::F: {
      out.push_back(basis_vec(4, 1) - basis_vec(4, 2));
      out.push_back(basis_vec(4, 2) - basis_vec(4, 3));
      out.push_back(basis_vec(4, 3));
      Vec a4(4, Rational(-1, 2));
      a4[0] = Rational(1, 2);
      out.push_back(a4);
      return out;
    }
    case Family::G: {
      out.push_back(basis_vec(3, 0) - basis_vec(3, 1));
      Vec a2(3, Rational(1));
      a2[0] = -2;
      out.push_back(a2);
      return out;
    }
  }
  throw DomainError("simple_basis: unknown family");
}

/// Fills in the derived tables (simple-basis expansions, index map).
inline void finalize(RootSystem& rs) {
  Matrix gram(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) gram.entry[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
  rs.simple_coeffs.clear();
  rs.index_of.clear();
  std::sort(rs.roots.begin(), rs.roots.end());
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    Vec rhs(rs.rank);
    for (int i = 0; i < rs.rank; ++i) rhs[i] = dot(rs.roots[k], rs.simple_roots[i]);
    const Vec x = solve(gram, rhs);
    std::vector<long long> coeffs(rs.rank);
    for (int i = 0; i < rs.rank; ++i) coeffs[i] = x[i].as_integer();
    rs.simple_coeffs.push_back(std::move(coeffs));
    rs.index_of.emplace(rs.roots[k], static_cast<int>(k));
  }
}

}  // namespace detail

/// Builds an irreducible root system.  Rank bounds: A >= 1, B >= 2,
/// C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2.
[[nodiscard]] inline RootSystem build_root_system(SimpleType type) {
  const int l = type.rank;
  const auto fail = [&](const char* why) {
    throw DomainError("build_root_system: " + to_string(type) + ": " + why);
  };
  switch (type.family) {
    case Family::A:
      if (l < 1) fail("rank must be >= 1");
      break;
    case Family::B:
    case Family::C:
      if (l < 2) fail("rank must be >= 2");
      break;
    case Family::D:
      if (l < 3) fail("rank must be >= 3");
      break;
    case Family::E:
      if (l < 6 || l > 8) fail("rank must be 6, 7 or 8");
      break;
    case Family::F:
      if (l != 4) fail("rank must be 4");
      break;
    case Family::G:
      if (l != 2) fail("rank must be 2");
      break;
    default:
      fail("unknown family");
  }
  RootSystem rs;
  rs.components = {type};
  rs.rank = l;
  rs.simple_roots = detail::simple_basis(type);
  rs.dim = static_cast<int>(rs.simple_roots.front().size());
  rs.node_offset = {0, l};
  rs.coord_offset = {0, rs.dim};
  rs.roots = detail::enumerate_roots(type);
  detail::finalize(rs);
  return rs;
}

[[nodiscard]] inline RootSystem build_root_system(Family f, int rank) {
  return build_root_system(SimpleType{f, rank});
}

/// Direct sum with block-diagonal coordinates.
[[nodiscard]] inline RootSystem direct_sum(const RootSystem& a, const RootSystem& b) {
  RootSystem rs;
  rs.components = a.components;
  rs.components.insert(rs.components.end(), b.components.begin(), b.components.end());
  rs.rank = a.rank + b.rank;
  rs.dim = a.dim + b.dim;
  rs.node_offset = a.node_offset;
  for (std::size_t i = 1; i < b.node_offset.size(); ++i)
    rs.node_offset.push_back(a.rank + b.node_offset[i]);
  rs.coord_offset = a.coord_offset;
  for (std::size_t i = 1; i < b.coord_offset.size(); ++i)
    rs.coord_offset.push_back(a.dim + b.coord_offset[i]);
  const auto embed_low = [&](const Vec& v) {
    Vec w(rs.dim);
    std::copy(v.begin(), v.end(), w.begin());
    return w;
  };
  const auto embed_high = [&](const Vec& v) {
    Vec w(rs.dim);
    std::copy(v.begin(), v.end(), w.begin() + a.dim);
    return w;
  };
  for (const auto& v : a.simple_roots) rs.simple_roots.push_back(embed_low(v));
  for (const auto& v : b.simple_roots) rs.simple_roots.push_back(embed_high(v));
  for (const auto& v : a.roots) rs.roots.push_back(embed_low(v));
  for (const auto& v : b.roots) rs.roots.push_back(embed_high(v));
  detail::finalize(rs);
  return rs;
}

[[nodiscard]] inline bool is_root(const RootSystem& rs, const Vec& v) {
  return v.size() == static_cast<std::size_t>(rs.dim) && rs.index_of.count(v) != 0;
}

/// Expansion of a root in the simple basis; DomainError otherwise.
[[nodiscard]] inline std::vector<long long> simple_coordinates(const RootSystem& rs, const Vec& v) {
  const auto it = v.size() == static_cast<std::size_t>(rs.dim) ? rs.index_of.find(v) : rs.index_of.end();
  if (it == rs.index_of.end()) throw DomainError("simple_coordinates: not a root: " + to_string(v));
  return rs.simple_coeffs[it->second];
}

/// 0-based indices of the simple roots appearing in the expansion.
[[nodiscard]] inline std::vector<int> support(const RootSystem& rs, const Vec& v) {
  const auto coeffs = simple_coordinates(rs, v);
  std::vector<int> out;
  for (int i = 0; i < rs.rank; ++i)
    if (coeffs[i] != 0) out.push_back(i);
  return out;
}

[[nodiscard]] inline bool is_positive_root(const RootSystem& rs, const Vec& v) {
  const auto coeffs = simple_coordinates(rs, v);
  for (const long long c : coeffs)
    if (c != 0) return c > 0;
  throw InternalError("zero vector stored as root");
}

/// Reflection of v in the hyperplane orthogonal to the root `mirror`.
[[nodiscard]] inline Vec reflect(const RootSystem& rs, const Vec& mirror, const Vec& v) {
  if (!is_root(rs, mirror)) throw DomainError("reflect: mirror is not a root");
  const Rational factor = (Rational(2) * dot(v, mirror)) / dot(mirror, mirror);
  return v - factor * mirror;
}

/// True when a != +-b and neither a+b nor a-b is a root.  In a
/// crystallographic system this forces <a,b> = 0.
[[nodiscard]] inline bool strongly_orthogonal(const RootSystem& rs, const Vec& a, const Vec& b) {
  if (!is_root(rs, a) || !is_root(rs, b)) throw DomainError("strongly_orthogonal: arguments must be roots");
  if (a == b || a == -b) return false;
  return !is_root(rs, a + b) && !is_root(rs, a - b);
}

/// One connected component of a marked node subset, classified and
/// listed in the Bourbaki order of its own type.
struct DynkinComponent {
  SimpleType type;
  std::vector<int> nodes;  // original 0-based indices, Bourbaki order
};

namespace detail {

/// Bond multiplicity between two simple roots: product of the two
/// Cartan integers, i.e. 0, 1, 2 or 3.
[[nodiscard]] inline int bond(const RootSystem& rs, int i, int j) {
  const Rational cij = (Rational(2) * dot(rs.simple_roots[i], rs.simple_roots[j])) /
                       dot(rs.simple_roots[j], rs.simple_roots[j]);
  const Rational cji = (Rational(2) * dot(rs.simple_roots[j], rs.simple_roots[i])) /
                       dot(rs.simple_roots[i], rs.simple_roots[i]);
  return static_cast<int>((cij * cji).as_integer());
}

[[nodiscard]] inline DynkinComponent classify_connected(const RootSystem& rs, std::vector<int> comp) {
  const auto norm = [&](int v) { return dot(rs.simple_roots[v], rs.simple_roots[v]); };
  const int k = static_cast<int>(comp.size());
  if (k == 1) return {{Family::A, 1}, comp};

  std::map<int, std::vector<int>> adj;
  int max_bond = 0;
  for (int a : comp) adj[a];
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int m = bond(rs, comp[i], comp[j]);
      if (m > 0) {
        adj[comp[i]].push_back(comp[j]);
        adj[comp[j]].push_back(comp[i]);
        max_bond = std::max(max_bond, m);
      }
    }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

  const auto walk_chain = [&](int start) {
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      if (next < 0) break;
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    return order;
  };

  if (max_bond == 3) {
    if (k != 2) throw InternalError("triple bond in a component of size != 2");
    std::vector<int> order = comp;
    if (norm(order[0]) > norm(order[1])) std::swap(order[0], order[1]);  // short, long
    return {{Family::G, 2}, order};
  }

  if (max_bond == 2) {
    if (k == 2) {
      std::vector<int> order = comp;
      if (norm(order[0]) < norm(order[1])) std::swap(order[0], order[1]);  // long, short
      return {{Family::B, 2}, order};
    }
    // A chain containing exactly one double bond: B, C or F_4.
    std::vector<int> ends;
    for (int v : comp)
      if (adj[v].size() == 1) ends.push_back(v);
    if (ends.size() != 2) throw InternalError("double bond in a non-chain component");
    std::vector<int> order = walk_chain(std::min(ends[0], ends[1]));
    int dpos = -1;
    for (int i = 0; i + 1 < k; ++i)
      if (bond(rs, order[i], order[i + 1]) == 2) dpos = i;
    if (dpos == 0) std::reverse(order.begin(), order.end());
    if (bond(rs, order[k - 2], order[k - 1]) == 2) {
      // Double bond at the end: B if the terminal root is short, C if long.
      if (norm(order[k - 1]) < norm(order[k - 2])) return {{Family::B, k}, order};
      return {{Family::C, k}, order};
    }
    if (k == 4) {
      // Double bond in the middle: F_4, long pair first.
      if (norm(order[0]) < norm(order[3])) std::reverse(order.begin(), order.end());
      return {{Family::F, 4}, order};
    }
    throw InternalError("unrecognizable multiply-laced chain");
  }

  // Simply laced: chain or a single degree-3 vertex.
  std::vector<int> forks;
  for (int v : comp)
    if (adj[v].size() == 3) forks.push_back(v);
  if (forks.empty()) {
    std::vector<int> ends;
    for (int v : comp)
      if (adj[v].size() <= 1) ends.push_back(v);
    if (ends.size() != 2) throw InternalError("simply-laced component is not a chain or fork");
    return {{Family::A, k}, walk_chain(std::min(ends[0], ends[1]))};
  }
  if (forks.size() != 1) throw InternalError("component with multiple fork vertices");
  const int center = forks[0];

  std::vector<std::vector<int>> branches;  // each listed from the center outward
  for (int nb : adj[center]) {
    std::vector<int> br{nb};
    int prev = center, cur = nb;
    while (true) {
      int next = -1;
      for (int x : adj[cur])
        if (x != prev) next = x;
      if (next < 0) break;
      br.push_back(next);
      prev = cur;
      cur = next;
    }
    branches.push_back(std::move(br));
  }
  std::sort(branches.begin(), branches.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.back() < y.back();  // tie-break by outer node index
  });
  const std::size_t l1 = branches[0].size(), l2 = branches[1].size(), l3 = branches[2].size();

  if (l1 == 1 && l2 == 1) {
    // D_k: the long branch walked inward, then the center, then the two
    // tips in index order.  For k = 4 all three branches are single
    // nodes; the lowest-index leaf plays the chain end.
    const std::size_t chain = (l3 == 1) ? 0 : 2;
    std::vector<int> order(branches[chain].rbegin(), branches[chain].rend());
    order.push_back(center);
    int t1 = branches[chain == 0 ? 1 : 0][0], t2 = branches[chain == 0 ? 2 : 1][0];
    if (t1 > t2) std::swap(t1, t2);
    order.push_back(t1);
    order.push_back(t2);
    return {{Family::D, k}, order};
  }
  if (l1 == 1 && l2 == 2 && l3 >= 2 && l3 <= 4) {
    // E_k: Bourbaki numbering around the fork.
    std::vector<int> order(static_cast<std::size_t>(k));
    order[1] = branches[0][0];  // alpha_2
    order[2] = branches[1][0];  // alpha_3
    order[0] = branches[1][1];  // alpha_1
    order[3] = center;          // alpha_4
    for (std::size_t i = 0; i < l3; ++i) order[4 + i] = branches[2][i];
    return {{Family::E, k}, order};
  }
  throw InternalError("fork shape outside the finite classification");
}

}  // namespace detail

/// Splits a node subset into connected components of the induced
/// sub-diagram, classifies each, and orders the result by smallest
/// original node index.
[[nodiscard]] inline std::vector<DynkinComponent> subsystem_components(const RootSystem& rs,
                                                                       const std::vector<int>& nodes) {
  std::vector<int> uniq = nodes;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  for (int v : uniq)
    if (v < 0 || v >= rs.rank) throw DomainError("subsystem_components: node index out of range");

  std::vector<DynkinComponent> out;
  std::vector<bool> seen(uniq.size(), false);
  for (std::size_t s = 0; s < uniq.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{uniq[s]};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t t = 0; t < uniq.size(); ++t)
        if (!seen[t] && detail::bond(rs, comp[head], uniq[t]) > 0) {
          seen[t] = true;
          comp.push_back(uniq[t]);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(detail::classify_connected(rs, comp));
  }
  std::sort(out.begin(), out.end(), [](const DynkinComponent& x, const DynkinComponent& y) {
    return *std::min_element(x.nodes.begin(), x.nodes.end()) <
           *std::min_element(y.nodes.begin(), y.nodes.end());
  });
  return out;
}

/// Permutation of `nodes` induced by the opposition involution of the
/// subsystem they span (the diagram automorphism realized by minus the
/// longest Weyl element): reversal on A components, tip swap on odd D
/// components, the order-2 symmetry on E6 components, identity
/// elsewhere.
[[nodiscard]] inline std::map<int, int> diagram_involution(const RootSystem& rs,
                                                           const std::vector<int>& nodes) {
  std::map<int, int> twist;
  for (const auto& c : subsystem_components(rs, nodes)) {
    const int k = c.type.rank;
    std::vector<int> image(c.nodes.begin(), c.nodes.end());
    if (c.type.family == Family::A) {
      std::reverse(image.begin(), image.end());
    } else if (c.type.family == Family::D && k % 2 == 1) {
      std::swap(image[k - 2], image[k - 1]);
    } else if (c.type.family == Family::E && k == 6) {
      std::swap(image[0], image[5]);
      std::swap(image[2], image[4]);
    }
    for (int i = 0; i < k; ++i) twist[c.nodes[i]] = image[i];
  }
  return twist;
}

/// The longest Weyl element of the subsystem spanned by `nodes`,
/// extended by the identity on the orthogonal complement.  Acts as
/// minus the standard diagram involution on the sub-span, so it maps
/// every positive root of the subsystem to a negative one, and it is an
/// involutive isometry.
[[nodiscard]] inline Matrix longest_element_map(const RootSystem& rs, const std::vector<int>& nodes) {
  const std::map<int, int> twist = diagram_involution(rs, nodes);
  std::vector<int> ordered;
  for (const auto& [from, to] : twist) ordered.push_back(from);
  if (ordered.empty()) return Matrix::identity(rs.dim);

  const int m = static_cast<int>(ordered.size());
  Matrix gram(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      gram.entry[i][j] = dot(rs.simple_roots[ordered[i]], rs.simple_roots[ordered[j]]);

  Matrix w(rs.dim, rs.dim);
  for (int col = 0; col < rs.dim; ++col) {
    const Vec e = detail::basis_vec(rs.dim, col);
    Vec rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = dot(e, rs.simple_roots[ordered[i]]);
    const Vec x = solve(gram, rhs);
    Vec img = e;
    for (int i = 0; i < m; ++i) {
      img = img - x[i] * rs.simple_roots[ordered[i]];
      img = img - x[i] * rs.simple_roots[twist.at(ordered[i])];
    }
    for (int row = 0; row < rs.dim; ++row) w.entry[row][col] = img[row];
  }
  return w;
}

}  // namespace minorb
