#pragma once
/// @file ortho.hpp
/// Real roots of a cross-marked diagram, maximal systems of pairwise
/// strongly orthogonal real roots, the invariant nu, and the reference
/// catalog of explicit maximal systems with a verification harness.

#include <algorithm>
#include <string>
#include <vector>

#include "minorb/errors.hpp"
#include "minorb/linalg.hpp"
#include "minorb/root_system.hpp"
#include "minorb/satake.hpp"

namespace minorb {

/// A system of pairwise strongly orthogonal real roots attached to a
/// diagram (not necessarily maximal; the catalog systems are).
struct OrthogonalSystem {
  SatakeDiagram diagram;
  std::vector<Vec> roots;
};

/// All roots fixed by the bar involution, in the root-system order.
[[nodiscard]] inline std::vector<Vec> real_roots(const SatakeDiagram& S) {
  std::vector<Vec> out;
  for (const Vec& r : S.rs.roots)
    if (S.bar(r) == r) out.push_back(r);
  return out;
}

namespace detail {

[[nodiscard]] inline Rational root_height(const RootSystem& rs, const Vec& v) {
  Rational h;
  for (const long long c : simple_coordinates(rs, v)) h += Rational(c);
  return h;
}

/// Positive real roots supported on the given nodes, in lex order.
[[nodiscard]] inline std::vector<Vec> positive_real_roots_in(const SatakeDiagram& S,
                                                             const std::vector<int>& nodes) {
  const std::vector<int> live = sorted_copy(nodes);
  std::vector<Vec> out;
  for (const Vec& r : S.rs.roots) {
    if (!is_positive_root(S.rs, r)) continue;
    if (S.bar(r) != r) continue;
    const std::vector<int> supp = support(S.rs, r);
    if (std::all_of(supp.begin(), supp.end(), [&live](int v) { return contains(live, v); }))
      out.push_back(r);
  }
  return out;
}

/// Maximum clique search on the strong-orthogonality graph
/// (branch-and-bound with a greedy coloring bound, deterministic).
class StrongOrthogonalitySearch {
 public:
  StrongOrthogonalitySearch(const RootSystem& rs, std::vector<Vec> vertices)
      : rs_(rs), verts_(std::move(vertices)) {
    const int m = static_cast<int>(verts_.size());
    adj_.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        adj_[i][j] = adj_[j][i] = strongly_orthogonal(rs_, verts_[i], verts_[j]);
  }

  /// Iteratively pick the highest remaining root, keep only its
  /// strongly orthogonal partners.  A lower bound for the maximum.
  [[nodiscard]] int cascade() const {
    std::vector<int> cand(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) cand[i] = static_cast<int>(i);
    int count = 0;
    while (!cand.empty()) {
      int pick = cand.front();
      for (int v : cand) {
        const Rational hv = root_height(rs_, verts_[v]);
        const Rational hp = root_height(rs_, verts_[pick]);
        if (hv > hp || (hv == hp && verts_[v] > verts_[pick])) pick = v;
      }
      ++count;
      std::vector<int> next;
      for (int v : cand)
        if (adj_[v][pick]) next.push_back(v);
      cand = std::move(next);
    }
    return count;
  }

  [[nodiscard]] int maximum(int lower_bound) {
    best_ = lower_bound;
    std::vector<int> all(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) all[i] = static_cast<int>(i);
    expand(all, 0);
    return best_;
  }

 private:
  void expand(const std::vector<int>& candidates, int chosen) {
    best_ = std::max(best_, chosen);
    if (candidates.empty()) return;

    // Greedy coloring: vertices in one class are pairwise NON-adjacent,
    // so any clique takes at most one vertex per class.
    std::vector<std::vector<int>> classes;
    for (int v : candidates) {
      bool placed = false;
      for (auto& cls : classes) {
        if (std::none_of(cls.begin(), cls.end(), [&](int u) { return adj_[u][v]; })) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    std::vector<int> order;
    std::vector<int> bound;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(c) + 1);
      }

    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (chosen + bound[i] <= best_) return;
      const int v = order[i];
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (adj_[order[j]][v]) next.push_back(order[j]);
      expand(next, chosen + 1);
    }
  }

  const RootSystem& rs_;
  std::vector<Vec> verts_;
  std::vector<std::vector<bool>> adj_;
  int best_ = 0;
};

}  // namespace detail

/// Cascade lower bound for nu on the subsystem spanned by `nodes`.
[[nodiscard]] inline int nu_cascade_in(const SatakeDiagram& S, const std::vector<int>& nodes) {
  detail::StrongOrthogonalitySearch search(S.rs, detail::positive_real_roots_in(S, nodes));
  return search.cascade();
}

[[nodiscard]] inline int nu_cascade(const SatakeDiagram& S) {
  return nu_cascade_in(S, S.all_nodes());
}

/// Exact maximum cardinality of a set of pairwise strongly orthogonal
/// real roots, restricted to the subsystem spanned by `nodes`.  The
/// search runs over positive real roots only: a strongly orthogonal set
/// never contains a root and its negative, and flipping signs preserves
/// strong orthogonality.
[[nodiscard]] inline int nu_exact_in(const SatakeDiagram& S, const std::vector<int>& nodes) {
  detail::StrongOrthogonalitySearch search(S.rs, detail::positive_real_roots_in(S, nodes));
  return search.maximum(search.cascade());
}

[[nodiscard]] inline int nu_exact(const SatakeDiagram& S) {
  return nu_exact_in(S, S.all_nodes());
}

namespace detail {

/// The eight pairwise strongly orthogonal roots e1-e2, e1+e2, e3-e4,
/// e3+e4, ... of the largest exceptional realization (1-based index i).
[[nodiscard]] inline Vec exceptional_beta(int i, int dim) {
  if (i % 2 == 1) return basis_vec(dim, i - 1) - basis_vec(dim, i);
  return basis_vec(dim, i - 2) + basis_vec(dim, i - 1);
}

[[nodiscard]] inline Vec simple_combination(const RootSystem& rs,
                                            const std::vector<long long>& coeffs) {
  Vec v(rs.dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    v = v + Rational(coeffs[i]) * rs.simple_roots[static_cast<int>(i)];
  return v;
}

}  // namespace detail

/// The catalog's explicit maximal system of strongly orthogonal real
/// roots, instantiated in the stored realization.  COMPACT and COMPLEX
/// forms have no real roots and get the empty system.
[[nodiscard]] inline OrthogonalSystem gamma_reference(const AlgebraSpec& spec) {
  OrthogonalSystem out{catalog_diagram(spec), {}};
  const RootSystem& rs = out.diagram.rs;
  const auto E = [&rs](int i) { return detail::basis_vec(rs.dim, i); };
  const auto add = [&out](const Vec& v) { out.roots.push_back(v); };
  const auto combo = [&rs](std::vector<long long> c) {
    return detail::simple_combination(rs, c);
  };
  const auto beta = [&rs](int i) { return detail::exceptional_beta(i, rs.dim); };

  switch (spec.family) {
    case FamilyTag::AI:
      for (int i = 1; i <= spec.n / 2; ++i) add(E(i - 1) - E(spec.n - i));
      break;
    case FamilyTag::AII:
      break;
    case FamilyTag::AIII: {
      const int n = spec.p + spec.q;
      for (int i = 1; i <= spec.p; ++i) add(E(i - 1) - E(n - i));
      break;
    }
    case FamilyTag::AIV:
      add(E(0) - E(spec.q));
      break;
    case FamilyTag::BI:
      for (int j = 1; 2 * j <= spec.p; ++j) {
        add(E(2 * j - 2) + E(2 * j - 1));
        add(E(2 * j - 2) - E(2 * j - 1));
      }
      if (spec.p % 2 == 1) add(E(spec.p - 1));
      break;
    case FamilyTag::BII:
      add(E(0));
      break;
    case FamilyTag::CI:
      for (int i = 0; i < spec.n; ++i) add(Rational(2) * E(i));
      break;
    case FamilyTag::CII:
      for (int i = 1; i <= spec.p; ++i) add(E(2 * i - 2) + E(2 * i - 1));
      break;
    case FamilyTag::DI:
      for (int h = 1; 2 * h <= spec.p; ++h) {
        add(E(2 * h - 2) + E(2 * h - 1));
        add(E(2 * h - 2) - E(2 * h - 1));
      }
      break;
    case FamilyTag::DII:
      break;
    case FamilyTag::DIII:
      for (int h = 1; 2 * h <= spec.n; ++h) add(E(2 * h - 2) + E(2 * h - 1));
      break;
    case FamilyTag::EI:
      for (int i = 1; i <= 4; ++i) add(beta(i));
      break;
    case FamilyTag::EII:
      add(rs.simple_roots[3]);
      add(combo({1, 2, 2, 3, 2, 1}));
      add(combo({1, 0, 1, 1, 1, 1}));
      add(combo({0, 0, 1, 1, 1, 0}));
      break;
    case FamilyTag::EIII:
      add(combo({1, 2, 2, 3, 2, 1}));
      add(combo({1, 0, 1, 1, 1, 1}));
      break;
    case FamilyTag::EIV:
      break;
    case FamilyTag::EV:
      for (int i = 1; i <= 7; ++i) add(beta(i));
      break;
    case FamilyTag::EVI:
      add(rs.simple_roots[0]);
      add(combo({1, 1, 2, 2, 1}));
      add(combo({1, 1, 2, 2, 2, 2, 1}));
      add(combo({1, 2, 2, 4, 3, 2, 1}));
      break;
    case FamilyTag::EVII:
      add(rs.simple_roots[6]);
      add(combo({0, 1, 1, 2, 2, 2, 1}));
      add(combo({2, 2, 3, 4, 3, 2, 1}));
      break;
    case FamilyTag::EVIII:
      for (int i = 1; i <= 8; ++i) add(beta(i));
      break;
    case FamilyTag::EIX:
      add(rs.simple_roots[6]);
      add(combo({0, 1, 1, 2, 2, 2, 1}));
      add(combo({2, 2, 3, 4, 3, 2, 1}));
      add(combo({2, 3, 4, 6, 5, 4, 3, 2}));
      break;
    case FamilyTag::FI:
      add(E(0) + E(1));
      add(E(0) - E(1));
      add(E(2) + E(3));
      add(E(2) - E(3));
      break;
    case FamilyTag::FII:
      add(combo({1, 2, 3, 2}));
      break;
    case FamilyTag::GI:
      add(E(0) - E(1));
      add(Rational(2) * E(2) - E(0) - E(1));
      break;
    case FamilyTag::COMPACT:
    case FamilyTag::COMPLEX:
      break;
  }
  return out;
}

/// Outcome of checking a catalog reference system against the engine.
struct GammaVerification {
  RealFormLabel label;
  OrthogonalSystem system;
  bool members_are_roots = false;
  bool members_are_real = false;
  bool pairwise_strongly_orthogonal = false;
  bool no_duplicates = false;
  int size = 0;
  int nu_formula = 0;  ///< the catalog's nu for this family
  int nu_engine = 0;   ///< exact search result

  [[nodiscard]] bool ok() const {
    return members_are_roots && members_are_real && pairwise_strongly_orthogonal &&
           no_duplicates && size == nu_formula && nu_formula == nu_engine;
  }

  [[nodiscard]] std::string summary() const {
    std::string s = label.text + ": ";
    if (ok()) return s + "ok (nu = " + std::to_string(nu_engine) + ")";
    s += "FAILED [";
    if (!members_are_roots) s += " not-roots";
    if (!members_are_real) s += " not-real";
    if (!pairwise_strongly_orthogonal) s += " not-strongly-orthogonal";
    if (!no_duplicates) s += " duplicates";
    if (size != nu_formula)
      s += " size=" + std::to_string(size) + "!=formula=" + std::to_string(nu_formula);
    if (nu_formula != nu_engine)
      s += " formula=" + std::to_string(nu_formula) + "!=engine=" + std::to_string(nu_engine);
    return s + " ]";
  }
};

/// Checks the catalog reference system: every member is a real root,
/// the system is pairwise strongly orthogonal and duplicate-free, and
/// its size equals both the catalog's nu formula and the exact search.
[[nodiscard]] inline GammaVerification verify_gamma(const AlgebraSpec& spec) {
  GammaVerification v;
  v.system = gamma_reference(spec);
  v.label = v.system.diagram.label;
  const SatakeDiagram& S = v.system.diagram;
  const auto& roots = v.system.roots;

  v.size = static_cast<int>(roots.size());
  v.members_are_roots =
      std::all_of(roots.begin(), roots.end(), [&S](const Vec& r) { return is_root(S.rs, r); });
  v.members_are_real = v.members_are_roots &&
                       std::all_of(roots.begin(), roots.end(),
                                   [&S](const Vec& r) { return S.bar(r) == r; });
  v.no_duplicates = true;
  v.pairwise_strongly_orthogonal = v.members_are_roots;
  for (std::size_t i = 0; i < roots.size() && v.members_are_roots; ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (roots[i] == roots[j]) v.no_duplicates = false;
      if (!strongly_orthogonal(S.rs, roots[i], roots[j]))
        v.pairwise_strongly_orthogonal = false;
    }
  v.nu_formula = v.label.nu_value;
  v.nu_engine = nu_exact(S);
  return v;
}

}  // namespace minorb
