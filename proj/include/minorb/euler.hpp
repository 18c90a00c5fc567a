#pragma once

// Euler characteristics of minimal orbits of cross-marked diagrams: the
// positivity criterion, the values for a single crossed node, fundamental
// group orders, the general recursion along equivariant fibrations, and
// closed-form oracles for several families.
//
// Conventions: node indices are 0-based throughout the library; strings
// meant for humans (trace summaries, labels) render positions 1-based.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <minorb/ortho.hpp>
#include <minorb/satake.hpp>

namespace minorb {

/// One step of the fibration recursion: the orbit fibers over the
/// maximal-parabolic orbit of `base` crossed at `pivot`, with the
/// remaining diagram and crosses summarized in `fiber`.
struct TraceStep {
  int pivot = 0;        ///< chosen crossed node (0-based)
  std::string base;     ///< label of the simple ideal carrying this step
  long long base_chi = 0;  ///< Euler characteristic of the base orbit
  std::string fiber;    ///< summary of the fiber diagram and its crosses
};

/// Result of an Euler characteristic query.
///
/// Invariants: chi >= 0.  When chi > 0, chi_tilde and pi1 are present
/// with chi * pi1 == chi_tilde and nu_g == nu_levi.  When chi == 0 the
/// optional fields are absent and nu_levi < nu_g is the witness.
struct EulerReport {
  long long chi = 0;
  std::optional<long long> chi_tilde;  ///< Euler characteristic of the universal cover
  std::optional<long long> pi1;        ///< order of the fundamental group
  int nu_g = 0;     ///< strongly orthogonal bound for the whole diagram
  int nu_levi = 0;  ///< the same bound for the Levi subdiagram
  std::vector<RealFormLabel> levi;  ///< recognized Levi factors
  std::vector<TraceStep> trace;     ///< fibration steps, in recursion order
};

namespace detail {

[[nodiscard]] inline std::vector<int> set_minus(const std::vector<int>& a,
                                                const std::vector<int>& b) {
  const std::vector<int> rhs = sorted_copy(b);
  std::vector<int> out;
  for (int v : a)
    if (!contains(rhs, v)) out.push_back(v);
  return out;
}

[[nodiscard]] inline std::vector<int> set_and(const std::vector<int>& a,
                                              const std::vector<int>& b) {
  const std::vector<int> rhs = sorted_copy(b);
  std::vector<int> out;
  for (int v : a)
    if (contains(rhs, v)) out.push_back(v);
  return out;
}

/// Positivity criterion restricted to one fragment: the strongly
/// orthogonal bound of the Levi subdiagram must reach the bound of the
/// fragment itself.
[[nodiscard]] inline bool criterion_in(const SatakeDiagram& S, const std::vector<int>& frag,
                                       const std::vector<int>& crosses) {
  const std::vector<int> live = set_minus(frag, swept_nodes(S, frag, crosses));
  return nu_exact_in(S, live) == nu_exact_in(S, frag);
}

/// |W(K)| of the fragment divided by the product of the compact Weyl
/// orders of its Levi factors.  The quotient counts the cells of the
/// base orbit's cover, so it must divide exactly.
[[nodiscard]] inline long long chi_tilde_in(const SatakeDiagram& S, const std::vector<int>& frag,
                                            const std::vector<int>& crosses,
                                            long long compact_order) {
  const std::vector<int> live = set_minus(frag, swept_nodes(S, frag, crosses));
  long long denom = 1;
  for (const auto& f : fragments_in(S, live))
    denom *= recognize_component(S, f).label.weyl_k_order;
  if (denom == 0 || compact_order % denom != 0)
    throw InternalError("chi_tilde: Levi Weyl order does not divide |W(K)|");
  return compact_order / denom;
}

/// Fundamental group orders of maximal-parabolic minimal orbits with
/// positive Euler characteristic, keyed by family and crossed position.
/// These are catalog data: split A at any node and split E6 or odd-p
/// type-I orthogonal forms at the first node give a two-fold cover;
/// every other positive case is simply connected.
[[nodiscard]] inline long long pi1_from_table(const RealFormLabel& label, int position) {
  switch (label.spec.family) {
    case FamilyTag::AI:
      return 2;
    case FamilyTag::DI:
      return (label.spec.p % 2 == 1 && position == 0) ? 2 : 1;
    case FamilyTag::EI:
      return (position == 0 || position == 5) ? 2 : 1;
    default:
      return 1;
  }
}

/// Euler characteristic of the maximal-parabolic orbit of one fragment:
/// zero when the criterion fails, otherwise the cover count divided by
/// the fundamental group order.  `position` locates the pivot in the
/// fragment's standard node order.
[[nodiscard]] inline long long chi_mp_in(const SatakeDiagram& S, const std::vector<int>& frag,
                                         const RealFormLabel& label, int pivot, int position) {
  if (!criterion_in(S, frag, {pivot})) return 0;
  const long long tilde = chi_tilde_in(S, frag, {pivot}, label.weyl_k_order);
  const long long pi1 = pi1_from_table(label, position);
  if (tilde % pi1 != 0)
    throw InternalError("chi: cover count is not a multiple of the fundamental group order");
  return tilde / pi1;
}

[[nodiscard]] inline std::string fiber_summary(const SatakeDiagram& S,
                                               const std::vector<int>& live,
                                               const std::vector<int>& crosses) {
  if (live.empty()) return "point";
  std::string out;
  for (const auto& frag : fragments_in(S, live)) {
    if (!out.empty()) out += " + ";
    out += recognize_component(S, frag).label.text;
  }
  if (!crosses.empty()) {
    out += ", crosses {";
    for (std::size_t i = 0; i < crosses.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(crosses[i] + 1);
    }
    out += "}";
  }
  return out;
}

/// The recursion on one fragment (a simple real ideal): short-circuit
/// to zero on a failed criterion, otherwise fiber over the orbit of the
/// lowest crossed node and recurse on the remaining fragments.
[[nodiscard]] inline long long chi_fragment(const SatakeDiagram& S, const std::vector<int>& frag,
                                            const std::vector<int>& crosses,
                                            std::vector<TraceStep>& trace) {
  if (!criterion_in(S, frag, crosses)) return 0;
  if (crosses.empty()) return 1;
  const RecognizedForm form = recognize_component(S, frag);
  const int pivot = *std::min_element(crosses.begin(), crosses.end());
  const auto where = std::find(form.nodes.begin(), form.nodes.end(), pivot);
  const int position = static_cast<int>(where - form.nodes.begin());
  const long long base = chi_mp_in(S, frag, form.label, pivot, position);
  const std::vector<int> erased = swept_nodes(S, frag, {pivot});
  const std::vector<int> fiber_live = set_minus(frag, erased);
  const std::vector<int> fiber_crosses = set_minus(crosses, erased);
  trace.push_back(
      {pivot, form.label.text, base, fiber_summary(S, fiber_live, fiber_crosses)});
  long long out = base;
  for (const auto& f : fragments_in(S, fiber_live))
    out *= chi_fragment(S, f, set_and(fiber_crosses, f), trace);
  return out;
}

}  // namespace detail

/// True iff crossing the given nodes preserves the maximal number of
/// pairwise strongly orthogonal real roots, i.e. the Levi subdiagram
/// attains the bound of the whole diagram.  This is exactly the
/// positivity of the orbit's Euler characteristic.
[[nodiscard]] inline bool positivity_criterion(const SatakeDiagram& S,
                                               const std::vector<int>& crosses) {
  detail::check_nodes(S, crosses, "positivity_criterion");
  const std::vector<int> live = detail::set_minus(S.all_nodes(), pi_closure(S, crosses));
  return nu_exact_in(S, live) == nu_exact(S);
}

/// Euler characteristic of the universal cover of the minimal orbit:
/// |W(K)| divided by the Weyl order of the compact part of the Levi.
/// Requires a diagram with a single simple ideal and a positive orbit.
[[nodiscard]] inline long long chi_tilde(const SatakeDiagram& S,
                                         const std::vector<int>& crosses) {
  detail::check_nodes(S, crosses, "chi_tilde");
  if (detail::fragments_in(S, S.all_nodes()).size() != 1)
    throw PreconditionError("chi_tilde: diagram has more than one simple ideal");
  if (!positivity_criterion(S, crosses))
    throw PreconditionError("chi_tilde: the positivity criterion fails for this cross set");
  return detail::chi_tilde_in(S, S.all_nodes(), crosses, S.label.weyl_k_order);
}

/// Order of the fundamental group of the maximal-parabolic minimal
/// orbit crossed at `alpha`.  Defined only when that orbit has positive
/// Euler characteristic; otherwise the query is rejected.
[[nodiscard]] inline long long pi1_order(const SatakeDiagram& S, int alpha) {
  detail::check_nodes(S, {alpha}, "pi1_order");
  if (detail::fragments_in(S, S.all_nodes()).size() != 1)
    throw PreconditionError("pi1_order: diagram has more than one simple ideal");
  if (!positivity_criterion(S, {alpha}))
    throw DomainError("pi1_order: undefined query: the orbit has Euler characteristic 0");
  return detail::pi1_from_table(S.label, alpha);
}

/// Euler characteristic of the minimal orbit with a single crossed
/// node: zero when the criterion fails, chi_tilde / pi1_order else.
[[nodiscard]] inline long long chi_maximal_parabolic(const SatakeDiagram& S, int alpha) {
  detail::check_nodes(S, {alpha}, "chi_maximal_parabolic");
  if (detail::fragments_in(S, S.all_nodes()).size() != 1)
    throw PreconditionError("chi_maximal_parabolic: diagram has more than one simple ideal");
  return detail::chi_mp_in(S, S.all_nodes(), S.label, alpha, alpha);
}

/// Full Euler characteristic query.  An empty cross set yields a point.
/// A diagram with several simple ideals contributes the product of the
/// per-ideal values.  Each simple ideal either fails the criterion
/// (witnessed by nu_levi < nu_g) or fibers over the orbit of its lowest
/// crossed node; the trace records each step.  The pivot choice does
/// not affect the value.
[[nodiscard]] inline EulerReport chi(const SatakeDiagram& S, const std::vector<int>& crosses) {
  detail::check_nodes(S, crosses, "chi");
  EulerReport report;
  const std::vector<int> all = S.all_nodes();
  const std::vector<int> sorted = detail::sorted_copy(crosses);
  const std::vector<int> live = detail::set_minus(all, pi_closure(S, sorted));
  report.nu_g = nu_exact(S);
  report.nu_levi = nu_exact_in(S, live);
  for (const auto& factor : levi_factors(S, sorted)) report.levi.push_back(factor.label);

  long long total = 1;
  long long tilde = 1;
  for (const auto& frag : detail::fragments_in(S, all)) {
    const std::vector<int> sub = detail::set_and(sorted, frag);
    total *= detail::chi_fragment(S, frag, sub, report.trace);
    if (total == 0) continue;
    const RealFormLabel label = recognize_component(S, frag).label;
    tilde *= detail::chi_tilde_in(S, frag, sub, label.weyl_k_order);
  }
  report.chi = total;
  if (total > 0) {
    if (tilde % total != 0)
      throw InternalError("chi: cover count is not a multiple of the Euler characteristic");
    report.chi_tilde = tilde;
    report.pi1 = tilde / total;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Families with a closed product formula, used as oracles against the
/// recursion.  Cross positions are 1-based diagram indices.
enum class ClosedFormCase { Dn_compact, DII, AII, EIV_family, AI_general };

namespace detail {

/// Cross positions of a type-D diagram as a flag shape: positions are
/// kept as-is except at the fork, where a lone second-to-last node is
/// the mirror image of the last one and is normalized to it.  Returns
/// the strictly increasing shape; the largest entry is never n-1.
[[nodiscard]] inline std::vector<int> d_flag_shape(int n, std::vector<int> crosses) {
  std::sort(crosses.begin(), crosses.end());
  const bool near_tip = contains(crosses, n - 1);
  const bool far_tip = contains(crosses, n);
  if (near_tip && !far_tip) {
    crosses.erase(std::find(crosses.begin(), crosses.end(), n - 1));
    crosses.push_back(n);
  }
  return crosses;
}

[[nodiscard]] inline long long dn_compact_closed_form(int n, const std::vector<int>& crosses) {
  if (n < 3) throw DomainError("chi_closed_form: Dn_compact needs n >= 3");
  for (int c : crosses)
    if (c < 1 || c > n) throw DomainError("chi_closed_form: cross out of range");
  const std::vector<int> shape = d_flag_shape(n, crosses);
  if (shape.empty()) return 1;
  const int last = shape.back();
  std::vector<int> walls{0};
  walls.insert(walls.end(), shape.begin(), shape.end());
  long long value = (last <= n - 2) ? (1LL << last) : (1LL << (n - 1));
  value *= factorial_ll(n);
  if (last <= n - 2) walls.push_back(n);
  for (std::size_t h = 0; h + 1 < walls.size(); ++h) value /= factorial_ll(walls[h + 1] - walls[h]);
  return value;
}

}  // namespace detail

/// Closed product formulas for selected families, exact oracles for the
/// recursion.  `n` is the family parameter (matrix size for the A
/// cases, the rank for the D cases); `crosses` are 1-based positions on
/// the diagram of the named real form.  Parameters violating the shape
/// of the case are rejected with DomainError.
[[nodiscard]] inline long long chi_closed_form(ClosedFormCase which, int n,
                                               const std::vector<int>& crosses) {
  switch (which) {
    case ClosedFormCase::Dn_compact:
      return detail::dn_compact_closed_form(n, crosses);

    case ClosedFormCase::DII: {
      // so(1,2n-1): every cross set is equivalent to one containing the
      // first node; the orbit then fibers over a chi = 2 base with a
      // compact type-D fiber one rank down.
      if (n < 4) throw DomainError("chi_closed_form: DII needs n >= 4");
      for (int c : crosses)
        if (c < 1 || c > n) throw DomainError("chi_closed_form: cross out of range");
      if (crosses.empty()) return 1;
      std::vector<int> tail;
      for (int c : detail::d_flag_shape(n, crosses))
        if (c >= 2) tail.push_back(c - 1);
      return 2 * detail::dn_compact_closed_form(n - 1, tail);
    }

    case ClosedFormCase::AII: {
      // sl(n,H) on the diagram of rank 2n-1, crossed at odd positions
      // 2 j_i - 1 only.
      if (n < 2) throw DomainError("chi_closed_form: AII needs n >= 2");
      std::vector<int> js;
      for (int c : crosses) {
        if (c < 1 || c > 2 * n - 1) throw DomainError("chi_closed_form: cross out of range");
        if (c % 2 == 0)
          throw DomainError("chi_closed_form: AII closed form needs odd cross positions");
        js.push_back((c + 1) / 2);
      }
      std::sort(js.begin(), js.end());
      std::vector<int> walls{0};
      walls.insert(walls.end(), js.begin(), js.end());
      walls.push_back(n + 1);
      long long value = (1LL << js.size()) * detail::factorial_ll(n);
      for (std::size_t h = 0; h + 1 < walls.size(); ++h)
        value /= detail::factorial_ll(walls[h + 1] - walls[h] - 1);
      return value;
    }

    case ClosedFormCase::EIV_family: {
      // Crosses containing both end nodes: the orbit fibers over the
      // chi = 6 orbit of {1,6}, with fiber the compact interior diagram
      // crossed at the remaining positions.
      if (n != 6) throw DomainError("chi_closed_form: EIV_family needs n = 6");
      for (int c : crosses)
        if (c < 1 || c > 6) throw DomainError("chi_closed_form: cross out of range");
      const std::vector<int> sorted = detail::sorted_copy(crosses);
      if (!detail::contains(sorted, 1) || !detail::contains(sorted, 6))
        throw DomainError("chi_closed_form: EIV_family needs crosses at both end nodes");
      const SatakeDiagram S = catalog_diagram({FamilyTag::EIV});
      std::vector<int> interior_live = S.black_nodes();
      for (int c : sorted)
        if (c != 1 && c != 6)
          interior_live = detail::set_minus(interior_live, std::vector<int>{c - 1});
      long long denom = 1;
      for (const auto& frag : detail::fragments_in(S, interior_live))
        denom *= recognize_component(S, frag).label.weyl_k_order;
      const long long interior_order =
          recognize_component(S, S.black_nodes()).label.weyl_k_order;
      return 6 * (interior_order / denom);
    }

    case ClosedFormCase::AI_general: {
      // sl(n,R): positive exactly when the bracketed half-gaps fill the
      // split rank, with a multinomial of half-gaps as the value.
      if (n < 2) throw DomainError("chi_closed_form: AI_general needs n >= 2");
      std::vector<int> walls{0};
      for (int c : detail::sorted_copy(crosses)) {
        if (c < 1 || c > n - 1) throw DomainError("chi_closed_form: cross out of range");
        walls.push_back(c);
      }
      walls.push_back(n);
      int half_sum = 0;
      for (std::size_t h = 0; h + 1 < walls.size(); ++h) half_sum += (walls[h + 1] - walls[h]) / 2;
      if (half_sum != n / 2) return 0;
      long long value = detail::factorial_ll(n / 2);
      for (std::size_t h = 0; h + 1 < walls.size(); ++h)
        value /= detail::factorial_ll((walls[h + 1] - walls[h]) / 2);
      return value;
    }
  }
  throw InternalError("chi_closed_form: unhandled case");
}

}  // namespace minorb
