#pragma once
/// @file satake.hpp
/// Cross-marked diagrams for the classical and exceptional real forms:
/// the catalog of diagrams, the bar involution they induce on the
/// ambient coordinate space, closure and erasure of cross sets, and
/// recognition of erased fragments as real forms again.
///
/// A diagram consists of a root system together with a black/white
/// coloring of its nodes and an optional order-2 pairing ("arrows") on
/// white nodes.  Crosses are an independent marking on top of the
/// diagram; they select the parabolic data and are handled by the
/// closure/erasure operations below.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "minorb/errors.hpp"
#include "minorb/linalg.hpp"
#include "minorb/root_system.hpp"

namespace minorb {

// ---------------------------------------------------------------------------
// Real-form families and labels
// ---------------------------------------------------------------------------

/// The families of simple real Lie algebras, in the traditional
/// lettering, plus the two degenerate families: COMPACT (every node
/// black) and COMPLEX (a complex algebra viewed as a real one; two
/// copies of the diagram joined nodewise by arrows).
enum class FamilyTag {
  AI,    ///< sl(n,R),      n >= 2
  AII,   ///< sl(n,H),      n >= 2
  AIII,  ///< su(p,q),      2 <= p <= q
  AIV,   ///< su(1,q),      q >= 1
  BI,    ///< so(p,2n+1-p), 2 <= p <= n, n >= 2
  BII,   ///< so(1,2n),     n >= 2
  CI,    ///< sp(2n,R),     n >= 2
  CII,   ///< sp(p,q),      1 <= p <= q
  DI,    ///< so(p,2n-p),   2 <= p <= n, n >= 4
  DII,   ///< so(1,2n-1),   n >= 4
  DIII,  ///< so*(2n),      n >= 3
  EI,    ///< split E6
  EII,
  EIII,
  EIV,
  EV,  ///< split E7
  EVI,
  EVII,
  EVIII,  ///< split E8
  EIX,
  FI,  ///< split F4
  FII,
  GI,       ///< split G2
  COMPACT,  ///< compact form of an arbitrary simple type
  COMPLEX,  ///< complex simple algebra regarded as a real algebra
};

[[nodiscard]] inline std::string to_string(FamilyTag f) {
  switch (f) {
    case FamilyTag::AI: return "A I";
    case FamilyTag::AII: return "A II";
    case FamilyTag::AIII: return "A III";
    case FamilyTag::AIV: return "A IV";
    case FamilyTag::BI: return "B I";
    case FamilyTag::BII: return "B II";
    case FamilyTag::CI: return "C I";
    case FamilyTag::CII: return "C II";
    case FamilyTag::DI: return "D I";
    case FamilyTag::DII: return "D II";
    case FamilyTag::DIII: return "D III";
    case FamilyTag::EI: return "E I";
    case FamilyTag::EII: return "E II";
    case FamilyTag::EIII: return "E III";
    case FamilyTag::EIV: return "E IV";
    case FamilyTag::EV: return "E V";
    case FamilyTag::EVI: return "E VI";
    case FamilyTag::EVII: return "E VII";
    case FamilyTag::EVIII: return "E VIII";
    case FamilyTag::EIX: return "E IX";
    case FamilyTag::FI: return "F I";
    case FamilyTag::FII: return "F II";
    case FamilyTag::GI: return "G I";
    case FamilyTag::COMPACT: return "compact";
    case FamilyTag::COMPLEX: return "complex";
  }
  throw InternalError("unhandled family tag");
}

/// A simple real form, identified by family and parameters.  The
/// parameter conventions match the doc comments on FamilyTag: families
/// with a single parameter use `n` (AI, AII, BII, CI, DII, DIII) or `q`
/// (AIV); two-parameter families use (p, q) for AIII and CII and (p, n)
/// for BI and DI.  COMPACT and COMPLEX carry the simple type in `base`.
struct AlgebraSpec {
  FamilyTag family{};
  int p = 0;
  int q = 0;
  int n = 0;
  SimpleType base{};

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// One factor of a maximal compact subalgebra.
struct CompactFactor {
  enum class Kind { so, su, sp, u, torus, e6, e7, f4 };
  Kind kind{};
  int m = 0;  ///< the classical parameter; unused for exceptional kinds

  friend bool operator==(const CompactFactor&, const CompactFactor&) = default;
};

/// Order of the Weyl group of a compact factor.
[[nodiscard]] inline long long compact_weyl_order(const CompactFactor& f) {
  const auto factorial = [](int m) {
    long long out = 1;
    for (int i = 2; i <= m; ++i) out *= i;
    return out;
  };
  const auto pow2 = [](int e) { return 1LL << e; };
  switch (f.kind) {
    case CompactFactor::Kind::torus: return 1;
    case CompactFactor::Kind::su:
    case CompactFactor::Kind::u: return factorial(f.m);
    case CompactFactor::Kind::sp: return pow2(f.m) * factorial(f.m);
    case CompactFactor::Kind::so: {
      if (f.m <= 2) return 1;
      const int k = f.m / 2;
      return (f.m % 2 == 1) ? pow2(k) * factorial(k) : pow2(k - 1) * factorial(k);
    }
    case CompactFactor::Kind::f4: return 1152;
    case CompactFactor::Kind::e6: return 51840;
    case CompactFactor::Kind::e7: return 2903040;
  }
  throw InternalError("unhandled compact factor kind");
}

[[nodiscard]] inline std::string to_string(const CompactFactor& f) {
  switch (f.kind) {
    case CompactFactor::Kind::torus: return "R";
    case CompactFactor::Kind::su: return "su(" + std::to_string(f.m) + ")";
    case CompactFactor::Kind::u: return "u(" + std::to_string(f.m) + ")";
    case CompactFactor::Kind::sp: return "sp(" + std::to_string(f.m) + ")";
    case CompactFactor::Kind::so: return "so(" + std::to_string(f.m) + ")";
    case CompactFactor::Kind::f4: return "f4";
    case CompactFactor::Kind::e6: return "e6";
    case CompactFactor::Kind::e7: return "e7";
  }
  throw InternalError("unhandled compact factor kind");
}

/// Full label of a real form: the identifying spec plus the catalog
/// payload used downstream (maximal compact subalgebra, its Weyl order,
/// the maximal number of pairwise strongly orthogonal real roots, and
/// the real rank ell of a maximally split Cartan subalgebra... stored
/// here as the rank of the ambient diagram for uniformity).
struct RealFormLabel {
  AlgebraSpec spec{};
  std::string text;          ///< canonical printable name, e.g. "so(3,7)"
  std::string compact_text;  ///< maximal compact subalgebra, e.g. "so(3)+so(4)"
  std::vector<CompactFactor> compact_factors;
  long long weyl_k_order = 1;  ///< order of the Weyl group of the compact part
  int nu_value = 0;            ///< max count of pairwise strongly orthogonal real roots
  int rank = 0;                ///< rank of the diagram (number of nodes)
};

namespace detail {

[[nodiscard]] inline long long factorial_ll(int m) {
  long long out = 1;
  for (int i = 2; i <= m; ++i) out *= i;
  return out;
}

[[nodiscard]] inline std::string compact_name(SimpleType t) {
  switch (t.family) {
    case Family::A: return "su(" + std::to_string(t.rank + 1) + ")";
    case Family::B: return "so(" + std::to_string(2 * t.rank + 1) + ")";
    case Family::C: return "sp(" + std::to_string(t.rank) + ")";
    case Family::D: return "so(" + std::to_string(2 * t.rank) + ")";
    case Family::E: return "e" + std::to_string(t.rank);
    case Family::F: return "f4";
    case Family::G: return "g2";
  }
  throw InternalError("unhandled family");
}

[[nodiscard]] inline std::string complex_name(SimpleType t) {
  switch (t.family) {
    case Family::A: return "sl(" + std::to_string(t.rank + 1) + ",C)";
    case Family::B: return "so(" + std::to_string(2 * t.rank + 1) + ",C)";
    case Family::C: return "sp(" + std::to_string(2 * t.rank) + ",C)";
    case Family::D: return "so(" + std::to_string(2 * t.rank) + ",C)";
    case Family::E: return "e" + std::to_string(t.rank) + "(C)";
    case Family::F: return "f4(C)";
    case Family::G: return "g2(C)";
  }
  throw InternalError("unhandled family");
}

[[nodiscard]] inline CompactFactor compact_factor_of(SimpleType t) {
  switch (t.family) {
    case Family::A: return {CompactFactor::Kind::su, t.rank + 1};
    case Family::B: return {CompactFactor::Kind::so, 2 * t.rank + 1};
    case Family::C: return {CompactFactor::Kind::sp, t.rank};
    case Family::D: return {CompactFactor::Kind::so, 2 * t.rank};
    case Family::E:
      if (t.rank == 6) return {CompactFactor::Kind::e6, 0};
      if (t.rank == 7) return {CompactFactor::Kind::e7, 0};
      throw InternalError("no compact factor kind for E8; use weyl_order directly");
    case Family::F: return {CompactFactor::Kind::f4, 0};
    case Family::G: throw InternalError("no compact factor kind for G2; use weyl_order directly");
  }
  throw InternalError("unhandled family");
}

/// Ambient diagram type of a catalog family (one copy for COMPLEX).
[[nodiscard]] inline SimpleType ambient_type(const AlgebraSpec& s) {
  switch (s.family) {
    case FamilyTag::AI: return {Family::A, s.n - 1};
    case FamilyTag::AII: return {Family::A, 2 * s.n - 1};
    case FamilyTag::AIII: return {Family::A, s.p + s.q - 1};
    case FamilyTag::AIV: return {Family::A, s.q};
    case FamilyTag::BI:
    case FamilyTag::BII: return {Family::B, s.n};
    case FamilyTag::CI: return {Family::C, s.n};
    case FamilyTag::CII: return {Family::C, s.p + s.q};
    case FamilyTag::DI:
    case FamilyTag::DII:
    case FamilyTag::DIII: return {Family::D, s.n};
    case FamilyTag::EI:
    case FamilyTag::EII:
    case FamilyTag::EIII:
    case FamilyTag::EIV: return {Family::E, 6};
    case FamilyTag::EV:
    case FamilyTag::EVI:
    case FamilyTag::EVII: return {Family::E, 7};
    case FamilyTag::EVIII:
    case FamilyTag::EIX: return {Family::E, 8};
    case FamilyTag::FI:
    case FamilyTag::FII: return {Family::F, 4};
    case FamilyTag::GI: return {Family::G, 2};
    case FamilyTag::COMPACT:
    case FamilyTag::COMPLEX: return s.base;
  }
  throw InternalError("unhandled family tag");
}

/// Coloring and arrow pairing of a catalog diagram, as positions
/// (0-based) in the standard node order of the ambient type.
struct PatternSpec {
  std::vector<int> blacks;
  std::vector<std::pair<int, int>> arrows;
};

[[nodiscard]] inline PatternSpec satake_pattern(const AlgebraSpec& s) {
  PatternSpec out;
  const auto black_range = [&out](int lo, int hi) {  // inclusive, 0-based
    for (int i = lo; i <= hi; ++i) out.blacks.push_back(i);
  };
  switch (s.family) {
    case FamilyTag::AI:
      break;
    case FamilyTag::AII:
      for (int i = 0; i <= 2 * s.n - 2; i += 2) out.blacks.push_back(i);
      break;
    case FamilyTag::AIII: {
      black_range(s.p, s.q - 2);
      for (int i = 1; i <= s.p; ++i) {
        const int a = i - 1, b = s.p + s.q - i - 1;
        if (a != b) out.arrows.emplace_back(a, b);
      }
      break;
    }
    case FamilyTag::AIV:
      if (s.q >= 2) {
        black_range(1, s.q - 2);
        out.arrows.emplace_back(0, s.q - 1);
      }
      break;
    case FamilyTag::BI:
      black_range(s.p, s.n - 1);
      break;
    case FamilyTag::BII:
      black_range(1, s.n - 1);
      break;
    case FamilyTag::CI:
      break;
    case FamilyTag::CII: {
      for (int i = 0; i <= 2 * s.p - 2; i += 2) out.blacks.push_back(i);
      black_range(2 * s.p, s.p + s.q - 1);
      break;
    }
    case FamilyTag::DI:
      if (s.p == s.n - 1) {
        out.arrows.emplace_back(s.n - 2, s.n - 1);
      } else if (s.p <= s.n - 2) {
        black_range(s.p, s.n - 1);
      }
      break;
    case FamilyTag::DII:
      black_range(1, s.n - 1);
      break;
    case FamilyTag::DIII:
      if (s.n % 2 == 0) {
        for (int i = 0; i <= s.n - 2; i += 2) out.blacks.push_back(i);
      } else {
        for (int i = 0; i <= s.n - 3; i += 2) out.blacks.push_back(i);
        out.arrows.emplace_back(s.n - 2, s.n - 1);
      }
      break;
    case FamilyTag::EI:
    case FamilyTag::EV:
    case FamilyTag::EVIII:
    case FamilyTag::FI:
    case FamilyTag::GI:
      break;
    case FamilyTag::EII:
      out.arrows.emplace_back(0, 5);
      out.arrows.emplace_back(2, 4);
      break;
    case FamilyTag::EIII:
      out.blacks = {2, 3, 4};
      out.arrows.emplace_back(0, 5);
      break;
    case FamilyTag::EIV:
    case FamilyTag::EVII:
    case FamilyTag::EIX:
      out.blacks = {1, 2, 3, 4};
      break;
    case FamilyTag::EVI:
      out.blacks = {1, 4, 6};
      break;
    case FamilyTag::FII:
      out.blacks = {0, 1, 2};
      break;
    case FamilyTag::COMPACT:
      black_range(0, s.base.rank - 1);
      break;
    case FamilyTag::COMPLEX:
      for (int i = 0; i < s.base.rank; ++i) out.arrows.emplace_back(i, s.base.rank + i);
      break;
  }
  return out;
}

inline void validate_spec(const AlgebraSpec& s) {
  const auto fail = [&s](const std::string& bound) {
    throw RangeError("parameters out of range for " + to_string(s.family) + ": " + bound);
  };
  switch (s.family) {
    case FamilyTag::AI:
    case FamilyTag::AII:
      if (s.n < 2) fail("requires n >= 2");
      break;
    case FamilyTag::AIII:
      if (s.p < 2 || s.p > s.q) fail("requires 2 <= p <= q");
      break;
    case FamilyTag::AIV:
      if (s.q < 1) fail("requires q >= 1");
      break;
    case FamilyTag::BI:
      if (s.n < 2 || s.p < 2 || s.p > s.n) fail("requires 2 <= p <= n and n >= 2");
      break;
    case FamilyTag::BII:
      if (s.n < 2) fail("requires n >= 2");
      break;
    case FamilyTag::CI:
      if (s.n < 2) fail("requires n >= 2");
      break;
    case FamilyTag::CII:
      if (s.p < 1 || s.p > s.q) fail("requires 1 <= p <= q");
      break;
    case FamilyTag::DI:
      if (s.n < 4 || s.p < 2 || s.p > s.n) fail("requires 2 <= p <= n and n >= 4");
      break;
    case FamilyTag::DII:
      if (s.n < 4) fail("requires n >= 4");
      break;
    case FamilyTag::DIII:
      if (s.n < 3) fail("requires n >= 3");
      break;
    case FamilyTag::EI:
    case FamilyTag::EII:
    case FamilyTag::EIII:
    case FamilyTag::EIV:
    case FamilyTag::EV:
    case FamilyTag::EVI:
    case FamilyTag::EVII:
    case FamilyTag::EVIII:
    case FamilyTag::EIX:
    case FamilyTag::FI:
    case FamilyTag::FII:
    case FamilyTag::GI:
      break;
    case FamilyTag::COMPACT:
    case FamilyTag::COMPLEX:
      (void)build_root_system(s.base);  // validates the base type
      break;
  }
}

[[nodiscard]] inline RealFormLabel make_label(const AlgebraSpec& s) {
  validate_spec(s);
  RealFormLabel L;
  L.spec = s;
  L.rank = ambient_type(s).rank;
  if (s.family == FamilyTag::COMPLEX) L.rank *= 2;

  using K = CompactFactor::Kind;
  const auto pq_text = [](const std::string& head, int a, int b) {
    return head + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  switch (s.family) {
    case FamilyTag::AI:
      L.text = "sl(" + std::to_string(s.n) + ",R)";
      L.compact_factors = {{K::so, s.n}};
      L.nu_value = s.n / 2;
      break;
    case FamilyTag::AII:
      L.text = "sl(" + std::to_string(s.n) + ",H)";
      L.compact_factors = {{K::sp, s.n}};
      L.nu_value = 0;
      break;
    case FamilyTag::AIII:
      L.text = pq_text("su", s.p, s.q);
      L.compact_factors = {{K::u, s.p}, {K::u, s.q}};
      L.compact_text = "s(u(" + std::to_string(s.p) + ")+u(" + std::to_string(s.q) + "))";
      L.nu_value = s.p;
      break;
    case FamilyTag::AIV:
      L.text = pq_text("su", 1, s.q);
      L.compact_factors = {{K::u, s.q}};
      L.nu_value = 1;
      break;
    case FamilyTag::BI:
      L.text = pq_text("so", s.p, 2 * s.n + 1 - s.p);
      L.compact_factors = {{K::so, s.p}, {K::so, 2 * s.n + 1 - s.p}};
      L.nu_value = s.p;
      break;
    case FamilyTag::BII:
      L.text = pq_text("so", 1, 2 * s.n);
      L.compact_factors = {{K::so, 2 * s.n}};
      L.nu_value = 1;
      break;
    case FamilyTag::CI:
      L.text = "sp(" + std::to_string(2 * s.n) + ",R)";
      L.compact_factors = {{K::u, s.n}};
      L.nu_value = s.n;
      break;
    case FamilyTag::CII:
      L.text = pq_text("sp", s.p, s.q);
      L.compact_factors = {{K::sp, s.p}, {K::sp, s.q}};
      L.nu_value = s.p;
      break;
    case FamilyTag::DI:
      L.text = pq_text("so", s.p, 2 * s.n - s.p);
      L.compact_factors = {{K::so, s.p}, {K::so, 2 * s.n - s.p}};
      L.nu_value = 2 * (s.p / 2);
      break;
    case FamilyTag::DII:
      L.text = pq_text("so", 1, 2 * s.n - 1);
      L.compact_factors = {{K::so, 2 * s.n - 1}};
      L.nu_value = 0;
      break;
    case FamilyTag::DIII:
      L.text = "so*(" + std::to_string(2 * s.n) + ")";
      L.compact_factors = {{K::u, s.n}};
      L.nu_value = s.n / 2;
      break;
    case FamilyTag::EI:
      L.text = "EI";
      L.compact_factors = {{K::sp, 4}};
      L.nu_value = 4;
      break;
    case FamilyTag::EII:
      L.text = "EII";
      L.compact_factors = {{K::su, 2}, {K::su, 6}};
      L.nu_value = 4;
      break;
    case FamilyTag::EIII:
      L.text = "EIII";
      L.compact_factors = {{K::so, 10}, {K::torus, 1}};
      L.nu_value = 2;
      break;
    case FamilyTag::EIV:
      L.text = "EIV";
      L.compact_factors = {{K::f4, 0}};
      L.nu_value = 0;
      break;
    case FamilyTag::EV:
      L.text = "EV";
      L.compact_factors = {{K::su, 8}};
      L.nu_value = 7;
      break;
    case FamilyTag::EVI:
      L.text = "EVI";
      L.compact_factors = {{K::su, 2}, {K::so, 12}};
      L.nu_value = 4;
      break;
    case FamilyTag::EVII:
      L.text = "EVII";
      L.compact_factors = {{K::e6, 0}, {K::torus, 1}};
      L.nu_value = 3;
      break;
    case FamilyTag::EVIII:
      L.text = "EVIII";
      L.compact_factors = {{K::so, 16}};
      L.nu_value = 8;
      break;
    case FamilyTag::EIX:
      L.text = "EIX";
      L.compact_factors = {{K::su, 2}, {K::e7, 0}};
      L.nu_value = 4;
      break;
    case FamilyTag::FI:
      L.text = "FI";
      L.compact_factors = {{K::su, 2}, {K::sp, 3}};
      L.nu_value = 4;
      break;
    case FamilyTag::FII:
      L.text = "FII";
      L.compact_factors = {{K::so, 9}};
      L.nu_value = 1;
      break;
    case FamilyTag::GI:
      L.text = "GI";
      L.compact_factors = {{K::so, 3}, {K::so, 3}};
      L.nu_value = 2;
      break;
    case FamilyTag::COMPACT:
      L.text = "compact:" + to_string(s.base);
      L.compact_text = compact_name(s.base);
      L.weyl_k_order = weyl_order(s.base);
      L.nu_value = 0;
      break;
    case FamilyTag::COMPLEX:
      L.text = "complex:" + to_string(s.base);
      L.compact_text = compact_name(s.base);
      L.weyl_k_order = weyl_order(s.base);
      L.nu_value = 0;
      break;
  }

  if (s.family != FamilyTag::COMPACT && s.family != FamilyTag::COMPLEX) {
    L.weyl_k_order = 1;
    for (const auto& f : L.compact_factors) L.weyl_k_order *= compact_weyl_order(f);
    if (L.compact_text.empty()) {
      for (std::size_t i = 0; i < L.compact_factors.size(); ++i) {
        if (i > 0) L.compact_text += "+";
        L.compact_text += to_string(L.compact_factors[i]);
      }
    }
  }
  // Catalog quirk, kept deliberately: the tabulated Weyl order for the
  // split G2 form is 16, although the Weyl group of so(3)+so(3) has
  // order 4.  The entry is inert either way -- this form never passes
  // the positivity criterion and never occurs as an erased fragment,
  // so the value is never used as a divisor.
  if (s.family == FamilyTag::GI) L.weyl_k_order = 16;
  return L;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Diagrams and the bar involution
// ---------------------------------------------------------------------------

/// The bar involution determined by a coloring and arrow pairing: the
/// longest Weyl element of the black subsystem composed with the linear
/// extension of the arrow pairing (and of the opposition involution of
/// the black subsystem).  It is an involutive isometry mapping roots to
/// roots and acting as minus the identity on the span of the black
/// simple roots.
[[nodiscard]] inline Matrix bar_involution(const RootSystem& rs, const std::vector<bool>& black,
                                           const std::vector<int>& arrow) {
  std::vector<int> black_nodes;
  for (int i = 0; i < rs.rank; ++i)
    if (black[i]) black_nodes.push_back(i);
  const std::map<int, int> black_twist = diagram_involution(rs, black_nodes);

  std::vector<int> perm(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    if (black[i]) {
      perm[i] = black_twist.at(i);
    } else {
      perm[i] = (arrow[i] >= 0) ? arrow[i] : i;
    }
  }

  // Linear map sending alpha_i to alpha_perm(i) and fixing the
  // orthogonal complement of the span of all simple roots.
  Matrix gram(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      gram.entry[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
  Matrix eps(rs.dim, rs.dim);
  for (int col = 0; col < rs.dim; ++col) {
    const Vec e = detail::basis_vec(rs.dim, col);
    Vec rhs(rs.rank);
    for (int i = 0; i < rs.rank; ++i) rhs[i] = dot(e, rs.simple_roots[i]);
    const Vec x = solve(gram, rhs);
    Vec img = e;
    for (int i = 0; i < rs.rank; ++i) {
      img = img - x[i] * rs.simple_roots[i];
      img = img + x[i] * rs.simple_roots[perm[i]];
    }
    for (int row = 0; row < rs.dim; ++row) eps.entry[row][col] = img[row];
  }

  return multiply(longest_element_map(rs, black_nodes), eps);
}

/// A cross-marked-able diagram: root system, coloring, arrows, the
/// label of the real form it encodes, and the precomputed bar
/// involution.
struct SatakeDiagram {
  RootSystem rs;
  std::vector<bool> black;  ///< per node
  std::vector<int> arrow;   ///< per node: partner node, or -1
  RealFormLabel label;
  Matrix sigma;  ///< bar involution on the ambient coordinate space

  [[nodiscard]] bool is_black(int node) const { return black.at(node); }

  [[nodiscard]] std::vector<int> black_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < rs.rank; ++i)
      if (black[i]) out.push_back(i);
    return out;
  }

  [[nodiscard]] std::vector<int> white_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < rs.rank; ++i)
      if (!black[i]) out.push_back(i);
    return out;
  }

  [[nodiscard]] std::vector<int> all_nodes() const {
    std::vector<int> out(rs.rank);
    for (int i = 0; i < rs.rank; ++i) out[i] = i;
    return out;
  }

  /// Image of a vector under the bar involution.
  [[nodiscard]] Vec bar(const Vec& v) const { return sigma.apply(v); }
};

/// Builds the catalog diagram of a real form.  Throws RangeError when
/// the parameters violate the documented family bounds and DomainError
/// when a base type is invalid.
[[nodiscard]] inline SatakeDiagram catalog_diagram(const AlgebraSpec& spec) {
  SatakeDiagram S;
  S.label = detail::make_label(spec);
  if (spec.family == FamilyTag::COMPLEX) {
    const RootSystem one = build_root_system(spec.base);
    S.rs = direct_sum(one, one);
  } else {
    S.rs = build_root_system(detail::ambient_type(spec));
  }
  S.black.assign(S.rs.rank, false);
  S.arrow.assign(S.rs.rank, -1);
  const detail::PatternSpec pat = detail::satake_pattern(spec);
  for (int b : pat.blacks) S.black[b] = true;
  for (const auto& [a, b] : pat.arrows) {
    S.arrow[a] = b;
    S.arrow[b] = a;
  }
  S.sigma = bar_involution(S.rs, S.black, S.arrow);
  return S;
}

// ---------------------------------------------------------------------------
// Root classification
// ---------------------------------------------------------------------------

enum class RootClass { real, imaginary, complex };

[[nodiscard]] inline std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::real: return "real";
    case RootClass::imaginary: return "imaginary";
    case RootClass::complex: return "complex";
  }
  throw InternalError("unhandled root class");
}

/// Classifies a root by its behavior under the bar involution: fixed
/// (real), negated (imaginary), or neither (complex).  Throws
/// DomainError when the vector is not a root.
[[nodiscard]] inline RootClass classify_root(const SatakeDiagram& S, const Vec& root) {
  if (!is_root(S.rs, root)) throw DomainError("classify_root: vector is not a root");
  const Vec img = S.bar(root);
  if (img == root) return RootClass::real;
  if (img == -root) return RootClass::imaginary;
  return RootClass::complex;
}

// ---------------------------------------------------------------------------
// Closure, erasure, fragments
// ---------------------------------------------------------------------------

namespace detail {

inline void check_nodes(const SatakeDiagram& S, const std::vector<int>& nodes,
                        const std::string& who) {
  std::set<int> seen;
  for (int v : nodes) {
    if (v < 0 || v >= S.rs.rank) throw DomainError(who + ": node index out of range");
    if (!seen.insert(v).second) throw DomainError(who + ": duplicate node index");
  }
}

[[nodiscard]] inline bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

[[nodiscard]] inline std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Nodes of `domain` whose erasure is forced by crossing `marked`:
/// a node is swept up when it is marked itself or when the bar image
/// of its simple root is supported on a marked node.  For black nodes
/// the bar image is the negated root of the black subsystem, whose
/// support meets `marked` iff the node itself is marked, so the rule
/// reduces to membership; for white nodes it pulls in the arrow
/// partner and the whites whose bar image leans on a marked black.
[[nodiscard]] inline std::vector<int> swept_nodes(const SatakeDiagram& S,
                                                  const std::vector<int>& domain,
                                                  const std::vector<int>& marked) {
  const std::vector<int> mark = sorted_copy(marked);
  std::vector<int> out;
  for (int v : domain) {
    if (contains(mark, v)) {
      out.push_back(v);
      continue;
    }
    const std::vector<int> supp = support(S.rs, S.bar(S.rs.simple_roots[v]));
    if (std::any_of(supp.begin(), supp.end(), [&mark](int u) { return contains(mark, u); }))
      out.push_back(v);
  }
  return out;
}

/// Connected components of `nodes` under diagram adjacency OR the
/// arrow pairing, sorted by least node.
[[nodiscard]] inline std::vector<std::vector<int>> fragments_in(const SatakeDiagram& S,
                                                                const std::vector<int>& nodes) {
  const std::vector<int> live = sorted_copy(nodes);
  std::map<int, bool> visited;
  for (int v : live) visited[v] = false;
  std::vector<std::vector<int>> out;
  for (int start : live) {
    if (visited[start]) continue;
    std::vector<int> comp{start};
    visited[start] = true;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      const int v = comp[h];
      for (int u : live) {
        if (visited[u]) continue;
        if (bond(S.rs, v, u) > 0 || S.arrow[v] == u) {
          visited[u] = true;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace detail

/// Closure of a cross set: the crosses together with every white node
/// whose simple root has a bar image supported on a crossed node.
/// Closure is idempotent and commutes with nothing being crossed.
[[nodiscard]] inline std::vector<int> pi_closure_in(const SatakeDiagram& S,
                                                    const std::vector<int>& domain,
                                                    const std::vector<int>& crosses) {
  return detail::swept_nodes(S, domain, crosses);
}

[[nodiscard]] inline std::vector<int> pi_closure(const SatakeDiagram& S,
                                                 const std::vector<int>& crosses) {
  detail::check_nodes(S, crosses, "pi_closure");
  return pi_closure_in(S, S.all_nodes(), crosses);
}

/// Erasure set of a subset of the crosses: the nodes (of any color)
/// that must be removed together with the sub-crosses.  Requires
/// `subset` to be contained in `crosses`; throws PreconditionError
/// otherwise.
[[nodiscard]] inline std::vector<int> erasure_set(const SatakeDiagram& S,
                                                  const std::vector<int>& crosses,
                                                  const std::vector<int>& subset) {
  detail::check_nodes(S, crosses, "erasure_set");
  detail::check_nodes(S, subset, "erasure_set");
  const std::vector<int> cr = detail::sorted_copy(crosses);
  for (int v : subset)
    if (!detail::contains(cr, v))
      throw PreconditionError("erasure_set: subset is not contained in the cross set");
  return detail::swept_nodes(S, S.all_nodes(), subset);
}

/// Fragments left after removing a node set: connected components of
/// the complement under diagram adjacency or the arrow pairing.
[[nodiscard]] inline std::vector<std::vector<int>> erase_subdiagram(
    const SatakeDiagram& S, const std::vector<int>& removed) {
  detail::check_nodes(S, removed, "erase_subdiagram");
  const std::vector<int> gone = detail::sorted_copy(removed);
  std::vector<int> live;
  for (int i = 0; i < S.rs.rank; ++i)
    if (!detail::contains(gone, i)) live.push_back(i);
  return detail::fragments_in(S, live);
}

// ---------------------------------------------------------------------------
// Recognition of fragments
// ---------------------------------------------------------------------------

/// A fragment identified as a real form: the label plus the fragment's
/// nodes listed in the standard order of the recognized diagram (for
/// COMPLEX, the first copy followed by the arrow partners in the same
/// order).
struct RecognizedForm {
  RealFormLabel label;
  std::vector<int> nodes;
};

namespace detail {

/// All node orders in which a component may be matched against catalog
/// patterns: the classified standard order plus the nontrivial diagram
/// symmetries (reversal for A, tip swap for D, the E6 symmetry).
[[nodiscard]] inline std::vector<std::vector<int>> pattern_orders(const DynkinComponent& c) {
  std::vector<std::vector<int>> out{c.nodes};
  const int k = c.type.rank;
  if (c.type.family == Family::A && k >= 2) {
    std::vector<int> rev(c.nodes.rbegin(), c.nodes.rend());
    out.push_back(std::move(rev));
  } else if (c.type.family == Family::D) {
    std::vector<int> swp = c.nodes;
    std::swap(swp[k - 2], swp[k - 1]);
    out.push_back(std::move(swp));
  } else if (c.type.family == Family::E && k == 6) {
    std::vector<int> swp = c.nodes;
    std::swap(swp[0], swp[5]);
    std::swap(swp[2], swp[4]);
    out.push_back(std::move(swp));
  }
  return out;
}

/// Candidate specs for a single connected component of the given type,
/// in deterministic priority order.
[[nodiscard]] inline std::vector<AlgebraSpec> candidate_specs(SimpleType t) {
  std::vector<AlgebraSpec> out;
  const int k = t.rank;
  const auto add = [&out](FamilyTag f, int p, int q, int n) {
    AlgebraSpec s;
    s.family = f;
    s.p = p;
    s.q = q;
    s.n = n;
    out.push_back(s);
  };
  switch (t.family) {
    case Family::A: {
      add(FamilyTag::AI, 0, 0, k + 1);
      if (k % 2 == 1 && k >= 3) add(FamilyTag::AII, 0, 0, (k + 1) / 2);
      add(FamilyTag::AIV, 0, k, 0);
      for (int p = 2; 2 * p <= k + 1; ++p) add(FamilyTag::AIII, p, k + 1 - p, 0);
      break;
    }
    case Family::B: {
      for (int p = k; p >= 2; --p) add(FamilyTag::BI, p, 0, k);
      add(FamilyTag::BII, 0, 0, k);
      break;
    }
    case Family::C: {
      add(FamilyTag::CI, 0, 0, k);
      for (int p = 1; 2 * p <= k; ++p) add(FamilyTag::CII, p, k - p, 0);
      break;
    }
    case Family::D: {
      for (int p = k; p >= 2; --p) add(FamilyTag::DI, p, 0, k);
      add(FamilyTag::DII, 0, 0, k);
      add(FamilyTag::DIII, 0, 0, k);
      break;
    }
    case Family::E: {
      if (k == 6)
        for (auto f : {FamilyTag::EI, FamilyTag::EII, FamilyTag::EIII, FamilyTag::EIV})
          add(f, 0, 0, 0);
      if (k == 7)
        for (auto f : {FamilyTag::EV, FamilyTag::EVI, FamilyTag::EVII}) add(f, 0, 0, 0);
      if (k == 8)
        for (auto f : {FamilyTag::EVIII, FamilyTag::EIX}) add(f, 0, 0, 0);
      break;
    }
    case Family::F:
      add(FamilyTag::FI, 0, 0, 0);
      add(FamilyTag::FII, 0, 0, 0);
      break;
    case Family::G:
      add(FamilyTag::GI, 0, 0, 0);
      break;
  }
  return out;
}

/// Tries to match the coloring/arrows of `order` (a component's nodes
/// in a fixed pattern order) against the catalog pattern of `spec`.
[[nodiscard]] inline bool matches_pattern(const SatakeDiagram& S, const std::vector<int>& order,
                                          const AlgebraSpec& spec) {
  const PatternSpec pat = satake_pattern(spec);
  std::vector<bool> want_black(order.size(), false);
  for (int b : pat.blacks) want_black[b] = true;
  std::vector<int> want_arrow(order.size(), -1);
  for (const auto& [a, b] : pat.arrows) {
    want_arrow[a] = b;
    want_arrow[b] = a;
  }
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const int node = order[pos];
    if (S.black[node] != want_black[pos]) return false;
    const int partner = S.arrow[node];
    if (want_arrow[pos] < 0) {
      if (partner >= 0) {
        // Arrows leaving the fragment were already rejected by the
        // caller; an internal arrow must be matched by the pattern.
        const auto it = std::find(order.begin(), order.end(), partner);
        if (it != order.end()) return false;
      }
    } else {
      if (partner != order[want_arrow[pos]]) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Identifies the real form encoded by a fragment of the diagram (a
/// node subset closed under adjacency+arrows in the intended use; any
/// node subset forming one arrow-connected group of at most two
/// diagram components is accepted).  Throws RecognitionError when the
/// coloring does not match any catalog pattern.
[[nodiscard]] inline RecognizedForm recognize_component(const SatakeDiagram& S,
                                                        const std::vector<int>& nodes) {
  detail::check_nodes(S, nodes, "recognize_component");
  if (nodes.empty()) throw DomainError("recognize_component: empty fragment");
  const std::vector<int> sorted = detail::sorted_copy(nodes);

  // Arrows may not leave the fragment.
  for (int v : sorted) {
    const int partner = S.arrow[v];
    if (partner >= 0 && !detail::contains(sorted, partner))
      throw RecognitionError("recognize_component: arrow leaves the fragment");
  }

  const auto comps = subsystem_components(S.rs, sorted);

  if (comps.size() == 2) {
    // A complex form: two copies of one diagram joined nodewise by
    // arrows that preserve adjacency, with no black nodes.
    const auto& c0 = comps[0];
    const auto& c1 = comps[1];
    if (c0.type != c1.type)
      throw RecognitionError("recognize_component: mismatched pair of components");
    const int k = c0.type.rank;
    for (int v : sorted)
      if (S.black[v])
        throw RecognitionError("recognize_component: black node in a paired fragment");
    std::vector<int> partner_order(k);
    for (int i = 0; i < k; ++i) {
      const int img = S.arrow[c0.nodes[i]];
      if (img < 0 || std::find(c1.nodes.begin(), c1.nodes.end(), img) == c1.nodes.end())
        throw RecognitionError("recognize_component: pairing is not a bijection of the copies");
      partner_order[i] = img;
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (detail::bond(S.rs, c0.nodes[i], c0.nodes[j]) !=
            detail::bond(S.rs, partner_order[i], partner_order[j]))
          throw RecognitionError("recognize_component: pairing does not preserve the diagram");
    AlgebraSpec spec;
    spec.family = FamilyTag::COMPLEX;
    spec.base = c0.type;
    RecognizedForm out;
    out.label = detail::make_label(spec);
    out.label.text = detail::complex_name(c0.type);
    out.nodes = c0.nodes;
    out.nodes.insert(out.nodes.end(), partner_order.begin(), partner_order.end());
    return out;
  }
  if (comps.size() != 1)
    throw RecognitionError("recognize_component: fragment has more than two components");

  const DynkinComponent& comp = comps[0];

  // All-black fragments are compact forms.
  if (std::all_of(sorted.begin(), sorted.end(), [&S](int v) { return S.black[v]; })) {
    AlgebraSpec spec;
    spec.family = FamilyTag::COMPACT;
    spec.base = comp.type;
    RecognizedForm out;
    out.label = detail::make_label(spec);
    out.label.text = detail::compact_name(comp.type);
    out.nodes = comp.nodes;
    return out;
  }

  // Rank-2 double-bond components are classified as B2, but may have
  // been cut out of a C-type diagram; try the ambient family first so
  // coincidences resolve toward the ambient reading.
  std::vector<SimpleType> type_readings{comp.type};
  if (comp.type.family == Family::B && comp.type.rank == 2)
    type_readings.push_back({Family::C, 2});
  if (comp.type.family == Family::B && comp.type.rank == 2 &&
      S.rs.components[S.rs.component_of(comp.nodes.front())].family == Family::C)
    std::swap(type_readings[0], type_readings[1]);

  for (const SimpleType reading : type_readings) {
    DynkinComponent view = comp;
    view.type = reading;
    if (reading.family == Family::C && comp.type.family == Family::B)
      std::reverse(view.nodes.begin(), view.nodes.end());
    for (const AlgebraSpec& spec : detail::candidate_specs(reading)) {
      for (const std::vector<int>& order : detail::pattern_orders(view)) {
        if (detail::matches_pattern(S, order, spec)) {
          RecognizedForm out;
          out.label = detail::make_label(spec);
          out.nodes = order;
          return out;
        }
      }
    }
  }
  throw RecognitionError("recognize_component: coloring matches no catalog pattern");
}

/// The recognized fragments remaining after erasing the closure of a
/// cross set, sorted by least node.
[[nodiscard]] inline std::vector<RecognizedForm> levi_factors(const SatakeDiagram& S,
                                                              const std::vector<int>& crosses) {
  detail::check_nodes(S, crosses, "levi_factors");
  const std::vector<int> closed = pi_closure(S, crosses);
  std::vector<RecognizedForm> out;
  for (const auto& frag : erase_subdiagram(S, closed)) out.push_back(recognize_component(S, frag));
  return out;
}

}  // namespace minorb
