/// @file test_satake.cpp
/// @brief Tests for the diagram catalog, the bar involution, cross-set
///        closure/erasure and fragment recognition.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "minorb/satake.hpp"

using namespace minorb;

namespace {

AlgebraSpec make(FamilyTag f, int p = 0, int q = 0, int n = 0) {
  AlgebraSpec s;
  s.family = f;
  s.p = p;
  s.q = q;
  s.n = n;
  return s;
}

AlgebraSpec make_base(FamilyTag f, SimpleType base) {
  AlgebraSpec s;
  s.family = f;
  s.base = base;
  return s;
}

/// A broad catalog sample used by the property sweeps.
std::vector<AlgebraSpec> catalog_sample() {
  std::vector<AlgebraSpec> out = {
      make(FamilyTag::AI, 0, 0, 4),      make(FamilyTag::AI, 0, 0, 5),
      make(FamilyTag::AII, 0, 0, 2),     make(FamilyTag::AII, 0, 0, 3),
      make(FamilyTag::AIII, 2, 2),       make(FamilyTag::AIII, 2, 5),
      make(FamilyTag::AIII, 3, 4),       make(FamilyTag::AIV, 0, 2),
      make(FamilyTag::AIV, 0, 5),        make(FamilyTag::BI, 2, 0, 4),
      make(FamilyTag::BI, 3, 0, 4),      make(FamilyTag::BI, 4, 0, 4),
      make(FamilyTag::BII, 0, 0, 4),     make(FamilyTag::CI, 0, 0, 3),
      make(FamilyTag::CII, 1, 1),        make(FamilyTag::CII, 1, 4),
      make(FamilyTag::CII, 2, 3),        make(FamilyTag::DI, 2, 0, 4),
      make(FamilyTag::DI, 3, 0, 4),      make(FamilyTag::DI, 4, 0, 4),
      make(FamilyTag::DI, 4, 0, 5),      make(FamilyTag::DII, 0, 0, 4),
      make(FamilyTag::DII, 0, 0, 5),     make(FamilyTag::DIII, 0, 0, 4),
      make(FamilyTag::DIII, 0, 0, 5),    make(FamilyTag::DIII, 0, 0, 6),
      make(FamilyTag::EI),               make(FamilyTag::EII),
      make(FamilyTag::EIII),             make(FamilyTag::EIV),
      make(FamilyTag::EV),               make(FamilyTag::EVI),
      make(FamilyTag::EVII),             make(FamilyTag::EVIII),
      make(FamilyTag::EIX),              make(FamilyTag::FI),
      make(FamilyTag::FII),              make(FamilyTag::GI),
      make_base(FamilyTag::COMPACT, {Family::A, 3}),
      make_base(FamilyTag::COMPACT, {Family::B, 3}),
      make_base(FamilyTag::COMPACT, {Family::D, 4}),
      make_base(FamilyTag::COMPACT, {Family::G, 2}),
      make_base(FamilyTag::COMPLEX, {Family::A, 2}),
      make_base(FamilyTag::COMPLEX, {Family::B, 2}),
      make_base(FamilyTag::COMPLEX, {Family::D, 4}),
      make_base(FamilyTag::COMPLEX, {Family::F, 4}),
  };
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Arrow partner if present, else the node itself.
int arrow_or_self(const SatakeDiagram& S, int v) { return S.arrow[v] >= 0 ? S.arrow[v] : v; }

}  // namespace

TEST_CASE("catalog diagrams carry the expected coloring and arrows") {
  SECTION("sl(3,H): alternating blacks, no arrows") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AII, 0, 0, 3));
    CHECK(S.rs.rank == 5);
    CHECK(S.black_nodes() == std::vector<int>{0, 2, 4});
    CHECK(std::all_of(S.arrow.begin(), S.arrow.end(), [](int a) { return a == -1; }));
  }
  SECTION("su(3,4): quasi-split, three arrows, no blacks") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIII, 3, 4));
    CHECK(S.rs.rank == 6);
    CHECK(S.black_nodes().empty());
    CHECK(S.arrow == std::vector<int>{5, 4, 3, 2, 1, 0});
  }
  SECTION("su(2,5): black interval between the arrow pairs") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIII, 2, 5));
    CHECK(S.black_nodes() == std::vector<int>{2, 3});
    CHECK(S.arrow == std::vector<int>{5, 4, -1, -1, 1, 0});
  }
  SECTION("su(1,5): long arrow over a black interval") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIV, 0, 5));
    CHECK(S.black_nodes() == std::vector<int>{1, 2, 3});
    CHECK(S.arrow == std::vector<int>{4, -1, -1, -1, 0});
  }
  SECTION("so(3,6): black tail of a B diagram") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::BI, 3, 0, 4));
    CHECK(S.label.text == "so(3,6)");
    CHECK(S.black_nodes() == std::vector<int>{3});
  }
  SECTION("so(1,8): only the first node white") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::BII, 0, 0, 4));
    CHECK(S.label.text == "so(1,8)");
    CHECK(S.black_nodes() == std::vector<int>{1, 2, 3});
  }
  SECTION("sp(2,3): alternating head then solid tail") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::CII, 2, 3));
    CHECK(S.rs.rank == 5);
    CHECK(S.black_nodes() == std::vector<int>{0, 2, 4});
  }
  SECTION("sp(1,4): single alternation then solid tail") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::CII, 1, 4));
    CHECK(S.black_nodes() == std::vector<int>{0, 2, 3, 4});
  }
  SECTION("so(3,5): white chain with paired tips") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::DI, 3, 0, 4));
    CHECK(S.label.text == "so(3,5)");
    CHECK(S.black_nodes().empty());
    CHECK(S.arrow[2] == 3);
    CHECK(S.arrow[3] == 2);
  }
  SECTION("so(4,6): paired tips, one step from split") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::DI, 4, 0, 5));
    CHECK(S.label.text == "so(4,6)");
    CHECK(S.black_nodes().empty());
    CHECK(S.arrow[3] == 4);
  }
  SECTION("so(4,8): both tips black") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::DI, 4, 0, 6));
    CHECK(S.label.text == "so(4,8)");
    CHECK(S.black_nodes() == std::vector<int>{4, 5});
  }
  SECTION("so*(12) and so*(10): alternating D coloring, arrow when odd") {
    const SatakeDiagram even = catalog_diagram(make(FamilyTag::DIII, 0, 0, 6));
    CHECK(even.black_nodes() == std::vector<int>{0, 2, 4});
    CHECK(std::all_of(even.arrow.begin(), even.arrow.end(), [](int a) { return a == -1; }));
    const SatakeDiagram odd = catalog_diagram(make(FamilyTag::DIII, 0, 0, 5));
    CHECK(odd.black_nodes() == std::vector<int>{0, 2});
    CHECK(odd.arrow[3] == 4);
  }
  SECTION("exceptional colorings") {
    CHECK(catalog_diagram(make(FamilyTag::EIII)).black_nodes() == std::vector<int>{2, 3, 4});
    CHECK(catalog_diagram(make(FamilyTag::EIII)).arrow[0] == 5);
    CHECK(catalog_diagram(make(FamilyTag::EIV)).black_nodes() == std::vector<int>{1, 2, 3, 4});
    CHECK(catalog_diagram(make(FamilyTag::EVI)).black_nodes() == std::vector<int>{1, 4, 6});
    CHECK(catalog_diagram(make(FamilyTag::EVII)).black_nodes() == std::vector<int>{1, 2, 3, 4});
    CHECK(catalog_diagram(make(FamilyTag::EIX)).black_nodes() == std::vector<int>{1, 2, 3, 4});
    CHECK(catalog_diagram(make(FamilyTag::FII)).black_nodes() == std::vector<int>{0, 1, 2});
    CHECK(catalog_diagram(make(FamilyTag::GI)).black_nodes().empty());
    const SatakeDiagram eii = catalog_diagram(make(FamilyTag::EII));
    CHECK(eii.arrow == std::vector<int>{5, -1, 4, -1, 2, 0});
  }
  SECTION("compact and complex degenerate families") {
    const SatakeDiagram cpt = catalog_diagram(make_base(FamilyTag::COMPACT, {Family::D, 4}));
    CHECK(cpt.black_nodes() == std::vector<int>{0, 1, 2, 3});
    CHECK(cpt.label.text == "compact:D4");
    const SatakeDiagram cx = catalog_diagram(make_base(FamilyTag::COMPLEX, {Family::A, 2}));
    CHECK(cx.rs.rank == 4);
    CHECK(cx.arrow == std::vector<int>{2, 3, 0, 1});
    CHECK(cx.label.text == "complex:A2");
    CHECK(cx.label.rank == 4);
  }
}

TEST_CASE("catalog labels carry the expected payload") {
  const SatakeDiagram su25 = catalog_diagram(make(FamilyTag::AIII, 2, 5));
  CHECK(su25.label.text == "su(2,5)");
  CHECK(su25.label.compact_text == "s(u(2)+u(5))");
  CHECK(su25.label.weyl_k_order == 240);
  CHECK(su25.label.nu_value == 2);

  const SatakeDiagram so36 = catalog_diagram(make(FamilyTag::BI, 3, 0, 4));
  CHECK(so36.label.compact_text == "so(3)+so(6)");
  CHECK(so36.label.weyl_k_order == 2 * 24);
  CHECK(so36.label.nu_value == 3);

  const SatakeDiagram sl3h = catalog_diagram(make(FamilyTag::AII, 0, 0, 3));
  CHECK(sl3h.label.text == "sl(3,H)");
  CHECK(sl3h.label.compact_text == "sp(3)");
  CHECK(sl3h.label.weyl_k_order == 48);
  CHECK(sl3h.label.nu_value == 0);

  const SatakeDiagram eiv = catalog_diagram(make(FamilyTag::EIV));
  CHECK(eiv.label.compact_text == "f4");
  CHECK(eiv.label.weyl_k_order == 1152);
  CHECK(eiv.label.nu_value == 0);

  const SatakeDiagram eviii = catalog_diagram(make(FamilyTag::EVIII));
  CHECK(eviii.label.compact_text == "so(16)");
  CHECK(eviii.label.weyl_k_order == 5160960);  // 2^7 * 8!
  CHECK(eviii.label.nu_value == 8);

  // Deliberate catalog quirk: the split G2 entry keeps the tabulated
  // value 16 although W(so(3)+so(3)) has order 4; it is never used as
  // a divisor.
  const SatakeDiagram gi = catalog_diagram(make(FamilyTag::GI));
  CHECK(gi.label.compact_text == "so(3)+so(3)");
  CHECK(gi.label.weyl_k_order == 16);

  // Everywhere else the stored order equals the factor product.
  for (const AlgebraSpec& spec : catalog_sample()) {
    if (spec.family == FamilyTag::GI) continue;
    const RealFormLabel L = catalog_diagram(spec).label;
    long long prod = 1;
    if (spec.family == FamilyTag::COMPACT || spec.family == FamilyTag::COMPLEX) continue;
    for (const auto& f : L.compact_factors) prod *= compact_weyl_order(f);
    INFO(L.text);
    CHECK(L.weyl_k_order == prod);
  }

  const SatakeDiagram dii5 = catalog_diagram(make(FamilyTag::DII, 0, 0, 5));
  CHECK(dii5.label.text == "so(1,9)");
  CHECK(dii5.label.weyl_k_order == 384);
  CHECK(dii5.label.nu_value == 0);

  const SatakeDiagram so35 = catalog_diagram(make(FamilyTag::DI, 3, 0, 4));
  CHECK(so35.label.nu_value == 2);  // largest even number <= 3
}

TEST_CASE("out-of-range catalog parameters are rejected") {
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::AI, 0, 0, 1)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::AII, 0, 0, 1)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::AIII, 1, 3)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::AIII, 3, 2)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::AIV, 0, 0)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::BI, 1, 0, 3)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::BI, 4, 0, 3)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::CII, 0, 2)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::DI, 2, 0, 3)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::DII, 0, 0, 3)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make(FamilyTag::DIII, 0, 0, 2)), RangeError);
  CHECK_THROWS_AS(catalog_diagram(make_base(FamilyTag::COMPACT, {Family::E, 9})), DomainError);
}

TEST_CASE("bar involution matches hand-computed images") {
  SECTION("split forms have the identity involution") {
    for (const auto f : {FamilyTag::EI, FamilyTag::EV, FamilyTag::EVIII, FamilyTag::FI,
                         FamilyTag::GI}) {
      const SatakeDiagram S = catalog_diagram(make(f));
      CHECK(S.sigma == Matrix::identity(S.rs.dim));
    }
    const SatakeDiagram sl5 = catalog_diagram(make(FamilyTag::AI, 0, 0, 5));
    CHECK(sl5.sigma == Matrix::identity(sl5.rs.dim));
    const SatakeDiagram sp6 = catalog_diagram(make(FamilyTag::CI, 0, 0, 3));
    CHECK(sp6.sigma == Matrix::identity(sp6.rs.dim));
  }
  SECTION("sl(3,H): white simples absorb their black neighbors") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AII, 0, 0, 3));
    const auto& a = S.rs.simple_roots;
    CHECK(S.bar(a[1]) == a[0] + a[1] + a[2]);
    CHECK(S.bar(a[3]) == a[2] + a[3] + a[4]);
    CHECK(S.bar(a[0]) == -a[0]);
    CHECK(S.bar(a[2]) == -a[2]);
  }
  SECTION("su(1,2): the arrow swaps the two simples") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIV, 0, 2));
    const auto& a = S.rs.simple_roots;
    CHECK(S.bar(a[0]) == a[1]);
    CHECK(S.bar(a[1]) == a[0]);
    CHECK(classify_root(S, a[0] + a[1]) == RootClass::real);
  }
  SECTION("su(1,5): the long arrow composes with the black reversal") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIV, 0, 5));
    const auto& a = S.rs.simple_roots;
    CHECK(S.bar(a[0]) == a[1] + a[2] + a[3] + a[4]);
    CHECK(S.bar(a[4]) == a[0] + a[1] + a[2] + a[3]);
  }
  SECTION("E II: arrows act as the diagram symmetry") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::EII));
    const auto& a = S.rs.simple_roots;
    CHECK(S.bar(a[0]) == a[5]);
    CHECK(S.bar(a[2]) == a[4]);
    CHECK(S.bar(a[1]) == a[1]);
    CHECK(S.bar(a[3]) == a[3]);
  }
  SECTION("complex forms swap the two copies") {
    const SatakeDiagram S = catalog_diagram(make_base(FamilyTag::COMPLEX, {Family::A, 2}));
    const auto& a = S.rs.simple_roots;
    CHECK(S.bar(a[0]) == a[2]);
    CHECK(S.bar(a[3]) == a[1]);
  }
  SECTION("compact forms negate every root") {
    const SatakeDiagram S = catalog_diagram(make_base(FamilyTag::COMPACT, {Family::A, 2}));
    for (const Vec& r : S.rs.roots) CHECK(S.bar(r) == -r);
    // ... and fix the orthogonal complement of the root span.
    Vec ones(3, Rational(1));
    CHECK(S.bar(ones) == ones);
  }
}

TEST_CASE("bar involution invariants hold across the catalog") {
  for (const AlgebraSpec& spec : catalog_sample()) {
    const SatakeDiagram S = catalog_diagram(spec);
    INFO(S.label.text);

    // Involutive isometry mapping roots to roots.
    CHECK(multiply(S.sigma, S.sigma) == Matrix::identity(S.rs.dim));
    for (const Vec& r : S.rs.roots) {
      const Vec img = S.bar(r);
      REQUIRE(is_root(S.rs, img));
      REQUIRE(dot(img, img) == dot(r, r));
    }

    // Minus the identity on black simples.
    for (int b : S.black_nodes()) CHECK(S.bar(S.rs.simple_roots[b]) == -S.rs.simple_roots[b]);

    // On white simples: a positive root equal to the arrow image plus a
    // nonnegative integral combination of black simples.
    for (int w : S.white_nodes()) {
      const Vec img = S.bar(S.rs.simple_roots[w]);
      REQUIRE(is_positive_root(S.rs, img));
      const std::vector<long long> c = simple_coordinates(S.rs, img);
      const int partner = arrow_or_self(S, w);
      CHECK(c[partner] == 1);
      for (int j = 0; j < S.rs.rank; ++j) {
        if (j == partner) continue;
        if (S.black[j]) {
          CHECK(c[j] >= 0);
        } else {
          CHECK(c[j] == 0);
        }
      }
    }
  }
}

TEST_CASE("roots classify as real, imaginary or complex") {
  SECTION("split: everything is real") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AI, 0, 0, 4));
    for (const Vec& r : S.rs.roots) CHECK(classify_root(S, r) == RootClass::real);
  }
  SECTION("compact: everything is imaginary") {
    const SatakeDiagram S = catalog_diagram(make_base(FamilyTag::COMPACT, {Family::B, 3}));
    for (const Vec& r : S.rs.roots) CHECK(classify_root(S, r) == RootClass::imaginary);
  }
  SECTION("complex ambient: nothing is real or imaginary") {
    const SatakeDiagram S = catalog_diagram(make_base(FamilyTag::COMPLEX, {Family::B, 2}));
    for (const Vec& r : S.rs.roots) CHECK(classify_root(S, r) == RootClass::complex);
  }
  SECTION("sl(3,H): imaginary roots are exactly the black span") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AII, 0, 0, 3));
    int real = 0, imag = 0, cplx = 0;
    for (const Vec& r : S.rs.roots) {
      switch (classify_root(S, r)) {
        case RootClass::real: ++real; break;
        case RootClass::imaginary: ++imag; break;
        case RootClass::complex: ++cplx; break;
      }
    }
    CHECK(real == 0);  // consistent with nu == 0
    CHECK(imag == 6);  // +/- the three black simples
    CHECK(cplx == 24);
  }
  SECTION("real roots exist exactly when the catalog says nu >= 1") {
    for (const AlgebraSpec& spec : catalog_sample()) {
      const SatakeDiagram S = catalog_diagram(spec);
      INFO(S.label.text);
      int real_count = 0;
      for (const Vec& r : S.rs.roots)
        if (classify_root(S, r) == RootClass::real) ++real_count;
      CHECK((real_count > 0) == (S.label.nu_value >= 1));
    }
  }
  SECTION("non-roots are rejected") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AI, 0, 0, 3));
    CHECK_THROWS_AS(classify_root(S, Vec(S.rs.dim)), DomainError);
  }
}

TEST_CASE("closure pulls exactly the forced white nodes") {
  SECTION("split diagrams are always closed") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::EI));
    CHECK(pi_closure(S, {0}) == std::vector<int>{0});
    CHECK(pi_closure(S, {1, 3}) == std::vector<int>{1, 3});
    CHECK(pi_closure(S, {}) == std::vector<int>{});
  }
  SECTION("E IV: end nodes are closed on their own") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::EIV));
    CHECK(pi_closure(S, {5}) == std::vector<int>{5});
    CHECK(pi_closure(S, {0}) == std::vector<int>{0});
    CHECK(pi_closure(S, {0, 5}) == std::vector<int>{0, 5});
  }
  SECTION("su(3,4): a cross pulls its arrow partner") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIII, 3, 4));
    CHECK(pi_closure(S, {1}) == std::vector<int>{1, 4});
    CHECK(pi_closure(S, {0, 1}) == std::vector<int>{0, 1, 4, 5});
    CHECK(pi_closure(S, {2}) == std::vector<int>{2, 3});
  }
  SECTION("su(1,5): the two arrow ends are linked through the blacks") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIV, 0, 5));
    CHECK(pi_closure(S, {0}) == std::vector<int>{0, 4});
    CHECK(pi_closure(S, {4}) == std::vector<int>{0, 4});
    CHECK(pi_closure(S, {2}) == std::vector<int>{0, 2, 4});  // black cross pulls both whites
  }
  SECTION("sl(3,H): crossing a black pulls the adjacent whites") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AII, 0, 0, 3));
    CHECK(pi_closure(S, {0}) == std::vector<int>{0, 1});
    CHECK(pi_closure(S, {2}) == std::vector<int>{1, 2, 3});
    CHECK(pi_closure(S, {1}) == std::vector<int>{1});
  }
  SECTION("closure is idempotent and monotone in the crosses") {
    for (const AlgebraSpec& spec : catalog_sample()) {
      const SatakeDiagram S = catalog_diagram(spec);
      INFO(S.label.text);
      for (int v = 0; v < S.rs.rank; ++v) {
        const std::vector<int> once = pi_closure(S, {v});
        CHECK(pi_closure(S, once) == once);
        CHECK(std::binary_search(once.begin(), once.end(), v));
      }
      // A few two-element cross sets per diagram.
      for (int v = 0; v + 1 < S.rs.rank; v += 2) {
        const std::vector<int> once = pi_closure(S, {v, v + 1});
        CHECK(pi_closure(S, once) == once);
      }
    }
  }
  SECTION("invalid crosses are rejected") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::EIV));
    CHECK_THROWS_AS(pi_closure(S, {6}), DomainError);
    CHECK_THROWS_AS(pi_closure(S, {0, 0}), DomainError);
  }
}

TEST_CASE("erasure sets agree with closure and respect the subset precondition") {
  for (const AlgebraSpec& spec : catalog_sample()) {
    const SatakeDiagram S = catalog_diagram(spec);
    INFO(S.label.text);
    for (int v = 0; v < S.rs.rank; ++v) {
      CHECK(erasure_set(S, {v}, {v}) == pi_closure(S, {v}));
    }
  }
  const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIII, 3, 4));
  CHECK(erasure_set(S, {1, 2}, {1}) == std::vector<int>{1, 4});
  CHECK_THROWS_AS(erasure_set(S, {1}, {2}), PreconditionError);
}

TEST_CASE("erasing a closed cross set leaves recognizable fragments") {
  SECTION("su(3,4): complex pair plus a smaller unitary form") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIII, 3, 4));
    const auto frags = erase_subdiagram(S, pi_closure(S, {1}));
    REQUIRE(frags.size() == 2);
    CHECK(frags[0] == std::vector<int>{0, 5});
    CHECK(frags[1] == std::vector<int>{2, 3});
    const RecognizedForm pair = recognize_component(S, frags[0]);
    CHECK(pair.label.spec.family == FamilyTag::COMPLEX);
    CHECK(pair.label.text == "sl(2,C)");
    CHECK(pair.label.weyl_k_order == 2);
    const RecognizedForm rest = recognize_component(S, frags[1]);
    CHECK(rest.label.spec.family == FamilyTag::AIV);
    CHECK(rest.label.text == "su(1,2)");
  }
  SECTION("E IV: erasing both ends leaves the compact core") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::EIV));
    const auto frags = erase_subdiagram(S, pi_closure(S, {0, 5}));
    REQUIRE(frags.size() == 1);
    const RecognizedForm core = recognize_component(S, frags[0]);
    CHECK(core.label.spec.family == FamilyTag::COMPACT);
    CHECK(core.label.text == "so(8)");
    CHECK(core.label.weyl_k_order == 192);
  }
  SECTION("E IV: erasing one end leaves a rank-one orthogonal form") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::EIV));
    const auto frags = erase_subdiagram(S, pi_closure(S, {0}));
    REQUIRE(frags.size() == 1);
    const RecognizedForm rest = recognize_component(S, frags[0]);
    CHECK(rest.label.spec.family == FamilyTag::DII);
    CHECK(rest.label.text == "so(1,9)");
    CHECK(rest.label.weyl_k_order == 384);
  }
  SECTION("so(3,6): erasing the first node steps the signature down") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::BI, 3, 0, 4));
    const auto frags = erase_subdiagram(S, pi_closure(S, {0}));
    REQUIRE(frags.size() == 1);
    const RecognizedForm rest = recognize_component(S, frags[0]);
    CHECK(rest.label.text == "so(2,5)");
  }
  SECTION("fragments never sever arrow pairs") {
    for (const AlgebraSpec& spec : catalog_sample()) {
      const SatakeDiagram S = catalog_diagram(spec);
      INFO(S.label.text);
      for (int v = 0; v < S.rs.rank; ++v) {
        for (const auto& frag : erase_subdiagram(S, pi_closure(S, {v})))
          CHECK_NOTHROW(recognize_component(S, frag));
      }
    }
  }
  SECTION("what remains is stable under the involution") {
    for (const AlgebraSpec& spec : catalog_sample()) {
      const SatakeDiagram S = catalog_diagram(spec);
      INFO(S.label.text);
      for (int v = 0; v < S.rs.rank; ++v) {
        const std::vector<int> closed = pi_closure(S, {v});
        std::vector<int> live;
        for (int u = 0; u < S.rs.rank; ++u)
          if (!std::binary_search(closed.begin(), closed.end(), u)) live.push_back(u);
        for (int u : live) {
          const std::vector<int> supp = support(S.rs, S.bar(S.rs.simple_roots[u]));
          for (int s : supp) CHECK(std::binary_search(live.begin(), live.end(), s));
        }
      }
    }
  }
}

TEST_CASE("recognition inverts the catalog") {
  for (const AlgebraSpec& spec : catalog_sample()) {
    const SatakeDiagram S = catalog_diagram(spec);
    INFO(S.label.text);
    const RecognizedForm back = recognize_component(S, S.all_nodes());
    CHECK(back.label.spec == spec);
    CHECK(sorted(back.nodes) == S.all_nodes());
  }
}

TEST_CASE("low-rank coincidences resolve to an isomorphic form") {
  SECTION("su(1,1) is recognized as sl(2,R)") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIV, 0, 1));
    const RecognizedForm back = recognize_component(S, S.all_nodes());
    CHECK(back.label.spec.family == FamilyTag::AI);
    CHECK(back.label.text == "sl(2,R)");
    CHECK(back.label.weyl_k_order == S.label.weyl_k_order);
    CHECK(back.label.nu_value == S.label.nu_value);
  }
  SECTION("so*(6) is recognized as su(1,3)") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::DIII, 0, 0, 3));
    const RecognizedForm back = recognize_component(S, S.all_nodes());
    CHECK(back.label.spec.family == FamilyTag::AIV);
    CHECK(back.label.text == "su(1,3)");
    CHECK(back.label.weyl_k_order == S.label.weyl_k_order);
    CHECK(back.label.nu_value == S.label.nu_value);
  }
  SECTION("sp(1,1) keeps its C reading inside a C diagram") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::CII, 1, 1));
    const RecognizedForm back = recognize_component(S, S.all_nodes());
    CHECK(back.label.spec == make(FamilyTag::CII, 1, 1));
  }
  SECTION("complex C2 and complex B2 have equal payloads") {
    const SatakeDiagram S = catalog_diagram(make_base(FamilyTag::COMPLEX, {Family::C, 2}));
    const RecognizedForm back = recognize_component(S, S.all_nodes());
    CHECK(back.label.spec.family == FamilyTag::COMPLEX);
    CHECK(back.label.weyl_k_order == S.label.weyl_k_order);
    CHECK(back.label.nu_value == 0);
  }
}

TEST_CASE("levi_factors composes closure, erasure and recognition") {
  SECTION("su(3,4), crossing an inner arrow pair") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AIII, 3, 4));
    const auto levi = levi_factors(S, {1, 4});
    REQUIRE(levi.size() == 2);
    CHECK(levi[0].label.text == "sl(2,C)");
    CHECK(levi[1].label.text == "su(1,2)");
  }
  SECTION("empty cross set keeps the whole form") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::EIV));
    const auto levi = levi_factors(S, {});
    REQUIRE(levi.size() == 1);
    CHECK(levi[0].label.spec.family == FamilyTag::EIV);
  }
  SECTION("split A3 with a middle cross leaves two rank-one split factors") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::AI, 0, 0, 4));
    const auto levi = levi_factors(S, {1});
    REQUIRE(levi.size() == 2);
    CHECK(levi[0].label.text == "sl(2,R)");
    CHECK(levi[1].label.text == "sl(2,R)");
  }
  SECTION("E IV with one end crossed") {
    const SatakeDiagram S = catalog_diagram(make(FamilyTag::EIV));
    const auto levi = levi_factors(S, {0});
    REQUIRE(levi.size() == 1);
    CHECK(levi[0].label.text == "so(1,9)");
  }
}
