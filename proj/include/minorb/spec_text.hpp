#pragma once

/// Textual front end: the algebra-name grammar, canonical rendering,
/// and plain-text renderers for roots and diagrams.
///
/// Grammar (whitespace between tokens is ignored; names are
/// case-sensitive):
///
///   spec     := classical | exceptional | based
///   classical:= "sl(" int "," ("R"|"H") ")"
///             | "su(" int "," int ")"
///             | "so(" int "," int ")"
///             | "so*(" int ")"
///             | "sp(" int "," (int|"R") ")"
///   exceptional := "EI".."EIX" | "FI" | "FII" | "GI"
///   based    := ("compact"|"complex") ":" letter rank
///
/// so(p,q) is normalized by swapping to p <= q; the parity of p+q
/// selects the B family (odd) or the D family (even), and p = 1
/// selects the rank-one-real-form rows so(1,2n) / so(1,2n-1).
/// Likewise su(1,q) is the q >= 1 row, sp(2n,R) requires an even
/// first argument, and so*(2n) an even argument.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "minorb/errors.hpp"
#include "minorb/linalg.hpp"
#include "minorb/rational.hpp"
#include "minorb/root_system.hpp"
#include "minorb/satake.hpp"

namespace minorb {

namespace detail {

/// Largest diagram rank accepted from textual input.  Keeps every
/// downstream Weyl-group order comfortably inside long long.
inline constexpr int kMaxSpecRank = 16;

class SpecParser {
 public:
  explicit SpecParser(const std::string& input) : input_(input) {
    for (std::size_t i = 0; i < input.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(input[i]))) {
        text_ += input[i];
        origin_.push_back(i);
      }
    }
  }

  [[nodiscard]] AlgebraSpec parse() {
    const std::size_t head_at = i_;
    const std::string head = word();
    AlgebraSpec spec;
    if (head == "sl") {
      spec = parse_sl();
    } else if (head == "su") {
      spec = parse_su();
    } else if (head == "so") {
      spec = eat('*') ? parse_so_star() : parse_so();
    } else if (head == "sp") {
      spec = parse_sp();
    } else if (head == "compact" || head == "complex") {
      spec = parse_based(head == "compact" ? FamilyTag::COMPACT : FamilyTag::COMPLEX);
    } else if (const auto tag = exceptional_tag(head)) {
      spec.family = *tag;
    } else {
      fail("unknown algebra name '" + head + "'", head_at);
    }
    if (i_ != text_.size()) fail("unexpected trailing characters", i_);
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    const std::size_t pos = at < origin_.size() ? origin_[at] : input_.size();
    throw SyntaxError("algebra spec: " + what, pos);
  }

  [[nodiscard]] bool eat(char c) {
    if (i_ < text_.size() && text_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'", i_);
  }

  /// Maximal run of letters starting here; empty run is an error.
  [[nodiscard]] std::string word() {
    const std::size_t start = i_;
    while (i_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i_]))) ++i_;
    if (i_ == start) fail("expected an algebra name", start);
    return text_.substr(start, i_ - start);
  }

  [[nodiscard]] int integer() {
    if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
      fail("expected an integer", i_);
    long long value = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      value = value * 10 + (text_[i_] - '0');
      if (value > 1000000) throw RangeError("algebra spec: parameter too large");
      ++i_;
    }
    return static_cast<int>(value);
  }

  [[nodiscard]] static std::optional<FamilyTag> exceptional_tag(const std::string& w) {
    if (w == "EI") return FamilyTag::EI;
    if (w == "EII") return FamilyTag::EII;
    if (w == "EIII") return FamilyTag::EIII;
    if (w == "EIV") return FamilyTag::EIV;
    if (w == "EV") return FamilyTag::EV;
    if (w == "EVI") return FamilyTag::EVI;
    if (w == "EVII") return FamilyTag::EVII;
    if (w == "EVIII") return FamilyTag::EVIII;
    if (w == "EIX") return FamilyTag::EIX;
    if (w == "FI") return FamilyTag::FI;
    if (w == "FII") return FamilyTag::FII;
    if (w == "GI") return FamilyTag::GI;
    return std::nullopt;
  }

  [[nodiscard]] AlgebraSpec parse_sl() {
    expect('(');
    AlgebraSpec spec;
    spec.n = integer();
    expect(',');
    if (eat('R')) {
      spec.family = FamilyTag::AI;
    } else if (eat('H')) {
      spec.family = FamilyTag::AII;
    } else {
      fail("expected 'R' or 'H'", i_);
    }
    expect(')');
    return spec;
  }

  [[nodiscard]] AlgebraSpec parse_su() {
    expect('(');
    const int a = integer();
    expect(',');
    const int b = integer();
    expect(')');
    AlgebraSpec spec;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    if (lo == 1) {
      spec.family = FamilyTag::AIV;
      spec.q = hi;
    } else {
      spec.family = FamilyTag::AIII;
      spec.p = lo;
      spec.q = hi;
    }
    return spec;
  }

  [[nodiscard]] AlgebraSpec parse_so() {
    expect('(');
    const int a = integer();
    expect(',');
    const int b = integer();
    expect(')');
    AlgebraSpec spec;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const int sum = lo + hi;
    if (sum % 2 == 1) {
      spec.n = (sum - 1) / 2;
      if (lo == 1) {
        spec.family = FamilyTag::BII;
      } else {
        spec.family = FamilyTag::BI;
        spec.p = lo;
      }
    } else {
      spec.n = sum / 2;
      if (lo == 1) {
        spec.family = FamilyTag::DII;
      } else {
        spec.family = FamilyTag::DI;
        spec.p = lo;
      }
    }
    return spec;
  }

  [[nodiscard]] AlgebraSpec parse_so_star() {
    expect('(');
    const int a = integer();
    expect(')');
    if (a % 2 != 0) throw RangeError("so*(2n) requires an even argument");
    AlgebraSpec spec;
    spec.family = FamilyTag::DIII;
    spec.n = a / 2;
    return spec;
  }

  [[nodiscard]] AlgebraSpec parse_sp() {
    expect('(');
    const int a = integer();
    expect(',');
    AlgebraSpec spec;
    if (eat('R')) {
      if (a % 2 != 0) throw RangeError("sp(2n,R) requires an even first argument");
      spec.family = FamilyTag::CI;
      spec.n = a / 2;
    } else {
      const int b = integer();
      spec.family = FamilyTag::CII;
      spec.p = std::min(a, b);
      spec.q = std::max(a, b);
    }
    expect(')');
    return spec;
  }

  [[nodiscard]] AlgebraSpec parse_based(FamilyTag tag) {
    expect(':');
    if (i_ >= text_.size() || text_[i_] < 'A' || text_[i_] > 'G')
      fail("expected a type letter A..G", i_);
    AlgebraSpec spec;
    spec.family = tag;
    spec.base.family = static_cast<Family>(text_[i_]);
    ++i_;
    spec.base.rank = integer();
    return spec;
  }

  std::string input_;
  std::string text_;
  std::vector<std::size_t> origin_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses an algebra name and returns its validated catalog label.
/// Throws SyntaxError (with the offending input position) on malformed
/// text, RangeError when parameters violate the catalog bounds, and
/// DomainError for an invalid base type after "compact:"/"complex:".
[[nodiscard]] inline RealFormLabel parse_algebra_spec(const std::string& text) {
  detail::SpecParser parser(text);
  RealFormLabel label = detail::make_label(parser.parse());
  if (label.rank > detail::kMaxSpecRank)
    throw RangeError("algebra spec: rank " + std::to_string(label.rank) +
                     " exceeds the supported maximum " + std::to_string(detail::kMaxSpecRank));
  return label;
}

/// Canonical printable form; parse_algebra_spec(render_spec(s)) yields
/// the same spec for every valid s.
[[nodiscard]] inline std::string render_spec(const AlgebraSpec& spec) {
  return detail::make_label(spec).text;
}

/// Renders a vector in ambient coordinates, positive terms first:
/// "e1-e2", "2e3-e1-e2", "(1/2)e1+(1/2)e2".  Zero renders as "0".
[[nodiscard]] inline std::string render_root_coords(const Vec& v) {
  const auto magnitude = [](const Rational& m) -> std::string {  // m > 0
    if (m == Rational(1)) return "";
    if (m.is_integer()) return std::to_string(m.numerator());
    return "(" + m.str() + ")";
  };
  std::string positive;
  std::string negative;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const std::string axis = "e" + std::to_string(i + 1);
    if (v[i] > Rational(0)) {
      if (!positive.empty()) positive += "+";
      positive += magnitude(v[i]) + axis;
    } else {
      negative += "-" + magnitude(-v[i]) + axis;
    }
  }
  if (positive.empty() && negative.empty()) return "0";
  return positive + negative;
}

/// Renders an integer combination of simple roots, positive terms
/// first: "alpha_1+alpha_2+2*alpha_3", "-alpha_4".  Indices 1-based.
[[nodiscard]] inline std::string render_simple_combination(const std::vector<long long>& coeffs) {
  const auto magnitude = [](long long m) -> std::string {  // m > 0
    return m == 1 ? "" : std::to_string(m) + "*";
  };
  std::string positive;
  std::string negative;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const std::string term = "alpha_" + std::to_string(i + 1);
    if (coeffs[i] > 0) {
      if (!positive.empty()) positive += "+";
      positive += magnitude(coeffs[i]) + term;
    } else {
      negative += "-" + magnitude(-coeffs[i]) + term;
    }
  }
  if (positive.empty() && negative.empty()) return "0";
  return positive + negative;
}

/// Three-line text form of a (possibly cross-marked) diagram:
///
///   nodes:  o ● × ...          (x-th glyph is node x; × marks a cross)
///   bonds:  1-2 2-3(2) ...     (multiplicity in parentheses when > 1)
///   arrows: 1<->6 ...          (involution pairs; "none" when absent)
///
/// Crosses are 0-based node indices and take glyph precedence over
/// the coloring.
[[nodiscard]] inline std::string render_diagram(const SatakeDiagram& S,
                                                const std::vector<int>& crosses = {}) {
  detail::check_nodes(S, crosses, "render_diagram");
  std::vector<bool> crossed(static_cast<std::size_t>(S.rs.rank), false);
  for (const int c : crosses) crossed[static_cast<std::size_t>(c)] = true;

  std::string nodes = "nodes: ";
  for (int i = 0; i < S.rs.rank; ++i) {
    if (i > 0) nodes += " ";
    nodes += crossed[static_cast<std::size_t>(i)] ? "×" : (S.is_black(i) ? "●" : "o");
  }

  std::string bonds = "bonds:";
  for (int i = 0; i < S.rs.rank; ++i) {
    for (int j = i + 1; j < S.rs.rank; ++j) {
      const int m = detail::bond(S.rs, i, j);
      if (m == 0) continue;
      bonds += " " + std::to_string(i + 1) + "-" + std::to_string(j + 1);
      if (m > 1) bonds += "(" + std::to_string(m) + ")";
    }
  }
  if (bonds == "bonds:") bonds += " none";

  std::string arrows = "arrows:";
  for (int i = 0; i < S.rs.rank; ++i)
    if (S.arrow[static_cast<std::size_t>(i)] > i)
      arrows += " " + std::to_string(i + 1) + "<->" +
                std::to_string(S.arrow[static_cast<std::size_t>(i)] + 1);
  if (arrows == "arrows:") arrows += " none";

  return nodes + "\n" + bonds + "\n" + arrows + "\n";
}

}  // namespace minorb
