/// Command-line front end for the minimal-orbit Euler characteristic
/// engine.
///
/// Subcommands:
///   chi     Euler characteristic of a cross-marked diagram
///   nu      strongly orthogonal root bounds
///   levi    closure, and recognized Levi factors, of a cross set
///   sigma   diagram text form and bar images of all simple roots
///   gamma   reference strongly orthogonal system, verified
///   tables  regenerate the catalog tables from the engine
///   scan    classify every nonempty cross set of one diagram
///
/// Exit codes: 0 success, 1 internal consistency failure, 2 usage
/// error (bad syntax, parameters out of range, bad indices).

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minorb/errors.hpp"
#include "minorb/euler.hpp"
#include "minorb/ortho.hpp"
#include "minorb/root_system.hpp"
#include "minorb/satake.hpp"
#include "minorb/spec_text.hpp"

namespace {

using nlohmann::ordered_json;
using minorb::AlgebraSpec;
using minorb::EulerReport;
using minorb::FamilyTag;
using minorb::GammaVerification;
using minorb::RealFormLabel;
using minorb::RecognizedForm;
using minorb::SatakeDiagram;

// ---------------------------------------------------------------------------
// Small rendering helpers shared by the subcommands.

enum class Format { text, json, csv, md };

[[nodiscard]] Format format_of(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return Format::md;  // CLI11 restricts the choices
}

/// Rows of printable cells with a header; renders as aligned text,
/// CSV (RFC-style quoting), or a markdown pipe table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

[[nodiscard]] std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  return out + "\"";
}

[[nodiscard]] std::string to_csv(const Table& t) {
  std::string out;
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ",";
      out += csv_cell(cells[i]);
    }
    out += "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return out;
}

[[nodiscard]] std::string md_cell(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '|') out += "\\";
    out += c;
  }
  return out;
}

[[nodiscard]] std::string to_md(const Table& t) {
  std::string out = "|";
  for (const auto& h : t.header) out += " " + md_cell(h) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : t.rows) {
    out += "|";
    for (const auto& cell : row) out += " " + md_cell(cell) + " |";
    out += "\n";
  }
  return out;
}

[[nodiscard]] std::string to_text(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  const auto widen = [&width](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      width[i] = std::max(width[i], cells[i].size());
  };
  widen(t.header);
  for (const auto& row : t.rows) widen(row);

  std::string out;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size(), ' ');
    }
    out += "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return out;
}

[[nodiscard]] std::string render_table(const Table& t, Format f) {
  switch (f) {
    case Format::text: return to_text(t);
    case Format::csv: return to_csv(t);
    case Format::md: return to_md(t);
    case Format::json: break;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj;
    for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

/// "{1,6}" with 1-based indices; "{}" when empty.
[[nodiscard]] std::string cross_set_text(const std::vector<int>& zero_based) {
  std::string out = "{";
  for (std::size_t i = 0; i < zero_based.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(zero_based[i] + 1);
  }
  return out + "}";
}

[[nodiscard]] ordered_json one_based_array(const std::vector<int>& zero_based) {
  ordered_json arr = ordered_json::array();
  for (const int v : zero_based) arr.push_back(v + 1);
  return arr;
}

/// Parses "1,6" into sorted unique 0-based indices, validating 1..rank.
[[nodiscard]] std::vector<int> parse_crosses(const std::string& text, int rank) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    if (text.empty()) break;
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string item = text.substr(start, comma - start);
    std::erase_if(item, [](unsigned char c) { return std::isspace(c); });
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw minorb::DomainError("crosses: expected comma-separated node indices, got '" +
                                text + "'");
    const long long v = std::stoll(item);
    if (v < 1 || v > rank)
      throw minorb::DomainError("crosses: node " + item + " out of range 1.." +
                                std::to_string(rank));
    out.push_back(static_cast<int>(v - 1));
    if (comma == text.size()) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Parses "4..6", "4", "n=4..6", "p=3" into an inclusive list.
[[nodiscard]] std::vector<int> parse_range(std::string text) {
  std::erase_if(text, [](unsigned char c) { return std::isspace(c); });
  if (text.rfind("n=", 0) == 0 || text.rfind("p=", 0) == 0) text = text.substr(2);
  const auto number = [](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw minorb::DomainError("range: expected LO..HI or a single integer, got '" + s + "'");
    return static_cast<int>(std::stoll(s));
  };
  int lo = 0;
  int hi = 0;
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    lo = hi = number(text);
  } else {
    lo = number(text.substr(0, dots));
    hi = number(text.substr(dots + 2));
  }
  if (lo > hi || hi - lo > 64) throw minorb::DomainError("range: bounds out of order or too wide");
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

[[nodiscard]] std::string family_code(FamilyTag tag) {
  std::string code = minorb::to_string(tag);
  std::erase(code, ' ');
  return code;
}

[[nodiscard]] std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Option storage.

struct Options {
  std::string algebra;
  std::string crosses;
  std::string format = "text";
  bool trace = false;
  int cap = 8;
  std::string which;      // tables: thm51 | appendix | gamma
  std::string row;        // tables: family filter
  std::string n_range;    // tables: override for n
  std::string p_range;    // tables: override for p
  std::string range_AI;   // tables shorthand: --AI n=LO..HI
  std::string range_AII;  // tables shorthand
  std::string range_DI;   // tables shorthand
  std::string range_DII;  // tables shorthand
};

struct ParsedQuery {
  RealFormLabel label;
  SatakeDiagram diagram;
  std::vector<int> crosses;
};

[[nodiscard]] ParsedQuery load_query(const Options& opt) {
  ParsedQuery q;
  q.label = minorb::parse_algebra_spec(opt.algebra);
  q.diagram = minorb::catalog_diagram(q.label.spec);
  q.crosses = parse_crosses(opt.crosses, q.diagram.rs.rank);
  return q;
}

// ---------------------------------------------------------------------------
// chi

void run_chi(const Options& opt) {
  const ParsedQuery q = load_query(opt);
  const EulerReport r = minorb::chi(q.diagram, q.crosses);
  const Format f = format_of(opt.format);

  std::vector<std::string> levi_texts;
  for (const auto& L : r.levi) levi_texts.push_back(L.text);

  const auto trace_rows = [&r] {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      const auto& step = r.trace[i];
      rows.push_back({std::to_string(i + 1), "alpha_" + std::to_string(step.pivot + 1),
                      step.base, std::to_string(step.base_chi), step.fiber});
    }
    return rows;
  };

  if (f == Format::text) {
    std::string out;
    out += "algebra: " + q.label.text + "\n";
    out += "crosses: " + cross_set_text(q.crosses) + "\n";
    out += "chi = " + std::to_string(r.chi) + "\n";
    if (r.chi_tilde) out += "chi_tilde = " + std::to_string(*r.chi_tilde) + "\n";
    if (r.pi1) out += "pi1 = " + std::to_string(*r.pi1) + "\n";
    if (r.chi > 0) {
      out += "criterion: holds (nu_levi = nu_g = " + std::to_string(r.nu_g) + ")\n";
    } else {
      out += "criterion: fails (nu_levi < nu_g: " + std::to_string(r.nu_levi) + " < " +
             std::to_string(r.nu_g) + ")\n";
    }
    out += "nu_g = " + std::to_string(r.nu_g) + "\n";
    out += "nu_levi = " + std::to_string(r.nu_levi) + "\n";
    out += "levi: " + (levi_texts.empty() ? "none" : join(levi_texts, ", ")) + "\n";
    if (opt.trace) {
      out += "trace:\n";
      if (r.trace.empty()) out += "  (no fibration steps)\n";
      for (const auto& row : trace_rows())
        out += "  step " + row[0] + ": pivot " + row[1] + ", base " + row[2] + " (chi = " +
               row[3] + "), fiber " + row[4] + "\n";
    }
    std::cout << out;
    return;
  }

  if (f == Format::json) {
    ordered_json j;
    j["algebra"] = q.label.text;
    j["crosses"] = one_based_array(q.crosses);
    j["chi"] = r.chi;
    if (r.chi_tilde) j["chi_tilde"] = *r.chi_tilde;
    if (r.pi1) j["pi1"] = *r.pi1;
    j["nu_g"] = r.nu_g;
    j["nu_levi"] = r.nu_levi;
    j["levi"] = levi_texts;
    ordered_json steps = ordered_json::array();
    for (const auto& step : r.trace) {
      ordered_json s;
      s["pivot"] = step.pivot + 1;
      s["base"] = step.base;
      s["base_chi"] = step.base_chi;
      s["fiber"] = step.fiber;
      steps.push_back(s);
    }
    j["trace"] = steps;
    std::cout << j.dump(2) << "\n";
    return;
  }

  Table t;
  t.header = {"algebra", "crosses", "chi", "chi_tilde", "pi1", "nu_g", "nu_levi", "levi"};
  t.rows.push_back({q.label.text, cross_set_text(q.crosses), std::to_string(r.chi),
                    r.chi_tilde ? std::to_string(*r.chi_tilde) : "",
                    r.pi1 ? std::to_string(*r.pi1) : "", std::to_string(r.nu_g),
                    std::to_string(r.nu_levi), join(levi_texts, "+")});
  std::cout << render_table(t, f);
  if (opt.trace && !r.trace.empty()) {
    Table steps;
    steps.header = {"step", "pivot", "base", "base_chi", "fiber"};
    steps.rows = trace_rows();
    std::cout << "\n" << render_table(steps, f);
  }
}

// ---------------------------------------------------------------------------
// nu

void run_nu(const Options& opt, bool with_crosses) {
  const ParsedQuery q = load_query(opt);
  const int nu_g = minorb::nu_exact(q.diagram);
  const Format f = format_of(opt.format);

  std::optional<int> nu_levi;
  if (with_crosses) nu_levi = minorb::chi(q.diagram, q.crosses).nu_levi;

  if (f == Format::text) {
    std::string out = "algebra: " + q.label.text + "\n";
    if (!with_crosses) {
      out += "nu = " + std::to_string(nu_g) + "\n";
    } else {
      out += "crosses: " + cross_set_text(q.crosses) + "\n";
      out += "nu_g = " + std::to_string(nu_g) + "\n";
      out += "nu_levi = " + std::to_string(*nu_levi) + "\n";
    }
    std::cout << out;
    return;
  }
  if (f == Format::json) {
    ordered_json j;
    j["algebra"] = q.label.text;
    if (with_crosses) j["crosses"] = one_based_array(q.crosses);
    j["nu_g"] = nu_g;
    if (with_crosses) j["nu_levi"] = *nu_levi;
    std::cout << j.dump(2) << "\n";
    return;
  }
  Table t;
  t.header = {"algebra", "crosses", "nu_g", "nu_levi"};
  t.rows.push_back({q.label.text, with_crosses ? cross_set_text(q.crosses) : "",
                    std::to_string(nu_g),
                    nu_levi ? std::to_string(*nu_levi) : ""});
  std::cout << render_table(t, f);
}

// ---------------------------------------------------------------------------
// levi

void run_levi(const Options& opt) {
  const ParsedQuery q = load_query(opt);
  const std::vector<int> closure = minorb::pi_closure(q.diagram, q.crosses);
  const std::vector<RecognizedForm> factors = minorb::levi_factors(q.diagram, q.crosses);
  const Format f = format_of(opt.format);

  const auto nodes_text = [](const RecognizedForm& factor) {
    std::vector<int> nodes = factor.nodes;
    std::sort(nodes.begin(), nodes.end());
    std::vector<std::string> parts;
    for (const int v : nodes) parts.push_back(std::to_string(v + 1));
    return join(parts, ",");
  };

  if (f == Format::text) {
    std::string out = "algebra: " + q.label.text + "\n";
    out += "crosses: " + cross_set_text(q.crosses) + "\n";
    out += "closure: " + cross_set_text(closure) + "\n";
    if (factors.empty()) {
      out += "levi: none\n";
    } else {
      out += "levi:\n";
      for (const auto& factor : factors)
        out += "  " + factor.label.text + " [nodes " + nodes_text(factor) + "]\n";
    }
    std::cout << out;
    return;
  }
  if (f == Format::json) {
    ordered_json j;
    j["algebra"] = q.label.text;
    j["crosses"] = one_based_array(q.crosses);
    j["closure"] = one_based_array(closure);
    ordered_json arr = ordered_json::array();
    for (const auto& factor : factors) {
      ordered_json item;
      item["label"] = factor.label.text;
      std::vector<int> nodes = factor.nodes;
      std::sort(nodes.begin(), nodes.end());
      item["nodes"] = one_based_array(nodes);
      arr.push_back(item);
    }
    j["levi"] = arr;
    std::cout << j.dump(2) << "\n";
    return;
  }
  Table t;
  t.header = {"algebra", "crosses", "closure", "factor", "nodes"};
  for (const auto& factor : factors)
    t.rows.push_back({q.label.text, cross_set_text(q.crosses), cross_set_text(closure),
                      factor.label.text, nodes_text(factor)});
  std::cout << render_table(t, f);
}

// ---------------------------------------------------------------------------
// sigma

void run_sigma(const Options& opt) {
  const ParsedQuery q = load_query(opt);
  const SatakeDiagram& S = q.diagram;
  const Format f = format_of(opt.format);

  struct NodeInfo {
    int index;  // 0-based
    std::string color;
    int arrow;  // partner, or -1
    std::string cls;
    std::string bar;
  };
  std::vector<NodeInfo> nodes;
  for (int i = 0; i < S.rs.rank; ++i) {
    NodeInfo info;
    info.index = i;
    info.color = S.is_black(i) ? "black" : "white";
    info.arrow = S.arrow[static_cast<std::size_t>(i)];
    info.cls = minorb::to_string(minorb::classify_root(S, S.rs.simple_roots[i]));
    info.bar = minorb::render_simple_combination(
        minorb::simple_coordinates(S.rs, S.bar(S.rs.simple_roots[i])));
    nodes.push_back(info);
  }

  if (f == Format::text) {
    std::string out = "algebra: " + q.label.text + "\n";
    out += minorb::render_diagram(S);
    out += "bar:\n";
    for (const auto& info : nodes)
      out += "  alpha_" + std::to_string(info.index + 1) + " -> " + info.bar + " [" + info.cls +
             "]\n";
    std::cout << out;
    return;
  }
  if (f == Format::json) {
    ordered_json j;
    j["algebra"] = q.label.text;
    j["diagram"] = minorb::render_diagram(S);
    ordered_json arr = ordered_json::array();
    for (const auto& info : nodes) {
      ordered_json item;
      item["node"] = info.index + 1;
      item["color"] = info.color;
      if (info.arrow >= 0)
        item["arrow"] = info.arrow + 1;
      else
        item["arrow"] = nullptr;
      item["class"] = info.cls;
      item["bar"] = info.bar;
      arr.push_back(item);
    }
    j["nodes"] = arr;
    std::cout << j.dump(2) << "\n";
    return;
  }
  Table t;
  t.header = {"node", "color", "arrow", "class", "bar"};
  for (const auto& info : nodes)
    t.rows.push_back({std::to_string(info.index + 1), info.color,
                      info.arrow >= 0 ? std::to_string(info.arrow + 1) : "-", info.cls,
                      info.bar});
  std::cout << render_table(t, f);
}

// ---------------------------------------------------------------------------
// gamma

void run_gamma(const Options& opt) {
  const RealFormLabel label = minorb::parse_algebra_spec(opt.algebra);
  const GammaVerification v = minorb::verify_gamma(label.spec);
  const Format f = format_of(opt.format);

  std::vector<std::string> members;
  for (const auto& root : v.system.roots) members.push_back(minorb::render_root_coords(root));

  if (f == Format::text) {
    std::string out = "algebra: " + label.text + "\n";
    out += "gamma: " + (members.empty() ? "(empty)" : join(members, ", ")) + "\n";
    out += "size = " + std::to_string(v.size) + "\n";
    out += "nu_formula = " + std::to_string(v.nu_formula) + "\n";
    out += "nu_engine = " + std::to_string(v.nu_engine) + "\n";
    out += "verdict: " + v.summary() + "\n";
    std::cout << out;
    return;
  }
  if (f == Format::json) {
    ordered_json j;
    j["algebra"] = label.text;
    j["gamma"] = members;
    j["size"] = v.size;
    j["nu_formula"] = v.nu_formula;
    j["nu_engine"] = v.nu_engine;
    j["members_are_roots"] = v.members_are_roots;
    j["members_are_real"] = v.members_are_real;
    j["pairwise_strongly_orthogonal"] = v.pairwise_strongly_orthogonal;
    j["no_duplicates"] = v.no_duplicates;
    j["ok"] = v.ok();
    std::cout << j.dump(2) << "\n";
    return;
  }
  Table t;
  t.header = {"algebra", "gamma", "size", "nu_formula", "nu_engine", "ok"};
  t.rows.push_back({label.text, join(members, "; "), std::to_string(v.size),
                    std::to_string(v.nu_formula), std::to_string(v.nu_engine),
                    v.ok() ? "yes" : "no"});
  std::cout << render_table(t, f);
}

// ---------------------------------------------------------------------------
// tables

struct TableEntry {
  FamilyTag tag;
  AlgebraSpec spec;
};

[[nodiscard]] AlgebraSpec spec_of(FamilyTag tag, int p, int n) {
  AlgebraSpec s;
  s.family = tag;
  switch (tag) {
    case FamilyTag::AI:
    case FamilyTag::AII:
    case FamilyTag::BII:
    case FamilyTag::CI:
    case FamilyTag::DII:
    case FamilyTag::DIII:
      s.n = n;
      break;
    case FamilyTag::AIV:
      s.q = n;
      break;
    case FamilyTag::AIII:
    case FamilyTag::CII:
      s.p = p;
      s.q = n;
      break;
    case FamilyTag::BI:
    case FamilyTag::DI:
      s.p = p;
      s.n = n;
      break;
    default:
      break;  // exceptional rows carry no parameters
  }
  return s;
}

[[nodiscard]] bool family_uses_p(FamilyTag tag) {
  return tag == FamilyTag::AIII || tag == FamilyTag::CII || tag == FamilyTag::BI ||
         tag == FamilyTag::DI;
}

[[nodiscard]] bool family_is_classical(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::AI:
    case FamilyTag::AII:
    case FamilyTag::AIII:
    case FamilyTag::AIV:
    case FamilyTag::BI:
    case FamilyTag::BII:
    case FamilyTag::CI:
    case FamilyTag::CII:
    case FamilyTag::DI:
    case FamilyTag::DII:
    case FamilyTag::DIII:
      return true;
    default:
      return false;
  }
}

/// Instantiates one family over the requested parameter grid, silently
/// skipping combinations outside the catalog bounds.  Exceptional
/// families take no parameters and contribute a single row.
void append_family(std::vector<TableEntry>& out, FamilyTag tag, const std::vector<int>& n_values,
                   const std::vector<int>& p_values) {
  if (!family_is_classical(tag)) {
    AlgebraSpec s;
    s.family = tag;
    out.push_back({tag, s});
    return;
  }
  for (const int n : n_values) {
    const std::vector<int> p_grid = family_uses_p(tag)
                                        ? (p_values.empty() ? parse_range("1.." + std::to_string(n))
                                                            : p_values)
                                        : std::vector<int>{0};
    for (const int p : p_grid) {
      const AlgebraSpec s = spec_of(tag, p, n);
      try {
        minorb::detail::validate_spec(s);
      } catch (const minorb::RangeError&) {
        continue;
      }
      out.push_back({tag, s});
    }
  }
}

[[nodiscard]] std::optional<FamilyTag> family_from_code(const std::string& code) {
  static const std::vector<FamilyTag> all = {
      FamilyTag::AI,  FamilyTag::AII,   FamilyTag::AIII, FamilyTag::AIV, FamilyTag::BI,
      FamilyTag::BII, FamilyTag::CI,    FamilyTag::CII,  FamilyTag::DI,  FamilyTag::DII,
      FamilyTag::DIII, FamilyTag::EI,   FamilyTag::EII,  FamilyTag::EIII, FamilyTag::EIV,
      FamilyTag::EV,  FamilyTag::EVI,   FamilyTag::EVII, FamilyTag::EVIII, FamilyTag::EIX,
      FamilyTag::FI,  FamilyTag::FII,   FamilyTag::GI};
  for (const FamilyTag tag : all)
    if (family_code(tag) == code) return tag;
  return std::nullopt;
}

/// Default parameter samples used when no range is given: three points
/// per classical family, one row per exceptional family.
[[nodiscard]] std::vector<TableEntry> table_entries(const std::vector<FamilyTag>& families,
                                                    const Options& opt) {
  const bool has_n = !opt.n_range.empty();
  const bool has_p = !opt.p_range.empty();
  const std::vector<int> n_override = has_n ? parse_range(opt.n_range) : std::vector<int>{};
  const std::vector<int> p_override = has_p ? parse_range(opt.p_range) : std::vector<int>{};

  const auto defaults = [](FamilyTag tag) -> std::vector<std::pair<int, int>> {  // (p, n)
    switch (tag) {
      case FamilyTag::AI: return {{0, 3}, {0, 6}, {0, 9}};
      case FamilyTag::AII: return {{0, 2}, {0, 3}, {0, 5}};
      case FamilyTag::AIII: return {{2, 2}, {2, 5}, {3, 4}};
      case FamilyTag::AIV: return {{0, 2}, {0, 5}, {0, 8}};
      case FamilyTag::BI: return {{2, 2}, {2, 4}, {3, 5}};
      case FamilyTag::BII: return {{0, 2}, {0, 4}, {0, 6}};
      case FamilyTag::CI: return {{0, 2}, {0, 4}, {0, 6}};
      case FamilyTag::CII: return {{1, 2}, {2, 2}, {2, 4}};
      case FamilyTag::DI: return {{2, 4}, {3, 5}, {4, 6}};
      case FamilyTag::DII: return {{0, 4}, {0, 5}, {0, 7}};
      case FamilyTag::DIII: return {{0, 3}, {0, 5}, {0, 6}};
      default: return {};
    }
  };

  std::vector<TableEntry> out;
  for (const FamilyTag tag : families) {
    if (!family_is_classical(tag)) {
      append_family(out, tag, {}, {});  // single row, parameters ignored
      continue;
    }
    if (has_n || has_p) {
      std::vector<int> n_values = n_override;
      if (n_values.empty())  // only --p given: keep the default n sample
        for (const auto& [p, n] : defaults(tag)) n_values.push_back(n);
      append_family(out, tag, n_values, p_override);
      continue;
    }
    for (const auto& [p, n] : defaults(tag)) {
      const AlgebraSpec s = spec_of(tag, p, n);
      try {
        minorb::detail::validate_spec(s);
      } catch (const minorb::RangeError&) {
        continue;
      }
      out.push_back({tag, s});
    }
  }
  return out;
}

[[nodiscard]] std::vector<FamilyTag> selected_families(const Options& opt,
                                                       const std::vector<FamilyTag>& all) {
  if (opt.row.empty()) return all;
  const auto tag = family_from_code(opt.row);
  if (!tag || std::find(all.begin(), all.end(), *tag) == all.end())
    throw minorb::DomainError("tables: unknown or unsupported row '" + opt.row + "'");
  return {*tag};
}

void run_tables(const Options& raw) {
  Options opt = raw;
  // Shorthand family flags (--AI n=4..6 etc) fold into --row/--n.
  const std::array<std::pair<const char*, const std::string*>, 4> shorthand{
      {{"AI", &raw.range_AI},
       {"AII", &raw.range_AII},
       {"DI", &raw.range_DI},
       {"DII", &raw.range_DII}}};
  for (const auto& [fam, range] : shorthand) {
    if (range->empty()) continue;
    if (!opt.row.empty() && opt.row != fam)
      throw minorb::DomainError("tables: conflicting family selections");
    opt.row = fam;
    opt.n_range = *range;
  }
  const Format f = format_of(opt.format);
  Table t;

  if (opt.which == "thm51") {
    static const std::vector<FamilyTag> covered = {FamilyTag::AI, FamilyTag::AII, FamilyTag::DI,
                                                   FamilyTag::DII, FamilyTag::EI, FamilyTag::EIV};
    Options scoped = opt;
    if (scoped.n_range.empty() && scoped.row == "AI") scoped.n_range = "2..9";
    if (scoped.n_range.empty() && scoped.row == "AII") scoped.n_range = "2..5";
    if (scoped.n_range.empty() && (scoped.row == "DI" || scoped.row == "DII"))
      scoped.n_range = "4..7";
    std::vector<TableEntry> entries;
    if (scoped.row.empty() && scoped.n_range.empty() && scoped.p_range.empty()) {
      append_family(entries, FamilyTag::AI, parse_range("2..9"), {});
      append_family(entries, FamilyTag::AII, parse_range("2..5"), {});
      append_family(entries, FamilyTag::DI, parse_range("4..7"), {});
      append_family(entries, FamilyTag::DII, parse_range("4..7"), {});
      append_family(entries, FamilyTag::EI, {}, {});
      append_family(entries, FamilyTag::EIV, {}, {});
    } else {
      entries = table_entries(selected_families(scoped, covered), scoped);
    }
    t.header = {"family", "algebra", "alpha", "chi_tilde", "chi"};
    for (const auto& entry : entries) {
      const SatakeDiagram S = minorb::catalog_diagram(entry.spec);
      for (int alpha = 0; alpha < S.rs.rank; ++alpha) {
        const EulerReport r = minorb::chi(S, {alpha});
        if (r.chi <= 0) continue;
        t.rows.push_back({family_code(entry.tag), S.label.text, std::to_string(alpha + 1),
                          std::to_string(*r.chi_tilde), std::to_string(r.chi)});
      }
    }
  } else if (opt.which == "appendix") {
    static const std::vector<FamilyTag> covered = {
        FamilyTag::AI,  FamilyTag::AII,  FamilyTag::AIII, FamilyTag::AIV,  FamilyTag::BI,
        FamilyTag::BII, FamilyTag::CI,   FamilyTag::CII,  FamilyTag::DI,   FamilyTag::DII,
        FamilyTag::DIII, FamilyTag::EI,  FamilyTag::EII,  FamilyTag::EIII, FamilyTag::EIV,
        FamilyTag::EV,  FamilyTag::EVI,  FamilyTag::EVII, FamilyTag::EVIII, FamilyTag::EIX,
        FamilyTag::FI,  FamilyTag::FII,  FamilyTag::GI};
    t.header = {"family", "algebra", "k", "weyl_k_order", "nu", "ell"};
    for (const auto& entry : table_entries(selected_families(opt, covered), opt)) {
      const SatakeDiagram S = minorb::catalog_diagram(entry.spec);
      t.rows.push_back({family_code(entry.tag), S.label.text, S.label.compact_text,
                        std::to_string(S.label.weyl_k_order),
                        std::to_string(minorb::nu_exact(S)), std::to_string(S.label.rank)});
    }
  } else {  // gamma
    static const std::vector<FamilyTag> covered = {
        FamilyTag::AI,  FamilyTag::AII,  FamilyTag::AIII, FamilyTag::AIV,  FamilyTag::BI,
        FamilyTag::BII, FamilyTag::CI,   FamilyTag::CII,  FamilyTag::DI,   FamilyTag::DII,
        FamilyTag::DIII, FamilyTag::EI,  FamilyTag::EII,  FamilyTag::EIII, FamilyTag::EIV,
        FamilyTag::EV,  FamilyTag::EVI,  FamilyTag::EVII, FamilyTag::EVIII, FamilyTag::EIX,
        FamilyTag::FI,  FamilyTag::FII,  FamilyTag::GI};
    t.header = {"family", "algebra", "nu", "gamma", "status"};
    for (const auto& entry : table_entries(selected_families(opt, covered), opt)) {
      const GammaVerification v = minorb::verify_gamma(entry.spec);
      std::vector<std::string> members;
      for (const auto& root : v.system.roots)
        members.push_back(minorb::render_root_coords(root));
      t.rows.push_back({family_code(entry.tag), v.label.text, std::to_string(v.nu_engine),
                        members.empty() ? "(empty)" : join(members, ", "),
                        v.ok() ? "ok" : "FAILED"});
    }
  }

  std::cout << render_table(t, f);
}

// ---------------------------------------------------------------------------
// scan

void run_scan(const Options& opt) {
  const RealFormLabel label = minorb::parse_algebra_spec(opt.algebra);
  const SatakeDiagram S = minorb::catalog_diagram(label.spec);
  const int rank = S.rs.rank;
  if (rank > opt.cap)
    throw minorb::RangeError("scan: rank " + std::to_string(rank) + " exceeds the cap " +
                             std::to_string(opt.cap) + " (raise it with --cap)");
  const Format f = format_of(opt.format);

  struct Result {
    std::vector<int> crosses;
    long long chi;
  };
  std::vector<Result> results;
  long long positive = 0;
  for (unsigned mask = 1; mask < (1u << rank); ++mask) {
    std::vector<int> crosses;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) crosses.push_back(i);
    const long long value = minorb::chi(S, crosses).chi;
    if (value > 0) ++positive;
    results.push_back({std::move(crosses), value});
  }
  const long long total = static_cast<long long>(results.size());

  if (f == Format::text) {
    std::string out = "algebra: " + label.text + "\n";
    out += "rank: " + std::to_string(rank) + "\n";
    for (const auto& res : results)
      out += "crosses " + cross_set_text(res.crosses) + ": chi = " + std::to_string(res.chi) +
             "\n";
    out += "positive: " + std::to_string(positive) + " of " + std::to_string(total) + "\n";
    std::cout << out;
    return;
  }
  if (f == Format::json) {
    ordered_json j;
    j["algebra"] = label.text;
    j["rank"] = rank;
    j["total"] = total;
    j["positive"] = positive;
    ordered_json arr = ordered_json::array();
    for (const auto& res : results) {
      ordered_json item;
      item["crosses"] = one_based_array(res.crosses);
      item["chi"] = res.chi;
      arr.push_back(item);
    }
    j["results"] = arr;
    std::cout << j.dump(2) << "\n";
    return;
  }
  Table t;
  t.header = {"algebra", "crosses", "chi"};
  for (const auto& res : results)
    t.rows.push_back({label.text, cross_set_text(res.crosses), std::to_string(res.chi)});
  std::cout << render_table(t, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristics of minimal orbits on complex flag manifolds"};
  app.require_subcommand(1);

  Options opt;
  const auto format_check = CLI::IsMember({"text", "json", "csv", "md"});

  const auto add_algebra = [&opt](CLI::App* sub) {
    sub->add_option("-a,--algebra", opt.algebra,
                    "algebra name, e.g. \"sl(4,R)\", \"so(3,7)\", \"EIV\", \"compact:D4\"")
        ->required();
  };
  const auto add_format = [&opt, &format_check](CLI::App* sub) {
    sub->add_option("-f,--format", opt.format, "output format")->check(format_check);
  };

  CLI::App* chi_cmd =
      app.add_subcommand("chi", "Euler characteristic of a cross-marked diagram");
  add_algebra(chi_cmd);
  chi_cmd->add_option("-x,--crosses", opt.crosses, "comma-separated 1-based crossed nodes");
  add_format(chi_cmd);
  chi_cmd->add_flag("--trace", opt.trace, "include the fibration trace");
  chi_cmd->callback([&opt] { run_chi(opt); });

  CLI::App* nu_cmd = app.add_subcommand("nu", "strongly orthogonal root bounds");
  add_algebra(nu_cmd);
  CLI::Option* nu_crosses =
      nu_cmd->add_option("-x,--crosses", opt.crosses, "comma-separated 1-based crossed nodes");
  add_format(nu_cmd);
  nu_cmd->callback([&opt, nu_crosses] { run_nu(opt, nu_crosses->count() > 0); });

  CLI::App* levi_cmd =
      app.add_subcommand("levi", "closure and recognized Levi factors of a cross set");
  add_algebra(levi_cmd);
  levi_cmd->add_option("-x,--crosses", opt.crosses, "comma-separated 1-based crossed nodes");
  add_format(levi_cmd);
  levi_cmd->callback([&opt] { run_levi(opt); });

  CLI::App* sigma_cmd =
      app.add_subcommand("sigma", "diagram text form and bar images of all simple roots");
  add_algebra(sigma_cmd);
  add_format(sigma_cmd);
  sigma_cmd->callback([&opt] { run_sigma(opt); });

  CLI::App* gamma_cmd =
      app.add_subcommand("gamma", "verified reference strongly orthogonal system");
  add_algebra(gamma_cmd);
  add_format(gamma_cmd);
  gamma_cmd->callback([&opt] { run_gamma(opt); });

  CLI::App* tables_cmd = app.add_subcommand("tables", "regenerate the catalog tables");
  tables_cmd->add_option("which", opt.which, "thm51 | appendix | gamma")
      ->required()
      ->check(CLI::IsMember({"thm51", "appendix", "gamma"}));
  tables_cmd->add_option("--row", opt.row, "restrict to one family, e.g. EI or DI");
  tables_cmd->add_option("--n", opt.n_range, "parameter range LO..HI (or a single value)");
  tables_cmd->add_option("--p", opt.p_range, "parameter range LO..HI (or a single value)");
  add_format(tables_cmd);
  tables_cmd->add_option("--AI", opt.range_AI, "shorthand: the A I rows over an n range");
  tables_cmd->add_option("--AII", opt.range_AII, "shorthand: the A II rows over an n range");
  tables_cmd->add_option("--DI", opt.range_DI, "shorthand: the D I rows over an n range");
  tables_cmd->add_option("--DII", opt.range_DII, "shorthand: the D II rows over an n range");
  tables_cmd->callback([&opt] { run_tables(opt); });

  CLI::App* scan_cmd = app.add_subcommand("scan", "classify every nonempty cross set");
  add_algebra(scan_cmd);
  scan_cmd->add_option("--cap", opt.cap, "largest rank accepted (default 8)");
  add_format(scan_cmd);
  scan_cmd->callback([&opt] { run_scan(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const minorb::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const minorb::RecognitionError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const minorb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
