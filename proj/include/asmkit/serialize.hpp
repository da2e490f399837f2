#pragma once

// JSON and plain-text forms of every representation. JSON objects have the
// shape {"kind": ..., "n": ..., "data": ...}; exact integers are written as
// decimal strings.

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "asmkit/bigint.hpp"
#include "asmkit/core.hpp"
#include "asmkit/error.hpp"
#include "asmkit/fpl.hpp"
#include "asmkit/laurent.hpp"
#include "asmkit/lattice.hpp"

namespace asmkit {

using Json = nlohmann::ordered_json;

enum class Kind { Asm, CornerSum, Height, Coloring, Monotone, SixVertex, Fpl, Tiles, LinkPattern, Ideal };

inline constexpr std::array<std::pair<Kind, char const*>, 10> kKindNames = {{
    {Kind::Asm, "asm"},
    {Kind::CornerSum, "corner-sum"},
    {Kind::Height, "height"},
    {Kind::Coloring, "coloring"},
    {Kind::Monotone, "monotone"},
    {Kind::SixVertex, "six-vertex"},
    {Kind::Fpl, "fpl"},
    {Kind::Tiles, "tiles"},
    {Kind::LinkPattern, "link-pattern"},
    {Kind::Ideal, "ideal"},
}};

inline char const* kind_name(Kind k) {
  for (auto const& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

inline Kind parse_kind(std::string const& s) {
  for (auto const& [kind, name] : kKindNames)
    if (s == name) return kind;
  throw Error(Errc::ParseError, "unknown representation '" + s + "'");
}

// ---------------------------------------------------------------------------
// Plain text
// ---------------------------------------------------------------------------

/// Rows separated by newlines or ';', entries by whitespace. Rows may be ragged.
inline std::vector<std::vector<int>> parse_rows(std::string const& text) {
  std::vector<std::vector<int>> rows;
  std::string line;
  auto flush = [&] {
    std::istringstream in(line);
    std::vector<int> row;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != tok.size()) throw Error(Errc::ParseError, "not an integer: '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
    line.clear();
  };
  for (char c : text) {
    if (c == '\n' || c == ';') flush();
    else line += c;
  }
  flush();
  return rows;
}

inline std::string format_rows(std::vector<std::vector<int>> const& rows) {
  std::string s;
  for (auto const& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) s += (k ? " " : "") + std::to_string(r[k]);
    s += '\n';
  }
  return s;
}

inline std::string format_matrix(Grid<int> const& g) { return format_rows(g.to_rows()); }

inline std::string format_bits(BitGrid const& b) {
  std::string s;
  for (int r = 0; r < b.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) s += b.get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline Json tagged(Kind k, int n, Json data) {
  Json j;
  j["kind"] = kind_name(k);
  j["n"] = n;
  j["data"] = std::move(data);
  return j;
}

inline Json bits_json(BitGrid const& b) {
  Json rows = Json::array();
  for (int r = 0; r < b.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < b.cols(); ++c) row.push_back(b.get(r, c) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(Asm const& a) { return tagged(Kind::Asm, a.n(), a.entries().to_rows()); }
inline Json to_json(CornerSum const& c) { return tagged(Kind::CornerSum, c.n(), c.entries().to_rows()); }
inline Json to_json(HeightFunction const& h) { return tagged(Kind::Height, h.n(), h.entries().to_rows()); }
inline Json to_json(ThreeColoring const& t) { return tagged(Kind::Coloring, t.n(), t.entries().to_rows()); }
inline Json to_json(MonotoneTriangle const& m) { return tagged(Kind::Monotone, m.n(), m.rows()); }

inline Json to_json(SixVertexState const& s) {
  return tagged(Kind::SixVertex, s.n(),
                Json{{"horizontal", bits_json(s.horizontal())}, {"vertical", bits_json(s.vertical())}});
}

inline Json to_json(FplState const& f) {
  return tagged(Kind::Fpl, f.n(), Json{{"horizontal", bits_json(f.horizontal())}, {"vertical", bits_json(f.vertical())}});
}

inline Json tiles_json(SixVertexState const& s) {
  Json rows = Json::array();
  for (int r = 0; r < s.n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < s.n(); ++c) row.push_back(tile_name(s.type_at(r, c)));
    rows.push_back(std::move(row));
  }
  return tagged(Kind::Tiles, s.n(), std::move(rows));
}

inline Json to_json(LinkPattern const& p) {
  Json pairs = Json::array();
  for (auto [a, b] : p.pairs()) pairs.push_back({a, b});
  return tagged(Kind::LinkPattern, p.n(), std::move(pairs));
}

inline Json to_json(OrderIdeal const& ideal) {
  Json items = Json::array();
  for (auto [i, j, l] : ideal.triples()) items.push_back({i, j, l});
  return tagged(Kind::Ideal, ideal.poset().n(), std::move(items));
}

/// [{"coeff": "1", "vars": {"y(0,1)": -1, ...}}, ...], leading term first.
inline Json to_json(LaurentPoly const& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json vars = Json::object();
    for (auto const& [v, e] : it->first.terms()) vars[v.name()] = e;
    out.push_back(Json{{"coeff", it->second.str()}, {"vars", std::move(vars)}});
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<int>> json_rows(Json const& j) {
  try {
    return j.get<std::vector<std::vector<int>>>();
  } catch (nlohmann::json::exception const& e) {
    throw Error(Errc::ParseError, std::string("expected an integer matrix: ") + e.what());
  }
}

inline BitGrid json_bits(Json const& j, int rows, int cols) {
  auto const r = json_rows(j);
  if (static_cast<int>(r.size()) != rows) throw Error(Errc::NotSquare, "edge array has wrong number of rows");
  BitGrid b(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(r[i].size()) != cols) throw Error(Errc::NotSquare, "edge array has wrong row length");
    for (int k = 0; k < cols; ++k) {
      if (r[i][k] != 0 && r[i][k] != 1) throw Error(Errc::BadEntryValue, "edge bits are 0 or 1");
      b.set(i, k, r[i][k] == 1);
    }
  }
  return b;
}

inline std::pair<BitGrid, BitGrid> json_edges(Json const& data) {
  if (!data.is_object() || !data.contains("horizontal") || !data.contains("vertical"))
    throw Error(Errc::ParseError, "edge data needs 'horizontal' and 'vertical'");
  int const n = static_cast<int>(data["horizontal"].size());
  return {json_bits(data["horizontal"], n, n + 1), json_bits(data["vertical"], n + 1, n)};
}

}  // namespace detail

/// Reads any representation that determines an ASM and converts it to one.
/// `kind` is used when the input is a bare matrix (text or JSON array).
inline Asm asm_from_input(std::string const& text, Kind kind) {
  Json data;
  int json_n = 0;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  bool const is_json = first != std::string::npos && (text[first] == '{' || text[first] == '[');
  if (is_json) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw Error(Errc::ParseError, e.what());
    }
    if (j.is_object()) {
      if (!j.contains("kind") || !j.contains("data")) throw Error(Errc::ParseError, "object needs 'kind' and 'data'");
      kind = parse_kind(j["kind"].get<std::string>());
      data = j["data"];
      if (j.contains("n") && j["n"].is_number_integer()) json_n = j["n"].get<int>();
    } else {
      data = j;
    }
  }
  auto rows = [&] { return is_json ? detail::json_rows(data) : parse_rows(text); };
  switch (kind) {
    case Kind::Asm: return Asm::from_rows(rows());
    case Kind::CornerSum: return corner_sum_to_asm(CornerSum(Grid<int>::from_rows(rows())));
    case Kind::Height: return height_to_asm(HeightFunction(Grid<int>::from_rows(rows())));
    case Kind::Coloring: return height_to_asm(lift_coloring(Grid<int>::from_rows(rows())));
    case Kind::Monotone: return monotone_to_asm(MonotoneTriangle(rows()));
    case Kind::SixVertex:
    case Kind::Fpl: {
      if (!is_json) throw Error(Errc::ParseError, "edge representations are read from JSON only");
      auto [h, v] = detail::json_edges(data);
      if (kind == Kind::SixVertex) return six_vertex_to_asm(SixVertexState(std::move(h), std::move(v)));
      return six_vertex_to_asm(fpl_to_six_vertex(FplState(std::move(h), std::move(v))));
    }
    case Kind::Ideal: {
      if (!is_json || !data.is_array()) throw Error(Errc::ParseError, "ideals are read as a JSON array of triples");
      if (json_n < 1) throw Error(Errc::ParseError, "ideal input needs an 'n' field");
      auto poset = build_poset(json_n);
      std::vector<bool> m(poset->size(), false);
      for (auto const& t : data) {
        auto v = t.get<std::vector<int>>();
        if (v.size() != 3) throw Error(Errc::ParseError, "ideal elements are (i,j,level) triples");
        int const k = poset->index_of(v[0], v[1], v[2]);
        if (k < 0) throw Error(Errc::InvariantViolated, "no such poset element");
        m[k] = true;
      }
      return height_to_asm(ideal_to_height(OrderIdeal(poset, std::move(m))));
    }
    case Kind::Tiles:
    case Kind::LinkPattern: break;
  }
  throw Error(Errc::ParseError, std::string("cannot read an ASM from '") + kind_name(kind) + "'");
}

/// Converts to the requested representation as JSON.
inline Json convert_to_json(Asm const& a, Kind to) {
  switch (to) {
    case Kind::Asm: return to_json(a);
    case Kind::CornerSum: return to_json(asm_to_corner_sum(a));
    case Kind::Height: return to_json(asm_to_height(a));
    case Kind::Coloring: return to_json(height_to_coloring(asm_to_height(a)));
    case Kind::Monotone: return to_json(asm_to_monotone(a));
    case Kind::SixVertex: return to_json(asm_to_six_vertex(a));
    case Kind::Fpl: return to_json(six_vertex_to_fpl(asm_to_six_vertex(a)));
    case Kind::Tiles: return tiles_json(asm_to_six_vertex(a));
    case Kind::Ideal: return to_json(height_to_ideal(asm_to_height(a)));
    case Kind::LinkPattern: return to_json(link_pattern_of(a));
  }
  throw Error(Errc::UnsupportedFormat, std::string("no direct conversion to '") + kind_name(to) + "'");
}

/// Plain-text form: matrices one row per line; edge arrays as 0/1 strings,
/// horizontal block, blank line, vertical block; tiles as vertex glyphs.
inline std::string convert_to_text(Asm const& a, Kind to) {
  switch (to) {
    case Kind::Asm: return format_matrix(a.entries());
    case Kind::CornerSum: return format_matrix(asm_to_corner_sum(a).entries());
    case Kind::Height: return format_matrix(asm_to_height(a).entries());
    case Kind::Coloring: return format_matrix(height_to_coloring(asm_to_height(a)).entries());
    case Kind::Monotone: return format_rows(asm_to_monotone(a).rows());
    case Kind::SixVertex: {
      auto const s = asm_to_six_vertex(a);
      return format_bits(s.horizontal()) + "\n" + format_bits(s.vertical());
    }
    case Kind::Fpl: {
      auto const f = six_vertex_to_fpl(asm_to_six_vertex(a));
      return format_bits(f.horizontal()) + "\n" + format_bits(f.vertical());
    }
    case Kind::Tiles: {
      auto const s = asm_to_six_vertex(a);
      std::string out;
      for (int r = 0; r < s.n(); ++r) {
        for (int c = 0; c < s.n(); ++c) out += vertex_glyph(s.type_at(r, c));
        out += '\n';
      }
      return out;
    }
    case Kind::Ideal: {
      std::string out;
      for (auto [i, j, l] : height_to_ideal(asm_to_height(a)).triples())
        out += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(l) + "\n";
      return out;
    }
    case Kind::LinkPattern: return link_pattern_of(a).key() + "\n";
  }
  throw Error(Errc::UnsupportedFormat, std::string("no direct conversion to '") + kind_name(to) + "'");
}

inline Json error_json(Error const& e) {
  Json j;
  j["error"] = errc_name(e.code());
  j["message"] = e.message();
  if (e.row()) j["row"] = *e.row();
  if (e.col()) j["col"] = *e.col();
  return j;
}

}  // namespace asmkit
