#ifndef MINORB_SATAKE_IO_HPP
#define MINORB_SATAKE_IO_HPP

// Text form, components joined by '+', indices 1-based within each component:
//   A1 black=[1] w=[3] + A3 black=[1,3] arrows=[] w=[0,1,1]
// An arrow endpoint in another component is written k:j (component k, node j),
// e.g. the complex form sl(3,C) is "A2 arrows=[(1,2:1),(2,2:2)] w=[1,1] + A2 w=[1,1]".
// The structured form uses the same field names:
//   {"components":[{"type":"A2","black":[],"arrows":[[1,"2:1"]],"w":[1,1]}, ...]}

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorb/satake.hpp"

namespace minorb {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column), message_(what)
  {
  }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  int line_, column_;
  std::string message_;
};

namespace detail {

/// A node reference as written: local index, optionally qualified by component.
struct NodeRef {
  int component = -1;  // 0-based, -1 = the enclosing component
  int index = 0;       // 1-based
  int line = 1, column = 1;
};

struct ComponentSyntax {
  SimpleType type;
  std::vector<std::pair<int, int>> black;  // (1-based index, column)
  std::vector<std::pair<NodeRef, NodeRef>> arrows;
  std::optional<std::vector<int>> w;
  int line = 1, column = 1, w_line = 1, w_column = 1;
};

inline DecoratedSatakeDiagram assemble(const std::vector<ComponentSyntax>& comps)
{
  DecoratedSatakeDiagram dd;
  std::vector<int> offsets;
  int total = 0;
  for (const auto& c : comps) {
    offsets.push_back(total);
    total += c.type.rank;
    dd.diagram.components.push_back(c.type);
  }
  dd.diagram.colors.assign(total, NodeColor::white);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& c = comps[k];
    for (auto [i, col] : c.black) {
      if (i < 1 || i > c.type.rank)
        throw ParseError("black node " + std::to_string(i) + " out of range for " + to_string(c.type), c.line, col);
      dd.diagram.colors[offsets[k] + i - 1] = NodeColor::black;
    }
    auto global = [&](const NodeRef& r) {
      const int comp = r.component < 0 ? static_cast<int>(k) : r.component;
      if (comp >= static_cast<int>(comps.size()))
        throw ParseError("arrow endpoint names component " + std::to_string(comp + 1) + " of " +
                             std::to_string(comps.size()),
                         r.line, r.column);
      if (r.index < 1 || r.index > comps[comp].type.rank)
        throw ParseError("arrow endpoint " + std::to_string(r.index) + " out of range for " +
                             to_string(comps[comp].type),
                         r.line, r.column);
      return offsets[comp] + r.index - 1;
    };
    for (const auto& [p, q] : c.arrows) {
      int a = global(p), b = global(q);
      if (a > b) std::swap(a, b);
      dd.diagram.arrows.emplace_back(a, b);
    }
    if (!c.w) throw ParseError("missing w=[...] for " + to_string(c.type), c.line, c.column);
    if (static_cast<int>(c.w->size()) != c.type.rank)
      throw ParseError("coefficient count ≠ rank for " + to_string(c.type) + " (" + std::to_string(c.w->size()) +
                           " given)",
                       c.w_line, c.w_column);
    dd.coefficients.insert(dd.coefficients.end(), c.w->begin(), c.w->end());
  }
  std::sort(dd.diagram.arrows.begin(), dd.diagram.arrows.end());
  return dd;
}

class TextParser {
public:
  explicit TextParser(const std::string& s) : s_(s) {}

  std::vector<ComponentSyntax> components()
  {
    std::vector<ComponentSyntax> out;
    skip_ws();
    if (at_end()) fail("empty diagram");
    for (;;) {
      out.push_back(component());
      skip_ws();
      if (at_end()) break;
      expect('+');
    }
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void advance()
  {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(s_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws()
  {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void expect(char c)
  {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    advance();
  }

  std::string found() const
  {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + peek() + "'";
  }

  int integer()
  {
    skip_ws();
    std::string digits;
    if (peek() == '-') {
      digits += '-';
      advance();
    }
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.empty() || digits == "-") fail("expected integer" + found());
    if (digits.size() > 9) fail("integer too large: " + digits);
    return std::stoi(digits);
  }

  std::string word()
  {
    std::string w;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      w += peek();
      advance();
    }
    return w;
  }

  NodeRef node_ref()
  {
    skip_ws();
    NodeRef r;
    r.line = line_;
    r.column = col_;
    const int first = integer();
    skip_ws();
    if (peek() == ':') {
      advance();
      if (first < 1) fail("component index must be positive");
      r.component = first - 1;
      r.index = integer();
    } else {
      r.index = first;
    }
    return r;
  }

  template <class F>
  void list(char open, char close, F&& item)
  {
    expect(open);
    skip_ws();
    if (peek() == close) {
      advance();
      return;
    }
    for (;;) {
      item();
      skip_ws();
      if (peek() == close) {
        advance();
        return;
      }
      expect(',');
    }
  }

  ComponentSyntax component()
  {
    skip_ws();
    ComponentSyntax c;
    c.line = line_;
    c.column = col_;
    const std::string type = word();
    if (type.empty()) fail("expected component type such as A3" + found());
    try {
      c.type = parse_simple_type(type);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), c.line, c.column);
    }
    bool seen_black = false, seen_arrows = false;
    for (;;) {
      skip_ws();
      if (at_end() || peek() == '+') break;
      const int fl = line_, fc = col_;
      const std::string key = word();
      if (key.empty()) fail("expected field name" + found());
      expect('=');
      auto once = [&](bool& seen) {
        if (seen) throw ParseError("duplicate field " + key, fl, fc);
        seen = true;
      };
      if (key == "black") {
        once(seen_black);
        list('[', ']', [&] {
          skip_ws();
          const int col = col_;
          c.black.emplace_back(integer(), col);
        });
      } else if (key == "arrows") {
        once(seen_arrows);
        list('[', ']', [&] {
          expect('(');
          NodeRef p = node_ref();
          expect(',');
          NodeRef q = node_ref();
          expect(')');
          c.arrows.emplace_back(p, q);
        });
      } else if (key == "w") {
        if (c.w) throw ParseError("duplicate field w", fl, fc);
        c.w_line = fl;
        c.w_column = fc;
        std::vector<int> w;
        list('[', ']', [&] { w.push_back(integer()); });
        c.w = std::move(w);
      } else {
        throw ParseError("unknown field '" + key + "'", fl, fc);
      }
    }
    return c;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

inline std::pair<int, int> line_col(const std::string& s, std::size_t byte)
{
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < s.size(); ++i) {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
      ++col;
    }
  }
  return {line, col};
}

inline std::string arrow_endpoint(const SatakeDiagram& d, int node, int home)
{
  auto [c, i] = d.locate(node);
  if (c == home) return std::to_string(i + 1);
  return std::to_string(c + 1) + ":" + std::to_string(i + 1);
}

} // namespace detail

/// Parses the text form. Syntax and size errors raise ParseError; Satake and
/// decoration invariants are left to validate_decoration.
inline DecoratedSatakeDiagram parse_decorated(const std::string& text)
{
  detail::TextParser p(text);
  auto comps = p.components();
  return detail::assemble(comps);
}

inline std::string serialize(const DecoratedSatakeDiagram& dd)
{
  const auto& d = dd.diagram;
  std::ostringstream os;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    if (c) os << " + ";
    const int off = d.offset(c), r = d.components[c].rank;
    os << to_string(d.components[c]) << " black=[";
    bool first = true;
    for (int i = 0; i < r; ++i)
      if (d.is_black(off + i)) {
        os << (first ? "" : ",") << i + 1;
        first = false;
      }
    os << "] arrows=[";
    first = true;
    for (auto [a, b] : d.arrows) {
      if (d.locate(a).first != c) continue;
      os << (first ? "" : ",") << "(" << detail::arrow_endpoint(d, a, c) << "," << detail::arrow_endpoint(d, b, c)
         << ")";
      first = false;
    }
    os << "] w=[";
    for (int i = 0; i < r; ++i) os << (i ? "," : "") << dd.coefficients.at(off + i);
    os << "]";
  }
  return os.str();
}

inline nlohmann::json to_json(const DecoratedSatakeDiagram& dd)
{
  const auto& d = dd.diagram;
  nlohmann::json comps = nlohmann::json::array();
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const int off = d.offset(c), r = d.components[c].rank;
    nlohmann::json black = nlohmann::json::array(), arrows = nlohmann::json::array(), w = nlohmann::json::array();
    for (int i = 0; i < r; ++i) {
      if (d.is_black(off + i)) black.push_back(i + 1);
      w.push_back(dd.coefficients.at(off + i));
    }
    for (auto [a, b] : d.arrows) {
      if (d.locate(a).first != c) continue;
      auto ep = [&](int node) -> nlohmann::json {
        auto [cc, i] = d.locate(node);
        if (cc == c) return i + 1;
        return std::to_string(cc + 1) + ":" + std::to_string(i + 1);
      };
      arrows.push_back({ep(a), ep(b)});
    }
    comps.push_back({{"type", to_string(d.components[c])}, {"black", black}, {"arrows", arrows}, {"w", w}});
  }
  return {{"components", comps}};
}

inline DecoratedSatakeDiagram from_json(const nlohmann::json& j)
{
  auto bad = [](const std::string& what) { return ParseError(what, 1, 1); };
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw bad("structured diagram needs a \"components\" array");
  std::vector<detail::ComponentSyntax> comps;
  for (std::size_t k = 0; k < j["components"].size(); ++k) {
    const auto& jc = j["components"][k];
    const std::string where = "component " + std::to_string(k + 1) + ": ";
    detail::ComponentSyntax c;
    if (!jc.is_object() || !jc.contains("type") || !jc["type"].is_string()) throw bad(where + "missing \"type\"");
    try {
      c.type = parse_simple_type(jc["type"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw bad(where + e.what());
    }
    auto ints = [&](const char* field) {
      std::vector<int> v;
      if (!jc.contains(field)) return v;
      if (!jc[field].is_array()) throw bad(where + "\"" + field + "\" must be an array");
      for (const auto& x : jc[field]) {
        if (!x.is_number_integer()) throw bad(where + "\"" + field + "\" entries must be integers");
        v.push_back(x.get<int>());
      }
      return v;
    };
    for (int b : ints("black")) c.black.emplace_back(b, 1);
    if (jc.contains("arrows")) {
      if (!jc["arrows"].is_array()) throw bad(where + "\"arrows\" must be an array");
      for (const auto& ja : jc["arrows"]) {
        if (!ja.is_array() || ja.size() != 2) throw bad(where + "each arrow must be a pair");
        auto ref = [&](const nlohmann::json& e) {
          detail::NodeRef r;
          if (e.is_number_integer()) {
            r.index = e.get<int>();
            return r;
          }
          if (!e.is_string()) throw bad(where + "arrow endpoint must be an integer or \"k:j\"");
          const auto s = e.get<std::string>();
          const auto colon = s.find(':');
          try {
            if (colon == std::string::npos) throw std::invalid_argument(s);
            r.component = std::stoi(s.substr(0, colon)) - 1;
            r.index = std::stoi(s.substr(colon + 1));
          } catch (const std::exception&) {
            throw bad(where + "malformed arrow endpoint \"" + s + "\"");
          }
          if (r.component < 0) throw bad(where + "malformed arrow endpoint \"" + s + "\"");
          return r;
        };
        c.arrows.emplace_back(ref(ja[0]), ref(ja[1]));
      }
    }
    if (jc.contains("w")) c.w = ints("w");
    comps.push_back(std::move(c));
  }
  if (comps.empty()) throw bad("empty diagram");
  try {
    return detail::assemble(comps);
  } catch (const ParseError& e) {
    throw bad(e.message());
  }
}

inline DecoratedSatakeDiagram parse_json(const std::string& text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [l, c] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed structured input", l, c);
  }
  return from_json(j);
}

/// Accepts either form, telling them apart by a leading '{'.
inline DecoratedSatakeDiagram parse_any(const std::string& text)
{
  const auto b = text.find_first_not_of(" \t\r\n");
  if (b != std::string::npos && text[b] == '{') return parse_json(text);
  return parse_decorated(text);
}

} // namespace minorb

#endif // MINORB_SATAKE_IO_HPP
