#ifndef MINORB_CATALOG_HPP
#define MINORB_CATALOG_HPP

// Satake diagrams of the classical and exceptional real forms, addressed by name:
//   sl(n,R) sl(n,H) sl(n,C) su(n) su(p,q) so(n) so(p,q) so(n,C) so*(2n)
//   sp(2n,R) sp(n) sp(p,q) sp(2n,C) E6(6) E6(2) E6(-14) E6(-26) E6(-78)
//   E7(7) E7(-5) E7(-25) E7(-133) E8(8) E8(-24) E8(-248) F4(4) F4(-20) F4(-52)
//   G2(2) G2(-14)
// Direct sums are written with '+', e.g. "sp(1) + sl(3,H)".

#include <cctype>
#include <optional>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorb/satake.hpp"

namespace minorb {

class UnknownRealForm : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string trim(const std::string& s)
{
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

inline std::set<int> range_set(int first, int last)
{
  std::set<int> s;
  for (int i = first; i <= last; ++i) s.insert(i);
  return s;
}

/// Simple types of so(n) for n >= 3 (so(3) = A1, so(4) = A1 + A1, so(6) = D3).
inline std::vector<SimpleType> orthogonal_types(int n)
{
  if (n == 3) return {{Family::A, 1}};
  if (n == 4) return {{Family::A, 1}, {Family::A, 1}};
  if (n % 2 == 1) return {{Family::B, (n - 1) / 2}};
  return {{Family::D, n / 2}};
}

inline SatakeDiagram complexified(const std::vector<SimpleType>& types)
{
  std::vector<SimpleType> doubled = types;
  doubled.insert(doubled.end(), types.begin(), types.end());
  int n = 0;
  for (auto t : types) n += t.rank;
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < n; ++i) arrows.emplace_back(i, n + i);
  return make_diagram(doubled, {}, arrows);
}

inline SatakeDiagram compact(const std::vector<SimpleType>& types)
{
  int n = 0;
  for (auto t : types) n += t.rank;
  return make_diagram(types, range_set(0, n - 1));
}

inline void require(bool ok, const std::string& name, const std::string& why)
{
  if (!ok) throw std::invalid_argument("real form " + name + ": " + why);
}

inline SatakeDiagram special_unitary(int p, int q, const std::string& name)
{
  if (p > q) std::swap(p, q);
  const int n = p + q;
  require(n >= 2, name, "p+q must be at least 2");
  if (p == 0) return compact({{Family::A, n - 1}});
  // A_{n-1}: nodes 1..p and q..n-1 white, i <-> n-i paired.
  std::set<int> black;
  for (int i = p + 1; i <= q - 1; ++i) black.insert(i - 1);
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i <= p; ++i)
    if (i != n - i) arrows.emplace_back(i - 1, n - i - 1);
  return make_diagram({{Family::A, n - 1}}, black, arrows);
}

inline SatakeDiagram special_orthogonal(int p, int q, const std::string& name)
{
  if (p > q) std::swap(p, q);
  const int n = p + q;
  require(n >= 3, name, "p+q must be at least 3");
  auto types = orthogonal_types(n);
  if (p == 0) return compact(types);
  if (n == 3) return make_diagram(types);
  if (n == 4) return p == 1 ? make_diagram(types, {}, {{0, 1}}) : make_diagram(types);
  const int m = n / 2;
  if (n % 2 == 1) return make_diagram(types, range_set(p, m - 1));
  if (p <= m - 2) return make_diagram(types, range_set(p, m - 1));
  if (p == m - 1) return make_diagram(types, {}, {{m - 2, m - 1}});
  return make_diagram(types);
}

inline SatakeDiagram symplectic_indefinite(int p, int q, const std::string& name)
{
  if (p > q) std::swap(p, q);
  const int n = p + q;
  require(p >= 1, name, "p and q must be positive");
  if (n == 1) return compact({{Family::A, 1}});
  std::set<int> black = range_set(0, n - 1);
  for (int k = 1; k <= p; ++k) black.erase(2 * k - 1);
  return make_diagram({{Family::C, n}}, black);
}

inline SatakeDiagram quaternionic_orthogonal(int n, const std::string& name)
{
  require(n >= 3, name, "so*(2n) needs n >= 3");
  std::set<int> black;
  for (int i = 1; i <= n - 1; i += 2)
    if (!(n % 2 == 1 && i == n)) black.insert(i - 1);
  if (n % 2 == 0) return make_diagram({{Family::D, n}}, black);
  black.erase(n - 1);
  return make_diagram({{Family::D, n}}, black, {{n - 2, n - 1}});
}

inline SatakeDiagram exceptional(const std::string& family, int index, const std::string& name)
{
  auto t = parse_simple_type(family);
  auto white_only = [&](std::set<int> whites_1based, std::vector<std::pair<int, int>> arrows_1based = {}) {
    std::set<int> black = range_set(0, t.rank - 1);
    for (int w : whites_1based) black.erase(w - 1);
    for (auto& [a, b] : arrows_1based) {
      --a;
      --b;
    }
    return make_diagram({t}, black, arrows_1based);
  };
  const std::set<int> all = range_set(1, t.rank);
  if (family == "E6") {
    if (index == 6) return white_only(all);
    if (index == 2) return white_only(all, {{1, 6}, {3, 5}});
    if (index == -14) return white_only({1, 2, 6}, {{1, 6}});
    if (index == -26) return white_only({1, 6});
    if (index == -78) return compact({t});
  } else if (family == "E7") {
    if (index == 7) return white_only(all);
    if (index == -5) return white_only({1, 3, 4, 6});
    if (index == -25) return white_only({1, 6, 7});
    if (index == -133) return compact({t});
  } else if (family == "E8") {
    if (index == 8) return white_only(all);
    if (index == -24) return white_only({1, 6, 7, 8});
    if (index == -248) return compact({t});
  } else if (family == "F4") {
    if (index == 4) return white_only(all);
    if (index == -20) return white_only({4});
    if (index == -52) return compact({t});
  } else if (family == "G2") {
    if (index == 2) return white_only(all);
    if (index == -14) return compact({t});
  }
  throw UnknownRealForm("unknown real form " + name);
}

inline SatakeDiagram simple_real_form(const std::string& raw)
{
  const std::string name = trim(raw);
  static const std::regex classical(R"(^(sl|su|so|sp)\(\s*(\d+)\s*(?:,\s*(\d+|R|H|C)\s*)?\)$)");
  static const std::regex so_star(R"(^so\*\(\s*(\d+)\s*\)$)");
  static const std::regex exc(R"(^([EeFfGg][2-8])(?:\(\s*(-?\d+)\s*\))?$)");
  std::smatch m;
  if (std::regex_match(name, m, classical)) {
    const std::string fam = m[1];
    const int a = std::stoi(m[2]);
    const std::string second = m[3];
    const bool has_second = m[3].matched;
    const bool numeric = has_second && std::isdigit(static_cast<unsigned char>(second[0]));
    if (fam == "sl" && has_second && !numeric) {
      require(second == "H" ? a >= 1 : a >= 2, name, "rank parameter too small");
      if (second == "R") return make_diagram({{Family::A, a - 1}});
      if (second == "C") return complexified({{Family::A, a - 1}});
      std::set<int> black;
      for (int i = 0; i < 2 * a - 1; i += 2) black.insert(i);
      return make_diagram({{Family::A, 2 * a - 1}}, black);
    }
    if (fam == "su" && !has_second) {
      require(a >= 2, name, "n must be at least 2");
      return compact({{Family::A, a - 1}});
    }
    if (fam == "su" && numeric) return special_unitary(a, std::stoi(second), name);
    if (fam == "so" && !has_second) {
      require(a >= 3, name, "n must be at least 3");
      return compact(orthogonal_types(a));
    }
    if (fam == "so" && numeric) return special_orthogonal(a, std::stoi(second), name);
    if (fam == "so" && second == "C") {
      require(a >= 3, name, "n must be at least 3");
      return complexified(orthogonal_types(a));
    }
    if (fam == "sp" && !has_second) {
      require(a >= 1, name, "n must be positive");
      return compact({a == 1 ? SimpleType{Family::A, 1} : SimpleType{Family::C, a}});
    }
    if (fam == "sp" && numeric) return symplectic_indefinite(a, std::stoi(second), name);
    if (fam == "sp" && (second == "R" || second == "C")) {
      require(a >= 2 && a % 2 == 0, name, "sp(2n," + second + ") needs an even first argument >= 2");
      const SimpleType t = a == 2 ? SimpleType{Family::A, 1} : SimpleType{Family::C, a / 2};
      return second == "R" ? make_diagram({t}) : complexified({t});
    }
    throw UnknownRealForm("unknown real form " + name);
  }
  if (std::regex_match(name, m, so_star)) {
    const int two_n = std::stoi(m[1]);
    require(two_n % 2 == 0, name, "argument must be even");
    return quaternionic_orthogonal(two_n / 2, name);
  }
  if (std::regex_match(name, m, exc)) {
    std::string fam = m[1];
    fam[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(fam[0])));
    if (!m[2].matched) {
      auto t = parse_simple_type(fam);
      return compact({t});
    }
    return exceptional(fam, std::stoi(m[2]), name);
  }
  throw UnknownRealForm("unknown real form '" + name + "'");
}

inline SatakeDiagram concat(const std::vector<SatakeDiagram>& parts)
{
  SatakeDiagram out;
  int off = 0;
  for (const auto& p : parts) {
    out.components.insert(out.components.end(), p.components.begin(), p.components.end());
    out.colors.insert(out.colors.end(), p.colors.begin(), p.colors.end());
    for (auto [a, b] : p.arrows) out.arrows.emplace_back(a + off, b + off);
    off += p.node_count();
  }
  return out;
}

} // namespace detail

/// Satake diagram of a named real form; '+' separates direct summands.
inline SatakeDiagram real_form_diagram(const std::string& descriptor)
{
  std::vector<SatakeDiagram> parts;
  std::size_t start = 0;
  for (;;) {
    const auto plus = descriptor.find('+', start);
    parts.push_back(detail::simple_real_form(descriptor.substr(start, plus - start)));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  auto d = detail::concat(parts);
  if (auto v = validate(d); !v.empty()) throw std::logic_error("catalog produced invalid diagram for " + descriptor + ": " + v.front());
  return d;
}

/// Highest weight of the vector module R^n of so(n), in the node order of
/// real_form_diagram("so(p,q)") with p+q = n.
inline Weight vector_module_weight(int n)
{
  if (n < 3) throw std::invalid_argument("so(n) needs n >= 3");
  if (n == 3) return Weight{2};
  if (n == 4) return Weight{1, 1};
  Weight w(std::vector<int>(n / 2, 0));
  w[0] = 1;
  return w;
}

struct CatalogEntry {
  std::string name;
  SatakeDiagram diagram;
};

/// Concrete catalog instances with total rank at most `max_rank`.
inline std::vector<CatalogEntry> catalog_instances(int max_rank = 8)
{
  std::vector<std::string> names;
  for (int n = 2; n <= max_rank + 1; ++n) {
    names.push_back("sl(" + std::to_string(n) + ",R)");
    names.push_back("su(" + std::to_string(n) + ")");
    for (int p = 1; p <= n / 2; ++p) names.push_back("su(" + std::to_string(p) + "," + std::to_string(n - p) + ")");
  }
  for (int n = 1; 2 * n - 1 <= max_rank; ++n) names.push_back("sl(" + std::to_string(n) + ",H)");
  for (int n = 2; 2 * (n - 1) <= max_rank; ++n) names.push_back("sl(" + std::to_string(n) + ",C)");
  for (int n = 3; n / 2 <= max_rank; ++n) {
    names.push_back("so(" + std::to_string(n) + ")");
    for (int p = 1; p <= n / 2; ++p) names.push_back("so(" + std::to_string(p) + "," + std::to_string(n - p) + ")");
    if (2 * (n / 2) <= max_rank && n >= 5) names.push_back("so(" + std::to_string(n) + ",C)");
  }
  for (int n = 1; n <= max_rank; ++n) {
    names.push_back("sp(" + std::to_string(2 * n) + ",R)");
    names.push_back("sp(" + std::to_string(n) + ")");
    for (int p = 1; p <= n / 2; ++p) names.push_back("sp(" + std::to_string(p) + "," + std::to_string(n - p) + ")");
    if (2 * n <= max_rank) names.push_back("sp(" + std::to_string(2 * n) + ",C)");
  }
  for (int n = 3; n <= max_rank; ++n) names.push_back("so*(" + std::to_string(2 * n) + ")");
  for (const char* e : {"E6(6)", "E6(2)", "E6(-14)", "E6(-26)", "E6(-78)", "E7(7)", "E7(-5)", "E7(-25)", "E7(-133)",
                        "E8(8)", "E8(-24)", "E8(-248)", "F4(4)", "F4(-20)", "F4(-52)", "G2(2)", "G2(-14)"})
    names.emplace_back(e);
  std::vector<CatalogEntry> out;
  for (const auto& n : names) {
    auto d = real_form_diagram(n);
    if (d.node_count() <= max_rank) out.push_back({n, std::move(d)});
  }
  return out;
}

inline bool catalog_entry_is_split(const std::string& name)
{
  static const std::regex split(R"(^(sl\(\d+,R\)|sp\(\d+,R\)|E6\(6\)|E7\(7\)|E8\(8\)|F4\(4\)|G2\(2\))$)");
  static const std::regex so_pq(R"(^so\((\d+),(\d+)\)$)");
  std::smatch m;
  if (std::regex_match(name, split)) return true;
  if (std::regex_match(name, m, so_pq)) {
    const int p = std::stoi(m[1]), q = std::stoi(m[2]);
    return q - p <= 1 && p >= 1;
  }
  static const std::regex su_pp(R"(^su\((\d+),(\d+)\)$)");
  if (std::regex_match(name, m, su_pp)) return m[1] == "1" && m[2] == "1";
  return false;
}

inline bool catalog_entry_is_compact(const std::string& name)
{
  static const std::regex compact(R"(^(su\(\d+\)|so\(\d+\)|sp\(\d+\)|sl\(1,H\)|E6\(-78\)|E7\(-133\)|E8\(-248\)|F4\(-52\)|G2\(-14\))$)");
  return std::regex_match(name, compact);
}

} // namespace minorb

#endif // MINORB_CATALOG_HPP
