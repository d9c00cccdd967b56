#ifndef MINORB_CLI_HPP
#define MINORB_CLI_HPP

#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorb/grading.hpp"
#include "minorb/oracle/cases.hpp"
#include "minorb/reduction.hpp"
#include "minorb/satake_io.hpp"

namespace minorb::cli {

using nlohmann::json;

enum class Command { reduce, grading, catalog, verify, family };

enum ExitCode { ok = 0, input_error = 1, verification_failure = 2 };

struct RunConfig {
  Command command = Command::reduce;
  std::optional<std::string> inline_input;
  std::optional<std::string> input_path;
  bool structured = false;
  std::uint64_t seed = 20240611;
  bool allow_complex_type = false;
  std::optional<std::string> case_name;
  std::optional<std::string> family;
  std::optional<std::string> range;
  std::optional<std::string> crossed;
  bool inject_fault = false;
};

/// Bad command-line or input data; maps to exit code 1.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string read_input(const RunConfig& c)
{
  if (c.inline_input && c.input_path) throw UsageError("give either an inline diagram or --file, not both");
  if (c.inline_input) return *c.inline_input;
  if (!c.input_path) throw UsageError("missing input diagram (inline text or --file)");
  std::ifstream in(*c.input_path);
  if (!in) throw UsageError("cannot read file " + *c.input_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json natural(const Natural& n)
{
  if (n <= Natural(std::numeric_limits<std::int64_t>::max())) return n.convert_to<std::int64_t>();
  return n.str();
}

inline json one_based(const std::set<int>& s)
{
  json a = json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

inline json one_based(const std::vector<int>& s)
{
  json a = json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

/// Nodes as o (white), * (black) or x (crossed), each followed by its coefficient.
inline std::string marked_diagram(const DecoratedSatakeDiagram& dd, const std::set<int>& crossed)
{
  const auto& d = dd.diagram;
  std::string out;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    if (c) out += " + ";
    out += to_string(d.components[c]) + ":";
    const int off = d.offset(c);
    for (int i = 0; i < d.components[c].rank; ++i) {
      const int g = off + i;
      out += " ";
      out += crossed.count(g) ? "x" : d.is_black(g) ? "*" : "o";
      out += std::to_string(dd.coefficients[g]);
    }
  }
  for (auto [a, b] : d.arrows) out += "  " + std::to_string(a + 1) + "<->" + std::to_string(b + 1);
  return out;
}

inline json weight_json(const Weight& w) { return w.coords; }

inline std::string list_text(const json& a)
{
  std::string s;
  for (const auto& x : a) {
    if (!s.empty()) s += ", ";
    s += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return "[" + s + "]";
}

inline std::string scalar_text(const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); }

inline json reduce_report(const DecoratedSatakeDiagram& dd, const ReductionResult& r)
{
  json kept = json::array(), discarded = json::array(), k = json::array();
  for (const auto& f : r.kept)
    kept.push_back({{"nodes", one_based(f.component.nodes)},
                    {"type", to_string(f.type())},
                    {"weight", f.coefficients},
                    {"dim", natural(f.dim)},
                    {"reality", to_string(f.reality)}});
  for (const auto& s : r.discarded)
    discarded.push_back({{"nodes", one_based(s.nodes)}, {"type", to_string(s.diagram.components.front())}});
  for (const auto& s : r.k_summary) k.push_back(to_string(s));
  const auto u = unique_closed_orbit(r);
  return {{"input", serialize(dd)},
          {"diagram", marked_diagram(dd, r.crossed)},
          {"crossed", one_based(r.crossed)},
          {"kept", kept},
          {"discarded", discarded},
          {"K", k},
          {"w_dim_complex", natural(r.w_dim_complex)},
          {"w_dim_real", natural(r.w_dim_real)},
          {"w_reality", to_string(r.w_reality)},
          {"verdict", to_string(u.verdict)},
          {"reason", u.reason},
          {"notices", r.notices}};
}

inline void reduce_text(const json& j, std::ostream& out)
{
  out << "input:         " << j["input"].get<std::string>() << "\n";
  out << "diagram:       " << j["diagram"].get<std::string>() << "\n";
  out << "crossed:       " << list_text(j["crossed"]) << "\n";
  out << "kept:\n";
  if (j["kept"].empty()) out << "  (none)\n";
  for (const auto& f : j["kept"])
    out << "  nodes " << list_text(f["nodes"]) << "  " << f["type"].get<std::string>() << " weight " << list_text(f["weight"])
        << "  dim " << scalar_text(f["dim"]) << "  " << f["reality"].get<std::string>() << "\n";
  out << "discarded:\n";
  if (j["discarded"].empty()) out << "  (none)\n";
  for (const auto& f : j["discarded"]) out << "  nodes " << list_text(f["nodes"]) << "  " << f["type"].get<std::string>() << "\n";
  out << "K:             " << (j["K"].empty() ? std::string("trivial") : list_text(j["K"])) << "\n";
  out << "w_dim_complex: " << scalar_text(j["w_dim_complex"]) << "\n";
  out << "w_dim_real:    " << scalar_text(j["w_dim_real"]) << "\n";
  out << "w_reality:     " << j["w_reality"].get<std::string>() << "\n";
  out << "verdict:       " << j["verdict"].get<std::string>() << " (" << j["reason"].get<std::string>() << ")\n";
  for (const auto& n : j["notices"]) out << "notice: " << n.get<std::string>() << "\n";
}

inline std::set<int> parse_crossed(const std::string& s, int nodes)
{
  std::set<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = minorb::detail::trim(tok);
    if (tok.empty()) continue;
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--crossed: '" + tok + "' is not a node number");
    }
    if (v < 1 || v > nodes) throw UsageError("--crossed: node " + tok + " out of range 1.." + std::to_string(nodes));
    out.insert(v - 1);
  }
  return out;
}

inline json grading_report(const DecoratedSatakeDiagram& dd, const std::set<int>& crossed)
{
  const RootSystem rs(dd.diagram.cartan());
  const ZGrading z(rs, crossed);
  const auto e = eigenspace_dims(z, dd.weight());
  const auto top = top_level_check(rs, dd.weight(), crossed);
  json levels = json::array();
  for (auto it = e.levels.rbegin(); it != e.levels.rend(); ++it) levels.push_back({{"theta", to_string(it->first)}, {"dim", it->second}});
  json types = json::array();
  for (auto t : top.levi_types) types.push_back(to_string(t));
  return {{"input", serialize(dd)},
          {"diagram", marked_diagram(dd, crossed)},
          {"crossed", one_based(crossed)},
          {"depth", z.depth()},
          {"levels", levels},
          {"theta_max", to_string(e.theta_max)},
          {"theta_min", to_string(e.theta_min)},
          {"top_dim", e.top_dim()},
          {"levi_types", types},
          {"levi_weight", weight_json(top.levi_weight)},
          {"levi_dim", natural(top.levi_dim)},
          {"top_level_ok", top.ok()}};
}

inline void grading_text(const json& j, std::ostream& out)
{
  out << "input:     " << j["input"].get<std::string>() << "\n";
  out << "diagram:   " << j["diagram"].get<std::string>() << "\n";
  out << "crossed:   " << list_text(j["crossed"]) << "\n";
  out << "depth:     " << j["depth"].dump() << "\n";
  out << "levels (theta, dim), top first:\n";
  for (const auto& l : j["levels"]) out << "  " << l["theta"].get<std::string>() << "\t" << l["dim"].dump() << "\n";
  out << "theta_max: " << j["theta_max"].get<std::string>() << "\n";
  out << "theta_min: " << j["theta_min"].get<std::string>() << "\n";
  out << "top_dim:   " << j["top_dim"].dump() << "\n";
  out << "levi:      " << list_text(j["levi_types"]) << " weight " << list_text(j["levi_weight"]) << " dim "
      << scalar_text(j["levi_dim"]) << "\n";
  out << "top level = levi module: " << (j["top_level_ok"].get<bool>() ? "yes" : "no") << "\n";
}

inline std::string diagram_text(const SatakeDiagram& d)
{
  static const std::regex w(R"( w=\[[^\]]*\])");
  return std::regex_replace(serialize({d, std::vector<int>(d.node_count(), 0)}), w, "");
}

inline json catalog_report()
{
  json forms = json::array();
  for (const auto& e : catalog_instances())
    forms.push_back({{"name", e.name},
                     {"diagram", diagram_text(e.diagram)},
                     {"split", catalog_entry_is_split(e.name)},
                     {"compact", catalog_entry_is_compact(e.name)}});
  return {{"real_forms", forms}, {"oracle_forms", oracle::supported_forms()}};
}

inline void catalog_text(const json& j, std::ostream& out)
{
  for (const auto& f : j["real_forms"]) {
    std::string tag = f["split"].get<bool>() ? " (split)" : f["compact"].get<bool>() ? " (compact)" : "";
    out << f["name"].get<std::string>() << tag << "\t" << f["diagram"].get<std::string>() << "\n";
  }
  out << "oracle matrix models: " << list_text(j["oracle_forms"]) << "\n";
}

inline json case_json(const oracle::CaseReport& r)
{
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"value", c.value}, {"pass", c.pass}});
  return {{"case", r.name}, {"seed", r.seed}, {"pass", r.pass()}, {"checks", checks}};
}

inline void verify_text(const json& j, std::ostream& out)
{
  for (const auto& c : j["cases"]) {
    out << c["case"].get<std::string>() << " (seed " << c["seed"].dump() << "): " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const auto& ch : c["checks"])
      out << "  [" << (ch["pass"].get<bool>() ? "ok" : "FAIL") << "] " << ch["name"].get<std::string>() << ": "
          << ch["value"].get<std::string>() << "\n";
  }
  out << "overall: " << (j["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

inline std::pair<int, int> parse_range(const std::string& s)
{
  static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("--range must look like a..b, got '" + s + "'");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

inline json family_report(const std::string& name, int first, int last)
{
  const auto& fam = find_family(name);
  const auto fr = family_reduce(fam, first, last);
  json results = json::array();
  for (std::size_t i = 0; i < fr.results.size(); ++i) {
    const auto& r = fr.results[i];
    json k = json::array();
    for (const auto& s : r.k_summary) k.push_back(to_string(s));
    results.push_back({{"n", fr.parameters[i]},
                       {"diagram", marked_diagram(r.input, r.crossed)},
                       {"crossed", one_based(r.crossed)},
                       {"K", k},
                       {"w_dim_real", natural(r.w_dim_real)},
                       {"verdict", to_string(unique_closed_orbit(r).verdict)}});
  }
  return {{"family", fam.name}, {"description", fam.description}, {"results", results}, {"stable", fr.stable}};
}

inline void family_text(const json& j, std::ostream& out)
{
  out << j["family"].get<std::string>() << ": " << j["description"].get<std::string>() << "\n";
  for (const auto& r : j["results"])
    out << "  n=" << r["n"].dump() << "  " << r["diagram"].get<std::string>() << "\n"
        << "       crossed " << list_text(r["crossed"]) << "  K " << (r["K"].empty() ? std::string("trivial") : list_text(r["K"]))
        << "  w_dim_real " << scalar_text(r["w_dim_real"]) << "  " << r["verdict"].get<std::string>() << "\n";
  out << "stable: " << (j["stable"].get<bool>() ? "yes" : "no") << "\n";
}

} // namespace detail

/// Runs one command, writing the report to `out` and diagnostics to `err`.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
  auto emit = [&](const json& j, void (*text)(const json&, std::ostream&)) {
    if (c.structured)
      out << j.dump(2) << "\n";
    else
      text(j, out);
  };
  try {
    switch (c.command) {
    case Command::reduce: {
      const auto dd = parse_any(detail::read_input(c));
      emit(detail::reduce_report(dd, reduce(dd, c.allow_complex_type)), detail::reduce_text);
      return ok;
    }
    case Command::grading: {
      const auto dd = parse_any(detail::read_input(c));
      const auto r = reduce(dd, c.allow_complex_type);
      const auto crossed = c.crossed ? detail::parse_crossed(*c.crossed, dd.diagram.node_count()) : r.crossed;
      if (crossed.empty()) throw UsageError("no crossed nodes: the grading is trivial (pass --crossed)");
      emit(detail::grading_report(dd, crossed), detail::grading_text);
      return ok;
    }
    case Command::catalog: emit(detail::catalog_report(), detail::catalog_text); return ok;
    case Command::verify: {
      std::vector<const oracle::OracleCase*> cases;
      if (c.case_name)
        cases.push_back(&oracle::find_case(*c.case_name));
      else
        for (const auto& oc : oracle::oracle_cases()) cases.push_back(&oc);
      json reports = json::array();
      bool all = true;
      for (const auto* oc : cases) {
        oracle::VerifyOptions opt;
        opt.inject_fault = c.inject_fault;
        const auto r = oracle::verify_reduction(*oc, c.seed, opt);
        all = all && r.pass();
        reports.push_back(detail::case_json(r));
      }
      emit(json{{"seed", c.seed}, {"cases", reports}, {"pass", all}}, detail::verify_text);
      return all ? ok : verification_failure;
    }
    case Command::family: {
      if (!c.family) throw UsageError("family: missing family name");
      const auto [a, b] = detail::parse_range(c.range.value_or("2..6"));
      emit(detail::family_report(*c.family, a, b), detail::family_text);
      return ok;
    }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const InputError& e) {
    for (const auto& p : e.problems()) err << "error: " << p << "\n";
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "verification error: " << e.what() << "\n";
    return verification_failure;
  }
  return input_error;
}

} // namespace minorb::cli

#endif // MINORB_CLI_HPP
