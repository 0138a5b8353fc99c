#include "koszul/io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "koszul/errors.hpp"
#include "koszul/stirling.hpp"

namespace koszul {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where, what); }

int get_int(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) fail(where, "missing field \"" + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

const json& get_array(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) fail(where, "missing field \"" + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_array()) fail(where + "." + key, "expected an array");
  return v;
}

std::vector<int> int_list(const json& j, const std::string& where, int lo, int hi) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<int> out;
  for (size_t k = 0; k < j.size(); ++k) {
    std::string w = where + "[" + std::to_string(k) + "]";
    if (!j[k].is_number_integer()) fail(w, "expected an integer");
    int v = j[k].get<int>();
    if (v < lo || v > hi) fail(w, "index " + std::to_string(v) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> pair_list(const json& arr, const std::string& where, int hi) {
  std::vector<std::pair<int, int>> out;
  for (size_t k = 0; k < arr.size(); ++k) {
    std::string w = where + "[" + std::to_string(k) + "]";
    auto v = int_list(arr[k], w, 1, hi);
    if (v.size() != 2) fail(w, "expected a pair");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

Subset to_subset(const std::vector<int>& v) {
  Subset s = 0;
  for (int x : v) s |= bit(x - 1);
  return s;
}

}  // namespace

MatroidInput parse_matroid(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("byte " + std::to_string(e.byte), e.what());
  }
  if (!j.is_object()) fail("$", "expected an object");
  if (j.size() != 1) fail("$", "expected exactly one of uniform, graph, braid, circuits, signed_circuits, digraph");
  const std::string key = j.begin().key();
  const json& b = j.begin().value();
  const std::string w = "$." + key;
  if (!b.is_object()) fail(w, "expected an object");
  MatroidInput in;
  if (key == "uniform") {
    in.type = MatroidInput::Type::Uniform;
    in.r = get_int(b, "r", w);
    in.n = get_int(b, "n", w);
    if (in.n < 1 || in.n > 64) fail(w + ".n", "n must be in 1..64");
    if (in.r < 1 || in.r > in.n) fail(w + ".r", "r must be in 1..n");
  } else if (key == "braid") {
    in.type = MatroidInput::Type::Braid;
    in.n = get_int(b, "n", w);
    if (in.n < 1 || in.n > 11) fail(w + ".n", "n must be in 1..11");
  } else if (key == "graph") {
    in.type = MatroidInput::Type::Graph;
    in.vertices = get_int(b, "vertices", w);
    if (in.vertices < 1) fail(w + ".vertices", "need at least one vertex");
    in.edges = pair_list(get_array(b, "edges", w), w + ".edges", in.vertices);
  } else if (key == "circuits") {
    in.type = MatroidInput::Type::Circuits;
    in.n = get_int(b, "n", w);
    if (in.n < 1 || in.n > 64) fail(w + ".n", "n must be in 1..64");
    const auto& arr = get_array(b, "circuits", w);
    for (size_t k = 0; k < arr.size(); ++k)
      in.circuits.push_back(int_list(arr[k], w + ".circuits[" + std::to_string(k) + "]", 1, in.n));
  } else if (key == "signed_circuits") {
    in.type = MatroidInput::Type::SignedCircuits;
    in.n = get_int(b, "n", w);
    if (in.n < 1 || in.n > 64) fail(w + ".n", "n must be in 1..64");
    const auto& arr = get_array(b, "pairs", w);
    for (size_t k = 0; k < arr.size(); ++k) {
      std::string wk = w + ".pairs[" + std::to_string(k) + "]";
      if (!arr[k].is_array() || arr[k].size() != 2) fail(wk, "expected [positive, negative]");
      in.signed_circuits.emplace_back(int_list(arr[k][0], wk + "[0]", 1, in.n), int_list(arr[k][1], wk + "[1]", 1, in.n));
    }
  } else if (key == "digraph") {
    in.type = MatroidInput::Type::Digraph;
    in.n = get_int(b, "n", w);
    if (in.n < 1 || in.n > 16) fail(w + ".n", "n must be in 1..16");
    in.edges = pair_list(get_array(b, "arcs", w), w + ".arcs", in.n);
  } else {
    fail("$", "unknown input type \"" + key + "\"");
  }
  return in;
}

MatroidInput parse_matroid_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (!spec.empty() && spec[0] != '{' && colon != std::string::npos) {
    std::string head = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (head == "braid") return parse_matroid("{\"braid\":{\"n\":" + rest + "}}");
    if (head == "boolean") return parse_matroid("{\"uniform\":{\"r\":" + rest + ",\"n\":" + rest + "}}");
    if (head == "uniform") {
      auto comma = rest.find(',');
      if (comma == std::string::npos) fail("spec", "uniform needs r,n");
      return parse_matroid("{\"uniform\":{\"r\":" + rest.substr(0, comma) + ",\"n\":" + rest.substr(comma + 1) + "}}");
    }
    fail("spec", "unknown shorthand \"" + head + "\"");
  }
  return parse_matroid(spec);
}

std::string matroid_to_json(const MatroidInput& in) {
  json j;
  auto pairs = [](const std::vector<std::pair<int, int>>& v) {
    json a = json::array();
    for (auto [x, y] : v) a.push_back({x, y});
    return a;
  };
  switch (in.type) {
    case MatroidInput::Type::Uniform: j["uniform"] = {{"r", in.r}, {"n", in.n}}; break;
    case MatroidInput::Type::Braid: j["braid"] = {{"n", in.n}}; break;
    case MatroidInput::Type::Graph: j["graph"] = {{"vertices", in.vertices}, {"edges", pairs(in.edges)}}; break;
    case MatroidInput::Type::Circuits: j["circuits"] = {{"n", in.n}, {"circuits", in.circuits}}; break;
    case MatroidInput::Type::SignedCircuits: {
      json a = json::array();
      for (const auto& [p, q] : in.signed_circuits) a.push_back({p, q});
      j["signed_circuits"] = {{"n", in.n}, {"pairs", a}};
      break;
    }
    case MatroidInput::Type::Digraph: j["digraph"] = {{"n", in.n}, {"arcs", pairs(in.edges)}}; break;
  }
  return j.dump();
}

bool is_oriented(const MatroidInput& in) {
  return in.type == MatroidInput::Type::Uniform || in.type == MatroidInput::Type::Braid ||
         in.type == MatroidInput::Type::Graph || in.type == MatroidInput::Type::SignedCircuits;
}

namespace {

GraphicMatroid graph_of(const MatroidInput& in) {
  if (in.type == MatroidInput::Type::Braid) return braid(in.n);
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : in.edges) e.emplace_back(u - 1, v - 1);
  return graphic(in.vertices, e);
}

bool graph_like(const MatroidInput& in) {
  return in.type == MatroidInput::Type::Braid || in.type == MatroidInput::Type::Graph;
}

}  // namespace

OrientedMatroid build_oriented(const MatroidInput& in) {
  switch (in.type) {
    case MatroidInput::Type::Uniform: return OrientedMatroid::uniform(in.r, in.n);
    case MatroidInput::Type::Braid:
    case MatroidInput::Type::Graph: return graph_of(in).om;
    case MatroidInput::Type::SignedCircuits: {
      std::vector<SignedCircuit> cs;
      for (const auto& [p, q] : in.signed_circuits) cs.push_back({to_subset(p), to_subset(q)});
      return OrientedMatroid::from_signed_circuits(in.n, cs);
    }
    default: throw InvalidArgument("input carries no orientation");
  }
}

Matroid build_matroid(const MatroidInput& in) {
  if (in.type == MatroidInput::Type::Uniform) return Matroid::uniform(in.r, in.n);
  if (in.type == MatroidInput::Type::Circuits) {
    std::vector<Subset> cs;
    for (const auto& c : in.circuits) cs.push_back(to_subset(c));
    return Matroid::from_circuits(in.n, cs);
  }
  if (in.type == MatroidInput::Type::Digraph) throw InvalidArgument("a digraph is not a matroid input");
  return build_oriented(in).underlying();
}

Presentation build_presentation(const MatroidInput& in, Kind kind) {
  if (in.type == MatroidInput::Type::Digraph) {
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : in.edges) arcs.emplace_back(u - 1, v - 1);
    if (kind == Kind::DIGRAPH) return digraph_monomial_algebra(in.n, arcs);
    if (kind == Kind::OS_DUAL) return digraph_dual(in.n, arcs);
    throw InvalidArgument("digraph inputs support the monomial algebra and its dual only");
  }
  if (kind == Kind::DIGRAPH) throw InvalidArgument("not a digraph input");
  if (graph_like(in)) return build_presentation(kind, graph_of(in));
  switch (kind) {
    case Kind::OS: return os_presentation(build_matroid(in));
    case Kind::OS_DUAL: return os_dual_presentation(build_matroid(in));
    case Kind::VG: return vg_presentation(build_oriented(in));
    case Kind::VG_DUAL: return vg_dual_presentation(build_oriented(in));
    default: break;
  }
  throw InvalidArgument("bad kind");
}

Basis parse_basis(const std::string& s) {
  if (s == "s" || s == "schur") return Basis::S;
  if (s == "h") return Basis::H;
  if (s == "e") return Basis::E;
  if (s == "p") return Basis::P;
  throw InvalidArgument("basis must be one of s, h, e, p");
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::S: return "s";
    case Basis::H: return "h";
    case Basis::E: return "e";
    case Basis::P: return "p";
  }
  return "?";
}

std::map<Partition, Q> coefficients(const SymFunc& f, Basis b) {
  switch (b) {
    case Basis::S: return f.to_schur();
    case Basis::H: return f.to_h();
    case Basis::E: return f.to_e();
    case Basis::P: return f.p_coeffs();
  }
  return {};
}

namespace {

// reverse-lex: larger partitions first
std::vector<std::pair<Partition, Q>> ordered_terms(const std::map<Partition, Q>& c) {
  std::vector<std::pair<Partition, Q>> v;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    if (it->second != 0) v.push_back(*it);
  return v;
}

std::string latex_partition(const Partition& p) {
  std::string s;
  for (size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s.empty() ? "\\varnothing" : s;
}

std::string latex_sum(const std::map<Partition, Q>& c, const std::string& letter) {
  auto t = ordered_terms(c);
  if (t.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < t.size(); ++k) {
    Q q = t[k].second;
    if (k) out += q < 0 ? " - " : " + ";
    else if (q < 0) out += "-";
    Q a = abs(q);
    if (a != 1) out += is_integer(a) ? to_string(a) : "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    out += letter + "_{" + latex_partition(t[k].first) + "}";
  }
  return out;
}

std::string text_sum(const std::map<Partition, Q>& c, const std::string& letter) {
  auto t = ordered_terms(c);
  if (t.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < t.size(); ++k) {
    Q q = t[k].second;
    if (k) out += q < 0 ? " - " : " + ";
    else if (q < 0) out += "-";
    Q a = abs(q);
    if (a != 1) out += to_string(a) + " ";
    out += letter + partition_to_string(t[k].first);
  }
  return out;
}

}  // namespace

std::string serialize_symfunc(const SymFunc& f, Basis b, const std::string& format) {
  auto c = coefficients(f, b);
  if (format == "text") return text_sum(c, basis_name(b));
  if (format == "latex" || format == "latex-table") return latex_sum(c, basis_name(b));
  if (format != "json") throw InvalidArgument("format must be json, text or latex-table");
  json j;
  j["basis"] = basis_name(b);
  j["degree"] = f.degree();
  json terms = json::array();
  for (const auto& [p, q] : ordered_terms(c)) terms.push_back({{"partition", p}, {"coeff", to_string(q)}});
  j["terms"] = terms;
  return j.dump();
}

SymFunc parse_symfunc(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("byte " + std::to_string(e.byte), e.what());
  }
  if (!j.is_object()) fail("$", "expected an object");
  if (!j.contains("basis") || !j["basis"].is_string()) fail("$.basis", "missing basis");
  Basis b;
  try {
    b = parse_basis(j["basis"].get<std::string>());
  } catch (const InvalidArgument& e) {
    fail("$.basis", e.what());
  }
  int deg = get_int(j, "degree", "$");
  if (deg < 0) fail("$.degree", "negative degree");
  const auto& terms = get_array(j, "terms", "$");
  std::map<Partition, Q> c;
  for (size_t k = 0; k < terms.size(); ++k) {
    std::string w = "$.terms[" + std::to_string(k) + "]";
    if (!terms[k].is_object() || !terms[k].contains("partition") || !terms[k].contains("coeff"))
      fail(w, "expected {partition, coeff}");
    Partition p = int_list(terms[k]["partition"], w + ".partition", 1, deg);
    if (size(p) != deg || !std::is_sorted(p.begin(), p.end(), std::greater<int>()))
      fail(w + ".partition", "not a partition of " + std::to_string(deg));
    if (!terms[k]["coeff"].is_string()) fail(w + ".coeff", "coefficients are strings");
    try {
      c[p] += parse_rational(terms[k]["coeff"].get<std::string>());
    } catch (const ParseError& e) {
      fail(w + ".coeff", e.what());
    }
  }
  switch (b) {
    case Basis::S: return SymFunc::from_schur(deg, c);
    case Basis::H: return SymFunc::from_h(deg, c);
    case Basis::E: {
      SymFunc f = SymFunc::zero(deg);
      for (const auto& [p, q] : c) f += SymFunc::e(p) * q;
      return f;
    }
    case Basis::P: {
      SymFunc f = SymFunc::zero(deg);
      for (const auto& [p, q] : c) f += SymFunc::p(p, q);
      return f;
    }
  }
  return SymFunc::zero(deg);
}

// ---------------------------------------------------------------- tables

SymFunc table_cell(int which, int n, int i) {
  switch (which) {
    case 1: return os_dual_char(n, i);
    case 2: return vg_dual_char(n, i);
    case 3: return primitives_os(n, i);
    case 4: return primitives_vg(n, i);
  }
  throw InvalidArgument("tables are numbered 1..4");
}

std::vector<std::pair<int, int>> table_shading(int which) {
  switch (which) {
    case 1: return {{4, 1}, {8, 2}, {12, 3}};
    case 2: return {{3, 1}, {6, 2}, {9, 3}};
    case 3: return {{4, 1}, {4, 2}, {6, 3}, {8, 4}, {10, 5}};
    case 4: return {{3, 1}, {6, 2}, {6, 3}, {8, 4}, {10, 5}};
  }
  throw InvalidArgument("tables are numbered 1..4");
}

std::string table_json(int which, int n_lo, int n_hi, int i_lo, int i_hi) {
  nlohmann::json cells = nlohmann::json::object();
  for (int n = n_lo; n <= n_hi; ++n)
    for (int i = i_lo; i <= i_hi; ++i) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [p, q] : table_cell(which, n, i).to_schur()) {
        if (!is_integer(q)) throw NonIntegralExpansion("table cell has a fractional Schur coefficient");
        terms.push_back({{"coeff", q.get_num().get_si()}, {"partition", p}});
      }
      cells[std::to_string(n)][std::to_string(i)] = terms;
    }
  nlohmann::json shaded = nlohmann::json::array();
  for (auto [n, i] : table_shading(which))
    if (n >= n_lo && n <= n_hi && i >= i_lo && i <= i_hi) shaded.push_back({n, i});
  nlohmann::json out;
  out["cells"] = cells;
  out["shaded"] = shaded;
  return out.dump(1);
}

std::string table_latex(int which, int n_lo, int n_hi, int i_lo, int i_hi) {
  auto shade = table_shading(which);
  std::ostringstream os;
  os << "\\begin{tabular}{r|" << std::string(i_hi - i_lo + 1, 'l') << "}\n$n$";
  for (int i = i_lo; i <= i_hi; ++i) os << " & $i=" << i << "$";
  os << " \\\\\n\\hline\n";
  for (int n = n_lo; n <= n_hi; ++n) {
    os << n;
    for (int i = i_lo; i <= i_hi; ++i) {
      bool shaded = std::find(shade.begin(), shade.end(), std::make_pair(n, i)) != shade.end();
      std::string cell = "$" + latex_sum(table_cell(which, n, i).to_schur(), "s") + "$";
      os << " & " << (shaded ? "\\cellcolor{lightgray}" : "") << cell;
    }
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace koszul
