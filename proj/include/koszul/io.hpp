#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/matroid.hpp"
#include "koszul/presentation.hpp"
#include "koszul/symfunc.hpp"

namespace koszul {

struct MatroidInput {
  enum class Type { Uniform, Graph, Braid, Circuits, SignedCircuits, Digraph };
  Type type = Type::Braid;
  int r = 0, n = 0;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // graph edges and digraph arcs, 1-based
  std::vector<std::vector<int>> circuits;  // 1-based
  std::vector<std::pair<std::vector<int>, std::vector<int>>> signed_circuits;  // (positive, negative), 1-based
};

// JSON with exactly one of uniform | graph | braid | circuits | signed_circuits | digraph.
// ParseError carries a JSON-pointer-like location.
MatroidInput parse_matroid(const std::string& text);
// Shorthands accepted on the command line: braid:5, uniform:2,6, boolean:4, or a JSON literal
MatroidInput parse_matroid_spec(const std::string& spec);
std::string matroid_to_json(const MatroidInput& in);  // canonical, used for cache keys

bool is_oriented(const MatroidInput& in);
Matroid build_matroid(const MatroidInput& in);
OrientedMatroid build_oriented(const MatroidInput& in);  // InvalidArgument for plain circuits
// OS/VG and duals; DIGRAPH gives the monomial algebra, and OS_DUAL on a digraph its dual
Presentation build_presentation(const MatroidInput& in, Kind kind);

enum class Basis { S, H, E, P };
Basis parse_basis(const std::string& s);
std::string basis_name(Basis b);
std::map<Partition, Q> coefficients(const SymFunc& f, Basis b);

// Terms in reverse-lex partition order, coefficients as "num/den" strings
std::string serialize_symfunc(const SymFunc& f, Basis b, const std::string& format = "json");
SymFunc parse_symfunc(const std::string& text);

// Character tables 1..4 (OS dual, VG dual, OS primitives, VG primitives) over an (n, i) grid, in the golden-file layout
std::string table_json(int which, int n_lo, int n_hi, int i_lo, int i_hi);
std::string table_latex(int which, int n_lo, int n_hi, int i_lo, int i_hi);
SymFunc table_cell(int which, int n, int i);
std::vector<std::pair<int, int>> table_shading(int which);

}  // namespace koszul
