// Exact Laurent-polynomial engine for the two face recurrences
// (triangular-lattice vertex/edge expansions and the Aztec-diamond face
// expansion), plus decoding of expansion terms back into combinatorial
// objects.
//
// Exponents live in a fixed variable universe per computation and are stored
// as bytes biased by +128, so a plain memcmp gives the numeric
// lexicographic order.  Every polynomial keeps its terms sorted in strictly
// descending order; arithmetic preserves that invariant.  Division is exact
// by construction of the recurrences and is verified after the fact with a
// modular checksum, so a silent inexactness cannot survive.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grovekit/common.hpp"
#include "grovekit/grove.hpp"
#include "grovekit/lattice.hpp"

namespace grovekit {

// One formal variable.  `kind` selects the interpretation of (a, b, c):
//   kVertex: lattice vertex (i, j, k), coordinate sum in {-n-1, -n, -n+1};
//   kEdge:   edge label (family, u, v);
//   kSquare: Aztec face variable (i, j, layer) with layer in {0, -1}.
struct Var {
  enum Kind : uint8_t { kVertex, kEdge, kSquare };
  Kind kind;
  int a = 0;
  int b = 0;
  int c = 0;

  bool operator==(const Var& o) const {
    return kind == o.kind && a == o.a && b == o.b && c == o.c;
  }
  bool operator<(const Var& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
  std::string name() const;

  static Var vertex(const Vertex& v) { return Var{kVertex, v.i, v.j, v.k}; }
  static Var edge(const Label& e) {
    return Var{kEdge, static_cast<int>(e.fam), e.u, e.v};
  }
  static Var square(int i, int j, int layer) {
    return Var{kSquare, i, j, layer};
  }
};

// Fixed, ordered variable universe for one expansion.
class VarTable {
 public:
  // Adds a variable (idempotent) and returns its index.
  int add(const Var& v);
  // Index of a known variable; throws internal_error if absent.
  int index_of(const Var& v) const;
  bool contains(const Var& v) const { return index_.count(v) != 0; }
  int size() const { return static_cast<int>(vars_.size()); }
  const Var& at(int idx) const { return vars_.at(static_cast<size_t>(idx)); }

 private:
  std::vector<Var> vars_;
  std::map<Var, int> index_;
};

// Sparse Laurent polynomial over a fixed universe of `nvars` variables.
// Terms are held in one arena (nvars bytes per term, exponent e stored as
// e + 128) sorted strictly descending under memcmp, with parallel int64
// coefficients.
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars);

  int nvars() const { return nvars_; }
  size_t term_count() const { return coeffs_.size(); }
  int64_t coeff(size_t t) const { return coeffs_.at(t); }
  int exponent(size_t t, int var) const;
  const uint8_t* term_bytes(size_t t) const;

  // Appends a term that must sort strictly below the current last term.
  void append_term(const std::vector<int>& exps, int64_t coeff);
  void append_term_bytes(const uint8_t* bytes, int64_t coeff);

  // The constant polynomial 1.
  static LaurentPoly one(int nvars);
  // A single monomial: product of vars[i]^exp[i] over the given pairs.
  static LaurentPoly monomial(int nvars,
                              const std::vector<std::pair<int, int>>& var_exps,
                              int64_t coeff = 1);

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Index of the term with exactly these exponents, or npos.
  static constexpr size_t npos = static_cast<size_t>(-1);
  size_t find_term(const std::vector<int>& exps) const;

  // Evaluation modulo 2^61 - 1 at the given variable values.
  uint64_t eval_mod(const std::vector<uint64_t>& values) const;

 private:
  int nvars_;
  std::vector<uint8_t> bytes_;
  std::vector<int64_t> coeffs_;
};

// Deterministic pseudorandom evaluation point for checksums, one value per
// variable, each in [2, p-2] for p = 2^61 - 1.
std::vector<uint64_t> checksum_point(int nvars, uint64_t salt);

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);

// One summand of a division's dividend: p1 * p2 * (monomial with raw
// exponent vector `shift`).  `shift` may be empty (no extra factor).
struct ProductTerm {
  const LaurentPoly* p1;
  const LaurentPoly* p2;
  std::vector<int> shift;
};

// Computes (sum of the given products) / divisor, streaming the dividend
// so it is never materialized.  The division must be exact and the
// quotient must have exactly `expected_terms` terms; both are enforced
// (the term budget aborts runaway quotients early, and a modular checksum
// of dividend == divisor * quotient guards against any silent error).
LaurentPoly divide_products(const std::vector<ProductTerm>& products,
                            const LaurentPoly& divisor,
                            size_t expected_terms);

// A polynomial together with the universe its exponents refer to.
struct LaurentExpansion {
  VarTable vars;
  LaurentPoly poly{0};
};

// Vertex expansion of the order-n triangular face recurrence: the value at
// the top cell as a Laurent polynomial in the initial vertex variables
// (the three layers with coordinate sums -n-1, -n, -n+1).  One term per
// grove of order n.  Cost guard: n <= 5.
LaurentExpansion cube_poly_vertex(int n);

// Edge expansion of the same recurrence: initial values are 1 (or the face
// variable of the upward triangle when `with_faces` is set) and each
// recurrence step attaches its three adjacent edge labels to the terms it
// creates.  Every term is a squarefree product of edge variables, one term
// per grove.  Cost guards: n <= 7 plain, n <= 6 with faces.
LaurentExpansion cube_poly_edges(int n, bool with_faces = false);

// Decodes one term of an edge expansion into the grove it stands for.
Grove decode_grove(const LaurentExpansion& exp, size_t term, int n);

// Exact per-triangle statistics over all groves of order n, read off the
// edge expansion.  Counts are over the full set of 3^(n^2/4 rounded down)
// groves; probabilities are the uniform-measure ratios.  Cost guard: n <= 6.
struct OracleGroveStats {
  int order = 0;
  BigInt total = 0;
  // Indexed by pair_index(t.p, t.q) over downward triangles.
  std::vector<BigInt> cnt_a, cnt_b, cnt_c;
  std::vector<BigInt> cnt_ab, cnt_ac, cnt_bc;
  std::vector<BigInt> cnt_abc, cnt_empty;

  Rat prob_a(const Triangle& t) const;   // P[horizontal slot present]
  Rat prob_b(const Triangle& t) const;   // P[right-diagonal slot present]
  Rat prob_c(const Triangle& t) const;   // P[left-diagonal slot present]
  Rat prob_empty(const Triangle& t) const;
  Rat pair_ab(const Triangle& t) const;  // P[exactly the pair {a, b}]
  Rat pair_ac(const Triangle& t) const;
  Rat pair_bc(const Triangle& t) const;
};

OracleGroveStats oracle_grove_stats(int n);

// Face expansion of the order-n Aztec recurrence: the value at the top cell
// as a Laurent polynomial in the face variables x_{i,j,layer}, one term per
// domino tiling of the order-n Aztec diamond.  Cost guard: n <= 4.
LaurentExpansion octahedron_poly(int n);

}  // namespace grovekit
