#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtexact/dataset.hpp"
#include "dtexact/tree.hpp"

namespace dtexact {

class PsiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Partitioned Subgraph Isomorphism instance: a host graph G whose vertices
// carry colors 1..colors, and a pattern graph H on the color set. The
// question is whether H embeds into G color-respectingly.
struct PsiInstance {
  int colors = 0;
  std::vector<int> vertex_color;             // vertex index -> color in [1, colors]
  std::vector<long long> vertex_name;        // original ids, for reporting
  std::vector<std::pair<int, int>> g_edges;  // by vertex index
  std::vector<std::pair<int, int>> h_edges;  // by color

  int vertex_count() const { return static_cast<int>(vertex_color.size()); }
  std::vector<int> color_class(int color) const;
};

// Basic well-formedness: colors in range, proper coloring (no G-edge inside
// a color class), no self-loops, every color incident to some H-edge.
// Throws PsiError when violated.
void validate_psi(const PsiInstance& p);

// Pads color classes with fresh isolated vertices to equal size, deletes
// G-edges whose color pair is not an H-edge, and when the G-edge count is
// odd adds one always-realizable gadget edge between two fresh colors to
// make it even. The yes/no answer is preserved; idempotent on normalized
// instances.
PsiInstance normalize_psi(const PsiInstance& p);

// Whether an instance satisfies the shape reduce() requires. Odd G-edge
// counts are tolerated when no edge-selection subspace needs dummy tuples
// (i.e. every H-edge has at most one candidate).
bool is_normalized(const PsiInstance& p);

// Geometry of the reduced instance, kept alongside the dataset so witness
// construction and the structural tests can name individual points.
struct ReductionLayout {
  struct EdgeSubspace {
    std::pair<int, int> colors;  // the H-edge, smaller color first
    int x_dim = 0, y_dim = 0;
    std::vector<int> candidates;  // g-edge indices, lex by endpoints
    int tuple_len = 0;            // 2 * (m_G + 2); tuples sit between pairs

    // Diagonal coordinates: candidate t's rb-pair, then its trailing dummy
    // tuple, in layout order starting at 1. The unlabeled corner projects
    // to (0, point_count() + 1).
    long long pair_red(int t) const { return 1 + static_cast<long long>(t) * (2 + tuple_len); }
    long long pair_blue(int t) const { return pair_red(t) + 1; }
    long long tuple_start(int t) const { return pair_blue(t) + 1; }
    long long point_count() const {
      auto j = static_cast<long long>(candidates.size());
      return j == 0 ? 0 : 2 * j + (j - 1) * tuple_len;
    }
    long long corner_y() const { return point_count() + 1; }
  };

  struct VertexSubspace {
    int color = 0;
    int dim = 0;
    std::vector<int> vertices;  // vertex indices of this color, ascending

    long long left_coord() const { return 0; }
    long long pair_red(int t) const { return 1 + 2ll * t; }
    long long pair_blue(int t) const { return 2 + 2ll * t; }
    long long right_coord() const { return 2ll * static_cast<long long>(vertices.size()) + 1; }
    int slot_of(int vertex) const;
  };

  std::vector<EdgeSubspace> edge_subspaces;
  std::vector<VertexSubspace> vertex_subspaces;
  int dims = 0;
};

struct ReducedInstance {
  Dataset dataset;
  // (m_G + 4)(m_G - m_H) + n_H; negative only for degenerate no-instances
  // where some H-edge has no candidate at all.
  long long budget = 0;
  ReductionLayout layout;
};

// The reduction: one two-dimensional edge-selection subspace per H-edge,
// one one-dimensional vertex-verification subspace per color, primary
// example pairs for every G-edge and dummy pairs forcing the prescribed
// cuts. Throws PsiError unless is_normalized(p).
ReducedInstance reduce(const PsiInstance& p);

// phi[c-1] is the chosen vertex for color c.
bool is_subgraph_isomorphism(const PsiInstance& p, const std::vector<int>& phi);

// Exhaustive color-respecting enumeration; the first embedding in
// lexicographic vertex order, or nullopt. Limits: at most 6 colors and at
// most 4 vertices per class. Throws PsiError beyond the limits.
std::optional<std::vector<int>> psi_brute(const PsiInstance& p);

// The path-shaped tree with exactly `budget` cuts that the embedding phi
// induces: ascending y-cuts below the chosen edge pair and descending
// x-cuts above it in every edge-selection subspace, then one cut per
// vertex-verification subspace at phi's vertex pair. Throws PsiError if phi
// is not a subgraph isomorphism.
DecisionTree witness_tree(const PsiInstance& p, const std::vector<int>& phi);
DecisionTree witness_tree(const ReducedInstance& reduced, const PsiInstance& p,
                          const std::vector<int>& phi);

// Plain-text instance format: lines "colors K", "vertex <id> <color>",
// "gedge <u> <v>", "hedge <c1> <c2>"; blank lines and #-comments ignored.
PsiInstance parse_psi(std::istream& in);
PsiInstance parse_psi_text(const std::string& text);
std::string format_psi(const PsiInstance& p);

}  // namespace dtexact
