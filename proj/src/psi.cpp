#include "dtexact/psi.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace dtexact {

namespace {

std::pair<int, int> ordered(std::pair<int, int> e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

std::pair<int, int> color_pair(const PsiInstance& p, std::pair<int, int> g_edge) {
  return ordered({p.vertex_color[g_edge.first], p.vertex_color[g_edge.second]});
}

}  // namespace

std::vector<int> PsiInstance::color_class(int color) const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (vertex_color[v] == color) out.push_back(v);
  return out;
}

void validate_psi(const PsiInstance& p) {
  if (p.colors < 1) throw PsiError("instance needs at least one color");
  for (int v = 0; v < p.vertex_count(); ++v)
    if (p.vertex_color[v] < 1 || p.vertex_color[v] > p.colors)
      throw PsiError("vertex color out of range");
  if (p.vertex_name.size() != p.vertex_color.size())
    throw PsiError("vertex name/color size mismatch");

  for (auto [u, v] : p.g_edges) {
    if (u < 0 || u >= p.vertex_count() || v < 0 || v >= p.vertex_count() || u == v)
      throw PsiError("bad G-edge");
    if (p.vertex_color[u] == p.vertex_color[v])
      throw PsiError("improper coloring: G-edge inside one color class");
  }

  std::vector<bool> touched(p.colors + 1, false);
  for (auto [c1, c2] : p.h_edges) {
    if (c1 < 1 || c1 > p.colors || c2 < 1 || c2 > p.colors || c1 == c2)
      throw PsiError("bad H-edge");
    touched[c1] = touched[c2] = true;
  }
  for (int c = 1; c <= p.colors; ++c)
    if (!touched[c]) throw PsiError("isolated H vertex: color " + std::to_string(c));
}

PsiInstance normalize_psi(const PsiInstance& p) {
  validate_psi(p);
  PsiInstance out = p;

  std::set<std::pair<int, int>> h_set;
  for (auto e : out.h_edges) h_set.insert(ordered(e));
  out.h_edges.assign(h_set.begin(), h_set.end());

  // Drop G-edges whose color pair is not an H-edge; they can never be used
  // by an embedding.
  std::set<std::pair<int, int>> g_set;
  for (auto e : out.g_edges)
    if (h_set.count(color_pair(out, e))) g_set.insert(ordered(e));
  out.g_edges.assign(g_set.begin(), g_set.end());

  long long next_name = 0;
  for (long long name : out.vertex_name) next_name = std::max(next_name, name + 1);

  // The dummy-tuple color pattern needs an even G-edge count. One fresh
  // edge between two fresh colors is realizable by exactly itself, so the
  // answer is unchanged.
  if (out.g_edges.size() % 2 == 1) {
    int ca = ++out.colors;
    int cb = ++out.colors;
    int va = out.vertex_count();
    out.vertex_color.push_back(ca);
    out.vertex_name.push_back(next_name++);
    int vb = out.vertex_count();
    out.vertex_color.push_back(cb);
    out.vertex_name.push_back(next_name++);
    out.g_edges.push_back({va, vb});
    out.h_edges.push_back({ca, cb});
    std::sort(out.h_edges.begin(), out.h_edges.end());
    std::sort(out.g_edges.begin(), out.g_edges.end());
  }

  // Pad color classes with isolated vertices to equal size. Isolated
  // vertices cannot carry an embedding (every color has H-neighbors), so
  // the answer is unchanged.
  std::size_t n = 1;
  for (int c = 1; c <= out.colors; ++c)
    n = std::max(n, out.color_class(c).size());
  for (int c = 1; c <= out.colors; ++c) {
    for (std::size_t have = out.color_class(c).size(); have < n; ++have) {
      out.vertex_color.push_back(c);
      out.vertex_name.push_back(next_name++);
    }
  }
  return out;
}

bool is_normalized(const PsiInstance& p) {
  try {
    validate_psi(p);
  } catch (const PsiError&) {
    return false;
  }

  std::set<std::pair<int, int>> h_set;
  for (auto e : p.h_edges) {
    auto o = ordered(e);
    if (!h_set.insert(o).second) return false;
  }

  std::size_t n = p.color_class(1).size();
  if (n < 1) return false;
  for (int c = 2; c <= p.colors; ++c)
    if (p.color_class(c).size() != n) return false;

  std::map<std::pair<int, int>, int> candidates_per_h_edge;
  std::set<std::pair<int, int>> g_set;
  for (auto e : p.g_edges) {
    auto o = ordered(e);
    if (!g_set.insert(o).second) return false;
    auto cp = color_pair(p, e);
    if (!h_set.count(cp)) return false;
    ++candidates_per_h_edge[cp];
  }

  if (p.g_edges.size() % 2 == 1) {
    // Odd counts are fine as long as no subspace needs dummy tuples.
    for (auto& [edge, count] : candidates_per_h_edge)
      if (count > 1) return false;
  }
  return true;
}

int ReductionLayout::VertexSubspace::slot_of(int vertex) const {
  auto it = std::find(vertices.begin(), vertices.end(), vertex);
  if (it == vertices.end()) throw PsiError("vertex not in this subspace");
  return static_cast<int>(it - vertices.begin());
}

namespace {

struct ReductionBuilder {
  const PsiInstance& p;
  ReductionLayout layout;
  long long m_g;
  std::vector<std::vector<long long>> rows;
  std::vector<std::string> labels;
  std::vector<long long> defaults;

  explicit ReductionBuilder(const PsiInstance& inst) : p(inst) {
    m_g = static_cast<long long>(p.g_edges.size());
    build_layout();
    build_defaults();
    for (const auto& es : layout.edge_subspaces) emit_edge_subspace(es);
    for (const auto& vs : layout.vertex_subspaces) emit_vertex_dummy(vs);
  }

  void build_layout() {
    std::vector<std::pair<int, int>> h_edges;
    for (auto e : p.h_edges) h_edges.push_back(ordered(e));
    std::sort(h_edges.begin(), h_edges.end());

    int dim = 0;
    for (auto he : h_edges) {
      ReductionLayout::EdgeSubspace es;
      es.colors = he;
      es.x_dim = dim++;
      es.y_dim = dim++;
      es.tuple_len = static_cast<int>(2 * (m_g + 2));
      for (std::size_t gi = 0; gi < p.g_edges.size(); ++gi)
        if (color_pair(p, p.g_edges[gi]) == he)
          es.candidates.push_back(static_cast<int>(gi));
      // Candidate order is lexicographic by original endpoint ids.
      std::sort(es.candidates.begin(), es.candidates.end(), [&](int a, int b) {
        return name_key(a) < name_key(b);
      });
      layout.edge_subspaces.push_back(std::move(es));
    }
    for (int c = 1; c <= p.colors; ++c) {
      ReductionLayout::VertexSubspace vs;
      vs.color = c;
      vs.dim = dim++;
      vs.vertices = p.color_class(c);
      layout.vertex_subspaces.push_back(std::move(vs));
    }
    layout.dims = dim;
  }

  std::pair<long long, long long> name_key(int g_edge) const {
    auto [u, v] = p.g_edges[g_edge];
    long long a = p.vertex_name[u];
    long long b = p.vertex_name[v];
    return {std::min(a, b), std::max(a, b)};
  }

  void build_defaults() {
    defaults.assign(layout.dims, 0);
    for (const auto& es : layout.edge_subspaces) {
      defaults[es.x_dim] = 0;
      defaults[es.y_dim] = es.corner_y();
    }
    for (const auto& vs : layout.vertex_subspaces)
      defaults[vs.dim] = vs.right_coord();
  }

  const ReductionLayout::VertexSubspace& vertex_subspace(int color) const {
    return layout.vertex_subspaces[color - 1];
  }

  int emit(std::vector<long long> row, bool red) {
    rows.push_back(std::move(row));
    labels.push_back(red ? "red" : "blue");
    return static_cast<int>(rows.size()) - 1;
  }

  // Primary pairs for every candidate of the subspace first, then the dummy
  // tuples between consecutive candidates.
  void emit_edge_subspace(const ReductionLayout::EdgeSubspace& es) {
    int j = static_cast<int>(es.candidates.size());
    std::vector<int> u_red(j), u_blue(j);
    for (int t = 0; t < j; ++t) {
      auto [a, b] = p.g_edges[es.candidates[t]];
      // U belongs to the endpoint with the smaller color, V to the other.
      int u = p.vertex_color[a] < p.vertex_color[b] ? a : b;
      int v = u == a ? b : a;
      u_red[t] = emit(primary_row(es, t, u, true), true);
      u_blue[t] = emit(primary_row(es, t, u, false), false);
      emit(primary_row(es, t, v, true), true);
      emit(primary_row(es, t, v, false), false);
    }
    for (int t = 0; t + 1 < j; ++t)
      emit_tuple(es, t, rows[u_blue[t]], rows[u_red[t + 1]]);
  }

  std::vector<long long> primary_row(const ReductionLayout::EdgeSubspace& es,
                                     int t, int vertex, bool red) const {
    std::vector<long long> row = defaults;
    long long diag = red ? es.pair_red(t) : es.pair_blue(t);
    row[es.x_dim] = diag;
    row[es.y_dim] = diag;
    const auto& vs = vertex_subspace(p.vertex_color[vertex]);
    int slot = vs.slot_of(vertex);
    row[vs.dim] = red ? vs.pair_red(slot) : vs.pair_blue(slot);
    return row;
  }

  // Tuple point k (1-based) sits at diagonal coordinate tuple_start + k - 1;
  // point colors come in pairs: red, red, blue, blue, ... ending blue, blue.
  bool point_red(int k) const { return ((k + 1) / 2) % 2 == 1; }

  void emit_tuple(const ReductionLayout::EdgeSubspace& es, int t,
                  const std::vector<long long>& preceding_blue,
                  const std::vector<long long>& succeeding_red) {
    long long start = es.tuple_start(t);
    int adjacencies = static_cast<int>(m_g) + 1;

    // L_a and R_a both project onto the a-th cross-colored adjacent point
    // pair; L pairs sit on the left unlabeled point of every
    // vertex-verification subspace, R pairs on the right.
    for (int pass = 0; pass < 2; ++pass) {
      bool left_side = pass == 0;
      for (int a = 1; a <= adjacencies; ++a) {
        long long red_point = point_red(2 * a) ? start + 2 * a - 1 : start + 2 * a;
        long long blue_point = point_red(2 * a) ? start + 2 * a : start + 2 * a - 1;
        emit(tuple_row(es, red_point, left_side), true);
        emit(tuple_row(es, blue_point, left_side), false);
      }
    }

    // The P pair: its red example coincides with the preceding candidate's
    // blue primary example outside this subspace, its blue example with the
    // succeeding candidate's red primary example.
    std::vector<long long> p_red = preceding_blue;
    p_red[es.x_dim] = start;
    p_red[es.y_dim] = start;
    emit(std::move(p_red), true);

    std::vector<long long> p_blue = succeeding_red;
    long long last = start + es.tuple_len - 1;
    p_blue[es.x_dim] = last;
    p_blue[es.y_dim] = last;
    emit(std::move(p_blue), false);
  }

  std::vector<long long> tuple_row(const ReductionLayout::EdgeSubspace& es,
                                   long long diag, bool left_side) const {
    std::vector<long long> row = defaults;
    row[es.x_dim] = diag;
    row[es.y_dim] = diag;
    if (left_side)
      for (const auto& vs : layout.vertex_subspaces) row[vs.dim] = vs.left_coord();
    return row;
  }

  void emit_vertex_dummy(const ReductionLayout::VertexSubspace& vs) {
    std::vector<long long> red_row = defaults;
    red_row[vs.dim] = vs.left_coord();
    emit(std::move(red_row), true);
    emit(defaults, false);  // right unlabeled everywhere
  }

  Dataset dataset() const {
    std::vector<std::vector<Rational>> qrows;
    qrows.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<Rational> q;
      q.reserve(row.size());
      for (long long v : row) q.emplace_back(static_cast<long>(v));
      qrows.push_back(std::move(q));
    }
    return Dataset::from_rows(std::move(qrows), labels);
  }
};

}  // namespace

ReducedInstance reduce(const PsiInstance& p) {
  if (!is_normalized(p)) throw PsiError("reduce needs a normalized instance");

  ReductionBuilder builder(p);
  long long m_g = static_cast<long long>(p.g_edges.size());
  long long m_h = static_cast<long long>(p.h_edges.size());
  long long n_h = p.colors;
  long long budget = (m_g + 4) * (m_g - m_h) + n_h;
  return ReducedInstance{builder.dataset(), budget, std::move(builder.layout)};
}

bool is_subgraph_isomorphism(const PsiInstance& p, const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != p.colors) return false;
  for (int c = 1; c <= p.colors; ++c) {
    int v = phi[c - 1];
    if (v < 0 || v >= p.vertex_count() || p.vertex_color[v] != c) return false;
  }
  std::set<std::pair<int, int>> g_set;
  for (auto e : p.g_edges) g_set.insert(ordered(e));
  for (auto [c1, c2] : p.h_edges)
    if (!g_set.count(ordered({phi[c1 - 1], phi[c2 - 1]}))) return false;
  return true;
}

std::optional<std::vector<int>> psi_brute(const PsiInstance& p) {
  validate_psi(p);
  if (p.colors > 6) throw PsiError("psi_brute limited to 6 colors");
  std::vector<std::vector<int>> classes(p.colors);
  for (int c = 1; c <= p.colors; ++c) {
    classes[c - 1] = p.color_class(c);
    if (classes[c - 1].size() > 4)
      throw PsiError("psi_brute limited to 4 vertices per color");
    if (classes[c - 1].empty()) return std::nullopt;
  }

  std::vector<int> choice(p.colors, 0);
  std::vector<int> phi(p.colors);
  while (true) {
    for (int c = 0; c < p.colors; ++c) phi[c] = classes[c][choice[c]];
    if (is_subgraph_isomorphism(p, phi)) return phi;
    int c = p.colors - 1;
    while (c >= 0 && ++choice[c] == static_cast<int>(classes[c].size())) {
      choice[c] = 0;
      --c;
    }
    if (c < 0) return std::nullopt;
  }
}

namespace {

// Assembles the path tree: every cut but the last peels off one uniform
// leaf; the last cut splits what remains into two uniform leaves.
DecisionTree build_path_tree(const Dataset& ds, const std::vector<SplitRef>& cuts) {
  std::vector<int> remaining = ds.all_example_ids();
  if (cuts.empty()) {
    auto label = ds.uniform_label(remaining);
    if (!label) throw std::logic_error("cut-free witness over non-uniform data");
    return DecisionTree::leaf(*label == kAnyClass ? 0 : *label);
  }

  struct Step {
    SplitRef split;
    bool leaf_on_le;
    ClassId label;
  };
  std::vector<Step> steps;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    auto [le, gt] = ds.partition(remaining, cuts[k]);
    auto le_label = ds.uniform_label(le);
    auto gt_label = ds.uniform_label(gt);
    if (le.empty() || gt.empty() || le_label.has_value() == gt_label.has_value())
      throw std::logic_error("witness cut does not peel off one uniform side");
    bool leaf_on_le = le_label.has_value();
    steps.push_back({cuts[k], leaf_on_le, leaf_on_le ? *le_label : *gt_label});
    remaining = leaf_on_le ? std::move(gt) : std::move(le);
  }

  auto [le, gt] = ds.partition(remaining, cuts.back());
  auto le_label = ds.uniform_label(le);
  auto gt_label = ds.uniform_label(gt);
  if (le.empty() || gt.empty() || !le_label || !gt_label)
    throw std::logic_error("final witness cut must leave two uniform leaves");
  DecisionTree tree = DecisionTree::cut(cuts.back(), DecisionTree::leaf(*le_label),
                                        DecisionTree::leaf(*gt_label));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    tree = it->leaf_on_le
               ? DecisionTree::cut(it->split, DecisionTree::leaf(it->label), std::move(tree))
               : DecisionTree::cut(it->split, std::move(tree), DecisionTree::leaf(it->label));
  }
  return tree;
}

}  // namespace

DecisionTree witness_tree(const ReducedInstance& reduced, const PsiInstance& p,
                          const std::vector<int>& phi) {
  if (!is_subgraph_isomorphism(p, phi))
    throw PsiError("phi is not a color-respecting subgraph isomorphism");

  const Dataset& ds = reduced.dataset;
  std::vector<SplitRef> cuts;
  auto cut_after = [&](int dim, long long coord) {
    cuts.push_back({dim, ds.position_of_value(dim, Rational(static_cast<long>(coord)))});
  };

  for (const auto& es : reduced.layout.edge_subspaces) {
    int j = static_cast<int>(es.candidates.size());
    auto chosen = ordered({phi[es.colors.first - 1], phi[es.colors.second - 1]});
    int i = -1;
    for (int t = 0; t < j; ++t)
      if (ordered(p.g_edges[es.candidates[t]]) == chosen) i = t;
    if (i < 0) throw PsiError("chosen edge is not a candidate of its subspace");

    int adjacencies = static_cast<int>(p.g_edges.size()) + 1;
    // Ascending y-cuts below the chosen pair: each candidate pair, then the
    // full cut set of its trailing dummy tuple.
    for (int t = 0; t < i; ++t) {
      cut_after(es.y_dim, es.pair_red(t));
      cut_after(es.y_dim, es.pair_blue(t));
      for (int a = 1; a <= adjacencies; ++a)
        cut_after(es.y_dim, es.tuple_start(t) + 2 * a - 1);
      cut_after(es.y_dim, es.tuple_start(t) + es.tuple_len - 1);
    }
    // Descending x-cuts above the chosen pair.
    for (int t = j - 1; t > i; --t) {
      cut_after(es.x_dim, es.pair_red(t));
      cut_after(es.x_dim, es.tuple_start(t - 1) + es.tuple_len - 1);
      for (int a = adjacencies; a >= 1; --a)
        cut_after(es.x_dim, es.tuple_start(t - 1) + 2 * a - 1);
      cut_after(es.x_dim, es.pair_blue(t - 1));
    }
  }
  for (const auto& vs : reduced.layout.vertex_subspaces)
    cut_after(vs.dim, vs.pair_red(vs.slot_of(phi[vs.color - 1])));

  if (static_cast<long long>(cuts.size()) != reduced.budget)
    throw std::logic_error("witness cut count does not match the budget");
  return build_path_tree(ds, cuts);
}

DecisionTree witness_tree(const PsiInstance& p, const std::vector<int>& phi) {
  return witness_tree(reduce(p), p, phi);
}

PsiInstance parse_psi(std::istream& in) {
  PsiInstance p;
  std::map<long long, int> index_of;
  bool saw_colors = false;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive) || directive[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw PsiError("line " + std::to_string(line_no) + ": " + what);
    };

    if (directive == "colors") {
      if (saw_colors) fail("duplicate colors line");
      if (!(ls >> p.colors) || p.colors < 1) fail("bad color count");
      saw_colors = true;
    } else if (directive == "vertex") {
      long long id;
      int color;
      if (!(ls >> id >> color)) fail("expected: vertex <id> <color>");
      if (!saw_colors) fail("colors line must come first");
      if (color < 1 || color > p.colors) fail("color out of range");
      if (!index_of.emplace(id, p.vertex_count()).second) fail("duplicate vertex id");
      p.vertex_color.push_back(color);
      p.vertex_name.push_back(id);
    } else if (directive == "gedge") {
      long long u, v;
      if (!(ls >> u >> v)) fail("expected: gedge <u> <v>");
      auto iu = index_of.find(u);
      auto iv = index_of.find(v);
      if (iu == index_of.end() || iv == index_of.end()) fail("gedge names unknown vertex");
      p.g_edges.push_back({iu->second, iv->second});
    } else if (directive == "hedge") {
      int c1, c2;
      if (!(ls >> c1 >> c2)) fail("expected: hedge <c1> <c2>");
      if (!saw_colors) fail("colors line must come first");
      if (c1 < 1 || c1 > p.colors || c2 < 1 || c2 > p.colors) fail("color out of range");
      p.h_edges.push_back({c1, c2});
    } else {
      fail("unknown directive '" + directive + "'");
    }
  }
  if (!saw_colors) throw PsiError("missing colors line");
  validate_psi(p);
  return p;
}

PsiInstance parse_psi_text(const std::string& text) {
  std::istringstream in(text);
  return parse_psi(in);
}

std::string format_psi(const PsiInstance& p) {
  std::ostringstream out;
  out << "colors " << p.colors << "\n";
  for (int v = 0; v < p.vertex_count(); ++v)
    out << "vertex " << p.vertex_name[v] << " " << p.vertex_color[v] << "\n";
  for (auto [u, v] : p.g_edges)
    out << "gedge " << p.vertex_name[u] << " " << p.vertex_name[v] << "\n";
  for (auto [c1, c2] : p.h_edges) out << "hedge " << c1 << " " << c2 << "\n";
  return out.str();
}

}  // namespace dtexact
