#include "zf/witness.hpp"

#include <algorithm>
#include <optional>

#include "zf/forcing.hpp"

namespace zf {

namespace {

int floor_half(int x) { return x / 2; }
int ceil_half(int x) { return (x + 1) / 2; }

Label opposite(Label l) { return l == Label::L ? Label::R : Label::L; }

std::string vertex_name(Vertex v) { return std::to_string(v); }

}  // namespace

VertexSet Partition::side(Label l) const {
  VertexSet s;
  for (Vertex v = 0; v < static_cast<Vertex>(labels.size()); ++v) {
    if (labels[v] == l) s.insert(v);
  }
  return s;
}

std::vector<std::string> Partition::violations(const Graph& g) const {
  std::vector<std::string> out;
  if (static_cast<int>(labels.size()) != g.n()) {
    out.push_back("label count differs from vertex count");
    return out;
  }
  if (!side(Label::U).empty()) out.push_back("unassigned vertices " + side(Label::U).to_string());
  if (side(Label::O).size() > 1) out.push_back("more than one O vertex");
  const VertexSet o = side(Label::O);
  const VertexSet left = side(Label::L);
  const VertexSet right = side(Label::R);
  for (Vertex v : left) {
    if ((g.neighbors(v) & (right | o)).size() < 2) {
      out.push_back("L vertex " + vertex_name(v) + " has < 2 neighbors in R+O");
    }
  }
  for (Vertex v : right) {
    if ((g.neighbors(v) & (left | o)).size() < 2) {
      out.push_back("R vertex " + vertex_name(v) + " has < 2 neighbors in L+O");
    }
  }
  return out;
}

std::string_view route_name(Route r) {
  switch (r) {
    case Route::Disconnected: return "disconnected";
    case Route::Base: return "base";
    case Route::Bipartite: return "bipartite";
    case Route::CutVertex: return "cut-vertex";
    case Route::Algo1Even: return "algo1-even";
    case Route::Algo1Odd: return "algo1-odd";
    case Route::Delta1A: return "delta1-a";
    case Route::Delta1B: return "delta1-b";
    case Route::Delta2Case1: return "delta2-case1";
    case Route::Delta2Case2a: return "delta2-case2a";
    case Route::Delta2Case2bi: return "delta2-case2bi";
    case Route::Delta2Case2bii: return "delta2-case2bii";
  }
  return "unknown";
}

std::string WitnessReport::route_string() const {
  std::string out;
  for (Route r : route) {
    if (!out.empty()) out += '(';
    out += route_name(r);
  }
  out.append(route.empty() ? 0 : route.size() - 1, ')');
  return out;
}

WitnessReport witness_bipartite(const Graph& g, std::pair<VertexSet, VertexSet> sides) {
  auto [left, right] = sides;
  if (left.intersects(right) || (left | right) != g.vertices()) {
    throw GraphError("bipartite witness: sides must partition the vertex set");
  }
  for (Vertex v : left) {
    if ((g.neighbors(v) & right).size() < 2) {
      throw GraphError("bipartite witness: vertex " + vertex_name(v) + " has < 2 cross neighbors");
    }
  }
  for (Vertex v : right) {
    if ((g.neighbors(v) & left).size() < 2) {
      throw GraphError("bipartite witness: vertex " + vertex_name(v) + " has < 2 cross neighbors");
    }
  }
  const VertexSet fill = left.size() >= right.size() ? left : right;
  return {fill, {Route::Bipartite}, fill.size(), is_stalled(g, fill)};
}

WitnessReport witness_cut_vertex(const Graph& g, Vertex v) {
  if (!is_connected(g) || g.min_degree() < 3) {
    throw GraphError("cut-vertex witness requires a connected graph with min degree >= 3");
  }
  if (v < 0 || v >= g.n() || !cut_vertices(g).contains(v)) {
    throw GraphError("cut-vertex witness: vertex is not a cut vertex");
  }
  const DerivedGraph rest = induced_subgraph(g, g.vertices().without(v));
  const VertexSet smallest = rest.lift(connected_components(rest.graph).front());
  const VertexSet fill = g.vertices() - smallest;
  return {fill, {Route::CutVertex}, floor_half(g.n() + 1), is_stalled(g, fill)};
}

namespace {

/// Working state of the partition algorithm.
class Labeler {
 public:
  explicit Labeler(const Graph& g) : g_(g), labels_(g.n(), Label::U) {}

  Partition run() {
    seed();
    while (!unassigned().empty()) {
      if (assign_by_count(Label::L, Label::R)) continue;  // case 1
      if (assign_by_count(Label::R, Label::L)) continue;  // case 2
      if (extend_from_straddler()) continue;               // case 3
      extend_through_cycle();                              // case 4
    }
    Partition p{labels_, seeded_even_};
    if (auto bad = p.violations(g_); !bad.empty()) {
      throw AlgorithmError("partition invariant violated: " + bad.front());
    }
    return p;
  }

 private:
  VertexSet with_label(Label l) const {
    VertexSet s;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (labels_[v] == l) s.insert(v);
    }
    return s;
  }
  VertexSet unassigned() const { return with_label(Label::U); }
  VertexSet assigned() const { return g_.vertices() - unassigned(); }

  /// Labels `path` alternately starting with `first`.
  void alternate(const std::vector<Vertex>& path, Label first) {
    Label l = first;
    for (Vertex v : path) {
      labels_[v] = l;
      l = opposite(l);
    }
  }

  void seed() {
    if (auto even = find_even_cycle(g_)) {
      seeded_even_ = true;
      alternate(even->vertices, Label::L);
      return;
    }
    auto odd = find_odd_cycle(g_);
    if (!odd) throw AlgorithmError("graph with min degree >= 3 has no cycle");
    labels_[odd->vertices.front()] = Label::O;
    alternate({odd->vertices.begin() + 1, odd->vertices.end()}, Label::L);
  }

  /// Cases 1 and 2: a vertex with two neighbors in `side` or O joins `target`.
  bool assign_by_count(Label side, Label target) {
    const VertexSet pool = with_label(side) | with_label(Label::O);
    for (Vertex v : unassigned()) {
      if ((g_.neighbors(v) & pool).size() >= 2) {
        labels_[v] = target;
        return true;
      }
    }
    return false;
  }

  /// Case 3: v has exactly one L and one R neighbor. Walk from v through
  /// unassigned vertices to some other attachment point u0 and alternate
  /// labels back along that path, so v gains a second opposite neighbor.
  bool extend_from_straddler() {
    const VertexSet a = assigned();
    const VertexSet u = unassigned();
    for (Vertex v : u) {
      if ((g_.neighbors(v) & a).size() != 2) continue;

      std::vector<Vertex> parent(g_.n(), -1);
      std::vector<Vertex> queue;
      VertexSet seen = VertexSet::single(v);
      for (Vertex z : g_.neighbors(v) & u) {
        parent[z] = v;
        seen.insert(z);
        queue.push_back(z);
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex z = queue[head];
        const VertexSet attach = g_.neighbors(z) & a;
        if (!attach.empty()) {
          const Vertex u0 = attach.first();
          std::vector<Vertex> path;
          for (Vertex t = z; t != -1; t = parent[t]) path.push_back(t);
          const Label from = labels_[u0] == Label::O ? Label::R : labels_[u0];
          alternate(path, opposite(from));
          return true;
        }
        for (Vertex t : (g_.neighbors(z) & u) - seen) {
          parent[t] = z;
          seen.insert(t);
          queue.push_back(t);
        }
      }
      throw AlgorithmError("case 3: vertex " + vertex_name(v) +
                           " has no second route to the assigned set (cut vertex)");
    }
    return false;
  }

  struct Attachment {
    std::vector<Vertex> path;  ///< cycle vertex first, attached vertex last
    Vertex anchor;             ///< assigned neighbor of path.back()
  };

  /// Shortest path from one of `sources` through unassigned vertices outside
  /// `cycle` to a vertex with an assigned neighbor.
  std::optional<Attachment> attach(VertexSet sources, VertexSet cycle) const {
    const VertexSet a = assigned();
    const VertexSet open = unassigned() - cycle;
    std::vector<Vertex> parent(g_.n(), -1);
    std::vector<Vertex> queue = sources.to_vector();
    VertexSet seen = sources;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex z = queue[head];
      if (const VertexSet hit = g_.neighbors(z) & a; !hit.empty()) {
        Attachment out{{}, hit.first()};
        for (Vertex t = z; t != -1; t = parent[t]) out.path.push_back(t);
        std::reverse(out.path.begin(), out.path.end());
        return out;
      }
      for (Vertex t : (g_.neighbors(z) & open) - seen) {
        parent[t] = z;
        seen.insert(t);
        queue.push_back(t);
      }
    }
    return std::nullopt;
  }

  /// Case 4: every unassigned vertex has at most one assigned neighbor.
  void extend_through_cycle() {
    const DerivedGraph h = induced_subgraph(g_, unassigned());
    if (h.graph.min_degree() < 2) {
      throw AlgorithmError("case 4: unassigned subgraph has a vertex of degree < 2");
    }
    if (auto even = find_even_cycle(h.graph)) {
      std::vector<Vertex> lifted;
      for (Vertex v : even->vertices) lifted.push_back(h.to_old[v]);
      alternate(lifted, Label::L);
      return;
    }
    auto odd = find_odd_cycle(h.graph);
    if (!odd) throw AlgorithmError("case 4: unassigned subgraph has no cycle");
    std::vector<Vertex> cycle;
    for (Vertex v : odd->vertices) cycle.push_back(h.to_old[v]);
    const VertexSet on_cycle = h.lift(odd->members());

    auto p = attach(on_cycle, on_cycle);
    if (!p) throw AlgorithmError("case 4: cycle has no path to the assigned set");
    const Vertex c0 = p->path.front();
    auto q = attach(on_cycle.without(c0), on_cycle);
    if (!q) throw AlgorithmError("case 4: cycle vertex " + vertex_name(c0) + " is a cut vertex");
    const Vertex ci = q->path.front();
    VertexSet p_set, q_set;
    for (Vertex v : p->path) p_set.insert(v);
    for (Vertex v : q->path) q_set.insert(v);
    if (p_set.intersects(q_set)) throw AlgorithmError("case 4: attachment paths intersect");

    // The two arcs of the odd cycle from c0 to ci have opposite parity.
    const int len = static_cast<int>(cycle.size());
    const int i0 = static_cast<int>(std::find(cycle.begin(), cycle.end(), c0) - cycle.begin());
    const int i1 = static_cast<int>(std::find(cycle.begin(), cycle.end(), ci) - cycle.begin());
    auto arc = [&](int step) {
      std::vector<Vertex> out;
      for (int i = i0; i != i1; i = (i + step + len) % len) out.push_back(cycle[i]);
      out.push_back(ci);
      return out;
    };
    auto build = [&](const std::vector<Vertex>& around) {
      std::vector<Vertex> path(p->path.rbegin(), p->path.rend());
      path.insert(path.end(), around.begin() + 1, around.end() - 1);
      path.insert(path.end(), q->path.begin(), q->path.end());
      return path;
    };
    const std::vector<Vertex> forward = build(arc(1));
    const std::vector<Vertex> backward = build(arc(-1));

    const Label va = labels_[p->anchor];
    const Label wa = labels_[q->anchor];
    const std::vector<Vertex>* chosen = nullptr;
    if (va != Label::O && wa != Label::O) {
      // Endpoints must end up opposite their anchors: an odd number of edges
      // when the anchors disagree, an even number when they agree.
      const bool want_odd_edges = va != wa;
      chosen = ((forward.size() - 1) % 2 == 1) == want_odd_edges ? &forward : &backward;
    } else {
      chosen = forward.size() <= backward.size() ? &forward : &backward;
    }
    Label start = Label::L;
    if (va != Label::O) {
      start = opposite(va);
    } else if (wa != Label::O) {
      const bool odd_edges = (chosen->size() - 1) % 2 == 1;
      start = odd_edges ? wa : opposite(wa);
    }
    alternate(*chosen, start);
  }

  const Graph& g_;
  std::vector<Label> labels_;
  bool seeded_even_ = false;
};

}  // namespace

Partition algo1_partition(const Graph& g) {
  if (!is_connected(g) || g.min_degree() < 3) {
    throw GraphError("partition requires a connected graph with min degree >= 3");
  }
  if (!cut_vertices(g).empty()) throw GraphError("partition requires a graph without cut vertices");
  return Labeler(g).run();
}

WitnessReport witness_delta3(const Graph& g) {
  if (!is_connected(g) || g.min_degree() < 3) {
    throw GraphError("delta3 witness requires a connected graph with min degree >= 3");
  }
  if (const VertexSet cuts = cut_vertices(g); !cuts.empty()) {
    return witness_cut_vertex(g, cuts.first());
  }
  const Partition p = algo1_partition(g);
  const VertexSet left = p.side(Label::L);
  const VertexSet right = p.side(Label::R);
  const VertexSet fill = left.size() >= right.size() ? left : right;
  const bool even = p.seeded_from_even_cycle;
  return {fill,
          {even ? Route::Algo1Even : Route::Algo1Odd},
          even ? ceil_half(g.n()) : floor_half(g.n()),
          is_stalled(g, fill)};
}

namespace {

WitnessReport extend(const WitnessReport& child, Route step, VertexSet set, int added) {
  WitnessReport out{set, {}, child.guaranteed_bound + added, false};
  out.route.reserve(child.route.size() + 1);
  out.route.push_back(step);
  for (Route r : child.route) out.route.push_back(r);
  return out;
}

WitnessReport construct(const Graph& g);

WitnessReport construct_step(const Graph& g) {
  const int n = g.n();
  if (n == 1) return {VertexSet{}, {Route::Base}, 0, true};

  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    return {g.vertices() - comps.front(), {Route::Disconnected}, ceil_half(n), true};
  }
  if (n == 2) return {VertexSet{}, {Route::Base}, 0, true};  // K_2

  const int delta = g.min_degree();
  if (delta >= 3) {
    WitnessReport r = witness_delta3(g);
    // A cut-vertex set may force once into the small side; its derived set
    // is stalled, fails, and is at least as large.
    if (!r.stalled) r.set = derived_set(g, r.set);
    r.stalled = true;
    return r;
  }

  Vertex v = 0;
  while (g.degree(v) != delta) ++v;

  if (delta == 1) {
    const Vertex w = g.neighbors(v).first();
    const DerivedGraph rest = induced_subgraph(g, g.vertices() - VertexSet::of({v, w}));
    const WitnessReport child = construct(rest.graph);
    const VertexSet base = rest.lift(child.set);
    if (!((g.neighbors(w).without(v)) - base).empty()) {
      return extend(child, Route::Delta1A, base.with(w), 1);
    }
    return extend(child, Route::Delta1B, base | VertexSet::of({v, w}), 2);
  }

  // delta == 2
  const Vertex x = g.neighbors(v).first();
  const Vertex y = g.neighbors(v).without(x).first();
  const Condensation cond = condense_path(g, v, x, y);
  const Graph& reduced = cond.derived.graph;
  const WitnessReport child = construct(reduced);
  const VertexSet base = cond.derived.lift(child.set);

  if (!child.set.contains(cond.w)) {
    return extend(child, Route::Delta2Case1, base.with(v), 1);
  }
  const VertexSet xyv = VertexSet::of({v, x, y});
  if ((reduced.neighbors(cond.w) - child.set).empty()) {
    return extend(child, Route::Delta2Case2a, base | xyv, 2);
  }
  const VertexSet open_x = (g.neighbors(x) - xyv) - base;
  const VertexSet open_y = (g.neighbors(y) - xyv) - base;
  if (!open_x.empty() && !open_y.empty()) {
    return extend(child, Route::Delta2Case2bi, base | VertexSet::of({x, y}), 1);
  }
  return extend(child, Route::Delta2Case2bii, base | xyv, 2);
}

/// Every level must stall: the reductions above rely on the child set
/// being its own derived set.
WitnessReport construct(const Graph& g) {
  WitnessReport r = construct_step(g);
  r.stalled = is_stalled(g, r.set);
  if (!r.stalled) {
    throw AlgorithmError("construction " + r.route_string() + " produced non-stalled set " +
                         r.set.to_string() + " on " + std::to_string(g.n()) + " vertices");
  }
  if (r.set.size() < r.guaranteed_bound || r.guaranteed_bound < (g.n() - 1) / 2) {
    throw AlgorithmError("construction " + r.route_string() + " missed its size bound");
  }
  return r;
}

}  // namespace

WitnessReport witness_general(const Graph& g) { return construct(g); }

Verdict verify_witness(const Graph& g, const WitnessReport& report) {
  Verdict verdict;
  auto& bad = verdict.violations;
  const VertexSet all = g.vertices();
  if (!report.set.subset_of(all)) bad.push_back("set contains vertices outside the graph");
  if (report.set == all) bad.push_back("set equals the whole vertex set");
  if (is_zero_forcing(g, report.set)) bad.push_back("set is zero forcing");
  const bool stalled = is_stalled(g, report.set);
  if (report.stalled && !stalled) bad.push_back("set is not stalled");
  if (report.set.size() < report.guaranteed_bound) {
    bad.push_back("set size " + std::to_string(report.set.size()) + " below bound " +
                  std::to_string(report.guaranteed_bound));
  }
  return verdict;
}

}  // namespace zf
