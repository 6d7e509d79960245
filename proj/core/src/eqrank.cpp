#include "eqrank/eqrank.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace eqrank {

WeightedDigraph invert(const WeightedDigraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    edges.push_back({g.edge_target(e), g.edge_source(e), g.edge_weight(e)});
  }
  return WeightedDigraph(g.vertex_count(), std::move(edges), g.ids());
}

WeightedDigraph max_links(const WeightedDigraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto w = g.out_weights(v);
    if (w.empty()) continue;
    const Weight best = *std::max_element(w.begin(), w.end());
    auto succ = g.successors(v);
    for (std::size_t k = 0; k < succ.size(); ++k) {
      if (w[k] == best) edges.push_back({v, succ[k], w[k]});
    }
  }
  return WeightedDigraph(g.vertex_count(), std::move(edges), g.ids());
}

FactorGraph factor(const WeightedDigraph& g, const Partition& r) {
  if (r.vertex_count() != g.vertex_count()) {
    throw InvariantError("factor: partition covers " + std::to_string(r.vertex_count()) +
                         " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  std::vector<Edge> crossing;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    BlockId x = r.block_of(g.edge_source(e));
    BlockId y = r.block_of(g.edge_target(e));
    if (x != y) crossing.push_back({x, y, g.edge_weight(e)});
  }
  // Stable so parallel links are summed in parent edge order.
  std::stable_sort(crossing.begin(), crossing.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  std::vector<Edge> merged;
  for (const Edge& e : crossing) {
    if (!merged.empty() && merged.back().src == e.src && merged.back().dst == e.dst) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  return {WeightedDigraph(r.block_count(), std::move(merged)), r};
}

Partition strong_components(const WeightedDigraph& g) {
  // Iterative Tarjan; recursion depth would follow path length otherwise.
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint64_t> component(n, 0);
  std::vector<VertexId> stack;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;
  std::uint64_t components = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto succ = g.successors(f.v);
      if (f.next < succ.size()) {
        VertexId u = succ[f.next++];
        if (index[u] == kUnvisited) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = 1;
          call.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], index[u]);
        }
        continue;
      }
      const VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) {
        VertexId parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] == index[v]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component[w] = components;
        } while (w != v);
        ++components;
      }
    }
  }
  return Partition::from_labels(component);
}

FactorGraph condense_scc(const WeightedDigraph& g) { return factor(g, strong_components(g)); }

std::vector<VertexId> sinks(const WeightedDigraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> topological_order(const WeightedDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n);
  for (VertexId v = 0; v < n; ++v) indegree[v] = g.in_degree(v);
  // Min-heap on vertex id for a reproducible order.
  std::vector<VertexId> heap;
  for (VertexId v = 0; v < n; ++v) {
    if (indegree[v] == 0) heap.push_back(v);
  }
  std::make_heap(heap.begin(), heap.end(), std::greater<>{});
  std::vector<VertexId> order;
  order.reserve(n);
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
    VertexId v = heap.back();
    heap.pop_back();
    order.push_back(v);
    for (VertexId u : g.successors(v)) {
      if (--indegree[u] == 0) {
        heap.push_back(u);
        std::push_heap(heap.begin(), heap.end(), std::greater<>{});
      }
    }
  }
  if (order.size() != n) throw InvariantError("graph has a cycle; expected an acyclic graph");
  return order;
}

namespace {

struct SetHash {
  std::size_t operator()(const std::vector<VertexId>& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (VertexId v : s) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

RootAssignment root_sets(const WeightedDigraph& g) {
  const std::vector<VertexId> order = topological_order(g);
  RootAssignment out;
  out.set_of_.assign(g.vertex_count(), 0);
  std::unordered_map<std::vector<VertexId>, std::uint32_t, SetHash> interned;
  auto intern = [&](std::vector<VertexId> set) {
    auto [it, inserted] = interned.emplace(set, static_cast<std::uint32_t>(out.sets_.size()));
    if (inserted) out.sets_.push_back(std::move(set));
    return it->second;
  };

  std::vector<std::uint32_t> ids;
  std::vector<VertexId> merged;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    auto succ = g.successors(v);
    if (succ.empty()) {
      out.set_of_[v] = intern({v});
      continue;
    }
    ids.clear();
    for (VertexId u : succ) ids.push_back(out.set_of_[u]);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() == 1) {
      out.set_of_[v] = ids.front();
      continue;
    }
    merged.clear();
    for (auto id : ids) merged.insert(merged.end(), out.sets_[id].begin(), out.sets_[id].end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    out.set_of_[v] = intern(merged);
  }
  return out;
}

namespace {

struct RootedCondensation {
  FactorGraph condensed;
  RootAssignment roots;
};

RootedCondensation rooted_condensation(const WeightedDigraph& g) {
  FactorGraph condensed = condense_scc(max_links(g));
  RootAssignment roots = root_sets(condensed.graph);
  return {std::move(condensed), std::move(roots)};
}

Partition partition_by_roots(const WeightedDigraph& g) {
  RootedCondensation rc = rooted_condensation(g);
  std::vector<std::uint64_t> labels(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    labels[v] = rc.roots.set_id(rc.condensed.projection.block_of(v));
  }
  return Partition::from_labels(labels);
}

}  // namespace

Partition auth_relation(const WeightedDigraph& g) { return partition_by_roots(g); }

Partition hub_relation(const WeightedDigraph& g) { return partition_by_roots(invert(g)); }

Partition eqrank_relation(const WeightedDigraph& g) {
  return intersect(hub_relation(g), auth_relation(g));
}

std::vector<std::vector<VertexId>> root_members(const WeightedDigraph& g) {
  RootedCondensation rc = rooted_condensation(g);
  const Partition& blocks = rc.condensed.projection;
  std::vector<std::vector<VertexId>> by_set(rc.roots.distinct_sets());
  std::vector<char> done(rc.roots.distinct_sets(), 0);
  std::vector<std::vector<VertexId>> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const BlockId b = blocks.block_of(v);
    const auto id = rc.roots.set_id(b);
    if (!done[id]) {
      for (VertexId sink : rc.roots.roots(b)) {
        auto m = blocks.members(sink);
        by_set[id].insert(by_set[id].end(), m.begin(), m.end());
      }
      std::sort(by_set[id].begin(), by_set[id].end());
      done[id] = 1;
    }
    out[v] = by_set[id];
  }
  return out;
}

Partition eqrank_prime_oracle(const WeightedDigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 64) throw InputError("eqrank_prime_oracle is limited to 64 vertices");
  std::vector<std::uint64_t> successors(n, 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    successors[g.edge_source(e)] |= std::uint64_t{1} << g.edge_target(e);
  }
  // Acyclic iff repeatedly peeling vertices without remaining successors empties the graph.
  std::uint64_t remaining = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  bool progressed = true;
  while (remaining && progressed) {
    progressed = false;
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((remaining & bit) && (successors[v] & remaining) == 0) {
        remaining &= ~bit;
        progressed = true;
      }
    }
  }
  if (remaining) throw InputError("eqrank_prime_oracle requires an acyclic graph");

  auto fe = [&](std::uint64_t set) {
    std::uint64_t image = 0;
    for (std::uint64_t rest = set; rest; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      image |= successors[x] ? successors[x] : std::uint64_t{1} << x;
    }
    return image;
  };
  std::vector<std::uint64_t> limit(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint64_t set = std::uint64_t{1} << x;
    for (std::size_t step = 0; step <= n; ++step) {
      const std::uint64_t image = fe(set);
      if (image == set) break;
      set = image;
    }
    limit[x] = set;
  }
  return Partition::from_labels(limit);
}

}  // namespace eqrank
