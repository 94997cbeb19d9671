#include "toulmin/depgraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toulmin/model.hpp"

namespace toulmin {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::axiom: return "axiom";
    case NodeKind::postulate: return "postulate";
    case NodeKind::common_notion: return "common_notion";
    case NodeKind::definition: return "definition";
    case NodeKind::theorem: return "theorem";
  }
  return "theorem";
}

std::optional<NodeKind> parse_node_kind(std::string_view text) {
  for (auto kind : {NodeKind::axiom, NodeKind::postulate, NodeKind::common_notion,
                    NodeKind::definition, NodeKind::theorem}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

namespace {

std::vector<Diagnostic> check_graph(const GraphDecl& decl) {
  std::vector<Diagnostic> out;
  const std::string& graph = decl.name.id;
  if (!is_identifier(graph)) {
    out.push_back(make_error(codes::bad_identifier,
                             "graph name '" + graph + "' is not a valid identifier",
                             decl.name.span, graph));
  }
  std::map<std::string_view, NodeKind> kinds;
  for (const auto& node : decl.nodes) {
    if (!is_identifier(node.id.id)) {
      out.push_back(make_error(codes::bad_identifier,
                               "node '" + node.id.id + "' is not a valid identifier",
                               node.id.span, node.id.id));
    }
    if (!kinds.emplace(node.id.id, node.kind).second) {
      out.push_back(make_error(codes::duplicate_id,
                               "graph '" + graph + "' declares node '" + node.id.id + "' twice",
                               node.id.span, node.id.id));
    }
  }
  std::set<std::pair<std::string_view, std::string_view>> seen;
  for (const auto& edge : decl.edges) {
    const auto& proved = edge.proved.id;
    const auto& used = edge.used.id;
    bool endpoints_ok = true;
    for (const Ref* end : {&edge.proved, &edge.used}) {
      if (!kinds.contains(end->id)) {
        endpoints_ok = false;
        out.push_back(make_error(codes::dangling_edge,
                                 "edge " + proved + " -> " + used + " names undeclared node '" +
                                     end->id + "'",
                                 end->span, proved));
      }
    }
    if (proved == used) {
      out.push_back(make_error(codes::self_loop, "edge " + proved + " -> " + used + " is a self-loop",
                               edge.proved.span, proved));
    }
    if (endpoints_ok && kinds.at(proved) != NodeKind::theorem) {
      out.push_back(make_error(codes::axiom_with_proof,
                               std::string(to_string(kinds.at(proved))) + " '" + proved +
                                   "' cannot depend on '" + used + "'",
                               edge.proved.span, proved));
    }
    if (!seen.emplace(proved, used).second) {
      out.push_back(make_error(codes::duplicate_edge,
                               "edge " + proved + " -> " + used + " is declared twice",
                               edge.proved.span, proved));
    }
  }
  return out;
}

GraphDecl to_decl(const Id& name, const std::vector<PropositionNode>& nodes,
                  const std::vector<Dependency>& edges) {
  GraphDecl decl;
  decl.name = Ref{name};
  for (const auto& node : nodes) decl.nodes.push_back({Ref{node.id}, node.kind});
  for (const auto& edge : edges) decl.edges.push_back({Ref{edge.proved}, Ref{edge.used}});
  return decl;
}

std::vector<Id> sorted_unique(std::vector<Id> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

DependencyGraph::DependencyGraph(Id name, std::vector<PropositionNode> nodes,
                                 std::vector<Dependency> edges)
    : name_(std::move(name)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  auto problems = check_graph(to_decl(name_, nodes_, edges_));
  if (!problems.empty()) throw Error(std::move(problems));
}

const PropositionNode* DependencyGraph::find_node(std::string_view id) const {
  auto it = std::find_if(nodes_.begin(), nodes_.end(),
                         [&](const PropositionNode& n) { return n.id == id; });
  return it == nodes_.end() ? nullptr : &*it;
}

bool DependencyGraph::has_edge(std::string_view proved, std::string_view used) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Dependency& e) {
    return e.proved == proved && e.used == used;
  });
}

Outcome<DependencyGraph> build_graph(const GraphDecl& decl) {
  Outcome<DependencyGraph> result;
  result.diagnostics = check_graph(decl);
  if (has_errors(result.diagnostics)) return result;
  std::vector<PropositionNode> nodes;
  std::vector<Dependency> edges;
  for (const auto& node : decl.nodes) nodes.push_back({node.id.id, node.kind});
  for (const auto& edge : decl.edges) edges.push_back({edge.proved.id, edge.used.id});
  result.value.emplace(decl.name.id, std::move(nodes), std::move(edges));
  return result;
}

namespace {

// Johnson's elementary-circuit enumeration over an index graph whose index
// order matches id order, so every circuit is emitted starting at its
// smallest id.
class CircuitFinder {
 public:
  explicit CircuitFinder(std::vector<std::vector<std::size_t>> adjacency)
      : adj_(std::move(adjacency)), radj_(adj_.size()), n_(adj_.size()) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (auto w : adj_[v]) radj_[w].push_back(v);
    }
  }

  std::vector<std::vector<std::size_t>> run() {
    for (start_ = 0; start_ < n_; ++start_) {
      component_ = component_of_start();
      blocked_.assign(n_, false);
      blocked_by_.assign(n_, {});
      circuit(start_);
    }
    return std::move(circuits_);
  }

 private:
  std::vector<bool> reach(bool forward) const {
    std::vector<bool> seen(n_, false);
    std::vector<std::size_t> work{start_};
    seen[start_] = true;
    while (!work.empty()) {
      auto v = work.back();
      work.pop_back();
      for (auto u : forward ? adj_[v] : radj_[v]) {
        if (u >= start_ && !seen[u]) {
          seen[u] = true;
          work.push_back(u);
        }
      }
    }
    return seen;
  }

  // Strongly connected component of start_ within the nodes >= start_.
  std::vector<bool> component_of_start() const {
    auto forward = reach(true);
    auto backward = reach(false);
    std::vector<bool> both(n_, false);
    for (std::size_t v = start_; v < n_; ++v) both[v] = forward[v] && backward[v];
    return both;
  }

  void unblock(std::size_t v) {
    blocked_[v] = false;
    auto waiting = std::move(blocked_by_[v]);
    blocked_by_[v].clear();
    for (auto w : waiting) {
      if (blocked_[w]) unblock(w);
    }
  }

  bool circuit(std::size_t v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (auto w : adj_[v]) {
      if (w < start_ || !component_[w]) continue;
      if (w == start_) {
        circuits_.push_back(path_);
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (auto w : adj_[v]) {
        if (w < start_ || !component_[w]) continue;
        blocked_by_[w].insert(v);
      }
    }
    path_.pop_back();
    return found;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::vector<std::size_t>> radj_;
  std::size_t n_;
  std::size_t start_ = 0;
  std::vector<bool> component_;
  std::vector<bool> blocked_;
  std::vector<std::set<std::size_t>> blocked_by_;
  std::vector<std::size_t> path_;
  std::vector<std::vector<std::size_t>> circuits_;
};

}  // namespace

std::vector<std::vector<Id>> find_cycles(const DependencyGraph& graph) {
  std::vector<Id> ids;
  for (const auto& node : graph.nodes()) ids.push_back(node.id);
  std::sort(ids.begin(), ids.end());
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);

  std::vector<std::vector<std::size_t>> adjacency(ids.size());
  for (const auto& edge : graph.edges()) {
    adjacency[index.at(edge.proved)].push_back(index.at(edge.used));
  }
  for (auto& targets : adjacency) std::sort(targets.begin(), targets.end());

  std::vector<std::vector<Id>> cycles;
  for (const auto& circuit : CircuitFinder(std::move(adjacency)).run()) {
    std::vector<Id> named;
    for (auto v : circuit) named.push_back(ids[v]);
    cycles.push_back(std::move(named));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::vector<Id> dependencies(const DependencyGraph& graph, std::string_view node,
                             bool transitive) {
  if (!graph.find_node(node)) {
    throw Error(codes::unknown_node,
                "graph '" + graph.name() + "' has no node '" + std::string(node) + "'");
  }
  std::map<std::string_view, std::vector<Id>> successors;
  for (const auto& edge : graph.edges()) successors[edge.proved].push_back(edge.used);

  if (!transitive) return sorted_unique(successors[node]);

  std::set<Id> reached;
  std::vector<Id> work{std::string(node)};
  while (!work.empty()) {
    Id current = std::move(work.back());
    work.pop_back();
    for (const auto& next : successors[current]) {
      if (reached.insert(next).second) work.push_back(next);
    }
  }
  return {reached.begin(), reached.end()};
}

bool GraphDiff::empty() const {
  return nodes_only_in_a.empty() && nodes_only_in_b.empty() && kind_changes.empty() &&
         edge_changes.empty();
}

GraphDiff diff_graphs(const DependencyGraph& a, const DependencyGraph& b) {
  std::map<Id, NodeKind> kinds_a, kinds_b;
  for (const auto& n : a.nodes()) kinds_a.emplace(n.id, n.kind);
  for (const auto& n : b.nodes()) kinds_b.emplace(n.id, n.kind);

  std::map<Id, std::set<Id>> deps_a, deps_b;
  for (const auto& e : a.edges()) deps_a[e.proved].insert(e.used);
  for (const auto& e : b.edges()) deps_b[e.proved].insert(e.used);

  GraphDiff diff;
  for (const auto& [id, kind] : kinds_a) {
    auto other = kinds_b.find(id);
    if (other == kinds_b.end()) {
      diff.nodes_only_in_a.push_back(id);
      continue;
    }
    if (other->second != kind) diff.kind_changes.push_back({id, kind, other->second});

    const auto& uses_a = deps_a[id];
    const auto& uses_b = deps_b[id];
    EdgeChange change{id, {}, {}};
    std::set_difference(uses_a.begin(), uses_a.end(), uses_b.begin(), uses_b.end(),
                        std::back_inserter(change.only_in_a));
    std::set_difference(uses_b.begin(), uses_b.end(), uses_a.begin(), uses_a.end(),
                        std::back_inserter(change.only_in_b));
    if (!change.only_in_a.empty() || !change.only_in_b.empty()) {
      diff.edge_changes.push_back(std::move(change));
    }
  }
  for (const auto& [id, kind] : kinds_b) {
    if (!kinds_a.contains(id)) diff.nodes_only_in_b.push_back(id);
  }
  return diff;
}

DependencyGraph reclassify_node(const DependencyGraph& graph, std::string_view node,
                                NodeKind kind) {
  if (!graph.find_node(node)) {
    throw Error(codes::unknown_node,
                "graph '" + graph.name() + "' has no node '" + std::string(node) + "'");
  }
  auto nodes = graph.nodes();
  for (auto& n : nodes) {
    if (n.id == node) n.kind = kind;
  }
  auto edges = graph.edges();
  if (kind != NodeKind::theorem) {
    std::erase_if(edges, [&](const Dependency& e) { return e.proved == node; });
  }
  return DependencyGraph(graph.name(), std::move(nodes), std::move(edges));
}

}  // namespace toulmin
