#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "toulmin/diagnostic.hpp"

namespace toulmin {

enum class NodeKind { axiom, postulate, common_notion, definition, theorem };

std::string_view to_string(NodeKind kind);
std::optional<NodeKind> parse_node_kind(std::string_view text);

struct PropositionNode {
  Id id;
  NodeKind kind;

  friend bool operator==(const PropositionNode&, const PropositionNode&) = default;
};

/// `proved` cites `used` in its proof.
struct Dependency {
  Id proved;
  Id used;

  friend bool operator==(const Dependency&, const Dependency&) = default;
  friend auto operator<=>(const Dependency&, const Dependency&) = default;
};

/// Graph declarations as written, before validation.
struct GraphDecl {
  struct Node {
    Ref id;
    NodeKind kind;
  };
  struct Edge {
    Ref proved;
    Ref used;
  };

  Ref name;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
};

/// Propositions with "used in the proof of" edges. Nodes and edges keep
/// declaration order.
class DependencyGraph {
 public:
  /// Throws Error with the same diagnostics build_graph would report.
  DependencyGraph(Id name, std::vector<PropositionNode> nodes,
                  std::vector<Dependency> edges);

  const Id& name() const { return name_; }
  const std::vector<PropositionNode>& nodes() const { return nodes_; }
  const std::vector<Dependency>& edges() const { return edges_; }

  const PropositionNode* find_node(std::string_view id) const;
  bool has_edge(std::string_view proved, std::string_view used) const;

  friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;

 private:
  Id name_;
  std::vector<PropositionNode> nodes_;
  std::vector<Dependency> edges_;
};

/// Validates declarations: unique node ids, declared edge endpoints, no
/// self-loops, no duplicate edges, and no outgoing edge from a node that is
/// not a theorem.
Outcome<DependencyGraph> build_graph(const GraphDecl& decl);

/// Every elementary cycle, each rotated to start at its smallest id, the
/// list sorted. Empty iff the graph is acyclic.
std::vector<std::vector<Id>> find_cycles(const DependencyGraph& graph);

/// Direct successors of `node`, or everything reachable from it, sorted.
/// Throws Error(unknown-node).
std::vector<Id> dependencies(const DependencyGraph& graph, std::string_view node,
                             bool transitive);

struct KindChange {
  Id id;
  NodeKind kind_a;
  NodeKind kind_b;

  friend bool operator==(const KindChange&, const KindChange&) = default;
};

struct EdgeChange {
  Id proved;
  std::vector<Id> only_in_a;
  std::vector<Id> only_in_b;

  friend bool operator==(const EdgeChange&, const EdgeChange&) = default;
};

struct GraphDiff {
  std::vector<Id> nodes_only_in_a;
  std::vector<Id> nodes_only_in_b;
  std::vector<KindChange> kind_changes;
  // Only nodes present in both graphs whose dependencies differ.
  std::vector<EdgeChange> edge_changes;

  bool empty() const;
  friend bool operator==(const GraphDiff&, const GraphDiff&) = default;
};

GraphDiff diff_graphs(const DependencyGraph& a, const DependencyGraph& b);

/// Copy of `graph` with `node` given `kind`; a node that stops being a
/// theorem loses its outgoing edges. Throws Error(unknown-node).
DependencyGraph reclassify_node(const DependencyGraph& graph,
                                std::string_view node, NodeKind kind);

}  // namespace toulmin
