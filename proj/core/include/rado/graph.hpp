#ifndef RADO_GRAPH_HPP
#define RADO_GRAPH_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rado/vertex.hpp"

namespace rado {

class Backend;
using BackendHandle = std::shared_ptr<const Backend>;

/// Unordered edge, endpoints kept sorted.
struct Edge {
  VertexTerm u, v;
  Edge(VertexTerm a, VertexTerm b);
  friend bool operator<(const Edge& a, const Edge& b) {
    int c = compare(a.u, b.u);
    if (c != 0) return c < 0;
    return a.v < b.v;
  }
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
};

/// A finite graph on VertexTerms. No loops; edges are unordered pairs whose
/// endpoints must be listed vertices.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  FiniteGraph(std::vector<VertexTerm> vertices, std::vector<Edge> edges);

  const std::vector<VertexTerm>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  size_t vertex_count() const { return vertices_.size(); }
  size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const VertexTerm& v) const;
  bool adjacent(const VertexTerm& a, const VertexTerm& b) const;

  friend bool operator==(const FiniteGraph& a, const FiniteGraph& b);

  std::string to_dot() const;
  std::string to_jsonl() const;
  static FiniteGraph from_jsonl(std::istream& in);
  static FiniteGraph from_jsonl_text(const std::string& text);

 private:
  std::vector<VertexTerm> vertices_;
  std::set<VertexTerm> vertex_set_;
  std::set<Edge> edges_;
};

/// A finite injective, adjacency-preserving map between vertex sets of one
/// backend: the groupoid element of P(R).
class PartialIso {
 public:
  PartialIso() = default;
  /// Builds from pairs; throws InvalidPartialIso if not injective or if a
  /// domain vertex repeats.
  explicit PartialIso(const std::vector<std::pair<VertexTerm, VertexTerm>>& pairs);

  size_t size() const { return fwd_.size(); }
  bool empty() const { return fwd_.empty(); }

  bool in_domain(const VertexTerm& x) const { return fwd_.count(x) > 0; }
  bool in_range(const VertexTerm& y) const { return bwd_.count(y) > 0; }
  const VertexTerm& image(const VertexTerm& x) const;
  const VertexTerm& preimage(const VertexTerm& y) const;
  std::optional<VertexTerm> try_image(const VertexTerm& x) const;
  std::optional<VertexTerm> try_preimage(const VertexTerm& y) const;

  std::vector<VertexTerm> domain() const;
  std::vector<VertexTerm> range() const;
  const std::map<VertexTerm, VertexTerm>& pairs() const { return fwd_; }

  /// Adds one pair; throws InvalidPartialIso on injectivity conflict.
  void insert(const VertexTerm& x, const VertexTerm& y);
  bool extends(const PartialIso& other) const;

  friend bool operator==(const PartialIso& a, const PartialIso& b) {
    return a.fwd_ == b.fwd_;
  }

 private:
  std::map<VertexTerm, VertexTerm> fwd_;
  std::map<VertexTerm, VertexTerm> bwd_;
};

/// First violation found when a candidate map fails to be a partial
/// isomorphism.
struct IsoViolation {
  enum class Kind { Injectivity, Adjacency };
  Kind kind;
  VertexTerm x1, x2;  // offending domain pair
  std::string describe() const;
};

struct IsoCheck {
  bool ok = true;
  std::optional<IsoViolation> violation;
};

/// Induced subgraph on a window of backend vertices.
FiniteGraph induced_subgraph(const std::vector<VertexTerm>& window,
                             const BackendHandle& backend);

/// True iff `pairs` is injective and preserves adjacency and non-adjacency
/// both ways in the backend. Violations are reported, not raised.
IsoCheck validate_partial_iso(
    const std::vector<std::pair<VertexTerm, VertexTerm>>& pairs,
    const BackendHandle& backend);
IsoCheck validate_partial_iso(const PartialIso& phi, const BackendHandle& backend);

/// Composition phi∘psi on psi^{-1}(r(psi) ∩ d(phi)); empty intersection
/// yields the empty partial isomorphism.
PartialIso groupoid_compose(const PartialIso& phi, const PartialIso& psi);
PartialIso groupoid_invert(const PartialIso& phi);

/// True iff `map` (total on V(G1)) preserves and reflects adjacency.
/// Throws InvalidVertex when an image is outside V(G2).
bool is_open_morphism(const FiniteGraph& g1, const FiniteGraph& g2,
                      const std::map<VertexTerm, VertexTerm>& map);

}  // namespace rado

#endif
