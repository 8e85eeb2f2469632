#ifndef RADO_BACKEND_HPP
#define RADO_BACKEND_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rado/graph.hpp"
#include "rado/vertex.hpp"

namespace rado {

/// Conditions selecting a slice of a backend: vertices adjacent to all of U,
/// to none of V, and outside U ∪ V ∪ exclude.
struct SliceQuery {
  std::vector<VertexTerm> U;
  std::vector<VertexTerm> V;
  std::set<VertexTerm> exclude;
};

/// A computable adjacency oracle realizing the Random Graph (or a graph
/// isomorphic to it, for derived handles). Backends are immutable; adjacency
/// and enumeration are pure and safe for concurrent use.
class Backend : public std::enable_shared_from_this<Backend> {
 public:
  enum class Kind { Bit, Limit, Restriction, Slice };

  virtual ~Backend() = default;

  /// The explicit BIT model: vertices are naturals, m ~ M iff bit m of M.
  static BackendHandle bit();
  /// Inductive-limit model over a finite seed whose vertices must be
  /// Base(0..m-1) in order. Parameter l keeps only member sets U with
  /// gcd(l,|U|) = 1.
  static BackendHandle limit(FiniteGraph seed, uint64_t l);
  /// Inductive-limit model over the edgeless countable seed b0, b1, ...
  static BackendHandle limit_countable(uint64_t l);

  BackendHandle restrict_away(std::vector<VertexTerm> deleted) const;
  BackendHandle slice(std::vector<VertexTerm> U, std::vector<VertexTerm> V) const;

  Kind kind() const { return kind_; }
  virtual std::string describe() const = 0;

  virtual bool valid_vertex(const VertexTerm& t) const = 0;
  void check_vertex(const VertexTerm& t) const;

  /// Throws LoopQuery if x == y and InvalidVertex on foreign terms.
  bool adjacent(const VertexTerm& x, const VertexTerm& y) const;

  /// First n vertices in canonical order; deterministic, injective and a
  /// prefix of enumerate(n+1). Throws ExhaustedBackend when a derived handle
  /// over a finite window cannot supply n vertices.
  std::vector<VertexTerm> enumerate(size_t n) const;
  VertexTerm vertex_at(size_t i) const;

  /// Canonical total order on this backend's vertices; enumerate() lists
  /// vertices ascending in it.
  virtual bool canonical_less(const VertexTerm& a, const VertexTerm& b) const;

  /// Canonically least z with z ~ u for all u in U, z !~ v for all v in V,
  /// z outside U ∪ V ∪ exclude. Total for property-(R) backends.
  virtual VertexTerm least_witness(const SliceQuery& q) const = 0;

  /// Property (R) witness; throws DisjointnessViolated when U ∩ V != ∅.
  VertexTerm property_r_witness(const std::vector<VertexTerm>& U,
                                const std::vector<VertexTerm>& V) const;

  // Limit-backend extras ----------------------------------------------------

  /// The constructive witness z = U (or z = {x} when U = ∅) placed at a fresh
  /// stage above U ∪ V; when gcd(l,|U|) != 1 the member set is padded to the
  /// least admissible superset. Limit backends only.
  virtual VertexTerm stage_witness(const std::vector<VertexTerm>& U,
                                   const std::vector<VertexTerm>& V) const;

  virtual uint64_t parameter_l() const;
  virtual bool countable_seed() const { return false; }
  virtual const FiniteGraph* seed_graph() const { return nullptr; }

 protected:
  explicit Backend(Kind k) : kind_(k) {}
  virtual bool adjacent_impl(const VertexTerm& x, const VertexTerm& y) const = 0;
  /// Appends at least one vertex to cache; false when exhausted.
  virtual bool generate_more(std::vector<VertexTerm>& cache) const = 0;

  Kind kind_;
  mutable std::mutex mu_;
  mutable std::vector<VertexTerm> cache_;
};

/// Packaged derive operation (spec: Delete(A) | Slice(U,V)).
struct DeriveOp {
  enum class Kind { Delete, Slice };
  Kind kind;
  std::vector<VertexTerm> A;  // Delete
  std::vector<VertexTerm> U, V;  // Slice
  static DeriveOp del(std::vector<VertexTerm> a);
  static DeriveOp slice(std::vector<VertexTerm> u, std::vector<VertexTerm> v);
};

BackendHandle derive_backend(const BackendHandle& b, const DeriveOp& op);

/// Parses `bit`, `limit:<seedfile>:<l>`, or `limitz:<l>` (countable edgeless
/// seed) backend spec strings.
BackendHandle parse_backend_spec(const std::string& spec);

}  // namespace rado

#endif
