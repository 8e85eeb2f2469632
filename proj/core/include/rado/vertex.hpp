#ifndef RADO_VERTEX_HPP
#define RADO_VERTEX_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rado {

/// A vertex of a Rado-graph backend.
///
/// Three shapes:
///  - Nat(n): a natural number, vertex of the BIT model.
///  - Base(i): the i-th vertex of the seed graph of an inductive-limit model.
///  - Set(stage, members): the vertex added at `stage` for the finite member
///    set `members`. Member stages are strictly below `stage`; the same member
///    set re-appears as a fresh vertex at every later stage, so the stage is
///    part of the identity of the term.
///
/// Terms are immutable and cheap to copy (shared structure).
class VertexTerm {
 public:
  enum class Kind : uint8_t { Nat, Base, Set };

  VertexTerm() = delete;

  static VertexTerm nat(uint64_t n);
  static VertexTerm base(uint64_t id);
  /// Members are sorted and deduplicated; throws InvalidInput when empty or
  /// when some member stage is >= stage.
  static VertexTerm set(uint32_t stage, std::vector<VertexTerm> members);
  /// Set term at the least admissible stage (1 + max member stage).
  static VertexTerm set(std::vector<VertexTerm> members);

  Kind kind() const { return node_->kind; }
  bool is_nat() const { return kind() == Kind::Nat; }
  bool is_base() const { return kind() == Kind::Base; }
  bool is_set() const { return kind() == Kind::Set; }

  uint64_t nat_value() const;
  uint64_t base_id() const;
  const std::vector<VertexTerm>& members() const;

  /// 0 for Nat/Base, the explicit stage for Set terms.
  uint32_t stage() const { return node_->stage; }
  /// max(stage, base ids and ranks involved); drives enumeration over
  /// infinite seeds.
  uint64_t rank() const { return node_->rank; }

  bool contains_member(const VertexTerm& t) const;

  /// Total canonical order: Nat by value; otherwise stage-major, then
  /// Base-by-id, then Set by (size, lexicographic members).
  friend int compare(const VertexTerm& a, const VertexTerm& b);
  friend bool operator==(const VertexTerm& a, const VertexTerm& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const VertexTerm& a, const VertexTerm& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const VertexTerm& a, const VertexTerm& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const VertexTerm& a, const VertexTerm& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const VertexTerm& a, const VertexTerm& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const VertexTerm& a, const VertexTerm& b) {
    return compare(a, b) >= 0;
  }

  size_t hash() const { return node_->hash; }

  /// Grammar: decimal integer (Nat), `b<int>` (Base), `{t1,t2,...}` with
  /// sorted members (Set at minimal stage), `{t1,...}@s` (Set at stage s).
  std::string to_string() const;
  static VertexTerm parse(const std::string& text);

 private:
  struct Node {
    Kind kind;
    uint32_t stage;
    uint64_t value;  // Nat value or Base id
    uint64_t rank;
    size_t hash;
    std::vector<VertexTerm> members;
  };
  explicit VertexTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct VertexTermHash {
  size_t operator()(const VertexTerm& t) const { return t.hash(); }
};

/// 1 + max member stage; the least stage at which this member set occurs.
uint32_t min_stage(const std::vector<VertexTerm>& members);

}  // namespace rado

#endif
