#include "rado/backend.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rado/errors.hpp"

namespace rado {

namespace {

bool next_combination(std::vector<size_t>& comb, size_t n) {
  // Lexicographically next k-combination of {0..n-1}; false when done.
  size_t k = comb.size();
  if (k == 0 || n < k) return false;
  size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] != i + n - k) {
      ++comb[i];
      for (size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::set<VertexTerm> as_set(const std::vector<VertexTerm>& v) {
  return std::set<VertexTerm>(v.begin(), v.end());
}

}  // namespace

void Backend::check_vertex(const VertexTerm& t) const {
  if (!valid_vertex(t))
    throw InvalidVertex(t.to_string() + " is not a vertex of " + describe());
}

bool Backend::adjacent(const VertexTerm& x, const VertexTerm& y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw LoopQuery("adjacency query on equal vertices " + x.to_string());
  return adjacent_impl(x, y);
}

std::vector<VertexTerm> Backend::enumerate(size_t n) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (cache_.size() < n) {
    if (!generate_more(cache_))
      throw ExhaustedBackend(describe() + " has fewer than " + std::to_string(n) +
                             " vertices");
  }
  return std::vector<VertexTerm>(cache_.begin(), cache_.begin() + n);
}

VertexTerm Backend::vertex_at(size_t i) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (cache_.size() <= i) {
    if (!generate_more(cache_))
      throw ExhaustedBackend(describe() + " exhausted at index " + std::to_string(i));
  }
  return cache_[i];
}

bool Backend::canonical_less(const VertexTerm& a, const VertexTerm& b) const {
  return a < b;
}

VertexTerm Backend::property_r_witness(const std::vector<VertexTerm>& U,
                                       const std::vector<VertexTerm>& V) const {
  auto us = as_set(U);
  for (const auto& v : V)
    if (us.count(v))
      throw DisjointnessViolated("U and V share " + v.to_string());
  SliceQuery q;
  q.U = U;
  q.V = V;
  return least_witness(q);
}

VertexTerm Backend::stage_witness(const std::vector<VertexTerm>&,
                                  const std::vector<VertexTerm>&) const {
  throw InvalidInput("stage_witness is only defined on limit backends");
}

uint64_t Backend::parameter_l() const {
  throw InvalidInput("parameter l is only defined on limit backends");
}

// ---------------------------------------------------------------------------
// BIT model
// ---------------------------------------------------------------------------

namespace {

bool bit_adjacent(uint64_t x, uint64_t y) {
  uint64_t m = std::min(x, y), M = std::max(x, y);
  if (m >= 64) return false;  // bit m of M is 0 for all M < 2^64
  return (M >> m) & 1u;
}

class BitBackend final : public Backend {
 public:
  BitBackend() : Backend(Kind::Bit) {}

  std::string describe() const override { return "bit"; }

  bool valid_vertex(const VertexTerm& t) const override { return t.is_nat(); }

  VertexTerm least_witness(const SliceQuery& q) const override {
    for (const auto& t : q.U) check_vertex(t);
    for (const auto& t : q.V) check_vertex(t);
    std::set<uint64_t> forbidden;
    uint64_t top = 0;
    bool have_top = false;
    std::set<uint64_t> ubits, vbits;
    for (const auto& t : q.U) {
      uint64_t n = t.nat_value();
      forbidden.insert(n);
      ubits.insert(n);
      top = have_top ? std::max(top, n) : n;
      have_top = true;
    }
    for (const auto& t : q.V) {
      uint64_t n = t.nat_value();
      forbidden.insert(n);
      vbits.insert(n);
      top = have_top ? std::max(top, n) : n;
      have_top = true;
    }
    std::set<uint64_t> excl;
    for (const auto& t : q.exclude) excl.insert(t.nat_value());

    auto ok = [&](uint64_t z) {
      if (forbidden.count(z) || excl.count(z)) return false;
      for (uint64_t u : ubits)
        if (z == u || !bit_adjacent(z, u)) return false;
      for (uint64_t v : vbits)
        if (z == v || bit_adjacent(z, v)) return false;
      return true;
    };

    // Candidates at or below the window maximum need full oracle checks.
    if (have_top) {
      for (uint64_t z = 0; z <= top; ++z)
        if (ok(z)) return VertexTerm::nat(z);
    }

    // Above the window maximum the constraints are a plain bit pattern.
    uint64_t base = 0;
    for (uint64_t u : ubits) {
      if (u >= 63)
        throw Error("bit witness would exceed the 64-bit vertex range");
      base |= (1ull << u);
    }
    std::vector<uint64_t> free_bits;
    for (uint64_t p = 0; p < 63 && free_bits.size() < 40; ++p)
      if (!ubits.count(p) && !vbits.count(p)) free_bits.push_back(p);
    for (uint64_t x = 0;; ++x) {
      if (x >= (1ull << free_bits.size()))
        throw Error("bit witness search exceeded pattern range");
      uint64_t z = base;
      for (size_t i = 0; i < free_bits.size(); ++i)
        if ((x >> i) & 1u) z |= (1ull << free_bits[i]);
      if (have_top && z <= top) continue;
      if (excl.count(z)) continue;
      return VertexTerm::nat(z);
    }
  }

 protected:
  bool adjacent_impl(const VertexTerm& x, const VertexTerm& y) const override {
    return bit_adjacent(x.nat_value(), y.nat_value());
  }

  bool generate_more(std::vector<VertexTerm>& cache) const override {
    cache.push_back(VertexTerm::nat(cache.size()));
    return true;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Inductive-limit model
// ---------------------------------------------------------------------------

namespace {

class LimitBackend final : public Backend {
 public:
  LimitBackend(FiniteGraph seed, uint64_t l)
      : Backend(Kind::Limit), countable_(false), seed_(std::move(seed)), l_(l) {
    if (l_ == 0) throw InvalidInput("parameter l must be >= 1");
    if (seed_.vertex_count() == 0) throw EmptyGraph("limit seed must be nonempty");
    for (size_t i = 0; i < seed_.vertices().size(); ++i) {
      const auto& v = seed_.vertices()[i];
      if (!v.is_base() || v.base_id() != i)
        throw InvalidInput("limit seed vertices must be b0..b(m-1) in order");
    }
  }

  explicit LimitBackend(uint64_t l)
      : Backend(Kind::Limit), countable_(true), l_(l) {
    if (l_ == 0) throw InvalidInput("parameter l must be >= 1");
  }

  std::string describe() const override {
    std::ostringstream out;
    if (countable_)
      out << "limitz(l=" << l_ << ")";
    else
      out << "limit(seed=" << seed_.vertex_count() << " vertices, l=" << l_ << ")";
    return out.str();
  }

  uint64_t parameter_l() const override { return l_; }
  bool countable_seed() const override { return countable_; }
  const FiniteGraph* seed_graph() const override {
    return countable_ ? nullptr : &seed_;
  }

  bool valid_vertex(const VertexTerm& t) const override {
    switch (t.kind()) {
      case VertexTerm::Kind::Nat:
        return false;
      case VertexTerm::Kind::Base:
        return countable_ || t.base_id() < seed_.vertex_count();
      case VertexTerm::Kind::Set: {
        if (std::gcd(l_, static_cast<uint64_t>(t.members().size())) != 1) return false;
        for (const auto& m : t.members())
          if (!valid_vertex(m)) return false;
        return true;
      }
    }
    return false;
  }

  bool canonical_less(const VertexTerm& a, const VertexTerm& b) const override {
    if (countable_ && a.rank() != b.rank()) return a.rank() < b.rank();
    return a < b;
  }

  VertexTerm least_witness(const SliceQuery& q) const override;

  VertexTerm stage_witness(const std::vector<VertexTerm>& U,
                           const std::vector<VertexTerm>& V) const override;

 protected:
  bool adjacent_impl(const VertexTerm& x, const VertexTerm& y) const override {
    if (x.is_base() && y.is_base())
      return countable_ ? false : seed_.adjacent(x, y);
    if (x.is_set() && x.contains_member(y)) return true;
    if (y.is_set() && y.contains_member(x)) return true;
    return false;
  }

  bool generate_more(std::vector<VertexTerm>& cache) const override;

 private:
  bool admissible_size(size_t k) const {
    return std::gcd(l_, static_cast<uint64_t>(k)) == 1;
  }

  // Terms with rank <= r (ignored when r == NO_RANK) and stage < s, excluding
  // `avoid`, in structural canonical order, capped.
  static constexpr uint64_t NO_RANK = ~0ull;
  std::vector<VertexTerm> member_pool(uint64_t r, uint32_t s,
                                      const std::set<VertexTerm>& avoid,
                                      size_t cap) const;

  bool countable_;
  FiniteGraph seed_;
  uint64_t l_;

  // Enumeration generator state, guarded by mu_.
  struct Gen {
    bool primed = false;
    uint64_t rank = 0;     // countable only
    uint32_t stage = 0;    // current stage (sub-phase)
    size_t seed_next = 0;  // finite: next seed vertex to emit
    size_t size = 0;       // current member-set size
    std::vector<size_t> comb;   // indices into pool
    std::vector<VertexTerm> pool;
    bool pool_ready = false;
  };
  mutable Gen gen_;

  void start_frame_pool(const std::vector<VertexTerm>& cache) const;
  bool emit_from_combinations(std::vector<VertexTerm>& cache) const;
};

void LimitBackend::start_frame_pool(const std::vector<VertexTerm>& cache) const {
  gen_.pool.clear();
  if (countable_) {
    // Terms generated so far with rank <= gen_.rank and stage < gen_.stage;
    // previous boxes and earlier sub-phases of this box are complete.
    for (const auto& t : cache)
      if (t.rank() <= gen_.rank && t.stage() < gen_.stage) gen_.pool.push_back(t);
  } else {
    for (const auto& t : cache)
      if (t.stage() < gen_.stage) gen_.pool.push_back(t);
  }
  gen_.size = 0;
  gen_.comb.clear();
  gen_.pool_ready = true;
}

bool LimitBackend::emit_from_combinations(std::vector<VertexTerm>& cache) const {
  // Advances (size, combination) within the current frame; emits at most one
  // term per call. Returns false when the frame is finished.
  while (true) {
    if (gen_.size == 0 || gen_.comb.empty()) {
      ++gen_.size;
      if (gen_.size > gen_.pool.size()) return false;
      if (!admissible_size(gen_.size)) {
        gen_.comb.clear();
        continue;
      }
      gen_.comb.resize(gen_.size);
      for (size_t i = 0; i < gen_.size; ++i) gen_.comb[i] = i;
    } else {
      if (!next_combination(gen_.comb, gen_.pool.size())) {
        gen_.comb.clear();
        continue;
      }
    }
    std::vector<VertexTerm> members;
    members.reserve(gen_.size);
    for (size_t idx : gen_.comb) members.push_back(gen_.pool[idx]);
    if (countable_ && gen_.stage < gen_.rank) {
      // Sub-phase stage < rank: the member set must reach rank exactly.
      uint64_t mr = 0;
      for (const auto& m : members) mr = std::max(mr, m.rank());
      if (mr != gen_.rank) continue;
    }
    cache.push_back(VertexTerm::set(gen_.stage, std::move(members)));
    return true;
  }
}

bool LimitBackend::generate_more(std::vector<VertexTerm>& cache) const {
  if (!gen_.primed) {
    gen_.primed = true;
    gen_.rank = 0;
    gen_.stage = 0;
    gen_.seed_next = 0;
    gen_.pool_ready = false;
  }
  while (true) {
    if (!countable_) {
      if (gen_.stage == 0) {
        if (gen_.seed_next < seed_.vertex_count()) {
          cache.push_back(seed_.vertices()[gen_.seed_next++]);
          return true;
        }
        gen_.stage = 1;
        gen_.pool_ready = false;
      }
      if (!gen_.pool_ready) start_frame_pool(cache);
      if (emit_from_combinations(cache)) return true;
      ++gen_.stage;
      gen_.pool_ready = false;
      continue;
    }
    // Countable seed: boxes by rank; within box r: Base(r), then stages 1..r.
    if (gen_.stage == 0) {
      cache.push_back(VertexTerm::base(gen_.rank));
      gen_.stage = 1;
      gen_.pool_ready = false;
      if (gen_.rank == 0) {
        ++gen_.rank;
        gen_.stage = 0;
      }
      return true;
    }
    if (gen_.stage > gen_.rank) {
      ++gen_.rank;
      gen_.stage = 0;
      gen_.pool_ready = false;
      continue;
    }
    if (!gen_.pool_ready) start_frame_pool(cache);
    if (emit_from_combinations(cache)) return true;
    ++gen_.stage;
    gen_.pool_ready = false;
  }
}

std::vector<VertexTerm> LimitBackend::member_pool(uint64_t r, uint32_t s,
                                                  const std::set<VertexTerm>& avoid,
                                                  size_t cap) const {
  // Stage-by-stage construction, independent of the enumeration cache.
  std::vector<VertexTerm> pool;
  size_t base_count;
  if (countable_)
    base_count = (r == NO_RANK) ? cap : static_cast<size_t>(std::min<uint64_t>(r + 1, cap));
  else
    base_count = seed_.vertex_count();
  for (size_t i = 0; i < base_count && pool.size() < cap; ++i) {
    VertexTerm b = VertexTerm::base(i);
    if (!avoid.count(b)) pool.push_back(b);
  }
  std::vector<VertexTerm> prev = pool;  // stage < current, any rank filter applied
  for (uint32_t st = 1; st < s; ++st) {
    std::vector<VertexTerm> fresh;
    size_t n = prev.size();
    for (size_t k = 1; k <= n && pool.size() + fresh.size() < cap; ++k) {
      if (!admissible_size(k)) continue;
      std::vector<size_t> comb(k);
      for (size_t i = 0; i < k; ++i) comb[i] = i;
      while (true) {
        std::vector<VertexTerm> members;
        members.reserve(k);
        for (size_t idx : comb) members.push_back(prev[idx]);
        VertexTerm t = VertexTerm::set(st, std::move(members));
        if ((r == NO_RANK || t.rank() <= r) && !avoid.count(t)) {
          pool.push_back(t);
          fresh.push_back(t);
          if (pool.size() >= cap) break;
        }
        if (!next_combination(comb, n)) break;
      }
      if (pool.size() >= cap) break;
    }
    prev.insert(prev.end(), fresh.begin(), fresh.end());
    std::sort(prev.begin(), prev.end());
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

VertexTerm LimitBackend::least_witness(const SliceQuery& q) const {
  for (const auto& t : q.U) check_vertex(t);
  for (const auto& t : q.V) check_vertex(t);
  auto setU = as_set(q.U);
  auto setV = as_set(q.V);
  std::set<VertexTerm> member_of_v;  // z must avoid being a member of any v
  for (const auto& v : q.V)
    if (v.is_set())
      for (const auto& m : v.members()) member_of_v.insert(m);

  auto ok = [&](const VertexTerm& z) {
    if (!valid_vertex(z)) return false;
    if (setU.count(z) || setV.count(z) || q.exclude.count(z)) return false;
    for (const auto& u : q.U)
      if (z == u || !adjacent_impl(z, u)) return false;
    for (const auto& v : q.V)
      if (z == v || adjacent_impl(z, v)) return false;
    return true;
  };

  std::optional<VertexTerm> best;
  auto consider = [&](const VertexTerm& z) {
    if (ok(z) && (!best || canonical_less(z, *best))) best = z;
  };

  // Family (a): seed-level candidates.
  if (!countable_) {
    for (const auto& b : seed_.vertices()) consider(b);
  } else {
    bool u_all_sets = true;
    for (const auto& u : q.U)
      if (!u.is_set()) u_all_sets = false;
    if (q.U.empty()) {
      // Least base id avoiding V-membership and exclusions.
      std::set<uint64_t> bad;
      for (const auto& t : member_of_v)
        if (t.is_base()) bad.insert(t.base_id());
      for (const auto& t : q.exclude)
        if (t.is_base()) bad.insert(t.base_id());
      for (const auto& t : q.V)
        if (t.is_base()) bad.insert(t.base_id());
      uint64_t id = 0;
      while (bad.count(id)) ++id;
      consider(VertexTerm::base(id));
    } else if (u_all_sets) {
      for (const auto& m : q.U.front().members())
        if (m.is_base()) consider(m);
    }
  }

  // Family (b): z a member of some u in U.
  for (const auto& u : q.U)
    if (u.is_set())
      for (const auto& m : u.members()) consider(m);

  // Family (c): z = Set(s, U ∪ E). The first candidate in canonical order
  // that passes is the family minimum.
  uint32_t s_min = q.U.empty() ? 1 : min_stage(q.U);
  uint64_t rU = 0;
  for (const auto& u : q.U) rU = std::max(rU, u.rank());

  std::optional<VertexTerm> c_hit;
  if (!q.U.empty() && admissible_size(q.U.size())) {
    // E = ∅ is minimal when admissible; bump the stage past exclusions.
    for (uint32_t s = s_min; s < s_min + 64 && !c_hit; ++s) {
      VertexTerm z = VertexTerm::set(s, q.U);
      if (ok(z)) c_hit = z;
      if (c_hit) break;
      // A later stage only loses to same-rank smaller candidates when E != ∅
      // could fit at the earlier stage; handled by the general sweep below.
      break;
    }
  }
  if (!c_hit) {
    std::set<VertexTerm> avoid(setU);
    for (const auto& v : setV) avoid.insert(v);
    const size_t pool_cap = 512;
    uint64_t r0 = countable_ ? std::max<uint64_t>(s_min, rU) : 0;
    uint64_t r_hi = countable_ ? r0 + 64 : 0;
    for (uint64_t r = r0; r <= r_hi && !c_hit; ++r) {
      uint32_t s_hi = countable_ ? static_cast<uint32_t>(std::min<uint64_t>(r, s_min + 64))
                                 : s_min + 64;
      for (uint32_t s = s_min; s <= s_hi && !c_hit; ++s) {
        auto pool = member_pool(countable_ ? r : NO_RANK, s, avoid, pool_cap);
        size_t n = pool.size();
        size_t need_min = q.U.empty() ? 1 : q.U.size();
        for (size_t k = std::max<size_t>(need_min, 1); k <= need_min + n && !c_hit; ++k) {
          if (!admissible_size(k)) continue;
          size_t e = k - q.U.size();
          if (e > n) break;
          if (e == 0) {
            VertexTerm z = VertexTerm::set(s, q.U);
            if (countable_ && z.rank() != r) continue;
            if (ok(z)) c_hit = z;
            continue;
          }
          std::vector<size_t> comb(e);
          for (size_t i = 0; i < e; ++i) comb[i] = i;
          while (!c_hit) {
            std::vector<VertexTerm> members = q.U;
            for (size_t idx : comb) members.push_back(pool[idx]);
            VertexTerm z = VertexTerm::set(s, std::move(members));
            bool rank_ok = !countable_ || z.rank() == r;
            if (rank_ok && ok(z)) {
              c_hit = z;
              break;
            }
            if (!next_combination(comb, n)) break;
          }
        }
      }
    }
  }
  if (c_hit && (!best || canonical_less(*c_hit, *best))) best = c_hit;

  if (!best)
    throw Error("least_witness failed on " + describe() +
                " (search space exhausted; should be unreachable)");
  return *best;
}

VertexTerm LimitBackend::stage_witness(const std::vector<VertexTerm>& U,
                                       const std::vector<VertexTerm>& V) const {
  for (const auto& t : U) check_vertex(t);
  for (const auto& t : V) check_vertex(t);
  auto setU = as_set(U);
  auto setV = as_set(V);
  for (const auto& v : V)
    if (setU.count(v)) throw DisjointnessViolated("U and V share " + v.to_string());

  std::vector<VertexTerm> members(setU.begin(), setU.end());
  if (members.empty()) {
    // z = {x} for the least vertex x outside V.
    for (size_t i = 0;; ++i) {
      VertexTerm y = vertex_at(i);
      if (!setV.count(y)) {
        members.push_back(y);
        break;
      }
    }
  }
  // Pad to the least admissible superset when gcd(l,|U|) != 1.
  size_t i = 0;
  while (!admissible_size(members.size())) {
    VertexTerm y = vertex_at(i++);
    if (setU.count(y) || setV.count(y)) continue;
    if (std::find(members.begin(), members.end(), y) != members.end()) continue;
    members.push_back(y);
  }
  uint32_t s = 1;
  for (const auto& t : members) s = std::max(s, t.stage() + 1);
  for (const auto& t : V) s = std::max(s, t.stage() + 1);
  return VertexTerm::set(s, std::move(members));
}

// ---------------------------------------------------------------------------
// Derived backends: Restriction and Slice
// ---------------------------------------------------------------------------

class DerivedBackend : public Backend {
 public:
  DerivedBackend(Kind k, BackendHandle parent)
      : Backend(k), parent_(std::move(parent)) {}

  bool canonical_less(const VertexTerm& a, const VertexTerm& b) const override {
    return parent_->canonical_less(a, b);
  }

  uint64_t parameter_l() const override { return parent_->parameter_l(); }

  VertexTerm least_witness(const SliceQuery& q) const override {
    SliceQuery folded = q;
    fold_query(folded);
    return parent_->least_witness(folded);
  }

 protected:
  virtual void fold_query(SliceQuery& q) const = 0;

  bool adjacent_impl(const VertexTerm& x, const VertexTerm& y) const override {
    return parent_->adjacent(x, y);
  }

  bool generate_more(std::vector<VertexTerm>& cache) const override {
    while (true) {
      VertexTerm t = parent_->vertex_at(scan_next_++);
      if (valid_vertex(t)) {
        cache.push_back(t);
        return true;
      }
    }
  }

  BackendHandle parent_;
  mutable size_t scan_next_ = 0;
};

class RestrictionBackend final : public DerivedBackend {
 public:
  RestrictionBackend(BackendHandle parent, std::vector<VertexTerm> deleted)
      : DerivedBackend(Kind::Restriction, std::move(parent)),
        deleted_(deleted.begin(), deleted.end()) {
    for (const auto& t : deleted_) parent_->check_vertex(t);
  }

  std::string describe() const override {
    return parent_->describe() + " minus " + std::to_string(deleted_.size()) +
           " vertices";
  }

  bool valid_vertex(const VertexTerm& t) const override {
    return parent_->valid_vertex(t) && !deleted_.count(t);
  }

 protected:
  void fold_query(SliceQuery& q) const override {
    for (const auto& t : deleted_) q.exclude.insert(t);
  }

 private:
  std::set<VertexTerm> deleted_;
};

class SliceBackend final : public DerivedBackend {
 public:
  SliceBackend(BackendHandle parent, std::vector<VertexTerm> U,
               std::vector<VertexTerm> V)
      : DerivedBackend(Kind::Slice, std::move(parent)), U_(std::move(U)), V_(std::move(V)) {
    auto us = as_set(U_);
    for (const auto& t : U_) parent_->check_vertex(t);
    for (const auto& t : V_) {
      parent_->check_vertex(t);
      if (us.count(t)) throw DisjointnessViolated("slice U and V share " + t.to_string());
    }
  }

  std::string describe() const override {
    return parent_->describe() + " slice (|U|=" + std::to_string(U_.size()) +
           ",|V|=" + std::to_string(V_.size()) + ")";
  }

  bool valid_vertex(const VertexTerm& t) const override {
    if (!parent_->valid_vertex(t)) return false;
    for (const auto& u : U_)
      if (t == u || !parent_->adjacent(t, u)) return false;
    for (const auto& v : V_)
      if (t == v || parent_->adjacent(t, v)) return false;
    return true;
  }

 protected:
  void fold_query(SliceQuery& q) const override {
    q.U.insert(q.U.end(), U_.begin(), U_.end());
    q.V.insert(q.V.end(), V_.begin(), V_.end());
  }

 private:
  std::vector<VertexTerm> U_, V_;
};

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

BackendHandle Backend::bit() { return std::make_shared<BitBackend>(); }

BackendHandle Backend::limit(FiniteGraph seed, uint64_t l) {
  return std::make_shared<LimitBackend>(std::move(seed), l);
}

BackendHandle Backend::limit_countable(uint64_t l) {
  return std::make_shared<LimitBackend>(l);
}

BackendHandle Backend::restrict_away(std::vector<VertexTerm> deleted) const {
  return std::make_shared<RestrictionBackend>(shared_from_this(), std::move(deleted));
}

BackendHandle Backend::slice(std::vector<VertexTerm> U,
                             std::vector<VertexTerm> V) const {
  return std::make_shared<SliceBackend>(shared_from_this(), std::move(U), std::move(V));
}

DeriveOp DeriveOp::del(std::vector<VertexTerm> a) {
  DeriveOp op;
  op.kind = Kind::Delete;
  op.A = std::move(a);
  return op;
}

DeriveOp DeriveOp::slice(std::vector<VertexTerm> u, std::vector<VertexTerm> v) {
  DeriveOp op;
  op.kind = Kind::Slice;
  op.U = std::move(u);
  op.V = std::move(v);
  return op;
}

BackendHandle derive_backend(const BackendHandle& b, const DeriveOp& op) {
  if (op.kind == DeriveOp::Kind::Delete) return b->restrict_away(op.A);
  return b->slice(op.U, op.V);
}

BackendHandle parse_backend_spec(const std::string& spec) {
  if (spec == "bit") return Backend::bit();
  if (spec.rfind("limitz:", 0) == 0) {
    uint64_t l = std::stoull(spec.substr(7));
    return Backend::limit_countable(l);
  }
  if (spec.rfind("limit:", 0) == 0) {
    size_t colon = spec.rfind(':');
    if (colon == 5) throw ParseError("limit spec needs limit:<seedfile>:<l>");
    std::string file = spec.substr(6, colon - 6);
    uint64_t l = std::stoull(spec.substr(colon + 1));
    std::ifstream in(file);
    if (!in) throw IOError("cannot open seed file " + file);
    FiniteGraph seed = FiniteGraph::from_jsonl(in);
    return Backend::limit(std::move(seed), l);
  }
  throw ParseError("unknown backend spec '" + spec + "'");
}

}  // namespace rado
