#include "rado/vertex.hpp"

#include <algorithm>
#include <cstdlib>

#include "rado/errors.hpp"

namespace rado {

namespace {

size_t mix(size_t h, size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

VertexTerm VertexTerm::nat(uint64_t n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Nat;
  node->stage = 0;
  node->value = n;
  node->rank = n;
  node->hash = mix(0x17, static_cast<size_t>(n));
  return VertexTerm(std::move(node));
}

VertexTerm VertexTerm::base(uint64_t id) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Base;
  node->stage = 0;
  node->value = id;
  node->rank = id;
  node->hash = mix(0x29, static_cast<size_t>(id));
  return VertexTerm(std::move(node));
}

uint32_t min_stage(const std::vector<VertexTerm>& members) {
  uint32_t s = 0;
  for (const auto& m : members) s = std::max(s, m.stage());
  return s + 1;
}

VertexTerm VertexTerm::set(uint32_t stage, std::vector<VertexTerm> members) {
  if (members.empty()) throw InvalidInput("set term needs nonempty members");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (stage < min_stage(members))
    throw InvalidInput("set term stage must exceed all member stages");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Set;
  node->stage = stage;
  node->value = 0;
  uint64_t rank = stage;
  size_t h = mix(0x3b, stage);
  for (const auto& m : members) {
    rank = std::max(rank, m.rank());
    h = mix(h, m.hash());
  }
  node->rank = rank;
  node->hash = h;
  node->members = std::move(members);
  return VertexTerm(std::move(node));
}

VertexTerm VertexTerm::set(std::vector<VertexTerm> members) {
  if (members.empty()) throw InvalidInput("set term needs nonempty members");
  uint32_t s = min_stage(members);
  return set(s, std::move(members));
}

uint64_t VertexTerm::nat_value() const {
  if (!is_nat()) throw InvalidInput("not a Nat term");
  return node_->value;
}

uint64_t VertexTerm::base_id() const {
  if (!is_base()) throw InvalidInput("not a Base term");
  return node_->value;
}

const std::vector<VertexTerm>& VertexTerm::members() const {
  if (!is_set()) throw InvalidInput("not a Set term");
  return node_->members;
}

bool VertexTerm::contains_member(const VertexTerm& t) const {
  if (!is_set()) return false;
  const auto& ms = node_->members;
  return std::binary_search(ms.begin(), ms.end(), t);
}

int compare(const VertexTerm& a, const VertexTerm& b) {
  if (a.node_ == b.node_) return 0;
  const bool an = a.is_nat(), bn = b.is_nat();
  if (an != bn) throw InvalidInput("comparing Nat term with limit term");
  if (an) {
    if (a.node_->value != b.node_->value)
      return a.node_->value < b.node_->value ? -1 : 1;
    return 0;
  }
  if (a.stage() != b.stage()) return a.stage() < b.stage() ? -1 : 1;
  if (a.is_base()) {
    if (a.node_->value != b.node_->value)
      return a.node_->value < b.node_->value ? -1 : 1;
    return 0;
  }
  const auto& am = a.members();
  const auto& bm = b.members();
  if (am.size() != bm.size()) return am.size() < bm.size() ? -1 : 1;
  for (size_t i = 0; i < am.size(); ++i) {
    int c = compare(am[i], bm[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string VertexTerm::to_string() const {
  switch (kind()) {
    case Kind::Nat:
      return std::to_string(node_->value);
    case Kind::Base:
      return "b" + std::to_string(node_->value);
    case Kind::Set: {
      std::string out = "{";
      bool first = true;
      for (const auto& m : members()) {
        if (!first) out += ",";
        first = false;
        out += m.to_string();
      }
      out += "}";
      if (stage() != min_stage(members())) out += "@" + std::to_string(stage());
      return out;
    }
  }
  return {};
}

namespace {

VertexTerm parse_term(const std::string& s, size_t& pos);

uint64_t parse_uint(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw ParseError("expected integer at offset " + std::to_string(start) + " in '" + s + "'");
  return std::stoull(s.substr(start, pos - start));
}

VertexTerm parse_term(const std::string& s, size_t& pos) {
  if (pos >= s.size()) throw ParseError("unexpected end of vertex string '" + s + "'");
  char c = s[pos];
  if (c == 'b') {
    ++pos;
    return VertexTerm::base(parse_uint(s, pos));
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    return VertexTerm::nat(parse_uint(s, pos));
  }
  if (c == '{') {
    ++pos;
    std::vector<VertexTerm> members;
    if (pos < s.size() && s[pos] == '}')
      throw ParseError("set term needs nonempty members in '" + s + "'");
    while (true) {
      members.push_back(parse_term(s, pos));
      if (pos >= s.size()) throw ParseError("unterminated set term in '" + s + "'");
      if (s[pos] == ',') {
        ++pos;
        continue;
      }
      if (s[pos] == '}') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or '}' at offset " + std::to_string(pos) + " in '" + s + "'");
    }
    if (pos < s.size() && s[pos] == '@') {
      ++pos;
      uint64_t st = parse_uint(s, pos);
      return VertexTerm::set(static_cast<uint32_t>(st), std::move(members));
    }
    return VertexTerm::set(std::move(members));
  }
  throw ParseError("unexpected character '" + std::string(1, c) + "' in vertex string '" + s + "'");
}

}  // namespace

VertexTerm VertexTerm::parse(const std::string& text) {
  size_t pos = 0;
  VertexTerm t = parse_term(text, pos);
  if (pos != text.size())
    throw ParseError("trailing characters in vertex string '" + text + "'");
  return t;
}

}  // namespace rado
