#include "rado/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "rado/backend.hpp"
#include "rado/errors.hpp"

namespace rado {

Edge::Edge(VertexTerm a, VertexTerm b) : u(std::move(a)), v(std::move(b)) {
  if (u == v) throw InvalidInput("loop edge (" + u.to_string() + "," + v.to_string() + ")");
  if (v < u) std::swap(u, v);
}

FiniteGraph::FiniteGraph(std::vector<VertexTerm> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
  for (const auto& v : vertices_) {
    if (!vertex_set_.insert(v).second)
      throw InvalidInput("duplicate vertex " + v.to_string());
  }
  for (auto& e : edges) {
    if (!vertex_set_.count(e.u) || !vertex_set_.count(e.v))
      throw InvalidVertex("edge endpoint not a listed vertex: (" + e.u.to_string() +
                          "," + e.v.to_string() + ")");
    edges_.insert(e);
  }
}

bool FiniteGraph::has_vertex(const VertexTerm& v) const {
  return vertex_set_.count(v) > 0;
}

bool FiniteGraph::adjacent(const VertexTerm& a, const VertexTerm& b) const {
  if (a == b) return false;
  return edges_.count(Edge(a, b)) > 0;
}

bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
  return a.vertex_set_ == b.vertex_set_ && a.edges_ == b.edges_;
}

std::string FiniteGraph::to_dot() const {
  std::ostringstream out;
  out << "graph R {\n";
  out << "  // vertices:";
  for (const auto& v : vertices_) out << " " << v.to_string();
  out << "\n";
  for (const auto& v : vertices_) out << "  \"" << v.to_string() << "\";\n";
  for (const auto& e : edges_) {
    std::string us = e.u.to_string(), vs = e.v.to_string();
    if (vs < us) std::swap(us, vs);
    out << "  \"" << us << "\" -- \"" << vs << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string FiniteGraph::to_jsonl() const {
  // Isolated vertices first as {"v":...}, then edges as {"u":...,"v":...},
  // u-string < v-string, lines sorted.
  std::set<VertexTerm> isolated(vertex_set_);
  std::vector<std::pair<std::string, std::string>> lines;
  for (const auto& e : edges_) {
    isolated.erase(e.u);
    isolated.erase(e.v);
    std::string us = e.u.to_string(), vs = e.v.to_string();
    if (vs < us) std::swap(us, vs);
    lines.emplace_back(us, vs);
  }
  std::sort(lines.begin(), lines.end());
  std::vector<std::string> vlines;
  for (const auto& v : isolated) vlines.push_back(v.to_string());
  std::sort(vlines.begin(), vlines.end());

  std::ostringstream out;
  for (const auto& v : vlines) {
    nlohmann::json rec;
    rec["v"] = v;
    out << rec.dump() << "\n";
  }
  for (const auto& [us, vs] : lines) {
    nlohmann::json rec;
    rec["u"] = us;
    rec["v"] = vs;
    out << rec.dump() << "\n";
  }
  return out.str();
}

FiniteGraph FiniteGraph::from_jsonl(std::istream& in) {
  std::vector<VertexTerm> vertices;
  std::set<VertexTerm> seen;
  std::vector<Edge> edges;
  auto add_vertex = [&](const VertexTerm& t) {
    if (seen.insert(t).second) vertices.push_back(t);
  };
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!rec.is_object() || !rec.contains("v"))
      throw ParseError("line " + std::to_string(lineno) + ": expected {\"u\",\"v\"} or {\"v\"} record");
    VertexTerm v = VertexTerm::parse(rec.at("v").get<std::string>());
    if (rec.contains("u")) {
      VertexTerm u = VertexTerm::parse(rec.at("u").get<std::string>());
      add_vertex(u);
      add_vertex(v);
      edges.emplace_back(u, v);
    } else {
      add_vertex(v);
    }
  }
  return FiniteGraph(std::move(vertices), std::move(edges));
}

FiniteGraph FiniteGraph::from_jsonl_text(const std::string& text) {
  std::istringstream in(text);
  return from_jsonl(in);
}

PartialIso::PartialIso(const std::vector<std::pair<VertexTerm, VertexTerm>>& pairs) {
  for (const auto& [x, y] : pairs) insert(x, y);
}

const VertexTerm& PartialIso::image(const VertexTerm& x) const {
  auto it = fwd_.find(x);
  if (it == fwd_.end())
    throw InvalidInput(x.to_string() + " not in domain");
  return it->second;
}

const VertexTerm& PartialIso::preimage(const VertexTerm& y) const {
  auto it = bwd_.find(y);
  if (it == bwd_.end())
    throw InvalidInput(y.to_string() + " not in range");
  return it->second;
}

std::optional<VertexTerm> PartialIso::try_image(const VertexTerm& x) const {
  auto it = fwd_.find(x);
  if (it == fwd_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexTerm> PartialIso::try_preimage(const VertexTerm& y) const {
  auto it = bwd_.find(y);
  if (it == bwd_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexTerm> PartialIso::domain() const {
  std::vector<VertexTerm> out;
  out.reserve(fwd_.size());
  for (const auto& [x, y] : fwd_) out.push_back(x);
  return out;
}

std::vector<VertexTerm> PartialIso::range() const {
  std::vector<VertexTerm> out;
  out.reserve(bwd_.size());
  for (const auto& [y, x] : bwd_) out.push_back(y);
  return out;
}

void PartialIso::insert(const VertexTerm& x, const VertexTerm& y) {
  auto fit = fwd_.find(x);
  if (fit != fwd_.end()) {
    if (fit->second == y) return;
    throw InvalidPartialIso("domain vertex " + x.to_string() + " mapped twice");
  }
  auto bit = bwd_.find(y);
  if (bit != bwd_.end())
    throw InvalidPartialIso("range vertex " + y.to_string() + " hit twice");
  fwd_.emplace(x, y);
  bwd_.emplace(y, x);
}

bool PartialIso::extends(const PartialIso& other) const {
  for (const auto& [x, y] : other.fwd_) {
    auto it = fwd_.find(x);
    if (it == fwd_.end() || it->second != y) return false;
  }
  return true;
}

std::string IsoViolation::describe() const {
  if (kind == Kind::Injectivity)
    return "injectivity violation at (" + x1.to_string() + "," + x2.to_string() + ")";
  return "adjacency mismatch on domain pair (" + x1.to_string() + "," + x2.to_string() + ")";
}

FiniteGraph induced_subgraph(const std::vector<VertexTerm>& window,
                             const BackendHandle& backend) {
  std::set<VertexTerm> seen;
  for (const auto& v : window) {
    backend->check_vertex(v);
    if (!seen.insert(v).second)
      throw InvalidInput("window vertices must be pairwise distinct: " + v.to_string());
  }
  std::vector<Edge> edges;
  for (size_t i = 0; i < window.size(); ++i)
    for (size_t j = i + 1; j < window.size(); ++j)
      if (backend->adjacent(window[i], window[j]))
        edges.emplace_back(window[i], window[j]);
  return FiniteGraph(window, std::move(edges));
}

IsoCheck validate_partial_iso(
    const std::vector<std::pair<VertexTerm, VertexTerm>>& pairs,
    const BackendHandle& backend) {
  // Injectivity first, then adjacency both ways, scanning domain pairs in
  // canonical order so the first reported violation is deterministic.
  std::map<VertexTerm, VertexTerm> fwd;
  std::map<VertexTerm, VertexTerm> bwd;
  for (const auto& [x, y] : pairs) {
    backend->check_vertex(x);
    backend->check_vertex(y);
    auto fit = fwd.find(x);
    if (fit != fwd.end() && fit->second != y)
      return {false, IsoViolation{IsoViolation::Kind::Injectivity, x, x}};
    auto bit = bwd.find(y);
    if (bit != bwd.end() && bit->second != x)
      return {false, IsoViolation{IsoViolation::Kind::Injectivity, bit->second, x}};
    fwd.emplace(x, y);
    bwd.emplace(y, x);
  }
  std::vector<std::pair<VertexTerm, VertexTerm>> sorted(fwd.begin(), fwd.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      bool d = backend->adjacent(sorted[i].first, sorted[j].first);
      bool r = backend->adjacent(sorted[i].second, sorted[j].second);
      if (d != r)
        return {false, IsoViolation{IsoViolation::Kind::Adjacency, sorted[i].first,
                                    sorted[j].first}};
    }
  }
  return {true, std::nullopt};
}

IsoCheck validate_partial_iso(const PartialIso& phi, const BackendHandle& backend) {
  std::vector<std::pair<VertexTerm, VertexTerm>> pairs(phi.pairs().begin(),
                                                       phi.pairs().end());
  return validate_partial_iso(pairs, backend);
}

PartialIso groupoid_compose(const PartialIso& phi, const PartialIso& psi) {
  PartialIso out;
  for (const auto& [x, y] : psi.pairs()) {
    if (auto z = phi.try_image(y)) out.insert(x, *z);
  }
  return out;
}

PartialIso groupoid_invert(const PartialIso& phi) {
  PartialIso out;
  for (const auto& [x, y] : phi.pairs()) out.insert(y, x);
  return out;
}

bool is_open_morphism(const FiniteGraph& g1, const FiniteGraph& g2,
                      const std::map<VertexTerm, VertexTerm>& map) {
  for (const auto& v : g1.vertices()) {
    auto it = map.find(v);
    if (it == map.end())
      throw InvalidInput("map not total on V(G1): missing " + v.to_string());
    if (!g2.has_vertex(it->second))
      throw InvalidVertex("image " + it->second.to_string() + " outside V(G2)");
  }
  const auto& vs = g1.vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      bool a = g1.adjacent(vs[i], vs[j]);
      bool b = g2.adjacent(map.at(vs[i]), map.at(vs[j]));
      if (a != b) return false;
    }
  }
  return true;
}

}  // namespace rado
