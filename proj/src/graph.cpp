#include "dapsp/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <tuple>

namespace dapsp {

namespace {

void insert_sorted(std::vector<Edge>& list, NodeId to, Weight w) {
  auto it = std::lower_bound(list.begin(), list.end(), to,
                             [](const Edge& e, NodeId v) { return e.to < v; });
  if (it != list.end() && it->to == to) {
    it->w = std::min(it->w, w);  // parallel edges collapse to minimum
  } else {
    list.insert(it, Edge{to, w});
  }
}

bool erase_sorted(std::vector<Edge>& list, NodeId to) {
  auto it = std::lower_bound(list.begin(), list.end(), to,
                             [](const Edge& e, NodeId v) { return e.to < v; });
  if (it == list.end() || it->to != to) return false;
  list.erase(it);
  return true;
}

}  // namespace

void GraphSnapshot::add_edge_min(NodeId u, NodeId v, Weight w) {
  std::size_t before = out_[u].size();
  insert_sorted(out_[u], v, w);
  insert_sorted(in_[v], u, w);
  if (out_[u].size() != before) ++edge_count_;
  // A parallel edge may lower the stored weight on one side only if lists
  // got out of sync; keep both at the collapsed minimum.
  Weight wu = edge_weight(u, v);
  for (auto& e : in_[v])
    if (e.to == u) e.w = wu;
}

GraphSnapshot GraphSnapshot::from_edges(
    std::size_t n, const std::vector<std::tuple<NodeId, NodeId, Weight>>& edges) {
  GraphSnapshot g;
  g.out_.resize(n);
  g.in_.resize(n);
  g.alive_.assign(n, 1);
  g.ever_.assign(n, 1);
  g.alive_count_ = n;
  for (const auto& [u, v, w] : edges) {
    if (u >= n || v >= n)
      throw Error(Errc::DanglingEndpoint, "edge endpoint out of range");
    if (u == v && w < 0)
      throw Error(Errc::MalformedInput, "negative self-loop");
    g.add_edge_min(u, v, w);
  }
  g.validate_overflow();
  return g;
}

void GraphSnapshot::validate_overflow() const {
  Weight maxw = max_abs_weight();
  if (maxw == 0) return;
  Weight n = static_cast<Weight>(capacity());
  if (n > 0 && maxw > kInf / 4 / n)
    throw Error(Errc::OverflowRisk, "n * max|w| exceeds headroom");
}

Weight GraphSnapshot::edge_weight(NodeId u, NodeId v) const {
  if (u >= out_.size()) return kInf;
  const auto& list = out_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Edge& e, NodeId x) { return e.to < x; });
  if (it != list.end() && it->to == v) return it->w;
  return kInf;
}

Weight GraphSnapshot::max_abs_weight() const {
  Weight m = 0;
  for (NodeId u = 0; u < capacity(); ++u)
    for (const Edge& e : out_[u]) m = std::max(m, e.w < 0 ? -e.w : e.w);
  return m;
}

bool GraphSnapshot::has_negative_weight() const {
  for (NodeId u = 0; u < capacity(); ++u)
    for (const Edge& e : out_[u])
      if (e.w < 0) return true;
  return false;
}

GraphSnapshot GraphSnapshot::apply(const UpdateEvent& e) const {
  GraphSnapshot g = *this;
  if (e.kind == UpdateEvent::Kind::DeleteNode) {
    if (!g.alive(e.node)) throw Error(Errc::DeleteMissing, "delete of non-alive node");
    for (const Edge& out : g.out_[e.node]) {
      erase_sorted(g.in_[out.to], e.node);
      --g.edge_count_;
    }
    for (const Edge& in : g.in_[e.node]) {
      if (in.to != e.node && erase_sorted(g.out_[in.to], e.node)) --g.edge_count_;
    }
    g.out_[e.node].clear();
    g.in_[e.node].clear();
    g.alive_[e.node] = 0;
    --g.alive_count_;
    return g;
  }
  // InsertNode
  if (g.ever_alive(e.node)) throw Error(Errc::InsertDuplicate, "identifier already used");
  if (e.node >= g.capacity()) {
    g.out_.resize(e.node + 1);
    g.in_.resize(e.node + 1);
    g.alive_.resize(e.node + 1, 0);
    g.ever_.resize(e.node + 1, 0);
  }
  for (const Edge& in : e.in_edges)
    if (!g.alive(in.to)) throw Error(Errc::EdgeToDeadNode, "in-edge from dead node");
  for (const Edge& out : e.out_edges)
    if (!g.alive(out.to)) throw Error(Errc::EdgeToDeadNode, "out-edge to dead node");
  g.alive_[e.node] = 1;
  g.ever_[e.node] = 1;
  ++g.alive_count_;
  for (const Edge& in : e.in_edges) g.add_edge_min(in.to, e.node, in.w);
  for (const Edge& out : e.out_edges) g.add_edge_min(e.node, out.to, out.w);
  g.validate_overflow();
  return g;
}

GraphSnapshot GraphSnapshot::reweighted(const std::vector<Weight>& p) const {
  GraphSnapshot g = *this;
  for (NodeId u = 0; u < g.capacity(); ++u) {
    for (Edge& e : g.out_[u]) {
      e.w += p[u] - p[e.to];
      if (e.w < 0) throw Error(Errc::InternalInconsistency, "reweighting left a negative edge");
    }
    for (Edge& e : g.in_[u]) e.w += p[e.to] - p[u];
  }
  return g;
}

std::string GraphSnapshot::serialize() const {
  std::ostringstream os;
  os << capacity() << ' ' << edge_count_ << '\n';
  for (NodeId u = 0; u < capacity(); ++u)
    for (const Edge& e : out_[u]) os << u << ' ' << e.to << ' ' << e.w << '\n';
  return os.str();
}

void GraphSnapshot::check_consistency() const {
  std::size_t edges = 0;
  for (NodeId u = 0; u < capacity(); ++u) {
    if (!alive(u) && (!out_[u].empty() || !in_[u].empty()))
      throw Error(Errc::InternalInconsistency, "tombstone with incident edges");
    for (const Edge& e : out_[u]) {
      ++edges;
      if (!alive(e.to)) throw Error(Errc::InternalInconsistency, "edge to tombstone");
      bool found = false;
      for (const Edge& r : in_[e.to])
        if (r.to == u && r.w == e.w) found = true;
      if (!found) throw Error(Errc::InternalInconsistency, "out-edge missing from in-list");
    }
  }
  std::size_t redges = 0;
  for (NodeId v = 0; v < capacity(); ++v) redges += in_[v].size();
  if (edges != edge_count_ || redges != edge_count_)
    throw Error(Errc::InternalInconsistency, "edge count mismatch");
}

GraphSnapshot load_graph(std::istream& text) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::string& out) -> bool {
    while (std::getline(text, out)) {
      ++lineno;
      std::size_t i = out.find_first_not_of(" \t\r");
      if (i == std::string::npos || out[i] == '#') continue;
      return true;
    }
    return false;
  };

  auto malformed = [&](const std::string& msg) -> Error {
    return Error(Errc::MalformedInput, "line " + std::to_string(lineno) + ": " + msg);
  };

  if (!next_line(line)) throw Error(Errc::MalformedInput, "empty input");
  std::istringstream hs(line);
  long long n = -1, m = -1;
  if (!(hs >> n >> m) || n < 0 || m < 0) throw malformed("expected header \"n m\"");
  std::string junk;
  if (hs >> junk) throw malformed("trailing tokens after header");

  std::vector<std::tuple<NodeId, NodeId, Weight>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_line(line)) throw malformed("expected " + std::to_string(m) + " edge lines");
    std::istringstream es(line);
    long long u, v;
    Weight w;
    if (!(es >> u >> v >> w)) throw malformed("expected \"u v w\"");
    if (es >> junk) throw malformed("trailing tokens after edge");
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(Errc::DanglingEndpoint,
        "line " + std::to_string(lineno) + ": endpoint out of range");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v), w);
  }
  return GraphSnapshot::from_edges(static_cast<std::size_t>(n), edges);
}

GraphSnapshot load_graph(const std::string& text) {
  std::istringstream is(text);
  return load_graph(is);
}

}  // namespace dapsp
