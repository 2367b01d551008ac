#include "circnet/transform.hpp"

#include <algorithm>

namespace circnet {

namespace {

struct Rewriter {
  Network net;
  ReductionTrace trace;
  std::map<std::string, int> counters;

  std::string fresh_vertex(const std::string& parent, const char* tag) {
    int k = ++counters[parent + tag + "v"];
    return parent + "_" + tag + std::to_string(k);
  }

  std::string fresh_edge(const std::string& parent, const char* tag) {
    int k = ++counters[parent + tag + "e"];
    std::string id = parent + "_" + tag + std::to_string(k) + "e";
    return id;
  }

  Edge& edge_ref(const std::string& id) {
    for (auto& e : net.edges)
      if (e.id == id) return e;
    throw std::logic_error("missing edge " + id);
  }

  void reattach(const HalfEdge& h, const std::string& to) {
    Edge& e = edge_ref(h.edge);
    (h.end == EdgeEnd::Tail ? e.tail : e.head) = to;
  }

  int degree(const std::string& v) const {
    return (int)net.rotation.at(v).size();
  }

  // Smallest (vertex id, rotation position) whose cyclically adjacent pair
  // has equal orientation, among vertices of degree > 3.
  bool find_pullout(std::string& vertex, size_t& pos) const {
    std::vector<std::string> order = net.interior;
    std::sort(order.begin(), order.end());
    for (auto& v : order) {
      const auto& rot = net.rotation.at(v);
      if (rot.size() <= 3) continue;
      for (size_t p = 0; p < rot.size(); ++p)
        if (rot[p].end == rot[(p + 1) % rot.size()].end) {
          vertex = v;
          pos = p;
          return true;
        }
    }
    return false;
  }

  void pull_out(const std::string& v, size_t pos) {
    auto rot = net.rotation.at(v);
    size_t d = rot.size();
    HalfEdge first = rot[pos], second = rot[(pos + 1) % d];
    bool entering = first.end == EdgeEnd::Head;

    std::string vnew = fresh_vertex(v, "s");
    std::string conn = fresh_edge(v, "s");
    Edge e;
    e.id = conn;
    e.weight = WeightExpr();  // weight 1
    if (entering) {
      e.tail = vnew;
      e.head = v;
    } else {
      e.tail = v;
      e.head = vnew;
    }
    net.edges.push_back(e);
    net.interior.push_back(vnew);
    trace.new_edges.insert(conn);
    trace.vertex_origin[vnew] = v;

    reattach(first, vnew);
    reattach(second, vnew);

    // At v the pair's slots collapse to the connector's half-edge; at vnew
    // the clockwise order is (first, second, connector).
    HalfEdge conn_at_v{conn, entering ? EdgeEnd::Head : EdgeEnd::Tail};
    HalfEdge conn_at_new{conn, entering ? EdgeEnd::Tail : EdgeEnd::Head};
    std::vector<HalfEdge> vrot;
    for (size_t q = 0; q < d; ++q) {
      if (q == (pos + 1) % d) continue;
      vrot.push_back(q == pos ? conn_at_v : rot[q]);
    }
    net.rotation[v] = vrot;
    net.rotation[vnew] = {first, second, conn_at_new};
  }

  void blow_up(const std::string& v) {
    auto rot = net.rotation.at(v);
    size_t d = rot.size();
    std::vector<std::string> ring;
    for (size_t t = 0; t < d; ++t) {
      ring.push_back(fresh_vertex(v, "c"));
      trace.vertex_origin[ring.back()] = v;
    }
    std::vector<std::string> ring_edges;
    for (size_t t = 0; t < d; ++t) {
      Edge q;
      q.id = fresh_edge(v, "q");
      q.tail = ring[t];
      q.head = ring[(t + 1) % d];
      q.weight = WeightExpr();
      net.edges.push_back(q);
      ring_edges.push_back(q.id);
      trace.new_edges.insert(q.id);
    }
    trace.ring_edges[v] = ring_edges;
    // Double every edge entering v before reattaching its half-edges.
    for (size_t t = 0; t < d; ++t)
      if (rot[t].end == EdgeEnd::Head) {
        Edge& e = edge_ref(rot[t].edge);
        e.weight.coeff *= 2;
        trace.doubled_edges.insert(rot[t].edge);
      }
    for (size_t t = 0; t < d; ++t) {
      reattach(rot[t], ring[t]);
      size_t prev = (t + d - 1) % d;
      net.rotation[ring[t]] = {rot[t],
                               {ring_edges[t], EdgeEnd::Tail},
                               {ring_edges[prev], EdgeEnd::Head}};
    }
    net.rotation.erase(v);
    std::erase(net.interior, v);
    net.interior.insert(net.interior.end(), ring.begin(), ring.end());
  }
};

}  // namespace

std::pair<Network, ReductionTrace> perfect_orient(const Network& n) {
  if (!n.planar) throw Error(Errc::MissingRotation, "perfect_orient needs planar mode");
  require_valid(n);
  {
    Adjacency adj(n);
    for (auto& v : n.interior) {
      if (adj.indeg(v) == 0 || adj.outdeg(v) == 0)
        throw Error(Errc::PreprocessingRequired,
                    "prune interior sources/sinks first (vertex " + v + ")");
      if (adj.indeg(v) == 1 && adj.outdeg(v) == 1)
        throw Error(Errc::PreprocessingRequired,
                    "suppress degree-2 vertices first (vertex " + v + ")");
    }
  }

  Rewriter rw{n, {}, {}};
  std::string v;
  size_t pos;
  while (rw.find_pullout(v, pos)) rw.pull_out(v, pos);

  std::vector<std::string> order = rw.net.interior;
  std::sort(order.begin(), order.end());
  for (auto& u : order)
    if (rw.net.rotation.at(u).size() > 3) rw.blow_up(u);

  require_valid(rw.net);
  return {rw.net, rw.trace};
}

std::pair<AlternatingFlow, std::set<std::string>> contract_flow(
    const Network& original, const Network& rewritten,
    const ReductionTrace& trace, const Flow& flow) {
  std::set<std::string> fset(flow.edges.begin(), flow.edges.end());
  std::set<std::string> contracted;
  for (auto& id : flow.edges)
    if (!trace.new_edges.count(id)) contracted.insert(id);

  // Untouched blowup vertices whose whole blown cycle rides along in the flow.
  std::set<std::string> untouched_full;
  for (auto& v : blowup_vertices(original)) {
    bool touched = false;
    for (auto& id : contracted) {
      const Edge* e = original.edge(id);
      if (e->tail == v || e->head == v) touched = true;
    }
    if (touched) continue;
    const auto& ring = trace.ring_edges.at(v);
    bool full = !ring.empty();
    for (auto& id : ring)
      if (!fset.count(id)) full = false;
    if (full) untouched_full.insert(v);
  }
  (void)rewritten;
  return {make_alternating_flow(original, contracted), untouched_full};
}

std::map<std::string, Rational> weight_transport(
    const ReductionTrace& trace, const Network& rewritten,
    const std::map<std::string, Rational>& alpha) {
  for (auto& [e, a] : alpha)
    if (a <= 0)
      throw Error(Errc::NonPositiveWeight,
                  "weight of edge " + e + " must be positive");
  std::map<std::string, Rational> out;
  for (auto& e : rewritten.edges) {
    Rational base;
    if (trace.new_edges.count(e.id)) {
      base = 1;
    } else {
      auto it = alpha.find(e.id);
      if (it == alpha.end())
        throw Error(Errc::UnboundVariable, "no weight for edge " + e.id);
      base = it->second;
    }
    if (trace.doubled_edges.count(e.id)) base *= 2;
    out[e.id] = base;
  }
  return out;
}

}  // namespace circnet
