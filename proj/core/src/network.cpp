#include "circnet/network.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace circnet {

using nlohmann::json;

int Network::boundary_position(const std::string& id) const {
  for (int i = 0; i < (int)boundary.size(); ++i)
    if (boundary[i].id == id) return i + 1;
  return 0;
}

bool Network::is_boundary(const std::string& id) const {
  return boundary_position(id) != 0;
}

bool Network::is_interior(const std::string& id) const {
  return std::find(interior.begin(), interior.end(), id) != interior.end();
}

bool Network::has_vertex(const std::string& id) const {
  return is_boundary(id) || is_interior(id);
}

const Edge* Network::edge(const std::string& id) const {
  for (auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<int> Network::source_positions() const {
  std::vector<int> I;
  for (int i = 0; i < (int)boundary.size(); ++i)
    if (boundary[i].role == Role::Source) I.push_back(i + 1);
  return I;
}

std::string Network::endpoint(const HalfEdge& h) const {
  const Edge* e = edge(h.edge);
  if (!e) throw Error(Errc::DanglingVertex, "unknown edge " + h.edge);
  return h.end == EdgeEnd::Tail ? e->tail : e->head;
}

Adjacency::Adjacency(const Network& n) {
  for (auto& b : n.boundary) out_[b.id], in_[b.id];
  for (auto& v : n.interior) out_[v], in_[v];
  std::vector<int> order(n.edges.size());
  for (int i = 0; i < (int)order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return n.edges[a].id < n.edges[b].id;
  });
  for (int i : order) {
    out_[n.edges[i].tail].push_back(i);
    in_[n.edges[i].head].push_back(i);
  }
}

const std::vector<int>& Adjacency::out(const std::string& v) const {
  auto it = out_.find(v);
  return it == out_.end() ? empty_ : it->second;
}

const std::vector<int>& Adjacency::in(const std::string& v) const {
  auto it = in_.find(v);
  return it == in_.end() ? empty_ : it->second;
}

namespace {

Role parse_role(const std::string& s) {
  if (s == "source") return Role::Source;
  if (s == "sink") return Role::Sink;
  throw Error(Errc::MalformedDocument, "role must be 'source' or 'sink': " + s);
}

EdgeEnd parse_end(const std::string& s) {
  if (s == "tail") return EdgeEnd::Tail;
  if (s == "head") return EdgeEnd::Head;
  throw Error(Errc::MalformedDocument, "half-edge end must be 'tail' or 'head': " + s);
}

}  // namespace

Network parse_network(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedDocument, e.what());
  }
  try {
    Network n;
    n.name = doc.value("name", "");
    if (!doc.contains("planar") || !doc["planar"].is_boolean())
      throw Error(Errc::MalformedDocument, "missing boolean field 'planar'");
    n.planar = doc["planar"].get<bool>();
    for (auto& b : doc.at("boundary"))
      n.boundary.push_back(
          {b.at("id").get<std::string>(), parse_role(b.at("role"))});
    for (auto& v : doc.at("interior"))
      n.interior.push_back(v.get<std::string>());
    for (auto& e : doc.at("edges"))
      n.edges.push_back({e.at("id").get<std::string>(),
                         e.at("tail").get<std::string>(),
                         e.at("head").get<std::string>(),
                         parse_weight(e.at("weight").get<std::string>())});
    if (doc.contains("rotation")) {
      for (auto& [vertex, halves] : doc["rotation"].items()) {
        std::vector<HalfEdge> rot;
        for (auto& h : halves)
          rot.push_back({h.at(0).get<std::string>(), parse_end(h.at(1))});
        n.rotation[vertex] = rot;
      }
    }
    require_valid(n);
    return n;
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedDocument, e.what());
  }
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedDocument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::string serialize_network(const Network& n) {
  json doc;
  doc["name"] = n.name;
  doc["planar"] = n.planar;
  doc["boundary"] = json::array();
  for (auto& b : n.boundary)
    doc["boundary"].push_back(
        {{"id", b.id}, {"role", b.role == Role::Source ? "source" : "sink"}});
  doc["interior"] = n.interior;
  doc["edges"] = json::array();
  for (auto& e : n.edges)
    doc["edges"].push_back({{"id", e.id},
                            {"tail", e.tail},
                            {"head", e.head},
                            {"weight", e.weight.str()}});
  if (n.planar) {
    doc["rotation"] = json::object();
    for (auto& [vertex, rot] : n.rotation) {
      json halves = json::array();
      for (auto& h : rot)
        halves.push_back({h.edge, h.end == EdgeEnd::Tail ? "tail" : "head"});
      doc["rotation"][vertex] = halves;
    }
  }
  return doc.dump(2) + "\n";
}

std::vector<Violation> validate(const Network& n) {
  std::vector<Violation> out;
  std::set<std::string> vertex_ids;
  for (auto& b : n.boundary)
    if (!vertex_ids.insert(b.id).second)
      out.push_back({Errc::DuplicateId, "duplicate vertex id " + b.id});
  for (auto& v : n.interior)
    if (!vertex_ids.insert(v).second)
      out.push_back({Errc::DuplicateId, "duplicate vertex id " + v});

  std::set<std::string> edge_ids;
  std::map<std::string, int> boundary_degree;
  for (auto& e : n.edges) {
    if (!edge_ids.insert(e.id).second)
      out.push_back({Errc::DuplicateId, "duplicate edge id " + e.id});
    for (auto* v : {&e.tail, &e.head}) {
      if (!vertex_ids.count(*v))
        out.push_back({Errc::DanglingVertex,
                       "edge " + e.id + " references unknown vertex " + *v});
      else if (n.is_boundary(*v))
        boundary_degree[*v] += 1;
    }
  }
  for (auto& [v, deg] : boundary_degree)
    if (deg >= 2)
      out.push_back({Errc::BoundaryDegree,
                     "boundary vertex " + v + " is incident to " +
                         std::to_string(deg) + " half-edges"});

  if (n.planar) {
    // Each interior vertex needs a rotation list holding exactly its
    // incident half-edges, each once.
    std::map<std::string, std::multiset<HalfEdge>> incident;
    for (auto& e : n.edges) {
      if (n.is_interior(e.tail)) incident[e.tail].insert({e.id, EdgeEnd::Tail});
      if (n.is_interior(e.head)) incident[e.head].insert({e.id, EdgeEnd::Head});
    }
    for (auto& v : n.interior) {
      auto it = n.rotation.find(v);
      if (it == n.rotation.end()) {
        out.push_back({Errc::MissingRotation, "no rotation at interior vertex " + v});
        continue;
      }
      std::multiset<HalfEdge> listed(it->second.begin(), it->second.end());
      if (listed != incident[v])
        out.push_back({Errc::MalformedDocument,
                       "rotation at " + v + " does not list exactly the incident half-edges"});
    }
    for (auto& [v, rot] : n.rotation)
      if (!n.is_interior(v))
        out.push_back({Errc::MalformedDocument,
                       "rotation given for non-interior vertex " + v});
  } else if (!n.rotation.empty()) {
    out.push_back({Errc::MalformedDocument,
                   "rotation data is only allowed in planar mode"});
  }
  return out;
}

void require_valid(const Network& n) {
  auto v = validate(n);
  if (!v.empty()) throw Error(v.front().code, v.front().detail);
}

bool is_perfectly_oriented(const Network& n) {
  Adjacency adj(n);
  for (auto& v : n.interior)
    if (adj.outdeg(v) != 1 && adj.indeg(v) != 1) return false;
  return true;
}

std::set<std::string> blowup_vertices(const Network& n) {
  if (!n.planar)
    throw Error(Errc::MissingRotation, "blowup vertices need a planar rotation system");
  std::set<std::string> result;
  for (auto& v : n.interior) {
    auto it = n.rotation.find(v);
    if (it == n.rotation.end())
      throw Error(Errc::MissingRotation, "no rotation at interior vertex " + v);
    const auto& rot = it->second;
    int switches = 0;
    for (size_t i = 0; i < rot.size(); ++i)
      if (rot[i].end != rot[(i + 1) % rot.size()].end) ++switches;
    if (switches >= 4) result.insert(v);
  }
  return result;
}

namespace {

void drop_edges(Network& n, const std::set<std::string>& ids) {
  std::erase_if(n.edges, [&](const Edge& e) { return ids.count(e.id) > 0; });
  for (auto& [v, rot] : n.rotation)
    std::erase_if(rot, [&](const HalfEdge& h) { return ids.count(h.edge) > 0; });
}

}  // namespace

Network prune_interior_sources_sinks(const Network& n) {
  Network r = n;
  for (;;) {
    Adjacency adj(r);
    std::vector<std::string> dead;
    for (auto& v : r.interior)
      if (adj.indeg(v) == 0 || adj.outdeg(v) == 0) dead.push_back(v);
    if (dead.empty()) return r;
    std::set<std::string> dead_set(dead.begin(), dead.end());
    std::set<std::string> gone;
    for (auto& e : r.edges)
      if (dead_set.count(e.tail) || dead_set.count(e.head)) gone.insert(e.id);
    drop_edges(r, gone);
    std::erase_if(r.interior, [&](const std::string& v) { return dead_set.count(v) > 0; });
    for (auto& v : dead) r.rotation.erase(v);
  }
}

Network suppress_degree_two(const Network& n) {
  Network r = n;
  for (;;) {
    Adjacency adj(r);
    std::string victim;
    for (auto& v : r.interior)
      if (adj.indeg(v) == 1 && adj.outdeg(v) == 1) {
        victim = v;
        break;
      }
    if (victim.empty()) return r;

    const Edge in_edge = r.edges[adj.in(victim)[0]];
    const Edge out_edge = r.edges[adj.out(victim)[0]];
    if (in_edge.id == out_edge.id)
      throw Error(Errc::Degree2SelfLoop,
                  "loop " + in_edge.id + " at degree-2 vertex " + victim);

    // Glue: keep the incoming edge's id, extend it to the outgoing head,
    // multiply the weights.
    std::string glued = in_edge.id;
    for (auto& e : r.edges)
      if (e.id == glued) {
        e.head = out_edge.head;
        e.weight = in_edge.weight * out_edge.weight;
      }
    for (auto& [v, rot] : r.rotation)
      for (auto& h : rot)
        if (h.edge == out_edge.id && h.end == EdgeEnd::Head) h.edge = glued;
    std::set<std::string> gone{out_edge.id};
    drop_edges(r, gone);
    std::erase_if(r.interior, [&](const std::string& v) { return v == victim; });
    r.rotation.erase(victim);
  }
}

}  // namespace circnet
