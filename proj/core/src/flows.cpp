#include "circnet/flows.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace circnet {

std::vector<std::string> canonical_cycle(std::vector<std::string> cycle) {
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  return cycle;
}

std::vector<std::vector<std::string>> enumerate_cycles(const Network& n) {
  Adjacency adj(n);
  std::vector<std::vector<std::string>> cycles;
  // Each cycle is found once, from its smallest edge id: later edges on the
  // path must carry strictly larger ids.
  for (auto& e0 : n.edges) {
    std::vector<std::string> path{e0.id};
    std::set<std::string> visited{e0.tail};
    auto dfs = [&](auto&& self, const std::string& at) -> void {
      if (at == e0.tail) {
        cycles.push_back(path);
        return;
      }
      if (visited.count(at)) return;
      visited.insert(at);
      for (int idx : adj.out(at)) {
        const Edge& e = n.edges[idx];
        if (e.id <= e0.id) continue;
        path.push_back(e.id);
        self(self, e.head);
        path.pop_back();
      }
      visited.erase(at);
    };
    dfs(dfs, e0.head);
  }
  for (auto& c : cycles) c = canonical_cycle(c);
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

namespace {

std::set<std::string> cycle_vertex_set(const Network& n,
                                       const std::vector<std::string>& cycle) {
  std::set<std::string> vs;
  for (auto& id : cycle) {
    vs.insert(n.edge(id)->tail);
    vs.insert(n.edge(id)->head);
  }
  return vs;
}

/// Backtracking enumeration shared by the J-restricted and unrestricted
/// entry points. Walk systems are built source by source (ascending), then
/// every compatible disjoint cycle set is attached.
class FlowEnumerator {
 public:
  FlowEnumerator(const Network& n, const std::vector<int>* J)
      : n_(n), adj_(n), filter_(J), I_(n.source_positions()) {
    if (!is_perfectly_oriented(n))
      throw Error(Errc::NotPerfectlyOriented, "flows need a perfectly oriented network");
    all_cycles_ = enumerate_cycles(n);
    for (auto& c : all_cycles_) cycle_vertices_.push_back(cycle_vertex_set(n, c));
  }

  std::vector<Flow> run() {
    walks_.clear();
    place_walks(0);
    std::sort(flows_.begin(), flows_.end(), [](const Flow& a, const Flow& b) {
      if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
      return a.edges < b.edges;
    });
    return flows_;
  }

 private:
  bool allows(int j) const {
    return !filter_ ||
           std::find(filter_->begin(), filter_->end(), j) != filter_->end();
  }

  void place_walks(size_t t) {
    if (t == I_.size()) {
      attach_cycles(0);
      return;
    }
    int i = I_[t];
    if (allows(i) && !used_dest_.count(i)) {
      used_dest_.insert(i);
      walks_.push_back({i, i, {}});
      place_walks(t + 1);
      walks_.pop_back();
      used_dest_.erase(i);
    }
    // Nontrivial walks leave along the source's unique edge.
    for (int idx : adj_.out(n_.boundary[i - 1].id)) {
      const Edge& first = n_.edges[idx];
      path_.push_back(first.id);
      walk_dfs(t, i, first.head);
      path_.pop_back();
    }
  }

  void walk_dfs(size_t t, int i, const std::string& at) {
    int pos = n_.boundary_position(at);
    if (pos != 0) {
      if (allows(pos) && !used_dest_.count(pos)) {
        used_dest_.insert(pos);
        for (auto& v : pending_) used_vertices_.insert(v);
        std::vector<std::string> saved_pending = pending_;
        std::vector<std::string> saved_path = path_;
        pending_.clear();
        path_.clear();
        walks_.push_back({i, pos, saved_path});
        place_walks(t + 1);
        walks_.pop_back();
        path_ = saved_path;
        pending_ = saved_pending;
        for (auto& v : pending_) used_vertices_.erase(v);
        used_dest_.erase(pos);
      }
      return;  // boundary vertices end every walk
    }
    if (used_vertices_.count(at) || on_path_.count(at)) return;
    on_path_.insert(at);
    pending_.push_back(at);
    for (int idx : adj_.out(at)) {
      path_.push_back(n_.edges[idx].id);
      walk_dfs(t, i, n_.edges[idx].head);
      path_.pop_back();
    }
    pending_.pop_back();
    on_path_.erase(at);
  }

  void attach_cycles(size_t from) {
    emit();
    for (size_t c = from; c < all_cycles_.size(); ++c) {
      bool clash = false;
      for (auto& v : cycle_vertices_[c])
        if (used_vertices_.count(v)) {
          clash = true;
          break;
        }
      if (clash) continue;
      chosen_cycles_.push_back(c);
      for (auto& v : cycle_vertices_[c]) used_vertices_.insert(v);
      attach_cycles(c + 1);
      for (auto& v : cycle_vertices_[c]) used_vertices_.erase(v);
      chosen_cycles_.pop_back();
    }
  }

  void emit() {
    Flow f;
    for (auto& w : walks_) {
      f.destination.push_back(w.to);
      for (auto& e : w.edges) f.edges.push_back(e);
      f.weight = f.weight * walk_weight(n_, w);
    }
    f.walks = walks_;
    for (size_t c : chosen_cycles_) {
      f.cycles.push_back(all_cycles_[c]);
      for (auto& id : all_cycles_[c]) {
        f.edges.push_back(id);
        f.weight = f.weight * n_.edge(id)->weight;
      }
    }
    std::sort(f.edges.begin(), f.edges.end());
    std::sort(f.destination.begin(), f.destination.end());
    flows_.push_back(std::move(f));
  }

  const Network& n_;
  Adjacency adj_;
  const std::vector<int>* filter_;
  std::vector<int> I_;
  std::vector<std::vector<std::string>> all_cycles_;
  std::vector<std::set<std::string>> cycle_vertices_;

  std::vector<Walk> walks_;
  std::vector<std::string> path_;
  std::vector<std::string> pending_;  // interior vertices of the walk in progress
  std::set<std::string> on_path_;
  std::set<std::string> used_vertices_;
  std::set<int> used_dest_;
  std::vector<size_t> chosen_cycles_;
  std::vector<Flow> flows_;
};

}  // namespace

std::vector<Flow> enumerate_flows(const Network& n, const std::vector<int>& J) {
  auto cols = checked_columns(n, J);
  FlowEnumerator fe(n, &cols);
  return fe.run();
}

std::vector<Flow> enumerate_all_flows(const Network& n) {
  FlowEnumerator fe(n, nullptr);
  return fe.run();
}

std::vector<Flow> conservative_flows(const Network& n) {
  return enumerate_flows(n, n.source_positions());
}

Poly flow_gf(const std::vector<Flow>& flows) {
  Poly g;
  for (auto& f : flows) g += f.weight.poly();
  return g;
}

Poly conservative_gf(const Network& n) { return flow_gf(conservative_flows(n)); }

RationalFn plucker(const Network& n, const std::vector<int>& J) {
  Poly f = flow_gf(enumerate_flows(n, J));
  return RationalFn(f, conservative_gf(n));
}

RationalFn plucker_nonplanar_measurement(const Network& n, int i, int j) {
  auto I = n.source_positions();
  if (std::find(I.begin(), I.end(), i) == I.end())
    throw Error(Errc::NotASource, "position " + std::to_string(i) + " is not a source");
  std::vector<int> J;
  for (int p : I)
    if (p != i) J.push_back(p);
  if (std::find(J.begin(), J.end(), j) == J.end()) J.push_back(j);
  if (J.size() != I.size())
    throw Error(Errc::BadColumnSet, "measurement column set needs j outside I or j = i");
  return plucker(n, J);
}

RationalFn minor_via_measurement_fns(const Network& n,
                                     const std::vector<int>& J) {
  auto cols = checked_columns(n, J);
  auto I = n.source_positions();
  std::map<std::pair<int, int>, RationalFn> cache;
  auto measurement = [&](int i, int j) -> const RationalFn& {
    auto key = std::make_pair(i, j);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, plucker_nonplanar_measurement(n, i, j)).first;
    return it->second;
  };
  RationalFn total(Poly(0L), Poly(1L));
  for (auto& pi : bijections_fixing_common(I, cols)) {
    RationalFn prod(Poly(1L), Poly(1L));
    for (auto& [i, j] : pi.map) prod = rf_mul(prod, measurement(i, j));
    total = (xing(pi) % 2 == 0) ? rf_add(total, prod) : rf_sub(total, prod);
  }
  return total;
}

namespace {

struct RotationIndex {
  // Per interior vertex: the rotation list and, per edge id, the positions
  // of its half-edges there.
  std::map<std::string, std::vector<HalfEdge>> rot;

  explicit RotationIndex(const Network& n) {
    if (!n.planar)
      throw Error(Errc::MissingRotation, "alternating flows need planar mode");
    for (auto& v : n.interior) {
      auto it = n.rotation.find(v);
      if (it == n.rotation.end())
        throw Error(Errc::MissingRotation, "no rotation at interior vertex " + v);
      rot[v] = it->second;
    }
  }
};

bool alternates(const std::vector<HalfEdge>& rotation,
                const std::set<std::string>& chosen) {
  std::vector<EdgeEnd> pattern;
  for (auto& h : rotation)
    if (chosen.count(h.edge)) pattern.push_back(h.end);
  if (pattern.empty()) return true;
  if (pattern.size() % 2 != 0) return false;
  for (size_t i = 0; i < pattern.size(); ++i)
    if (pattern[i] == pattern[(i + 1) % pattern.size()]) return false;
  return true;
}

Walk left_turn_walk(const Network& n, const RotationIndex& ri,
                    const std::set<std::string>& F, int i) {
  const std::string start = n.boundary[i - 1].id;
  const Edge* first = nullptr;
  for (auto& e : n.edges)
    if (e.tail == start && F.count(e.id)) first = &e;
  if (!first) return {i, i, {}};

  Walk w{i, 0, {first->id}};
  const Edge* cur = first;
  size_t guard = 0;
  for (;;) {
    const std::string& v = cur->head;
    int pos = n.boundary_position(v);
    if (pos != 0) {
      w.to = pos;
      return w;
    }
    const auto& rot = ri.rot.at(v);
    size_t d = rot.size();
    size_t p = d;
    for (size_t q = 0; q < d; ++q)
      if (rot[q].edge == cur->id && rot[q].end == EdgeEnd::Head) p = q;
    if (p == d) throw std::logic_error("arriving edge missing from rotation");
    const Edge* next = nullptr;
    // First left turn: scan counterclockwise (reverse of the stored
    // clockwise order) from the arriving half-edge.
    for (size_t step = 1; step < d && !next; ++step) {
      const HalfEdge& h = rot[(p + d - step) % d];
      if (h.end == EdgeEnd::Tail && F.count(h.edge)) next = n.edge(h.edge);
    }
    if (!next) throw std::logic_error("no left-turn continuation in alternating flow");
    cur = next;
    w.edges.push_back(cur->id);
    if (++guard > F.size() + 1)
      throw std::logic_error("left-turn walk does not terminate");
  }
}

AlternatingFlow finish_alternating(const Network& n, const RotationIndex& ri,
                                   const std::set<std::string>& chosen,
                                   const std::set<std::string>& blowups) {
  AlternatingFlow f;
  f.edges.assign(chosen.begin(), chosen.end());
  for (auto& id : chosen) f.weight = f.weight * n.edge(id)->weight;

  for (int i : n.source_positions()) {
    Walk w = left_turn_walk(n, ri, chosen, i);
    f.walk_map.push_back({i, w.to});
    f.destination.push_back(w.to);
  }
  std::sort(f.destination.begin(), f.destination.end());
  if (std::adjacent_find(f.destination.begin(), f.destination.end()) !=
      f.destination.end())
    throw std::logic_error("left-turn walks reached a repeated endpoint");

  std::map<std::string, int> tau;
  for (auto& id : chosen) {
    const Edge* e = n.edge(id);
    tau[e->head] += 1;
    if (blowups.count(e->head)) f.eps += 1;
  }
  for (auto& [v, t] : tau) f.theta += std::max(t - 1, 0);
  std::set<std::string> touched;
  for (auto& id : chosen) {
    const Edge* e = n.edge(id);
    if (blowups.count(e->tail)) touched.insert(e->tail);
    if (blowups.count(e->head)) touched.insert(e->head);
  }
  f.beta = (int)touched.size();
  f.eta = (int)blowups.size() - f.beta;
  return f;
}

}  // namespace

std::vector<AlternatingFlow> enumerate_all_alternating_flows(const Network& n) {
  if (n.edges.size() > 22)
    throw Error(Errc::TooLarge, "alternating-flow enumeration is capped at 22 edges");
  RotationIndex ri(n);
  auto blowups = blowup_vertices(n);

  // Edge order and per-vertex bookkeeping for alternation pruning: once the
  // last incident edge of a vertex is decided, its pattern is checked.
  std::map<std::string, int> undecided;
  for (auto& [v, rot] : ri.rot) undecided[v] = 0;
  std::vector<const Edge*> order;
  for (auto& e : n.edges) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const Edge* a, const Edge* b) { return a->id < b->id; });
  for (auto* e : order) {
    if (undecided.count(e->tail)) undecided[e->tail] += 1;
    if (undecided.count(e->head)) undecided[e->head] += 1;
  }

  std::vector<AlternatingFlow> result;
  std::set<std::string> chosen;
  auto decide = [&](auto&& self, size_t t) -> void {
    if (t == order.size()) {
      result.push_back(finish_alternating(n, ri, chosen, blowups));
      return;
    }
    const Edge* e = order[t];
    std::vector<std::string> owners;
    for (auto* v : {&e->tail, &e->head})
      if (undecided.count(*v)) owners.push_back(*v);
    // A loop's two half-edges share the owner; count it once per half.
    for (auto& v : owners) undecided[v] -= 1;

    for (int include = 0; include < 2; ++include) {
      if (include) chosen.insert(e->id);
      bool ok = true;
      for (auto& v : owners)
        if (undecided[v] == 0 && !alternates(ri.rot.at(v), chosen)) ok = false;
      if (ok) self(self, t + 1);
      if (include) chosen.erase(e->id);
    }
    for (auto& v : owners) undecided[v] += 1;
  };
  decide(decide, 0);

  std::sort(result.begin(), result.end(),
            [](const AlternatingFlow& a, const AlternatingFlow& b) {
              if (a.edges.size() != b.edges.size())
                return a.edges.size() < b.edges.size();
              return a.edges < b.edges;
            });
  return result;
}

std::vector<AlternatingFlow> enumerate_alternating_flows(
    const Network& n, const std::vector<int>& J) {
  auto cols = checked_columns(n, J);
  std::vector<AlternatingFlow> out;
  for (auto& f : enumerate_all_alternating_flows(n))
    if (f.destination == cols) out.push_back(f);
  return out;
}

AlternatingFlow make_alternating_flow(const Network& n,
                                      const std::set<std::string>& edges) {
  RotationIndex ri(n);
  for (auto& [v, rot] : ri.rot)
    if (!alternates(rot, edges))
      throw Error(Errc::BadArgument,
                  "edge set does not alternate at vertex " + v);
  return finish_alternating(n, ri, edges, blowup_vertices(n));
}

Poly alternating_gf(const std::vector<AlternatingFlow>& flows) {
  Poly g;
  for (auto& f : flows) {
    Rational c = f.weight.coeff;
    for (int k = 0; k < f.theta; ++k) c *= 2;
    g += Poly::term(c, f.weight.mono);
  }
  return g;
}

RationalFn plucker_general(const Network& n, const std::vector<int>& J) {
  auto cols = checked_columns(n, J);
  auto I = n.source_positions();
  auto all = enumerate_all_alternating_flows(n);
  std::vector<AlternatingFlow> num, den;
  for (auto& f : all) {
    if (f.destination == cols) num.push_back(f);
    if (f.destination == I) den.push_back(f);
  }
  return RationalFn(alternating_gf(num), alternating_gf(den));
}

namespace {

std::set<Monomial> odd_support(const Poly& p) {
  std::set<Monomial> s;
  for (auto& [m, c] : p.terms()) {
    if (c.get_den() != 1)
      throw Error(Errc::BadArgument, "mod-2 comparison needs integer coefficients");
    if (c.get_num() % 2 != 0) s.insert(m);
  }
  return s;
}

}  // namespace

bool gf2_plucker_check(const Network& n, const std::vector<int>& J,
                       unsigned bound) {
  auto cols = checked_columns(n, J);
  Poly f = flow_gf(enumerate_flows(n, cols));
  Poly g = conservative_gf(n);
  TruncatedSeries flow_route = series_div(f, g, bound);
  TruncatedSeries det_route = minor_series(n, cols, bound);
  return odd_support(flow_route.poly) == odd_support(det_route.poly);
}

}  // namespace circnet
