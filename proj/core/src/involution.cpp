#include "circnet/involution.hpp"

#include <algorithm>
#include <set>

namespace circnet {

Bijection WalkSystem::pi() const {
  Bijection b;
  for (auto& w : walks) b.map[w.from] = w.to;
  return b;
}

size_t WalkSystem::edge_count() const {
  size_t total = 0;
  for (auto& c : cycles) total += c.size();
  for (auto& w : walks) total += w.edges.size();
  return total;
}

namespace {

std::set<std::string> vertex_set(const Network& n, const Walk& w) {
  auto vs = walk_vertices(n, w);
  return std::set<std::string>(vs.begin(), vs.end());
}

std::set<std::string> cycles_vertex_set(
    const Network& n, const std::vector<std::vector<std::string>>& cycles) {
  std::set<std::string> vs;
  for (auto& c : cycles)
    for (auto& id : c) {
      vs.insert(n.edge(id)->tail);
      vs.insert(n.edge(id)->head);
    }
  return vs;
}

bool self_avoiding(const Network& n, const Walk& w) {
  auto vs = walk_vertices(n, w);
  std::set<std::string> seen(vs.begin(), vs.end());
  return seen.size() == vs.size();
}

bool disjoint(const std::set<std::string>& a, const std::set<std::string>& b) {
  for (auto& x : a)
    if (b.count(x)) return false;
  return true;
}

}  // namespace

int first_offender(const Network& n, const WalkSystem& ws) {
  auto cvs = cycles_vertex_set(n, ws.cycles);
  std::vector<std::set<std::string>> wvs;
  for (auto& w : ws.walks) wvs.push_back(vertex_set(n, w));
  for (size_t t = 0; t < ws.walks.size(); ++t) {
    if (!self_avoiding(n, ws.walks[t])) return (int)t;
    if (!disjoint(wvs[t], cvs)) return (int)t;
    for (size_t u = t + 1; u < ws.walks.size(); ++u)
      if (!disjoint(wvs[t], wvs[u])) return (int)t;
  }
  return -1;
}

bool is_flow_pair(const Network& n, const WalkSystem& ws) {
  return first_offender(n, ws) == -1;
}

WalkSystem phi(const Network& n, const WalkSystem& ws) {
  if (!is_perfectly_oriented(n))
    throw Error(Errc::NotPerfectlyOriented, "phi needs a perfectly oriented network");
  int t = first_offender(n, ws);
  if (t < 0) throw Error(Errc::IsAlreadyFlow, "phi is defined on non-flow systems only");

  const auto& P = ws.walks[t].edges;
  std::set<std::string> cycle_edges;
  for (auto& c : ws.cycles) cycle_edges.insert(c.begin(), c.end());
  std::vector<std::set<std::string>> later;
  for (size_t u = t + 1; u < ws.walks.size(); ++u)
    later.push_back(std::set<std::string>(ws.walks[u].edges.begin(),
                                          ws.walks[u].edges.end()));

  auto repeated_later = [&](size_t q) {
    for (size_t r = q + 1; r < P.size(); ++r)
      if (P[r] == P[q]) return true;
    return false;
  };
  auto in_later_walk = [&](size_t q) -> int {
    for (size_t u = 0; u < later.size(); ++u)
      if (later[u].count(P[q])) return (int)(t + 1 + u);
    return -1;
  };

  size_t q = P.size();
  for (size_t cand = 0; cand < P.size(); ++cand)
    if (cycle_edges.count(P[cand]) || in_later_walk(cand) >= 0 ||
        repeated_later(cand)) {
      q = cand;
      break;
    }
  if (q == P.size())
    throw std::logic_error("offending walk without an offending edge");

  WalkSystem out = ws;

  int swap_with = in_later_walk(q);
  if (swap_with >= 0) {
    // Tail swap with the first later walk sharing e_q.
    const auto& H = ws.walks[swap_with].edges;
    size_t qp = std::find(H.begin(), H.end(), P[q]) - H.begin();
    std::vector<std::string> new_p(P.begin(), P.begin() + q + 1);
    new_p.insert(new_p.end(), H.begin() + qp + 1, H.end());
    std::vector<std::string> new_h(H.begin(), H.begin() + qp + 1);
    new_h.insert(new_h.end(), P.begin() + q + 1, P.end());
    out.walks[t].edges = new_p;
    out.walks[swap_with].edges = new_h;
    std::swap(out.walks[t].to, out.walks[swap_with].to);
    return out;
  }

  // Cycle move. First completed cycle of the walk:
  size_t s = P.size(), r = P.size();
  for (size_t cand = 1; cand < P.size() && s == P.size(); ++cand)
    for (size_t p = 0; p < cand; ++p)
      if (P[p] == P[cand]) {
        r = p;
        s = cand;
        break;
      }
  // First intersection with C:
  size_t tc = P.size();
  for (size_t cand = 0; cand < P.size(); ++cand)
    if (cycle_edges.count(P[cand])) {
      tc = cand;
      break;
    }
  if (tc == P.size() && s == P.size())
    throw std::logic_error("cycle-move case without a cycle");

  if (tc < s) {
    // Move the C-cycle through e_tc into the walk, entering just before e_tc.
    size_t which = 0;
    while (!std::count(ws.cycles[which].begin(), ws.cycles[which].end(), P[tc]))
      ++which;
    std::vector<std::string> rotated = ws.cycles[which];
    auto at = std::find(rotated.begin(), rotated.end(), P[tc]);
    std::rotate(rotated.begin(), at, rotated.end());

    std::vector<std::string> new_p(P.begin(), P.begin() + tc);
    new_p.insert(new_p.end(), rotated.begin(), rotated.end());
    new_p.insert(new_p.end(), P.begin() + tc, P.end());
    out.walks[t].edges = new_p;
    out.cycles.erase(out.cycles.begin() + which);
  } else {
    // Erase the walk's first completed cycle into C.
    std::vector<std::string> loop(P.begin() + r, P.begin() + s);
    std::vector<std::string> new_p(P.begin(), P.begin() + r);
    new_p.insert(new_p.end(), P.begin() + s, P.end());
    out.walks[t].edges = new_p;
    out.cycles.push_back(canonical_cycle(loop));
    std::sort(out.cycles.begin(), out.cycles.end());
  }
  return out;
}

SignedWeight signed_weight(const Network& n, const WalkSystem& ws) {
  SignedWeight sw;
  int parity = xing(ws.pi());
  for (auto& w : ws.walks) {
    parity += loop_erase(w).second;
    sw.monomial = sw.monomial * walk_weight(n, w).mono;
  }
  for (auto& c : ws.cycles)
    for (auto& id : c) sw.monomial = sw.monomial * n.edge(id)->weight.mono;
  sw.sign = parity % 2 == 0 ? 1 : -1;
  return sw;
}

std::vector<WalkSystem> enumerate_walk_systems(const Network& n,
                                               const std::vector<int>& J,
                                               unsigned budget) {
  auto cols = checked_columns(n, J);
  auto I = n.source_positions();
  std::vector<WalkSystem> out;

  for (auto& cons : conservative_flows(n)) {
    if (cons.edges.size() > budget) continue;
    unsigned left_total = budget - (unsigned)cons.edges.size();
    for (auto& pi : bijections_fixing_common(I, cols)) {
      // Walks per source, combined under the shared edge budget.
      std::vector<Walk> chosen;
      auto place = [&](auto&& self, size_t idx, unsigned used) -> void {
        if (idx == I.size()) {
          WalkSystem ws;
          ws.cycles = cons.cycles;
          ws.walks = chosen;
          out.push_back(ws);
          return;
        }
        int i = I[idx];
        for (auto& w :
             enumerate_walks(n, i, pi.at(i), (int)(left_total - used))) {
          chosen.push_back(w);
          self(self, idx + 1, used + (unsigned)w.edges.size());
          chosen.pop_back();
        }
      };
      place(place, 0, 0);
    }
  }
  return out;
}

bool cancellation_check(const Network& n, const std::vector<int>& J,
                        unsigned budget) {
  if (!n.planar)
    throw Error(Errc::MissingRotation, "cancellation check needs planar mode");
  auto cols = checked_columns(n, J);

  Poly residual;
  for (auto& ws : enumerate_walk_systems(n, cols, budget)) {
    SignedWeight sw = signed_weight(n, ws);
    residual += Poly::term(sw.sign, sw.monomial);
    if (is_flow_pair(n, ws)) continue;

    WalkSystem img = phi(n, ws);
    if (img == ws) return false;
    if (img.edge_count() != ws.edge_count()) return false;
    if (!(phi(n, img) == ws)) return false;
    SignedWeight sw2 = signed_weight(n, img);
    if (sw2.sign != -sw.sign || !(sw2.monomial == sw.monomial)) return false;
    if (first_offender(n, img) != first_offender(n, ws)) return false;
  }

  Poly flow_sum;
  for (auto& f : enumerate_flows(n, cols))
    if (f.edges.size() <= budget) flow_sum += f.weight.poly();
  return residual == flow_sum;
}

}  // namespace circnet
