#include "circnet/randomnet.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace circnet {

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next(std::uint64_t bound) { return eng() % bound; }
  bool chance(unsigned num, unsigned den) { return next(den) < num; }
};

enum Dir { N = 0, E = 1, S = 2, W = 3 };  // clockwise rotation order

struct Builder {
  Rng rng;
  int rows, cols;
  NetKind kind;
  std::map<std::pair<int, int>, int> order;  // topological order for DAGs

  explicit Builder(std::uint64_t seed, NetKind k, int max_dim)
      : rng(seed), kind(k) {
    rows = 1 + (int)rng.next(max_dim);
    cols = 1 + (int)rng.next(max_dim);
  }

  std::string vid(int r, int c) const {
    return "v" + std::to_string(r) + "_" + std::to_string(c);
  }

  Network build() {
    Network n;
    n.planar = true;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) n.interior.push_back(vid(r, c));

    if (kind == NetKind::Acyclic) {
      std::vector<std::pair<int, int>> cells;
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) cells.push_back({r, c});
      for (size_t i = cells.size(); i > 1; --i)
        std::swap(cells[i - 1], cells[rng.next(i)]);
      for (size_t i = 0; i < cells.size(); ++i) order[cells[i]] = (int)i;
    }

    // Grid edges; dir_edge[(r,c)][d] holds the incident edge id per compass
    // direction so the clockwise rotation can be read off afterwards.
    std::map<std::pair<int, int>, std::map<int, std::string>> dir_edge;
    int edge_counter = 0;
    auto add_edge = [&](const std::string& tail, const std::string& head) {
      std::string id = "e" + std::string(edge_counter < 10 ? "0" : "") +
                       std::to_string(edge_counter);
      ++edge_counter;
      n.edges.push_back({id, tail, head, WeightExpr::variable(id)});
      return id;
    };

    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        if (c + 1 < cols && rng.chance(3, 4)) {
          bool fwd = kind == NetKind::Acyclic
                         ? order[{r, c}] < order[{r, c + 1}]
                         : rng.chance(1, 2);
          std::string id = fwd ? add_edge(vid(r, c), vid(r, c + 1))
                               : add_edge(vid(r, c + 1), vid(r, c));
          dir_edge[{r, c}][E] = id;
          dir_edge[{r, c + 1}][W] = id;
        }
        if (r + 1 < rows && rng.chance(3, 4)) {
          bool fwd = kind == NetKind::Acyclic
                         ? order[{r, c}] < order[{r + 1, c}]
                         : rng.chance(1, 2);
          std::string id = fwd ? add_edge(vid(r, c), vid(r + 1, c))
                               : add_edge(vid(r + 1, c), vid(r, c));
          dir_edge[{r, c}][S] = id;
          dir_edge[{r + 1, c}][N] = id;
        }
      }

    // Degree cap: 3 keeps pruned vertices perfectly oriented, 4 leaves room
    // for 2-in-2-out violations.
    int cap = kind == NetKind::General ? 4 : 3;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        auto& de = dir_edge[{r, c}];
        while ((int)de.size() > cap) {
          auto it = de.begin();
          std::advance(it, rng.next(de.size()));
          std::string id = it->second;
          de.erase(it);
          for (auto& [cell, m] : dir_edge)
            for (auto jt = m.begin(); jt != m.end();)
              jt = jt->second == id ? m.erase(jt) : std::next(jt);
          std::erase_if(n.edges, [&](const Edge& e) { return e.id == id; });
        }
      }

    // Boundary stubs, clockwise around the perimeter.
    std::vector<std::pair<std::pair<int, int>, int>> slots;
    for (int c = 0; c < cols; ++c) slots.push_back({{0, c}, N});
    for (int r = 0; r < rows; ++r) slots.push_back({{r, cols - 1}, E});
    for (int c = cols - 1; c >= 0; --c) slots.push_back({{rows - 1, c}, S});
    for (int r = rows - 1; r >= 0; --r) slots.push_back({{r, 0}, W});

    int bcount = 0, stubs = 0;
    for (auto& [cell, d] : slots) {
      auto& de = dir_edge[cell];
      if (de.count(d) || (int)de.size() >= cap) continue;
      if (stubs >= 8 || !rng.chance(1, 2)) continue;
      ++stubs;
      std::string b = "b" + std::to_string(++bcount);
      bool src = rng.chance(1, 2);
      std::string v = vid(cell.first, cell.second);
      std::string id = src ? add_edge(b, v) : add_edge(v, b);
      de[d] = id;
      n.boundary.push_back({b, src ? Role::Source : Role::Sink});
    }

    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        std::vector<HalfEdge> rot;
        for (int d : {N, E, S, W}) {
          auto it = dir_edge[{r, c}].find(d);
          if (it == dir_edge[{r, c}].end()) continue;
          const Edge* e = nullptr;
          for (auto& cand : n.edges)
            if (cand.id == it->second) e = &cand;
          rot.push_back({e->id, e->tail == vid(r, c) ? EdgeEnd::Tail : EdgeEnd::Head});
        }
        n.rotation[vid(r, c)] = rot;
      }

    n = prune_interior_sources_sinks(n);
    if (kind == NetKind::General) n = suppress_degree_two(n);

    int sources = 0, sinks = 0;
    for (auto& b : n.boundary) (b.role == Role::Source ? sources : sinks) += 1;
    if (sources < 1 || sinks < 1 || sources > 4 || n.edges.empty())
      throw Error(Errc::BadArgument, "degenerate sample");
    if (n.edges.size() > 22 || n.boundary.size() > 8)
      throw Error(Errc::BadArgument, "oversized sample");

    if (kind == NetKind::General) {
      if (is_perfectly_oriented(n))
        throw Error(Errc::BadArgument, "sample is already perfectly oriented");
    } else if (!is_perfectly_oriented(n)) {
      throw Error(Errc::BadArgument, "sample not perfectly oriented");
    }

    if (kind == NetKind::NonPlanar) add_chord(n);

    // Isolated boundary vertices are legal but uninteresting; keep them.
    require_valid(n);
    return n;
  }

  void add_chord(Network& n) {
    Adjacency adj(n);
    std::vector<std::pair<std::string, std::string>> candidates;
    for (auto& u : n.interior)
      for (auto& w : n.interior)
        if (u != w && adj.indeg(u) == 1 && adj.outdeg(w) == 1)
          candidates.push_back({u, w});
    if (candidates.empty())
      throw Error(Errc::BadArgument, "no chord candidates");
    auto [u, w] = candidates[rng.next(candidates.size())];
    std::string id = "x0";
    n.edges.push_back({id, u, w, WeightExpr::variable(id)});
    n.planar = false;
    n.rotation.clear();
  }
};

}  // namespace

Network random_network(NetKind kind, std::uint64_t seed, int max_dim) {
  for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
    try {
      Builder b(seed * 0x9e3779b97f4a7c15ULL + attempt + 1, kind, max_dim);
      Network n = b.build();
      // Weights were consumed by suppression on some paths; re-label every
      // weight as the fresh variable named by its edge id.
      for (auto& e : n.edges) e.weight = WeightExpr::variable(e.id);
      n.name = "fuzz_" + std::to_string((unsigned long long)seed) + "_" +
               std::to_string((unsigned long long)attempt);
      return n;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(Errc::BadArgument, "could not sample a network for this seed");
}

}  // namespace circnet
