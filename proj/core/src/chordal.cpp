#include "sgdraw/chordal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sgdraw {
namespace {

// Partition refinement over a doubly linked list. Cells are contiguous runs
// of the list; inside a cell vertices keep their priority order because
// neighbours are always scanned in priority order.
class LexBfs {
 public:
  LexBfs(const SimpleGraph& h, std::span<const Vertex> priority)
      : n_(h.num_vertices()),
        next_(static_cast<std::size_t>(n_) + 1),
        prev_(static_cast<std::size_t>(n_) + 1),
        cell_of_(static_cast<std::size_t>(n_), 0),
        visited_(static_cast<std::size_t>(n_), 0),
        offset_(static_cast<std::size_t>(n_) + 1, 0) {
    std::vector<Vertex> prio(priority.begin(), priority.end());
    if (prio.empty()) {
      prio.resize(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) prio[v] = v;
    }
    if (static_cast<int>(prio.size()) != n_) {
      throw std::invalid_argument("lex_bfs: priority must list every vertex");
    }
    VertexOrdering check(prio);  // validates the permutation
    // flat adjacency, each list in priority order (bucket transpose)
    for (Vertex v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + h.neighbors(v).size();
    adjacency_.resize(static_cast<std::size_t>(offset_[n_]));
    std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
    for (Vertex u : prio) {
      for (Vertex w : h.neighbors(u)) adjacency_[fill[w]++] = u;
    }

    const int sentinel = n_;
    Vertex last = sentinel;
    for (Vertex v : prio) {
      next_[last] = v;
      prev_[v] = last;
      last = v;
    }
    next_[last] = sentinel;
    prev_[sentinel] = last;
    if (n_ > 0) cells_.push_back({prio.front(), prio.back(), n_, -1, -1});
  }

  std::vector<Vertex> run() {
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (int round = 0; round < n_; ++round) {
      Vertex v = next_[n_];
      detach(v);
      unlink(v);
      visited_[v] = 1;
      order.push_back(v);
      for (std::size_t i = offset_[v]; i < offset_[v + 1]; ++i) {
        Vertex w = adjacency_[i];
        if (!visited_[w]) promote(w, round);
      }
    }
    return order;
  }

 private:
  struct Cell {
    Vertex head;
    Vertex tail;
    int size;
    int stamp;
    int split;
  };

  void unlink(Vertex v) {
    next_[prev_[v]] = next_[v];
    prev_[next_[v]] = prev_[v];
  }
  void link_after(Vertex v, Vertex at) {
    next_[v] = next_[at];
    prev_[v] = at;
    prev_[next_[at]] = v;
    next_[at] = v;
  }
  void link_before(Vertex v, Vertex at) { link_after(v, prev_[at]); }

  // Remove v from its cell's bookkeeping (not from the list).
  void detach(Vertex v) {
    Cell& c = cells_[cell_of_[v]];
    if (c.head == v) c.head = next_[v];
    if (c.tail == v) c.tail = prev_[v];
    --c.size;
  }

  void promote(Vertex w, int round) {
    int ci = cell_of_[w];
    if (cells_[ci].stamp != round) {
      cells_[ci].stamp = round;
      cells_[ci].split = static_cast<int>(cells_.size());
      cells_.push_back({-1, -1, 0, round, -1});
    }
    int ni = cells_[ci].split;
    Vertex old_head = cells_[ci].head;
    detach(w);
    Cell& nc = cells_[ni];
    if (nc.size == 0) {
      if (old_head != w) {
        unlink(w);
        link_before(w, old_head);
      }
      nc.head = w;
    } else if (next_[nc.tail] != w) {
      unlink(w);
      link_after(w, nc.tail);
    }
    nc.tail = w;
    ++nc.size;
    cell_of_[w] = ni;
  }

  int n_;
  std::vector<Vertex> next_;
  std::vector<Vertex> prev_;
  std::vector<int> cell_of_;
  std::vector<char> visited_;
  std::vector<std::size_t> offset_;
  std::vector<Vertex> adjacency_;
  std::vector<Cell> cells_;
};

// Shortest path from p to w through allowed vertices (endpoints included).
std::vector<Vertex> bfs_path(const SimpleGraph& h, Vertex p, Vertex w,
                             const std::vector<char>& allowed) {
  std::vector<Vertex> parent(static_cast<std::size_t>(h.num_vertices()), -1);
  std::deque<Vertex> queue{p};
  parent[p] = p;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == w) break;
    for (Vertex y : h.neighbors(x)) {
      if (allowed[y] && parent[y] == -1) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (parent[w] == -1) return {};
  std::vector<Vertex> path;
  for (Vertex x = w; x != p; x = parent[x]) path.push_back(x);
  path.push_back(p);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> chordless_cycle(const SimpleGraph& h, Vertex v, Vertex p,
                                    Vertex w, const std::vector<int>& pos) {
  const int n = h.num_vertices();
  for (bool earlier_only : {true, false}) {
    std::vector<char> allowed(static_cast<std::size_t>(n), 1);
    if (earlier_only) {
      for (Vertex x = 0; x < n; ++x) allowed[x] = pos[x] < pos[v];
    }
    allowed[v] = 0;
    for (Vertex x : h.neighbors(v)) allowed[x] = 0;
    allowed[p] = 1;
    allowed[w] = 1;
    std::vector<Vertex> path = bfs_path(h, p, w, allowed);
    if (!path.empty()) {
      std::vector<Vertex> cycle{v};
      cycle.insert(cycle.end(), path.begin(), path.end());
      return cycle;
    }
  }
  throw std::logic_error("failed to extract a chordless cycle");
}

}  // namespace

std::vector<Vertex> lex_bfs(const SimpleGraph& h,
                            std::span<const Vertex> priority) {
  return LexBfs(h, priority).run();
}

std::vector<Vertex> lex_bfs_plus(const SimpleGraph& h,
                                 std::span<const Vertex> previous) {
  std::vector<Vertex> prio(previous.rbegin(), previous.rend());
  return LexBfs(h, prio).run();
}

ChordalityResult is_chordal_with_peo(const SimpleGraph& h) {
  const int n = h.num_vertices();
  std::vector<Vertex> sigma = lex_bfs(h);
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[sigma[i]] = i;

  // p(v): the earlier neighbour visited last. sigma reversed is a PEO iff
  // every other earlier neighbour of v is adjacent to p(v); the checks are
  // grouped by p so each neighbourhood is marked once.
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
  for (Vertex v : sigma) {
    for (Vertex x : h.neighbors(v)) {
      if (pos[x] < pos[v] && (parent[v] == -1 || pos[x] > pos[parent[v]])) parent[v] = x;
    }
    if (parent[v] != -1) children[parent[v]].push_back(v);
  }
  std::vector<int> mark(static_cast<std::size_t>(n), -1);
  for (Vertex p : sigma) {
    if (children[p].empty()) continue;
    for (Vertex y : h.neighbors(p)) mark[y] = p;
    for (Vertex v : children[p]) {
      for (Vertex x : h.neighbors(v)) {
        if (x == p || pos[x] > pos[v]) continue;
        if (mark[x] != p) {
          ChordalityResult r;
          r.cycle = chordless_cycle(h, v, p, x, pos);
          return r;
        }
      }
    }
  }
  std::reverse(sigma.begin(), sigma.end());
  return ChordalityResult{VertexOrdering(std::move(sigma)), {}};
}

std::vector<Vertex> unit_interval_ordering(const SimpleGraph& h) {
  std::vector<Vertex> s1 = lex_bfs(h);
  std::vector<Vertex> s2 = lex_bfs_plus(h, s1);
  std::vector<Vertex> s3 = lex_bfs_plus(h, s2);
  std::vector<int> comp = h.connected_components();
  std::stable_sort(s3.begin(), s3.end(),
                   [&](Vertex a, Vertex b) { return comp[a] < comp[b]; });
  return s3;
}

}  // namespace sgdraw
