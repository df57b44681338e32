#include "afd/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace afd::graphlab {

namespace {

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer in graph spec: " + s);
  return v;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string head = colon == std::string::npos ? text : text.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  GeneratorSpec s;
  if (head == "grid") {
    s.type = Type::Grid;
    auto x = args.find('x');
    if (x == std::string::npos) {
      s.rows = s.cols = parse_int(args);
    } else {
      s.rows = parse_int(args.substr(0, x));
      s.cols = parse_int(args.substr(x + 1));
    }
    if (s.rows < 1 || s.cols < 1) throw std::invalid_argument("grid dims must be >= 1");
  } else if (head == "tree") {
    s.type = Type::Tree;
    auto comma = args.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("tree spec needs degree,radius");
    s.degree = parse_int(args.substr(0, comma));
    s.radius = parse_int(args.substr(comma + 1));
    if (s.degree < 2 || s.radius < 0) throw std::invalid_argument("bad tree spec");
  } else if (head == "cycle") {
    s.type = Type::Cycle;
    s.length = parse_int(args);
    if (s.length < 3) throw std::invalid_argument("cycle length must be >= 3");
  } else if (head == "cayley_f2") {
    s.type = Type::CayleyF2;
    s.radius = parse_int(args);
    if (s.radius < 0) throw std::invalid_argument("bad cayley radius");
  } else if (head == "file") {
    s.type = Type::File;
    s.path = args;
  } else {
    throw std::invalid_argument("unknown graph generator: " + text);
  }
  return s;
}

std::string GeneratorSpec::to_string() const {
  switch (type) {
    case Type::Grid:
      return rows == cols ? "grid:" + std::to_string(rows)
                          : "grid:" + std::to_string(rows) + "x" + std::to_string(cols);
    case Type::Tree:
      return "tree:" + std::to_string(degree) + "," + std::to_string(radius);
    case Type::Cycle:
      return "cycle:" + std::to_string(length);
    case Type::CayleyF2:
      return "cayley_f2:" + std::to_string(radius);
    case Type::File:
      return "file:" + path;
  }
  return "?";
}

void WindowGraph::finish(GeneratorSpec spec, std::vector<int> boundary) {
  spec_ = std::move(spec);
  std::sort(boundary.begin(), boundary.end());
  boundary_ = std::move(boundary);
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  // precompute all BFS distances so graph values are immutable afterwards
  dist_cache_.assign(adj_.size(), {});
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    auto& d = dist_cache_[v];
    d.assign(adj_.size(), -1);
    std::deque<int> q = {static_cast<int>(v)};
    d[v] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : adj_[u])
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          q.push_back(w);
        }
    }
  }
}

WindowGraph WindowGraph::generate(const GeneratorSpec& spec) {
  WindowGraph g;
  std::vector<int> boundary;
  switch (spec.type) {
    case GeneratorSpec::Type::Grid: {
      int R = spec.rows, C = spec.cols;
      g.adj_.assign(static_cast<std::size_t>(R) * C, {});
      auto id = [C](int i, int j) { return i * C + j; };
      for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) {
          if (i + 1 < R) {
            g.adj_[id(i, j)].push_back(id(i + 1, j));
            g.adj_[id(i + 1, j)].push_back(id(i, j));
          }
          if (j + 1 < C) {
            g.adj_[id(i, j)].push_back(id(i, j + 1));
            g.adj_[id(i, j + 1)].push_back(id(i, j));
          }
          if (i == 0 || j == 0 || i == R - 1 || j == C - 1) boundary.push_back(id(i, j));
        }
      g.grid_dims_ = {R, C};
      break;
    }
    case GeneratorSpec::Type::Tree: {
      // Root has `degree` children; every later internal vertex has degree-1
      // children; vertices numbered in BFS order out to `radius`.
      g.adj_.push_back({});
      std::vector<int> frontier = {0};
      std::vector<int> depth = {0};
      for (int layer = 1; layer <= spec.radius; ++layer) {
        std::vector<int> next;
        for (int v : frontier) {
          int kids = (v == 0) ? spec.degree : spec.degree - 1;
          for (int c = 0; c < kids; ++c) {
            int id = static_cast<int>(g.adj_.size());
            g.adj_.push_back({});
            g.adj_[v].push_back(id);
            g.adj_[id].push_back(v);
            depth.push_back(layer);
            next.push_back(id);
          }
        }
        frontier = std::move(next);
      }
      for (std::size_t v = 0; v < g.adj_.size(); ++v)
        if (depth[v] == spec.radius && spec.radius > 0) boundary.push_back(static_cast<int>(v));
      if (spec.radius == 0) boundary.push_back(0);
      break;
    }
    case GeneratorSpec::Type::Cycle: {
      int n = spec.length;
      g.adj_.assign(n, {});
      for (int i = 0; i < n; ++i) {
        g.adj_[i].push_back((i + 1) % n);
        g.adj_[(i + 1) % n].push_back(i);
      }
      // a cycle is a complete graph window: no boundary
      break;
    }
    case GeneratorSpec::Type::CayleyF2: {
      // Ball of radius R in the Cayley graph of the free group on two
      // generators (the 4-regular tree), vertices = reduced words.
      std::map<std::vector<int>, int> index;
      std::vector<std::vector<int>> words = {{}};
      index[{}] = 0;
      g.adj_.push_back({});
      std::vector<int> depth = {0};
      std::size_t head = 0;
      const int letters[4] = {1, -1, 2, -2};
      while (head < words.size()) {
        std::vector<int> w = words[head];
        int d = depth[head];
        if (d == spec.radius) {
          ++head;
          continue;
        }
        for (int l : letters) {
          if (!w.empty() && w.back() == -l) continue;
          std::vector<int> nw = w;
          nw.push_back(l);
          auto [it, fresh] = index.emplace(nw, static_cast<int>(words.size()));
          if (fresh) {
            words.push_back(nw);
            depth.push_back(d + 1);
            g.adj_.push_back({});
          }
          g.adj_[static_cast<int>(head)].push_back(it->second);
          g.adj_[it->second].push_back(static_cast<int>(head));
        }
        ++head;
      }
      for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      }
      for (std::size_t v = 0; v < g.adj_.size(); ++v)
        if (depth[v] == spec.radius && spec.radius > 0) boundary.push_back(static_cast<int>(v));
      if (spec.radius == 0) boundary.push_back(0);
      break;
    }
    case GeneratorSpec::Type::File:
      return from_file(spec.path);
  }
  g.finish(spec, std::move(boundary));
  if (!g.is_connected()) throw std::invalid_argument("generated graph not connected");
  return g;
}

WindowGraph WindowGraph::from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  WindowGraph g;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) continue;
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  GeneratorSpec s;
  s.type = GeneratorSpec::Type::File;
  g.finish(s, {});
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");
  return g;
}

WindowGraph WindowGraph::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("bad graph header in " + path);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("truncated edge list in " + path);
    edges.emplace_back(u, v);
  }
  WindowGraph g = from_edges(n, edges);
  GeneratorSpec s;
  s.type = GeneratorSpec::Type::File;
  s.path = path;
  g.spec_ = s;
  return g;
}

void WindowGraph::write(std::ostream& out) const {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (int v : adj_[u])
      if (static_cast<int>(u) < v) edges.emplace_back(static_cast<int>(u), v);
  out << adj_.size() << " " << edges.size() << "\n";
  for (auto [u, v] : edges) out << u << " " << v << "\n";
}

const std::vector<int>& WindowGraph::distances_from(int source) const {
  if (source < 0 || static_cast<std::size_t>(source) >= adj_.size())
    throw std::out_of_range("vertex out of range");
  return dist_cache_[source];
}

int WindowGraph::boundary_distance(int v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= adj_.size())
    throw std::out_of_range("vertex out of range");
  if (boundary_.empty()) return static_cast<int>(adj_.size());
  int best = std::numeric_limits<int>::max();
  for (int b : boundary_) best = std::min(best, distance(b, v));
  return best;
}

std::vector<int> WindowGraph::interior(int k) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < adj_.size(); ++v)
    if (boundary_distance(static_cast<int>(v)) >= k) out.push_back(static_cast<int>(v));
  return out;
}

int WindowGraph::center_vertex() const {
  int best = 0, best_ecc = std::numeric_limits<int>::max();
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    const auto& d = distances_from(static_cast<int>(v));
    int ecc = 0;
    for (int x : d) ecc = std::max(ecc, x);
    if (ecc < best_ecc) {
      best_ecc = ecc;
      best = static_cast<int>(v);
    }
  }
  return best;
}

bool WindowGraph::is_connected() const {
  if (adj_.empty()) return true;
  const auto& d = distances_from(0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<int> ball(const WindowGraph& g, const std::vector<int>& F, int k) {
  std::vector<char> seen(g.size(), 0);
  std::deque<std::pair<int, int>> q;
  for (int v : F) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.size())
      throw std::out_of_range("ball: vertex out of range");
    if (!seen[v]) {
      seen[v] = 1;
      q.emplace_back(v, 0);
    }
  }
  std::vector<int> out;
  while (!q.empty()) {
    auto [v, d] = q.front();
    q.pop_front();
    out.push_back(v);
    if (d == k) continue;
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        q.emplace_back(w, d + 1);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<mpq_class> iso_profile(const WindowGraph& g,
                                   const std::vector<std::vector<int>>& exhaustion,
                                   int k) {
  std::vector<mpq_class> out;
  for (const auto& F : exhaustion) {
    if (F.empty()) throw std::invalid_argument("iso_profile: empty set");
    for (int v : F) {
      if (g.boundary_distance(v) < k)
        throw std::invalid_argument("iso_profile: set touches the window margin");
    }
    auto B = ball(g, F, k);
    mpq_class r(static_cast<long>(B.size()), static_cast<long>(F.size()));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

}  // namespace afd::graphlab
