#include "splitfox/subgroup_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "splitfox/errors.hpp"

namespace splitfox {

namespace {

struct RawEdge {
  int from, to, label;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // keep the smaller id as representative so the basepoint (0) survives
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

SubgroupGraph stallings_fold(const std::vector<std::string>& alphabet,
                             const std::vector<Word>& gens) {
  {
    std::set<std::string> seen;
    for (const auto& g : alphabet) {
      if (!seen.insert(g).second) throw domain_error("duplicate generator in alphabet: " + g);
    }
  }
  auto label_of = [&](const std::string& g) {
    auto it = std::find(alphabet.begin(), alphabet.end(), g);
    if (it == alphabet.end()) throw domain_error("unknown generator symbol: " + g);
    return static_cast<int>(it - alphabet.begin());
  };

  // Bouquet of loops at vertex 0, one path per generator word.
  std::vector<RawEdge> edges;
  int next_vertex = 1;
  for (const Word& w : gens) {
    if (w.is_identity()) continue;
    int cur = 0;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      int tgt = (i + 1 == ls.size()) ? 0 : next_vertex++;
      int l = label_of(ls[i].gen);
      if (ls[i].sign > 0)
        edges.push_back({cur, tgt, l});
      else
        edges.push_back({tgt, cur, l});
      cur = tgt;
    }
  }

  // Fold: identify targets of equal-label edges leaving (or entering) the
  // same vertex until the graph is deterministic both ways.
  UnionFind uf(next_vertex);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out_seen, in_seen;
    for (const RawEdge& e : edges) {
      int u = uf.find(e.from), v = uf.find(e.to);
      auto [ito, inserted_o] = out_seen.try_emplace({u, e.label}, v);
      if (!inserted_o && ito->second != v) {
        uf.unite(ito->second, v);
        changed = true;
        break;
      }
      auto [iti, inserted_i] = in_seen.try_emplace({v, e.label}, u);
      if (!inserted_i && iti->second != u) {
        uf.unite(iti->second, u);
        changed = true;
        break;
      }
    }
  }

  // Contract identified vertices, dedupe parallel equal edges.
  std::set<std::tuple<int, int, int>> folded;  // (from, to, label)
  std::set<int> verts;
  verts.insert(uf.find(0));
  for (const RawEdge& e : edges) {
    folded.insert({uf.find(e.from), uf.find(e.to), e.label});
    verts.insert(uf.find(e.from));
    verts.insert(uf.find(e.to));
  }

  // Trim to the core: repeatedly drop non-basepoint vertices of total degree
  // <= 1 (hair left over from folding).
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    std::map<int, int> degree;
    for (int v : verts) degree[v] = 0;
    for (const auto& [f, t, l] : folded) {
      (void)l;
      degree[f]++;
      degree[t]++;
    }
    for (int v : verts) {
      if (v != uf.find(0) && degree[v] <= 1) {
        verts.erase(v);
        for (auto it = folded.begin(); it != folded.end();) {
          if (std::get<0>(*it) == v || std::get<1>(*it) == v)
            it = folded.erase(it);
          else
            ++it;
        }
        trimmed = true;
        break;
      }
    }
  }

  // Provisional adjacency on the surviving representatives.
  std::map<int, int> idx;
  int n = 0;
  for (int v : verts) idx[v] = n++;
  int base = idx[uf.find(0)];
  int a = static_cast<int>(alphabet.size());
  std::vector<std::vector<int>> out(n, std::vector<int>(a, -1)), in(n, std::vector<int>(a, -1));
  for (const auto& [f, t, l] : folded) {
    out[idx[f]][l] = idx[t];
    in[idx[t]][l] = idx[f];
  }

  // Canonical renumbering: BFS from the basepoint, out-edges before in-edges,
  // labels ascending. The folded graph is connected, so this reaches all.
  std::vector<int> order(n, -1);
  std::vector<int> queue{base};
  order[base] = 0;
  int assigned = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int l = 0; l < a; ++l) {
      for (int w : {out[v][l], in[v][l]}) {
        if (w >= 0 && order[w] < 0) {
          order[w] = assigned++;
          queue.push_back(w);
        }
      }
    }
  }

  SubgroupGraph g;
  g.alphabet_ = alphabet;
  g.num_vertices_ = n;
  g.out_.assign(n, std::vector<int>(a, -1));
  g.in_.assign(n, std::vector<int>(a, -1));
  for (int v = 0; v < n; ++v) {
    for (int l = 0; l < a; ++l) {
      if (out[v][l] >= 0) g.out_[order[v]][l] = order[out[v][l]];
      if (in[v][l] >= 0) g.in_[order[v]][l] = order[in[v][l]];
    }
  }
  return g;
}

std::vector<SubgroupGraph::Edge> SubgroupGraph::edges() const {
  std::vector<Edge> es;
  for (int v = 0; v < num_vertices_; ++v)
    for (int l = 0; l < static_cast<int>(alphabet_.size()); ++l)
      if (out_[v][l] >= 0) es.push_back({v, out_[v][l], l});
  std::sort(es.begin(), es.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.from, x.label, x.to) < std::tie(y.from, y.label, y.to);
  });
  return es;
}

int SubgroupGraph::num_edges() const {
  int e = 0;
  for (const auto& row : out_)
    for (int t : row) e += (t >= 0);
  return e;
}

int SubgroupGraph::rank() const { return num_edges() - num_vertices_ + 1; }

bool SubgroupGraph::contains(const Word& w) const {
  int v = 0;
  for (const Letter& l : w.letters()) {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), l.gen);
    if (it == alphabet_.end()) throw domain_error("unknown generator symbol: " + l.gen);
    int lab = static_cast<int>(it - alphabet_.begin());
    v = l.sign > 0 ? out_[v][lab] : in_[v][lab];
    if (v < 0) return false;
  }
  return v == 0;
}

struct SubgroupGraph::TreeInfo {
  // parent edge of each vertex in the BFS spanning tree
  std::vector<int> parent;       // vertex, -1 at root
  std::vector<int> parent_label; // label of the connecting edge
  std::vector<int> parent_dir;   // +1: parent --l--> v, -1: v --l--> parent
  std::vector<Edge> non_tree;    // sorted by (label, from, to)
};

SubgroupGraph::TreeInfo SubgroupGraph::spanning_tree() const {
  int a = static_cast<int>(alphabet_.size());
  TreeInfo t;
  t.parent.assign(num_vertices_, -2);
  t.parent_label.assign(num_vertices_, -1);
  t.parent_dir.assign(num_vertices_, 0);
  t.parent[0] = -1;
  std::set<std::tuple<int, int, int>> tree_edges;  // (from, to, label)
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int l = 0; l < a; ++l) {
      int w = out_[v][l];
      if (w >= 0 && t.parent[w] == -2) {
        t.parent[w] = v;
        t.parent_label[w] = l;
        t.parent_dir[w] = +1;
        tree_edges.insert({v, w, l});
        queue.push_back(w);
      }
      w = in_[v][l];
      if (w >= 0 && t.parent[w] == -2) {
        t.parent[w] = v;
        t.parent_label[w] = l;
        t.parent_dir[w] = -1;
        tree_edges.insert({w, v, l});
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < num_vertices_; ++v) {
    for (int l = 0; l < a; ++l) {
      if (out_[v][l] >= 0 && !tree_edges.count({v, out_[v][l], l}))
        t.non_tree.push_back({v, out_[v][l], l});
    }
  }
  std::sort(t.non_tree.begin(), t.non_tree.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.label, x.from, x.to) < std::tie(y.label, y.from, y.to);
  });
  return t;
}

namespace {

Word path_from_base(const std::vector<int>& parent, const std::vector<int>& parent_label,
                    const std::vector<int>& parent_dir, const std::vector<std::string>& alphabet,
                    int v) {
  std::vector<Letter> rev;
  while (parent[v] >= 0) {
    rev.push_back(Letter{alphabet[parent_label[v]], parent_dir[v]});
    v = parent[v];
  }
  std::reverse(rev.begin(), rev.end());
  return Word::from_letters(rev);
}

}  // namespace

std::vector<Word> SubgroupGraph::basis() const {
  TreeInfo t = spanning_tree();
  std::vector<Word> b;
  for (const Edge& e : t.non_tree) {
    Word to_u = path_from_base(t.parent, t.parent_label, t.parent_dir, alphabet_, e.from);
    Word to_v = path_from_base(t.parent, t.parent_label, t.parent_dir, alphabet_, e.to);
    b.push_back(to_u * Word::letter(alphabet_[e.label]) * to_v.inverse());
  }
  return b;
}

std::optional<std::vector<std::pair<int, int>>> SubgroupGraph::express(const Word& w) const {
  TreeInfo t = spanning_tree();
  std::map<std::tuple<int, int, int>, int> non_tree_index;
  for (std::size_t i = 0; i < t.non_tree.size(); ++i) {
    const Edge& e = t.non_tree[i];
    non_tree_index[{e.from, e.to, e.label}] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> expr;
  int v = 0;
  for (const Letter& l : w.letters()) {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), l.gen);
    if (it == alphabet_.end()) throw domain_error("unknown generator symbol: " + l.gen);
    int lab = static_cast<int>(it - alphabet_.begin());
    int from, to;
    if (l.sign > 0) {
      from = v;
      to = out_[v][lab];
    } else {
      to = v;
      from = in_[v][lab];
    }
    if ((l.sign > 0 ? to : from) < 0) return std::nullopt;
    auto nt = non_tree_index.find({from, to, lab});
    if (nt != non_tree_index.end()) expr.emplace_back(nt->second, l.sign);
    v = l.sign > 0 ? to : from;
  }
  if (v != 0) return std::nullopt;
  return expr;
}

std::optional<int> SubgroupGraph::covering_index() const {
  for (int v = 0; v < num_vertices_; ++v)
    for (std::size_t l = 0; l < alphabet_.size(); ++l)
      if (out_[v][l] < 0 || in_[v][l] < 0) return std::nullopt;
  return num_vertices_;
}

bool is_basis(const std::vector<std::string>& alphabet, const std::vector<Word>& words) {
  if (words.empty()) throw domain_error("is_basis: empty word list");
  for (const Word& w : words)
    if (w.is_identity()) return false;
  return stallings_fold(alphabet, words).rank() == static_cast<int>(words.size());
}

bool free_hom_injective(const std::vector<std::string>& alphabet,
                        const std::vector<Word>& domain_gens, const std::vector<Word>& images) {
  if (domain_gens.size() != images.size())
    throw domain_error("free_hom_injective: generator/image count mismatch");
  if (!is_basis(alphabet, domain_gens))
    throw domain_error("free_hom_injective: domain generators are not a basis");
  return stallings_fold(alphabet, images).rank() == static_cast<int>(images.size());
}

}  // namespace splitfox
