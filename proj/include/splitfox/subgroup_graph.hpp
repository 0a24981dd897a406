#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitfox/word.hpp"

namespace splitfox {

// Folded core graph of a finitely generated subgroup of a free group
// (Stallings). After folding the graph is deterministic in both directions:
// every vertex has at most one outgoing and one incoming edge per label.
// Vertices are renumbered canonically (basepoint-rooted BFS, out-edges before
// in-edges, labels ascending), so equal subgroups of the same ambient free
// group produce identical graphs.
class SubgroupGraph {
 public:
  struct Edge {
    int from;
    int to;
    int label;  // index into alphabet()
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int num_vertices() const { return num_vertices_; }
  int basepoint() const { return 0; }
  std::vector<Edge> edges() const;  // sorted by (from, label, to)
  int num_edges() const;

  // rank of the subgroup: E - V + 1 on the folded core.
  int rank() const;

  // Membership: traces w from the basepoint; false if the trace dies or ends
  // elsewhere.
  bool contains(const Word& w) const;

  // Free basis of the subgroup, one word per non-tree edge of the canonical
  // spanning tree, ordered by (label, from, to).
  std::vector<Word> basis() const;

  // Rewrites w in the basis; each element is (basis index, +1/-1), the product
  // of the corresponding basis words equals w. Empty expression = identity.
  std::optional<std::vector<std::pair<int, int>>> express(const Word& w) const;

  // Number of sheets if the graph is a covering of the rose (every vertex
  // complete in both directions); nullopt means infinite index.
  std::optional<int> covering_index() const;

  friend bool operator==(const SubgroupGraph&, const SubgroupGraph&) = default;

  friend SubgroupGraph stallings_fold(const std::vector<std::string>&, const std::vector<Word>&);

 private:
  std::vector<std::string> alphabet_;
  int num_vertices_ = 1;
  // adjacency: out_[v][l] / in_[v][l] = target vertex, -1 if absent
  std::vector<std::vector<int>> out_, in_;

  struct TreeInfo;
  TreeInfo spanning_tree() const;
};

// Folds the bouquet of loops spelling `gens` at a common basepoint and trims
// to the core. Identity words contribute nothing. Every letter must belong to
// `alphabet`; folding is independent of generator order and inversion.
SubgroupGraph stallings_fold(const std::vector<std::string>& alphabet,
                             const std::vector<Word>& gens);

// True iff `words` freely generate the subgroup they span, decided by
// rank(fold(words)) == |words|. An identity word can never belong to a basis.
bool is_basis(const std::vector<std::string>& alphabet, const std::vector<Word>& words);

// True iff domain_gens[i] |-> images[i] extends to an injective homomorphism.
// Requires domain_gens to be a basis; then the map is injective iff the
// subgroup generated by the images has rank |images| (free groups are
// Hopfian, so a surjection F_n -> F_n is an isomorphism).
bool free_hom_injective(const std::vector<std::string>& alphabet,
                        const std::vector<Word>& domain_gens,
                        const std::vector<Word>& images);

}  // namespace splitfox
