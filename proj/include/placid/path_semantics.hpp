#pragma once

// Labelled weighted digraphs G_{X,Y}: one vertex per row index, an X-edge
// (i, j) of weight X_ij whenever X_ij != -inf, and likewise for Y. Entry
// (i, j) of a product of X's and Y's is the heaviest path from i to j whose
// edge labels spell the product.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "placid/subset_lattice.hpp"
#include "placid/tropical.hpp"

namespace placid {

enum class Label : char { X = 'X', Y = 'Y' };

/// Throws std::invalid_argument for anything but 'X' or 'Y'.
Label label_from_char(char c);

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  Label label = Label::X;
  std::int64_t weight = 0;

  bool is_loop() const { return src == dst; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class LabeledDigraph {
 public:
  /// Throws std::invalid_argument when dimensions differ. Vertices carry
  /// subset labels when both matrices carry the same labels.
  LabeledDigraph(TropMatrix x, TropMatrix y);

  std::size_t vertex_count() const { return x_.dim(); }
  bool subset_labeled() const { return x_.labels().has_value(); }
  /// Throws std::logic_error on an unlabelled digraph.
  const std::vector<Subset>& vertex_labels() const;
  /// Throws when the digraph is unlabelled or `s` is not a vertex.
  std::size_t vertex_of(Subset s) const;

  const TropMatrix& matrix(Label l) const { return l == Label::X ? x_ : y_; }
  std::optional<Edge> edge(std::size_t src, std::size_t dst, Label l) const;
  /// Every edge; X-edges first, each group in row-major order.
  std::vector<Edge> edges() const;

 private:
  TropMatrix x_;
  TropMatrix y_;
};

LabeledDigraph build_digraph(const TropMatrix& x, const TropMatrix& y);

/// A non-empty sequence of edges with matching endpoints.
class Path {
 public:
  /// Throws std::invalid_argument on an empty list or mismatched endpoints.
  explicit Path(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  std::size_t start() const { return edges_.front().src; }
  std::size_t end() const { return edges_.back().dst; }
  /// length() + 1 vertices.
  std::vector<std::size_t> vertices() const;
  /// "XYX..."
  std::string labels() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Path through `vertices` (length labels.size() + 1) with the given labels,
/// weights read from g. Throws std::invalid_argument if an edge is absent.
Path make_path(const LabeledDigraph& g, std::span<const std::size_t> vertices,
               std::string_view labels);

/// Sum of edge weights.
Trop path_weight(const Path& p);

struct WeightedPath {
  Trop weight;                 ///< -inf when no labelled path exists.
  std::optional<Path> witness; ///< A path achieving `weight`.
};

/// Heaviest path from src to dst labelled by `labels` (over {X, Y}). Among
/// heaviest paths the witness has the lexicographically smallest vertex
/// sequence. Throws std::invalid_argument on an empty label word.
WeightedPath max_weight_path(const LabeledDigraph& g, std::string_view labels, std::size_t src,
                             std::size_t dst);

/// Image of p under S -> S meet N (phi) or S -> S join N (psi), vertex by
/// vertex, keeping labels. Requires a subset-labelled digraph built from
/// representation matrices, where these images are always valid paths.
Path phi_path(const LabeledDigraph& g, const Path& p, Subset n);
Path psi_path(const LabeledDigraph& g, const Path& p, Subset n);

/// Result of splitting a path gamma from S to T at an intermediate set N.
struct SplitPaths {
  Path sigma;   ///< phi_N(gamma), from S to N.
  Path tau;     ///< psi_N(gamma), from N to T.
  Path lambda;  ///< Loops at N with gamma's labels.

  /// w(gamma) + w(lambda) and w(sigma) + w(tau).
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool inequality_holds() const { return lhs <= rhs; }
};

/// Requires g to be built from two representation matrices, gamma to run
/// from s to t with |s| == |t| and s <= t, and s <= n <= t.
/// Throws std::invalid_argument on violated preconditions.
SplitPaths splitting_paths(const LabeledDigraph& g, const Path& gamma, Subset s, Subset t,
                           Subset n);

}  // namespace placid
