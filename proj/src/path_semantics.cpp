#include "placid/path_semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace placid {

Label label_from_char(char c) {
  if (c == 'X') return Label::X;
  if (c == 'Y') return Label::Y;
  throw std::invalid_argument(std::string("label '") + c + "' not in {X,Y}");
}

LabeledDigraph::LabeledDigraph(TropMatrix x, TropMatrix y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.dim() != y_.dim()) {
    throw std::invalid_argument("LabeledDigraph: dimension mismatch " + std::to_string(x_.dim()) +
                                " vs " + std::to_string(y_.dim()));
  }
  if (!x_.labels() || x_.labels() != y_.labels()) {
    x_.clear_labels();
    y_.clear_labels();
  }
}

const std::vector<Subset>& LabeledDigraph::vertex_labels() const {
  if (!subset_labeled()) throw std::logic_error("LabeledDigraph: vertices carry no subset labels");
  return *x_.labels();
}

std::size_t LabeledDigraph::vertex_of(Subset s) const {
  const auto& labels = vertex_labels();
  const auto it = std::find(labels.begin(), labels.end(), s);
  if (it == labels.end()) {
    throw std::invalid_argument("LabeledDigraph: no vertex " + format_subset(s));
  }
  return static_cast<std::size_t>(it - labels.begin());
}

std::optional<Edge> LabeledDigraph::edge(std::size_t src, std::size_t dst, Label l) const {
  const Trop w = matrix(l).at(src, dst);
  if (!w.is_finite()) return std::nullopt;
  return Edge{src, dst, l, w.value()};
}

std::vector<Edge> LabeledDigraph::edges() const {
  std::vector<Edge> out;
  for (Label l : {Label::X, Label::Y}) {
    for (std::size_t i = 0; i < vertex_count(); ++i) {
      for (std::size_t j = 0; j < vertex_count(); ++j) {
        if (auto e = edge(i, j, l)) out.push_back(*e);
      }
    }
  }
  return out;
}

LabeledDigraph build_digraph(const TropMatrix& x, const TropMatrix& y) { return {x, y}; }

Path::Path(std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (edges_.empty()) throw std::invalid_argument("Path: no edges");
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k - 1].dst != edges_[k].src) {
      throw std::invalid_argument("Path: edge " + std::to_string(k) +
                                  " does not start where the previous edge ends");
    }
  }
}

std::vector<std::size_t> Path::vertices() const {
  std::vector<std::size_t> out{start()};
  for (const Edge& e : edges_) out.push_back(e.dst);
  return out;
}

std::string Path::labels() const {
  std::string out;
  for (const Edge& e : edges_) out += static_cast<char>(e.label);
  return out;
}

Path make_path(const LabeledDigraph& g, std::span<const std::size_t> vertices,
               std::string_view labels) {
  if (vertices.size() != labels.size() + 1) {
    throw std::invalid_argument("make_path: need one more vertex than labels");
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const Label l = label_from_char(labels[k]);
    auto e = g.edge(vertices[k], vertices[k + 1], l);
    if (!e) {
      throw std::invalid_argument("make_path: no " + std::string(1, labels[k]) + "-edge " +
                                  std::to_string(vertices[k]) + " -> " +
                                  std::to_string(vertices[k + 1]));
    }
    edges.push_back(*e);
  }
  return Path(std::move(edges));
}

Trop path_weight(const Path& p) {
  std::int64_t total = 0;
  for (const Edge& e : p.edges()) total += e.weight;
  return Trop{total};
}

WeightedPath max_weight_path(const LabeledDigraph& g, std::string_view labels, std::size_t src,
                             std::size_t dst) {
  if (labels.empty()) throw std::invalid_argument("max_weight_path: empty label word");
  const std::size_t d = g.vertex_count();
  if (src >= d || dst >= d) throw std::out_of_range("max_weight_path: vertex out of range");
  std::vector<Label> word;
  for (char c : labels) word.push_back(label_from_char(c));

  // suffix[k][v]: heaviest path from v to dst spelling word[k..].
  const std::size_t len = word.size();
  std::vector<std::vector<Trop>> suffix(len + 1, std::vector<Trop>(d));
  suffix[len][dst] = Trop::zero();
  for (std::size_t k = len; k-- > 0;) {
    const TropMatrix& m = g.matrix(word[k]);
    for (std::size_t v = 0; v < d; ++v) {
      Trop best;
      for (std::size_t u = 0; u < d; ++u) best = best + m(v, u) * suffix[k + 1][u];
      suffix[k][v] = best;
    }
  }
  WeightedPath out{suffix[0][src], std::nullopt};
  if (!out.weight.is_finite()) return out;

  // Walk forward taking the smallest next vertex that stays optimal.
  std::vector<Edge> edges;
  std::size_t v = src;
  for (std::size_t k = 0; k < len; ++k) {
    const TropMatrix& m = g.matrix(word[k]);
    for (std::size_t u = 0; u < d; ++u) {
      if (m(v, u).is_finite() && m(v, u) * suffix[k + 1][u] == suffix[k][v]) {
        edges.push_back(Edge{v, u, word[k], m(v, u).value()});
        v = u;
        break;
      }
    }
  }
  out.witness = Path(std::move(edges));
  return out;
}

namespace {

template <class Map>
Path map_path(const LabeledDigraph& g, const Path& p, Map&& f, const char* who) {
  if (!g.subset_labeled()) {
    throw std::invalid_argument(std::string(who) + ": digraph is not subset-labelled");
  }
  const auto& labels = g.vertex_labels();
  std::vector<std::size_t> verts;
  for (std::size_t v : p.vertices()) verts.push_back(g.vertex_of(f(labels.at(v))));
  return make_path(g, verts, p.labels());
}

}  // namespace

Path phi_path(const LabeledDigraph& g, const Path& p, Subset n) {
  return map_path(g, p, [n](Subset s) { return meet(s, n); }, "phi_path");
}

Path psi_path(const LabeledDigraph& g, const Path& p, Subset n) {
  return map_path(g, p, [n](Subset s) { return join(s, n); }, "psi_path");
}

SplitPaths splitting_paths(const LabeledDigraph& g, const Path& gamma, Subset s, Subset t,
                           Subset n) {
  if (!g.subset_labeled()) {
    throw std::invalid_argument("splitting_paths: digraph is not subset-labelled");
  }
  if (s.size() != t.size() || !subset_leq(s, t)) {
    throw std::invalid_argument("splitting_paths: requires |S| = |T| and S <= T");
  }
  if (!subset_leq(s, n) || !subset_leq(n, t)) {
    throw std::invalid_argument("splitting_paths: N must lie in [S, T]");
  }
  if (gamma.start() != g.vertex_of(s) || gamma.end() != g.vertex_of(t)) {
    throw std::invalid_argument("splitting_paths: gamma must run from S to T");
  }
  Path sigma = phi_path(g, gamma, n);
  Path tau = psi_path(g, gamma, n);
  const std::size_t nv = g.vertex_of(n);
  const std::vector<std::size_t> loops(gamma.length() + 1, nv);
  Path lambda = make_path(g, loops, gamma.labels());

  const std::int64_t lhs = path_weight(gamma).value() + path_weight(lambda).value();
  const std::int64_t rhs = path_weight(sigma).value() + path_weight(tau).value();
  return SplitPaths{std::move(sigma), std::move(tau), std::move(lambda), lhs, rhs};
}

}  // namespace placid
