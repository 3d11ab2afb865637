#include <algorithm>

#include "doctest.h"
#include "placid/path_semantics.hpp"
#include "placid/plactic_rep.hpp"
#include "placid/verify/oracles.hpp"
#include "test_util.hpp"

using namespace placid;

namespace {

Subset S(std::initializer_list<int> xs) { return Subset::of(xs); }

std::string to_ab(std::string_view labels) {
  std::string out(labels);
  for (char& c : out) c = c == 'X' ? 'a' : 'b';
  return out;
}

std::string random_labels(Rng& rng, int min_len, int max_len) {
  std::string w(static_cast<std::size_t>(uniform_int(rng, min_len, max_len)), 'X');
  for (char& c : w) c = bernoulli(rng, 0.5) ? 'X' : 'Y';
  return w;
}

LabeledDigraph random_rho_digraph(Rng& rng, int n) {
  const PlacticRep rep(n);
  return build_digraph(rep.word(testutil::random_word(rng, n, 1, 5)),
                       rep.word(testutil::random_word(rng, n, 1, 5)));
}

Path random_walk(Rng& rng, const LabeledDigraph& g, std::string_view labels, Subset s, Subset t,
                 int n) {
  std::vector<std::size_t> verts{g.vertex_of(s)};
  Subset cur = s;
  for (std::size_t k = 0; k + 1 < labels.size(); ++k) {
    const auto options = enumerate_interval(cur, t, n);
    cur = options[uniform_below(rng, options.size())];
    verts.push_back(g.vertex_of(cur));
  }
  verts.push_back(g.vertex_of(t));
  return make_path(g, verts, labels);
}

}  // namespace

TEST_CASE("identity matrices give zero-weight X loops") {
  const auto id = TropMatrix::identity(3);
  const auto g = build_digraph(id, TropMatrix(3));
  const auto edges = g.edges();
  CHECK(edges.size() == 3);
  for (const Edge& e : edges) {
    CHECK(e.is_loop());
    CHECK(e.label == Label::X);
    CHECK(e.weight == 0);
  }
  CHECK_FALSE(g.subset_labeled());
  CHECK_FALSE(g.edge(0, 0, Label::Y));
}

TEST_CASE("digraph of the rank-2 generators") {
  const auto g = build_digraph(rho_generator(2, 1), rho_generator(2, 2));
  CHECK(g.vertex_count() == 4);
  REQUIRE(g.subset_labeled());
  const auto e = g.edge(g.vertex_of(S({1})), g.vertex_of(S({2})), Label::X);
  REQUIRE(e);
  CHECK(e->weight == 1);
  CHECK_FALSE(g.edge(g.vertex_of(S({2})), g.vertex_of(S({1})), Label::X));
  CHECK_THROWS_AS(g.vertex_of(S({3})), std::invalid_argument);
  CHECK_THROWS_AS(LabeledDigraph(TropMatrix(2), TropMatrix(3)), std::invalid_argument);
}

TEST_CASE("paths and weights") {
  const auto g = build_digraph(rho_generator(2, 1), rho_generator(2, 2));
  const std::size_t v1 = g.vertex_of(S({1}));
  const std::size_t v2 = g.vertex_of(S({2}));
  const std::vector<std::size_t> one{v1, v2};
  const Path single = make_path(g, one, "X");
  CHECK(path_weight(single) == Trop{1});
  CHECK(single.start() == v1);
  CHECK(single.end() == v2);
  const std::vector<std::size_t> two{v1, v1, v2};
  const Path p = make_path(g, two, "XY");
  CHECK(p.labels() == "XY");
  CHECK(p.vertices() == two);
  CHECK(path_weight(p) == Trop{2});
  const std::vector<std::size_t> back{v2, v1};
  CHECK_THROWS_AS(make_path(g, back, "X"), std::invalid_argument);
  CHECK_THROWS_AS(make_path(g, one, "XY"), std::invalid_argument);
  CHECK_THROWS_AS(make_path(g, one, "Z"), std::invalid_argument);
  CHECK_THROWS_AS(Path({}), std::invalid_argument);
}

TEST_CASE("no labelled path gives -inf") {
  const auto g = build_digraph(TropMatrix::identity(2), TropMatrix(2));
  const auto r = max_weight_path(g, "XY", 0, 0);
  CHECK(r.weight == Trop::neg_inf());
  CHECK_FALSE(r.witness);
  CHECK_THROWS_AS(max_weight_path(g, "", 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(max_weight_path(g, "X", 0, 2), std::out_of_range);
}

TEST_CASE("heaviest path agrees with the matrix product") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Rng rng = stream_rng(31, i);
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, 16));
    const auto x = random_ut(dim, -2, 4, 0.3, rng);
    const auto y = random_ut(dim, -2, 4, 0.3, rng);
    const auto g = build_digraph(x, y);
    const std::string labels = random_labels(rng, 1, 8);
    const auto product = eval_word(to_ab(labels), x, y);
    for (std::size_t s = 0; s < dim; ++s) {
      for (std::size_t t = 0; t < dim; ++t) {
        const auto r = max_weight_path(g, labels, s, t);
        REQUIRE(r.weight == product(s, t));
        if (r.witness) {
          REQUIRE(path_weight(*r.witness) == r.weight);
          REQUIRE(r.witness->labels() == labels);
          REQUIRE(r.witness->start() == s);
          REQUIRE(r.witness->end() == t);
        }
      }
    }
  }
}

TEST_CASE("witness is the smallest optimal vertex sequence") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = stream_rng(32, i);
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    const auto x = random_ut(dim, 0, 2, 0.2, rng);
    const auto y = random_ut(dim, 0, 2, 0.2, rng);
    const auto g = build_digraph(x, y);
    const std::string labels = random_labels(rng, 1, 4);
    const auto r = max_weight_path(g, labels, 0, dim - 1);
    REQUIRE(r.weight == oracle::path_max(x, y, to_ab(labels), 0, dim - 1));
    if (!r.witness) continue;
    // Scan vertex sequences in lexicographic order; the first optimal one wins.
    std::vector<std::size_t> verts(labels.size() + 1, 0);
    verts.back() = dim - 1;
    std::optional<std::vector<std::size_t>> first;
    while (!first) {
      Trop w = Trop::zero();
      for (std::size_t k = 0; k < labels.size(); ++k) {
        w = w * g.matrix(label_from_char(labels[k]))(verts[k], verts[k + 1]);
      }
      if (w == r.weight) first = verts;
      std::size_t k = labels.size() - 1;
      while (k > 0 && ++verts[k] == dim) verts[k--] = 0;
      if (k == 0) break;
    }
    REQUIRE(first);
    CHECK(r.witness->vertices() == *first);
  }
}

TEST_CASE("phi and psi move vertices by meet and join") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = stream_rng(33, i);
    const int n = static_cast<int>(uniform_int(rng, 2, 4));
    const auto g = random_rho_digraph(rng, n);
    const auto [s, t] = testutil::random_pair(rng, n, false);
    const std::string labels = random_labels(rng, 1, 5);
    const Path p = random_walk(rng, g, labels, s, t, n);
    const auto cands = canonical_subsets(n);
    Subset mid = cands[uniform_below(rng, cands.size())];
    while (mid.size() != s.size()) mid = cands[uniform_below(rng, cands.size())];

    const Path lo = phi_path(g, p, mid);
    const Path hi = psi_path(g, p, mid);
    REQUIRE(lo.labels() == labels);
    REQUIRE(hi.labels() == labels);
    const auto pv = p.vertices();
    const auto lv = lo.vertices();
    const auto hv = hi.vertices();
    for (std::size_t k = 0; k < pv.size(); ++k) {
      const Subset v = g.vertex_labels()[pv[k]];
      REQUIRE(g.vertex_labels()[lv[k]] == meet(v, mid));
      REQUIRE(g.vertex_labels()[hv[k]] == join(v, mid));
    }
  }
}

TEST_CASE("phi with N at the start") {
  const PlacticRep rep(3);
  const auto g = build_digraph(rep.word({1, 2}), rep.word({3, 2}));
  const std::vector<std::size_t> verts{g.vertex_of(S({1})), g.vertex_of(S({2})), g.vertex_of(S({3}))};
  const Path p = make_path(g, verts, "XY");
  const Path lo = phi_path(g, p, S({1}));
  CHECK(lo.start() == g.vertex_of(S({1})));
  CHECK(lo.end() == g.vertex_of(meet(S({3}), S({1}))));
  const Path hi = psi_path(g, p, S({3}));
  CHECK(hi.start() == g.vertex_of(S({3})));
  CHECK(hi.end() == g.vertex_of(S({3})));
  const auto plain = build_digraph(TropMatrix::identity(2), TropMatrix::identity(2));
  const std::vector<std::size_t> loop{0, 0};
  CHECK_THROWS_AS(phi_path(plain, make_path(plain, loop, "X"), S({1})), std::invalid_argument);
}

TEST_CASE("splitting paths at the interval ends") {
  const PlacticRep rep(3);
  const auto g = build_digraph(rep.word({1, 3, 2}), rep.word({2, 2, 3}));
  const Subset s = S({1, 2});
  const Subset t = S({2, 3});
  const auto gamma = max_weight_path(g, "XYX", g.vertex_of(s), g.vertex_of(t)).witness;
  REQUIRE(gamma);
  for (Subset mid : {s, t}) {
    const auto sp = splitting_paths(g, *gamma, s, t, mid);
    CHECK(sp.sigma.start() == g.vertex_of(s));
    CHECK(sp.sigma.end() == g.vertex_of(mid));
    CHECK(sp.tau.start() == g.vertex_of(mid));
    CHECK(sp.tau.end() == g.vertex_of(t));
    for (const Edge& e : sp.lambda.edges()) CHECK(e.is_loop());
    CHECK(sp.inequality_holds());
  }
  // N = T: sigma is gamma itself and tau is all loops at T.
  const auto at_t = splitting_paths(g, *gamma, s, t, t);
  CHECK(at_t.sigma == *gamma);
  CHECK(at_t.tau == at_t.lambda);
  CHECK(at_t.lhs == at_t.rhs);
}

TEST_CASE("splitting paths preconditions") {
  const PlacticRep rep(3);
  const auto g = build_digraph(rep.word({1, 2}), rep.word({3}));
  const auto gamma = max_weight_path(g, "XY", g.vertex_of(S({1})), g.vertex_of(S({3}))).witness;
  REQUIRE(gamma);
  CHECK_THROWS_AS(splitting_paths(g, *gamma, S({1}), S({3}), S({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(splitting_paths(g, *gamma, S({1}), S({2}), S({2})), std::invalid_argument);
  CHECK_THROWS_AS(splitting_paths(g, *gamma, S({3}), S({1}), S({2})), std::invalid_argument);
}

TEST_CASE("splitting-paths inequality on random instances, n <= 4") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng = stream_rng(34, i);
    const int n = static_cast<int>(uniform_int(rng, 2, 4));
    const auto g = random_rho_digraph(rng, n);
    const auto [s, t] = testutil::random_pair(rng, n, false);
    const std::string labels = random_labels(rng, 1, 6);
    const Path gamma = i % 2 == 0
                           ? *max_weight_path(g, labels, g.vertex_of(s), g.vertex_of(t)).witness
                           : random_walk(rng, g, labels, s, t, n);
    const auto between = enumerate_interval(s, t, n);
    const Subset mid = between[uniform_below(rng, between.size())];
    const auto sp = splitting_paths(g, gamma, s, t, mid);
    REQUIRE(sp.lhs == path_weight(gamma).value() + path_weight(sp.lambda).value());
    REQUIRE(sp.rhs == path_weight(sp.sigma).value() + path_weight(sp.tau).value());
    REQUIRE(sp.inequality_holds());
  }
}
