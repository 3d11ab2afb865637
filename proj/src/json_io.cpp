#include "placid/json_io.hpp"

#include <stdexcept>

namespace placid {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

void to_json(Json& j, const Trop& t) {
  if (t.is_finite()) {
    j = t.value();
  } else {
    j = "-inf";
  }
}

void from_json(const Json& j, Trop& t) {
  if (j.is_string() && j.get<std::string>() == "-inf") {
    t = Trop::neg_inf();
  } else if (j.is_number_integer()) {
    t = Trop{j.get<std::int64_t>()};
  } else {
    bad("tropical scalar must be an integer or \"-inf\", got " + j.dump());
  }
}

void to_json(Json& j, const Subset& s) { j = s.elements(); }

void from_json(const Json& j, Subset& s) {
  if (!j.is_array()) bad("subset must be an integer array, got " + j.dump());
  const auto xs = j.get<std::vector<int>>();
  s = Subset::of(xs);
  if (s.size() != static_cast<int>(xs.size())) bad("subset has repeated elements: " + j.dump());
}

void to_json(Json& j, const Tableau& t) { j = Json{{"rows", t.rows()}}; }

void from_json(const Json& j, Tableau& t) {
  t = Tableau(field(j, "rows").get<std::vector<Tableau::Row>>());
}

void to_json(Json& j, const IdentityWords& id) { j = Json{{"lhs", id.lhs}, {"rhs", id.rhs}}; }

void from_json(const Json& j, IdentityWords& id) {
  const auto& l = field(j, "lhs");
  const auto& r = field(j, "rhs");
  if (!l.is_string() || !r.is_string()) bad("identity sides must be strings");
  id = IdentityWords{l.get<std::string>(), r.get<std::string>()};
  validate_identity(id);
}

void to_json(Json& j, const BuiltIdentity& b) {
  j = Json{{"lhs", b.identity.lhs},
           {"rhs", b.identity.rhs},
           {"q", b.q},
           {"h", b.h},
           {"length", b.length()},
           {"rank", b.rank},
           {"constrained", b.constrained},
           {"mode", to_string(b.mode)},
           {"pre_lhs", b.pre_lhs},
           {"pre_rhs", b.pre_rhs}};
}

void from_json(const Json& j, BuiltIdentity& b) {
  from_json(j, b.identity);
  b.q = field(j, "q").get<std::string>();
  b.h = field(j, "h").get<int>();
  b.rank = field(j, "rank").get<int>();
  b.constrained = field(j, "constrained").get<bool>();
  b.mode = parse_qmode(field(j, "mode").get<std::string>());
  b.pre_lhs = field(j, "pre_lhs").get<std::string>();
  b.pre_rhs = field(j, "pre_rhs").get<std::string>();
  if (field(j, "length").get<std::size_t>() != b.length()) bad("identity length does not match lhs");
}

void to_json(Json& j, const PlacticCheckReport& r) {
  const bool exhaustive = r.strategy.kind == PlacticStrategy::Kind::Exhaustive;
  j = Json{{"verdict", r.verdict()},
           {"rank", r.rank},
           {"identity", r.identity},
           {"strategy",
            {{"kind", exhaustive ? "exhaustive" : "random"},
             {"max_word_len", r.strategy.max_word_len},
             {"samples", r.strategy.samples},
             {"seed", r.strategy.seed}}},
           {"seed", r.strategy.seed},
           {"samples_run", r.samples_run},
           {"budget_exhausted", r.budget_exhausted}};
  if (r.counterexample) {
    j["counterexample"] = {{"x", format_word(r.counterexample->x)},
                           {"y", format_word(r.counterexample->y)},
                           {"sample_index", r.counterexample->sample_index}};
  } else {
    j["counterexample"] = nullptr;
  }
}

void from_json(const Json& j, PlacticCheckReport& r) {
  r.rank = field(j, "rank").get<int>();
  from_json(field(j, "identity"), r.identity);
  const auto& s = field(j, "strategy");
  const auto kind = field(s, "kind").get<std::string>();
  if (kind != "exhaustive" && kind != "random") bad("unknown strategy kind '" + kind + "'");
  r.strategy.kind =
      kind == "exhaustive" ? PlacticStrategy::Kind::Exhaustive : PlacticStrategy::Kind::Random;
  r.strategy.max_word_len = field(s, "max_word_len").get<int>();
  r.strategy.samples = field(s, "samples").get<std::uint64_t>();
  r.strategy.seed = field(s, "seed").get<std::uint64_t>();
  r.samples_run = field(j, "samples_run").get<std::uint64_t>();
  r.budget_exhausted = field(j, "budget_exhausted").get<bool>();
  const auto& c = field(j, "counterexample");
  if (c.is_null()) {
    r.counterexample.reset();
  } else {
    r.counterexample = PlacticCounterexample{parse_word(field(c, "x").get<std::string>()),
                                             parse_word(field(c, "y").get<std::string>()),
                                             field(c, "sample_index").get<std::uint64_t>()};
  }
}

void to_json(Json& j, const TropWitness& w) {
  j = Json{{"identity", w.identity},
           {"dim", w.dim},
           {"X", w.x},
           {"Y", w.y},
           {"differing_entry", {{"row", w.row}, {"col", w.col}, {"lhs", w.lhs_value}, {"rhs", w.rhs_value}}},
           {"sample_index", w.sample_index}};
}

void from_json(const Json& j, TropWitness& w) {
  from_json(field(j, "identity"), w.identity);
  w.dim = field(j, "dim").get<std::size_t>();
  w.x = field(j, "X").get<TropMatrix>();
  w.y = field(j, "Y").get<TropMatrix>();
  const auto& d = field(j, "differing_entry");
  w.row = field(d, "row").get<std::size_t>();
  w.col = field(d, "col").get<std::size_t>();
  w.lhs_value = field(d, "lhs").get<Trop>();
  w.rhs_value = field(d, "rhs").get<Trop>();
  w.sample_index = j.value("sample_index", std::uint64_t{0});
}

void to_json(Json& j, const TropSearchReport& r) {
  j = Json{{"verdict", r.verdict()},
           {"dim", r.dim},
           {"identity", r.identity},
           {"config",
            {{"entry_min", r.config.entry_min},
             {"entry_max", r.config.entry_max},
             {"neg_inf_density", r.config.neg_inf_density},
             {"samples", r.config.samples},
             {"seed", r.config.seed}}},
           {"seed", r.config.seed},
           {"samples_run", r.samples_run},
           {"budget_exhausted", r.budget_exhausted}};
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
}

void from_json(const Json& j, TropSearchReport& r) {
  r.dim = field(j, "dim").get<std::size_t>();
  from_json(field(j, "identity"), r.identity);
  const auto& c = field(j, "config");
  r.config.entry_min = field(c, "entry_min").get<std::int64_t>();
  r.config.entry_max = field(c, "entry_max").get<std::int64_t>();
  r.config.neg_inf_density = field(c, "neg_inf_density").get<double>();
  r.config.samples = field(c, "samples").get<std::uint64_t>();
  r.config.seed = field(c, "seed").get<std::uint64_t>();
  r.samples_run = field(j, "samples_run").get<std::uint64_t>();
  r.budget_exhausted = field(j, "budget_exhausted").get<bool>();
  const auto& w = field(j, "witness");
  if (w.is_null()) {
    r.witness.reset();
  } else {
    r.witness = w.get<TropWitness>();
  }
}

void to_json(Json& j, const RhoConsistencyReport& r) {
  j = Json{{"verdict", r.consistent() ? "consistent" : "inconsistent"},
           {"identity", r.identity},
           {"rank", r.rank},
           {"max_word_len", r.max_word_len},
           {"seed", r.seed},
           {"samples_run", r.samples_run},
           {"matrix_mismatches", r.matrix_mismatches},
           {"verdict_disagreements", r.verdict_disagreements}};
  if (r.first_disagreement) {
    j["first_disagreement"] = {{"x", format_word(r.first_disagreement->first)},
                               {"y", format_word(r.first_disagreement->second)}};
  } else {
    j["first_disagreement"] = nullptr;
  }
}

void to_json(Json& j, const FaithfulnessReport& r) {
  Json violations = Json::array();
  for (const auto& [u, v] : r.violations) violations.push_back({format_word(u), format_word(v)});
  j = Json{{"verdict", r.ok() ? "faithful" : "violations"},
           {"rank", r.rank},
           {"max_len", r.max_len},
           {"exhaustive", r.exhaustive},
           {"seed", r.seed},
           {"words_checked", r.words_checked},
           {"classes", r.classes},
           {"violations", violations}};
}

Json path_to_json(const Path& p, const LabeledDigraph& g) {
  Json verts = Json::array();
  for (std::size_t v : p.vertices()) {
    if (g.subset_labeled()) {
      verts.push_back(g.vertex_labels().at(v));
    } else {
      verts.push_back(v);
    }
  }
  return Json{{"vertices", verts}, {"labels", p.labels()}, {"weight", path_weight(p)}};
}

Path path_from_json(const Json& j, const LabeledDigraph& g) {
  std::vector<std::size_t> verts;
  for (const auto& v : field(j, "vertices")) {
    verts.push_back(g.subset_labeled() ? g.vertex_of(v.get<Subset>()) : v.get<std::size_t>());
  }
  Path p = make_path(g, verts, field(j, "labels").get<std::string>());
  if (field(j, "weight").get<Trop>() != path_weight(p)) bad("path weight does not match its edges");
  return p;
}

}  // namespace placid

void nlohmann::adl_serializer<placid::TropMatrix>::to_json(json& j, const placid::TropMatrix& m) {
  j = json{{"dim", m.dim()}, {"rows", m.rows()}};
  if (m.labels()) j["labels"] = *m.labels();
}

placid::TropMatrix nlohmann::adl_serializer<placid::TropMatrix>::from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rows")) {
    throw std::invalid_argument("json: matrix needs 'dim' and 'rows'");
  }
  const auto dim = j.at("dim").get<std::size_t>();
  placid::TropMatrix m(j.at("rows").get<std::vector<std::vector<placid::Trop>>>());
  if (m.dim() != dim) throw std::invalid_argument("json: matrix 'dim' does not match 'rows'");
  if (j.contains("labels") && !j.at("labels").is_null()) {
    m.set_labels(j.at("labels").get<std::vector<placid::Subset>>());
  }
  return m;
}
