#pragma once

// JSON forms of every artifact the CLI reads or writes.
//
//   Trop         integer, or the string "-inf"
//   Subset       sorted integer array
//   Tableau      {"rows": [[1,1,4],[3]]}, bottom row first
//   TropMatrix   {"dim": d, "rows": [[...]], "labels": [[...], ...]}  (labels optional)
//   Path         {"vertices": [...], "labels": "XYX", "weight": k}
//   identities   {"lhs": "...", "rhs": "...", ...}
//
// Words inside reports use the space-separated text form ("1 3 1 4").

#include "json.hpp"

#include "placid/identity_checker.hpp"
#include "placid/identity_forge.hpp"
#include "placid/path_semantics.hpp"
#include "placid/plactic_rep.hpp"
#include "placid/subset_lattice.hpp"
#include "placid/tropical.hpp"
#include "placid/words.hpp"

namespace placid {

using Json = nlohmann::json;

void to_json(Json& j, const Trop& t);
void from_json(const Json& j, Trop& t);

void to_json(Json& j, const Subset& s);
void from_json(const Json& j, Subset& s);

void to_json(Json& j, const Tableau& t);
void from_json(const Json& j, Tableau& t);

void to_json(Json& j, const IdentityWords& id);
void from_json(const Json& j, IdentityWords& id);

void to_json(Json& j, const BuiltIdentity& b);
void from_json(const Json& j, BuiltIdentity& b);

void to_json(Json& j, const PlacticCheckReport& r);
void from_json(const Json& j, PlacticCheckReport& r);

void to_json(Json& j, const TropWitness& w);
void from_json(const Json& j, TropWitness& w);

void to_json(Json& j, const TropSearchReport& r);
void from_json(const Json& j, TropSearchReport& r);

void to_json(Json& j, const RhoConsistencyReport& r);
void to_json(Json& j, const FaithfulnessReport& r);

/// Vertices are written as subsets when g is subset-labelled, else as indices.
Json path_to_json(const Path& p, const LabeledDigraph& g);
/// Rebuilds the edges (and their weights) from g; checks the stored weight.
Path path_from_json(const Json& j, const LabeledDigraph& g);

}  // namespace placid

template <>
struct nlohmann::adl_serializer<placid::TropMatrix> {
  static void to_json(json& j, const placid::TropMatrix& m);
  static placid::TropMatrix from_json(const json& j);
};
