#pragma once

// JSON encodings of certificates, shared by report writing and the reload
// check. Vertex sets are sorted arrays; colourings are colour arrays indexed
// like the ascending member list of their side.

#include <json.hpp>

#include "holefree/holes.hpp"
#include "holefree/invariants.hpp"
#include "holefree/lemma.hpp"
#include "holefree/quasiline.hpp"
#include "holefree/splitting.hpp"

namespace holefree::cli {

using Json = nlohmann::ordered_json;

Json to_json(VertexSet s);
Json to_json(const Coloring& c);
Json to_json(const HoleCertificate& h);
Json to_json(const ClawWitness& w);
Json to_json(const CliquePair& p);
Json to_json(const SplitCertificate& c);

/// Inverse decoders. Throw nlohmann::json exceptions or GraphError on
/// structurally malformed input.
VertexSet vertex_set_from_json(const Json& j);
Coloring coloring_from_json(const Json& j);
HoleCertificate hole_from_json(const Json& j);
ClawWitness claw_from_json(const Json& j);
CliquePair clique_pair_from_json(const Json& j);
SplitCertificate split_from_json(const Json& j);

}  // namespace holefree::cli
