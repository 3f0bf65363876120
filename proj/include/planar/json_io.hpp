#pragma once

#include <json.hpp>

#include "planar/multigraph.hpp"
#include "planar/series.hpp"
#include "planar/tableaux.hpp"
#include "planar/walks.hpp"

// Canonical JSON forms. Keys are emitted in sorted order so that dumps are
// byte-stable; big integers travel as decimal strings.
namespace planar::json_io {

using Json = nlohmann::json;

Json to_json(const BipartiteMultigraph& g);
Json to_json(const Configuration& f);  ///< 1-based pairing
Json to_json(const YoungTableau& t);
Json to_json(const Walk& w);
Json to_json(const RepresentativeWalk& w);
Json to_json(const TruncatedSeries& s);

BipartiteMultigraph multigraph_from_json(const Json& j);
Configuration configuration_from_json(const Json& j);
YoungTableau tableau_from_json(const Json& j);
Walk walk_from_json(const Json& j);
RepresentativeWalk representative_from_json(const Json& j);
TruncatedSeries series_from_json(const Json& j);

}  // namespace planar::json_io
