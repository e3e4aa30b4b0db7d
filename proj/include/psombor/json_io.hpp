#pragma once

#include <json.hpp>

#include "psombor/bounds.hpp"
#include "psombor/chem.hpp"
#include "psombor/extremal.hpp"
#include "psombor/graph.hpp"
#include "psombor/invariants.hpp"
#include "psombor/spectral.hpp"

namespace psombor {

using Json = nlohmann::ordered_json;

// {"n": 4, "edges": [[0, 1], [1, 2], ...]}
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

Json to_json(const SpectralDecomposition& dec);
Json to_json(const MomentSet& moments);
Json to_json(const IndexBundle& indices);
Json to_json(const SpectralInvariants& inv);
Json to_json(const StructureStats& stats);

Json to_json(const BoundReport& r);
Json to_json(const Violation& v);
Json to_json(const SuiteReport& r);

Json to_json(const TreeCatalog& cat);
Json to_json(const TreeExtremes& r);
Json to_json(const ShiftReport& r);

Json to_json(const RegressionFit& f);
Json to_json(const FitComparison& c);
Json to_json(const OctaneCrosscheck& c);

}  // namespace psombor
