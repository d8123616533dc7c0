#pragma once

#include <nlohmann/json.hpp>

#include "modcard/gadgets.hpp"
#include "modcard/gmc.hpp"
#include "modcard/modular_decomposition.hpp"
#include "modcard/solvers.hpp"
#include "modcard/tables.hpp"

namespace modcard {

using Json = nlohmann::json;

// Big integers and rationals travel as decimal strings ("12", "-3/4").
Json to_json(const ModularPartition& p);
ModularPartition partition_from_json(const Json& j);

Json to_json(const MDTree& t);

Json to_json(const StepTable& t);
StepTable step_table_from_json(const Json& j);

Json to_json(const PiecewiseLinearFn& f);
PiecewiseLinearFn piecewise_from_json(const Json& j);

Json to_json(const GmcResult& r);
Json to_json(const SolveResult& r);

Json to_json(const ValidTriple& t);
ValidTriple triple_from_json(const Json& j);

Json to_json(const ReductionBlueprint& bp);
ReductionBlueprint blueprint_from_json(const Json& j);

Json to_json(const ReductionBlueprint& bp, const ReductionWitness& w);
ReductionWitness witness_from_json(const ReductionBlueprint& bp, const Json& j);

Json to_json(const WitnessCheck& c);

}  // namespace modcard
