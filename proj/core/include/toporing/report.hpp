#pragma once

#include "toporing/decomposition.hpp"
#include "toporing/endo_topology.hpp"
#include "toporing/io.hpp"
#include "toporing/lifting.hpp"
#include "toporing/wedderburn.hpp"

namespace toporing::io {

/// Structured reports with every certificate element, suitable for canonical serialization.
Json to_json(const FactorMultiset& f);
Json to_json(const WedderburnDatum& w);
Json to_json(const DecompositionCertificate& c);
Json to_json(const TNilpotencyResult& r);
Json to_json(const PerfectDecompositionReport& r);
Json to_json(const CyclicChain& c);
Json to_json(const CoperfectResult& r);
Json to_json(const RadicalTowerReport& r);
Json to_json(const TowerNilpotencyCertificate& c);
Json to_json(const StrongClosureCertificate& c);
Json to_json(const SemisimpleClassification& c);
Json to_json(const PerfectnessReport& r);
Json to_json(const IdempotentFamily& f);
Json to_json(const TowerLift& l);
Json to_json(const TowerFamily& f);
Json to_json(const CornerReport& r);
Json to_json(const ContratensorResult& r);
Json to_json(const BassFlatDatum& b);
Json to_json(const SplitReport& r);
Json to_json(const SigmaCoperfectResult& r);
Json to_json(const BridgeReport& r);

}  // namespace toporing::io
