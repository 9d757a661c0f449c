#pragma once

#include "kleshchev/abacus.hpp"
#include "kleshchev/crystal.hpp"
#include "kleshchev/fock.hpp"
#include "kleshchev/sequences.hpp"
#include "kleshchev/verify.hpp"

#include <json.hpp>

#include <string>

namespace kleshchev {

using Json = nlohmann::ordered_json;

/// [{"bipartition":"a|b","coeff":{"-1":1,"1":2}}, ...]
Json fock_to_json(const FockVector& w);
/// One line per term: "coeff * a|b".
std::string fock_to_text(const FockVector& w);

/// {"input":..., "steps":[{"kind","p","q","U","V"|"W"}...], "result":...}
Json trace_to_json(const AbacusTrace& trace);
Json tau_to_json(const Partition& core, const TauData& data, const Partition& result);

/// [{"i":..,"a":..}, ...]
Json blocks_to_json(const OptimalSequence& seq);
std::string word_to_text(const OptimalSequence& seq);

/// {"nodes":[...], "edges":[{"from","to","i"}...]}
Json crystal_to_json(const CrystalGraph& g);
std::string crystal_to_dot(const CrystalGraph& g);

/// Timing is omitted unless requested so that reports are reproducible byte for byte.
Json report_to_json(const VerificationReport& report, bool include_timing = false);
std::string report_to_text(const VerificationReport& report);

/// Beta window of lambda at the given charge, with the beads sorted onto e runners.
Json abacus_to_json(const Partition& lambda, int charge, int e, std::size_t window_len);
std::string abacus_to_text(const Partition& lambda, int charge, int e, std::size_t window_len);

} // namespace kleshchev
