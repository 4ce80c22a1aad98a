#pragma once

// JSON report builders shared by the CLI; key order is part of the output
// contract, hence ordered_json everywhere.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "congrkit/cblp.hpp"
#include "congrkit/congruence.hpp"
#include "congrkit/reslat.hpp"

namespace congrkit {

using ordered_json = nlohmann::ordered_json;

// Partition as array of blocks, each an array of element labels.
ordered_json partition_json(const Partition& p, const std::vector<std::string>& labels);
ordered_json element_set_json(const std::vector<int>& xs, const std::vector<std::string>& labels);

// The fixed analysis schema: {algebra, cblp, star, spec, max, rad,
// per_congruence, equivalents, decomposition?}. decomposition appears only
// when the input is arithmetical, non-trivial and the verdict holds.
ordered_json cblp_report(const CongruenceLattice& conL);

// Adds the residuated "filters" section onto the same schema.
ordered_json rl_report(const ResiduatedLattice& a);

}  // namespace congrkit
