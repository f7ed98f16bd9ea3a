#pragma once

// Random selection of a large partial rainbow matching: draw one candidate
// vertex set per index, delete the later half of every intersecting pair,
// and accept when at least (1 - eps/4) of the indices survive and every
// target set keeps at least eps/4 of them. Used both as a standalone
// operation on explicit graph lists and as the selection step that prunes
// candidate absorbing gadgets.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/system.hpp"
#include "util/rng.hpp"

namespace rf {

struct SelectionCheck {
    std::vector<char> alive;    // per index, after pair deletions
    int survivors = 0;
    std::vector<int> hits;      // per target, survivors landing in it
    bool size_ok = false;
    bool targets_ok = false;
};

// picks[i] empty means index i failed to produce a candidate at all.
// hit(j, i) answers whether index i's pick lies in target j; it is only
// consulted for surviving indices.
SelectionCheck selection_step(const std::vector<std::optional<std::vector<Vertex>>>& picks,
                              int num_targets,
                              const std::function<bool(int j, int i)>& hit,
                              double eps);

struct SelectResult {
    bool ok = false;
    int attempts = 0;
    int survivors = 0;
    std::vector<std::optional<std::vector<Vertex>>> picks;  // deleted indices cleared
    std::vector<int> target_hits;
    std::vector<std::string> warnings;
};

// Standalone form: one host graph per index (all on sys's vertex set and
// uniformity), targets given as edge sets of the same uniformity. A pick is
// a uniformly random edge of its graph. The density pre-check against
// eps * n^k only warns; the postconditions decide acceptance.
SelectResult select_absorbing_matching(const System& sys,
                                       const std::vector<DKGraph>& targets,
                                       double eps,
                                       int retries,
                                       Rng& rng);

}  // namespace rf
