#pragma once

// Absorbing structure: a small family of gadget interiors placed up front.
// Each member ties down (a - b) vertices and (a/b - 1) f colors, where a is
// the gadget's full vertex count; at the end of the run one member can be
// swapped to its exterior form to soak up b leftover vertices and f leftover
// colors. Members are sampled at random, thinned by the selection step, and
// queried lazily: a query searches every unused member for a completion
// against the concrete leftover (B, I).

#include <optional>
#include <string>
#include <vector>

#include "absorb/absorber.hpp"
#include "pipeline/config.hpp"
#include "util/rng.hpp"

namespace rf {

struct AbsorbingMember {
    RainbowPacking interior;     // q disjoint copies tiling verts
    std::vector<Color> chunk;    // the q f interior colors, ascending
    std::vector<Vertex> verts;   // sorted union of the copies' vertices
    bool used = false;
};

struct AbsorbingPacking {
    std::vector<AbsorbingMember> members;   // survivors of the selection step
    int attempted = 0;                      // members sampled per attempt
    int attempts = 0;
    std::vector<int> target_hits;           // per sampled target, at acceptance
    std::vector<std::string> warnings;
    bool ok = false;
    std::string failure;
};

// Interior copy count per member: b for the 2-uniform clique families,
// b - 1 for single-edge patterns.
int member_copy_count(const Pattern& F);

// Sample and select the absorbing structure. t' = max(1, floor(gamma1 n))
// capped so members occupy at most half the vertex set; gamma1 = 0 disables
// absorption (ok with zero members).
AbsorbingPacking build_absorbing_packing(const System& sys, const Pattern& F,
                                         const PipelineConfig& cfg, Rng& rng);

// Search a completion that turns `member` into a full absorber for the
// leftover b-set B and fresh color f-set I. Assignment of B to gadget slots,
// pivot choices and freed-color orders are scanned lexicographically; the
// first completion wins. Returns nothing when B meets the member's vertices
// or I meets its chunk.
std::optional<RainbowAbsorber> complete_member(const System& sys, const Pattern& F,
                                               const AbsorbingMember& member,
                                               const std::vector<Vertex>& B,
                                               const std::vector<Color>& I);

class AbsorberIndex {
  public:
    AbsorberIndex(const System& sys, const Pattern& F, AbsorbingPacking& packing)
        : sys_(sys), F_(F), p_(packing) {}

    // First unused member (in index order) that completes for (B, I); marks
    // it used and returns the full gadget.
    std::optional<RainbowAbsorber> absorb_query(const std::vector<Vertex>& B,
                                                const std::vector<Color>& I);

    int unused_count() const;

  private:
    const System& sys_;
    const Pattern& F_;
    AbsorbingPacking& p_;
};

}  // namespace rf
