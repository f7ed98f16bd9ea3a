#pragma once

// Rainbow copies of a pattern inside a system: an injective vertex embedding
// plus one distinct color per template edge. Template edges translate to
// host edges by mapping vertices and re-sorting; the sign travels with the
// parity of the permutation that re-sorts the image tuple.

#include <functional>
#include <optional>
#include <vector>

#include "core/pattern.hpp"
#include "core/system.hpp"

namespace rf {

struct RainbowCopy {
    std::vector<Vertex> embed;   // embed[i] = host vertex of template vertex i
    std::vector<Color> colors;   // colors[j] = color of the j-th template edge

    std::vector<Vertex> verts_sorted() const;
    std::vector<Color> colors_sorted() const;
};

// Host image of one template edge under the embedding.
DEdge translate_edge(const DEdge& tmpl_edge, const std::vector<Vertex>& embed);

// Full validity: injective in-range embedding, distinct in-range colors,
// partite class constraint when the pattern is partite, every translated
// edge present in its color. Directed patterns match signs exactly;
// undirected patterns ignore the host sign.
bool is_rainbow_copy(const System& sys, const Pattern& F, const RainbowCopy& copy);
bool is_rainbow_copy(const System& sys, const Pattern& F, const RainbowCopy& copy, std::string* reason);

// All rainbow copies, in lexicographic order: by sorted vertex image, then
// by embedding tuple, then by color tuple. Embeddings that induce the same
// host edge set on the same vertex image are deduplicated (the smallest
// tuple is kept), so equal images with different colorings are distinct
// copies but template symmetries are not double counted.
// colors: the palette to draw from (default: all m colors).
std::vector<RainbowCopy> enumerate_rainbow_copies(const System& sys, const Pattern& F);
std::vector<RainbowCopy> enumerate_rainbow_copies(const System& sys, const Pattern& F,
                                                  const std::vector<Color>& colors);

// Visit copies on one fixed (ascending) b-set whose color set is exactly
// `colors` (|colors| = f). Stops early when fn returns false.
// Returns true if the visit ran to completion.
bool for_each_copy_on(const System& sys, const Pattern& F, const std::vector<Vertex>& bset,
                      const std::vector<Color>& colors,
                      const std::function<bool(const RainbowCopy&)>& fn);

// First copy on the b-set using exactly the given colors, if any.
std::optional<RainbowCopy> first_copy_on(const System& sys, const Pattern& F,
                                         const std::vector<Vertex>& bset,
                                         const std::vector<Color>& colors);

// The b-uniform auxiliary graph of a width-f slice: one (+) b-edge per
// vertex set hosting a rainbow copy that uses all f colors of the slice.
DKGraph build_HF(const System& slice, const Pattern& F);

}  // namespace rf
