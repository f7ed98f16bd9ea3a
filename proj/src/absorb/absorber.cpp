#include "absorb/absorber.hpp"

#include <algorithm>
#include <set>

#include "util/comb.hpp"

namespace rf {

static std::vector<Color> packing_colors(const RainbowPacking& p) {
    std::vector<Color> out;
    for (const RainbowCopy& c : p.copies)
        out.insert(out.end(), c.colors.begin(), c.colors.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Color> RainbowAbsorber::interior_colors() const { return packing_colors(interior); }
std::vector<Color> RainbowAbsorber::exterior_colors() const { return packing_colors(exterior); }

std::vector<Color> RainbowAbsorber::new_colors() const {
    std::vector<Color> in = interior_colors(), ex = exterior_colors(), out;
    std::set_difference(ex.begin(), ex.end(), in.begin(), in.end(), std::back_inserter(out));
    return out;
}

ValidationResult validate_absorber(const RainbowAbsorber& a, const System& sys, const Pattern& F) {
    auto bad = [](const std::string& why) { return ValidationResult{false, why}; };
    if (static_cast<int>(a.B.size()) != F.b) return bad("target set size is not b");
    if (!is_sorted_unique(a.B) || (!a.L.empty() && !is_sorted_unique(a.L)))
        return bad("B and L must be ascending vertex sets");
    if (sorted_intersects(a.B, a.L)) return bad("B cap L nonempty");

    std::string why;
    if (!is_valid_packing(sys, F, a.interior, &why)) return bad("interior: " + why);
    if (!is_valid_packing(sys, F, a.exterior, &why)) return bad("exterior: " + why);

    std::vector<Vertex> covered;
    for (const RainbowCopy& c : a.interior.copies)
        covered.insert(covered.end(), c.embed.begin(), c.embed.end());
    std::sort(covered.begin(), covered.end());
    if (covered != a.L) return bad("interior does not cover exactly L");

    std::vector<Vertex> want = a.B;
    want.insert(want.end(), a.L.begin(), a.L.end());
    std::sort(want.begin(), want.end());
    covered.clear();
    for (const RainbowCopy& c : a.exterior.copies)
        covered.insert(covered.end(), c.embed.begin(), c.embed.end());
    std::sort(covered.begin(), covered.end());
    if (covered != want) return bad("exterior does not cover exactly B cup L");

    std::vector<Color> cin = a.interior_colors(), cex = a.exterior_colors();
    if (!std::includes(cex.begin(), cex.end(), cin.begin(), cin.end()))
        return bad("color clash: exterior drops an interior color");
    if (cex.size() != cin.size() + static_cast<size_t>(F.f))
        return bad("color clash: exterior must add exactly f new colors");
    return ValidationResult{true, ""};
}

RainbowPacking absorb(const RainbowAbsorber& a, bool use_exterior, const System& sys, const Pattern& F) {
    ValidationResult v = validate_absorber(a, sys, F);
    if (!v.ok) fail_invalid("absorb: invalid gadget: " + v.reason);
    return use_exterior ? a.exterior : a.interior;
}

}  // namespace rf
