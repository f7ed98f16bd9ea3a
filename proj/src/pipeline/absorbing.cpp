#include "pipeline/absorbing.hpp"

#include <algorithm>
#include <cmath>

#include "absorb/pair_colors.hpp"
#include "pipeline/select_matching.hpp"
#include "util/comb.hpp"
#include "util/log.hpp"

namespace rf {

int member_copy_count(const Pattern& F) {
    if (F.f == 1) return F.b - 1;                       // single-edge gadget
    if (F.k == 2 && F.f == F.b * (F.b - 1) / 2) return F.b;  // clique gadget
    fail_internal("absorbing: no gadget family for this pattern shape");
}

namespace {

// One member candidate: q disjoint random b-sets, copy j realized with the
// j-th f colors of the chunk. Empty on failure.
std::optional<AbsorbingMember> sample_member(const System& sys, const Pattern& F,
                                             const std::vector<Color>& chunk, int tries,
                                             Rng& rng) {
    const int q = member_copy_count(F);
    for (int attempt = 0; attempt < tries; ++attempt) {
        std::vector<Vertex> pool(static_cast<size_t>(sys.n));
        for (Vertex v = 0; v < sys.n; ++v) pool[static_cast<size_t>(v)] = v;
        AbsorbingMember mem;
        mem.chunk = chunk;
        bool ok = true;
        for (int j = 0; j < q && ok; ++j) {
            if (static_cast<int>(pool.size()) < F.b) { ok = false; break; }
            std::vector<int> idx = rng.sample_sorted(static_cast<int>(pool.size()), F.b);
            std::vector<Vertex> bset;
            for (int t : idx) bset.push_back(pool[static_cast<size_t>(t)]);
            std::vector<Color> cols(chunk.begin() + static_cast<long>(j) * F.f,
                                    chunk.begin() + static_cast<long>(j + 1) * F.f);
            auto copy = first_copy_on(sys, F, bset, cols);
            if (!copy) { ok = false; break; }
            mem.interior.copies.push_back(*copy);
            for (auto it = idx.rbegin(); it != idx.rend(); ++it)
                pool.erase(pool.begin() + *it);
        }
        if (!ok) continue;
        for (const RainbowCopy& c : mem.interior.copies)
            mem.verts.insert(mem.verts.end(), c.embed.begin(), c.embed.end());
        std::sort(mem.verts.begin(), mem.verts.end());
        return mem;
    }
    return std::nullopt;
}

std::optional<RainbowAbsorber> complete_matching_member(const System& sys, const Pattern& F,
                                                        const AbsorbingMember& member,
                                                        const std::vector<Vertex>& B,
                                                        const std::vector<Color>& I) {
    // carriers[j] absorbs assign[j + 1]; assign[0] joins the bridge.
    const auto& copies = member.interior.copies;
    const size_t q = copies.size();
    std::vector<std::vector<Vertex>> carrier(q);
    for (size_t j = 0; j < q; ++j) carrier[j] = copies[j].verts_sorted();

    std::vector<Vertex> assign = B;  // ascending start: canonical labeling first
    do {
        // pivot tuple u_j in carrier[j], lexicographic
        std::vector<size_t> pick(q, 0);
        while (true) {
            std::vector<Vertex> bridge;
            for (size_t j = 0; j < q; ++j) bridge.push_back(carrier[j][pick[j]]);
            bridge.push_back(assign[0]);
            std::sort(bridge.begin(), bridge.end());
            auto bcopy = first_copy_on(sys, F, bridge, {I[0]});
            if (bcopy) {
                std::vector<RainbowCopy> swaps;
                bool ok = true;
                for (size_t j = 0; j < q && ok; ++j) {
                    std::vector<Vertex> w;
                    for (Vertex v : carrier[j])
                        if (v != carrier[j][pick[j]]) w.push_back(v);
                    w.push_back(assign[j + 1]);
                    std::sort(w.begin(), w.end());
                    auto scopy = first_copy_on(sys, F, w, {member.chunk[j]});
                    if (!scopy) { ok = false; break; }
                    swaps.push_back(*scopy);
                }
                if (ok) {
                    RainbowAbsorber a;
                    a.B = B;
                    a.L = member.verts;
                    a.interior = member.interior;
                    a.exterior.copies.push_back(*bcopy);
                    for (auto& s : swaps) a.exterior.copies.push_back(std::move(s));
                    return a;
                }
            }
            // next pivot tuple
            size_t j = q;
            while (j > 0) {
                --j;
                if (++pick[j] < carrier[j].size()) break;
                pick[j] = 0;
                if (j == 0) goto next_assign;
            }
            if (q == 0) break;
        }
    next_assign:;
    } while (std::next_permutation(assign.begin(), assign.end()));
    return std::nullopt;
}

std::optional<RainbowAbsorber> complete_clique_member(const System& sys, const Pattern& F,
                                                      const AbsorbingMember& member,
                                                      const std::vector<Vertex>& B,
                                                      const std::vector<Color>& I) {
    const auto& copies = member.interior.copies;
    const size_t t = copies.size();
    std::vector<std::vector<Vertex>> cverts(t);
    for (size_t i = 0; i < t; ++i) cverts[i] = copies[i].verts_sorted();

    std::vector<Vertex> assign = B;  // assign[i] = vertex absorbed by clique i
    do {
        std::vector<size_t> pick(t, 0);  // pivot index per clique
        while (true) {
            std::vector<Vertex> pivots(t);
            for (size_t i = 0; i < t; ++i) pivots[i] = cverts[i][pick[i]];
            std::vector<Vertex> bridge = pivots;
            std::sort(bridge.begin(), bridge.end());
            auto bcopy = first_copy_on(sys, F, bridge, I);
            if (bcopy) {
                std::vector<RainbowCopy> exteriors;
                bool ok = true;
                for (size_t i = 0; i < t && ok; ++i) {
                    Vertex pivot = pivots[i];
                    Vertex target = assign[i];
                    PairColor pc = pair_colors_of(F, copies[i]);
                    std::vector<Color> freed;
                    PairColor kept;
                    for (const auto& [pr, col] : pc) {
                        if (pr.first == pivot || pr.second == pivot) freed.push_back(col);
                        else kept[pr] = col;
                    }
                    std::sort(freed.begin(), freed.end());
                    std::vector<Vertex> rest;
                    for (Vertex v : cverts[i])
                        if (v != pivot) rest.push_back(v);
                    bool found = false;
                    std::vector<Color> perm_cols = freed;
                    do {
                        PairColor ext = kept;
                        for (size_t x = 0; x < rest.size(); ++x)
                            ext[host_pair(target, rest[x])] = perm_cols[x];
                        std::vector<Vertex> evset = rest;
                        evset.push_back(target);
                        auto ecopy = copy_with_pair_colors(sys, F, evset, ext);
                        if (ecopy) {
                            exteriors.push_back(*ecopy);
                            found = true;
                            break;
                        }
                    } while (std::next_permutation(perm_cols.begin(), perm_cols.end()));
                    if (!found) ok = false;
                }
                if (ok) {
                    RainbowAbsorber a;
                    a.B = B;
                    a.L = member.verts;
                    a.interior = member.interior;
                    a.exterior.copies.push_back(*bcopy);
                    for (auto& e : exteriors) a.exterior.copies.push_back(std::move(e));
                    return a;
                }
            }
            size_t j = t;
            bool advanced = false;
            while (j > 0) {
                --j;
                if (++pick[j] < cverts[j].size()) { advanced = true; break; }
                pick[j] = 0;
            }
            if (!advanced) break;
        }
    } while (std::next_permutation(assign.begin(), assign.end()));
    return std::nullopt;
}

}  // namespace

std::optional<RainbowAbsorber> complete_member(const System& sys, const Pattern& F,
                                               const AbsorbingMember& member,
                                               const std::vector<Vertex>& B,
                                               const std::vector<Color>& I) {
    if (static_cast<int>(B.size()) != F.b || static_cast<int>(I.size()) != F.f) return std::nullopt;
    if (!is_sorted_unique(B)) return std::nullopt;
    if (sorted_intersects(B, member.verts)) return std::nullopt;
    std::vector<Color> is = I;
    std::sort(is.begin(), is.end());
    if (!is_sorted_unique(is) || sorted_intersects(is, member.chunk)) return std::nullopt;

    if (F.f == 1) return complete_matching_member(sys, F, member, B, I);
    return complete_clique_member(sys, F, member, B, I);
}

AbsorbingPacking build_absorbing_packing(const System& sys, const Pattern& F,
                                         const PipelineConfig& cfg, Rng& rng) {
    AbsorbingPacking out;
    const int q = member_copy_count(F);
    const int s = q * F.f;             // colors per member
    const int w = q * F.b;             // vertices per member

    int t_att = 0;
    if (cfg.gamma1 > 0.0)
        t_att = std::max(1, static_cast<int>(std::floor(cfg.gamma1 * sys.n)));
    int cap = (w > 0) ? sys.n / (2 * w) : 0;
    if (t_att > cap) {
        if (cap < t_att && t_att > 0)
            out.warnings.push_back("absorbing: t' capped from " + std::to_string(t_att) +
                                   " to " + std::to_string(cap) +
                                   " so members occupy at most half the vertices");
        t_att = cap;
    }
    out.attempted = t_att;
    if (t_att == 0) {
        out.ok = true;
        return out;
    }

    // Colors past the member chunks: the pool the residual will use.
    std::vector<Color> free_colors;
    for (Color c = t_att * s; c < sys.m; ++c) free_colors.push_back(c);

    std::vector<std::pair<std::vector<Vertex>, std::vector<Color>>> targets;
    std::vector<AbsorbingMember> cands;
    auto hit = [&](int j, int i) -> bool {
        return complete_member(sys, F, cands[static_cast<size_t>(i)], targets[static_cast<size_t>(j)].first,
                               targets[static_cast<size_t>(j)].second)
            .has_value();
    };

    for (int attempt = 0; attempt < cfg.retries; ++attempt) {
        ++out.attempts;
        cands.assign(static_cast<size_t>(t_att), {});
        std::vector<std::optional<std::vector<Vertex>>> picks(static_cast<size_t>(t_att));
        for (int i = 0; i < t_att; ++i) {
            std::vector<Color> chunk;
            for (int c = i * s; c < (i + 1) * s; ++c) chunk.push_back(c);
            auto mem = sample_member(sys, F, chunk, cfg.member_tries, rng);
            if (mem) {
                cands[static_cast<size_t>(i)] = std::move(*mem);
                picks[static_cast<size_t>(i)] = cands[static_cast<size_t>(i)].verts;
            }
        }

        // Sample absorption targets (B, I) the way the endgame will query
        // them: B from hosts outside every member, I from the free colors.
        // Leftovers never intersect the absorbing structure, so neither do
        // the probes.
        targets.clear();
        std::vector<Vertex> outside;
        {
            std::vector<char> taken(static_cast<size_t>(sys.n), 0);
            for (const auto& c : cands)
                for (Vertex v : c.verts) taken[static_cast<size_t>(v)] = 1;
            for (Vertex v = 0; v < sys.n; ++v)
                if (!taken[static_cast<size_t>(v)]) outside.push_back(v);
        }
        if (static_cast<int>(free_colors.size()) >= F.f &&
            static_cast<int>(outside.size()) >= F.b) {
            for (int z = 0; z < cfg.z_samples; ++z) {
                std::vector<int> bi = rng.sample_sorted(static_cast<int>(outside.size()), F.b);
                std::vector<Vertex> B;
                for (int t : bi) B.push_back(outside[static_cast<size_t>(t)]);
                std::vector<int> ci = rng.sample_sorted(static_cast<int>(free_colors.size()), F.f);
                std::vector<Color> I;
                for (int t : ci) I.push_back(free_colors[static_cast<size_t>(t)]);
                targets.emplace_back(std::move(B), std::move(I));
            }
        }
        SelectionCheck chk = selection_step(picks, static_cast<int>(targets.size()), hit,
                                            cfg.eps_prime);
        if (chk.size_ok && chk.targets_ok) {
            for (int i = 0; i < t_att; ++i)
                if (chk.alive[static_cast<size_t>(i)])
                    out.members.push_back(std::move(cands[static_cast<size_t>(i)]));
            out.target_hits = chk.hits;
            out.ok = true;
            return out;
        }
        out.failure = "selection postconditions not met: survivors " +
                      std::to_string(chk.survivors) + "/" + std::to_string(t_att);
    }
    return out;
}

std::optional<RainbowAbsorber> AbsorberIndex::absorb_query(const std::vector<Vertex>& B,
                                                           const std::vector<Color>& I) {
    for (auto& mem : p_.members) {
        if (mem.used) continue;
        auto a = complete_member(sys_, F_, mem, B, I);
        if (a) {
            mem.used = true;
            return a;
        }
    }
    return std::nullopt;
}

int AbsorberIndex::unused_count() const {
    int c = 0;
    for (const auto& mem : p_.members)
        if (!mem.used) ++c;
    return c;
}

}  // namespace rf
