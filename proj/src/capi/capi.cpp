#include "rainbowfactor.h"

#include <cstring>
#include <new>
#include <string>

#include "json.hpp"

#include "absorb/absorber.hpp"
#include "core/degree.hpp"
#include "core/pattern.hpp"
#include "core/system.hpp"
#include "harness/sweep.hpp"
#include "lp/matching_lp.hpp"
#include "oracle/generators.hpp"
#include "pipeline/solve.hpp"

using nlohmann::json;

struct rf_system {
    rf::System sys;
};

struct rf_pattern {
    rf::Pattern pat;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
int guarded(Fn&& fn) {
    g_last_error.clear();
    try {
        fn();
        return RF_OK;
    } catch (const rf::Error& e) {
        g_last_error = e.what();
        switch (e.kind) {
            case rf::ErrKind::Invalid: return RF_ERR_INVALID;
            case rf::ErrKind::Io: return RF_ERR_IO;
            case rf::ErrKind::Internal: return RF_ERR_INTERNAL;
        }
        return RF_ERR_INTERNAL;
    } catch (const json::exception& e) {
        g_last_error = std::string("json: ") + e.what();
        return RF_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RF_ERR_INTERNAL;
    }
}

void require(bool cond, const char* what) {
    if (!cond) rf::fail_invalid(std::string("null argument: ") + what);
}

json copies_to_json(const rf::RainbowPacking& p) {
    json arr = json::array();
    for (const rf::RainbowCopy& c : p.copies) {
        json o;
        o["embed"] = c.embed;
        o["colors"] = c.colors;
        arr.push_back(std::move(o));
    }
    return arr;
}

rf::RainbowPacking packing_from_json(const json& j) {
    rf::RainbowPacking p;
    const json& copies = j.contains("copies") ? j.at("copies") : j;
    if (!copies.is_array()) rf::fail_invalid("packing json: expected an array of copies");
    for (const json& o : copies) {
        rf::RainbowCopy c;
        c.embed = o.at("embed").get<std::vector<rf::Vertex>>();
        c.colors = o.at("colors").get<std::vector<rf::Color>>();
        p.copies.push_back(std::move(c));
    }
    return p;
}

void apply_config_json(rf::PipelineConfig& cfg, const json& j) {
    if (!j.is_object()) rf::fail_invalid("config json: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string value;
        if (it.value().is_string()) value = it.value().get<std::string>();
        else value = it.value().dump();
        cfg.apply_kv(it.key(), value);
    }
}

}  // namespace

extern "C" {

const char* rf_version(void) { return "1.0.0"; }

const char* rf_last_error(void) { return g_last_error.c_str(); }

void rf_string_free(char* s) { delete[] s; }

int rf_system_parse(const char* text, rf_system** out) {
    return guarded([&] {
        require(text && out, "text/out");
        auto* h = new rf_system{rf::System::parse(text)};
        *out = h;
    });
}

int rf_system_read(const char* path, rf_system** out) {
    return guarded([&] {
        require(path && out, "path/out");
        auto* h = new rf_system{rf::System::read_file(path)};
        *out = h;
    });
}

int rf_system_serialize(const rf_system* sys, char** out_text) {
    return guarded([&] {
        require(sys && out_text, "sys/out_text");
        *out_text = dup_string(sys->sys.serialize());
    });
}

int rf_system_info(const rf_system* sys, int* n, int* k, int* m, int* num_classes) {
    return guarded([&] {
        require(sys, "sys");
        if (n) *n = sys->sys.n;
        if (k) *k = sys->sys.k;
        if (m) *m = sys->sys.m;
        if (num_classes) *num_classes = sys->sys.num_classes;
    });
}

void rf_system_free(rf_system* sys) { delete sys; }

int rf_generate(const char* spec_json, rf_system** out) {
    return guarded([&] {
        require(spec_json && out, "spec_json/out");
        json j = json::parse(spec_json);
        std::string kind = j.at("kind").get<std::string>();
        rf::System sys;
        if (kind == "extremal") {
            sys = rf::gen_extremal(j.at("t").get<int>(), j.at("n").get<int>());
        } else if (kind == "completion") {
            sys = rf::gen_extremal_completion(j.at("t").get<int>(), j.at("n").get<int>(),
                                              j.value("seed", 0ULL));
        } else if (kind == "space") {
            sys = rf::gen_extremal_space(j.at("k").get<int>(), j.at("n").get<int>());
        } else if (kind == "complete") {
            int classes = j.value("classes", 0);
            if (classes > 0)
                sys = rf::gen_complete_partite(j.at("n").get<int>(), classes,
                                               j.at("m").get<int>());
            else
                sys = rf::gen_complete(j.at("n").get<int>(), j.at("k").get<int>(),
                                       j.at("m").get<int>(), j.value("directed", false));
        } else if (kind == "random") {
            rf::DegreeRule rule = rf::DegreeRule::parse(j.value("rule", "standard:1"));
            sys = rf::gen_random_min_degree(
                j.at("n").get<int>(), j.at("k").get<int>(), j.at("m").get<int>(), rule,
                j.at("delta").get<long long>(), j.value("delete_prob", 0.5),
                j.value("seed", 0ULL), j.value("directed", false), j.value("classes", 0));
        } else {
            rf::fail_invalid("generate: unknown kind '" + kind + "'");
        }
        *out = new rf_system{std::move(sys)};
    });
}

int rf_pattern_parse(const char* text, rf_pattern** out) {
    return guarded([&] {
        require(text && out, "text/out");
        *out = new rf_pattern{rf::Pattern::parse(text)};
    });
}

int rf_pattern_info(const rf_pattern* pat, int* b, int* f, int* k, int* directed, int* partite) {
    return guarded([&] {
        require(pat, "pat");
        if (b) *b = pat->pat.b;
        if (f) *f = pat->pat.f;
        if (k) *k = pat->pat.k;
        if (directed) *directed = pat->pat.directed ? 1 : 0;
        if (partite) *partite = pat->pat.partite ? 1 : 0;
    });
}

void rf_pattern_free(rf_pattern* pat) { delete pat; }

int rf_min_star_degree(const rf_system* sys, const char* rule, long long* out) {
    return guarded([&] {
        require(sys && rule && out, "sys/rule/out");
        *out = rf::min_star_degree(sys->sys, rf::DegreeRule::parse(rule));
    });
}

int rf_lp_solve_text(const char* hypergraph_text, const char* mode, int b, char** report,
                     int* feasible) {
    return guarded([&] {
        require(hypergraph_text && mode && report, "hypergraph_text/mode/report");
        rf::Hypergraph h = rf::Hypergraph::parse(hypergraph_text);
        std::string m = mode;
        std::string rep;
        int feas = 1;
        if (m == "matching" || m == "cover") {
            rf::FractionalSolution sol =
                m == "matching" ? rf::max_fractional_matching(h) : rf::min_fractional_cover(h);
            rep += "mode," + m + "\n";
            rep += "value," + rf::rat_str(sol.value) + "\n";
            const char* label = m == "matching" ? "edge" : "vertex";
            for (size_t i = 0; i < sol.weights.size(); ++i)
                rep += std::string(label) + "," + std::to_string(i) + "," +
                       rf::rat_str(sol.weights[i]) + "\n";
        } else if (m == "pfm") {
            rf::PfmResult r = rf::has_perfect_fractional_matching(h, b);
            feas = r.has_pfm ? 1 : 0;
            rep += "mode,pfm\n";
            rep += std::string("pfm,") + (r.has_pfm ? "true" : "false") + "\n";
            rep += "value," + rf::rat_str(r.sol.value) + "\n";
            const char* label = r.has_pfm ? "edge" : "vertex";
            for (size_t i = 0; i < r.sol.weights.size(); ++i)
                rep += std::string(label) + "," + std::to_string(i) + "," +
                       rf::rat_str(r.sol.weights[i]) + "\n";
            if (r.cert) {
                for (size_t i = 0; i < r.cert->a.size(); ++i)
                    rep += "certificate," + std::to_string(i) + "," +
                           rf::rat_str(r.cert->a[i]) + "\n";
            }
        } else {
            rf::fail_invalid("lp: unknown mode '" + m + "' (matching|cover|pfm)");
        }
        *report = dup_string(rep);
        if (feasible) *feasible = feas;
    });
}

int rf_solve(const rf_system* sys, const rf_pattern* pat, const char* options_json,
             char** result_json) {
    return guarded([&] {
        require(sys && pat && result_json, "sys/pat/result_json");
        std::string strategy = "absorption";
        rf::PipelineConfig cfg;
        if (options_json && options_json[0]) {
            json j = json::parse(options_json);
            strategy = j.value("strategy", strategy);
            if (j.contains("config")) apply_config_json(cfg, j.at("config"));
        }
        rf::SolveResult res = rf::find_rainbow_factor(sys->sys, pat->pat, cfg, strategy);
        json out;
        out["status"] = rf::solve_status_name(res.status);
        out["copies"] = copies_to_json(res.factor);
        out["leftover"] = res.leftover;
        out["ms"] = res.ms;
        out["stats"] = res.stats;
        out["warnings"] = res.warnings;
        out["message"] = res.message;
        *result_json = dup_string(out.dump() + "\n");
    });
}

int rf_verify_packing(const rf_system* sys, const rf_pattern* pat, const char* packing_json,
                      int check_factor, int* valid, char** reason_out) {
    return guarded([&] {
        require(sys && pat && packing_json && valid, "sys/pat/packing_json/valid");
        rf::RainbowPacking p = packing_from_json(json::parse(packing_json));
        std::string reason;
        bool ok = check_factor ? rf::is_rainbow_factor(sys->sys, pat->pat, p, &reason)
                               : rf::is_valid_packing(sys->sys, pat->pat, p, &reason);
        *valid = ok ? 1 : 0;
        if (reason_out) *reason_out = dup_string(reason);
    });
}

int rf_enumerate_absorbers(const rf_system* sys, const rf_pattern* pat,
                           const char* targets_json, long long limit, char** result_json) {
    return guarded([&] {
        require(sys && pat && targets_json && result_json, "sys/pat/targets_json/result_json");
        json j = json::parse(targets_json);
        std::vector<rf::Vertex> target = j.at("target").get<std::vector<rf::Vertex>>();
        std::vector<rf::Color> colors = j.at("colors").get<std::vector<rf::Color>>();
        std::vector<rf::RainbowAbsorber> found;
        if (pat->pat.f == 1) {
            rf::FbGraph g = rf::build_fb_graph(sys->sys, pat->pat, /*strict=*/true);
            found = rf::enumerate_matching_absorbers(g, target, colors, limit);
        } else {
            found = rf::enumerate_clique_absorbers(sys->sys, pat->pat, target, colors, limit);
        }
        json arr = json::array();
        for (const rf::RainbowAbsorber& a : found) {
            json o;
            o["B"] = a.B;
            o["L"] = a.L;
            o["interior"] = copies_to_json(a.interior);
            o["exterior"] = copies_to_json(a.exterior);
            o["new_colors"] = a.new_colors();
            arr.push_back(std::move(o));
        }
        *result_json = dup_string(arr.dump() + "\n");
    });
}

int rf_sweep_run(const char* spec_json, char** csv_out, char** json_out) {
    return guarded([&] {
        require(spec_json, "spec_json");
        json j = json::parse(spec_json);
        rf::SweepSpec spec;
        spec.pattern = j.value("pattern", spec.pattern);
        spec.ns = j.at("ns").get<std::vector<int>>();
        if (j.contains("fracs")) spec.fracs = j.at("fracs").get<std::vector<double>>();
        spec.seeds = j.value("seeds", spec.seeds);
        spec.seed_base = j.value("seed_base", spec.seed_base);
        if (j.contains("strategies"))
            spec.strategies = j.at("strategies").get<std::vector<std::string>>();
        spec.kind = j.value("kind", spec.kind);
        spec.delete_prob = j.value("delete_prob", spec.delete_prob);
        spec.jobs = j.value("jobs", spec.jobs);
        spec.stable_output = j.value("stable_output", spec.stable_output);
        if (j.contains("config")) apply_config_json(spec.cfg, j.at("config"));
        std::vector<rf::SweepRow> rows = rf::run_sweep(spec);
        if (csv_out) *csv_out = dup_string(rf::rows_to_csv(rows));
        if (json_out) *json_out = dup_string(rf::rows_to_json(rows));
    });
}

}  // extern "C"
