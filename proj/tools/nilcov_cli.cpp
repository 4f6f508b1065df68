#include "nilcov/acceptance.hpp"
#include "nilcov/classes.hpp"
#include "nilcov/closed_forms.hpp"
#include "nilcov/covers.hpp"
#include "nilcov/nilgraph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::json;
using namespace nilcov;

namespace {

constexpr int kExitOk = 0, kExitUsage = 2, kExitResource = 3;
constexpr const char* kSchemaVersion = "1";

std::string g_format = "json";

void emit(const json& j) {
    if (g_format == "csv") {
        // one result per row: flattened keys, then values
        std::string keys, vals;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!keys.empty()) {
                keys += ',';
                vals += ',';
            }
            keys += it.key();
            vals += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        }
        std::cout << keys << '\n' << vals << '\n';
    } else if (g_format == "text") {
        for (auto it = j.begin(); it != j.end(); ++it)
            std::cout << it.key() << ": " << it.value().dump() << '\n';
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

json omega_to_json(const OmegaResult& r) {
    json j{{"schema", kSchemaVersion},
           {"family", r.family},
           {"q", r.q},
           {"c", bound_to_string(r.c)},
           {"method", omega_method_name(r.method)},
           {"elapsed_ms", r.elapsed_ms}};
    if (r.value) {
        j["value"] = *r.value;
    } else {
        j["bounds"] = {{"lo", r.lo}, {"hi", r.hi}};
    }
    json certs;
    if (r.cover_size) certs["cover"] = *r.cover_size;
    if (r.independent_size) certs["independent_set"] = *r.independent_size;
    if (!certs.empty()) j["certificate_sizes"] = certs;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json group_report(const FiniteGroup& g, const FamilySpec& spec) {
    json j{{"schema", kSchemaVersion}, {"name", spec.name()}, {"order", g.size()}};
    j["class_count"] = g.conjugacy_classes().size();
    json sylows;
    for (std::uint32_t p : g.prime_factors())
        sylows[std::to_string(p)] = sylow_subgroups(g, p).size();
    j["sylow_counts"] = std::move(sylows);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilcov: nilpotent covers and non-nilpotent subsets of the twisted rank-1 groups"};
    app.require_subcommand(1);

    unsigned threads = 0;
    std::size_t closure_cap = 0;
    std::int64_t mis_timeout = -1;
    std::uint64_t seed = 0;
    app.add_option("--threads", threads, "worker threads (0 = all)");
    app.add_option("--closure-cap", closure_cap, "max elements per subgroup closure");
    app.add_option("--mis-timeout-ms", mis_timeout, "independent-set search budget");
    app.add_option("--seed", seed, "seed for randomized spot checks");
    app.add_option("--format", g_format, "output format: json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // field info <p> <k>
    auto* field_cmd = app.add_subcommand("field", "finite field utilities");
    auto* field_info = field_cmd->add_subcommand("info", "print order and modulus");
    std::uint32_t fp = 0, fk = 1;
    field_info->add_option("p", fp, "characteristic")->required();
    field_info->add_option("k", fk, "extension degree")->required();

    // group build <family> <q> [--dump FILE]
    auto* group_cmd = app.add_subcommand("group", "group construction");
    auto* group_build = group_cmd->add_subcommand("build", "enumerate a family member");
    std::string gb_family, gb_dump;
    std::uint32_t gb_q = 0;
    group_build->add_option("family", gb_family)->required();
    group_build->add_option("q", gb_q)->required();
    group_build->add_option("--dump", gb_dump, "write NCGT1 table");

    // omega formula|exact <family> <q> <c>
    auto* omega_cmd = app.add_subcommand("omega", "omega_c values");
    auto* omega_formula_cmd = omega_cmd->add_subcommand("formula", "closed-form value");
    auto* omega_exact_cmd = omega_cmd->add_subcommand("exact", "certified or brute value");
    std::string of_family, oe_family, oe_strategy = "auto", of_c, oe_c;
    std::uint32_t of_q = 0, oe_q = 0;
    omega_formula_cmd->add_option("family", of_family)->required();
    omega_formula_cmd->add_option("q", of_q)->required();
    omega_formula_cmd->add_option("c", of_c)->required();
    omega_exact_cmd->add_option("family", oe_family)->required();
    omega_exact_cmd->add_option("q", oe_q)->required();
    omega_exact_cmd->add_option("c", oe_c)->required();
    omega_exact_cmd->add_option("--strategy", oe_strategy)
        ->check(CLI::IsMember({"auto", "mis", "certify"}));

    // cover build <family> <q> <c> [--mode full|count] [--json FILE]
    auto* cover_cmd = app.add_subcommand("cover", "cover constructions");
    auto* cover_build = cover_cmd->add_subcommand("build", "build and certify a cover");
    std::string cb_family, cb_mode = "full", cb_json, cb_c;
    std::uint32_t cb_q = 0;
    cover_build->add_option("family", cb_family)->required();
    cover_build->add_option("q", cb_q)->required();
    cover_build->add_option("c", cb_c)->required();
    cover_build->add_option("--mode", cb_mode)->check(CLI::IsMember({"full", "count"}));
    cover_build->add_option("--json", cb_json, "write certificate JSON");

    // graph export <family> <q> <c> --out FILE
    auto* graph_cmd = app.add_subcommand("graph", "Gamma_c graphs");
    auto* graph_export = graph_cmd->add_subcommand("export", "DIMACS export");
    auto* graph_metrics_cmd = graph_cmd->add_subcommand("metrics", "independence vs greedy cover");
    std::string ge_family, ge_out, ge_c, gm_family, gm_c;
    std::uint32_t ge_q = 0, gm_q = 0;
    graph_export->add_option("family", ge_family)->required();
    graph_export->add_option("q", ge_q)->required();
    graph_export->add_option("c", ge_c)->required();
    graph_export->add_option("--out", ge_out, "output path")->required();
    graph_metrics_cmd->add_option("family", gm_family)->required();
    graph_metrics_cmd->add_option("q", gm_q)->required();
    graph_metrics_cmd->add_option("c", gm_c)->required();

    // sylow <family> <q> <t>
    auto* sylow_cmd = app.add_subcommand("sylow", "Sylow subgroup counts");
    std::string sy_family;
    std::uint32_t sy_q = 0, sy_t = 0;
    sylow_cmd->add_option("family", sy_family)->required();
    sylow_cmd->add_option("q", sy_q)->required();
    sylow_cmd->add_option("t", sy_t)->required();

    // classes analyze <family> <q> [--ratio]
    auto* classes_cmd = app.add_subcommand("classes", "conjugacy class analysis");
    auto* classes_analyze = classes_cmd->add_subcommand("analyze", "per-class omega_inf");
    std::string ca_family;
    std::uint32_t ca_q = 0;
    bool ca_ratio = false, ca_nonsimple = false;
    classes_analyze->add_option("family", ca_family)->required();
    classes_analyze->add_option("q", ca_q)->required();
    classes_analyze->add_flag("--ratio", ca_ratio, "run the max-ratio conjecture check");
    classes_analyze->add_flag("--allow-nonsimple", ca_nonsimple);

    // ppd <x> <n>
    auto* ppd_cmd = app.add_subcommand("ppd", "least primitive prime divisor of x^n - 1");
    std::uint64_t ppd_x = 0;
    std::uint32_t ppd_n = 0;
    ppd_cmd->add_option("x", ppd_x)->required();
    ppd_cmd->add_option("n", ppd_n)->required();

    // verify-all
    auto* verify_cmd = app.add_subcommand("verify-all", "run the full acceptance suite");
    bool verify_extended = false;
    verify_cmd->add_flag("--extended", verify_extended, "include the long-running extended target");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    RunConfig& cfg = global_config();
    if (threads) cfg.threads = threads;
    if (closure_cap) cfg.closure_cap = closure_cap;
    if (mis_timeout >= 0) cfg.mis_timeout_ms = mis_timeout;
    if (seed) cfg.seed = seed;

    try {
        if (field_info->parsed()) {
            FiniteField F = FiniteField::make(fp, fk);
            emit(json{{"schema", kSchemaVersion},
                      {"p", F.p()},
                      {"k", F.k()},
                      {"order", F.q()},
                      {"modulus", F.modulus()}});
            return kExitOk;
        }
        if (group_build->parsed()) {
            FamilySpec spec = FamilySpec::make(family_from_string(gb_family), gb_q);
            auto g = build_group(spec);
            if (!gb_dump.empty()) dump_group_file(*g, gb_dump);
            emit(group_report(*g, spec));
            return kExitOk;
        }
        if (omega_formula_cmd->parsed()) {
            TheoremFamily f = theorem_family_from_string(of_family);
            ClassBound c = bound_from_string(of_c);
            emit(json{{"schema", kSchemaVersion},
                      {"family", of_family},
                      {"q", of_q},
                      {"c", bound_to_string(c)},
                      {"value", omega_formula(f, of_q, c)},
                      {"method", "formula"}});
            return kExitOk;
        }
        if (omega_exact_cmd->parsed()) {
            FamilySpec spec = FamilySpec::make(family_from_string(oe_family), oe_q);
            OmegaStrategy st = oe_strategy == "mis"       ? OmegaStrategy::mis
                               : oe_strategy == "certify" ? OmegaStrategy::certify
                                                          : OmegaStrategy::automatic;
            OmegaResult r = omega_exact(spec, bound_from_string(oe_c), st, cfg.mis_timeout_ms);
            emit(omega_to_json(r));
            return r.value ? kExitOk : kExitResource;
        }
        if (cover_build->parsed()) {
            Family fam = family_from_string(cb_family);
            FamilySpec spec = FamilySpec::make(fam, cb_q);
            ClassBound c = bound_from_string(cb_c);
            if (cb_mode == "count") {
                CoverCounts cc = (fam == Family::Ree3Full || fam == Family::ReeSylowP)
                                     ? ree_cover_counts(FamilySpec::make(Family::ReeSylowP, cb_q), c)
                                     : su3_cover_counts(spec, c);
                json comps = json::array();
                for (const auto& comp : cc.components)
                    comps.push_back({{"kind", comp.kind}, {"count", comp.count}});
                emit(json{{"schema", kSchemaVersion},
                          {"family", cb_family},
                          {"q", cb_q},
                          {"c", bound_to_string(c)},
                          {"mode", "count"},
                          {"components", comps},
                          {"total", cc.total}});
                return kExitOk;
            }
            auto g = build_group(spec);
            Cover cv = [&]() -> Cover {
                switch (fam) {
                    case Family::Sz:
                        return c == 1 ? sz_abelian_refinement(g, spec) : partition_cover(g, spec);
                    case Family::SU3:
                    case Family::PGU3: return su3_cover(g, spec, c);
                    case Family::Ree3Full: {
                        auto table = std::make_shared<PairClassTable>(g);
                        auto hybrid = hybrid_certified_cover(table, spec, c, cfg.mis_timeout_ms);
                        if (!hybrid) throw std::runtime_error("hybrid certification did not close");
                        return std::move(*hybrid);
                    }
                    default: return partition_cover(g, spec);
                }
            }();
            certify(cv);
            std::map<std::string, std::uint64_t> kinds;
            for (const CoverMember& m : cv.members) ++kinds[member_kind_name(m.kind)];
            json jk;
            for (auto& [k, v] : kinds) jk[k] = v;
            json out{{"schema", kSchemaVersion},
                     {"family", cb_family},
                     {"q", cb_q},
                     {"c", bound_to_string(c)},
                     {"mode", "full"},
                     {"size", cv.size()},
                     {"member_kinds", jk},
                     {"max_member_class", cv.max_member_class},
                     {"covering", cv.covering_verified},
                     {"two_minimal", cv.two_minimal_verified}};
            if (!cb_json.empty()) {
                json cert = out;
                json members = json::array();
                for (const CoverMember& m : cv.members)
                    members.push_back(
                        {{"kind", member_kind_name(m.kind)},
                         {"order", m.sub.size()},
                         {"distinguished",
                          m.distinguished ? g->encoding(*m.distinguished).hex() : std::string()}});
                cert["members"] = std::move(members);
                std::ofstream os(cb_json);
                os << cert.dump(2) << '\n';
            }
            emit(out);
            return kExitOk;
        }
        if (graph_export->parsed() || graph_metrics_cmd->parsed()) {
            bool metrics = graph_metrics_cmd->parsed();
            FamilySpec spec =
                FamilySpec::make(family_from_string(metrics ? gm_family : ge_family),
                                 metrics ? gm_q : ge_q);
            ClassBound c = bound_from_string(metrics ? gm_c : ge_c);
            auto g = build_group(spec);
            auto table = std::make_shared<PairClassTable>(g);
            NilGraph gr = NilGraph::build(table, c);
            if (metrics) {
                GraphMetrics m = graph_metrics(gr, cfg.mis_timeout_ms);
                emit(json{{"schema", kSchemaVersion},
                          {"family", gm_family},
                          {"q", gm_q},
                          {"c", bound_to_string(c)},
                          {"independence_lo", m.independence_lo},
                          {"independence_hi", m.independence_hi},
                          {"independence_exact", m.independence_exact},
                          {"greedy_cover", m.greedy_cover_size},
                          {"equality", m.equality}});
                return m.independence_exact ? kExitOk : kExitResource;
            }
            std::ofstream os(ge_out);
            if (!os) throw std::runtime_error("cannot open " + ge_out);
            export_dimacs(gr, os);
            emit(json{{"schema", kSchemaVersion},
                      {"family", ge_family},
                      {"q", ge_q},
                      {"c", bound_to_string(c)},
                      {"vertices", gr.order()},
                      {"edges", gr.edge_count()},
                      {"out", ge_out}});
            return kExitOk;
        }
        if (sylow_cmd->parsed()) {
            FamilySpec spec = FamilySpec::make(family_from_string(sy_family), sy_q);
            auto g = build_group(spec);
            auto sylows = sylow_subgroups(*g, sy_t);
            emit(json{{"schema", kSchemaVersion},
                      {"family", sy_family},
                      {"q", sy_q},
                      {"t", sy_t},
                      {"count", sylows.size()},
                      {"subgroup_order", sylows.front().size()},
                      {"unique_membership_elements", unique_sylow_members(*g, sylows).size()}});
            return kExitOk;
        }
        if (classes_analyze->parsed()) {
            FamilySpec spec = FamilySpec::make(family_from_string(ca_family), ca_q);
            auto g = build_group(spec);
            auto table = std::make_shared<PairClassTable>(g);
            json reports = json::array();
            if (ca_ratio) {
                RatioCheck rc = ratio_conjecture_check(*table, ca_nonsimple, cfg.mis_timeout_ms);
                for (const ClassReport& r : rc.reports)
                    reports.push_back({{"rep", g->encoding(r.rep).hex()},
                                       {"size", r.size},
                                       {"omega_inf", r.exact ? json(r.omega_lo)
                                                             : json{{"lo", r.omega_lo}, {"hi", r.omega_hi}}},
                                       {"non_nilpotent_class", r.non_nilpotent_class}});
                emit(json{{"schema", kSchemaVersion},
                          {"family", ca_family},
                          {"q", ca_q},
                          {"simple", rc.simple},
                          {"max_ratio", {{"omega", rc.witness_omega}, {"class_size", rc.witness_size}}},
                          {"conjecture_holds", rc.conjecture_holds},
                          {"classes", reports}});
                return kExitOk;
            }
            for (const auto& klass : g->conjugacy_classes()) {
                if (klass.size() == 1 && klass.front() == g->identity()) continue;
                ClassReport r = class_omega(*table, klass, cfg.mis_timeout_ms);
                reports.push_back({{"rep", g->encoding(r.rep).hex()},
                                   {"size", r.size},
                                   {"omega_inf", r.exact ? json(r.omega_lo)
                                                         : json{{"lo", r.omega_lo}, {"hi", r.omega_hi}}},
                                   {"non_nilpotent_class", r.non_nilpotent_class}});
            }
            emit(json{{"schema", kSchemaVersion},
                      {"family", ca_family},
                      {"q", ca_q},
                      {"classes", reports}});
            return kExitOk;
        }
        if (ppd_cmd->parsed()) {
            auto r = zsigmondy(ppd_x, ppd_n);
            json j{{"schema", kSchemaVersion}, {"x", ppd_x}, {"n", ppd_n}};
            if (r) {
                j["value"] = *r;
            } else {
                j["value"] = nullptr;
                j["reason"] = "zsigmondy-exception";
            }
            emit(j);
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            AcceptanceOptions opts;
            opts.extended = verify_extended;
            opts.on_result = [](const CriterionResult& r) {
                std::cout << "CRITERION " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                          << r.elapsed_ms << " ms) " << r.detail << std::endl;
            };
            auto results = run_acceptance(opts);
            std::cout << (all_passed(results) ? "ALL PASS" : "FAILURES PRESENT") << std::endl;
            return all_passed(results) ? kExitOk : 1;
        }
    } catch (const closure_cap_exceeded& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
