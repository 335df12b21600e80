// trides command line: construct the design families, verify design/group
// files, and classify parameter pairs.
//
// Reports are key=value lines on stdout (optionally followed by table rows),
// diagnostics go to stderr, and the exit code is the only success channel:
//   0 ok, 2 domain/parameter error, 3 size cap exceeded, 4 parse error,
//   5 group does not preserve the block set.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trides/classify.hpp"
#include "trides/construct.hpp"
#include "trides/design.hpp"
#include "trides/io.hpp"
#include "trides/perm.hpp"

namespace {

using namespace trides;

struct report {
    std::vector<std::pair<std::string, std::string>> keys;
    std::vector<std::string> rows;

    void put(const std::string& k, const std::string& v) { keys.emplace_back(k, v); }
    void put(const std::string& k, std::uint64_t v) { put(k, std::to_string(v)); }
    void put(const std::string& k, bool v) { put(k, std::string(v ? "true" : "false")); }

    void print() const {
        for (const auto& [k, v] : keys) std::cout << k << "=" << v << "\n";
        for (const auto& r : rows) std::cout << r << "\n";
    }
};

std::string hex64(std::uint64_t x) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::string join_argv(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

void put_design_params(report& rep, const design_params& p) {
    rep.put("v", p.v);
    rep.put("b", p.b);
    rep.put("r", p.r);
    rep.put("lambda", p.lambda);
    rep.put("is_2design", p.is_2design);
    if (p.witness) {
        rep.put("witness_pair", std::to_string(p.witness->x) + "," + std::to_string(p.witness->y));
        rep.put("witness_count", p.witness->count);
        rep.put("reference_count", p.witness->reference);
    }
}

void put_classification(report& rep, const classification_outcome& out) {
    rep.put("admissible", out.admissible);
    std::string cases;
    for (const auto& cw : out.cases) {
        if (!cases.empty()) cases += ',';
        cases += case_name(cw.c);
    }
    rep.put("cases", cases.empty() ? "-" : cases);
    for (const auto& cw : out.cases) {
        std::string w;
        for (const auto& [a, b] : cw.witnesses) {
            if (!w.empty()) w += ',';
            w += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
        rep.put(std::string("witness_") + case_name(cw.c), w);
    }
}

// Group-side certificates: block invariance, flag orbits, rank.
void put_group_certificates(report& rep, const perm_group& G, const design& D) {
    auto fo = flag_orbits(G, D);  // throws not_automorphism on a bad group
    rep.put("block_invariant", true);
    rep.put("flag_orbits", fo.orbit_count());
    rep.put("flag_transitive", fo.orbit_count() == 1);
    bool transitive = point_orbits(G).orbit_count() == 1;
    rep.put("transitive", transitive);
    if (transitive) {
        try {
            auto pr = pair_rank(G);
            rep.put("rank", std::uint64_t{pr.rank});
            std::string sizes;
            for (auto s : pr.nondiagonal_sizes()) {
                if (!sizes.empty()) sizes += ' ';
                sizes += std::to_string(s);
            }
            rep.put("nondiagonal_orbital_sizes", sizes);
        } catch (const size_exceeded&) {
            rep.put("rank_skipped", std::string("degree above pair-scan cap"));
        }
    }
}

int run_construct(const std::string& family, std::uint64_t q, std::uint32_t h,
                  const affine_orbit_spec& aos, std::string out_design, std::string out_group,
                  report& rep) {
    design dsg;
    perm_group grp;
    std::string tag;

    if (family == "pg-triples" || family == "pg-triangles") {
        auto [d, pred] = family == "pg-triples" ? pg_collinear_triples(q, h) : pg_triangles(q, h);
        dsg = std::move(d);
        auto geom = build_pg(q, h);
        grp = geom.gf.d() > 1 ? pgammal_group(geom) : pgl_group(geom);
        rep.put("family", family);
        rep.put("predicted_v", pred.v);
        rep.put("predicted_b", pred.b);
        rep.put("predicted_r", pred.r);
        rep.put("predicted_lambda", pred.lambda);
        tag = family + "-q" + std::to_string(q) + "-h" + std::to_string(h);
    } else if (family == "ag3") {
        auto [d, pred] = ag3_lines(h);
        dsg = std::move(d);
        grp = agl_group(3, h);
        rep.put("family", family);
        rep.put("predicted_v", pred.v);
        rep.put("predicted_b", pred.b);
        rep.put("predicted_r", pred.r);
        rep.put("predicted_lambda", pred.lambda);
        tag = "ag3-h" + std::to_string(h);
    } else {
        auto res = affine_orbit_design(aos);
        dsg = std::move(res.dsg);
        grp = std::move(res.group);
        rep.put("family", family);
        tag = "affine-orbit-p" + std::to_string(aos.p) + "-d" + std::to_string(aos.d) + "-m" +
              std::to_string(aos.m) + "-e" + std::to_string(aos.e) + "-s" + std::to_string(aos.s) +
              "-x" + std::to_string(aos.s_exp) + "-t" + std::to_string(aos.t_exp);
    }

    if (out_design.empty()) out_design = tag + ".design";
    if (out_group.empty()) out_group = tag + ".group";
    auto dtxt = design_to_text(dsg);
    auto gtxt = group_to_text(grp);
    write_text_file(out_design, dtxt);
    write_text_file(out_group, gtxt);
    rep.put("design_file", out_design);
    rep.put("design_digest", hex64(fnv1a64(dtxt)));
    rep.put("group_file", out_group);
    rep.put("group_digest", hex64(fnv1a64(gtxt)));
    rep.put("group_label", grp.label);

    auto params = verify_2design(dsg);
    put_design_params(rep, params);
    put_group_certificates(rep, grp, dsg);
    if (family == "affine-orbit") {
        bool div = false;
        if (params.is_2design && params.lambda > 0) {
            std::int64_t vm6 = static_cast<std::int64_t>(params.v) - 6;
            div = vm6 % static_cast<std::int64_t>(params.lambda) == 0;
        }
        rep.put("lambda_divides_v_minus_6", div);
    }
    if (params.is_2design)
        put_classification(rep, classify(static_cast<std::int64_t>(params.v),
                                         static_cast<std::int64_t>(params.lambda)));
    return 0;
}

int run_verify(const std::string& design_path, const std::string& group_path, report& rep) {
    auto dtxt = read_text_file(design_path);
    auto dsg = design_from_text(dtxt);
    rep.put("design_file", design_path);
    rep.put("design_digest", hex64(fnv1a64(dtxt)));
    auto params = verify_2design(dsg);
    put_design_params(rep, params);

    if (!group_path.empty()) {
        auto gtxt = read_text_file(group_path);
        auto grp = group_from_text(gtxt);
        rep.put("group_file", group_path);
        rep.put("group_digest", hex64(fnv1a64(gtxt)));
        rep.put("group_label", grp.label);
        put_group_certificates(rep, grp, dsg);
    }
    if (params.is_2design)
        put_classification(rep, classify(static_cast<std::int64_t>(params.v),
                                         static_cast<std::int64_t>(params.lambda)));
    return 0;
}

int run_classify(std::int64_t v, std::int64_t lambda, std::int64_t scan, report& rep) {
    if (scan >= 0) {
        if (scan > 10000) throw domain_error("scan cap is 10000");
        rep.put("scan_max", static_cast<std::uint64_t>(scan));
        for (std::int64_t vv = 7; vv <= scan; ++vv) {
            if (vv % 6 != 1 && vv % 6 != 3) continue;
            for (std::int64_t l = 1; l <= vv - 6; ++l) {
                if ((vv - 6) % l != 0) continue;
                auto out = classify(vv, l);
                if (!out.admissible) continue;
                std::string cases;
                for (const auto& cw : out.cases) {
                    if (!cases.empty()) cases += ',';
                    cases += case_name(cw.c);
                }
                rep.rows.push_back(std::to_string(vv) + " " + std::to_string(l) + " " +
                                   (cases.empty() ? "-" : cases));
            }
        }
        return 0;
    }
    rep.put("v", static_cast<std::uint64_t>(v));
    rep.put("lambda", static_cast<std::uint64_t>(lambda));
    put_classification(rep, classify(v, lambda));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify and classify flag-transitive 2-(v,3,lambda) designs"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // keep -h free: --h is a parameter

    std::string family, out_design, out_group;
    std::uint64_t q = 0;
    std::uint32_t h = 0;
    affine_orbit_spec aos;

    auto* construct = app.add_subcommand("construct", "build a design family instance and its group");
    construct->set_help_flag("--help", "print help");
    construct->add_option("family", family, "pg-triples | pg-triangles | ag3 | affine-orbit")
        ->required()
        ->check(CLI::IsMember({"pg-triples", "pg-triangles", "ag3", "affine-orbit"}));
    construct->add_option("--q", q, "prime power order of the projective geometry");
    construct->add_option("--h", h, "dimension parameter (PG(h-1,q) or AG(h,3))");
    construct->add_option("--p", aos.p, "field characteristic (affine-orbit)");
    construct->add_option("--d", aos.d, "field degree (affine-orbit)");
    construct->add_option("--m", aos.m, "multiplier exponent: G0 contains x -> w^(2m) x");
    construct->add_option("--e", aos.e, "twist scalar exponent (even)");
    construct->add_option("--s", aos.s, "Frobenius power of the twist generator");
    construct->add_option("--sexp", aos.s_exp, "base block square exponent");
    construct->add_option("--texp", aos.t_exp, "base block non-square exponent");
    construct->add_option("--out-design", out_design, "design output path");
    construct->add_option("--out-group", out_group, "group output path");

    std::string design_path, group_path;
    auto* verify = app.add_subcommand("verify", "verify a design file, optionally against a group file");
    verify->add_option("design", design_path, "design file in the canonical text format")->required();
    verify->add_option("--group", group_path, "group file in the canonical text format");

    std::int64_t cv = 0, clambda = 0, cscan = -1;
    auto* classify_cmd = app.add_subcommand("classify", "classify a parameter pair (v, lambda)");
    auto* vopt = classify_cmd->add_option("--v", cv, "point count");
    auto* lopt = classify_cmd->add_option("--lambda", clambda, "pair coverage");
    auto* sopt = classify_cmd->add_option("--scan", cscan, "list all admissible pairs with v <= scan");
    vopt->needs(lopt);
    lopt->needs(vopt);
    sopt->excludes(vopt);

    CLI11_PARSE(app, argc, argv);

    report rep;
    rep.put("command", join_argv(argc, argv));
    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (construct->parsed()) {
            rc = run_construct(family, q, h, aos, out_design, out_group, rep);
        } else if (verify->parsed()) {
            rc = run_verify(design_path, group_path, rep);
        } else {
            if (cscan < 0 && vopt->count() == 0)
                throw domain_error("classify needs --v/--lambda or --scan");
            rc = run_classify(cv, clambda, cscan, rep);
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const not_automorphism& e) {
        rep.put("block_invariant", false);
        rep.print();
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const size_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    rep.put("wall_time_ms", static_cast<std::uint64_t>(ms.count()));
    rep.print();
    return rc;
}
