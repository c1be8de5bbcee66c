// wfm: exact Chow-ring toolkit for weighted iterated-blowup compactifications of point
// configurations.  Exit codes: 0 success, 1 verification failure, 2 input
// error, 3 resource cap.  All stdout is deterministic for a fixed
// invocation; wall-clock timings go to stderr.

#include <chrono>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "wfm/json_io.hpp"
#include "wfm/poly_parse.hpp"
#include "wfm/verify.hpp"

using namespace wfm;

namespace {

struct Options {
    int n = 0; // 0: infer from --weights
    int m = 1;
    int k = 0;
    int stage = -1; // -1: the closed-form presentation
    std::string weights;
    std::string target_weights;
    std::string kept;
    std::string poly;
    std::string format = "text";
    std::string method = "groebner";
    std::string base_family = "pm";
    std::string suite;
    bool dump_base = false;
    int cap_vars = Caps{}.max_vars;
    int cap_degree = Caps{}.max_degree;
    std::uint64_t seed = 1;

    bool json() const { return format == "json"; }

    Caps caps() const {
        if (cap_vars <= 0 || cap_degree <= 0) throw InputError("caps must be positive");
        Caps c;
        c.max_vars = cap_vars;
        c.max_degree = cap_degree;
        return c;
    }

    WeightVector parse_A(const std::string& csv, const char* flag) const {
        if (csv.empty()) throw InputError(std::string("missing ") + flag);
        return n > 0 ? parse_weights(n, csv) : parse_weights(csv);
    }
    WeightVector A() const { return parse_A(weights, "--weights"); }

    CellularBase base() const {
        if (base_family != "pm")
            throw InputError("unknown base family '" + base_family +
                             "' (only 'pm', projective m-space, is available)");
        return projective_space(m);
    }
};

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string nest_str(const std::vector<IndexSet>& nest) {
    std::string s = "{";
    for (std::size_t i = 0; i < nest.size(); ++i) s += (i ? "," : "") + nest[i].to_string();
    return s + "}";
}

void print_sets(const std::vector<IndexSet>& sets, bool numbered) {
    for (std::size_t p = 0; p < sets.size(); ++p) {
        if (numbered)
            std::cout << p << ": " << sets[p].to_string() << "\n";
        else
            std::cout << "  " << sets[p].to_string() << "\n";
    }
}

void cmd_building_set(const Options& o) {
    WeightVector A = o.A();
    OrderedBuildingSet G = building_set(A);
    if (o.json()) {
        emit(Json{{"n", G.n()},
                  {"weights", weights_json(A)},
                  {"elements", indexsets_json(G.elements())},
                  {"trivial", G.empty()}});
        return;
    }
    if (G.empty()) {
        std::cout << "trivial: X^n\n";
        return;
    }
    print_sets(G.elements(), true);
}

void cmd_fm_order(const Options& o) {
    WeightVector A = o.A();
    OrderedBuildingSet G = building_set(A);
    std::vector<IndexSet> order = fm_order(G);
    if (o.json()) {
        emit(Json{{"n", G.n()}, {"weights", weights_json(A)}, {"order", indexsets_json(order)}});
        return;
    }
    if (order.empty()) {
        std::cout << "trivial: X^n\n";
        return;
    }
    print_sets(order, true);
}

void cmd_nests(const Options& o) {
    WeightVector A = o.A();
    OrderedBuildingSet G = building_set(A);
    auto nests = enumerate_nests(G, o.caps());
    if (o.json()) {
        Json arr = Json::array();
        for (const auto& nest : nests) arr.push_back(indexsets_json(nest));
        emit(Json{{"n", G.n()},
                  {"weights", weights_json(A)},
                  {"count", nests.size()},
                  {"nests", std::move(arr)}});
        return;
    }
    std::cout << "count: " << nests.size() << "\n";
    for (const auto& nest : nests) std::cout << nest_str(nest) << "\n";
}

void cmd_reduction(const Options& o) {
    WeightVector A = o.A();
    WeightVector B = o.parse_A(o.target_weights, "--target-weights");
    ReductionData red = reduction_centers(A, B);
    if (o.json()) {
        emit(Json{{"source_weights", weights_json(red.source_weights)},
                  {"target_weights", weights_json(red.target_weights)},
                  {"extra_centers", indexsets_json(red.extra_centers)}});
        return;
    }
    std::cout << "source: " << red.source_weights.str() << "\n";
    std::cout << "target: " << red.target_weights.str() << "\n";
    std::cout << "extra centers (" << red.extra_centers.size() << "):\n";
    print_sets(red.extra_centers, false);
}

void cmd_forgetful(const Options& o) {
    WeightVector A = o.A();
    if (o.kept.empty()) throw InputError("missing --kept");
    IndexSet kept;
    std::size_t pos = 0;
    while (pos < o.kept.size()) {
        std::size_t next = o.kept.find(',', pos);
        if (next == std::string::npos) next = o.kept.size();
        std::string tok = o.kept.substr(pos, next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("--kept expects comma-separated labels, got '" + tok + "'");
        int a = std::stoi(tok);
        if (a < 1) throw InputError("labels start at 1");
        kept = kept.with(a);
        pos = next + 1;
    }
    ForgetfulData f = forgetful_data(A, kept);
    if (o.json()) {
        emit(Json{{"source_weights", weights_json(f.source_weights)},
                  {"kept", indexset_json(f.kept_labels)},
                  {"target_weights", weights_json(f.target_weights)},
                  {"target_building_set", indexsets_json(f.target_building_set.elements())}});
        return;
    }
    std::cout << "kept: " << f.kept_labels.to_string() << "\n";
    std::cout << "target weights: " << f.target_weights.str() << "\n";
    std::cout << "target building set (" << f.target_building_set.size() << "):\n";
    print_sets(f.target_building_set.elements(), false);
}

void cmd_mustata(const Options& o) {
    if (o.n <= 0) throw InputError("missing -n");
    WeightVector A = mustata_weights(o.n, o.k);
    if (o.json()) {
        emit(Json{{"n", o.n}, {"k", o.k}, {"weights", weights_json(A)}});
        return;
    }
    std::cout << A.str() << "\n";
}

Json base_dump(const CellularBase& X) {
    Json chern = Json::array();
    for (const UniClass& c : X.tangent_chern) {
        Json coeffs = Json::array();
        for (const Rat& r : c) coeffs.push_back(rat_str(r));
        chern.push_back(std::move(coeffs));
    }
    Json diag = Json::array();
    for (const DiagTerm& t : X.diagonal_class)
        diag.push_back(Json{{"i", t.i}, {"j", t.j}, {"coeff", rat_str(t.coeff)}});
    return Json{{"family", "pm"},
                {"m", X.m},
                {"hyperplane", X.hyperplane_symbol},
                {"tangent_chern", std::move(chern)},
                {"diagonal", std::move(diag)},
                {"poincare", X.poincare}};
}

void print_family(const Ring& R, const char* name, const std::vector<MultiPoly>& fam) {
    std::cout << name << " (" << fam.size() << "):\n";
    for (const MultiPoly& p : fam) std::cout << "  " << poly_str(R, p) << "\n";
}

void cmd_presentation(const Options& o) {
    if (o.dump_base) {
        emit(base_dump(o.base()));
        return;
    }
    WeightVector A = o.A();
    CellularBase base = o.base();
    OrderedBuildingSet G = building_set(A);
    Presentation P =
        o.stage < 0 ? chow_presentation(base, G) : stage_presentation(base, G, o.stage);
    if (o.json()) {
        emit(presentation_json(P));
        return;
    }
    std::cout << "ring:";
    for (int v = 0; v < P.ring.nvars(); ++v) std::cout << " " << P.ring.var_name(v);
    std::cout << "\n";
    print_family(P.ring, "base", P.fam_base);
    print_family(P.ring, "overlap", P.fam_overlap);
    print_family(P.ring, "linear", P.fam_linear);
    print_family(P.ring, "weak_overlap", P.fam_weak);
    print_family(P.ring, "chern", P.fam_chern);
}

int cmd_betti(const Options& o) {
    if (o.method != "groebner" && o.method != "keel" && o.method != "both")
        throw InputError("method must be groebner, keel, or both");
    WeightVector A = o.A();
    CellularBase base = o.base();
    OrderedBuildingSet G = building_set(A);
    Caps caps = o.caps();

    auto timed = [&](const char* name, auto&& run) {
        auto t0 = std::chrono::steady_clock::now();
        BettiTable B = run();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << name << ": " << ms << " ms\n";
        return B;
    };

    if (o.method != "both") {
        BettiTable B = o.method == "groebner"
                           ? timed("groebner",
                                   [&] { return hilbert_function(chow_presentation(base, G), caps); })
                           : timed("keel", [&] { return keel_betti(base, G, caps); });
        if (o.json())
            emit(betti_json(B, o.method));
        else
            std::cout << B.str() << "\n";
        return 0;
    }

    BettiTable H =
        timed("groebner", [&] { return hilbert_function(chow_presentation(base, G), caps); });
    BettiTable K = timed("keel", [&] { return keel_betti(base, G, caps); });
    bool agree = H == K;
    if (o.json()) {
        emit(Json{{"agree", agree},
                  {"results", Json::array({betti_json(H, "groebner"), betti_json(K, "keel")})}});
    } else {
        std::cout << "groebner: " << H.str() << "\n";
        std::cout << "keel:     " << K.str() << "\n";
        std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

void cmd_degree(const Options& o) {
    if (o.poly.empty()) throw InputError("missing --poly");
    WeightVector A = o.A();
    Presentation P = chow_presentation(o.base(), building_set(A));
    MultiPoly p = parse_poly(P.ring, o.poly);
    Int d = degree(p, P, o.caps());
    if (o.json()) {
        emit(Json{{"n", A.n()},
                  {"m", o.m},
                  {"weights", weights_json(A)},
                  {"poly", o.poly},
                  {"value", d.str()}});
        return;
    }
    std::cout << d.str() << "\n";
}

int cmd_verify(const Options& o) {
    Caps caps = o.caps();
    std::vector<VerifyReport> reports;
    if (o.suite.empty()) {
        reports = run_default_verify(o.seed, caps);
    } else if (o.suite == "all") {
        for (const std::string& name : verify_suite_names())
            reports.push_back(run_verify_suite(name, o.seed, caps));
    } else {
        reports.push_back(run_verify_suite(o.suite, o.seed, caps));
    }
    bool all_pass = true;
    for (const VerifyReport& rep : reports)
        if (!rep.pass()) all_pass = false;

    if (o.json()) {
        Json suites = Json::array();
        for (const VerifyReport& rep : reports) {
            Json checks = Json::array();
            for (const VerifyCheck& c : rep.checks)
                checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            suites.push_back(
                Json{{"suite", rep.suite}, {"pass", rep.pass()}, {"checks", std::move(checks)}});
        }
        emit(Json{{"pass", all_pass}, {"suites", std::move(suites)}});
    } else {
        for (const VerifyReport& rep : reports) {
            if (rep.pass()) {
                std::cout << "suite " << rep.suite << ": PASS (" << rep.checks.size()
                          << " checks)\n";
            } else {
                std::cout << "suite " << rep.suite << ": FAIL (" << rep.failed() << " of "
                          << rep.checks.size() << " checks failed)\n";
                for (const VerifyCheck& c : rep.checks)
                    if (!c.pass)
                        std::cout << "  FAIL " << c.name
                                  << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
            }
        }
        std::cout << "verify: " << (all_pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chow rings of iterated diagonal blowups of n weighted points in projective space"};
    app.require_subcommand(1);
    Options o;
    int rc = 0;

    auto add_format = [&o](CLI::App* c) {
        c->add_option("--format", o.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_weights = [&o, &add_format](CLI::App* c) {
        c->add_option("-n", o.n, "number of labeled points (checked against --weights)");
        c->add_option("--weights", o.weights, "comma-separated exact rationals in (0,1]");
        add_format(c);
    };
    auto add_geometry = [&o](CLI::App* c) {
        c->add_option("--m", o.m, "dimension of the projective-space base");
        c->add_option("--base", o.base_family, "base family (only 'pm')");
        c->add_option("--cap-vars", o.cap_vars, "refuse rings with more variables");
        c->add_option("--cap-degree", o.cap_degree, "refuse computations past this degree");
    };

    auto* c_bs = app.add_subcommand("building-set", "weighted building set, in blowup order");
    add_weights(c_bs);
    c_bs->callback([&] { cmd_building_set(o); });

    auto* c_fm = app.add_subcommand("fm-order", "inductive one-point order on the building set");
    add_weights(c_fm);
    c_fm->callback([&] { cmd_fm_order(o); });

    auto* c_ne = app.add_subcommand("nests", "enumerate nests (boundary strata)");
    add_weights(c_ne);
    c_ne->callback([&] { cmd_nests(o); });

    auto* c_re = app.add_subcommand("reduction", "blowup centers of a weight reduction");
    add_weights(c_re);
    c_re->add_option("--target-weights", o.target_weights, "dominated weight vector");
    c_re->callback([&] { cmd_reduction(o); });

    auto* c_fo = app.add_subcommand("forgetful", "forgetful morphism data for kept labels");
    add_weights(c_fo);
    c_fo->add_option("--kept", o.kept, "comma-separated labels to keep");
    c_fo->callback([&] { cmd_forgetful(o); });

    auto* c_mu = app.add_subcommand("mustata", "uniform weights of the k-stable compactification");
    c_mu->add_option("-n", o.n, "number of labeled points");
    c_mu->add_option("-k", o.k, "stability parameter, 0 <= k < n");
    add_format(c_mu);
    c_mu->callback([&] { cmd_mustata(o); });

    auto* c_pr = app.add_subcommand("presentation", "Chow-ring presentation (full or staged)");
    add_weights(c_pr);
    add_geometry(c_pr);
    c_pr->add_option("--stage", o.stage, "blowup stage j >= 0 (default: closed form)");
    c_pr->add_flag("--dump-base", o.dump_base, "print the base geometry data as JSON and exit");
    c_pr->callback([&] { cmd_presentation(o); });

    auto* c_be = app.add_subcommand("betti", "graded ranks of the Chow ring");
    add_weights(c_be);
    add_geometry(c_be);
    c_be->add_option("--method", o.method, "groebner, keel, or both")
        ->check(CLI::IsMember({"groebner", "keel", "both"}));
    c_be->callback([&] { rc = cmd_betti(o); });

    auto* c_de = app.add_subcommand("degree", "integral of a top-degree class");
    add_weights(c_de);
    add_geometry(c_de);
    c_de->add_option("--poly", o.poly, "polynomial in the presentation variables");
    c_de->callback([&] { cmd_degree(o); });

    auto* c_ve = app.add_subcommand("verify", "run the invariant suites");
    add_format(c_ve);
    c_ve->add_option("--suite", o.suite, "single suite name, or 'all' (default: structural set)");
    c_ve->add_option("--seed", o.seed, "seed for the randomized suites");
    c_ve->add_option("--cap-vars", o.cap_vars, "refuse rings with more variables");
    c_ve->add_option("--cap-degree", o.cap_degree, "refuse computations past this degree");
    c_ve->callback([&] { rc = cmd_verify(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
