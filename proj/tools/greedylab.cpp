// Command line front end. Every numeric answer is printed as a string in the
// active arithmetic mode ("3/4" exact, shortest decimal in float). Exit code
// contract: 0 on success with no claim violations and matching examples,
// 2 when a claim run found violations or an example check failed, 1 on usage
// or runtime errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "greedylab/claims.hpp"
#include "greedylab/config.hpp"
#include "greedylab/report.hpp"
#include "greedylab/verify.hpp"

namespace gl = greedylab;

namespace {

struct common_opts {
    std::string mode = "exact";
    std::string space = "lp:1";
    std::string weights = "unit";
    int window = 12;
    std::size_t samples = 1000;
    unsigned long long seed = 7;
    bool seed_given = false;
    std::string out;
};

void add_mode(CLI::App* cmd, common_opts& o) {
    cmd->add_option("--mode", o.mode, "arithmetic mode: exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
}

void add_space(CLI::App* cmd, common_opts& o) {
    cmd->add_option("--space", o.space,
                    "norm engine: lp:1, lp:2, lp:inf, spreading:N=12, spreading:3, "
                    "modular:1,2,3, partial_sum");
}

void add_weights(CLI::App* cmd, common_opts& o) {
    cmd->add_option("--weights", o.weights,
                    "weight sequence: unit, constant:q, harmonic, geometric:q, "
                    "explicit:q1,q2;tail=q");
}

void add_sampling(CLI::App* cmd, common_opts& o) {
    cmd->add_option("--window", o.window, "index window for sampling and constants");
    cmd->add_option("--samples", o.samples, "target number of valid instances");
    auto* sd = cmd->add_option("--seed", o.seed, "random seed (GREEDYLAB_SEED overrides default)");
    cmd->parse_complete_callback([&o, sd] { o.seed_given = sd->count() > 0; });
}

unsigned long long effective_seed(const common_opts& o) {
    if (o.seed_given) return o.seed;
    if (auto e = gl::env_seed()) return *e;
    return o.seed;
}

void emit(const gl::report_json& j, const std::string& out) {
    std::string text = gl::render_report(j);
    std::fputs(text.c_str(), stdout);
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        f << text;
    }
}

template <class R>
int do_norm(const common_opts& o, const std::string& xenc) {
    auto space = gl::make_engine<R>(gl::space_spec_from_shorthand(o.space));
    auto x = gl::sparse_vector<R>::decode(xenc);
    gl::report_json j;
    j["space"] = space->name();
    j["mode"] = gl::scalar_ops<R>::mode_name();
    j["x"] = x.encode();
    j["norm"] = gl::scalar_ops<R>::str(space->norm(x));
    emit(j, o.out);
    return 0;
}

int do_dual(const common_opts& o, const std::string& xenc) {
    auto base = gl::make_engine<gl::rational>(gl::space_spec_from_shorthand(o.space));
    auto* sp = dynamic_cast<gl::spreading_engine<gl::rational>*>(base.get());
    if (!sp) throw std::invalid_argument("dual: only the spreading family has the polyhedral dual");
    auto z = gl::sparse_vector<gl::rational>::decode(xenc);
    gl::report_json j;
    j["space"] = sp->name();
    j["z"] = z.encode();
    j["dual"] = gl::to_json(gl::dual_norm_polyhedral(*sp, z));
    emit(j, o.out);
    return 0;
}

template <class R>
int do_tga(const common_opts& o, const std::string& xenc, int m, bool all, std::size_t cap) {
    auto space = gl::make_engine<R>(gl::space_spec_from_shorthand(o.space));
    auto x = gl::sparse_vector<R>::decode(xenc);
    auto run = gl::greedy_step(x, m);
    gl::report_json j;
    j["space"] = space->name();
    j["mode"] = gl::scalar_ops<R>::mode_name();
    j["x"] = x.encode();
    j["m"] = m;
    j["greedy_set"] = run.lambda.str();
    j["alpha"] = run.alpha;
    j["beta"] = run.beta;
    j["approximant"] = run.approximant.encode();
    j["residual"] = run.residual.encode();
    j["residual_norm"] = gl::scalar_ops<R>::str(space->norm(run.residual));
    if (all) {
        auto sets = gl::greedy_sets(x, m, cap);
        gl::report_json arr = gl::report_json::array();
        for (const auto& s : sets.lambdas) arr.push_back(s.str());
        j["greedy_sets"] = std::move(arr);
        j["greedy_sets_total"] = sets.total;
        j["greedy_sets_complete"] = sets.complete;
    }
    emit(j, o.out);
    return 0;
}

template <class R>
int do_sigma(const common_opts& o, const std::string& xenc, int m, const std::string& side) {
    auto space = gl::make_engine<R>(gl::space_spec_from_shorthand(o.space));
    gl::weight_sequence w = gl::weight_sequence::parse(o.weights);
    auto x = gl::sparse_vector<R>::decode(xenc);
    auto sig = side == "left" ? gl::sigma_left(*space, w, x, m) : gl::sigma_right(*space, w, x, m);
    gl::report_json j;
    j["space"] = space->name();
    j["weights"] = w.name();
    j["mode"] = gl::scalar_ops<R>::mode_name();
    j["x"] = x.encode();
    j["m"] = m;
    j["side"] = side;
    j["greedy_set"] = sig.run.lambda.str();
    j["residual_norm"] = gl::scalar_ops<R>::str(space->norm(sig.run.residual));
    j["sigma"] = gl::to_json(sig);
    emit(j, o.out);
    return 0;
}

template <class R>
int do_constants(const common_opts& o, const std::string& name) {
    auto space = gl::make_engine<R>(gl::space_spec_from_shorthand(o.space));
    gl::weight_sequence w = gl::weight_sequence::parse(o.weights);
    unsigned long long seed = effective_seed(o);
    int win = gl::effective_window(*space, o.window);
    gl::constant_estimate<R> est;
    if (name == "basis") {
        est = gl::basis_constant(*space, win);
    } else if (name == "quasi_greedy") {
        gl::vector_stream<R> vs(win, seed);
        est = gl::quasi_greedy_lower_bound(*space, gl::take_vectors(vs, o.samples));
    } else if (name == "conservative") {
        est = gl::set_pair_constant(*space, w, gl::pair_relation::left_of, std::min(win, 14),
                                    "w_conservative");
    } else if (name == "reverse_conservative") {
        est = gl::set_pair_constant(*space, w, gl::pair_relation::right_of, std::min(win, 14),
                                    "w_reverse_conservative");
    } else if (name == "democracy") {
        est = gl::set_pair_constant(*space, w, gl::pair_relation::any, std::min(win, 12),
                                    "democracy");
    } else if (name == "left_comparison" || name == "right_comparison" ||
               name == "full_comparison") {
        gl::propA_variant v = name == "left_comparison" ? gl::propA_variant::left
                              : name == "right_comparison" ? gl::propA_variant::right
                                                           : gl::propA_variant::full;
        gl::propA_stream<R> ps(win, seed, space->name() == "partial_sum");
        std::vector<gl::propA_instance<R>> pool;
        for (std::size_t i = 0; i < o.samples; ++i) pool.push_back(ps.next());
        est = gl::property_A_lower_bound(*space, w, v, pool, name);
    } else {
        throw std::invalid_argument(
            "constants estimate: unknown name '" + name +
            "' (use basis, quasi_greedy, conservative, reverse_conservative, democracy, "
            "left_comparison, right_comparison, full_comparison)");
    }
    est.window = win;
    est.seed = seed;
    gl::report_json j;
    j["space"] = space->name();
    j["weights"] = w.name();
    j["mode"] = gl::scalar_ops<R>::mode_name();
    j["estimate"] = gl::to_json(est);
    emit(j, o.out);
    return 0;
}

bool is_pseudo_claim(const std::string& id) {
    return id == "left-property-A" || id == "right-property-A" || id == "property-A";
}

template <class R>
gl::check_report run_one_claim(const common_opts& o, const std::string& id,
                               unsigned long long seed) {
    auto space = gl::make_engine<R>(gl::space_spec_from_shorthand(o.space));
    gl::weight_sequence w = gl::weight_sequence::parse(o.weights);
    if (is_pseudo_claim(id)) {
        gl::propA_variant v = id == "left-property-A" ? gl::propA_variant::left
                              : id == "right-property-A" ? gl::propA_variant::right
                                                         : gl::propA_variant::full;
        return gl::run_property_A_estimate<R>(v, *space, w, o.window, o.samples, seed);
    }
    return gl::run_claim<R>(id, *space, w, o.window, o.samples, seed);
}

int do_verify_claim(const common_opts& o, const std::string& id) {
    unsigned long long seed = effective_seed(o);
    gl::check_report rep = o.mode == "exact" ? run_one_claim<gl::rational>(o, id, seed)
                                             : run_one_claim<double>(o, id, seed);
    gl::report_json j = gl::report_envelope(gl::report_json{
        {"command", "verify claim"}, {"claim", id}, {"space", o.space},
        {"weights", o.weights}, {"mode", o.mode}, {"window", o.window},
        {"samples", o.samples}, {"seed", std::to_string(seed)}});
    j["report"] = gl::to_json(rep);
    emit(j, o.out);
    return rep.violation_count == 0 ? 0 : 2;
}

int do_verify_examples(const common_opts& o) {
    auto rep = gl::reproduce_examples();
    gl::report_json j = gl::report_envelope(gl::report_json{{"command", "verify examples"}});
    j["examples"] = gl::to_json(rep);
    emit(j, o.out);
    return rep.all_pass ? 0 : 2;
}

int do_list_claims(const std::string& filter) {
    auto contains = [](const std::string& hay, const std::string& needle) {
        return hay.find(needle) != std::string::npos;
    };
    std::printf("%-7s %-11s %s\n", "id", "gated-by", "statement");
    for (const auto& c : gl::claim_table()) {
        if (!filter.empty() && !contains(c.id, filter) && !contains(c.statement, filter))
            continue;
        std::printf("%-7s %-11s %s\n", c.id.c_str(),
                    c.requires_normalized ? "normalized" : "-", c.statement.c_str());
    }
    return 0;
}

// the fixed cell matrix behind `run --preset acceptance`
struct preset_cell {
    std::string claim, space, weight;
    std::size_t target;
};

std::vector<preset_cell> acceptance_cells(bool exact_mode) {
    std::string lp = exact_mode ? "lp:1" : "lp:2";
    std::string sp = "spreading:N=12";
    std::string ps = "partial_sum";
    std::string bounded = "explicit:1,1/2;tail=1/2";
    std::string plateau = "explicit:1/8,1/8,1/8,1/8,1/8,1/8,1/8,1/8;tail=1";
    std::vector<preset_cell> cells;
    auto add = [&](const std::string& c, const std::string& s, const std::string& w,
                   std::size_t t) { cells.push_back({c, s, w, t}); };
    for (const auto& s : {lp, sp, ps}) add("L1", s, "unit", 40);
    for (const auto& s : {lp, sp, ps}) add("L2", s, "unit", 40);
    for (const auto& s : {lp, sp, ps}) add("T21", s, "unit", 25);
    for (const auto& s : {lp, sp, ps}) add("T24", s, "unit", 25);
    for (const auto& s : {lp, sp, ps})
        for (const auto& w : {std::string("unit"), std::string("harmonic")})
            add("P36", s, w, 25);
    for (const auto& s : {lp, sp, ps}) add("L38", s, "unit", 40);
    for (const auto& s : {lp, sp, ps})
        for (const auto& w : {std::string("unit"), std::string("harmonic")})
            add("T39b", s, w, 25);
    for (const auto& s : {lp, sp, ps})
        for (const auto& w : {std::string("unit"), std::string("harmonic")})
            add("T310b", s, w, 25);
    for (const auto& s : {lp, sp, ps}) add("L311", s, "unit", 40);
    for (const auto& s : {lp, sp, ps})
        for (const auto& w : {std::string("unit"), bounded}) add("P313", s, w, 25);
    for (const auto& s : {lp, sp, ps})
        for (const auto& w : {std::string("unit"), bounded}) add("T314", s, w, 25);
    for (const auto& s : {lp, sp, ps}) add("T317", s, "harmonic", 40);
    for (const auto& s : {lp, sp, ps}) add("P41a", s, plateau, 40);
    for (const auto& s : {lp, sp, ps})
        for (const auto& w : {std::string("geometric:2"), std::string("geometric:1/3")})
            add("P41bc", s, w, 25);
    add("P43", lp, "geometric:1/3", 25);
    add("P43", lp, "harmonic", 25);
    add("P43", sp, "geometric:1/3", 25);
    add("P43", sp, "harmonic", 25);
    add("P43", ps, "geometric:1/3", 25);
    for (const auto& s : {lp, sp, ps})
        for (const auto& w : {std::string("unit"), bounded}) add("T47", s, w, 25);
    return cells;
}

int do_run(common_opts& o, const std::string& preset, const std::string& claim,
           const std::string& config_path) {
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw std::invalid_argument("config file not found: " + config_path);
        nlohmann::json cj = nlohmann::json::parse(f);
        gl::experiment_config c = gl::config_from_json(cj);
        o.mode = c.mode;
        o.space = c.space;
        o.weights = c.weights;
        o.window = c.window;
        o.samples = c.samples;
        if (!o.seed_given) o.seed = c.seed;
        if (o.out.empty()) o.out = c.out;
    }
    unsigned long long seed = effective_seed(o);

    gl::report_json cfg;
    cfg["command"] = "run";
    if (!preset.empty()) cfg["preset"] = preset;
    if (!claim.empty()) cfg["claim"] = claim;
    cfg["mode"] = o.mode;
    cfg["seed"] = std::to_string(seed);

    if (preset == "examples" || preset == "paper-examples") {
        auto rep = gl::reproduce_examples();
        gl::report_json j = gl::report_envelope(cfg);
        j["examples"] = gl::to_json(rep);
        emit(j, o.out);
        return rep.all_pass ? 0 : 2;
    }
    if (preset == "acceptance") {
        bool exact = o.mode == "exact";
        auto rep = gl::reproduce_examples();
        gl::report_json j = gl::report_envelope(cfg);
        j["examples"] = gl::to_json(rep);
        gl::report_json arr = gl::report_json::array();
        long violations = 0;
        auto cells = acceptance_cells(exact);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto& c = cells[i];
            common_opts co = o;
            co.space = c.space;
            co.weights = c.weight;
            co.window = 12;
            co.samples = c.target;
            gl::check_report cr = exact
                ? run_one_claim<gl::rational>(co, c.claim,
                                              gl::detail::subseed(seed, static_cast<int>(i)))
                : run_one_claim<double>(co, c.claim,
                                        gl::detail::subseed(seed, static_cast<int>(i)));
            violations += cr.violation_count;
            arr.push_back(gl::to_json(cr));
        }
        j["claims"] = std::move(arr);
        j["total_violations"] = violations;
        emit(j, o.out);
        return violations == 0 && rep.all_pass ? 0 : 2;
    }
    if (!preset.empty())
        throw std::invalid_argument("unknown preset '" + preset +
                                    "' (use examples, paper-examples, acceptance)");
    if (claim.empty())
        throw std::invalid_argument("run: give --preset or --claim");

    gl::check_report rep = o.mode == "exact" ? run_one_claim<gl::rational>(o, claim, seed)
                                             : run_one_claim<double>(o, claim, seed);
    cfg["space"] = o.space;
    cfg["weights"] = o.weights;
    cfg["window"] = o.window;
    cfg["samples"] = o.samples;
    gl::report_json j = gl::report_envelope(cfg);
    j["report"] = gl::to_json(rep);
    emit(j, o.out);
    return rep.violation_count == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"greedylab: thresholding greedy approximation with weighted set comparisons"};
    app.require_subcommand(1);
    int code = 0;

    common_opts norm_o;
    std::string norm_x;
    auto* cmd_norm = app.add_subcommand("norm", "norm of a finitely supported vector");
    add_mode(cmd_norm, norm_o);
    add_space(cmd_norm, norm_o);
    cmd_norm->add_option("--x", norm_x, "vector as i:val,j:val")->required();
    cmd_norm->add_option("--out", norm_o.out, "also write the JSON report here");
    cmd_norm->callback([&] {
        code = norm_o.mode == "exact" ? do_norm<gl::rational>(norm_o, norm_x)
                                      : do_norm<double>(norm_o, norm_x);
    });

    common_opts dual_o;
    dual_o.space = "spreading:N=4";
    std::string dual_x;
    auto* cmd_dual = app.add_subcommand("dual", "polyhedral dual norm (spreading family, exact)");
    add_space(cmd_dual, dual_o);
    cmd_dual->add_option("--x", dual_x, "functional coefficients as i:val,j:val")->required();
    cmd_dual->add_option("--out", dual_o.out, "also write the JSON report here");
    cmd_dual->callback([&] { code = do_dual(dual_o, dual_x); });

    auto* cmd_tga = app.add_subcommand("tga", "thresholding greedy operator");
    common_opts tga_o;
    std::string tga_x;
    int tga_m = 1;
    bool tga_all = false;
    std::size_t tga_cap = 64;
    auto* cmd_tga_run = cmd_tga->add_subcommand("run", "one greedy step and its residual");
    add_mode(cmd_tga_run, tga_o);
    add_space(cmd_tga_run, tga_o);
    cmd_tga_run->add_option("--x", tga_x, "vector as i:val,j:val")->required();
    cmd_tga_run->add_option("--m", tga_m, "greedy set size")->required();
    cmd_tga_run->add_flag("--all-sets", tga_all, "enumerate every tie-consistent greedy set");
    cmd_tga_run->add_option("--cap", tga_cap, "cap on enumerated greedy sets");
    cmd_tga_run->add_option("--out", tga_o.out, "also write the JSON report here");
    cmd_tga_run->callback([&] {
        code = tga_o.mode == "exact" ? do_tga<gl::rational>(tga_o, tga_x, tga_m, tga_all, tga_cap)
                                     : do_tga<double>(tga_o, tga_x, tga_m, tga_all, tga_cap);
    });
    cmd_tga->require_subcommand(1);

    common_opts sig_o;
    std::string sig_x, sig_side = "left";
    int sig_m = 1;
    auto* cmd_sigma = app.add_subcommand("sigma", "one-sided weighted projection error");
    add_mode(cmd_sigma, sig_o);
    add_space(cmd_sigma, sig_o);
    add_weights(cmd_sigma, sig_o);
    cmd_sigma->add_option("--x", sig_x, "vector as i:val,j:val")->required();
    cmd_sigma->add_option("--m", sig_m, "greedy set size")->required();
    cmd_sigma->add_option("--side", sig_side, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    cmd_sigma->add_option("--out", sig_o.out, "also write the JSON report here");
    cmd_sigma->callback([&] {
        code = sig_o.mode == "exact" ? do_sigma<gl::rational>(sig_o, sig_x, sig_m, sig_side)
                                     : do_sigma<double>(sig_o, sig_x, sig_m, sig_side);
    });

    auto* cmd_const = app.add_subcommand("constants", "constant estimation");
    common_opts con_o;
    std::string con_name;
    auto* cmd_est = cmd_const->add_subcommand("estimate", "estimate one named constant");
    add_mode(cmd_est, con_o);
    add_space(cmd_est, con_o);
    add_weights(cmd_est, con_o);
    add_sampling(cmd_est, con_o);
    cmd_est->add_option("--name", con_name, "which constant")->required();
    cmd_est->add_option("--out", con_o.out, "also write the JSON report here");
    cmd_est->callback([&] {
        code = con_o.mode == "exact" ? do_constants<gl::rational>(con_o, con_name)
                                     : do_constants<double>(con_o, con_name);
    });
    cmd_const->require_subcommand(1);

    auto* cmd_verify = app.add_subcommand("verify", "claim checks and worked examples");
    common_opts vc_o;
    std::string vc_claim;
    auto* cmd_vc = cmd_verify->add_subcommand("claim", "check one claim on sampled instances");
    add_mode(cmd_vc, vc_o);
    add_space(cmd_vc, vc_o);
    add_weights(cmd_vc, vc_o);
    add_sampling(cmd_vc, vc_o);
    cmd_vc->add_option("--claim", vc_claim, "claim id (see list-claims) or left/right-property-A")
        ->required();
    cmd_vc->add_option("--out", vc_o.out, "also write the JSON report here");
    cmd_vc->callback([&] { code = do_verify_claim(vc_o, vc_claim); });
    common_opts ve_o;
    auto* cmd_ve = cmd_verify->add_subcommand("examples", "recompute the worked examples");
    cmd_ve->add_option("--out", ve_o.out, "also write the JSON report here");
    cmd_ve->callback([&] { code = do_verify_examples(ve_o); });
    cmd_verify->require_subcommand(1);

    std::string list_filter;
    auto* cmd_list = app.add_subcommand("list-claims", "print the claim table");
    cmd_list->add_option("--filter", list_filter, "substring filter on id or statement");
    cmd_list->callback([&] { code = do_list_claims(list_filter); });

    common_opts run_o;
    std::string run_preset, run_claim_id, run_config;
    auto* cmd_run = app.add_subcommand("run", "preset pipelines and single-claim runs");
    add_mode(cmd_run, run_o);
    add_space(cmd_run, run_o);
    add_weights(cmd_run, run_o);
    add_sampling(cmd_run, run_o);
    cmd_run->add_option("--preset", run_preset, "examples, paper-examples, or acceptance");
    cmd_run->add_option("--claim", run_claim_id, "single claim id or left/right-property-A");
    cmd_run->add_option("--config", run_config, "JSON config file");
    cmd_run->add_option("--out", run_o.out, "also write the JSON report here");
    cmd_run->callback([&] { code = do_run(run_o, run_preset, run_claim_id, run_config); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return code;
}
