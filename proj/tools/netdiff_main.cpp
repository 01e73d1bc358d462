// netdiff: diffusion-aware centrality toolkit for sparse directed graphs.
//
// Every subcommand reads/writes plain files and drops a JSON run manifest
// next to its outputs so runs can be audited and reproduced.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netdiff/approx.hpp"
#include "netdiff/centrality.hpp"
#include "netdiff/diffusion.hpp"
#include "netdiff/epidemic.hpp"
#include "netdiff/graph.hpp"
#include "netdiff/influence.hpp"
#include "netdiff/spectral.hpp"
#include "netdiff/synth.hpp"
#include "netdiff/vec.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
    std::string graph_path;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    bool strict = false;
    bool reverse_edges = false;
    std::size_t threads = 1;
};

std::string fnv1a_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "unreadable";
    std::uint64_t h = 1469598103934665603ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

class Manifest {
public:
    Manifest(std::string subcommand, const GlobalOpts& g)
        : start_(std::chrono::steady_clock::now()) {
        j_["subcommand"] = std::move(subcommand);
        j_["tool_version"] = kVersion;
        j_["parameters"] = json::object();
        j_["inputs"] = json::object();
        j_["outputs"] = json::array();
        param("out_dir", g.out_dir);
        param("strict", g.strict);
    }
    template <typename T> void param(const std::string& k, const T& v) {
        j_["parameters"][k] = v;
    }
    void input(const std::string& path) { j_["inputs"][path] = fnv1a_digest(path); }
    void output(const fs::path& path) { j_["outputs"].push_back(path.string()); }

    void write(const fs::path& dir) {
        const auto dur = std::chrono::steady_clock::now() - start_;
        j_["duration_seconds"] =
            std::chrono::duration_cast<std::chrono::duration<double>>(dur).count();
        const fs::path path = dir / (j_["subcommand"].get<std::string>() + "-manifest.json");
        std::ofstream out(path);
        out << j_.dump(2) << '\n';
    }

private:
    json j_;
    std::chrono::steady_clock::time_point start_;
};

netdiff::Graph load_graph(const GlobalOpts& g, Manifest& man) {
    if (g.graph_path.empty()) throw netdiff::DataError("--graph is required");
    man.input(g.graph_path);
    netdiff::EdgeListOptions opts;
    opts.reverse_edges = g.reverse_edges;
    return netdiff::load_edge_list_file(g.graph_path, opts);
}

netdiff::WeightVector parse_vector_spec(const std::string& spec, const netdiff::Graph& g,
                                        Manifest& man) {
    const std::size_t n = g.node_count();
    if (spec.rfind("uniform:", 0) == 0) {
        const double v = std::stod(spec.substr(8));
        return netdiff::WeightVector(n, v);
    }
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        man.input(path);
        std::ifstream in(path);
        if (!in) throw netdiff::DataError("cannot open vector file: " + path);
        netdiff::WeightVector v(n, 0.0);
        std::string label;
        double val;
        while (in >> label >> val) {
            auto idx = g.index_of(label);
            if (!idx) throw netdiff::DataError("vector file names unknown node '" + label + "'");
            v[*idx] = val;
        }
        return v;
    }
    throw netdiff::DataError("bad vector spec '" + spec + "': expected uniform:X or file:PATH");
}

void apply_start_flag(netdiff::CentralityConfig& cfg, const std::string& start,
                      const netdiff::Graph& g, Manifest& man) {
    if (start == "default") {
        cfg.start = netdiff::StartVector::Default;
    } else if (start == "uniform") {
        cfg.start = netdiff::StartVector::Uniform;
    } else if (start == "indegree") {
        cfg.start = netdiff::StartVector::InDegree;
    } else if (start.rfind("file:", 0) == 0) {
        cfg.start = netdiff::StartVector::Custom;
        cfg.custom_start = parse_vector_spec(start, g, man);
    } else {
        throw netdiff::DataError("bad --start value '" + start + "'");
    }
}

void emit_scores(const fs::path& out_dir, const std::string& stem, const netdiff::Graph& g,
                 const netdiff::CentralityResult& res, const std::string& format,
                 Manifest& man) {
    fs::create_directories(out_dir);
    if (format == "json") {
        const fs::path p = out_dir / (stem + "_scores.json");
        std::ofstream out(p);
        out << netdiff::scores_json(g, res) << '\n';
        man.output(p);
    } else {
        const fs::path p = out_dir / (stem + "_scores.tsv");
        std::ofstream out(p);
        netdiff::write_scores_tsv(out, g, res);
        man.output(p);
    }
    std::cout.precision(6);
    std::cout << stem << ": alpha=" << res.alpha << " iterations=" << res.iterations_used
              << " residual=" << res.final_residual
              << " converged=" << (res.converged ? "yes" : "no") << '\n';
}

int check_strict(const GlobalOpts& g, bool converged) {
    if (g.strict && !converged) {
        std::cerr << "error: iteration did not converge (--strict)\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"netdiff: conservative and non-conservative diffusion analytics"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--graph", g.graph_path, "Edge list file (src dst [weight])");
    app.add_option("--out", g.out_dir, "Output directory")->capture_default_str();
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_flag("--strict", g.strict, "Exit 3 on numeric non-convergence");
    app.add_flag("--reverse-edges", g.reverse_edges, "Swap edge direction at load");
    app.add_option("--threads", g.threads, "Worker threads for Monte Carlo trials")
        ->capture_default_str();

    // --- centrality family ----------------------------------------------
    struct CentralityFlags {
        double alpha;
        std::string start = "default";
        double tol = 1e-9;
        std::size_t max_iters = 10000;
        std::string format = "tsv";
    };
    CentralityFlags pr_f{0.85}, ac_f{0.1}, nac_f{0.1};
    auto add_centrality_flags = [](CLI::App* sub, CentralityFlags& f) {
        sub->add_option("--alpha", f.alpha, "Damping / attenuation factor")
            ->capture_default_str();
        sub->add_option("--start", f.start, "uniform | indegree | file:PATH")
            ->capture_default_str();
        sub->add_option("--tol", f.tol, "L1 convergence tolerance")->capture_default_str();
        sub->add_option("--max-iters", f.max_iters, "Iteration budget")->capture_default_str();
        sub->add_option("--format", f.format, "tsv | json")->capture_default_str();
    };
    auto* pr_cmd = app.add_subcommand("pagerank", "Conservative steady state with restart");
    add_centrality_flags(pr_cmd, pr_f);
    bool pr_alpha_one = false;
    pr_cmd->add_flag("--allow-alpha-one", pr_alpha_one,
                     "Run alpha=1 as pure power iteration (no convergence guarantee)");
    auto* ac_cmd = app.add_subcommand("acentrality", "Alpha-Centrality (attenuated path counts)");
    add_centrality_flags(ac_cmd, ac_f);
    auto* nac_cmd = app.add_subcommand("nacentrality", "Normalized Alpha-Centrality");
    add_centrality_flags(nac_cmd, nac_f);

    // --- approx ----------------------------------------------------------
    double ap_alpha = 0.1, ap_delta = 0.01;
    std::optional<double> ap_epsilon;
    double ap_eps_flag = -1.0;
    std::string ap_start = "uniform";
    auto* ap_cmd = app.add_subcommand("approx", "Residual-push approximate Alpha-Centrality");
    ap_cmd->add_option("--alpha", ap_alpha, "Attenuation factor")->capture_default_str();
    ap_cmd->add_option("--delta", ap_delta, "Per-entry relative error bound in (0,1]")
        ->capture_default_str();
    ap_cmd->add_option("--epsilon", ap_eps_flag, "Fix the push threshold directly");
    ap_cmd->add_option("--start", ap_start, "uniform | indegree | file:PATH")
        ->capture_default_str();

    // --- spectral / threshold / path-series -----------------------------
    auto* sp_cmd = app.add_subcommand("spectral", "Spectral radius estimate");
    auto* th_cmd = app.add_subcommand("threshold", "Epidemic threshold 1/lambda1");
    double ps_alpha = 0.1;
    std::size_t ps_tmax = 100;
    auto* ps_cmd = app.add_subcommand("path-series", "Attenuated path-count series");
    ps_cmd->add_option("--alpha", ps_alpha, "Attenuation factor")->capture_default_str();
    ps_cmd->add_option("--tmax", ps_tmax, "Number of series steps")->capture_default_str();

    // --- diffuse ---------------------------------------------------------
    std::string df_mode = "conservative", df_initial = "uniform:1";
    double df_alpha = 0.5, df_delta = 0.0;
    std::size_t df_steps = 100;
    bool df_per_node = false;
    std::size_t df_per_node_limit = 1000;
    auto* df_cmd = app.add_subcommand("diffuse", "Time-stepped diffusion trajectory");
    df_cmd->add_option("--mode", df_mode, "conservative | nonconservative")
        ->capture_default_str();
    df_cmd->add_option("--alpha", df_alpha, "Redistribution / replication fraction")
        ->capture_default_str();
    df_cmd->add_option("--delta", df_delta, "Self-retention portion")->capture_default_str();
    df_cmd->add_option("--steps", df_steps, "Step count")->capture_default_str();
    df_cmd->add_option("--initial", df_initial, "uniform:X | file:PATH")->capture_default_str();
    df_cmd->add_flag("--per-node", df_per_node, "Include per-node columns in the CSV");
    df_cmd->add_option("--per-node-limit", df_per_node_limit,
                       "Refuse per-node columns above this node count")
        ->capture_default_str();

    // --- epidemic --------------------------------------------------------
    double ep_mu = 0.1, ep_beta = 0.1;
    std::string ep_p0 = "uniform:0.1";
    std::size_t ep_steps = 100, ep_trials = 100;
    auto* ep_cmd = app.add_subcommand("epidemic", "SIS model, deterministic and Monte Carlo");
    ep_cmd->add_option("--mu", ep_mu, "Infection probability per edge per step")
        ->capture_default_str();
    ep_cmd->add_option("--beta", ep_beta, "Curing probability per step")->capture_default_str();
    ep_cmd->add_option("--p0", ep_p0, "uniform:X | file:PATH")->capture_default_str();
    ep_cmd->add_option("--steps", ep_steps, "Horizon")->capture_default_str();
    ep_cmd->add_option("--trials", ep_trials, "Monte Carlo trials")->capture_default_str();

    // --- cascades / influence / sweep -----------------------------------
    std::string log_path;
    std::size_t min_stories = 2, min_votes = 100, first_k = 0;
    auto* ca_cmd = app.add_subcommand("cascades", "Extract vote cascades from an activity log");
    ca_cmd->add_option("--log", log_path, "Activity log CSV")->required();
    auto* in_cmd = app.add_subcommand("influence", "Empirical influence estimates");
    in_cmd->add_option("--log", log_path, "Activity log CSV")->required();
    in_cmd->add_option("--min-stories", min_stories, "Qualifying stories per submitter")
        ->capture_default_str();
    in_cmd->add_option("--min-votes", min_votes, "Votes a story needs to qualify")
        ->capture_default_str();
    in_cmd->add_option("--first-k", first_k, "Count follower votes only in the first k (0=all)")
        ->capture_default_str();
    std::string sweep_metrics = "pagerank,nacentrality";
    std::string sweep_grid;
    auto* sw_cmd = app.add_subcommand("sweep", "Correlate centrality vs empirical influence");
    sw_cmd->add_option("--log", log_path, "Activity log CSV")->required();
    sw_cmd->add_option("--metrics", sweep_metrics, "Comma list: pagerank,nacentrality")
        ->capture_default_str();
    sw_cmd->add_option("--alpha-grid", sweep_grid,
                       "Comma list of alphas (default: 0..1 step .01 plus inset)");
    sw_cmd->add_option("--min-stories", min_stories, "")->capture_default_str();
    sw_cmd->add_option("--min-votes", min_votes, "")->capture_default_str();

    // --- synth -----------------------------------------------------------
    std::size_t sy_users = 200, sy_cascades = 1000;
    double sy_mean_out = 8.0, sy_transmit = 0.8;
    auto* sy_cmd = app.add_subcommand("synth", "Generate synthetic graph + activity log");
    sy_cmd->add_option("--users", sy_users, "")->capture_default_str();
    sy_cmd->add_option("--cascades", sy_cascades, "")->capture_default_str();
    sy_cmd->add_option("--mean-out-degree", sy_mean_out, "")->capture_default_str();
    sy_cmd->add_option("--transmit-scale", sy_transmit, "")->capture_default_str();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        const fs::path out_dir = g.out_dir;
        std::cout.precision(6);

        if (pr_cmd->parsed() || ac_cmd->parsed() || nac_cmd->parsed()) {
            const std::string stem =
                pr_cmd->parsed() ? "pagerank" : (ac_cmd->parsed() ? "acentrality" : "nacentrality");
            const CentralityFlags& f = pr_cmd->parsed() ? pr_f : (ac_cmd->parsed() ? ac_f : nac_f);
            Manifest man(stem, g);
            const netdiff::Graph graph = load_graph(g, man);
            netdiff::CentralityConfig cfg;
            cfg.alpha = f.alpha;
            cfg.tol = f.tol;
            cfg.max_iterations = f.max_iters;
            cfg.allow_alpha_one = pr_alpha_one;
            apply_start_flag(cfg, f.start, graph, man);
            man.param("alpha", f.alpha);
            man.param("start", f.start);
            man.param("tol", f.tol);
            man.param("max_iters", f.max_iters);
            netdiff::CentralityResult res =
                pr_cmd->parsed()   ? netdiff::pagerank(graph, cfg)
                : ac_cmd->parsed() ? netdiff::alpha_centrality(graph, cfg)
                                   : netdiff::normalized_alpha_centrality(graph, cfg);
            emit_scores(out_dir, stem, graph, res, f.format, man);
            man.write(out_dir);
            return check_strict(g, res.converged);
        }

        if (ap_cmd->parsed()) {
            Manifest man("approx", g);
            const netdiff::Graph graph = load_graph(g, man);
            netdiff::CentralityConfig scfg;
            apply_start_flag(scfg, ap_start, graph, man);
            const netdiff::WeightVector s =
                netdiff::resolve_start_vector(graph, scfg, /*pagerank_default=*/false);
            if (ap_eps_flag > 0.0) ap_epsilon = ap_eps_flag;
            man.param("alpha", ap_alpha);
            man.param("delta", ap_delta);
            man.param("start", ap_start);
            const netdiff::ApproxReport rep =
                netdiff::approximate_centrality(graph, s, ap_alpha, ap_delta, ap_epsilon);

            fs::create_directories(out_dir);
            const fs::path tsv = out_dir / "approx_scores.tsv";
            {
                std::ofstream out(tsv);
                out.precision(17);
                std::vector<std::size_t> rank_of(rep.scores.size());
                for (std::size_t p = 0; p < rep.ranking.size(); ++p)
                    rank_of[rep.ranking[p]] = p + 1;
                for (netdiff::NodeId u = 0; u < rep.scores.size(); ++u)
                    out << graph.label_of(u) << '\t' << rep.scores[u] << '\t' << rank_of[u]
                        << '\n';
            }
            man.output(tsv);
            const fs::path rp = out_dir / "approx_report.json";
            {
                json j;
                j["epsilon"] = rep.epsilon;
                j["iterations"] = rep.iterations;
                j["residual_l1_final"] = rep.residual_l1_final;
                j["bound_applicable"] = rep.bound_applicable;
                std::ofstream out(rp);
                out << j.dump(2) << '\n';
            }
            man.output(rp);
            std::cout << "approx: epsilon=" << rep.epsilon << " iterations=" << rep.iterations
                      << " residual_l1=" << rep.residual_l1_final
                      << " bound_applicable=" << (rep.bound_applicable ? "yes" : "no") << '\n';
            man.write(out_dir);
            return 0;
        }

        if (sp_cmd->parsed() || th_cmd->parsed()) {
            Manifest man(sp_cmd->parsed() ? "spectral" : "threshold", g);
            const netdiff::Graph graph = load_graph(g, man);
            const netdiff::SpectralEstimate est = netdiff::spectral_radius(graph);
            const double tau = est.lambda1 > 1e-12 ? 1.0 / est.lambda1
                                                   : netdiff::kInfiniteThreshold;
            std::cout << "lambda1=" << est.lambda1 << " tau=" << tau
                      << " iterations=" << est.iterations
                      << " converged=" << (est.converged ? "yes" : "no") << '\n';
            man.param("lambda1", est.lambda1);
            man.param("tau", tau);
            man.write(out_dir);
            return check_strict(g, est.converged);
        }

        if (ps_cmd->parsed()) {
            Manifest man("path-series", g);
            const netdiff::Graph graph = load_graph(g, man);
            man.param("alpha", ps_alpha);
            man.param("tmax", ps_tmax);
            const netdiff::PathSeriesReport rep =
                netdiff::path_series(graph, ps_alpha, ps_tmax);
            fs::create_directories(out_dir);
            const fs::path p = out_dir / "path_series.csv";
            {
                std::ofstream out(p);
                out.precision(17);
                out << "k,series_l1,expected_length\n";
                for (std::size_t k = 0; k < rep.series_l1.size(); ++k)
                    out << k << ',' << rep.series_l1[k] << ',' << rep.expected_path_length[k]
                        << '\n';
            }
            man.output(p);
            std::cout << "path-series: alpha=" << ps_alpha
                      << " L(tmax)=" << rep.expected_path_length.back()
                      << " diverging=" << (rep.diverging ? "yes" : "no") << '\n';
            man.write(out_dir);
            return 0;
        }

        if (df_cmd->parsed()) {
            Manifest man("diffuse", g);
            const netdiff::Graph graph = load_graph(g, man);
            netdiff::DiffusionConfig cfg;
            cfg.alpha = df_alpha;
            cfg.delta_self = df_delta;
            cfg.mode = df_mode == "conservative" ? netdiff::DiffusionMode::Conservative
                       : df_mode == "nonconservative"
                           ? netdiff::DiffusionMode::NonConservative
                           : throw netdiff::DataError("bad --mode '" + df_mode + "'");
            const netdiff::WeightVector init = parse_vector_spec(df_initial, graph, man);
            man.param("mode", df_mode);
            man.param("alpha", df_alpha);
            man.param("delta", df_delta);
            man.param("steps", df_steps);
            const netdiff::DiffusionTrajectory traj =
                cfg.mode == netdiff::DiffusionMode::Conservative
                    ? netdiff::run_conservative(graph, init, cfg, df_steps)
                    : netdiff::run_nonconservative(graph, init, cfg, df_steps);
            if (df_per_node && graph.node_count() > df_per_node_limit)
                throw netdiff::DataError("--per-node refused above --per-node-limit nodes");
            fs::create_directories(out_dir);
            const fs::path p = out_dir / "trajectory.csv";
            {
                std::ofstream out(p);
                netdiff::write_trajectory_csv(out, traj, df_per_node);
            }
            man.output(p);
            std::cout << "diffuse: steps=" << df_steps
                      << " final_l1=" << netdiff::l1_norm(traj.total.back()) << '\n';
            man.write(out_dir);
            return 0;
        }

        if (ep_cmd->parsed()) {
            Manifest man("epidemic", g);
            const netdiff::Graph graph = load_graph(g, man);
            netdiff::EpidemicParams params;
            params.mu = ep_mu;
            params.beta = ep_beta;
            params.steps = ep_steps;
            params.p0 = parse_vector_spec(ep_p0, graph, man);
            man.param("mu", ep_mu);
            man.param("beta", ep_beta);
            man.param("steps", ep_steps);
            man.param("trials", ep_trials);
            man.param("seed", g.seed);

            const netdiff::EpidemicTrace det = netdiff::sis_deterministic(graph, params);
            const netdiff::EpidemicTrace mc =
                netdiff::sis_montecarlo(graph, params, ep_trials, g.seed, g.threads);

            fs::create_directories(out_dir);
            const fs::path p = out_dir / "epidemic.csv";
            {
                std::ofstream out(p);
                out.precision(17);
                out << "step,deterministic_l1,deterministic_l1_clamped,mc_mean_infected\n";
                for (std::size_t t = 0; t <= ep_steps; ++t) {
                    double clamped = 0.0;
                    for (double v : det.deterministic[t]) clamped += std::min(v, 1.0);
                    double mean = 0.0;
                    for (const auto& c : mc.infected_counts) mean += c[t];
                    mean /= static_cast<double>(mc.trials);
                    out << t << ',' << netdiff::l1_norm(det.deterministic[t]) << ',' << clamped
                        << ',' << mean << '\n';
                }
            }
            man.output(p);
            const char* cls = mc.classification == netdiff::EpidemicClassification::DiedOut
                                  ? "died-out"
                              : mc.classification == netdiff::EpidemicClassification::Persisted
                                  ? "persisted"
                                  : "indeterminate";
            const fs::path sp = out_dir / "epidemic_summary.json";
            {
                json j;
                j["classification"] = cls;
                j["tau"] = netdiff::epidemic_threshold(graph);
                j["mu_over_beta"] = ep_beta > 0 ? ep_mu / ep_beta : 0.0;
                j["probabilities_exceed_one"] = det.probabilities_exceed_one;
                std::ofstream out(sp);
                out << j.dump(2) << '\n';
            }
            man.output(sp);
            std::cout << "epidemic: classification=" << cls << '\n';
            man.write(out_dir);
            return 0;
        }

        if (ca_cmd->parsed()) {
            Manifest man("cascades", g);
            const netdiff::Graph graph = load_graph(g, man);
            man.input(log_path);
            const netdiff::ActivityLog log = netdiff::load_activity_log_file(log_path);
            fs::create_directories(out_dir);
            const fs::path p = out_dir / "cascades.csv";
            {
                std::ofstream out(p);
                out << "story_id,submitter,size,members\n";
                for (const std::string& sid : log.story_ids) {
                    const netdiff::CascadeRecord rec =
                        netdiff::extract_cascade(graph, log, sid);
                    out << rec.story_id << ',' << rec.submitter << ',' << rec.size() << ',';
                    for (std::size_t i = 0; i < rec.members.size(); ++i)
                        out << (i ? ";" : "") << rec.members[i];
                    out << '\n';
                }
            }
            man.output(p);
            std::cout << "cascades: stories=" << log.story_ids.size() << '\n';
            man.write(out_dir);
            return 0;
        }

        if (in_cmd->parsed()) {
            Manifest man("influence", g);
            const netdiff::Graph graph = load_graph(g, man);
            man.input(log_path);
            man.param("min_stories", min_stories);
            man.param("min_votes", min_votes);
            man.param("first_k", first_k);
            const netdiff::ActivityLog log = netdiff::load_activity_log_file(log_path);
            const auto est =
                netdiff::influence_estimates(graph, log, min_stories, min_votes, first_k);
            fs::create_directories(out_dir);
            const fs::path p = out_dir / "influence.tsv";
            {
                std::ofstream out(p);
                out.precision(17);
                out << "user_id\tstories\tavg_follower_votes\tavg_cascade_size\n";
                for (const auto& e : est)
                    out << e.user_id << '\t' << e.stories_counted << '\t'
                        << e.avg_follower_votes << '\t' << e.avg_cascade_size << '\n';
            }
            man.output(p);
            std::cout << "influence: eligible_submitters=" << est.size() << '\n';
            man.write(out_dir);
            return 0;
        }

        if (sw_cmd->parsed()) {
            Manifest man("sweep", g);
            const netdiff::Graph graph = load_graph(g, man);
            man.input(log_path);
            man.param("metrics", sweep_metrics);
            man.param("min_stories", min_stories);
            man.param("min_votes", min_votes);
            const netdiff::ActivityLog log = netdiff::load_activity_log_file(log_path);
            netdiff::SweepOptions opts;
            opts.min_stories = min_stories;
            opts.min_votes = min_votes;
            opts.metrics.clear();
            {
                std::istringstream ss(sweep_metrics);
                std::string m;
                while (std::getline(ss, m, ',')) {
                    if (m == "pagerank")
                        opts.metrics.push_back(netdiff::SweepMetric::PageRank);
                    else if (m == "nacentrality")
                        opts.metrics.push_back(
                            netdiff::SweepMetric::NormalizedAlphaCentrality);
                    else
                        throw netdiff::DataError("bad metric '" + m + "'");
                }
            }
            if (!sweep_grid.empty()) {
                std::istringstream ss(sweep_grid);
                std::string a;
                while (std::getline(ss, a, ',')) opts.alpha_grid.push_back(std::stod(a));
            }
            const netdiff::CorrelationSweep sweep = netdiff::correlation_sweep(graph, log, opts);
            fs::create_directories(out_dir);
            const fs::path p = out_dir / "sweep.csv";
            {
                std::ofstream out(p);
                netdiff::write_sweep_csv(out, sweep);
            }
            man.output(p);
            std::cout << "sweep: rows=" << sweep.rows.size() << " lambda1=" << sweep.lambda1
                      << '\n';
            man.write(out_dir);
            return 0;
        }

        if (sy_cmd->parsed()) {
            Manifest man("synth", g);
            netdiff::SynthParams params;
            params.users = sy_users;
            params.cascades = sy_cascades;
            params.seed = g.seed;
            params.mean_out_degree = sy_mean_out;
            params.transmit_scale = sy_transmit;
            man.param("users", sy_users);
            man.param("cascades", sy_cascades);
            man.param("seed", g.seed);
            man.param("mean_out_degree", sy_mean_out);
            man.param("transmit_scale", sy_transmit);
            const netdiff::SynthData data = netdiff::synth_generate(params);
            fs::create_directories(out_dir);
            const fs::path gp = out_dir / "graph.tsv";
            {
                std::ofstream out(gp);
                netdiff::write_edge_list(out, data.graph);
            }
            man.output(gp);
            const fs::path lp = out_dir / "activity.csv";
            {
                std::ofstream out(lp);
                netdiff::write_activity_log_csv(out, data.log);
            }
            man.output(lp);
            const fs::path pp = out_dir / "planted.tsv";
            {
                std::ofstream out(pp);
                out.precision(17);
                for (std::size_t i = 0; i < data.planted.size(); ++i)
                    out << data.graph.label_of(static_cast<netdiff::NodeId>(i)) << '\t'
                        << data.planted[i] << '\n';
            }
            man.output(pp);
            std::cout << "synth: users=" << sy_users << " cascades=" << sy_cascades
                      << " edges=" << data.graph.edge_count() << '\n';
            man.write(out_dir);
            return 0;
        }

        std::cerr << "error: no subcommand handled\n";
        return 1;
    } catch (const netdiff::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const netdiff::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
