#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ramsey/error.hpp"
#include "ramsey/io.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/random_graph.hpp"
#include "ramsey/rng.hpp"
#include "report.hpp"

using namespace ramsey;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitBug = 3;

struct Common {
    std::string report;
    std::string out;
    int threads = 0;
    bool timing = false;
    std::uint64_t seed = 0;
    json env = json::object();
};

// Budget caps may be raised from the environment; the value used is recorded.
template <typename T>
T env_cap(Common& c, const char* name, T fallback) {
    const char* raw = std::getenv(name);
    if (!raw) return fallback;
    std::istringstream in(raw);
    T value;
    if (!(in >> value)) throw InvalidArgument(std::string("environment variable ") + name + " is not a number");
    c.env[name] = raw;
    return value;
}

int threads_of(const Common& c) { return c.threads > 0 ? c.threads : default_threads(); }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InvalidArgument("cannot write " + path);
    f << text;
}

template <typename Fn>
std::string render(Fn&& writer) {
    std::ostringstream ss;
    writer(ss);
    return ss.str();
}

ColouredGraph read_gamma_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("cannot open " + path);
    std::string first;
    f >> first;
    f.seekg(0);
    if (first == "affine") return read_affine(f).coloured;
    return read_coloured(f);
}

// Numbers and booleans keep their JSON type; anything else stays a string.
json typed(const std::string& raw) {
    json v = json::parse(raw, nullptr, false);
    if (v.is_number() || v.is_boolean()) return v;
    return raw;
}

json config_of(const CLI::App* sub, const Common& c) {
    json cfg = json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        std::string name = opt->get_single_name();
        if (name == "help" || name == "report") continue;
        if (opt->count() > 0) {
            auto res = opt->results();
            if (res.size() == 1) {
                cfg[name] = typed(res[0]);
            } else {
                json arr = json::array();
                for (const auto& x : res) arr.push_back(typed(x));
                cfg[name] = arr;
            }
        } else if (!opt->get_default_str().empty()) {
            cfg[name] = typed(opt->get_default_str());
        }
    }
    if (!c.env.empty()) cfg["env"] = c.env;
    return cfg;
}

struct Command {
    CLI::App* app;
    std::function<json(Common&)> run;
    bool budget_hit = false;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey simplicity toolkit"};
    app.require_subcommand(1);
    Common c;
    std::vector<Command> commands;

    auto add = [&](const std::string& name, const std::string& help) -> CLI::App* {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--report", c.report, "JSON report path (stdout if omitted)");
        sub->add_option("--threads", c.threads, "worker threads (0 = hardware)")->capture_default_str();
        return sub;
    };
    auto seed_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--seed", c.seed, "base seed");
        if (required) o->required();
    };

    // sample
    int n = 0;
    double p = 0;
    {
        auto* sub = add("sample", "sample G(n,p)");
        sub->add_option("--n", n)->required();
        sub->add_option("--p", p)->required();
        seed_opt(sub, true);
        sub->add_option("--out", c.out, "edge list output");
        commands.push_back({sub, [&](Common& c) {
                                Graph g = sample_gnp(n, p, c.seed);
                                json r = {{"n", g.n()}, {"m", g.m()}};
                                if (!c.out.empty()) write_text(c.out, render([&](std::ostream& o) { write_edge_list(o, g); }));
                                else r["graph"] = graph_json(g);
                                return r;
                            }});
    }

    std::string graph_path, host_path, target_path, forest_path, colouring_path, gamma_path;

    // profile
    {
        auto* sub = add("profile", "minimum-degree neighbourhood profile");
        sub->add_option("--graph", graph_path)->required();
        commands.push_back({sub, [&](Common&) { return to_report(neighbourhood_profile(read_graph_file(graph_path))); }});
    }

    // wb-check
    WellBehavedOptions wb;
    {
        auto* sub = add("wb-check", "well-behavedness checks W1-W4");
        sub->add_option("--graph", graph_path)->required();
        seed_opt(sub, true);
        sub->add_option("--exact-limit", wb.exact_cutset_limit)->capture_default_str();
        sub->add_option("--random-cutsets", wb.random_cutsets)->capture_default_str();
        sub->add_option("--greedy-starts", wb.greedy_starts)->capture_default_str();
        commands.push_back({sub, [&](Common& c) {
                                wb.seed = c.seed;
                                return to_report(well_behaved(read_graph_file(graph_path), wb));
                            }});
    }

    // mc
    std::string property;
    int trials = 100;
    {
        auto* sub = add("mc", "Monte-Carlo estimate of a G(n,p) property");
        sub->add_option("--property", property)->required()->check(CLI::IsMember(property_names()));
        sub->add_option("--n", n)->required();
        sub->add_option("--p", p)->required();
        sub->add_option("--trials", trials)->capture_default_str();
        seed_opt(sub, true);
        commands.push_back(
            {sub, [&](Common& c) { return to_report(monte_carlo(property, n, p, trials, c.seed, threads_of(c))); }});
    }

    // gamma-build
    std::string kind = "affine";
    int delta = 0, q = 2, lambda = 2;
    double eps = 0.04;
    {
        auto* sub = add("gamma-build", "build a coloured gadget graph");
        sub->add_option("--kind", kind)->check(CLI::IsMember({"affine", "random", "empty"}))->capture_default_str();
        sub->add_option("--delta", delta)->required();
        sub->add_option("--q", q)->required();
        sub->add_option("--lambda", lambda)->capture_default_str();
        sub->add_option("--eps", eps)->capture_default_str();
        seed_opt(sub, false);
        sub->add_option("--out", c.out, "gadget output");
        commands.push_back({sub, [&, sub](Common& c) {
                                json r = {{"kind", kind}};
                                ColouredGraph g;
                                std::string text;
                                if (kind == "affine") {
                                    AffineGamma a = build_affine_gamma(delta, q, lambda, eps);
                                    r["s"] = a.s;
                                    g = a.coloured;
                                    text = render([&](std::ostream& o) { write_affine(o, a); });
                                } else {
                                    if (kind == "random" && sub->get_option("--seed")->count() == 0)
                                        throw InvalidArgument("--seed is required for --kind random");
                                    g = kind == "random" ? build_random_gamma(delta, q, c.seed) : build_empty_gamma(delta, q);
                                    text = render([&](std::ostream& o) { write_coloured(o, g); });
                                }
                                DegreeCheck d = check_degree_condition(g, delta);
                                r["N"] = g.n();
                                r["edges"] = g.graph().m();
                                r["max_class_degree"] = d.max_degree;
                                r["degree_ok"] = d.ok;
                                if (!c.out.empty()) write_text(c.out, text);
                                else r["gamma"] = coloured_json(g);
                                return r;
                            }});
    }

    // gamma-verify
    std::string mode = "exhaustive";
    std::uint64_t samples = 10000;
    {
        auto* sub = add("gamma-verify", "check the degree and cover conditions of a gadget");
        sub->add_option("--gamma", gamma_path)->required();
        sub->add_option("--forest", forest_path)->required();
        sub->add_option("--delta", delta)->required();
        sub->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}))->capture_default_str();
        sub->add_option("--samples", samples)->capture_default_str();
        seed_opt(sub, false);
        commands.push_back({sub, [&, sub](Common& c) {
                                CoverOptions opt;
                                opt.mode = mode == "sampled" ? CoverMode::Sampled : CoverMode::Exhaustive;
                                if (opt.mode == CoverMode::Sampled && sub->get_option("--seed")->count() == 0)
                                    throw InvalidArgument("--seed is required for --mode sampled");
                                opt.samples = samples;
                                opt.seed = c.seed;
                                opt.threads = threads_of(c);
                                opt.exhaustive_limit = env_cap(c, "RAMSEY_SUBSET_LIMIT", opt.exhaustive_limit);
                                return to_report(check_cover_condition(read_gamma_file(gamma_path),
                                                                       read_graph_file(forest_path), delta, opt));
                            }});
    }

    // arrow / minimal / necessity / refute-triangle
    ArrowOptions ao;
    auto arrow_opts = [&](CLI::App* sub) {
        sub->add_option("--host", host_path)->required();
        sub->add_option("--target", target_path)->required();
        sub->add_option("--max-edges", ao.max_edges)->capture_default_str();
        sub->add_option("--node-limit", ao.node_limit)->capture_default_str();
        sub->add_option("--time-limit-ms", ao.time_limit_ms)->capture_default_str();
    };
    auto arrow_caps = [&](Common& c, CLI::App* sub) {
        if (sub->get_option("--max-edges")->count() == 0) ao.max_edges = env_cap(c, "RAMSEY_ARROW_MAX_EDGES", ao.max_edges);
        if (sub->get_option("--node-limit")->count() == 0) ao.node_limit = env_cap(c, "RAMSEY_ARROW_NODE_LIMIT", ao.node_limit);
    };
    std::size_t arrow_index = 0;
    {
        auto* sub = add("arrow", "decide host -> (target)_q");
        arrow_opts(sub);
        sub->add_option("--q", q)->required();
        seed_opt(sub, false);
        sub->add_flag("--timing", c.timing, "include wall-clock time");
        sub->add_option("--out", c.out, "H-free colouring output when one exists");
        arrow_index = commands.size();
        commands.push_back({sub, nullptr});
    }
    {
        auto* sub = add("minimal", "decide whether host is minimal q-Ramsey for target");
        arrow_opts(sub);
        sub->add_option("--q", q)->required();
        commands.push_back({sub, [&, sub](Common& c) {
                                arrow_caps(c, sub);
                                return to_report(is_minimal_ramsey(read_graph_file(host_path), read_graph_file(target_path),
                                                                   q, ao, threads_of(c)));
                            }});
    }
    Vertex w = 0, u = -1;
    double subset_limit = 1e7;
    {
        auto* sub = add("necessity", "cover condition at a vertex of degree q(delta-1)+1");
        arrow_opts(sub);
        sub->add_option("--q", q)->required();
        sub->add_option("--w", w)->required();
        sub->add_option("--u", u)->capture_default_str();
        sub->add_option("--colouring", colouring_path, "H-free colouring of host - w");
        sub->add_option("--subset-limit", subset_limit)->capture_default_str();
        commands.push_back({sub, [&, sub](Common& c) {
                                arrow_caps(c, sub);
                                if (sub->get_option("--subset-limit")->count() == 0)
                                    subset_limit = env_cap(c, "RAMSEY_SUBSET_LIMIT", subset_limit);
                                std::optional<ColouredGraph> col;
                                if (!colouring_path.empty()) col = read_coloured_file(colouring_path);
                                return to_report(necessity_gamma(read_graph_file(host_path), read_graph_file(target_path), q,
                                                                 w, col, u, ao, subset_limit));
                            }});
    }
    {
        auto* sub = add("refute-triangle", "extend an H-free 2-colouring of host - w to host");
        arrow_opts(sub);
        sub->add_option("--w", w)->required();
        sub->add_option("--colouring", colouring_path, "H-free colouring of host - w");
        commands.push_back({sub, [&, sub](Common& c) {
                                arrow_caps(c, sub);
                                Graph g = read_graph_file(host_path), h = read_graph_file(target_path);
                                ColouredGraph col;
                                if (!colouring_path.empty()) {
                                    col = read_coloured_file(colouring_path);
                                } else {
                                    g.check_vertex(w);
                                    ArrowResult r = arrows(g.without_vertex(w), h, 2, ao);
                                    if (r.budget_hit) throw BudgetExceeded("arrow search on host - w exceeded its budget");
                                    if (r.arrows) throw Infeasible("host - w already arrows the target");
                                    col = *r.witness;
                                }
                                return to_report(triangle_refuter(g, w, h, col));
                            }});
    }

    // szz-build / szz-colour / szz-mono
    SzzOptions so;
    auto szz_of = [&](Common& c, CLI::App* sub) {
        if (sub->get_option("--max-edges")->count() == 0) so.max_edges = env_cap(c, "RAMSEY_SZZ_MAX_EDGES", so.max_edges);
        return construct_szz(read_graph_file(forest_path).strip_isolated(), q, so);
    };
    auto szz_opts = [&](CLI::App* sub) {
        sub->add_option("--forest", forest_path)->required();
        sub->add_option("--q", q)->required();
        sub->add_option("--max-edges", so.max_edges)->capture_default_str();
    };
    {
        auto* sub = add("szz-build", "host graph with a degree-1 vertex that arrows the forest");
        szz_opts(sub);
        sub->add_option("--out", c.out, "szz graph output");
        commands.push_back({sub, [&, sub](Common& c) {
                                SzzGraph g = szz_of(c, sub);
                                if (!c.out.empty()) write_text(c.out, render([&](std::ostream& o) { write_szz(o, g); }));
                                return to_report(g);
                            }});
    }
    {
        auto* sub = add("szz-colour", "F-free colouring of the host minus its pendant block");
        szz_opts(sub);
        sub->add_option("--out", c.out, "colouring output");
        commands.push_back({sub, [&, sub](Common& c) {
                                SzzGraph g = szz_of(c, sub);
                                ColouredGraph col = colour_G_minus_Z(g);
                                json classes = json::array();
                                for (int i = 1; i <= g.q; ++i) classes.push_back(col.colour_class(i).m());
                                if (!c.out.empty()) write_text(c.out, render([&](std::ostream& o) { write_coloured(o, col); }));
                                return json{{"vertices", col.n()}, {"class_sizes", classes}, {"monochromatic_F", false}};
                            }});
    }
    std::string szz_colouring = "random";
    {
        auto* sub = add("szz-mono", "extract monochromatic forest copies from colourings of the host");
        szz_opts(sub);
        sub->add_option("--colouring", szz_colouring, "random, balanced, or a coloured-graph file")->capture_default_str();
        sub->add_option("--trials", trials)->capture_default_str();
        seed_opt(sub, false);
        commands.push_back({sub, [&, sub](Common& c) {
                                SzzGraph g = szz_of(c, sub);
                                bool from_file = szz_colouring != "random" && szz_colouring != "balanced";
                                if (!from_file && sub->get_option("--seed")->count() == 0)
                                    throw InvalidArgument("--seed is required for generated colourings");
                                int count = from_file ? 1 : trials;
                                SzzColouring file_phi;
                                if (from_file) file_phi = from_coloured(g, read_coloured_file(szz_colouring));
                                std::vector<MonoForest> found(count);
                                parallel_for(count, threads_of(c), [&](std::size_t t) {
                                    std::uint64_t s = derive_seed(c.seed, t);
                                    SzzColouring phi = from_file ? file_phi
                                                       : szz_colouring == "random" ? random_szz_colouring(g, s)
                                                                                   : balanced_szz_colouring(g, s);
                                    found[t] = find_mono_forest(g, phi);
                                    if (!is_mono_copy(g, phi, found[t].map, found[t].colour))
                                        throw VerificationFailure("trial " + std::to_string(t) + " returned an invalid copy");
                                });
                                int cases[3] = {0, 0, 0};
                                for (const auto& f : found) ++cases[f.case_number];
                                return json{{"szz", to_report(g)},
                                            {"trials", count},
                                            {"validated", count},
                                            {"case1", cases[1]},
                                            {"case2", cases[2]},
                                            {"first", to_report(found.front())}};
                            }});
    }

    // bounds
    int Delta_F = 0, hn = 0;
    long long e_F = 0;
    double log_constant = 80;
    {
        auto* sub = add("bounds", "lower/upper bounds on the simplicity threshold");
        sub->add_option("--graph", graph_path, "H; its profile supplies the parameters");
        sub->add_option("--delta", delta);
        sub->add_option("--lambda", lambda);
        sub->add_option("--Delta", Delta_F);
        sub->add_option("--eF", e_F);
        sub->add_option("--n", hn);
        sub->add_option("--eps", eps)->capture_default_str();
        sub->add_option("--log-constant", log_constant)->capture_default_str();
        commands.push_back({sub, [&](Common&) {
                                NeighbourhoodProfile prof;
                                int order = hn;
                                if (!graph_path.empty()) {
                                    Graph h = read_graph_file(graph_path);
                                    prof = neighbourhood_profile(h);
                                    order = h.n();
                                } else {
                                    require(delta > 0 && hn > 0, "give --graph, or --delta, --lambda, --Delta, --eF and --n");
                                    prof.delta = delta;
                                    prof.lambda_F = lambda;
                                    prof.Delta_F = Delta_F;
                                    prof.e_F = e_F;
                                }
                                return to_report(qtilde_bounds(prof, order, eps, log_constant));
                            }});
    }

    // curves
    double curve_n = 0;
    std::string p_grid;
    CurveOptions co;
    {
        auto* sub = add("curves", "leading-order bound curves over a p grid");
        sub->add_option("--n", curve_n)->required();
        sub->add_option("--p-grid", p_grid)->required();
        sub->add_option("--margin", co.boundary_margin)->capture_default_str();
        sub->add_option("--k-max", co.k_max)->capture_default_str();
        sub->add_option("--out", c.out, "CSV output");
        commands.push_back({sub, [&](Common& c) {
                                auto rows = corollary_curves(curve_n, parse_p_grid(p_grid), co);
                                std::string csv = curves_csv(rows);
                                json r = {{"rows", rows.size()}, {"leading_order", true}};
                                if (!c.out.empty()) write_text(c.out, csv);
                                else r["csv"] = csv;
                                return r;
                            }});
    }

    // kogan
    int k = 1;
    KoganOptions ko;
    {
        auto* sub = add("kogan", "vertex set inducing maximum degree at most k");
        sub->add_option("--graph", graph_path)->required();
        sub->add_option("--k", k)->required();
        sub->add_option("--restarts", ko.restarts)->capture_default_str();
        seed_opt(sub, true);
        commands.push_back({sub, [&](Common& c) {
                                ko.seed = c.seed;
                                ko.threads = threads_of(c);
                                return to_report(kogan_sparse_set(read_graph_file(graph_path), k, ko));
                            }});
    }

    commands[arrow_index].run = [&](Common& c) {
        Command* arrow_cmd = &commands[arrow_index];
        arrow_caps(c, arrow_cmd->app);
        ArrowResult r = arrows(read_graph_file(host_path), read_graph_file(target_path), q, ao);
        arrow_cmd->budget_hit = r.budget_hit;
        if (!c.out.empty() && r.witness)
            write_text(c.out, render([&](std::ostream& o) { write_coloured(o, *r.witness); }));
        return to_report(r, c.timing);
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    for (Command& cmd : commands) {
        if (!cmd.app->parsed()) continue;
        try {
            json result = cmd.run(c);
            json doc = envelope(cmd.app->get_name(), config_of(cmd.app, c), std::move(result));
            std::string text = doc.dump(2) + "\n";
            if (c.report.empty()) std::cout << text;
            else write_text(c.report, text);
            return cmd.budget_hit ? kExitBudget : kExitOk;
        } catch (const BudgetExceeded& e) {
            std::cerr << "budget exceeded: " << e.what() << "\n";
            return kExitBudget;
        } catch (const VerificationFailure& e) {
            std::cerr << "verification failure: " << e.what() << "\n";
            return kExitBug;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInput;
        }
    }
    return kExitInput;
}
