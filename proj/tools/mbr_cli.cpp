#include "mbr/generate.hpp"
#include "mbr/io.hpp"
#include "mbr/oracle.hpp"
#include "mbr/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

using namespace mbr;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kInvariant = 3;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::optional<Weight> rho;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string mode = "fast";
    std::optional<Vertex> vertex;
    std::string weights;
    std::string out;
    // gen
    std::size_t n = 10;
    Weight wmin = 0;
    Weight wmax = 9;
    std::string shape = "random";
    // oracle-check / bench
    std::size_t count = 0;
    std::size_t nmin = 1;
    std::size_t nmax = 9;
    std::string rhos = "0,1,2,5";
    std::string sizes = "500,1000,2000";
    bool inject_fault = false;
};

std::vector<std::int64_t> parse_list(const std::string& s, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Usage(std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    return out;
}

Instance load(const Options& o) {
    if (o.input.empty()) throw Usage("an input tree file is required");
    Instance inst;
    if (o.input == "-") {
        inst = read_instance(std::cin);
    } else {
        std::ifstream in(o.input);
        if (!in) throw Usage("cannot open '" + o.input + "'");
        inst = read_instance(in);
    }
    if (o.rho) {
        if (*o.rho < 0) throw Usage("rho must be nonnegative");
        inst.rho = *o.rho * inst.scale;
    }
    return inst;
}

Scenario load_scenario(const Tree& t, const std::string& spec) {
    if (spec.empty() || spec == "lo") return Scenario::lo(t);
    if (spec == "hi") return Scenario::hi(t);
    auto w = parse_list(spec, "weight");
    return Scenario::make(t, std::vector<Weight>(w.begin(), w.end()));
}

json scenario_map(const Scenario& s) {
    json m = json::object();
    for (std::size_t e = 0; e < s.weights().size(); ++e) m[std::to_string(e)] = s.weights()[e];
    return m;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

template <class T>
std::string join_nums(const std::vector<T>& v, char sep = ' ') {
    std::vector<std::string> p;
    for (const auto& x : v) p.push_back(std::to_string(x));
    return join(p, sep);
}

json header(const Instance& inst) {
    return json{{"schema", 1}, {"n", inst.tree.size()}, {"rho", inst.rho}, {"scale", inst.scale}};
}

int cmd_btime(const Options& o) {
    auto inst = load(o);
    const auto& t = inst.tree;
    auto s = load_scenario(t, o.weights);
    auto all = btime_all(t, s, inst.rho);
    std::optional<Schedule> sched;
    if (o.vertex) {
        t.check_vertex(*o.vertex);
        sched = optimal_schedule(t, s, inst.rho, *o.vertex);
    }
    if (o.format == "json") {
        json j = header(inst);
        j["scenario"] = scenario_map(s);
        j["btime"] = all;
        if (sched) {
            json sj{{"sender", sched->sender}, {"makespan", sched->makespan()}};
            json rows = json::array();
            for (Vertex v = 0; v < Vertex(t.size()); ++v) {
                rows.push_back({{"vertex", v},
                                {"parent", sched->parent[v]},
                                {"rank", sched->connect_rank[v]},
                                {"arrival", sched->arrival[v]}});
            }
            sj["vertices"] = rows;
            j["schedule"] = sj;
        }
        std::cout << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        if (sched) {
            std::cout << "vertex,btime,parent,rank,arrival\n";
            for (Vertex v = 0; v < Vertex(t.size()); ++v) {
                std::cout << v << ',' << all[v] << ',' << sched->parent[v] << ',' << sched->connect_rank[v] << ','
                          << sched->arrival[v] << '\n';
            }
        } else {
            std::cout << "vertex,btime\n";
            for (Vertex v = 0; v < Vertex(t.size()); ++v) std::cout << v << ',' << all[v] << '\n';
        }
    } else {
        for (Vertex v = 0; v < Vertex(t.size()); ++v) std::cout << "btime " << v << ' ' << all[v] << '\n';
        if (sched) std::cout << "makespan " << sched->makespan() << '\n';
    }
    return kOk;
}

int cmd_centers(const Options& o) {
    auto inst = load(o);
    const auto& t = inst.tree;
    auto s = load_scenario(t, o.weights);
    auto centers = broadcast_centers(t, s, inst.rho);
    Vertex prime = prime_broadcast_center(t, s, inst.rho);
    Time best = btime(t, s, inst.rho, prime);
    if (o.format == "json") {
        json j = header(inst);
        j["centers"] = centers;
        j["prime"] = prime;
        j["btime"] = best;
        std::cout << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << "center,prime,btime\n";
        for (Vertex c : centers) std::cout << c << ',' << (c == prime ? 1 : 0) << ',' << best << '\n';
    } else {
        std::cout << "centers " << join_nums(centers) << "\nprime " << prime << "\nbtime " << best << '\n';
    }
    return kOk;
}

json report_json(const Tree& t, Weight rho, const RegretReport& r) {
    json j{{"vertex", r.vertex}, {"max_regret", r.max_regret}};
    j["pivot"] = r.worst.all_lo() ? json(nullptr) : json(r.worst.pivot);
    j["j"] = r.worst.j;
    j["witness_center"] = r.witness_center;
    j["scenario"] = scenario_map(materialize(t, rho, r.worst));
    return j;
}

int cmd_max_regret(const Options& o) {
    auto inst = load(o);
    const auto& t = inst.tree;
    const Weight rho = inst.rho;
    if (o.mode != "naive" && o.mode != "fast" && o.mode != "both") throw Usage("mode must be naive, fast or both");
    std::vector<Vertex> queries;
    if (o.vertex) {
        t.check_vertex(*o.vertex);
        queries.push_back(*o.vertex);
    } else {
        for (Vertex v = 0; v < Vertex(t.size()); ++v) queries.push_back(v);
    }
    ExtremeTables tb;
    if (o.mode != "naive") tb = preprocess_extremes(t, rho);

    json rows = json::array();
    std::vector<std::string> lines;
    for (Vertex x : queries) {
        std::optional<RegretReport> naive, fast;
        if (o.mode != "fast") naive = max_regret_naive(t, rho, x);
        if (o.mode != "naive") fast = max_regret_fast(t, rho, x, tb);
        if (naive && fast && naive->max_regret != fast->max_regret) {
            throw Error(Errc::InvariantViolation, "naive and fast maximum regret differ at vertex " + std::to_string(x));
        }
        const auto& main = fast ? *fast : *naive;
        json j = report_json(t, rho, main);
        if (naive && fast) {
            j["naive_max_regret"] = naive->max_regret;
            j["fast_max_regret"] = fast->max_regret;
        }
        rows.push_back(j);
        if (o.format == "csv") {
            lines.push_back(std::to_string(x) + ',' + std::to_string(main.max_regret) + ',' +
                            (main.worst.all_lo() ? std::string() : std::to_string(main.worst.pivot)) + ',' +
                            std::to_string(main.worst.j) + ',' + std::to_string(main.witness_center));
        } else {
            lines.push_back("max_regret " + std::to_string(x) + ' ' + std::to_string(main.max_regret));
        }
    }
    if (o.format == "json") {
        json j = header(inst);
        j["mode"] = o.mode;
        if (o.vertex) {
            for (auto& [k, v] : rows[0].items()) j[k] = v;
        } else {
            j["reports"] = rows;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        if (o.format == "csv") std::cout << "vertex,max_regret,pivot,j,witness_center\n";
        for (const auto& l : lines) std::cout << l << '\n';
    }
    return kOk;
}

int cmd_solve(const Options& o) {
    auto inst = load(o);
    const auto& t = inst.tree;
    if (o.mode != "naive" && o.mode != "fast" && o.mode != "both") throw Usage("mode must be naive, fast or both");
    std::optional<SolveResult> fast, naive;
    if (o.mode != "naive") fast = solve(t, inst.rho);
    if (o.mode != "fast") naive = solve_naive(t, inst.rho);
    if (fast && naive && fast->max_regret != naive->max_regret) {
        throw Error(Errc::InvariantViolation, "solve and solve_naive disagree on the minimum maximum regret");
    }
    const auto& r = fast ? *fast : *naive;
    if (o.format == "json") {
        json j = header(inst);
        j["mode"] = o.mode;
        j["center"] = r.center;
        j["max_regret"] = r.max_regret;
        if (fast) {
            j["iterations"] = fast->iterations;
            json tr = json::array();
            for (const auto& s : fast->trace) tr.push_back({{"size", s.size}, {"centroid", s.centroid}, {"pruned", s.pruned}});
            j["trace"] = tr;
        }
        if (naive) {
            j["profile"] = naive->profile;
            if (fast) {
                j["naive_center"] = naive->center;
                j["naive_max_regret"] = naive->max_regret;
                j["fast_max_regret"] = fast->max_regret;
            }
        }
        std::cout << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        if (naive) {
            std::cout << "vertex,max_regret,center\n";
            for (Vertex v = 0; v < Vertex(t.size()); ++v) {
                std::cout << v << ',' << naive->profile[v] << ',' << (v == r.center ? 1 : 0) << '\n';
            }
        } else {
            std::cout << "iteration,size,centroid,pruned\n";
            for (std::size_t i = 0; i < fast->trace.size(); ++i) {
                const auto& s = fast->trace[i];
                std::cout << i + 1 << ',' << s.size << ',' << s.centroid << ',' << s.pruned << '\n';
            }
        }
    } else {
        std::cout << "center " << r.center << "\nmax_regret " << r.max_regret << '\n';
        if (fast) std::cout << "iterations " << fast->iterations << '\n';
    }
    return kOk;
}

int cmd_gen(const Options& o) {
    if (!o.rho) throw Usage("gen needs --rho");
    if (*o.rho < 0) throw Usage("rho must be nonnegative");
    GenConfig cfg{o.n, o.wmin, o.wmax, parse_shape(o.shape)};
    std::mt19937_64 rng(o.seed);
    auto t = generate_tree(cfg, rng);
    if (o.out.empty()) {
        write_instance(std::cout, t, *o.rho);
    } else {
        std::ofstream f(o.out);
        if (!f) throw Usage("cannot write '" + o.out + "'");
        write_instance(f, t, *o.rho);
    }
    return kOk;
}

// oracle-check

std::optional<std::string> battery(const Tree& t, Weight rho, std::mt19937_64& rng, bool fault) {
    const auto n = Vertex(t.size());
    if (n <= 8) {
        std::vector<Weight> w(t.edge_count());
        for (EdgeId e = 0; e < EdgeId(w.size()); ++e) {
            w[e] = draw(rng, 0, 1) ? t.interval(e).hi : t.interval(e).lo;
        }
        auto s = Scenario::make(t, w);
        for (Vertex v = 0; v < n; ++v) {
            auto a = btime(t, s, rho, v);
            auto b = oracle::btime_bruteforce(t, w, rho, v);
            if (a != b) {
                return "btime at vertex " + std::to_string(v) + " under weights [" + join_nums(w, ',') +
                       "]: " + std::to_string(a) + " vs brute force " + std::to_string(b);
            }
        }
    }
    auto tb = preprocess_extremes(t, rho);
    for (Vertex x = 0; x < n; ++x) {
        auto naive = max_regret_naive(t, rho, x).max_regret;
        auto fast = max_regret_fast(t, rho, x, tb).max_regret + (fault ? 1 : 0);
        auto brute = oracle::max_regret_bruteforce(t, rho, x);
        if (naive != brute || fast != brute) {
            return "max_regret at vertex " + std::to_string(x) + ": naive " + std::to_string(naive) + ", fast " +
                   std::to_string(fast) + ", brute force " + std::to_string(brute);
        }
    }
    auto r = solve(t, rho);
    auto [bc, bv] = oracle::minmax_center_bruteforce(t, rho);
    if (r.max_regret != bv) {
        return "solve returned " + std::to_string(r.max_regret) + " at " + std::to_string(r.center) +
               ", brute force " + std::to_string(bv) + " at " + std::to_string(bc);
    }
    return std::nullopt;
}

Tree without_leaf(const Tree& t, Vertex leaf) {
    std::vector<EdgeSpec> e;
    auto id = [&](Vertex v) { return v > leaf ? v - 1 : v; };
    for (const auto& ed : t.edges()) {
        if (ed.u == leaf || ed.v == leaf) continue;
        e.push_back({id(ed.u), id(ed.v), ed.w.lo, ed.w.hi});
    }
    return Tree::build(t.size() - 1, e);
}

Tree with_interval(const Tree& t, EdgeId which, WeightInterval w) {
    std::vector<EdgeSpec> e;
    for (EdgeId i = 0; i < EdgeId(t.edge_count()); ++i) {
        const auto& ed = t.edge(i);
        auto iv = i == which ? w : ed.w;
        e.push_back({ed.u, ed.v, iv.lo, iv.hi});
    }
    return Tree::build(t.size(), e);
}

/// Greedy shrink: drop leaves, collapse intervals, lower rho while the failure persists.
std::pair<Tree, Weight> minimize(Tree t, Weight rho, std::uint64_t seed, bool fault) {
    auto fails = [&](const Tree& c, Weight r) {
        std::mt19937_64 rng(seed);
        return battery(c, r, rng, fault).has_value();
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < Vertex(t.size()) && t.size() > 1; ++v) {
            if (t.degree(v) > 1) continue;
            auto c = without_leaf(t, v);
            if (fails(c, rho)) {
                t = std::move(c);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (EdgeId e = 0; e < EdgeId(t.edge_count()) && !changed; ++e) {
            auto w = t.interval(e);
            if (w.lo == w.hi) continue;
            for (auto cand : {WeightInterval{w.lo, w.lo}, WeightInterval{w.hi, w.hi}, WeightInterval{0, w.hi - w.lo}}) {
                if (cand == w) continue;
                auto c = with_interval(t, e, cand);
                if (fails(c, rho)) {
                    t = std::move(c);
                    changed = true;
                    break;
                }
            }
        }
        if (!changed && rho > 0) {
            for (Weight r : {Weight{0}, Weight{1}, rho / 2}) {
                if (r < rho && fails(t, r)) {
                    rho = r;
                    changed = true;
                    break;
                }
            }
        }
    }
    return {std::move(t), rho};
}

std::size_t worker_count(std::size_t jobs) {
    std::size_t cap = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MBR_THREADS")) {
        try {
            cap = std::max<std::size_t>(1, std::stoul(env));
        } catch (const std::exception&) {
            throw Usage("MBR_THREADS must be a positive integer");
        }
    }
    return std::min(cap, std::max<std::size_t>(jobs, 1));
}

int cmd_oracle_check(const Options& o) {
    if (o.count == 0) throw Usage("count must be positive");
    if (o.nmin < 1 || o.nmin > o.nmax) throw Usage("empty n range");
    if (o.nmax > 10) throw Usage("n range exceeds the oracle limit of 10");
    auto rhos = parse_list(o.rhos, "rho");
    if (rhos.empty()) throw Usage("empty rho set");
    for (auto r : rhos) {
        if (r < 0) throw Usage("rho must be nonnegative");
    }

    struct Case {
        Tree tree;
        Weight rho = 0;
        std::uint64_t seed = 0;
        std::optional<std::string> failure;
    };
    std::vector<Case> cases(o.count);
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto work = [&] {
        for (std::size_t i; (i = next++) < cases.size();) {
            try {
                auto& c = cases[i];
                c.seed = o.seed + i;
                std::mt19937_64 rng(c.seed);
                GenConfig cfg{std::size_t(draw(rng, std::int64_t(o.nmin), std::int64_t(o.nmax))), 0, 9, Shape::random};
                c.tree = generate_tree(cfg, rng);
                c.rho = rhos[i % rhos.size()];
                std::mt19937_64 check_rng(c.seed);
                c.failure = battery(c.tree, c.rho, check_rng, o.inject_fault);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < worker_count(o.count); ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);

    std::size_t failed = 0;
    const Case* first = nullptr;
    for (const auto& c : cases) {
        if (c.failure) {
            ++failed;
            if (!first) first = &c;
        }
    }
    json j{{"schema", 1}, {"instances", o.count}, {"failed", failed}};
    if (first) {
        auto [small, rho] = minimize(first->tree, first->rho, first->seed, o.inject_fault);
        std::mt19937_64 rng(first->seed);
        auto why = battery(small, rho, rng, o.inject_fault).value_or(*first->failure);
        std::string path = o.out.empty() ? "mbr-reproducer.txt" : o.out;
        std::ofstream f(path);
        if (!f) throw Usage("cannot write '" + path + "'");
        f << "# " << why << "\n# seed " << first->seed << '\n';
        write_instance(f, small, rho);
        j["first_failure"] = {{"seed", first->seed}, {"message", why}, {"reproducer", path}};
    }
    if (o.format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (failed ? "FAIL " : "PASS ") << o.count - failed << '/' << o.count << '\n';
        if (first) std::cout << "reproducer " << j["first_failure"]["reproducer"].get<std::string>() << '\n';
    }
    return failed ? kMismatch : kOk;
}

int cmd_bench(const Options& o) {
    auto sizes = parse_list(o.sizes, "size");
    if (sizes.empty()) throw Usage("empty size list");
    std::vector<std::string> modes;
    if (o.mode == "naive" || o.mode == "both") modes.push_back("naive");
    if (o.mode == "fast" || o.mode == "both") modes.push_back("fast");
    if (o.mode == "solve" || o.mode == "both") modes.push_back("solve");
    if (modes.empty()) throw Usage("mode must be naive, fast, solve or both");
    const std::size_t reps = o.count ? o.count : 3;
    const Weight rho = o.rho.value_or(1);
    if (rho < 0) throw Usage("rho must be nonnegative");

    std::cout << "n,mode,rep,micros\n";
    for (auto n : sizes) {
        if (n < 1) throw Usage("sizes must be positive");
        for (std::size_t rep = 0; rep < reps; ++rep) {
            std::mt19937_64 rng(o.seed + std::uint64_t(n) * 1000003 + rep);
            auto t = generate_tree({std::size_t(n), 0, 99, parse_shape(o.shape)}, rng);
            Vertex x = centroid(t);
            for (const auto& m : modes) {
                auto start = std::chrono::steady_clock::now();
                Time sink = 0;
                if (m == "naive") {
                    sink = max_regret_naive(t, rho, x).max_regret;
                } else if (m == "fast") {
                    sink = max_regret_fast(t, rho, x, preprocess_extremes(t, rho)).max_regret;
                } else {
                    sink = solve(t, rho).max_regret;
                }
                auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
                if (sink < 0) throw Error(Errc::InvariantViolation, "negative maximum regret");
                std::cout << n << ',' << m << ',' << rep << ',' << us.count() << '\n';
            }
        }
    }
    return kOk;
}

int exit_for(Errc c) {
    return c == Errc::InvariantViolation ? kInvariant : kUsage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minmax-regret broadcast centers on trees with interval edge weights"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool input) {
        if (input) sub->add_option("input", o.input, "tree file ('-' for stdin)")->required();
        sub->add_option("--rho", o.rho, "latency override, in file units");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    };

    auto* bt = app.add_subcommand("btime", "broadcast time of every vertex under one scenario");
    common(bt, true);
    bt->add_option("--weights", o.weights, "lo, hi, or comma-separated edge weights");
    bt->add_option("--vertex", o.vertex, "also print an optimal schedule from this vertex");

    auto* ce = app.add_subcommand("centers", "broadcast centers under one scenario");
    common(ce, true);
    ce->add_option("--weights", o.weights, "lo, hi, or comma-separated edge weights");

    auto* mr = app.add_subcommand("max-regret", "maximum regret and a worst-case scenario");
    common(mr, true);
    mr->add_option("--vertex", o.vertex, "query vertex (default: all)");
    mr->add_option("--mode", o.mode, "naive, fast or both");

    auto* so = app.add_subcommand("solve", "minmax-regret broadcast center");
    common(so, true);
    so->add_option("--mode", o.mode, "naive, fast or both");

    auto* ge = app.add_subcommand("gen", "random instance");
    ge->add_option("--n", o.n, "vertex count")->required();
    ge->add_option("--rho", o.rho, "latency")->required();
    ge->add_option("--seed", o.seed, "random seed");
    ge->add_option("--wmin", o.wmin, "smallest weight");
    ge->add_option("--wmax", o.wmax, "largest weight");
    ge->add_option("--shape", o.shape)->check(CLI::IsMember({"random", "path", "star", "caterpillar"}));
    ge->add_option("--out", o.out, "output file (default stdout)");

    auto* oc = app.add_subcommand("oracle-check", "compare against brute force on random instances");
    oc->add_option("--count", o.count, "instances")->default_val(200);
    oc->add_option("--nmin", o.nmin, "smallest tree")->default_val(1);
    oc->add_option("--nmax", o.nmax, "largest tree")->default_val(9);
    oc->add_option("--rhos", o.rhos, "comma-separated latencies")->default_val("0,1,2,5");
    oc->add_option("--seed", o.seed, "first seed");
    oc->add_option("--out", o.out, "reproducer path");
    oc->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    oc->add_flag("--inject-fault", o.inject_fault)->group("");

    auto* be = app.add_subcommand("bench", "timing table as CSV");
    be->add_option("--sizes", o.sizes, "comma-separated vertex counts");
    be->add_option("--count", o.count, "repetitions per size")->default_val(3);
    be->add_option("--mode", o.mode, "naive, fast, solve or both")->default_val("both");
    be->add_option("--rho", o.rho, "latency");
    be->add_option("--seed", o.seed, "random seed");
    be->add_option("--shape", o.shape)->check(CLI::IsMember({"random", "path", "star", "caterpillar"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*bt) return cmd_btime(o);
        if (*ce) return cmd_centers(o);
        if (*mr) return cmd_max_regret(o);
        if (*so) return cmd_solve(o);
        if (*ge) return cmd_gen(o);
        if (*oc) return cmd_oracle_check(o);
        if (*be) return cmd_bench(o);
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return exit_for(e.code());
    }
    return kUsage;
}
