#include "mlob/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlob/exact.hpp"
#include "mlob/io.hpp"
#include "mlob/kernel.hpp"
#include "mlob/oracle.hpp"
#include "mlob/solver.hpp"

namespace mlob::cli {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

Digraph load_instance(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_instance(buffer.str());
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_instance(buffer.str());
}

InstanceSpec::Kind parse_kind(const std::string& name) {
    using Kind = InstanceSpec::Kind;
    if (name == "gnp") return Kind::Gnp;
    if (name == "dag") return Kind::RandomSingleSourceDag;
    if (name == "path") return Kind::Path;
    if (name == "cycle") return Kind::Cycle;
    if (name == "star") return Kind::OutStar;
    throw std::runtime_error("unknown instance kind: " + name);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << text;
}

bool witness_ok(const Digraph& g, const OutTree& w, int k) {
    if (w.size() != g.vertex_count()) return false;
    for (auto [u, v] : w.arcs())
        if (!g.has_arc(u, v)) return false;
    return w.leaf_count() >= k;
}

struct SolveKOptions {
    std::string input;
    int k = 1;
    std::string algo = "b";
    bool use_kernel = false;
};

int run_solve_k(const SolveKOptions& opt, std::istream& in, std::ostream& out,
                std::ostream& err) {
    Digraph g = load_instance(opt.input, in);
    auto start = std::chrono::steady_clock::now();
    auto solve = [&](const Digraph& h) {
        return opt.algo == "a" ? algo_a(h, opt.k) : algo_b(h, opt.k);
    };

    bool yes = false;
    std::optional<OutTree> witness;
    Telemetry telemetry;
    bool kernel_used = false;

    if (opt.use_kernel) {
        bool eligible = false;
        try {
            eligible = check_single_source(g).has_value();
        } catch (const std::invalid_argument&) {
            eligible = false;
        }
        if (!eligible) {
            err << "warning: input is not a single-source DAG; solving directly\n";
        } else {
            kernel_used = true;
            KernelResult kr = kernelize(g, opt.k);
            if (kr.verdict == KernelVerdict::YesWithWitness) {
                yes = true;
                witness = kr.witness;
                telemetry.nodes_visited = 1;
            } else {
                SolveOutcome so = solve(*kr.reduced);
                telemetry = so.telemetry;
                yes = so.yes;
                if (so.yes && so.witness) witness = lift_witness(g, kr.reduction, *so.witness);
            }
        }
    }
    if (!kernel_used) {
        SolveOutcome so = solve(g);
        yes = so.yes;
        witness = so.witness;
        telemetry = so.telemetry;
    }

    out << (yes ? "YES" : "NO") << '\n';
    if (yes && witness) {
        if (!witness_ok(g, *witness, opt.k)) throw std::logic_error("witness failed verification");
        out << serialize_witness(*witness);
    }
    out << "# nodes_visited " << telemetry.nodes_visited << " max_depth " << telemetry.max_depth
        << " l_branches " << telemetry.l_branches << " grow_branches " << telemetry.grow_branches
        << " wall_ms " << elapsed_ms(start) << '\n';
    return yes ? kExitYes : kExitNo;
}

int run_solve_max(const std::string& input, int stage2_cap, std::istream& in, std::ostream& out) {
    Digraph g = load_instance(input, in);
    const int n = g.vertex_count();
    const int k0 = (526 * n + 999) / 1000;
    auto start = std::chrono::steady_clock::now();
    // The stage-1 probe is cheap; the subset scan of stage 2 is the C(n,k)
    // cost the cap protects against.
    SolveOutcome probe = algo_b(g, k0);
    double stage1_ms = elapsed_ms(start);
    if (probe.yes && n > stage2_cap)
        throw std::runtime_error("stage 2 would enumerate subsets of a digraph with n > " +
                                 std::to_string(stage2_cap) + "; raise --stage2-cap to allow");
    ExactOutcome outcome = adml(g);
    out << "max_leaves " << outcome.max_leaves << '\n';
    out << "stage_reached " << outcome.stage_reached << '\n';
    if (outcome.witness) out << serialize_witness(*outcome.witness);
    out << "# stage1_ms " << stage1_ms << " total_ms " << elapsed_ms(start) << '\n';
    return kExitYes;
}

int run_kernelize(const std::string& input, int k, std::istream& in, std::ostream& out) {
    Digraph g = load_instance(input, in);
    if (!check_single_source(g))
        throw std::runtime_error("input must be an acyclic digraph with a single source");
    KernelResult kr = kernelize(g, k);
    const Digraph& dstar = kr.reduction.dstar;
    out << "original " << g.vertex_count() << ' ' << g.arc_count() << '\n';
    out << "reduced " << dstar.vertex_count() << ' ' << dstar.arc_count() << '\n';
    out << "rule_a " << kr.reduction.rule_a_count << " rule_b " << kr.reduction.rule_b_count
        << '\n';
    if (kr.verdict == KernelVerdict::YesWithWitness) {
        out << "verdict YES\n";
        out << serialize_witness(*kr.witness);
    } else {
        out << "verdict REDUCED k " << kr.reduced_k << '\n';
        out << serialize(*kr.reduced);
    }
    return kExitYes;
}

int run_verify(const std::string& input, int k_opt, std::istream& in, std::ostream& out) {
    Digraph g = load_instance(input, in);
    OracleResult oracle = oracle_max_leaves(g);
    out << "oracle_max_leaves " << oracle.max_leaves << '\n';
    bool all_match = true;
    int k_lo = k_opt > 0 ? k_opt : 1;
    int k_hi = k_opt > 0 ? k_opt : g.vertex_count();
    for (int k = k_lo; k <= k_hi; ++k) {
        bool expected = oracle.max_leaves >= k;
        SolveOutcome got = algo_b(g, k);
        bool match = got.yes == expected;
        all_match = all_match && match;
        out << "k " << k << " oracle " << (expected ? "YES" : "NO") << " algo_b "
            << (got.yes ? "YES" : "NO") << (match ? "" : " MISMATCH") << '\n';
    }
    out << (all_match ? "agreement\n" : "DISAGREEMENT\n");
    return all_match ? kExitYes : kExitNo;
}

struct BenchOptions {
    std::string kind = "gnp";
    int n = 10;
    double p = 0.2;
    int count = 5;
    std::uint64_t seed = 1;
    int k = 2;
    std::string algos = "a,b";
    bool json = false;
};

int run_bench(const BenchOptions& opt, std::ostream& out) {
    std::vector<std::string> algos;
    std::stringstream names(opt.algos);
    for (std::string name; std::getline(names, name, ',');) algos.push_back(name);
    if (!opt.json)
        out << "instance,n,m,k,algorithm,result,nodes_visited,wall_ms\n";
    for (int i = 0; i < opt.count; ++i) {
        InstanceSpec spec{parse_kind(opt.kind), opt.n, opt.p, opt.seed + i};
        Digraph g = generate(spec);
        for (const std::string& algo : algos) {
            auto start = std::chrono::steady_clock::now();
            std::string result;
            long long nodes = 0;
            if (algo == "a" || algo == "b") {
                SolveOutcome so = algo == "a" ? algo_a(g, opt.k) : algo_b(g, opt.k);
                result = so.yes ? "YES" : "NO";
                nodes = so.telemetry.nodes_visited;
            } else if (algo == "adml") {
                ExactOutcome eo = adml(g);
                result = std::to_string(eo.max_leaves);
            } else if (algo == "oracle") {
                OracleResult oracle = oracle_max_leaves(g);
                result = std::to_string(oracle.max_leaves);
            } else {
                throw std::runtime_error("unknown algorithm: " + algo);
            }
            double ms = elapsed_ms(start);
            std::string id = opt.kind + "-" + std::to_string(opt.n) + "-" + std::to_string(i);
            if (opt.json) {
                nlohmann::json record{{"instance", id},     {"n", g.vertex_count()},
                                      {"m", g.arc_count()}, {"k", opt.k},
                                      {"algorithm", algo},  {"result", result},
                                      {"nodes_visited", nodes}, {"wall_ms", ms}};
                out << record.dump() << '\n';
            } else {
                out << id << ',' << g.vertex_count() << ',' << g.arc_count() << ',' << opt.k << ','
                    << algo << ',' << result << ',' << nodes << ',' << ms << '\n';
            }
        }
    }
    return kExitYes;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"maximum leaf out-branching toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance");
    std::string gen_kind = "gnp", gen_out;
    int gen_n = 10;
    double gen_p = 0.2;
    std::uint64_t gen_seed = 1;
    gen->add_option("--kind", gen_kind, "gnp|dag|path|cycle|star");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "arc probability");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // solve-k
    auto* solvek = app.add_subcommand("solve-k", "decide >= k leaves");
    SolveKOptions sk;
    solvek->add_option("input", sk.input, "edge-list file, '-' for stdin");
    solvek->add_option("--k", sk.k, "leaf target")->required();
    solvek->add_option("--algo", sk.algo, "a|b (default b)")
        ->check(CLI::IsMember({"a", "b"}));
    solvek->add_flag("--kernelize", sk.use_kernel, "kernel preprocessing on single-source DAGs");

    // solve-max
    auto* solvemax = app.add_subcommand("solve-max", "exact maximum leaf count");
    std::string sm_input;
    int sm_cap = 24;
    solvemax->add_option("input", sm_input, "edge-list file, '-' for stdin");
    solvemax->add_option("--stage2-cap", sm_cap, "refuse stage-2 enumeration above this n");

    // kernelize
    auto* kern = app.add_subcommand("kernelize", "linear kernel for single-source DAGs");
    std::string kn_input;
    int kn_k = 1;
    kern->add_option("input", kn_input, "edge-list file, '-' for stdin");
    kern->add_option("--k", kn_k, "leaf target")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "oracle vs algorithm B agreement");
    std::string vf_input;
    int vf_k = 0;
    verify->add_option("input", vf_input, "edge-list file, '-' for stdin");
    verify->add_option("--k", vf_k, "check only this k (default: all)");

    // bench
    auto* bench = app.add_subcommand("bench", "benchmark generated instances");
    BenchOptions bo;
    bench->add_option("--kind", bo.kind, "gnp|dag|path|cycle|star");
    bench->add_option("--n", bo.n, "vertex count");
    bench->add_option("--p", bo.p, "arc probability");
    bench->add_option("--count", bo.count, "number of instances");
    bench->add_option("--seed", bo.seed, "base RNG seed");
    bench->add_option("--k", bo.k, "leaf target for a/b");
    bench->add_option("--algos", bo.algos, "comma list of a,b,adml,oracle");
    bench->add_flag("--json", bo.json, "one JSON object per record");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream buffer;
        int code = app.exit(e, buffer, buffer);
        (code == 0 ? out : err) << buffer.str();
        return code == 0 ? kExitYes : kExitError;
    }

    try {
        if (gen->parsed()) {
            InstanceSpec spec{parse_kind(gen_kind), gen_n, gen_p, gen_seed};
            write_output(gen_out, serialize(generate(spec)), out);
            return kExitYes;
        }
        if (solvek->parsed()) return run_solve_k(sk, in, out, err);
        if (solvemax->parsed()) return run_solve_max(sm_input, sm_cap, in, out);
        if (kern->parsed()) return run_kernelize(kn_input, kn_k, in, out);
        if (verify->parsed()) return run_verify(vf_input, vf_k, in, out);
        if (bench->parsed()) return run_bench(bo, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace mlob::cli
