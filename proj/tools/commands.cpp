#include "commands.hpp"

#include "triepal/check.hpp"
#include "triepal/engine.hpp"
#include "triepal/error.hpp"
#include "triepal/script.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace triepal::cli {

namespace {

struct Output {
    std::ofstream file;
    std::ostream* stream;

    Output(const std::string& path, std::ostream& fallback) : stream(&fallback) {
        if (!path.empty() && path != "-") {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file " + path);
            stream = &file;
        }
    }
    std::ostream& operator*() { return *stream; }
};

std::vector<Op> load_ops(const std::string& path) {
    if (path == "-") return parse_ops(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_ops(in);
}

int do_run(const std::string& path, const std::string& engine, const std::string& out_path, std::ostream& out,
           std::ostream& err) {
    std::vector<Op> ops;
    try {
        ops = load_ops(path);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    }
    auto session = Session::open(engine);
    Output o(out_path, out);
    for (const Op& op : ops) {
        try {
            const Event e = op.kind == 'I' ? session->insert(op.node, op.label) : session->remove(op.node);
            *o << event_json(e) << "\n";
        } catch (const Error& e) {
            err << "line " << op.line << ": " << e.what() << "\n";
            return kSemanticError;
        }
    }
    return kOk;
}

struct CheckArgs {
    std::uint64_t seed = 1;
    std::size_t ops = 200;
    std::size_t sigma = 2;
    std::string shape = "uniform";
    std::vector<std::string> engines;
    std::size_t scripts = 1;
    double delete_rate = 0.2;
    bool fault = false;
    bool self_test = false;
    bool verify = false;
};

int do_check(const CheckArgs& a, const std::string& out_path, std::ostream& out, std::ostream& err) {
    CheckOptions opts;
    if (a.engines.empty()) {
        for (EngineKind k : all_engines())
            if (k != EngineKind::Oracle) opts.engines.push_back(k);
    } else {
        for (const auto& name : a.engines) opts.engines.push_back(parse_engine(name));
    }
    opts.session.fault = a.fault || a.self_test;
    opts.session.verify = a.verify;

    std::vector<Shape> shapes;
    if (a.shape == "all")
        shapes = {Shape::Path, Shape::Star, Shape::Caterpillar, Shape::Uniform, Shape::Adversarial};
    else
        shapes = {parse_shape(a.shape)};

    Output o(out_path, out);
    for (std::size_t i = 0; i < a.scripts; ++i) {
        ScriptSpec spec;
        spec.seed = a.seed + i;
        spec.ops = a.ops;
        spec.sigma = a.sigma;
        spec.shape = shapes[i % shapes.size()];
        spec.delete_rate = a.delete_rate;
        const auto ops = generate_script(spec);
        const CheckResult r = check_script(ops, opts);
        if (r.ok) continue;
        *o << "divergence: engine=" << engine_name(*r.engine) << " seed=" << spec.seed
           << " shape=" << shape_name(spec.shape) << " op=" << r.op_index << "\n"
           << r.detail << "\n"
           << "minimized reproducer (" << r.reproducer.size() << " ops):\n"
           << format_ops(r.reproducer);
        if (a.self_test) {
            *o << "self-test: injected fault detected\n";
            return kOk;
        }
        return kFailure;
    }
    if (a.self_test) {
        err << "self-test: injected fault went unnoticed\n";
        return kFailure;
    }
    *o << "ok: " << a.scripts << " script(s), " << opts.engines.size() << " engine(s) agree with the oracle\n";
    return kOk;
}

struct BenchArgs {
    std::vector<std::size_t> sizes{64, 128, 256, 512};
    std::vector<std::string> engines{"eertree-basic", "eertree-quick"};
    std::string shape = "adversarial";
    std::size_t sigma = 2;
    std::uint64_t seed = 1;
};

int do_bench(const BenchArgs& a, const std::string& out_path, std::ostream& out) {
    Output o(out_path, out);
    *o << "engine,shape,size,ops,wall_ms,chain_steps,max_insert_steps\n";
    const Shape shape = parse_shape(a.shape);
    for (const auto& name : a.engines) {
        const EngineKind kind = parse_engine(name);
        for (std::size_t size : a.sizes) {
            ScriptSpec spec;
            spec.seed = a.seed;
            spec.sigma = a.sigma;
            spec.shape = shape;
            spec.ops = shape == Shape::Adversarial ? 2 * size : size;
            spec.delete_rate = 0;
            const auto ops = generate_script(spec);
            auto session = Session::open(kind);
            std::uint64_t max_steps = 0;
            const auto t0 = std::chrono::steady_clock::now();
            for (const Op& op : ops) {
                if (op.kind == 'I') {
                    session->insert(op.node, op.label);
                    max_steps = std::max(max_steps, session->last_steps());
                } else {
                    session->remove(op.node);
                }
            }
            const auto t1 = std::chrono::steady_clock::now();
            const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            *o << name << "," << a.shape << "," << size << "," << ops.size() << "," << ms << ","
               << session->chain_steps() << "," << max_steps << "\n";
        }
    }
    return kOk;
}

int do_export(const std::string& target, const std::string& path, std::string engine, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    if (target != "trie" && target != "eertree" && target != "suffixtree" && target != "groups") {
        err << Error(Errc::UnknownTarget, target).what() << "\n";
        return kSemanticError;
    }
    if (engine.empty()) engine = target == "suffixtree" ? "suffixtree" : "eertree-quick";
    std::vector<Op> ops;
    if (!path.empty()) {
        try {
            ops = load_ops(path);
        } catch (const ParseError& e) {
            err << "parse error: " << e.what() << "\n";
            return kParseError;
        }
    }
    auto session = Session::open(engine);
    for (const Op& op : ops) {
        try {
            op.kind == 'I' ? session->insert(op.node, op.label) : session->remove(op.node);
        } catch (const Error& e) {
            err << "line " << op.line << ": " << e.what() << "\n";
            return kSemanticError;
        }
    }
    Output o(out_path, out);
    *o << export_dot(*session, target);
    return kOk;
}

} // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Palindromes in dynamic tries: replay, cross-check, benchmark and export."};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    std::string engine = "eertree-quick";
    std::string ops_path;
    auto* run = app.add_subcommand("run", "Replay an ops file and print one JSON event per op");
    run->add_option("ops", ops_path, "Ops file ('-' for stdin)")->required();
    run->add_option("--engine", engine, "Distinct-palindrome engine");
    run->add_option("--out", out_path, "Write output to this file instead of stdout");

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "Cross-check engines against the oracle on random scripts");
    check->add_option("--seed", ca.seed, "First seed");
    check->add_option("--ops", ca.ops, "Operations per script");
    check->add_option("--sigma", ca.sigma, "Alphabet size");
    check->add_option("--shape", ca.shape, "path|star|caterpillar|uniform|adversarial|all");
    check->add_option("--engine", ca.engines, "Engines to compare (default: all)");
    check->add_option("--scripts", ca.scripts, "Number of scripts (seeds seed..seed+k-1)");
    check->add_option("--delete-rate", ca.delete_rate, "Probability that an op is a deletion");
    check->add_flag("--fault", ca.fault, "Corrupt the engines under test");
    check->add_flag("--self-test", ca.self_test, "Succeed only if an injected fault is caught");
    check->add_flag("--verify", ca.verify, "Verify suffix-tree insertion points naively");
    check->add_option("--out", out_path, "Write output to this file instead of stdout");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Emit CSV timings and chain-step counters");
    bench->add_option("--sizes", ba.sizes, "Instance sizes")->delimiter(',');
    bench->add_option("--engine", ba.engines, "Engines")->delimiter(',');
    bench->add_option("--shape", ba.shape, "Script shape");
    bench->add_option("--sigma", ba.sigma, "Alphabet size");
    bench->add_option("--seed", ba.seed, "Seed");
    bench->add_option("--out", out_path, "Write output to this file instead of stdout");

    std::string target;
    std::string export_engine;
    std::string export_ops;
    auto* exp = app.add_subcommand("export", "Print a structure in DOT format");
    exp->add_option("what", target, "trie|eertree|suffixtree|groups")->required();
    exp->add_option("ops", export_ops, "Ops file to replay first ('-' for stdin)");
    exp->add_option("--engine", export_engine, "Engine used to build the structure");
    exp->add_option("--out", out_path, "Write output to this file instead of stdout");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, eo;
        const int code = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return code == 0 ? kOk : kFailure;
    }

    try {
        if (*run) return do_run(ops_path, engine, out_path, out, err);
        if (*check) return do_check(ca, out_path, out, err);
        if (*bench) return do_bench(ba, out_path, out);
        if (*exp) return do_export(target, export_ops, export_engine, out_path, out, err);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.code() == Errc::UnknownEngine ? kFailure : kSemanticError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}

} // namespace triepal::cli
