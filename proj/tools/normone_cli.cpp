// Command-line surface for the norm-one construction engine: generate
// formulas, verify them against the exact oracle, count monomials against the
// guaranteed bounds, evaluate on concrete ring instances, replay the
// derivation identity by identity, and compute Tate cohomology of integer
// lattice actions.  All output is deterministic: identical flags produce
// byte-identical documents.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "normone/construction.hpp"
#include "normone/instances.hpp"
#include "normone/lattice.hpp"
#include "normone/oracle.hpp"
#include "normone/replay.hpp"
#include "normone/serialize.hpp"

namespace {

using namespace normone;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kDefaultOrderLimit = 1ull << 16;

struct OutputTarget {
    std::string path;  // empty = standard output

    void emit(const std::string& doc) const {
        if (path.empty()) {
            std::cout << doc;
            if (doc.empty() || doc.back() != '\n') std::cout << "\n";
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ParameterError("cannot open output file " + path);
        f << doc;
        if (doc.empty() || doc.back() != '\n') f << "\n";
    }
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParameterError("cannot open input file " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

GroupContext make_context(int p, int n, bool force) {
    if (p < 2) throw ParameterError("p must be a prime >= 2");
    if (n < 1) throw ParameterError("n must be >= 1");
    // Refuse runaway orders unless the user insists; the engine itself
    // enforces its own representational ceiling either way.
    long double approx = 1.0L;
    for (int i = 0; i < n; ++i) approx *= static_cast<long double>(p);
    if (approx > static_cast<long double>(kDefaultOrderLimit) && !force)
        throw ParameterError("group order p^n exceeds " + std::to_string(kDefaultOrderLimit) +
                             "; pass --force to attempt it anyway");
    return GroupContext(p, n);
}

Strategy parse_strategy(const std::string& name) {
    if (name == "unit") return Strategy::Unit;
    if (name == "doubling") return Strategy::Doubling;
    if (name == "steps") return Strategy::Explicit;
    throw ParameterError("unknown strategy " + name + " (expected unit, doubling, or steps)");
}

std::vector<std::pair<int, int>> parse_steps(const std::string& text) {
    // "2:1,4:2" -> {(2,1), (4,2)}
    std::vector<std::pair<int, int>> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParameterError("step '" + item + "' is not of the form m:k");
        try {
            out.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
        } catch (const std::exception&) {
            throw ParameterError("step '" + item + "' is not of the form m:k");
        }
    }
    if (out.empty()) throw ParameterError("--steps needs at least one m:k pair");
    return out;
}

StepCheck parse_check(const std::string& name) {
    if (name == "oracle") return StepCheck::Oracle;
    if (name == "certificate") return StepCheck::Certificate;
    if (name == "none") return StepCheck::None;
    throw ParameterError("unknown check mode " + name +
                         " (expected oracle, certificate, or none)");
}

std::string schedule_text(const std::vector<std::pair<int, int>>& schedule) {
    std::string out;
    for (const auto& [m, k] : schedule) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(m) + "," + std::to_string(k) + ")";
    }
    return out.empty() ? "(none)" : out;
}

// --- generate -----------------------------------------------------------------

struct GenerateArgs {
    int p = 2;
    int n = 2;
    std::string strategy = "unit";
    std::string steps;
    std::string format = "text";
    std::string check = "oracle";
    std::uint64_t budget = 40'000'000;
    bool show_steps = false;
    bool force = false;
    OutputTarget out;
};

int run_generate(const GenerateArgs& args) {
    GroupContext ctx = make_context(args.p, args.n, args.force);
    GenerateOptions opts;
    opts.strategy = parse_strategy(args.strategy);
    if (!args.steps.empty()) {
        opts.strategy = Strategy::Explicit;
        opts.schedule = parse_steps(args.steps);
    } else if (opts.strategy == Strategy::Explicit) {
        throw ParameterError("strategy 'steps' needs --steps m:k,...");
    }
    opts.verify = parse_check(args.check);
    opts.term_budget = static_cast<std::size_t>(args.budget);

    Chain chain = generate(ctx, opts);

    if (args.format == "json") {
        args.out.emit(chain_to_json(chain, args.show_steps));
        return kExitPass;
    }
    if (args.format != "text" && args.format != "latex")
        throw ParameterError("unknown format " + args.format + " (expected text, latex, or json)");
    const bool latex = args.format == "latex";

    std::ostringstream doc;
    doc << "group: Z/" << ctx.p() << "^" << ctx.n() << " (order " << ctx.order() << ")\n";
    doc << "schedule: " << schedule_text(chain.schedule) << "\n";
    for (const LiftStep& s : chain.steps) {
        doc << "step (" << s.m << "," << s.k << "): multiplier monomials " << s.step_monomials
            << " <= bound " << s.bound << ", verified by " << step_check_name(s.verified_by);
        if (s.expanded)
            doc << ", output monomials " << s.output->term_count();
        else
            doc << ", ambient form not materialized (over term budget)";
        doc << "\n";
        if (args.show_steps && s.expanded) {
            auto render = [&](const Poly& P) { return latex ? poly_to_latex(P) : poly_to_text(P); };
            doc << "  defect     z = " << render(*s.defect) << "\n";
            doc << "  witness    w = " << render(*s.witness) << "\n";
            doc << "  multiplier a = " << render(*s.multiplier) << "\n";
            doc << "  output   a*x = " << render(*s.output) << "\n";
        }
    }
    if (chain.final) {
        doc << "final (" << chain.final->term_count() << " monomials):\n";
        doc << (latex ? poly_to_latex(*chain.final) : poly_to_text(*chain.final)) << "\n";
    } else {
        doc << "final: not materialized (over term budget); step-local forms above are still "
               "exact and verified\n";
    }
    args.out.emit(doc.str());
    return kExitPass;
}

// --- verify ---------------------------------------------------------------------

struct VerifyArgs {
    std::string input = "-";
    int m = 0;  // 0 = full group of the document
    OutputTarget out;
};

int run_verify(const VerifyArgs& args) {
    const std::string text = read_input(args.input);
    // Accept either a bare polynomial document or a chain document with an
    // embedded final, so `generate --format json | verify` round-trips.
    Poly P = [&]() {
        nlohmann::json probe;
        try {
            probe = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParameterError(std::string("input document: ") + e.what());
        }
        if (probe.is_object() && probe.contains("final")) {
            if (probe["final"].is_null())
                throw ParameterError(
                    "chain document has no embedded final polynomial to verify");
            return poly_from_json(probe["final"].dump());
        }
        return poly_from_json(text);
    }();

    const GroupContext& ctx = P.ctx();
    const int m = args.m == 0 ? ctx.n() : args.m;
    SubgroupSpec H(ctx, m);
    NormCheck chk = reduce_norm(P, H);
    std::ostringstream doc;
    if (chk.ok) {
        doc << "PASS: norm over the order-" << H.order() << " subgroup reduces to 1 ("
            << P.term_count() << " monomials checked)\n";
        args.out.emit(doc.str());
        return kExitPass;
    }
    doc << "FAIL: norm over the order-" << H.order() << " subgroup does not reduce to 1\n";
    doc << "residual normal form (" << chk.residual.term_count()
        << " monomials): " << poly_to_text(chk.residual) << "\n";
    args.out.emit(doc.str());
    return kExitVerifyFailed;
}

// --- count ----------------------------------------------------------------------

struct CountArgs {
    int p = 2;
    int n = 2;
    std::string strategy;  // empty = report both unit and doubling
    std::uint64_t budget = 40'000'000;
    bool force = false;
    OutputTarget out;
};

int run_count(const CountArgs& args) {
    GroupContext ctx = make_context(args.p, args.n, args.force);
    std::ostringstream doc;
    doc << "group: Z/" << ctx.p() << "^" << ctx.n() << " (order " << ctx.order() << ")\n";

    bool all_ok = true;
    auto report = [&](Strategy strat) {
        GenerateOptions opts;
        opts.strategy = strat;
        opts.verify = StepCheck::None;
        opts.term_budget = static_cast<std::size_t>(args.budget);
        Chain chain = generate(ctx, opts);
        doc << strategy_name(strat) << " strategy: " << schedule_text(chain.schedule) << "\n";
        Int total = 0;
        for (const LiftStep& s : chain.steps) {
            const bool ok = Int(s.step_monomials) <= s.bound;
            all_ok = all_ok && ok;
            total += Int(s.step_monomials);
            doc << "  step (" << s.m << "," << s.k << "): multiplier monomials "
                << s.step_monomials << " <= bound " << s.bound << " [" << (ok ? "ok" : "VIOLATED")
                << "]\n";
        }
        if (strat == Strategy::Unit && ctx.n() >= 2) {
            const Int chain_bound = unit_chain_bound(ctx.p(), ctx.n());
            const bool ok = total <= chain_bound;
            all_ok = all_ok && ok;
            doc << "  total multiplier monomials " << total << " <= chain bound " << chain_bound
                << " [" << (ok ? "ok" : "VIOLATED") << "]\n";
        }
        if (chain.final) {
            doc << "  final expanded: " << monomial_count(*chain.final, CountMode::Expanded)
                << " monomials\n";
            doc << "  final reduced:  " << monomial_count(*chain.final, CountMode::Reduced)
                << " monomials\n";
        } else {
            doc << "  final: not materialized (over term budget)\n";
        }
    };

    if (args.strategy.empty()) {
        report(Strategy::Unit);
        if (doubling_schedule(ctx.n()) != unit_schedule(ctx.n())) report(Strategy::Doubling);
    } else {
        report(parse_strategy(args.strategy));
    }
    args.out.emit(doc.str());
    return all_ok ? kExitPass : kExitVerifyFailed;
}

// --- evaluate -------------------------------------------------------------------

struct EvaluateArgs {
    int p = 2;
    int n = 2;
    std::string kind = "scalar";
    int dim = 2;
    std::uint64_t seed = 0;
    int count = 1;
    int bound = 3;
    std::string strategy = "unit";
    bool force = false;
    OutputTarget out;
};

int run_evaluate(const EvaluateArgs& args) {
    GroupContext ctx = make_context(args.p, args.n, args.force);
    InstanceKind kind;
    if (args.kind == "scalar")
        kind = InstanceKind::Scalar;
    else if (args.kind == "matrix")
        kind = InstanceKind::Matrix;
    else
        throw ParameterError("unknown instance kind " + args.kind + " (expected scalar or matrix)");
    if (args.count < 1) throw ParameterError("--count must be >= 1");

    GenerateOptions opts;
    opts.strategy = parse_strategy(args.strategy);
    opts.verify = StepCheck::None;
    Chain chain = generate(ctx, opts);
    if (!chain.final)
        throw ParameterError("the generated element is too large to materialize; evaluation "
                             "needs the ambient polynomial");

    std::ostringstream doc;
    doc << "group: Z/" << ctx.p() << "^" << ctx.n() << " (order " << ctx.order()
        << "), element: generated final (" << strategy_name(opts.strategy) << " strategy, "
        << chain.final->term_count() << " monomials)\n";
    SubgroupSpec G(ctx, ctx.n());
    bool all_ok = true;
    for (int i = 0; i < args.count; ++i) {
        const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(i);
        InstanceSpec inst = random_instance(ctx, kind, args.dim, seed, args.bound);
        const bool ok = check_numeric(*chain.final, inst, G);
        const bool witness = has_noncommuting_witness(inst);
        all_ok = all_ok && ok;
        doc << "instance " << (kind == InstanceKind::Scalar ? "scalar" : "matrix");
        if (kind == InstanceKind::Matrix) doc << " dim " << inst.dim;
        doc << " seed " << seed << ": norm check " << (ok ? "PASS" : "FAIL")
            << " (noncommuting witness: " << (witness ? "yes" : "no") << ")\n";
    }
    doc << (all_ok ? "all" : "NOT all") << " " << args.count << " instance checks passed\n";
    args.out.emit(doc.str());
    return all_ok ? kExitPass : kExitVerifyFailed;
}

// --- replay ---------------------------------------------------------------------

struct ReplayArgs {
    int p = 2;
    int n = 2;
    int m = 2;
    int k = 1;
    std::string format = "text";
    bool force = false;
    OutputTarget out;
};

// Norm-one element for the exponent-`exponent` subgroup in the ambient ring,
// built by the unit chain (the generator itself for exponent 1).
Poly hypothesis_element(const GroupContext& ctx, int exponent) {
    Poly X = Poly::generator(ctx, 0);
    for (int j = 2; j <= exponent; ++j) {
        Poly w = defect_witness(X, j, 1);
        Int weight = 1;
        for (int i = 0; i < j - 2; ++i) weight *= ctx.p();
        Poly a = X.scale(weight) + (w - shift(w, ctx.subgroup_step(j)));
        X = a * X;
    }
    return X;
}

int run_replay(const ReplayArgs& args) {
    GroupContext ctx = make_context(args.p, args.n, args.force);
    if (args.m < 2 || args.k < 1 || 2 * args.k > args.m || args.m > ctx.n())
        throw ParameterError("replay needs 2 <= m <= n and 1 <= k <= m/2");

    // Input satisfying the step hypothesis: the generated norm-one element
    // for the exponent-(m-k) subgroup (the generator itself when m-k = 1).
    Poly x = hypothesis_element(ctx, args.m - args.k);
    std::string origin =
        args.m - args.k == 1
            ? std::string("the generator")
            : "the generated exponent-" + std::to_string(args.m - args.k) + " element";

    ReplayReport rep = check_identities(x, args.m, args.k);
    if (args.format == "json") {
        args.out.emit(replay_report_to_json(rep));
        return rep.all_ok ? kExitPass : kExitVerifyFailed;
    }
    if (args.format != "text") throw ParameterError("replay formats: text or json");
    std::ostringstream doc;
    doc << "group: Z/" << ctx.p() << "^" << ctx.n() << ", step (" << rep.m << "," << rep.k
        << "), input: " << origin << " (" << x.term_count() << " monomials)\n";
    for (const IdentityCheck& c : rep.checks) {
        doc << "  " << c.name << ": " << (c.ok ? "ok" : "FAILED");
        if (!c.ok) doc << " (residual terms: " << c.residual_terms << ")";
        doc << "\n";
    }
    doc << (rep.all_ok ? "all 8 identities hold" : "NOT all identities hold") << "\n";
    args.out.emit(doc.str());
    return rep.all_ok ? kExitPass : kExitVerifyFailed;
}

// --- cohomology -------------------------------------------------------------------

struct CohomologyArgs {
    int p = 2;
    int n = 2;
    std::string matrix_file;
    std::uint64_t order = 0;
    bool force = false;
    OutputTarget out;
};

std::string factors_text(const std::vector<Int>& f) {
    if (f.empty()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += " x ";
        out += "Z/" + f[i].str();
    }
    return out;
}

int run_cohomology(const CohomologyArgs& args) {
    std::ostringstream doc;
    if (!args.matrix_file.empty()) {
        // User-supplied action: {"order": r, "t": [[...], ...]}.
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_input(args.matrix_file));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParameterError(std::string("matrix document: ") + e.what());
        }
        if (!j.is_object() || !j.contains("t") || !j["t"].is_array())
            throw ParameterError("matrix document needs a square integer array under 't'");
        std::vector<std::vector<Int>> rows;
        for (const auto& row : j["t"]) {
            if (!row.is_array()) throw ParameterError("matrix rows must be arrays");
            std::vector<Int> r;
            for (const auto& v : row) {
                if (v.is_number_integer())
                    r.push_back(Int(v.get<long long>()));
                else if (v.is_string())
                    r.push_back(Int(v.get<std::string>()));
                else
                    throw ParameterError("matrix entries must be integers, got " + v.dump());
            }
            rows.push_back(std::move(r));
        }
        std::uint64_t order = args.order;
        if (order == 0) {
            if (!j.contains("order") || !j["order"].is_number_unsigned())
                throw ParameterError("matrix document needs 'order' (or pass --order)");
            order = j["order"].get<std::uint64_t>();
        }
        if (order == 0 || order > 0xFFFFFFFFull)
            throw ParameterError("action order must be in [1, 2^32)");
        LatticeAction act(IntMatrix::from_rows(rows), static_cast<std::uint32_t>(order));
        doc << "action of order " << order << " on Z^" << act.dim() << ":\n";
        doc << "  h1: " << factors_text(tate_h1(act)) << "\n";
        doc << "  h2: " << factors_text(tate_h2(act)) << "\n";
        args.out.emit(doc.str());
        return kExitPass;
    }

    GroupContext ctx = make_context(args.p, args.n, args.force);
    doc << "regular representation of Z/" << ctx.p() << "^" << ctx.n() << " on Z[G] (dim "
        << ctx.order() << "):\n";
    for (int m = 1; m <= ctx.n(); ++m) {
        const std::uint32_t sub = ctx.subgroup_order(m);
        IntMatrix t = cyclic_shift_matrix(ctx.order(), ctx.subgroup_step(m));
        LatticeAction act(t, sub);
        doc << "  subgroup order " << sub << ": h1 " << factors_text(tate_h1(act)) << ", h2 "
            << factors_text(tate_h2(act)) << "\n";
    }
    doc << "trivial action of Z/" << ctx.p() << " on Z: h1 "
        << factors_text(tate_h1(LatticeAction(IntMatrix::identity(1), ctx.power(1)))) << ", h2 "
        << factors_text(tate_h2(LatticeAction(IntMatrix::identity(1), ctx.power(1)))) << "\n";
    args.out.emit(doc.str());
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit norm-one elements for cyclic p-group actions: construction, exact "
                 "verification, bounds, instances, derivation replay, and lattice cohomology"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "Construct the norm-one element chain");
    gen->add_option("--p", gen_args.p, "Prime base of the group order")->capture_default_str();
    gen->add_option("--n", gen_args.n, "Exponent: the group is cyclic of order p^n")
        ->capture_default_str();
    gen->add_option("--strategy", gen_args.strategy, "Lift schedule: unit, doubling, or steps")
        ->capture_default_str();
    gen->add_option("--steps", gen_args.steps, "Explicit schedule as m:k pairs, e.g. 2:1,4:2");
    gen->add_option("--format", gen_args.format, "Output format: text, latex, or json")
        ->capture_default_str();
    gen->add_option("--check", gen_args.check,
                    "Per-step verification: oracle, certificate, or none")
        ->capture_default_str();
    gen->add_option("--budget", gen_args.budget,
                    "Skip materializing ambient polynomials above this many predicted terms")
        ->capture_default_str();
    gen->add_flag("--show-steps", gen_args.show_steps,
                  "Include per-step defect, witness, and multiplier polynomials");
    gen->add_flag("--force", gen_args.force, "Allow group orders beyond the default limit");
    gen->add_option("--out", gen_args.out.path, "Write the document to a file instead of stdout");

    VerifyArgs ver_args;
    CLI::App* ver = app.add_subcommand("verify", "Check a polynomial document against the oracle");
    ver->add_option("--input", ver_args.input, "Polynomial or chain JSON file ('-' = stdin)")
        ->capture_default_str();
    ver->add_option("--m", ver_args.m,
                    "Subgroup exponent to verify against (default: the full group)");
    ver->add_option("--out", ver_args.out.path, "Write the verdict to a file instead of stdout");

    CountArgs cnt_args;
    CLI::App* cnt = app.add_subcommand("count", "Monomial counts against the guaranteed bounds");
    cnt->add_option("--p", cnt_args.p, "Prime base of the group order")->capture_default_str();
    cnt->add_option("--n", cnt_args.n, "Group exponent")->capture_default_str();
    cnt->add_option("--strategy", cnt_args.strategy,
                    "Restrict to one strategy (default: report unit and doubling)");
    cnt->add_option("--budget", cnt_args.budget, "Ambient materialization budget in terms")
        ->capture_default_str();
    cnt->add_flag("--force", cnt_args.force, "Allow group orders beyond the default limit");
    cnt->add_option("--out", cnt_args.out.path, "Write the report to a file instead of stdout");

    EvaluateArgs eval_args;
    CLI::App* eval = app.add_subcommand("evaluate", "Numeric check on seeded ring instances");
    eval->add_option("--p", eval_args.p, "Prime base of the group order")->capture_default_str();
    eval->add_option("--n", eval_args.n, "Group exponent")->capture_default_str();
    eval->add_option("--kind", eval_args.kind, "Instance kind: scalar or matrix")
        ->capture_default_str();
    eval->add_option("--dim", eval_args.dim, "Matrix dimension (matrix kind only)")
        ->capture_default_str();
    eval->add_option("--seed", eval_args.seed, "First instance seed")->capture_default_str();
    eval->add_option("--count", eval_args.count, "Number of consecutive seeds to test")
        ->capture_default_str();
    eval->add_option("--bound", eval_args.bound, "Entry bound for drawn values")
        ->capture_default_str();
    eval->add_option("--strategy", eval_args.strategy, "Chain strategy for the tested element")
        ->capture_default_str();
    eval->add_flag("--force", eval_args.force, "Allow group orders beyond the default limit");
    eval->add_option("--out", eval_args.out.path, "Write the report to a file instead of stdout");

    ReplayArgs rep_args;
    CLI::App* rep = app.add_subcommand("replay", "Replay the derivation as exact identities");
    rep->add_option("--p", rep_args.p, "Prime base of the group order")->capture_default_str();
    rep->add_option("--n", rep_args.n, "Group exponent")->capture_default_str();
    rep->add_option("--m", rep_args.m, "Target subgroup exponent of the replayed step")
        ->capture_default_str();
    rep->add_option("--k", rep_args.k, "Exponent gain of the replayed step")
        ->capture_default_str();
    rep->add_option("--format", rep_args.format, "Output format: text or json")
        ->capture_default_str();
    rep->add_flag("--force", rep_args.force, "Allow group orders beyond the default limit");
    rep->add_option("--out", rep_args.out.path, "Write the report to a file instead of stdout");

    CohomologyArgs coh_args;
    CLI::App* coh = app.add_subcommand(
        "cohomology", "Tate cohomology of lattice actions (regular representation by default)");
    coh->add_option("--p", coh_args.p, "Prime base of the group order")->capture_default_str();
    coh->add_option("--n", coh_args.n, "Group exponent")->capture_default_str();
    coh->add_option("--matrix", coh_args.matrix_file,
                    "JSON file {\"order\": r, \"t\": [[...]]} with a user-supplied action");
    coh->add_option("--order", coh_args.order, "Override the declared order of --matrix");
    coh->add_flag("--force", coh_args.force, "Allow group orders beyond the default limit");
    coh->add_option("--out", coh_args.out.path, "Write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return run_generate(gen_args);
        if (ver->parsed()) return run_verify(ver_args);
        if (cnt->parsed()) return run_count(cnt_args);
        if (eval->parsed()) return run_evaluate(eval_args);
        if (rep->parsed()) return run_replay(rep_args);
        if (coh->parsed()) return run_cohomology(coh_args);
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
