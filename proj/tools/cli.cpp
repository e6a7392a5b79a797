#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "facs/checks.hpp"
#include "facs/io.hpp"
#include "facs/oracle.hpp"

namespace facs::cli {

namespace {

constexpr double kEnumerationGuard = 1e7;

unsigned long long default_seed() {
    if (const char* env = std::getenv("FACS_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            // fall through to the fixed default
        }
    }
    return 42;
}

SeqSpec parse_seqspec(const std::string& text, VarFamily own_family) {
    if (text == "symbolic")
        return own_family == VarFamily::B ? SeqSpec::symbolic_b() : SeqSpec::symbolic_a();
    if (text == "symbolic-a") return SeqSpec::symbolic_a();
    if (text == "symbolic-b") return SeqSpec::symbolic_b();
    if (text == "shifted") return SeqSpec::shifted();
    if (text == "zero") return SeqSpec::zero();
    if (text.rfind("explicit:", 0) == 0) {
        // explicit:<lo>:<v1,v2,...> assigns v1 to index lo, v2 to lo+1, ...
        std::string rest = text.substr(9);
        std::size_t colon = rest.find(':');
        require(colon != std::string::npos, Errc::Usage,
                "explicit sequence needs 'explicit:<lo>:<values>'");
        int lo = std::stoi(rest.substr(0, colon));
        std::map<int, Rational> values;
        std::stringstream in(rest.substr(colon + 1));
        std::string piece;
        int index = lo;
        while (std::getline(in, piece, ',')) values.emplace(index++, parse_rational(piece));
        require(!values.empty(), Errc::Usage, "explicit sequence has no values");
        return SeqSpec::explicit_table(std::move(values));
    }
    fail(Errc::Usage, "unknown sequence spec '" + text + "'");
}

std::pair<int, int> parse_box(const std::string& text) {
    std::size_t x = text.find('x');
    require(x != std::string::npos, Errc::Usage, "box must look like 3x3");
    try {
        int rows = std::stoi(text.substr(0, x));
        int cols = std::stoi(text.substr(x + 1));
        require(rows >= 0 && cols >= 0, Errc::Usage, "box sides must be >= 0");
        return {rows, cols};
    } catch (const std::logic_error&) {
        fail(Errc::Usage, "box must look like 3x3");
    }
}

std::string csv_quote(const std::string& field) { return "\"" + field + "\""; }

// One row of the structure-constant table with its four engine values.
struct FRow {
    Partition lambda, mu, nu;
    long long tableau = 0, hook = 0, recurrence = 0, oracle = 0;
    bool agree() const {
        return tableau == hook && hook == recurrence && recurrence == oracle;
    }
};

std::vector<FRow> compute_f_table(int rows, int cols, int n, int jobs) {
    std::vector<Partition> box;
    for (const Partition& p : partitions_in_box(rows, cols))
        if (p.length() <= n) box.push_back(p);

    Specialization shifted_ab;
    shifted_ab.set_rule(VarFamily::A, FamilyRule::shifted());
    shifted_ab.set_rule(VarFamily::B, FamilyRule::shifted());

    std::vector<std::vector<FRow>> slots(box.size());
    auto work = [&](std::size_t lambda_index) {
        const Partition& lambda = box[lambda_index];
        RecurrenceEngine recurrence(SkewShape(lambda), n);
        std::vector<FRow>& rows_out = slots[lambda_index];
        for (const Partition& mu : box) {
            const Expansion oracle =
                product_expand(SkewShape(lambda), mu, n, SeqSpec::shifted(), SeqSpec::shifted());
            for (const Partition& nu : box) {
                FRow row{lambda, mu, nu};
                row.tableau = f_tableau(lambda, mu, nu, n);
                row.hook = f_hook(lambda, mu, nu);
                row.recurrence =
                    to_int64(substitute(recurrence.value(mu, nu), shifted_ab).constant_value());
                row.oracle = to_int64(oracle.coeff(nu).constant_value());
                rows_out.push_back(std::move(row));
            }
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < box.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < box.size(); i = next++) work(i);
            });
        for (std::thread& t : pool) t.join();
    }

    std::vector<FRow> rows_out;
    for (std::vector<FRow>& slot : slots)
        for (FRow& row : slot) rows_out.push_back(std::move(row));
    return rows_out;
}

struct Options {
    std::string format = "text";
    std::string out_path;
    unsigned long long seed = default_seed();
    int points = 5;
    int jobs = 1;
    bool force = false;
};

int with_output(const Options& opt, std::ostream& out, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
    if (opt.out_path.empty()) return body(out);
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << opt.out_path << "' for writing\n";
        return 2;
    }
    return body(file);
}

int emit_poly(const Options& opt, std::ostream& out, std::ostream& err, Json header,
              const MultiPoly& value) {
    return with_output(opt, out, err, [&](std::ostream& sink) {
        if (opt.format == "json") {
            header["value"] = poly_to_json(value);
            sink << header.dump() << "\n";
        } else {
            sink << value.to_text() << "\n";
        }
        return 0;
    });
}

int run_verify(const std::vector<std::string>& suites, const CheckConfig& cfg,
               const Options& opt, std::ostream& out, std::ostream& err) {
    std::vector<CheckResult> results;
    for (const std::string& name : suites) results.push_back(run_suite(name, cfg));
    bool all_pass = true;
    for (const CheckResult& r : results) all_pass = all_pass && r.pass;

    int code = with_output(opt, out, err, [&](std::ostream& sink) {
        if (opt.format == "json") {
            Json doc = Json::object();
            doc["schema"] = 1;
            doc["n"] = cfg.n;
            doc["box"] = std::to_string(cfg.box_rows) + "x" + std::to_string(cfg.box_cols);
            doc["seed"] = cfg.seed;
            doc["points"] = cfg.points;
            Json arr = Json::array();
            for (const CheckResult& r : results) {
                Json item = Json::object();
                item["suite"] = r.name;
                item["pass"] = r.pass;
                item["cases"] = r.cases;
                item["detail"] = r.detail;
                arr.push_back(std::move(item));
            }
            doc["suites"] = std::move(arr);
            sink << doc.dump() << "\n";
        } else if (opt.format == "csv") {
            sink << "suite,pass,cases,detail\n";
            for (const CheckResult& r : results)
                sink << csv_quote(r.name) << "," << (r.pass ? "1" : "0") << "," << r.cases
                     << "," << csv_quote(r.detail) << "\n";
        } else {
            for (const CheckResult& r : results) {
                sink << "suite " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                     << r.cases << " checks)";
                if (!r.pass) sink << " -- " << r.detail;
                sink << "\n";
            }
        }
        return 0;
    });
    if (code != 0) return code;
    return all_pass ? 0 : 1;
}

int run_selftest(const CheckConfig& cfg, std::ostream& out) {
    struct Criterion {
        std::string label;
        std::function<CheckResult()> run;
    };
    CheckConfig big = cfg;
    big.box_rows = big.box_cols = 4;
    const std::vector<Criterion> criteria{
        {"dual-definition", [] { return check_dual_definition(); }},
        {"vanishing", [&] { return check_vanishing(cfg); }},
        {"four-engine-agreement", [&] { return check_four_engine_agreement(cfg); }},
        {"fact", [] { return check_fact(); }},
        {"degeneration", [&] { return check_degeneration(cfg); }},
        {"transpose-symmetry", [&] { return check_transpose_symmetry(big); }},
        {"hook-datum", [] { return check_hook_datum(); }},
        {"ss-and-hh", [&] { return check_ss_hh(cfg); }},
        {"bar-sums", [] { return check_bar_sums(); }},
        {"g-expansion", [] { return check_g_expansion(); }},
        {"n-stability", [&] { return check_stability(cfg); }},
        {"determinism", [] {
             CheckResult r;
             r.name = "determinism";
             r.cases = 2;
             std::string detail;
             r.pass = outputs_deterministic(&detail);
             r.detail = detail;
             return r;
         }},
    };
    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        CheckResult r = criteria[i].run();
        all_pass = all_pass && r.pass;
        out << (r.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << "/" << criteria.size() << " "
            << criteria[i].label << " (" << r.cases << " cases)";
        if (!r.pass) out << " -- " << r.detail;
        out << "\n";
    }
    return all_pass ? 0 : 1;
}

int run_bench(const CheckConfig& cfg, const Options& opt, std::ostream& out,
              std::ostream& err) {
    std::vector<Partition> box;
    for (const Partition& p : partitions_in_box(cfg.box_rows, cfg.box_cols))
        if (p.length() <= cfg.n) box.push_back(p);

    struct Task {
        Partition theta, mu, nu;
    };
    std::vector<Task> tasks;
    for (const Partition& theta : box)
        for (const Partition& nu : box)
            for (const Partition& mu : partitions_between(Partition(), nu))
                if (mu.length() <= cfg.n && nu.size() <= theta.size() + mu.size())
                    tasks.push_back({theta, mu, nu});
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(tasks.begin(), tasks.end(), rng);

    struct Row {
        std::string engine;
        Task task;
        long long micros = 0;
        std::size_t terms = 0;
    };
    std::vector<Row> rows;
    bool consistent = true;
    for (const Task& task : tasks) {
        auto timed = [&](const std::string& engine, auto&& compute) {
            auto start = std::chrono::steady_clock::now();
            MultiPoly value = compute();
            auto stop = std::chrono::steady_clock::now();
            rows.push_back(
                {engine, task,
                 std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count(),
                 value.term_count()});
            return value;
        };
        MultiPoly tableau = timed("tableau", [&] {
            return c_tableau(SkewShape(task.theta), task.mu, task.nu, cfg.n).value;
        });
        MultiPoly recurrence = timed("recurrence", [&] {
            return c_recurrence(SkewShape(task.theta), task.mu, task.nu, cfg.n).value;
        });
        if (tableau != recurrence) {
            consistent = false;
            err << "error: engines disagree on theta=" << task.theta.to_string()
                << " mu=" << task.mu.to_string() << " nu=" << task.nu.to_string() << "\n";
        }
    }

    int code = with_output(opt, out, err, [&](std::ostream& sink) {
        sink << "engine,theta,mu,nu,n,micros,terms\n";
        for (const Row& row : rows)
            sink << row.engine << "," << csv_quote(row.task.theta.to_string()) << ","
                 << csv_quote(row.task.mu.to_string()) << ","
                 << csv_quote(row.task.nu.to_string()) << "," << cfg.n << "," << row.micros
                 << "," << row.terms << "\n";
        return 0;
    });
    if (code != 0) return code;
    return consistent ? 0 : 1;
}

int run_table(const CheckConfig& cfg, const Options& opt, std::ostream& out,
              std::ostream& err) {
    const std::vector<FRow> rows = compute_f_table(cfg.box_rows, cfg.box_cols, cfg.n, opt.jobs);
    return with_output(opt, out, err, [&](std::ostream& sink) {
        if (opt.format == "json") {
            Json doc = Json::object();
            doc["schema"] = 1;
            doc["n"] = cfg.n;
            doc["box"] = std::to_string(cfg.box_rows) + "x" + std::to_string(cfg.box_cols);
            Json arr = Json::array();
            for (const FRow& row : rows) {
                Json item = Json::object();
                item["lambda"] = row.lambda.to_string();
                item["mu"] = row.mu.to_string();
                item["nu"] = row.nu.to_string();
                item["tableau"] = row.tableau;
                item["hook"] = row.hook;
                item["recurrence"] = row.recurrence;
                item["oracle"] = row.oracle;
                item["agree"] = row.agree();
                arr.push_back(std::move(item));
            }
            doc["rows"] = std::move(arr);
            sink << doc.dump() << "\n";
        } else if (opt.format == "csv") {
            sink << "lambda,mu,nu,n,tableau,hook,recurrence,oracle,agree\n";
            for (const FRow& row : rows)
                sink << csv_quote(row.lambda.to_string()) << ","
                     << csv_quote(row.mu.to_string()) << "," << csv_quote(row.nu.to_string())
                     << "," << cfg.n << "," << row.tableau << "," << row.hook << ","
                     << row.recurrence << "," << row.oracle << ","
                     << (row.agree() ? "1" : "0") << "\n";
        } else {
            sink << "lambda\tmu\tnu\ttableau\thook\trecurrence\toracle\tagree\n";
            for (const FRow& row : rows)
                sink << row.lambda.to_string() << "\t" << row.mu.to_string() << "\t"
                     << row.nu.to_string() << "\t" << row.tableau << "\t" << row.hook << "\t"
                     << row.recurrence << "\t" << row.oracle << "\t"
                     << (row.agree() ? "yes" : "NO") << "\n";
        }
        return 0;
    });
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact factorial Schur polynomials and their structure coefficients"};
    app.require_subcommand(1);

    Options opt;
    CheckConfig cfg;
    cfg.seed = opt.seed;

    std::string lambda_text, theta_text, mu_text, nu_text;
    std::string aseq_text = "symbolic-a", bseq_text = "symbolic-b";
    std::string engine_text = "tableau", route_text = "tableau", box_text = "3x3";
    std::vector<std::string> suites;
    int n = 2;
    int verify_n = 3;
    int bench_n = 2;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        if (with_format)
            sub->add_option("--format", opt.format, "Output format")
                ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", opt.out_path, "Write data to this path instead of stdout");
        sub->add_option("--seed", opt.seed, "Random seed (default: FACS_SEED or 42)");
    };

    CLI::App* schur_cmd = app.add_subcommand("schur", "Classical Schur polynomial");
    schur_cmd->add_option("--lambda", lambda_text, "Partition, e.g. 2,1")->required();
    schur_cmd->add_option("--n", n, "Number of x-variables")->required();
    add_common(schur_cmd);

    CLI::App* facschur_cmd =
        app.add_subcommand("facschur", "Factorial Schur polynomial (skew shapes allowed)");
    facschur_cmd->add_option("--lambda", lambda_text, "Shape, e.g. 3,2/1")->required();
    facschur_cmd->add_option("--n", n, "Number of x-variables")->required();
    facschur_cmd->add_option("--a", aseq_text, "Sequence spec");
    facschur_cmd->add_option("--route", route_text, "Definitional route")
        ->check(CLI::IsMember({"tableau", "det"}));
    add_common(facschur_cmd);

    CLI::App* lrcoef_cmd = app.add_subcommand("lrcoef", "Structure coefficient c(a,b)");
    lrcoef_cmd->add_option("--theta", theta_text, "Skew shape")->required();
    lrcoef_cmd->add_option("--mu", mu_text, "Partition")->required();
    lrcoef_cmd->add_option("--nu", nu_text, "Partition")->required();
    lrcoef_cmd->add_option("--n", n, "Number of x-variables")->required();
    lrcoef_cmd->add_option("--engine", engine_text, "Engine")
        ->check(CLI::IsMember({"tableau", "recurrence", "hook", "oracle", "classical"}));
    lrcoef_cmd->add_option("--a", aseq_text, "a-sequence spec");
    lrcoef_cmd->add_option("--b", bseq_text, "b-sequence spec");
    lrcoef_cmd->add_flag("--force", opt.force, "Ignore the enumeration-size guardrail");
    add_common(lrcoef_cmd);

    CLI::App* table_cmd = app.add_subcommand("table", "Shifted structure constants over a box");
    bool fs_flag = false;
    table_cmd->add_flag("--fs", fs_flag, "Tabulate the shifted structure constants (default)");
    table_cmd->add_option("--box", box_text, "Bounding box, e.g. 3x3");
    table_cmd->add_option("--n", n, "Number of x-variables")->required();
    table_cmd->add_option("--jobs", opt.jobs, "Worker threads");
    table_cmd->add_flag("--force", opt.force, "Ignore the enumeration-size guardrail");
    add_common(table_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("--suite", suites, "Suite name (repeatable; default: all)");
    verify_cmd->add_option("--box", box_text, "Bounding box");
    verify_cmd->add_option("--n", verify_n, "Number of x-variables");
    verify_cmd->add_option("--points", opt.points, "Random points per identity");
    add_common(verify_cmd);

    CLI::App* bench_cmd = app.add_subcommand("bench", "Time the engines over a workload");
    bench_cmd->add_option("--box", box_text, "Bounding box");
    bench_cmd->add_option("--n", bench_n, "Number of x-variables");
    add_common(bench_cmd, false);

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the full acceptance suite");
    selftest_cmd->add_option("--seed", opt.seed, "Random seed");
    selftest_cmd->add_option("--points", opt.points, "Random points per identity");

    std::vector<const char*> argv;
    argv.push_back("facs");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        auto [box_rows, box_cols] = parse_box(box_text);
        cfg.n = n;
        cfg.box_rows = box_rows;
        cfg.box_cols = box_cols;
        cfg.seed = opt.seed;
        cfg.points = opt.points;

        if (schur_cmd->parsed()) {
            const Partition lambda = Partition::parse(lambda_text);
            Json header = Json::object();
            header["schema"] = 1;
            header["lambda"] = lambda.to_string();
            header["n"] = n;
            return emit_poly(opt, out, err, std::move(header), schur(lambda, n));
        }
        if (facschur_cmd->parsed()) {
            const SkewShape shape = SkewShape::parse(lambda_text);
            const SeqSpec aseq = parse_seqspec(aseq_text, VarFamily::A);
            MultiPoly value;
            if (route_text == "det") {
                require(shape.normal(), Errc::Usage, "the det route needs a normal shape");
                value = fac_schur_det(shape.outer(), n, aseq);
            } else {
                value = fac_schur(shape, n, aseq);
            }
            Json header = Json::object();
            header["schema"] = 1;
            header["lambda"] = shape.to_string();
            header["n"] = n;
            header["route"] = route_text;
            return emit_poly(opt, out, err, std::move(header), value);
        }
        if (lrcoef_cmd->parsed()) {
            const SkewShape theta = SkewShape::parse(theta_text);
            const Partition mu = Partition::parse(mu_text);
            const Partition nu = Partition::parse(nu_text);
            const Engine engine = parse_engine(engine_text);
            const SeqSpec aseq = parse_seqspec(aseq_text, VarFamily::A);
            const SeqSpec bseq = parse_seqspec(bseq_text, VarFamily::B);
            if (engine == Engine::Tableau || engine == Engine::Oracle) {
                double predicted = predicted_enumeration_size(theta, mu, nu, n);
                if (predicted > kEnumerationGuard) {
                    err << "warning: predicted enumeration of ~" << predicted
                        << " elements exceeds the desk-scale guardrail\n";
                    if (!opt.force) {
                        err << "error: pass --force to run anyway\n";
                        return 2;
                    }
                }
            }
            MultiPoly value;
            Engine reported = engine;
            switch (engine) {
            case Engine::Tableau:
                value = c_tableau(theta, mu, nu, n, aseq, bseq).value;
                break;
            case Engine::Recurrence: {
                value = c_recurrence(theta, mu, nu, n).value;
                // Specialize afterwards when numeric sequences were requested.
                Specialization s;
                bool any = false;
                if (!aseq.symbolic()) {
                    s.set_rule(VarFamily::A, aseq.as_rule());
                    any = true;
                }
                if (!bseq.symbolic()) {
                    s.set_rule(VarFamily::B, bseq.as_rule());
                    any = true;
                }
                if (any) value = substitute(value, s);
                break;
            }
            case Engine::Hook:
                require(theta.normal(), Errc::Usage, "the hook engine needs a normal theta");
                value = MultiPoly(rat(f_hook(theta.outer(), mu, nu)));
                break;
            case Engine::Classical:
                require(theta.normal(), Errc::Usage,
                        "the classical engine needs a normal theta");
                value = MultiPoly(rat(classical_lr(theta.outer(), mu, nu)));
                break;
            case Engine::Oracle:
                value = product_expand(theta, mu, n, aseq, bseq).coeff(nu);
                break;
            }
            if (opt.format == "json") {
                Json doc = lrresult_to_json(LRResult{theta, mu, nu, n, value, reported});
                doc["schema"] = 1;
                return with_output(opt, out, err, [&](std::ostream& sink) {
                    sink << doc.dump() << "\n";
                    return 0;
                });
            }
            return with_output(opt, out, err, [&](std::ostream& sink) {
                sink << value.to_text() << "\n";
                return 0;
            });
        }
        if (table_cmd->parsed()) {
            for (const Partition& p : partitions_in_box(cfg.box_rows, cfg.box_cols)) {
                double predicted =
                    predicted_enumeration_size(SkewShape(p), Partition(), p, cfg.n);
                if (predicted > kEnumerationGuard && !opt.force) {
                    err << "error: predicted enumeration of ~" << predicted
                        << " elements exceeds the guardrail; pass --force\n";
                    return 2;
                }
            }
            return run_table(cfg, opt, out, err);
        }
        if (verify_cmd->parsed()) {
            cfg.n = verify_n;
            if (suites.empty()) suites = suite_names();
            return run_verify(suites, cfg, opt, out, err);
        }
        if (bench_cmd->parsed()) {
            cfg.n = bench_n;
            opt.format = "csv";
            return run_bench(cfg, opt, out, err);
        }
        if (selftest_cmd->parsed()) {
            return run_selftest(cfg, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::Usage ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

bool outputs_deterministic(std::string* detail) {
    auto render = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        run(args, out, err);
        return out.str();
    };
    const std::vector<std::string> table_args{"table", "--box", "2x2", "--n",
                                              "2",     "--format", "json", "--seed", "9"};
    const std::vector<std::string> verify_args{"verify", "--suite", "hh",     "--box",
                                               "2x2",    "--n",     "2",      "--seed",
                                               "9",      "--format", "json"};
    if (render(table_args) != render(table_args)) {
        if (detail) *detail = "table output differs between identical runs";
        return false;
    }
    if (render(verify_args) != render(verify_args)) {
        if (detail) *detail = "verify output differs between identical runs";
        return false;
    }
    return true;
}

} // namespace facs::cli
