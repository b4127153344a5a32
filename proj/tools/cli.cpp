#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "report.hpp"
#include "tables.hpp"
#include "twosq/constants.hpp"
#include "twosq/errors.hpp"
#include "twosq/predictors.hpp"
#include "twosq/progressions.hpp"
#include "twosq/quadrature.hpp"
#include "twosq/sieve.hpp"
#include "twosq/singular.hpp"

namespace twosq::cli {

namespace {

struct RunConfig {
    std::string format = "csv";
    std::string cache_dir;
    int threads = 0;
    bool include_zero = false;
    bool allow_long_run = false;

    double x = 1e9;
    std::uint64_t q = 5;
    std::int64_t v = 0;
    double H = 1e4;
    int r = 3;
    int k = 2;
    std::optional<double> eps;
    int nodes = 40;
    double tol = 1e-10;
    std::string source = "published";

    std::int64_t h = 0;
    std::string tuple;
    std::uint64_t cutoff = kDefaultPrimeCutoff;
    bool total = false;

    std::string what = "pairs";
    std::string sources = "conjecture,pipeline-numeric,pipeline-thm";
    std::string residues;
    int J = 1;

    int table_id = 0;
    std::vector<double> table_H;
    bool full = false;
};

std::uint64_t to_index(double x, const char* name) {
    if (!(x >= 1) || x > 1.8e19 || std::floor(x) != x)
        throw ArgumentError(std::string("--") + name + " must be a positive integer (got " + general(x) + ")");
    return static_cast<std::uint64_t>(x);
}

std::vector<std::int64_t> parse_list(const std::string& s, const char* name) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ArgumentError(std::string("--") + name + ": not an integer list: " + s);
        }
    }
    if (out.empty()) throw ArgumentError(std::string("--") + name + " is empty");
    return out;
}

std::uint64_t sieve_limit(const RunConfig& c) {
    auto x = to_index(c.x, "x");
    if (double(x) > kMaxDeskSieve && !c.allow_long_run)
        throw ArgumentError("sieving to " + general(c.x) + " exceeds the desk limit 1e10; pass --allow-long-run");
    return x;
}

SieveOptions sieve_options(const RunConfig& c) {
    SieveOptions o;
    o.include_zero = c.include_zero;
    o.cache_dir = c.cache_dir;
    return o;
}

CoeffSource coeff_source(const std::string& s) {
    if (s == "published") return CoeffSource::published;
    if (s == "numeric") return CoeffSource::numeric;
    throw ArgumentError("--source must be published or numeric");
}

void base_meta(Table& t, const RunConfig& c, const std::string& cmd) {
    t.meta.insert(t.meta.begin(), {{"version", kVersion}, {"command", cmd}, {"threads", std::to_string(c.threads)}});
}

Table cmd_sieve_count(const RunConfig& c) {
    auto x = sieve_limit(c);
    Table t;
    t.title = "sums of two squares up to x";
    t.add_meta("x", std::to_string(x));
    t.add_meta("include_zero", c.include_zero ? "true" : "false");
    t.columns = {"x", "count"};
    t.rows.push_back({std::to_string(x), std::to_string(count_up_to(x, sieve_options(c)))});
    return t;
}

Table cmd_tuples(const RunConfig& c, int r) {
    auto x = sieve_limit(c);
    auto m = count_consecutive_tuples(x, c.q, r, sieve_options(c));
    Table t;
    t.title = r == 2 ? "consecutive pairs by residue" : "consecutive tuples by residue";
    t.add_meta("x", std::to_string(x));
    t.add_meta("q", std::to_string(c.q));
    t.add_meta("r", std::to_string(r));
    t.add_meta("total", std::to_string(m.total()));
    static const char* names[] = {"a", "b", "c", "d", "e", "f"};
    for (int i = 0; i < r; ++i) t.columns.push_back(r == 2 ? names[i] : "a" + std::to_string(i + 1));
    t.columns.push_back("count");
    auto emit = [&](std::uint64_t idx, std::uint64_t n) {
        std::vector<std::string> row;
        for (auto w : m.word_of(idx)) row.push_back(std::to_string(w));
        row.push_back(std::to_string(n));
        t.rows.push_back(std::move(row));
    };
    if (m.dense())
        for (std::uint64_t i = 0; i < m.cells(); ++i) emit(i, m.at(m.word_of(i)));
    else
        for (auto [i, n] : m.nonzero()) emit(i, n);
    return t;
}

Table cmd_gaps(const RunConfig& c) {
    auto x = sieve_limit(c);
    auto g = gap_histogram(x, sieve_options(c));
    Table t;
    t.title = "gaps between consecutive sums of two squares up to x";
    t.add_meta("x", std::to_string(x));
    std::uint64_t total = 0;
    t.columns = {"gap", "count"};
    for (auto [gap, n] : g) {
        t.rows.push_back({std::to_string(gap), std::to_string(n)});
        total += n;
    }
    t.add_meta("gaps", std::to_string(total));
    return t;
}

Table cmd_constants(const RunConfig& c) {
    auto& b = constants_for(c.q, coeff_source(c.source));
    auto& f = fundamentals();
    Table t;
    t.title = "constants for q = " + std::to_string(c.q);
    t.add_meta("q", std::to_string(c.q));
    t.add_meta("source", c.source);
    t.columns = {"name", "value", "provenance"};
    auto tag = [&](const std::string& k) {
        auto it = b.method_tags.find(k);
        return it == b.method_tags.end() ? std::string("computed") : it->second;
    };
    auto add = [&](const std::string& k, double v, const std::string& prov) { t.rows.push_back({k, general(v), prov}); };
    add("K", b.K, tag("K"));
    add("gamma", b.gamma, "hard-coded");
    add("L1_chi4", f.L1_chi4, "closed form pi/4");
    add("L1p_chi4", f.L1p_chi4, tag("L1p_chi4"));
    add("alpha1", f.alpha1, tag("alpha1"));
    add("beta1", f.beta1, tag("beta1"));
    add("omega", b.omega, tag("omega"));
    add("z_prime_0", b.z_prime_0, tag("z_prime_0"));
    add("c1_landau", b.c1_landau, "published");
    add("C1", b.C1, tag("C1"));
    for (auto& [j, v] : b.c_j) add("c_" + std::to_string(j), v, tag("c_j"));
    for (auto& [j, v] : b.c0_j) add("c0_" + std::to_string(j), v, tag("c0_j,c1_j"));
    for (auto& [j, v] : b.c1_j) add("c1_" + std::to_string(j), v, tag("c0_j,c1_j"));
    for (std::size_t i = 0; i < b.C_q_chi.size(); ++i) {
        add("C_q_chi" + std::to_string(i) + "_re", b.C_q_chi[i].real(), tag("C_q_chi"));
        add("C_q_chi" + std::to_string(i) + "_im", b.C_q_chi[i].imag(), tag("C_q_chi"));
    }
    for (auto& [v, C] : b.C_ab) add("C_ab_v" + std::to_string(v), C, tag("C_ab"));
    return t;
}

Table cmd_singular(const RunConfig& c) {
    Table t;
    t.title = "singular series";
    t.columns = {"tuple", "value", "method", "prime_cutoff", "tail_bound", "max_alpha"};
    std::vector<std::int64_t> D;
    if (!c.tuple.empty()) {
        D = parse_list(c.tuple, "tuple");
    } else {
        if (c.h < 1) throw ArgumentError("singular needs --h >= 1 or --tuple");
        D = {0, c.h};
    }
    TupleConfig cfg(D);
    auto s = singular_series_general(cfg, c.cutoff);
    std::string name;
    for (auto d : cfg.offsets) name += (name.empty() ? "" : " ") + std::to_string(d);
    t.rows.push_back({name, general(s.value), "local_density_product", std::to_string(s.prime_cutoff),
                      general(s.tail_bound), std::to_string(s.max_alpha)});
    if (cfg.k() == 2) {
        t.rows.push_back({name, general(ck_singular_series(cfg.spread(), fundamentals().K)), "connors_keating", "",
                          "", ""});
        t.add_meta("s0", general(s0(cfg, c.cutoff)));
    }
    t.add_meta("tuple", c.tuple.empty() ? "0," + std::to_string(c.h) : c.tuple);
    t.add_meta("cutoff", std::to_string(c.cutoff));
    return t;
}

Table cmd_weighted_sum(const RunConfig& c) {
    Table t;
    t.add_meta("q", std::to_string(c.q));
    t.add_meta("H", general(c.H));
    t.add_meta("tol", general(c.tol));
    t.add_meta("cutoff_T", std::to_string(weighted_sum_cutoff(c.H, 0, c.tol)));
    if (c.total) {
        t.title = "S(H) = sum over h >= 1 of S({0,h}) e^{-h/H}";
        double S = weighted_sum_total(c.H, c.tol);
        t.columns = {"H", "S", "S_minus_H"};
        t.rows.push_back({general(c.H), general(S), general(S - c.H)});
        return t;
    }
    require_prime_1mod4(c.q);
    t.title = "S(q, v; H)";
    t.add_meta("v", std::to_string(c.v));
    auto e = exp_sums(c.q, c.v, c.H);
    double S = weighted_sum_S(c.q, c.v, c.H, c.tol);
    t.columns = {"q", "v", "H", "S", "S_minus_H_over_q", "S0", "E_qv", "f"};
    t.rows.push_back({std::to_string(c.q), std::to_string(c.v), general(c.H), general(S),
                      general(S - c.H / double(c.q)), general(S - e.E_qv), general(e.E_qv), general(e.f)});
    return t;
}

Table cmd_predict(const RunConfig& c) {
    Table t;
    auto x = c.x;
    t.add_meta("x", general(x));
    t.add_meta("q", std::to_string(c.q));
    if (x >= 100) {
        t.add_meta("H", general(H_of_x(x)));
        t.add_meta("log_H", general(std::log(H_of_x(x))));
    }
    if (c.what == "pairs") {
        std::vector<std::string> src;
        std::stringstream ss(c.sources);
        for (std::string s; std::getline(ss, s, ',');) {
            if (s != "conjecture" && s != "pipeline-numeric" && s != "pipeline-thm")
                throw ArgumentError("unknown source '" + s + "'");
            src.push_back(s);
        }
        const bool ref = x == 1e12 && c.q == 5;
        t.title = "consecutive pair predictions (J = 1)";
        t.columns = {"a", "b"};
        if (ref) t.columns.insert(t.columns.end(), {"actual", "actual_source"});
        for (auto& s : src) t.columns.push_back(s);
        if (ref)
            for (auto& s : src) t.columns.push_back("err_" + s);
        for (std::uint64_t a = 0; a < c.q; ++a)
            for (std::uint64_t b = 0; b < c.q; ++b) {
                std::vector<std::string> row = {std::to_string(a), std::to_string(b)};
                std::vector<double> p;
                for (auto& s : src) {
                    std::int64_t A = a, B = b;
                    if (s == "conjecture") p.push_back(pair_conjecture(x, c.q, A, B));
                    if (s == "pipeline-numeric") p.push_back(pipeline_D012(x, c.q, A, B, S0Source::numeric));
                    if (s == "pipeline-thm") p.push_back(pipeline_D012(x, c.q, A, B, S0Source::asymptotic_J1));
                }
                double actual = ref ? double(reference_pair_count(int(a), int(b))) : 0;
                if (ref) row.insert(row.end(), {integer(actual), "reference"});
                for (double v : p) row.push_back(integer(v));
                if (ref)
                    for (double v : p) row.push_back(fixed(actual / v, 4));
                t.rows.push_back(std::move(row));
            }
    } else if (c.what == "singles") {
        t.title = "residue class predictions";
        t.columns = {"a", "main", "main_secondary"};
        for (std::uint64_t a = 0; a < c.q; ++a)
            t.rows.push_back({std::to_string(a), integer(ap_prediction(x, c.q, std::int64_t(a), false)),
                              integer(ap_prediction(x, c.q, std::int64_t(a), true))});
    } else if (c.what == "shifted") {
        if (c.h < 1) throw ArgumentError("predict shifted needs --h >= 1");
        t.title = "pairs {n, n + h} with n = a mod q";
        t.columns = {"a", "h", "main", "main_secondary"};
        for (std::uint64_t a = 0; a < c.q; ++a)
            t.rows.push_back({std::to_string(a), std::to_string(c.h),
                              integer(hl_pair_prediction(x, c.q, std::int64_t(a), c.h, false)),
                              integer(hl_pair_prediction(x, c.q, std::int64_t(a), c.h, true))});
    } else if (c.what == "tuple") {
        auto a = parse_list(c.residues, "residues");
        auto k = tuple_constants(c.q, a);
        t.title = "consecutive tuple prediction";
        t.add_meta("residues", c.residues);
        t.columns = {"C_minus1", "C0", "C1", "prediction"};
        t.rows.push_back({general(k.C_minus1), general(k.C0), general(k.C1), general(tuple_conjecture(x, c.q, a))});
    } else if (c.what == "landau") {
        t.title = "count of sums of two squares";
        t.columns = {"x", "J", "prediction"};
        t.add_meta("J", std::to_string(c.J));
        t.rows.push_back({general(x), std::to_string(c.J), integer(landau_refined(x, c.J))});
    } else {
        throw ArgumentError("predict target must be pairs, singles, shifted, tuple or landau");
    }
    return t;
}

QuadratureConfig quad(const RunConfig& c) {
    QuadratureConfig q;
    q.epsilon = c.eps;
    q.nodes = c.nodes;
    return q;
}

void integral_meta(Table& t, const IntegralResult& r) {
    t.add_meta("epsilon", general(r.epsilon));
    t.add_meta("nodes", std::to_string(r.nodes));
    t.add_meta("doubling_delta", general(r.doubling_delta));
}

Table cmd_integral_count(const RunConfig& c) {
    auto r = integral_count(c.x, quad(c));
    Table t;
    t.title = "integral approximation of the count";
    t.add_meta("x", general(c.x));
    integral_meta(t, r);
    t.columns = {"x", "integral", "rounded"};
    t.rows.push_back({general(c.x), general(r.value), integer(r.value)});
    return t;
}

Table cmd_integral_S(const RunConfig& c) {
    auto r = integral_S(c.q, c.v, c.H, quad(c));
    Table t;
    t.title = "integral form of S(q, v; H)";
    t.add_meta("q", std::to_string(c.q));
    t.add_meta("v", std::to_string(c.v));
    t.add_meta("H", general(c.H));
    integral_meta(t, r);
    t.columns = {"q", "v", "H", "S", "S_minus_H_over_q"};
    t.rows.push_back({std::to_string(c.q), std::to_string(c.v), general(c.H), general(r.value), general(r.excess)});
    return t;
}

Table cmd_integral_ktuple(const RunConfig& c) {
    auto r = integral_ktuple_average(c.k, c.H, quad(c));
    Table t;
    t.title = "k-tuple average integral";
    t.add_meta("k", std::to_string(c.k));
    t.add_meta("H", general(c.H));
    integral_meta(t, r);
    t.columns = {"k", "H", "value", "minus_H_pow_k"};
    t.rows.push_back({std::to_string(c.k), general(c.H), general(r.value), general(r.excess)});
    return t;
}

Table cmd_table(const RunConfig& c, const CLI::Option* x_opt) {
    TableOptions o;
    if (x_opt->count()) o.x = c.x;
    o.H = c.table_H;
    o.include_1e6 = c.full;
    o.allow_long_run = c.allow_long_run;
    o.epsilon = c.eps;
    o.sieve = sieve_options(c);
    auto res = reproduce_table(c.table_id, o);
    return res.table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Sums of two squares in arithmetic progressions", "two_squares"};
    app.set_help_flag("--help", "print help");  // -h would clash with --h
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);
    app.add_option("--format", c.format, "csv, md or json")->check(CLI::IsMember({"csv", "md", "json"}));
    app.add_option("--cache-dir", c.cache_dir, "sieve segment cache (env TWO_SQUARES_CACHE)");
    app.add_option("--threads", c.threads, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
    app.add_flag("--include-zero", c.include_zero, "count 0 = 0^2 + 0^2 as a member");
    app.add_flag("--allow-long-run", c.allow_long_run, "permit sieving beyond 1e10");

    auto add_x = [&](CLI::App* s, bool required) {
        auto o = s->add_option("--x", c.x, "upper limit");
        if (required) o->required();
        return o;
    };
    auto add_q = [&](CLI::App* s) { s->add_option("--q", c.q, "prime modulus, 1 mod 4"); };

    auto* sieve = app.add_subcommand("sieve-count", "count sums of two squares up to x");
    add_x(sieve, true);
    auto* pairs = app.add_subcommand("pairs", "consecutive pairs by residue class");
    add_x(pairs, true);
    add_q(pairs);
    auto* tuples = app.add_subcommand("tuples", "consecutive r-tuples by residue class");
    add_x(tuples, true);
    add_q(tuples);
    tuples->add_option("--r", c.r, "tuple length")->check(CLI::Range(1, kMaxTupleLength));
    auto* gaps = app.add_subcommand("gaps", "gap histogram");
    add_x(gaps, true);
    auto* consts = app.add_subcommand("constants", "constants bundle with provenance");
    add_q(consts);
    consts->add_option("--source", c.source, "published or numeric j >= 2 coefficients");
    consts->add_flag("--json", [&](std::int64_t) { c.format = "json"; }, "same as --format json");
    auto* sing = app.add_subcommand("singular", "singular series of a tuple");
    sing->add_option("--h", c.h, "shift for {0, h}");
    sing->add_option("--tuple", c.tuple, "comma-separated offsets");
    sing->add_option("--cutoff", c.cutoff, "explicit prime cutoff");
    auto* ws = app.add_subcommand("weighted-sum", "S(q, v; H)");
    add_q(ws);
    ws->add_option("--v", c.v, "residue");
    ws->add_option("--H", c.H, "scale")->required();
    ws->add_option("--tol", c.tol, "relative truncation tolerance")->check(CLI::Range(1e-14, 1e-2));
    ws->add_flag("--total", c.total, "sum over all h");
    auto* pred = app.add_subcommand("predict", "conjectural predictions");
    pred->add_option("what", c.what, "pairs, singles, shifted, tuple or landau");
    add_x(pred, false);
    add_q(pred);
    pred->add_option("--sources", c.sources, "pairs: conjecture,pipeline-numeric,pipeline-thm");
    pred->add_option("--h", c.h, "shift for 'shifted'");
    pred->add_option("--residues", c.residues, "tuple residues, comma-separated");
    pred->add_option("--J", c.J, "landau: number of secondary terms (0 or 1)");
    auto* ic = app.add_subcommand("integral-count", "integral approximation of the count");
    add_x(ic, true);
    auto* is = app.add_subcommand("integral-S", "integral form of S(q, v; H)");
    add_q(is);
    is->add_option("--v", c.v, "residue");
    is->add_option("--H", c.H, "scale")->required();
    auto* ik = app.add_subcommand("integral-ktuple", "k-tuple average integral");
    ik->add_option("--k", c.k, "tuple size");
    ik->add_option("--H", c.H, "scale")->required();
    for (auto* s : {ic, is, ik}) {
        s->add_option("--eps", c.eps, "lower endpoint offset");
        s->add_option("--nodes", c.nodes, "Gauss-Legendre nodes per piece");
    }
    auto* table = app.add_subcommand("table", "reproduce a numbered table");
    table->add_option("--id", c.table_id, "1..7")->required()->check(CLI::Range(1, 7));
    auto* table_x = add_x(table, false);
    table->add_option("--H", c.table_H, "rows for tables 6 and 7");
    table->add_option("--eps", c.eps, "epsilon for the integral-form column");
    table->add_flag("--full", c.full, "tables 6 and 7: add H = 1e6");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c.cache_dir.empty())
            if (const char* env = std::getenv("TWO_SQUARES_CACHE")) c.cache_dir = env;
        if (c.threads > 0) omp_set_num_threads(c.threads);
        c.threads = omp_get_max_threads();
        auto fmt = parse_format(c.format);

        Table t;
        std::string cmd = app.get_subcommands().front()->get_name();
        if (sieve->parsed()) t = cmd_sieve_count(c);
        else if (pairs->parsed()) t = cmd_tuples(c, 2);
        else if (tuples->parsed()) t = cmd_tuples(c, c.r);
        else if (gaps->parsed()) t = cmd_gaps(c);
        else if (consts->parsed()) t = cmd_constants(c);
        else if (sing->parsed()) t = cmd_singular(c);
        else if (ws->parsed()) t = cmd_weighted_sum(c);
        else if (pred->parsed()) t = cmd_predict(c);
        else if (ic->parsed()) t = cmd_integral_count(c);
        else if (is->parsed()) t = cmd_integral_S(c);
        else if (ik->parsed()) t = cmd_integral_ktuple(c);
        else if (table->parsed()) t = cmd_table(c, table_x);
        base_meta(t, c, cmd);
        render(t, fmt, out);
        return 0;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TruncatedError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace twosq::cli
