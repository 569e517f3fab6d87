#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperdiv/diophantine.hpp"
#include "hyperdiv/errfit.hpp"
#include "hyperdiv/errors.hpp"
#include "hyperdiv/expsum.hpp"
#include "hyperdiv/numeric.hpp"
#include "hyperdiv/vaaler.hpp"
#include "hyperdiv/vandercorput.hpp"

using json = nlohmann::ordered_json;
using namespace hyperdiv;

namespace {

// --- output plumbing ---

struct Global {
    std::string format = "csv";
    std::string output;
    unsigned threads = 1;
    u64 seed = 12345;

    bool is_json() const { return format == "json"; }
};

// Full-precision decimal form; 17 significant digits round-trip a double.
std::string fd(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Output {
  public:
    explicit Output(const Global& g) {
        if (!g.output.empty() && g.output != "-") {
            file_.open(g.output);
            if (!file_) throw DomainError("cannot open output path " + g.output);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void emit_report(const Global& g, const BoundCheckReport& rep) {
    Output out(g);
    if (g.is_json()) {
        json j;
        j["sum_modulus"] = rep.sum_modulus;
        j["bound_value"] = rep.bound_value;
        j["ratio"] = rep.ratio;
        j["params"] = rep.params;
        out.stream() << j.dump(2) << "\n";
    } else {
        out.stream() << "sum_modulus,bound_value,ratio,params\n"
                     << fd(rep.sum_modulus) << ',' << fd(rep.bound_value) << ','
                     << fd(rep.ratio) << ',' << rep.params << "\n";
    }
}

std::vector<cplx> random_unimodular(u64 seed, u64 stream, std::size_t n) {
    std::mt19937_64 gen(mix_seed(seed, stream));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<cplx> z(n);
    for (cplx& w : z) w = unit_phase(uni(gen));
    return z;
}

std::vector<double> random_unit_interval(u64 seed, u64 stream, std::size_t n) {
    std::mt19937_64 gen(mix_seed(seed, stream));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> v(n);
    for (double& t : v) t = uni(gen);
    return v;
}

// Residual-grid CSV rows (x,t,residual); the first line may be a header.
std::vector<TsumRecord> read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file " + path);
    std::vector<TsumRecord> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        try {
            if (fields.size() != 3) throw std::runtime_error("expected 3 fields");
            TsumRecord rec;
            rec.x = std::stoull(fields[0]);
            rec.t_value = std::stoll(fields[1]);
            rec.residual = std::stod(fields[2]);
            if (!std::isfinite(rec.residual))
                throw std::runtime_error("non-finite residual");
            pts.push_back(rec);
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception& e) {
            if (lineno == 1) continue;  // header row
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return pts;
}

TailMode parse_mode(const std::string& mode) {
    return mode == "crude" ? TailMode::crude : TailMode::abel;
}

// H,M,N in {4,8,16,32} crossed with X in {10,10^2,10^3,10^4}; exponents and
// shift taken from the template point.
std::vector<SweepPoint> default_sweep_grid(const SweepPoint& tmpl) {
    const u64 sides[] = {4, 8, 16, 32};
    const double xs[] = {10.0, 100.0, 1000.0, 10000.0};
    std::vector<SweepPoint> grid;
    for (u64 h : sides)
        for (u64 m : sides)
            for (u64 n : sides)
                for (double x : xs) {
                    SweepPoint p = tmpl;
                    p.H = h;
                    p.M = m;
                    p.N = n;
                    p.X = x;
                    grid.push_back(p);
                }
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic divisor sums, Dirichlet error, and exponential sum checks"};
    app.require_subcommand(1);

    Global g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", g.output, "output path, '-' for stdout");
    app.add_option("--threads", g.threads, "worker threads")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized inputs")->capture_default_str();

    // --- sieve ---
    u64 sieve_limit = 0;
    CLI::App* sieve = app.add_subcommand("sieve", "tau table rows n,tau,D,delta");
    sieve->fallthrough();
    sieve->add_option("--limit", sieve_limit, "table size")->required();
    sieve->callback([&] {
        const DivisorTable table = build_divisor_table(sieve_limit);
        Output out(g);
        if (g.is_json()) {
            json rows = json::array();
            for (u64 n = 1; n <= sieve_limit; ++n) {
                json r;
                r["n"] = n;
                r["tau"] = table.tau_at(n);
                r["D"] = table.prefix_at(n);
                r["delta"] = delta(table, n);
                rows.push_back(std::move(r));
            }
            json j;
            j["limit"] = sieve_limit;
            j["rows"] = std::move(rows);
            out.stream() << j.dump(2) << "\n";
        } else {
            out.stream() << "n,tau,D,delta\n";
            for (u64 n = 1; n <= sieve_limit; ++n) {
                out.stream() << n << ',' << table.tau_at(n) << ',' << table.prefix_at(n)
                             << ',' << fd(delta(table, n)) << "\n";
            }
        }
    });

    // --- tsum ---
    u64 tsum_x = 0;
    std::string tsum_method = "blocked";
    CLI::App* tsum = app.add_subcommand("tsum", "exact hyperbolic sum T(x)");
    tsum->fallthrough();
    tsum->add_option("--x", tsum_x, "evaluation point")->required();
    tsum->add_option("--method", tsum_method, "evaluation method")
        ->check(CLI::IsMember({"naive2d", "single", "blocked"}))
        ->capture_default_str();
    tsum->callback([&] {
        const TsumMethod method = tsum_method == "naive2d" ? TsumMethod::naive2d
                                  : tsum_method == "single" ? TsumMethod::single
                                                            : TsumMethod::blocked;
        const DivisorTable table = build_divisor_table(tsum_x);
        const i64 t = t_exact(table, tsum_x, method);
        Output out(g);
        if (g.is_json()) {
            json j;
            j["x"] = tsum_x;
            j["method"] = tsum_method;
            j["t"] = t;
            out.stream() << j.dump(2) << "\n";
        } else {
            out.stream() << t << "\n";
        }
    });

    // --- residual ---
    std::vector<int> res_pow2;
    std::vector<u64> res_xs;
    u64 res_cutoff = 1000000;
    std::string res_mode = "abel";
    CLI::App* res = app.add_subcommand("residual", "T(x) - c1 x log x - c2 x grid");
    res->fallthrough();
    CLI::Option* opt_pow = res->add_option("--x-pow2", res_pow2, "grid 2^LO..2^HI")
                               ->expected(2);
    res->add_option("--xs", res_xs, "explicit grid points")
        ->delimiter(',')
        ->excludes(opt_pow);
    res->add_option("--cutoff", res_cutoff, "constants cutoff")->capture_default_str();
    res->add_option("--mode", res_mode, "constants tail mode")
        ->check(CLI::IsMember({"crude", "abel"}))
        ->capture_default_str();
    res->callback([&] {
        std::vector<u64> xs = res_xs;
        if (!res_pow2.empty()) {
            if (res_pow2[0] < 0 || res_pow2[1] < res_pow2[0] || res_pow2[1] > 62)
                throw DomainError("--x-pow2 needs 0 <= LO <= HI <= 62");
            for (int k = res_pow2[0]; k <= res_pow2[1]; ++k) xs.push_back(u64(1) << k);
        }
        if (xs.empty()) throw DomainError("residual needs --x-pow2 or --xs");
        u64 limit = res_cutoff;
        for (u64 x : xs) limit = std::max(limit, x);
        const DivisorTable table = build_divisor_table(limit);
        const RigorousValue c1 = compute_c1(table, res_cutoff, parse_mode(res_mode));
        const RigorousValue c3 = compute_c3(table, res_cutoff, parse_mode(res_mode));
        const RigorousValue c2 = compute_c2(c1, c3);
        const auto rows = residual_grid(table, c1, c2, xs, g.threads);
        Output out(g);
        if (g.is_json()) {
            json jrows = json::array();
            for (const TsumRecord& r : rows) {
                json jr;
                jr["x"] = r.x;
                jr["t"] = r.t_value;
                jr["residual"] = r.residual;
                jrows.push_back(std::move(jr));
            }
            json j;
            j["cutoff"] = res_cutoff;
            j["mode"] = res_mode;
            j["rows"] = std::move(jrows);
            out.stream() << j.dump(2) << "\n";
        } else {
            out.stream() << "x,t,residual\n";
            for (const TsumRecord& r : rows)
                out.stream() << r.x << ',' << r.t_value << ',' << fd(r.residual) << "\n";
        }
    });

    // --- fit ---
    std::string fit_input;
    CLI::App* fit = app.add_subcommand("fit", "power-law fit of residual CSV");
    fit->fallthrough();
    fit->add_option("--input", fit_input, "residual CSV path")->required();
    fit->callback([&] {
        const FitReport rep = fit_exponent(read_points(fit_input));
        Output out(g);
        if (g.is_json()) {
            json j;
            j["points"] = rep.points.size();
            j["dropped"] = rep.dropped;
            j["theta_hat"] = rep.theta_hat;
            j["c_hat"] = rep.c_hat;
            j["max_normalized"] = rep.max_normalized;
            out.stream() << j.dump(2) << "\n";
        } else {
            out.stream() << "points,dropped,theta_hat,c_hat,max_normalized\n"
                         << rep.points.size() << ',' << rep.dropped << ','
                         << fd(rep.theta_hat) << ',' << fd(rep.c_hat) << ','
                         << fd(rep.max_normalized) << "\n";
        }
    });

    // --- constants ---
    u64 con_cutoff = 1000000;
    std::string con_mode = "abel";
    CLI::App* con = app.add_subcommand("constants", "certified C1, C2, C3");
    con->fallthrough();
    con->add_option("--cutoff", con_cutoff, "series cutoff")->capture_default_str();
    con->add_option("--mode", con_mode, "tail mode")
        ->check(CLI::IsMember({"crude", "abel"}))
        ->capture_default_str();
    con->callback([&] {
        const DivisorTable table = build_divisor_table(con_cutoff);
        const RigorousValue c1 = compute_c1(table, con_cutoff, parse_mode(con_mode));
        const RigorousValue c3 = compute_c3(table, con_cutoff, parse_mode(con_mode));
        const RigorousValue c2 = compute_c2(c1, c3);
        Output out(g);
        if (g.is_json()) {
            json j;
            j["c1"] = c1.value;
            j["c1_tail"] = c1.tail;
            j["c3"] = c3.value;
            j["c3_tail"] = c3.tail;
            j["c2"] = c2.value;
            j["c2_tail"] = c2.tail;
            j["cutoff"] = con_cutoff;
            j["mode"] = con_mode;
            out.stream() << j.dump(2) << "\n";
        } else {
            out.stream() << "c1,c1_tail,c3,c3_tail,c2,c2_tail,cutoff,mode\n"
                         << fd(c1.value) << ',' << fd(c1.tail) << ',' << fd(c3.value)
                         << ',' << fd(c3.tail) << ',' << fd(c2.value) << ','
                         << fd(c2.tail) << ',' << con_cutoff << ',' << con_mode << "\n";
        }
    });

    // --- expsum ---
    std::string es_op;
    u64 es_H = 4, es_M = 4, es_N = 4, es_d1 = 1, es_d2 = 1, es_l = 1;
    u64 es_K = 64, es_Ldls = 64, es_n = 64;
    double es_X = 10.0, es_x = 0.0, es_alpha = 0.5, es_beta = 0.5, es_gamma = 0.5;
    double es_delta = 0.0, es_D = 1.0, es_Lhyp = 1.0, es_eps = 0.0, es_k = 2.0;
    int es_shift = 0, es_qpts = 4000;
    std::string es_kind = "thm_S";
    CLI::App* es = app.add_subcommand("expsum", "perturbed exponential sums and bounds");
    es->fallthrough();
    es->add_option("--op", es_op, "S, Sstar, frakS, bound, sweep, dls, maxineq")
        ->check(CLI::IsMember({"S", "Sstar", "frakS", "bound", "sweep", "dls", "maxineq"}))
        ->required();
    es->add_option("--H", es_H, "dyadic h-range start")->capture_default_str();
    es->add_option("--M", es_M, "dyadic m-range start")->capture_default_str();
    es->add_option("--N", es_N, "dyadic n-range start")->capture_default_str();
    es->add_option("--X", es_X, "phase scale")->capture_default_str();
    es->add_option("--x", es_x, "frakS / proposition argument");
    es->add_option("--alpha", es_alpha, "h exponent")->capture_default_str();
    es->add_option("--beta", es_beta, "mn exponent")->capture_default_str();
    es->add_option("--gamma", es_gamma, "n exponent (rs3d)")->capture_default_str();
    es->add_option("--delta", es_delta, "phase shift")->capture_default_str();
    es->add_option("--d1", es_d1, "frakS d1-range start")->capture_default_str();
    es->add_option("--d2", es_d2, "frakS d2-range start")->capture_default_str();
    es->add_option("--l", es_l, "frakS l-range start")->capture_default_str();
    es->add_option("--shift", es_shift, "frakS shift, 0 or 1")->capture_default_str();
    es->add_option("--kind", es_kind, "bound formula")
        ->check(CLI::IsMember({"thm_S", "thm_Sstar", "rs3d", "proposition"}))
        ->capture_default_str();
    es->add_option("--D", es_D, "proposition D")->capture_default_str();
    es->add_option("--L-hyp", es_Lhyp, "proposition hypothesis L")->capture_default_str();
    es->add_option("--eps", es_eps, "bound epsilon")->capture_default_str();
    es->add_option("--K", es_K, "dls u-sequence length")->capture_default_str();
    es->add_option("--L", es_Ldls, "dls v-sequence length")->capture_default_str();
    es->add_option("--n", es_n, "maxineq sequence length")->capture_default_str();
    es->add_option("--k", es_k, "maxineq moment")->capture_default_str();
    es->add_option("--qpts", es_qpts, "maxineq quadrature points")->capture_default_str();
    es->callback([&] {
        const auto parse_kind = [&]() -> BoundKind {
            if (es_kind == "thm_S") return BoundKind::thm_S;
            if (es_kind == "thm_Sstar") return BoundKind::thm_Sstar;
            if (es_kind == "rs3d") return BoundKind::rs3d;
            return BoundKind::proposition;
        };
        ExpSumSpec spec;
        spec.H = es_H;
        spec.M = es_M;
        spec.N = es_N;
        spec.X = es_X;
        spec.alpha = es_alpha;
        spec.beta = es_beta;
        spec.delta = es_delta;
        Output out(g);
        if (es_op == "S" || es_op == "frakS") {
            const cplx v = es_op == "S" ? eval_S(spec)
                                        : eval_frak_S(es_x, es_d1, es_d2, es_l, es_H, es_shift);
            if (g.is_json()) {
                json j;
                j["re"] = v.real();
                j["im"] = v.imag();
                j["modulus"] = std::abs(v);
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << "re,im,modulus\n"
                             << fd(v.real()) << ',' << fd(v.imag()) << ','
                             << fd(std::abs(v)) << "\n";
            }
        } else if (es_op == "Sstar") {
            const double v = eval_S_star(spec);
            if (g.is_json()) {
                json j;
                j["value"] = v;
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << "value\n" << fd(v) << "\n";
            }
        } else if (es_op == "bound") {
            BoundParams p;
            p.H = double(es_H);
            p.M = double(es_M);
            p.N = double(es_N);
            p.X = es_X;
            p.x = es_x;
            p.D = es_D;
            p.L = es_Lhyp;
            const double b = theoretical_bound(parse_kind(), p, es_eps);
            if (g.is_json()) {
                json j;
                j["kind"] = es_kind;
                j["bound"] = b;
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << "kind,bound\n" << es_kind << ',' << fd(b) << "\n";
            }
        } else if (es_op == "sweep") {
            SweepPoint tmpl;
            tmpl.alpha = es_alpha;
            tmpl.beta = es_beta;
            tmpl.gamma = es_gamma;
            tmpl.delta = es_delta;
            const SweepResult sw =
                bound_sweep(parse_kind(), default_sweep_grid(tmpl), es_eps, g.seed, g.threads);
            if (g.is_json()) {
                json reports = json::array();
                for (const BoundCheckReport& r : sw.reports) {
                    json jr;
                    jr["sum_modulus"] = r.sum_modulus;
                    jr["bound_value"] = r.bound_value;
                    jr["ratio"] = r.ratio;
                    jr["params"] = r.params;
                    reports.push_back(std::move(jr));
                }
                json j;
                j["kind"] = es_kind;
                j["max_ratio"] = sw.max_ratio;
                j["errors"] = sw.errors;
                j["reports"] = std::move(reports);
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << "sum_modulus,bound_value,ratio,params\n";
                for (const BoundCheckReport& r : sw.reports)
                    out.stream() << fd(r.sum_modulus) << ',' << fd(r.bound_value) << ','
                                 << fd(r.ratio) << ',' << r.params << "\n";
            }
        } else if (es_op == "dls") {
            const auto u = random_unit_interval(g.seed, 1, es_K);
            const auto v = random_unit_interval(g.seed, 2, es_Ldls);
            const auto a = random_unimodular(g.seed, 3, es_K);
            const auto b = random_unimodular(g.seed, 4, es_Ldls);
            emit_report(g, double_large_sieve_check(u, v, a, b, es_X));
        } else {
            const auto z = random_unimodular(g.seed, 5, es_n);
            emit_report(g, maximal_inequality_check(z, es_k, es_qpts));
        }
    });

    // --- dio ---
    std::string dio_op = "count", dio_counter, dio_method = "sorted";
    u64 dio_L = 1, dio_M = 1, dio_N = 1;
    double dio_X = 1.0, dio_beta = 1.0, dio_delta = 0.0, dio_alpha = 2.0, dio_Q = 100.0;
    CLI::App* dio = app.add_subcommand("dio", "Diophantine proximity counts");
    dio->fallthrough();
    dio->add_option("--op", dio_op, "count, minsum, b3sweep")
        ->check(CLI::IsMember({"count", "minsum", "b3sweep"}))
        ->capture_default_str();
    dio->add_option("--counter", dio_counter, "b3, b4, b5");
    dio->add_option("--counter-method", dio_method, "brute or sorted")
        ->check(CLI::IsMember({"brute", "sorted"}))
        ->capture_default_str();
    dio->add_option("--L", dio_L, "range size L")->capture_default_str();
    dio->add_option("--M", dio_M, "range size M")->capture_default_str();
    dio->add_option("--N", dio_N, "range size N")->capture_default_str();
    dio->add_option("--X", dio_X, "window scale X")->capture_default_str();
    dio->add_option("--beta", dio_beta, "power exponent")->capture_default_str();
    dio->add_option("--delta", dio_delta, "perturbation shift")->capture_default_str();
    dio->add_option("--alpha", dio_alpha, "minsum phase exponent")->capture_default_str();
    dio->add_option("--Q", dio_Q, "minsum clip value")->capture_default_str();
    dio->callback([&] {
        Output out(g);
        if (dio_op == "count") {
            if (dio_counter != "b3" && dio_counter != "b4" && dio_counter != "b5")
                throw DomainError("dio count needs --counter b3, b4, or b5");
            CountQuery q;
            q.L = dio_L;
            q.M = dio_M;
            q.N = dio_N;
            q.X = dio_X;
            q.beta = dio_beta;
            q.delta = dio_delta;
            q.method = dio_method == "brute" ? CountMethod::brute : CountMethod::sorted;
            const CountResult r = dio_counter == "b3"   ? count_b3(q)
                                  : dio_counter == "b4" ? count_b4(q)
                                                        : count_b5(q);
            if (g.is_json()) {
                json j;
                j["counter"] = dio_counter;
                j["L"] = q.L;
                j["M"] = q.M;
                j["N"] = q.N;
                j["X"] = q.X;
                j["beta"] = q.beta;
                j["delta"] = q.delta;
                j["count"] = r.count;
                j["fuzz_count"] = r.fuzz_count;
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << "counter,L,M,N,X,beta,delta,count,fuzz_count\n"
                             << dio_counter << ',' << q.L << ',' << q.M << ',' << q.N
                             << ',' << fd(q.X) << ',' << fd(q.beta) << ',' << fd(q.delta)
                             << ',' << r.count << ',' << r.fuzz_count << "\n";
            }
        } else if (dio_op == "minsum") {
            PhaseSpec phase;
            phase.alpha = dio_alpha;
            phase.X = dio_X;
            phase.M = dio_M;
            emit_report(g, min_reciprocal_sum(phase, dio_N, dio_Q));
        } else {
            const u64 els[] = {8, 16, 32, 64};
            const double betas[] = {0.5, 1.5, -1.0};
            double max_ratio = 0.0;
            json rows = json::array();
            std::ostringstream csv;
            csv << "L,beta,X,count,shape_bound,ratio\n";
            for (u64 L : els)
                for (double beta : betas)
                    for (int p = 1; p <= 3; ++p) {
                        const double X = std::pow(double(L), p);
                        CountQuery q;
                        q.L = L;
                        q.X = X;
                        q.beta = beta;
                        q.method = CountMethod::sorted;
                        const CountResult r = count_b3(q);
                        const double ld = double(L);
                        const double shape = ld * ld * ld * ld * (1.0 / (ld * ld) + 1.0 / X);
                        const double ratio = double(r.count) / shape;
                        max_ratio = std::max(max_ratio, ratio);
                        if (g.is_json()) {
                            json jr;
                            jr["L"] = L;
                            jr["beta"] = beta;
                            jr["X"] = X;
                            jr["count"] = r.count;
                            jr["shape_bound"] = shape;
                            jr["ratio"] = ratio;
                            rows.push_back(std::move(jr));
                        } else {
                            csv << L << ',' << fd(beta) << ',' << fd(X) << ',' << r.count
                                << ',' << fd(shape) << ',' << fd(ratio) << "\n";
                        }
                    }
            if (g.is_json()) {
                json j;
                j["max_ratio"] = max_ratio;
                j["rows"] = std::move(rows);
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << csv.str();
            }
        }
    });

    // --- vaaler ---
    int va_samples = 1000, va_H = 10;
    CLI::App* va = app.add_subcommand("vaaler", "sawtooth approximation sample table");
    va->fallthrough();
    va->add_option("--samples", va_samples, "random sample count")->capture_default_str();
    va->add_option("--H", va_H, "approximation degree")->capture_default_str();
    va->callback([&] {
        if (va_samples < 1) throw DomainError("vaaler needs --samples >= 1");
        std::mt19937_64 gen(mix_seed(g.seed, 0));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        Output out(g);
        u64 violations = 0;
        json rows = json::array();
        std::ostringstream csv;
        csv << "x,psi,approx,envelope,ok\n";
        for (int i = 0; i < va_samples; ++i) {
            const VaalerEval e = evaluate_vaaler(uni(gen), va_H);
            const bool ok = std::fabs(e.true_psi - e.approx) <= e.envelope + 1e-12;
            if (!ok) ++violations;
            if (g.is_json()) {
                json jr;
                jr["x"] = e.x;
                jr["psi"] = e.true_psi;
                jr["approx"] = e.approx;
                jr["envelope"] = e.envelope;
                jr["ok"] = ok;
                rows.push_back(std::move(jr));
            } else {
                csv << fd(e.x) << ',' << fd(e.true_psi) << ',' << fd(e.approx) << ','
                    << fd(e.envelope) << ',' << (ok ? 1 : 0) << "\n";
            }
        }
        if (g.is_json()) {
            json j;
            j["H"] = va_H;
            j["samples"] = va_samples;
            j["violations"] = violations;
            j["rows"] = std::move(rows);
            out.stream() << j.dump(2) << "\n";
        } else {
            out.stream() << csv.str();
        }
    });

    // --- vdc ---
    std::string vdc_op;
    double vdc_alpha = 2.0, vdc_X = 1.0, vdc_a = 0.0, vdc_b = 0.0, vdc_lambda = 0.25;
    double vdc_rho_at = 0.0;
    u64 vdc_M = 1;
    CLI::App* vdc = app.add_subcommand("vdc", "phase transform and derivative checks");
    vdc->fallthrough();
    vdc->add_option("--op", vdc_op, "kl, bprocess, dependence")
        ->check(CLI::IsMember({"kl", "bprocess", "dependence"}))
        ->required();
    vdc->add_option("--alpha", vdc_alpha, "phase exponent")->capture_default_str();
    vdc->add_option("--X", vdc_X, "phase scale")->capture_default_str();
    vdc->add_option("--M", vdc_M, "phase reference scale")->capture_default_str();
    vdc->add_option("--a", vdc_a, "range start (default M)");
    vdc->add_option("--b", vdc_b, "range end (default 2M)");
    vdc->add_option("--lambda", vdc_lambda, "kl derivative separation")->capture_default_str();
    CLI::Option* opt_rho = vdc->add_option("--rho-at", vdc_rho_at, "evaluate rho here");
    vdc->callback([&] {
        PhaseSpec phase;
        phase.alpha = vdc_alpha;
        phase.X = vdc_X;
        phase.M = vdc_M;
        const double a = vdc_a != 0.0 ? vdc_a : double(vdc_M);
        const double b = vdc_b != 0.0 ? vdc_b : 2.0 * double(vdc_M);
        Output out(g);
        if (vdc_op == "kl") {
            const auto f = [&phase](double t) { return phase.f(t); };
            const auto fp = [&phase](double t) { return phase.fprime(t); };
            emit_report(g, kusmin_landau_ratio(f, fp, i64(std::llround(a)),
                                               i64(std::llround(b)), vdc_lambda));
        } else if (vdc_op == "bprocess") {
            const BProcessResult r = b_process_compare(phase, a, b);
            if (g.is_json()) {
                json j;
                j["lhs_re"] = r.lhs.real();
                j["lhs_im"] = r.lhs.imag();
                j["main_re"] = r.main_term.real();
                j["main_im"] = r.main_term.imag();
                j["error_budget"] = r.error_budget;
                j["discrepancy"] = r.discrepancy;
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << "lhs_re,lhs_im,main_re,main_im,error_budget,discrepancy\n"
                             << fd(r.lhs.real()) << ',' << fd(r.lhs.imag()) << ','
                             << fd(r.main_term.real()) << ',' << fd(r.main_term.imag())
                             << ',' << fd(r.error_budget) << ',' << fd(r.discrepancy)
                             << "\n";
            }
        } else {
            const DependenceParams dp = dependence_params(vdc_alpha, vdc_X, vdc_M);
            const bool has_rho = opt_rho->count() > 0;
            if (g.is_json()) {
                json j;
                j["L"] = dp.L;
                j["L1"] = dp.L1;
                if (has_rho) j["rho"] = dp.rho(vdc_rho_at);
                out.stream() << j.dump(2) << "\n";
            } else {
                if (has_rho) {
                    out.stream() << "L,L1,rho\n"
                                 << dp.L << ',' << dp.L1 << ',' << fd(dp.rho(vdc_rho_at))
                                 << "\n";
                } else {
                    out.stream() << "L,L1\n" << dp.L << ',' << dp.L1 << "\n";
                }
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
