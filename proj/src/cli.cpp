#include "qfock/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "qfock/exec.hpp"
#include "qfock/expr.hpp"
#include "qfock/heis.hpp"
#include "qfock/tensor.hpp"
#include "qfock/vertex.hpp"

namespace qfock {
namespace {

using ojson = nlohmann::ordered_json;

ojson laurent_jobj(const Laurent& c) {
    ojson a = ojson::array();
    for (const auto& [e, r] : c.terms()) a.push_back({e, r.get_str()});
    return a;
}

ojson fock_jobj(const FockVec& v) {
    ojson arr = ojson::array();
    for (const auto& [head, c] : v.terms) {
        ojson t;
        t["charge"] = v.charge;
        t["head"] = head;
        t["coeff"] = laurent_jobj(c);
        arr.push_back(t);
    }
    return arr;
}

ojson report_jobj(const Report& r) {
    ojson o;
    ojson checks = ojson::array();
    for (const auto& [name, pass] : r.checks) {
        ojson c;
        c["name"] = name;
        c["ok"] = pass;
        checks.push_back(c);
    }
    o["checks"] = checks;
    o["ok"] = r.ok();
    return o;
}

int finish_report(const Report& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << report_jobj(r).dump(2) << "\n";
    } else {
        for (const auto& [name, pass] : r.checks) out << (pass ? "ok   " : "FAIL ") << name << "\n";
    }
    return r.ok() ? 0 : 1;
}

void fock_out(const FockVec& v, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << fock_jobj(v).dump(2) << "\n";
    else
        out << fock_str(v) << "\n";
}

void coeffs_out(const std::vector<RatFn>& c, const std::string& format, std::ostream& out) {
    if (format == "json") {
        ojson a = ojson::array();
        for (std::size_t k = 0; k < c.size(); ++k) a.push_back({k, c[k].str()});
        out << a.dump(2) << "\n";
    } else {
        for (std::size_t k = 0; k < c.size(); ++k) out << "w^" << k << ": " << c[k].str() << "\n";
    }
}

std::vector<RatFn> series_coeffs(const Series& s) {
    std::vector<RatFn> c;
    for (int k = 0; k <= s.order(); ++k) c.push_back(s[k]);
    return c;
}

// Smallest kmax whose next product factor only touches q-degrees above the
// window 40, plus one factor of margin.
int stable_kmax(int n) {
    int k = 0;
    while (2 * n * (k + 2) <= 40) ++k;
    return k + 1;
}

Report run_suite(const std::string& which, int n, int samples, std::uint64_t seed) {
    Rng rng(seed);
    Report r;
    if (which == "hecke" || which == "all") {
        for (int N : {2, 3}) r.merge(verify_hecke_relations(n, N, samples, rng));
        for (int N : {2, 3}) {
            r.merge(verify_centrality(n, N, 1, samples, rng));
            r.merge(verify_centrality(n, N, -2, samples, rng));
        }
    }
    if (which == "relations" || which == "all") r.merge(verify_defining_relations(n, samples, rng));
    if (which == "intertwining" || which == "all")
        for (int N : {2, 3}) r.merge(verify_intertwining(n, N, samples, rng));
    if (which == "heisenberg" || which == "all") r.merge(verify_heisenberg(n, samples, rng));
    if (which == "gamma" || which == "all") r.merge(verify_gamma(n, 3, 2));
    if (which == "factorization" || which == "all") {
        int kmax = stable_kmax(n);
        r.merge(verify_factorization(n, 0, 6, kmax, 40));
        r.merge(extract_gamma(n, 0, 6, kmax, 40));
        r.merge(verify_xi_commutation(n, 8, 2, 2, 2));
    }
    if (which == "classical" || which == "all") r.merge(verify_classical(n, 100, rng));
    return r;
}

Report hecke_oracle(int n, int N, int samples, std::uint64_t seed) {
    Rng rng(seed);
    Report r;
    r.merge(verify_hecke_relations(n, N, samples, rng));
    r.merge(verify_centrality(n, N, 1, samples, rng));
    r.merge(verify_centrality(n, N, -2, samples, rng));
    r.merge(verify_intertwining(n, N, samples, rng));
    if (N <= 3) {
        bool ok = true;
        Laurent scal = antisym_scalar(N);
        for (int s = 0; s < samples; ++s) {
            std::vector<long> w;
            for (int k = 0; k < N; ++k) w.push_back(rng.range(-4, 6));
            long charge = rng.range(-2, 2);
            TensorVec aw = antisymmetrize(tensor_unit(n, w));
            FockVec lhs = fock_zero(n, charge);
            for (const auto& [word, c] : aw.terms) lhs += c * straighten(word, charge, n);
            ok = ok && lhs == scal * straighten(w, charge, n);
        }
        r.add("antisymmetrized words straighten to the scalar multiple (n=" + std::to_string(n) +
                  ", N=" + std::to_string(N) + ")",
              ok);
    }
    return r;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact level-1 Fock representation engine", "qfock"};
    app.require_subcommand(1);

    int n = 2;
    long charge = 0;
    long a = 1;
    int order = 6;
    int kmax = 8;
    long depth = 2;
    int sites = 2;
    int samples = 10;
    std::uint64_t seed = 0;
    bool serial = false;
    std::string format = "text";
    std::string op_src, vec_src;
    std::string which = "check";
    std::string suite;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", n, "algebra rank (>= 2)");
        sub->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--serial", serial, "force the serial execution path");
    };

    CLI::App* s_act = app.add_subcommand("act", "apply an operator expression to a vector");
    common(s_act);
    s_act->add_option("--op", op_src, "operator expression")->required();
    s_act->add_option("--vec", vec_src, "vector expression")->required();

    CLI::App* s_norm = app.add_subcommand("normal-order", "straighten a wedge expression");
    common(s_norm);
    s_norm->add_option("--vec", vec_src, "vector expression")->required();

    CLI::App* s_bop = app.add_subcommand("bop", "apply the Heisenberg mode B_a");
    common(s_bop);
    s_bop->add_option("--a", a, "mode index, nonzero")->required();
    s_bop->add_option("--vec", vec_src, "vector expression")->required();

    CLI::App* s_gamma = app.add_subcommand("gamma", "central value gamma_a of [B_a, B_-a]");
    common(s_gamma);
    s_gamma->add_option("--a", a, "mode index, positive");

    CLI::App* s_two = app.add_subcommand("two-point", "two-point overlap series and factorization");
    common(s_two);
    s_two->add_option("--charge", charge, "vacuum charge m");
    s_two->add_option("--order", order, "series truncation order");
    s_two->add_option("--kmax", kmax, "product truncation index");
    s_two->add_option("--which", which, "omega, phi, xi, or check")
        ->check(CLI::IsMember({"omega", "phi", "xi", "check"}));

    CLI::App* s_basis = app.add_subcommand("basis", "canonical wedges of one charge and size");
    common(s_basis);
    s_basis->add_option("--charge", charge, "charge");
    s_basis->add_option("--a", a, "partition size");

    CLI::App* s_sing = app.add_subcommand("singular", "singular vectors up to a depth");
    common(s_sing);
    s_sing->add_option("--charge", charge, "vacuum charge");
    s_sing->add_option("--depth", depth, "maximum degree");

    CLI::App* s_oracle = app.add_subcommand("hecke-oracle", "finite tensor block cross-checks");
    common(s_oracle);
    s_oracle->add_option("--N", sites, "tensor sites (2..6)");
    s_oracle->add_option("--samples", samples, "random samples per check");
    s_oracle->add_option("--seed", seed, "PRNG seed");

    CLI::App* s_verify = app.add_subcommand("verify", "run a verification suite");
    common(s_verify);
    s_verify
        ->add_option("suite", suite,
                     "hecke, relations, intertwining, heisenberg, gamma, factorization, "
                     "classical, or all")
        ->required()
        ->check(CLI::IsMember({"hecke", "relations", "intertwining", "heisenberg", "gamma",
                               "factorization", "classical", "all"}));
    s_verify->add_option("--samples", samples, "random samples per check");
    s_verify->add_option("--seed", seed, "PRNG seed");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        set_exec(serial ? Exec::serial : Exec::openmp);

        if (s_act->parsed()) {
            FockVec v = parse_vec(vec_src, n);
            fock_out(apply_op(parse_op(op_src, n), v), format, out);
            return 0;
        }
        if (s_norm->parsed()) {
            fock_out(parse_vec(vec_src, n), format, out);
            return 0;
        }
        if (s_bop->parsed()) {
            fock_out(bop(a, parse_vec(vec_src, n)), format, out);
            return 0;
        }
        if (s_gamma->parsed()) {
            Laurent g = gamma_poly(n, a);
            if (format == "json")
                out << laurent_jobj(g).dump(2) << "\n";
            else
                out << g.str() << "\n";
            return 0;
        }
        if (s_two->parsed()) {
            if (which == "omega") {
                coeffs_out(series_coeffs(omega_two_point(n, charge, order)), format, out);
                return 0;
            }
            if (which == "phi") {
                coeffs_out(series_coeffs(phi_two_point(n, order, kmax)), format, out);
                return 0;
            }
            if (which == "xi") {
                coeffs_out(xi_two_point(n, order), format, out);
                return 0;
            }
            Report r;
            r.merge(verify_factorization(n, charge, order, kmax, 40));
            r.merge(extract_gamma(n, charge, order, kmax, 40));
            return finish_report(r, format, out);
        }
        if (s_basis->parsed()) {
            auto heads = enumerate_basis(charge, a);
            if (format == "json") {
                ojson arr = ojson::array();
                for (const auto& h : heads) {
                    ojson t;
                    t["charge"] = charge;
                    t["head"] = h;
                    arr.push_back(t);
                }
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& h : heads) out << wedge_str(h, charge) << "\n";
            }
            return 0;
        }
        if (s_sing->parsed()) {
            std::vector<std::vector<FockVec>> levels;
            for (long d = 0; d <= depth; ++d) levels.push_back(singular_vectors(n, charge, d));
            if (format == "json") {
                ojson o;
                o["charge"] = charge;
                ojson dims = ojson::array();
                for (const auto& basis : levels) dims.push_back(basis.size());
                o["dimensions"] = dims;
                ojson vecs = ojson::array();
                for (const auto& basis : levels) {
                    ojson level = ojson::array();
                    for (const auto& v : basis) level.push_back(fock_jobj(v));
                    vecs.push_back(level);
                }
                o["vectors"] = vecs;
                out << o.dump(2) << "\n";
            } else {
                for (long d = 0; d <= depth; ++d) {
                    out << "a=" << d << ": dim " << levels[static_cast<std::size_t>(d)].size()
                        << "\n";
                    for (const auto& v : levels[static_cast<std::size_t>(d)])
                        out << "  " << fock_str(v) << "\n";
                }
            }
            return 0;
        }
        if (s_oracle->parsed()) return finish_report(hecke_oracle(n, sites, samples, seed), format, out);
        if (s_verify->parsed()) return finish_report(run_suite(suite, n, samples, seed), format, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qfock
