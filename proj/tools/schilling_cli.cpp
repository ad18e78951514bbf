// Command-line front end: certify/saturate/verify single q values, sweep q
// ranges, run spectral probes, print threshold diagnostics.
//
// Exit codes: 0 ok, 2 regime/range error, 3 step failure, 4 parse error.

#include "schilling/certificate_json.hpp"
#include "schilling/prover.hpp"
#include "schilling/spectral.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace schilling;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitRegime = 2;
constexpr int kExitStep = 3;
constexpr int kExitParse = 4;

Rat parse_q_or_throw(const std::string& s) {
    Rat q = parse_rat(s);
    return q;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonOpts {
    std::string q = "1/3";
    unsigned long seedN = 0;
    int seedEps = 1;
    std::size_t gridN = 256;
    std::size_t iters = 200;
    std::size_t passes = 64;
    std::size_t maxIntervals = 4096;
    std::string out;
    std::uint64_t randSeed = 1;
    bool overrideRegime = false;
};

int cmd_certify(const CommonOpts& o) {
    Rat q;
    try {
        q = parse_q_or_throw(o.q);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }
    try {
        Certificate cert = replay_paper_proof(q, Seed{o.seedN, o.seedEps}, o.overrideRegime);
        const VerifyResult vr = verify_certificate(cert);
        const std::string path = o.out.empty() ? "certificate.json" : o.out;
        write_file(path, serialize_certificate(cert));
        std::cout << "q=" << rat_to_string(q) << " regime=" << regime_name(cert.regime.tag)
                  << " verdict=" << verdict_name(cert.verdict) << " steps=" << cert.steps.size()
                  << " verified=" << (vr.ok ? "yes" : "no") << " wrote=" << path << "\n";
        return (cert.verdict == Verdict::TRIVIAL_ONLY && vr.ok) ? kExitOk : kExitFailed;
    } catch (const RegimeError& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const HalfGuardViolated& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const StepFailure& e) {
        std::cerr << "step failure at index " << e.index << ": " << e.what() << "\n";
        return kExitStep;
    }
}

int cmd_saturate(const CommonOpts& o) {
    Rat q;
    try {
        q = parse_q_or_throw(o.q);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }
    try {
        const Budget budget{o.passes, o.maxIntervals};
        SaturateResult res = saturate(q, Seed{o.seedN, o.seedEps}, budget);
        const VerifyResult vr = verify_certificate(res.certificate);
        std::cout << "q=" << rat_to_string(q) << " status=" << saturate_status_name(res.status)
                  << " passes=" << res.passes << " steps=" << res.certificate.steps.size()
                  << " verdict=" << verdict_name(res.certificate.verdict)
                  << " verified=" << (vr.ok ? "yes" : "no") << "\n";
        if (!o.out.empty()) {
            write_file(o.out, serialize_certificate(res.certificate));
            std::cout << "wrote=" << o.out << "\n";
        }
        return res.status == SaturateStatus::GOAL && vr.ok ? kExitOk : kExitFailed;
    } catch (const HalfGuardViolated& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const OutOfRangeError& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return kExitRegime;
    }
}

int cmd_verify(const std::string& path) {
    Certificate cert;
    try {
        cert = parse_certificate(read_file(path));
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    const VerifyResult vr = verify_certificate(cert);
    if (vr.ok) {
        std::cout << "certificate for q=" << rat_to_string(cert.q) << " verified, "
                  << cert.steps.size() << " steps, verdict " << verdict_name(cert.verdict)
                  << "\n";
        return kExitOk;
    }
    std::cout << "verification FAILED at step " << vr.failingStep << ": " << vr.reason << "\n";
    return kExitFailed;
}

int cmd_sweep(const std::string& qminS, const std::string& qmaxS, std::size_t steps,
              const std::string& mode, const CommonOpts& o) {
    Rat qmin, qmax;
    try {
        qmin = parse_q_or_throw(qminS);
        qmax = parse_q_or_throw(qmaxS);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }
    if (!(qmin > 0 && qmin < qmax && qmax < 1) || steps == 0) {
        std::cerr << "bad range: need 0 < qmin < qmax < 1 and steps > 0\n";
        return kExitRegime;
    }

    std::ostringstream csv;
    csv << "q,regime,result,detail,millis\n";
    for (std::size_t i = 0; i < steps; ++i) {
        // Exact rational samples; never float-derived.
        const Rat q = steps == 1
                          ? qmin
                          : qmin + (qmax - qmin) * Rat(static_cast<long>(i),
                                                       static_cast<long>(steps - 1));
        const Regime regime = classify_regime(q);
        const auto t0 = std::chrono::steady_clock::now();
        std::string result, detail;
        if (mode == "certify") {
            try {
                Certificate cert = replay_paper_proof(q, Seed{o.seedN, o.seedEps});
                result = std::string(verdict_name(cert.verdict));
                detail = "steps=" + std::to_string(cert.steps.size());
            } catch (const RegimeError&) {
                result = "RegimeError";
                detail = std::string(regime_name(regime.tag));
            } catch (const HalfGuardViolated&) {
                result = "RegimeError";
                detail = "q >= 1/2";
            } catch (const StepFailure& e) {
                result = "StepFailure";
                detail = "step=" + std::to_string(e.index);
            }
        } else { // spectral
            const auto grid = spectral::Grid::make(to_double(q), o.gridN);
            const auto A = spectral::assemble_matrix(grid);
            const auto pr = spectral::power_iteration(A, grid, 1e-10, o.iters, o.randSeed);
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.12g", pr.lambda);
            result = buf;
            detail = pr.converged ? "converged" : "maxiter";
        }
        const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
        csv << rat_to_string(q) << "," << regime_name(regime.tag) << "," << result << ","
            << detail << "," << millis << "\n";
    }
    if (o.out.empty())
        std::cout << csv.str();
    else
        write_file(o.out, csv.str());
    return kExitOk;
}

int cmd_constants() {
    const Rat quad[] = {Rat(1), Rat(-3), Rat(1)};        // q^2 - 3q + 1, case split
    const Rat baron[] = {Rat(-1), Rat(2), Rat(1)};       // q^2 + 2q - 1, Baron's bound
    const Rat cubic[] = {Rat(-1), Rat(3), Rat(-3), Rat(3)}; // 3q^3 - 3q^2 + 3q - 1
    struct Row {
        const char* poly;
        std::span<const Rat> coeffs;
    } rows[] = {
        {"q^2 - 3q + 1", quad},
        {"q^2 + 2q - 1", baron},
        {"3q^3 - 3q^2 + 3q - 1", cubic},
    };
    for (const Row& r : rows) {
        const double root = bisect_root(r.coeffs, Rat(1, 1000), Rat(999, 1000), 1e-12);
        std::printf("%-22s root in (0,1): %.10f (approximation; prover uses exact signs)\n",
                    r.poly, root);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-set propagation prover and transfer-operator explorer for "
                 "Schilling's functional equation"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string verifyPath;
    std::string qmin = "1/10", qmax = "44/100", sweepMode = "certify";
    std::size_t sweepSteps = 10;

    auto addCommon = [&](CLI::App* c, bool spectralOpts) {
        c->add_option("--q", o.q, "parameter q as NUM/DEN");
        c->add_option("--seed-n", o.seedN, "seed index n");
        c->add_option("--seed-eps", o.seedEps, "seed sign, -1 or 1")
            ->check(CLI::IsMember({-1, 1}));
        c->add_option("--out", o.out, "output path");
        if (spectralOpts) {
            c->add_option("--grid", o.gridN, "grid point count");
            c->add_option("--iters", o.iters, "iteration budget");
            c->add_option("--rand-seed", o.randSeed, "random seed");
        }
    };

    auto* certify = app.add_subcommand("certify", "replay the derivation and emit a certificate");
    addCommon(certify, false);
    certify->add_flag("--override-regime", o.overrideRegime,
                      "run the replay above the threshold to expose the failing step");

    auto* saturateCmd = app.add_subcommand("saturate", "generic fixpoint saturation");
    addCommon(saturateCmd, false);
    saturateCmd->add_option("--passes", o.passes, "max saturation passes");
    saturateCmd->add_option("--max-intervals", o.maxIntervals, "interval cap");

    auto* verify = app.add_subcommand("verify", "re-check a certificate file");
    verify->add_option("path", verifyPath, "certificate JSON")->required();

    auto* sweep = app.add_subcommand("sweep", "run a q range, emit CSV "
                                              "(q,regime,result,detail,millis)");
    addCommon(sweep, true);
    sweep->add_option("--qmin", qmin, "range start as NUM/DEN");
    sweep->add_option("--qmax", qmax, "range end as NUM/DEN");
    sweep->add_option("--steps", sweepSteps, "sample count");
    sweep->add_option("--mode", sweepMode, "certify or spectral")
        ->check(CLI::IsMember({"certify", "spectral"}));

    auto* spectralCmd = app.add_subcommand("spectral", "power iteration at a single q");
    addCommon(spectralCmd, true);

    auto* constants = app.add_subcommand("constants", "threshold diagnostics (decimals)");
    (void)constants;

    CLI11_PARSE(app, argc, argv);

    try {
        if (certify->parsed()) return cmd_certify(o);
        if (saturateCmd->parsed()) return cmd_saturate(o);
        if (verify->parsed()) return cmd_verify(verifyPath);
        if (sweep->parsed()) return cmd_sweep(qmin, qmax, sweepSteps, sweepMode, o);
        if (constants->parsed()) return cmd_constants();
        if (spectralCmd->parsed()) {
            Rat q;
            try {
                q = parse_rat(o.q);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return kExitParse;
            }
            const auto grid = spectral::Grid::make(to_double(q), o.gridN);
            const auto A = spectral::assemble_matrix(grid);
            const auto pr = spectral::power_iteration(A, grid, 1e-10, o.iters, o.randSeed);
            const auto mr = spectral::min_residual_search(grid, o.iters, o.randSeed);
            std::printf("q=%s n=%zu lambda=%.12g converged=%d min_residual=%.6g\n",
                        rat_to_string(q).c_str(), grid.n, pr.lambda, pr.converged ? 1 : 0, mr.r);
            if (!o.out.empty()) write_file(o.out, spectral::to_csv(mr.f));
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitOk;
}
