#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qladder/chain_complex.hpp"
#include "qladder/fock.hpp"
#include "qladder/lattice.hpp"
#include "qladder/qseries.hpp"
#include "qladder/quotient.hpp"
#include "qladder/serialize.hpp"
#include "qladder/upsilon.hpp"
#include "qladder/verify.hpp"

using namespace qladder;

namespace {

int dflt(int v, int d) { return v < 0 ? d : v; }
int dflt_t(int v, int d) { return v == INT_MIN ? d : v; }

void cap(const RunConfig& cfg, const std::string& what, int v, int limit) {
    if (v > limit && !cfg.force)
        throw CapError(what + " = " + std::to_string(v) + " exceeds the cap " +
                       std::to_string(limit) + " (pass --force to lift it)");
}

LatticeModel lattice_from(const std::string& model, const RunConfig& cfg) {
    int n = dflt(cfg.n, 3);
    if (model == "twisted" || model == "twisted_square")
        return LatticeModel::twisted_square(n);
    if (model == "square") return LatticeModel::square(n);
    if (model == "tri3") return LatticeModel::cyclic_tri3(n);
    if (model == "mleg") return LatticeModel::mleg(dflt(cfg.m, 3), n);
    throw std::invalid_argument("unknown lattice model: " + model);
}

std::optional<AlgebraKind> algebra_from(const std::string& model) {
    if (model == "deformed_square") return AlgebraKind::deformed_square;
    if (model == "deformed_tri3") return AlgebraKind::deformed_tri3;
    if (model == "fermion_square") return AlgebraKind::fermion_square;
    if (model == "fermion_tri3") return AlgebraKind::fermion_tri3;
    return std::nullopt;
}

int write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open " << path << " for writing\n";
        return 2;
    }
    f << content;
    return f.good() ? 0 : 2;
}

std::string run_emit(const std::string& what, const std::string& model,
                     int N, bool aligned, const RunConfig& cfg, OutFormat fmt) {
    if (what == "statsum") {
        StatModel sm;
        if (model.empty() || model == "square")
            sm = StatModel::square;
        else if (model == "tri3")
            sm = StatModel::tri3;
        else
            throw std::invalid_argument("statsum model must be square or tri3");
        int q = dflt(cfg.q_max, 10);
        cap(cfg, "q_max", q, 60);
        Window w(q, dflt_t(cfg.t_min, -3), dflt_t(cfg.t_max, 3));
        return render_series(F_closed(w, sm), fmt);
    }
    if (what == "euler") {
        auto m = lattice_from(model.empty() ? "tri3" : model, cfg);
        return render_scalar("euler", euler_char(m), fmt);
    }
    if (what == "table") {
        auto m = lattice_from(model.empty() ? "tri3" : model, cfg);
        return render_table(weight_table(m, weight_system_f(m)), fmt);
    }
    if (what == "dims") {
        auto kind = algebra_from(model.empty() ? "deformed_square" : model);
        if (!kind) throw std::invalid_argument("dims needs an algebra model");
        int n = dflt(cfg.n, 3);
        cap(cfg, "n", n, 9);
        auto q = graded_quotient(*kind, IndexWindow::centered(n), cfg.threads);
        return render_dims(q.dims(), fmt);
    }
    if (what == "cohomology") {
        std::string m = model.empty() ? "deformed_square" : model;
        if (auto kind = algebra_from(m)) {
            int n = dflt(cfg.n, 3);
            cap(cfg, "n", n, 9);
            auto dc = build_deformed_complex(*kind, IndexWindow::centered(n),
                                             cfg.threads);
            return render_cohomology(cohomology(dc.c), fmt);
        }
        auto c = build_fermion_complex(lattice_from(m, cfg));
        return render_cohomology(cohomology(c), fmt);
    }
    if (what == "character") {
        if (model == "fock") {
            int wm = dflt(cfg.w_max, 8);
            cap(cfg, "w_max", wm, 12);
            Window w(wm, dflt_t(cfg.t_min, -3), dflt_t(cfg.t_max, 3));
            return render_series(fock_character(w), fmt);
        }
        if (!model.empty() && model != "upsilon")
            throw std::invalid_argument("character model must be upsilon or fock");
        int q = dflt(cfg.q_max, 8);
        cap(cfg, "q_max", q, 60);
        Window w(q, dflt_t(cfg.t_min, -3), dflt_t(cfg.t_max, 3));
        return render_series(aligned ? upsilon_character_aligned(N, w)
                                     : upsilon_character(N, w),
                             fmt);
    }
    throw std::invalid_argument("unknown emit command: " + what);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact statistical sums of semi-infinite ladder configurations, the "
        "matching quadratic algebras, and their cohomology"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    std::string out_path;
    std::string model;
    std::string target = "all";
    std::string emit_what;
    int N = 0;
    bool aligned = false;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--n", cfg.n, "column count (or k for split complexes)");
        c->add_option("--m", cfg.m, "row count of the m-leg ladder");
        c->add_option("--qmax", cfg.q_max, "q truncation order");
        c->add_option("--wmax", cfg.w_max, "Fock weight bound");
        c->add_option("--tmin", cfg.t_min, "lowest charge kept");
        c->add_option("--tmax", cfg.t_max, "highest charge kept");
        c->add_option("--samples", cfg.samples, "randomized draws per size");
        c->add_option("--seed", cfg.seed, "seed for randomized checks");
        c->add_option("--threads", cfg.threads, "worker threads");
        c->add_flag("--force", cfg.force, "lift the built-in size caps");
        c->add_option("--format", format, "output format: text, json, csv");
        c->add_option("--out", out_path, "write output to this file");
    };

    std::string target_help = "one of:";
    for (const auto& t : verify_targets()) target_help += " " + t;
    auto* vcmd = app.add_subcommand(
        "verify", "run a named identity suite; exit 0 iff every check holds");
    vcmd->add_option("target", target, target_help);
    add_common(vcmd);

    auto* ecmd = app.add_subcommand(
        "emit", "print one object: statsum, euler, table, dims, cohomology, "
                "character");
    ecmd->add_option("what", emit_what, "what to emit")->required();
    ecmd->add_option("--model", model,
                     "statsum: square|tri3; lattices: twisted|square|tri3|mleg; "
                     "algebras: deformed_square|deformed_tri3|fermion_square|"
                     "fermion_tri3; character: upsilon|fock");
    ecmd->add_option("--N", N, "spine depth for the upsilon character");
    ecmd->add_flag("--aligned", aligned,
                   "grade the upsilon character so embeddings preserve degrees");
    add_common(ecmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        OutFormat fmt = parse_format(format);
        if (vcmd->parsed()) {
            VerifyReport rep = verify_target(target, cfg);
            int wr = write_out(out_path, render_verify(rep, fmt));
            if (wr != 0) return wr;
            return rep.ok() ? 0 : 1;
        }
        return write_out(out_path, run_emit(emit_what, model, N, aligned, cfg, fmt));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
