// blockcs: deterministic sparse binary/ternary sensing matrices.
//
// Subcommands: devore, compose, ternary, plan, analyze, omp, verify.
// Exit codes: 0 success, 2 parameter or domain error, 3 malformed input
// file, 4 verification failure.

#include <CLI11.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "blockcs/analysis.hpp"
#include "blockcs/compose.hpp"
#include "blockcs/devore.hpp"
#include "blockcs/matrix_io.hpp"
#include "blockcs/planner.hpp"
#include "blockcs/ternary.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParameter = 2;
constexpr int kExitParse = 3;
constexpr int kExitVerification = 4;

constexpr std::size_t kBruteForceCeiling = 10000;

void require_scan_allowed(std::size_t cols, bool force) {
    if (cols > kBruteForceCeiling && !force)
        throw bcs::ParameterError("matrix has " + std::to_string(cols) +
                                  " columns; pairwise scans above " +
                                  std::to_string(kBruteForceCeiling) +
                                  " columns need --force");
}

bcs::io::ProvenanceEntry provenance_of(const bcs::io::MatrixFile& input) {
    return {std::string(bcs::io::kind_name(input.meta.kind)),
            bcs::io::metadata_digest(input.meta)};
}

int cmd_devore(std::uint32_t p, std::uint32_t r, const std::string& out) {
    const bcs::BlockBinaryMatrix m = bcs::devore_matrix({p, r});
    bcs::io::MatrixFile file{m, bcs::io::make_metadata(bcs::io::Kind::devore,
                                                       {{"p", p}, {"r", r}}, m)};
    bcs::io::write_matrix_file(out, file);
    std::cout << "wrote " << out << "  (" << m.row_count() << " x " << m.column_count()
              << ", overlap bound " << m.overlap_bound() << ")\n";
    return kExitOk;
}

int cmd_compose(const std::string& file_a, const std::string& file_b, std::uint32_t k,
                const std::string& out) {
    const bcs::io::MatrixFile in_a = bcs::io::read_matrix_file(file_a);
    const bcs::io::MatrixFile in_b = bcs::io::read_matrix_file(file_b);
    const auto* a = std::get_if<bcs::BlockBinaryMatrix>(&in_a.matrix);
    const auto* b = std::get_if<bcs::BlockBinaryMatrix>(&in_b.matrix);
    if (!a || !b) throw bcs::ParameterError("compose needs two binary block matrices");

    if (k > a->block_size())
        std::cerr << "note: retained block count " << k << " exceeds the first input's block size "
                  << a->block_size() << "\n";

    const bcs::BlockBinaryMatrix m = bcs::compose(*a, *b, {k});
    bcs::io::MatrixFile file{m, bcs::io::make_metadata(bcs::io::Kind::compose, {{"k", k}}, m,
                                                       {provenance_of(in_a), provenance_of(in_b)})};
    bcs::io::write_matrix_file(out, file);
    std::cout << "wrote " << out << "  (" << m.row_count() << " x " << m.column_count()
              << ", overlap bound " << m.overlap_bound() << ")\n";
    return kExitOk;
}

int cmd_ternary(const std::string& input, const std::string& mode,
                std::optional<std::uint32_t> r_prime, const std::string& out) {
    const bcs::io::MatrixFile in = bcs::io::read_matrix_file(input);
    const auto* m = std::get_if<bcs::BlockBinaryMatrix>(&in.matrix);
    if (!m) throw bcs::ParameterError("ternary constructions need a binary block matrix input");

    if (mode == "signflip") {
        const bcs::TernaryMatrix t = bcs::sign_flip(*m);
        bcs::io::MatrixFile file{t, bcs::io::make_metadata(bcs::io::Kind::signflip, {}, t,
                                                           {provenance_of(in)})};
        bcs::io::write_matrix_file(out, file);
        std::cout << "wrote " << out << "  (" << t.row_count() << " x " << t.column_count()
                  << ", ternary)\n";
        return kExitOk;
    }
    if (mode == "hadamard") {
        if (!r_prime) throw bcs::ParameterError("hadamard mode needs --rprime");
        const bcs::TernaryMatrix t = bcs::hadamard_expand(*m, *r_prime);
        bcs::io::MatrixFile file{
            t, bcs::io::make_metadata(bcs::io::Kind::hadamard, {{"r_prime", *r_prime}}, t,
                                      {provenance_of(in)})};
        bcs::io::write_matrix_file(out, file);
        std::cout << "wrote " << out << "  (" << t.row_count() << " x " << t.column_count()
                  << ", ternary)\n";
        return kExitOk;
    }
    throw bcs::ParameterError("unknown ternary mode '" + mode + "' (signflip | hadamard)");
}

int cmd_plan(std::uint64_t rows, std::uint32_t base_r, bool execute, const std::string& out) {
    const bcs::CompositionPlan plan = bcs::plan_row_size(rows, base_r);
    std::cout << bcs::describe(plan);
    if (!execute) return kExitOk;
    if (out.empty()) throw bcs::ParameterError("--execute needs --out");
    const bcs::BlockBinaryMatrix m = bcs::execute_plan(plan);
    bcs::io::MatrixFile file{
        m, bcs::io::make_metadata(
               bcs::io::Kind::plan,
               {{"m", static_cast<std::int64_t>(rows)},
                {"k", plan.retained_blocks},
                {"base_r", base_r}},
               m)};
    bcs::io::write_matrix_file(out, file);
    std::cout << "wrote " << out << "  (" << m.row_count() << " x " << m.column_count()
              << ", overlap bound " << m.overlap_bound() << ")\n";
    return kExitOk;
}

json report_to_json(const bcs::AnalysisReport& rep) {
    json j;
    j["rows"] = rep.rows;
    j["cols"] = rep.cols;
    j["k"] = rep.column_weight;
    j["density"] = rep.density.str();
    j["max_overlap"] = rep.max_overlap;
    j["coherence"] = rep.coherence.str();
    j["rip_order_bound"] = rep.rip_order_bound;
    j["aspect_ratio"] = rep.aspect_ratio.str();
    return j;
}

int cmd_analyze(const std::string& input, bool force) {
    const bcs::io::MatrixFile in = bcs::io::read_matrix_file(input);
    const bcs::AnalysisReport rep = std::visit(
        [&](const auto& m) {
            require_scan_allowed(m.column_count(), force);
            return bcs::analyze(m);
        },
        in.matrix);
    std::cout << report_to_json(rep).dump(2) << "\n";
    return kExitOk;
}

int cmd_omp(const std::string& input, std::size_t sparsity, std::size_t trials,
            std::uint64_t seed) {
    const bcs::io::MatrixFile in = bcs::io::read_matrix_file(input);
    const bcs::DenseColumns dense =
        std::visit([](const auto& m) { return bcs::to_dense_columns(m); }, in.matrix);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_col(0, dense.cols - 1);
    std::uniform_real_distribution<double> magnitude(0.5, 2.0);

    std::size_t successes = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::size_t> support;
        while (support.size() < sparsity) {
            const std::size_t c = pick_col(rng);
            if (std::find(support.begin(), support.end(), c) == support.end())
                support.push_back(c);
        }
        std::sort(support.begin(), support.end());
        std::vector<double> coeffs(sparsity);
        for (auto& c : coeffs) {
            c = magnitude(rng);
            if (rng() % 2 == 0) c = -c;
        }

        std::vector<double> y(dense.rows, 0.0);
        for (std::size_t s = 0; s < sparsity; ++s)
            for (std::size_t row = 0; row < dense.rows; ++row)
                y[row] += coeffs[s] * dense.data[support[s] * dense.rows + row];

        const bcs::OmpResult rec = bcs::omp_recover(dense, y, sparsity);
        bool ok = rec.support.size() == sparsity;
        if (ok)
            for (std::size_t s = 0; s < sparsity; ++s)
                ok = ok && rec.support[s] == support[s] + 1 &&
                     std::abs(rec.coefficients[s] - coeffs[s]) <= 1e-8;
        if (ok) ++successes;
    }

    json j;
    j["cols"] = dense.cols;
    j["sparsity"] = sparsity;
    j["trials"] = trials;
    j["successes"] = successes;
    j["success_rate"] = trials == 0 ? 0.0 : double(successes) / double(trials);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& input, bool force) {
    const bcs::io::MatrixFile in = bcs::io::read_matrix_file(input);
    std::vector<std::string> failures;

    std::visit(
        [&](const auto& m) {
            require_scan_allowed(m.column_count(), force);
            if (m.row_count() != in.meta.rows || m.column_count() != in.meta.cols)
                failures.push_back("shape mismatch");
            const std::string dens = bcs::density(m).str();
            if (dens != in.meta.density)
                failures.push_back("density " + dens + " != declared " + in.meta.density);
            const bcs::Index actual = bcs::max_overlap(m);
            if (actual > in.meta.overlap_bound)
                failures.push_back("actual max overlap " + std::to_string(actual) +
                                   " exceeds declared bound " +
                                   std::to_string(in.meta.overlap_bound));
            else
                std::cout << "max overlap: " << actual << " (declared bound "
                          << in.meta.overlap_bound << ")\n";
        },
        in.matrix);

    if (failures.empty()) {
        std::cout << "verification: PASS\n";
        return kExitOk;
    }
    for (const auto& f : failures) std::cerr << "verification: " << f << "\n";
    std::cerr << "verification: FAIL\n";
    return kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic sparse binary and ternary sensing matrices"};
    app.require_subcommand(1);

    // devore
    std::uint32_t dev_p = 0, dev_r = 0;
    std::string dev_out;
    auto* devore = app.add_subcommand("devore", "generate a p^2 x p^(r+1) polynomial base matrix");
    devore->add_option("--p", dev_p, "prime modulus")->required();
    devore->add_option("--r", dev_r, "maximum polynomial degree")->required();
    devore->add_option("--out", dev_out, "output matrix file")->required();

    // compose
    std::string comp_a, comp_b, comp_out;
    std::uint32_t comp_k = 0;
    auto* compose = app.add_subcommand("compose", "fuse two block matrices");
    compose->add_option("file_a", comp_a, "first input")->required();
    compose->add_option("file_b", comp_b, "second input")->required();
    compose->add_option("--k", comp_k, "retained block count")->required();
    compose->add_option("--out", comp_out, "output matrix file")->required();

    // ternary
    std::string tern_in, tern_mode, tern_out;
    std::optional<std::uint32_t> tern_rprime;
    auto* ternary = app.add_subcommand("ternary", "derive a ternary matrix");
    ternary->add_option("file", tern_in, "input matrix file")->required();
    ternary->add_option("--mode", tern_mode, "signflip | hadamard")->required();
    ternary->add_option("--rprime", tern_rprime, "Hadamard surplus (hadamard mode)");
    ternary->add_option("--out", tern_out, "output matrix file")->required();

    // plan
    std::uint64_t plan_rows = 0;
    std::uint32_t plan_base_r = 1;
    bool plan_execute = false;
    std::string plan_out;
    auto* plan = app.add_subcommand("plan", "plan (and optionally build) a matrix of given row size");
    plan->add_option("--rows", plan_rows, "target row count")->required();
    plan->add_option("--base-r", plan_base_r, "polynomial degree of every base matrix");
    plan->add_flag("--execute", plan_execute, "build the planned matrix");
    plan->add_option("--out", plan_out, "output matrix file (with --execute)");

    // analyze
    std::string ana_in;
    bool ana_force = false;
    auto* analyze = app.add_subcommand("analyze", "print exact metrics as JSON");
    analyze->add_option("file", ana_in, "input matrix file")->required();
    analyze->add_flag("--force", ana_force, "allow pairwise scans on large matrices");

    // omp
    std::string omp_in;
    std::size_t omp_sparsity = 1, omp_trials = 100;
    std::uint64_t omp_seed = 1;
    auto* omp = app.add_subcommand("omp", "seeded Monte Carlo sparse-recovery check");
    omp->add_option("file", omp_in, "input matrix file")->required();
    omp->add_option("--sparsity", omp_sparsity, "nonzeros per trial signal")->required();
    omp->add_option("--trials", omp_trials, "number of trials");
    omp->add_option("--seed", omp_seed, "RNG seed");

    // verify
    std::string ver_in;
    bool ver_force = false;
    auto* verify = app.add_subcommand("verify", "re-verify declared metadata");
    verify->add_option("file", ver_in, "input matrix file")->required();
    verify->add_flag("--force", ver_force, "allow pairwise scans on large matrices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParameter;
    }

    try {
        if (devore->parsed()) return cmd_devore(dev_p, dev_r, dev_out);
        if (compose->parsed()) return cmd_compose(comp_a, comp_b, comp_k, comp_out);
        if (ternary->parsed()) return cmd_ternary(tern_in, tern_mode, tern_rprime, tern_out);
        if (plan->parsed()) return cmd_plan(plan_rows, plan_base_r, plan_execute, plan_out);
        if (analyze->parsed()) return cmd_analyze(ana_in, ana_force);
        if (omp->parsed()) return cmd_omp(omp_in, omp_sparsity, omp_trials, omp_seed);
        if (verify->parsed()) return cmd_verify(ver_in, ver_force);
    } catch (const bcs::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const bcs::VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const bcs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParameter;
    }
    return kExitOk;
}
