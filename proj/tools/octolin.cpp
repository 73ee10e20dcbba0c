#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "octolin/classify.hpp"
#include "octolin/frame.hpp"
#include "octolin/json_io.hpp"
#include "octolin/octonion.hpp"
#include "octolin/verify.hpp"

namespace {

using namespace octolin;

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string flag(bool b) { return b ? "true" : "false"; }

void print_kv(const std::string& key, const std::string& value) {
    std::printf("%-28s %s\n", key.c_str(), value.c_str());
}

void print_matrix_text(const OMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string line = "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) line += ", ";
            line += to_string(m(i, j));
        }
        std::printf("%s]\n", line.c_str());
    }
}

void emit_check(const ClassificationReport& r, bool as_json) {
    if (as_json) {
        std::printf("%s\n", to_json(r).dump(2).c_str());
        return;
    }
    print_kv("is_paralinear_residual", num(r.is_paralinear_residual));
    print_kv("gram_TTstar_residual", num(r.gram_TTstar_residual));
    print_kv("gram_TstarT_residual", num(r.gram_TstarT_residual));
    print_kv("rows_weak_assoc", flag(r.rows_weak_assoc));
    print_kv("cols_weak_assoc", flag(r.cols_weak_assoc));
    print_kv("real_composition_identity", flag(r.real_composition_identity));
    print_kv("norm_preserving", flag(r.norm_preserving));
    print_kv("is_isometry", flag(r.is_isometry));
    print_kv("kernel_dim", std::to_string(r.kernel_dim));
    print_kv("kernel_is_O_submodule", flag(r.kernel_is_O_submodule));
    print_kv("is_partial_isometry", flag(r.is_partial_isometry));
}

void emit_basis(const FrameReport& r, bool as_json) {
    if (as_json) {
        std::printf("%s\n", to_json(r).dump(2).c_str());
        return;
    }
    print_kv("orthonormal", flag(r.orthonormal));
    print_kv("associative", flag(r.associative));
    print_kv("weak_associative", flag(r.weak_associative));
    print_kv("complete", flag(r.complete));
    print_kv("max_gram_residual", num(r.max_gram_residual));
    print_kv("max_assoc_residual", num(r.max_assoc_residual));
}

void emit_stiefel(const StiefelReport& r, bool as_json) {
    if (as_json) {
        std::printf("%s\n", to_json(r).dump(2).c_str());
        return;
    }
    print_kv("dim_OOy", std::to_string(r.dim_OOy));
    print_kv("fiber_dim", std::to_string(r.fiber_dim));
}

void emit_decompose(const Iso2Decomposition& d, bool as_json) {
    if (as_json) {
        std::printf("%s\n", to_json(d).dump(2).c_str());
        return;
    }
    print_kv("p", to_string(d.p));
    print_kv("J", to_string(d.j));
    std::printf("U\n");
    print_matrix_text(d.u);
    print_kv("residual", num(d.residual));
}

void emit_mult_table(bool as_json) {
    if (as_json) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < 8; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < 8; ++j) {
                const BasisProduct b = basis_mul(i, j);
                row.push_back({{"sign", b.sign}, {"index", b.index}});
            }
            rows.push_back(row);
        }
        std::printf("%s\n", rows.dump(2).c_str());
        return;
    }
    const auto cell = [](int i, int j) {
        const BasisProduct b = basis_mul(i, j);
        std::string s = b.sign < 0 ? "-" : "";
        s += (b.index == 0) ? "1" : "e" + std::to_string(b.index);
        return s;
    };
    std::printf("%-5s", "*");
    for (int j = 0; j < 8; ++j)
        std::printf("%-5s", (j == 0 ? std::string("1") : "e" + std::to_string(j)).c_str());
    std::printf("\n");
    for (int i = 0; i < 8; ++i) {
        std::printf("%-5s", (i == 0 ? std::string("1") : "e" + std::to_string(i)).c_str());
        for (int j = 0; j < 8; ++j) std::printf("%-5s", cell(i, j).c_str());
        std::printf("\n");
    }
}

int emit_verify(const std::vector<PropertyResult>& results, bool as_json,
                std::uint64_t seed, int trials) {
    int failures = 0;
    for (const auto& r : results)
        if (!r.pass) ++failures;
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json item{{"name", r.name}, {"max_residual", r.max_residual},
                                {"pass", r.pass}};
            if (std::isfinite(r.tolerance))
                item["tolerance"] = r.tolerance;
            else
                item["informational"] = true;
            arr.push_back(item);
        }
        nlohmann::json out{{"seed", seed}, {"trials", trials}, {"failures", failures},
                           {"properties", arr}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        for (const auto& r : results) {
            const std::string tol = std::isfinite(r.tolerance) ? num(r.tolerance) : "-";
            std::printf("[%s] %-55s residual %-12s tol %s\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), num(r.max_residual).c_str(), tol.c_str());
        }
        std::printf("summary: %zu/%zu properties passed (seed %llu, trials %d)\n",
                    results.size() - static_cast<std::size_t>(failures), results.size(),
                    static_cast<unsigned long long>(seed), trials);
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"octolin: octonionic linear algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    double tol_eq = kTolEq, tol_gram = kTolGram, tol_rank = kTolRank;
    std::uint64_t seed = 42;
    int trials = 200;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--tol-eq", tol_eq, "octonion equality tolerance");
    app.add_option("--tol-gram", tol_gram, "Gram / associator residual tolerance");
    app.add_option("--tol-rank", tol_rank, "relative singular value threshold");
    app.add_option("--seed", seed, "seed for randomized checks")->envname("OCTOLIN_SEED");
    app.add_option("--trials", trials, "trial count for randomized checks");

    std::string matrix_path, frame_path, vector_path;
    bool inject_fault = false;

    auto* cmd_check = app.add_subcommand("check", "classify a matrix operator");
    cmd_check->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    auto* cmd_basis = app.add_subcommand("basis", "classify a frame");
    cmd_basis->add_option("--frame", frame_path, "frame JSON file")->required();

    auto* cmd_stiefel = app.add_subcommand("stiefel", "fiber dimension data of a unit vector");
    cmd_stiefel->add_option("--vector", vector_path, "vector JSON file")->required();

    auto* cmd_decompose = app.add_subcommand("decompose", "factor a 2x2 isometry as p * U");
    cmd_decompose->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the property verification suite");
    cmd_verify->add_flag("--inject-fault", inject_fault,
                         "append a synthetic failure (harness self-test)");

    auto* cmd_table = app.add_subcommand("mult-table", "print the basis multiplication table");

    CLI11_PARSE(app, argc, argv);

    const bool as_json = format == "json";
    ClassifyOptions opts;
    opts.eq = tol_eq;
    opts.frame.gram = tol_gram;
    opts.frame.assoc = tol_gram;
    opts.frame.rank = tol_rank;
    opts.seed = seed;

    try {
        if (cmd_check->parsed()) {
            emit_check(classify_operator(load_matrix(matrix_path), opts), as_json);
        } else if (cmd_basis->parsed()) {
            emit_basis(classify_frame(load_frame(frame_path), opts.frame), as_json);
        } else if (cmd_stiefel->parsed()) {
            emit_stiefel(stiefel_OOy_dim(load_vector(vector_path), opts), as_json);
        } else if (cmd_decompose->parsed()) {
            const OMatrix m = load_matrix(matrix_path);
            try {
                emit_decompose(iso2_decompose(m, opts), as_json);
            } catch (const DimensionError& e) {
                std::fprintf(stderr, "error: %s\n", e.what());
                return 4;
            } catch (const ClassificationError& e) {
                std::fprintf(stderr, "error: %s\n", e.what());
                return 4;
            }
        } else if (cmd_verify->parsed()) {
            return emit_verify(run_verification(seed, trials, inject_fault), as_json, seed,
                               trials);
        } else if (cmd_table->parsed()) {
            emit_mult_table(as_json);
        }
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const DimensionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
