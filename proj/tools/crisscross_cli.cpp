#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "crisscross/analysis.hpp"
#include "crisscross/code.hpp"
#include "crisscross/decoder.hpp"
#include "crisscross/grid.hpp"
#include "crisscross/verify.hpp"

namespace {

using namespace crisscross;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
    if (!out) throw std::invalid_argument("short write to " + path);
}

const char* case_name(DecodeCase c) {
    switch (c) {
        case DecodeCase::case_1a: return "row-deleted-in-top-band";
        case DecodeCase::case_1b: return "top-band-intact";
        case DecodeCase::case_2: return "last-column-deleted";
    }
    return "?";
}

const char* note_name(ParityNote n) {
    switch (n) {
        case ParityNote::none: return "none";
        case ParityNote::parity_row_deleted: return "parity-row";
        case ParityNote::parity_col_deleted: return "parity-col";
        case ParityNote::parity_row_and_col_deleted: return "parity-row-and-col";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"criss-cross deletion correcting code toolkit"};
    app.require_subcommand(1);

    int sample_n = 8;
    uint64_t sample_seed = 1;
    std::string sample_out, sample_params_out;
    auto* cmd_sample = app.add_subcommand("sample", "draw a codeword and its parameters");
    cmd_sample->add_option("--n", sample_n, "code length, a power of two >= 8")->required();
    cmd_sample->add_option("--seed", sample_seed, "rng seed");
    cmd_sample->add_option("--out", sample_out, "grid file to write")->required();
    cmd_sample->add_option("--params-out", sample_params_out, "params file to write")
        ->required();

    std::string corrupt_in, corrupt_out;
    int corrupt_row = 0, corrupt_col = 0;
    auto* cmd_corrupt =
        app.add_subcommand("corrupt", "delete one row and one column from a grid file");
    cmd_corrupt->add_option("--in", corrupt_in, "grid file to read")->required();
    cmd_corrupt->add_option("--row", corrupt_row, "row index to delete")->required();
    cmd_corrupt->add_option("--col", corrupt_col, "column index to delete")->required();
    cmd_corrupt->add_option("--out", corrupt_out, "grid file to write")->required();

    std::string decode_in, decode_params, decode_out;
    auto* cmd_decode =
        app.add_subcommand("decode", "recover the codeword a corrupted grid came from");
    cmd_decode->add_option("--in", decode_in, "received grid file")->required();
    cmd_decode->add_option("--params", decode_params, "params file (\"n a b c d\")")
        ->required();
    cmd_decode->add_option("--out", decode_out, "grid file to write")->required();

    std::string verify_suite;
    int verify_m = 3, verify_t = 2, verify_n = 0, verify_codewords = 100;
    int verify_samples = 10000, verify_oracle_cases = 0;
    uint64_t verify_seed = 1;
    auto* cmd_verify = app.add_subcommand("verify", "run one verification suite");
    cmd_verify
        ->add_option("suite", verify_suite,
                     "equivalence | lemma-delpattern | counts | code | t-equivalence")
        ->required()
        ->check(CLI::IsMember(
            {"equivalence", "lemma-delpattern", "counts", "code", "t-equivalence"}));
    cmd_verify->add_option("--m", verify_m, "grid side for equivalence suites");
    cmd_verify->add_option("--t", verify_t, "deletion count for t-equivalence");
    cmd_verify->add_option("--n", verify_n, "grid side (delpattern: 0 means both 3 and 4)");
    cmd_verify->add_option("--codewords", verify_codewords, "sampled codewords for code");
    cmd_verify->add_option("--oracle-cases", verify_oracle_cases,
                           "completion-search cross-checks for code (n=8 only)");
    cmd_verify->add_option("--samples", verify_samples, "sampled pairs/grids");
    cmd_verify->add_option("--seed", verify_seed, "rng seed");

    int census_n = 4, census_threads = 0;
    auto* cmd_census = app.add_subcommand("census", "good/bad split of all n x n arrays");
    cmd_census->add_option("--n", census_n, "grid side (exhaustive, guarded)")->required();
    cmd_census->add_option("--threads", census_threads, "worker count, 0 = hardware");

    int bounds_n = 0;
    auto* cmd_bounds = app.add_subcommand("bounds", "redundancy bound report");
    cmd_bounds->add_option("--n", bounds_n, "code length, a power of two >= 8")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_sample) {
            std::cerr << "config: command=sample n=" << sample_n << " seed=" << sample_seed
                      << " out=" << sample_out << " params-out=" << sample_params_out
                      << "\n";
            auto [x, p] = sample_codeword(sample_n, sample_seed);
            write_file(sample_out, format_grid(x));
            write_file(sample_params_out, format_params(p));
            return 0;
        }
        if (*cmd_corrupt) {
            std::cerr << "config: command=corrupt in=" << corrupt_in
                      << " row=" << corrupt_row << " col=" << corrupt_col
                      << " out=" << corrupt_out << "\n";
            BitGrid x = parse_grid(read_file(corrupt_in));
            write_file(corrupt_out, format_grid(delete_row_col(x, corrupt_row, corrupt_col)));
            return 0;
        }
        if (*cmd_decode) {
            std::cerr << "config: command=decode in=" << decode_in
                      << " params=" << decode_params << " out=" << decode_out << "\n";
            BitGrid received = parse_grid(read_file(decode_in));
            CodeParams p = parse_params(read_file(decode_params));
            auto res = decode(received, p);
            if (!res) {
                std::cerr << "error: no codeword with the given parameters explains the "
                             "input\n";
                return 1;
            }
            std::cerr << "decoded: case=" << case_name(res->trace.case_taken)
                      << " row=" << res->trace.row_index << " col=" << res->trace.col_index
                      << " parity-note=" << note_name(res->trace.hypothesis_notes) << "\n";
            write_file(decode_out, format_grid(res->codeword));
            return 0;
        }
        if (*cmd_verify) {
            std::cerr << "config: command=verify suite=" << verify_suite
                      << " m=" << verify_m << " t=" << verify_t << " n=" << verify_n
                      << " codewords=" << verify_codewords
                      << " oracle-cases=" << verify_oracle_cases
                      << " samples=" << verify_samples << " seed=" << verify_seed << "\n";
            std::vector<VerificationResult> results;
            if (verify_suite == "equivalence") {
                results.push_back(verify_equivalence(verify_m, verify_samples, verify_seed));
            } else if (verify_suite == "lemma-delpattern") {
                if (verify_n != 0) {
                    results.push_back(
                        verify_del_pattern(verify_n, verify_samples, verify_seed));
                } else {
                    results.push_back(verify_del_pattern(3, verify_samples, verify_seed));
                    results.push_back(verify_del_pattern(4, verify_samples, verify_seed));
                }
            } else if (verify_suite == "counts") {
                results = verify_counts();
            } else if (verify_suite == "code") {
                results.push_back(verify_code(verify_n == 0 ? 8 : verify_n,
                                              verify_codewords, verify_seed,
                                              verify_oracle_cases));
            } else {  // t-equivalence
                int m = cmd_verify->count("--m") > 0 ? verify_m : 4;
                results.push_back(
                    verify_t_equivalence(m, verify_t, verify_samples, verify_seed));
            }
            bool all_ok = true;
            for (const auto& r : results) {
                std::cout << to_json_line(r) << "\n";
                all_ok = all_ok && r.passed;
            }
            return all_ok ? 0 : 1;
        }
        if (*cmd_census) {
            std::cerr << "config: command=census n=" << census_n
                      << " threads=" << census_threads << "\n";
            std::cout << format_census(census(census_n, census_threads)) << "\n";
            return 0;
        }
        if (*cmd_bounds) {
            std::cerr << "config: command=bounds n=" << bounds_n << "\n";
            RedundancyReport r = redundancy_bounds(bounds_n);
            std::ostringstream os;
            os << std::setprecision(12);
            os << "n=" << r.n << "\n"
               << "lower=" << r.lower << "\n"
               << "prop1_bound=" << r.prop1_bound << "\n"
               << "parity_redundancy=" << r.parity_redundancy << "\n"
               << "upper=" << r.upper << "\n"
               << "gap=" << r.gap << "\n"
               << "gap_bound=" << r.gap_bound << "\n";
            std::cout << os.str();
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ")\n";
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
