// Command-line frontend: encode / decode / bounds / simulate / selftest over
// the shared matrix text format and CSV output.
//
// Exit codes: 0 success, 1 decode-failure verdict, 2 usage or IO error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irsdec/bounds.hpp"
#include "irsdec/decoder.hpp"
#include "irsdec/irs.hpp"
#include "irsdec/matrix_io.hpp"
#include "irsdec/pgz.hpp"
#include "irsdec/rs.hpp"
#include "irsdec/selftest.hpp"
#include "irsdec/sim.hpp"

namespace {

using namespace irsdec;

struct CodeOptions {
    int field_bits = 8;
    std::string poly_hex;
    int k = 188;
    std::string variant = "shortened";
    int shorten = 51;
    int l = 16;
};

void add_code_options(CLI::App* cmd, CodeOptions& opts) {
    cmd->add_option("--field-bits", opts.field_bits, "extension degree w of GF(2^w)")
        ->check(CLI::Range(2, 16));
    cmd->add_option("--poly", opts.poly_hex,
                    "primitive polynomial as hex (default: standard for w)");
    cmd->add_option("--k", opts.k, "information symbols per column");
    cmd->add_option("--variant", opts.variant, "extended | cyclic | shortened")
        ->check(CLI::IsMember({"extended", "cyclic", "shortened"}));
    cmd->add_option("--shorten", opts.shorten, "shortened positions (shortened variant)");
    cmd->add_option("--l", opts.l, "interleaving depth")->check(CLI::PositiveNumber);
}

RsSpec build_spec(const CodeOptions& opts) {
    uint32_t poly = opts.poly_hex.empty()
                        ? default_primitive_poly(opts.field_bits)
                        : static_cast<uint32_t>(std::stoul(opts.poly_hex, nullptr, 16));
    Field gf(opts.field_bits, poly);
    Variant variant = opts.variant == "extended" ? Variant::Extended
                      : opts.variant == "cyclic" ? Variant::Cyclic
                                                 : Variant::Shortened;
    return make_spec(gf, opts.k, variant, variant == Variant::Shortened ? opts.shorten : 0);
}

Matrix read_input(const std::string& path, const std::string& format, int cols, uint32_t q) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!path.empty() && path != "-") {
        file.open(path, std::ios::binary);
        if (!file) throw ParseError("cannot open input file '" + path + "'");
        in = &file;
    }
    return format == "raw" ? read_matrix_raw(*in, cols, q) : read_matrix_text(*in, q);
}

void write_output(const std::string& path, const std::string& format, const Matrix& m,
                  uint32_t q) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!path.empty() && path != "-") {
        file.open(path, std::ios::binary);
        if (!file) throw ParseError("cannot open output file '" + path + "'");
        out = &file;
    }
    if (format == "raw")
        write_matrix_raw(*out, m, q);
    else
        write_matrix_text(*out, m, q);
}

void write_text_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open output file '" + path + "'");
    file << text;
}

std::vector<double> parse_grid(const std::string& grid) {
    std::vector<double> points;
    if (grid.find(',') != std::string::npos) {
        std::istringstream is(grid);
        std::string tok;
        while (std::getline(is, tok, ',')) points.push_back(std::stod(tok));
        return points;
    }
    size_t c1 = grid.find(':');
    size_t c2 = grid.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ParseError("grid must be 'start:stop:step', 'start:stop:log10xN' or a comma list");
    double start = std::stod(grid.substr(0, c1));
    double stop = std::stod(grid.substr(c1 + 1, c2 - c1 - 1));
    std::string step = grid.substr(c2 + 1);
    if (step.rfind("log10x", 0) == 0) {
        int n = std::stoi(step.substr(6));
        if (n < 1 || start <= 0 || stop <= 0 || stop < start)
            throw ParseError("invalid log grid");
        if (n == 1) return {start};
        double lg0 = std::log10(start), lg1 = std::log10(stop);
        for (int i = 0; i < n; ++i)
            points.push_back(std::pow(10.0, lg0 + (lg1 - lg0) * i / (n - 1)));
        return points;
    }
    double h = std::stod(step);
    if (h <= 0 || stop < start) throw ParseError("invalid linear grid");
    for (double p = start; p <= stop + h * 1e-9; p += h) points.push_back(p);
    return points;
}

int cmd_encode(const CodeOptions& code, const std::string& in_path,
               const std::string& out_path, const std::string& format) {
    RsSpec spec = build_spec(code);
    Matrix info = read_input(in_path, format, code.l, spec.gf.size());
    if (info.rows != spec.k || info.cols != code.l) {
        std::ostringstream os;
        os << "expected a " << spec.k << " x " << code.l << " information matrix, got "
           << info.rows << " x " << info.cols;
        throw ParseError(os.str());
    }
    write_output(out_path, format, encode_irs(spec, info), spec.gf.size());
    return 0;
}

int cmd_decode(const CodeOptions& code, const std::string& in_path,
               const std::string& out_path, const std::string& format, bool report,
               const std::string& decoder, bool incremental, int check_cols) {
    RsSpec spec = build_spec(code);
    Matrix received = read_input(in_path, format, code.l, spec.gf.size());
    if (received.rows != spec.n || received.cols != code.l) {
        std::ostringstream os;
        os << "expected a " << spec.n << " x " << code.l << " received matrix, got "
           << received.rows << " x " << received.cols;
        throw ParseError(os.str());
    }
    DecodeResult res;
    if (decoder == "indep")
        res = decode_independent(spec, received);
    else if (incremental)
        res = decode_incremental(spec, received, check_cols);
    else
        res = decode(spec, received);
    if (!res.ok) {
        std::cerr << "decoding failure: " << fail_reason_name(res.reason) << "\n";
        return 1;
    }
    write_output(out_path, format, res.codeword, spec.gf.size());
    if (report) {
        std::ostringstream os;
        os << "f=" << res.support.size() << " rows=";
        for (size_t i = 0; i < res.support.size(); ++i) {
            if (i) os << ',';
            os << res.support[i];
        }
        std::cout << os.str() << "\n";
    }
    return 0;
}

int cmd_bounds(int n, int k, double q, int l, const std::string& grid,
               const std::string& out_path) {
    if (k < 1 || k >= n) throw ParseError("need 1 <= k < n");
    BoundsInput bi;
    bi.q = q;
    bi.l = l;
    bi.f_max = std::min(l, n - k - 1);
    bi.n_rows = n;
    std::string csv = "p_i,fer_bound,fer_err_bound\n";
    char buf[128];
    for (double p : parse_grid(grid)) {
        bi.p_i = p;
        std::snprintf(buf, sizeof(buf), "%.6e,%.6e,%.6e\n", p, fer_bound(bi),
                      fer_error_bound(bi));
        csv += buf;
    }
    write_text_output(out_path, csv);
    return 0;
}

int cmd_simulate(const CodeOptions& code, const std::string& grid, uint64_t trials,
                 uint64_t seed, int workers, const std::string& decoder, int check_cols,
                 const std::string& mode, int f, bool force_independent,
                 const std::string& out_path) {
    if (trials < 1) throw ParseError("trials must be >= 1");
    SimConfig cfg;
    cfg.spec = build_spec(code);
    cfg.l = code.l;
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.workers = workers;
    cfg.check_cols = check_cols;
    cfg.decoder = decoder == "indep"         ? DecoderKind::IndependentColumns
                  : decoder == "incremental" ? DecoderKind::Incremental
                                             : DecoderKind::Collaborative;

    if (mode == "bernoulli") {
        cfg.model = ErrorModel::bernoulli(0.0);
        std::vector<double> points = parse_grid(grid);
        write_text_output(out_path, sweep_csv(sweep(cfg, points)));
        return 0;
    }
    cfg.model = mode == "dependent" ? ErrorModel::dependent(f)
                                    : ErrorModel::fixed(f, force_independent);
    SimStats st = run(cfg);
    std::ostringstream os;
    os << "trials=" << st.trials << " successes=" << st.successes
       << " miscorrections=" << st.miscorrections;
    for (int r = 0; r < 4; ++r)
        os << " " << fail_reason_name(static_cast<FailReason>(r)) << "="
           << st.detected_failures[r];
    os << "\n";
    write_text_output(out_path, os.str());
    return 0;
}

int cmd_selftest() {
    auto results = run_selftest();
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "ok   " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        failures += r.passed ? 0 : 1;
    }
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interleaved Reed-Solomon codec: joint row-error decoding, analytical "
                 "failure bounds and a seeded Monte-Carlo harness"};
    app.require_subcommand(1);

    CodeOptions code;
    std::string in_path, out_path;
    std::string format = "text";
    bool report = false;
    bool incremental = false;
    int check_cols = 2;
    std::string decoder = "collab";

    auto* enc = app.add_subcommand("encode", "encode a k x l information matrix");
    add_code_options(enc, code);
    enc->add_option("--in", in_path, "input path (default stdin)");
    enc->add_option("--out", out_path, "output path (default stdout)");
    enc->add_option("--format", format, "text | raw")->check(CLI::IsMember({"text", "raw"}));

    auto* dec = app.add_subcommand("decode", "decode a received n x l matrix");
    add_code_options(dec, code);
    dec->add_option("--in", in_path, "input path (default stdin)");
    dec->add_option("--out", out_path, "output path (default stdout)");
    dec->add_option("--format", format, "text | raw")->check(CLI::IsMember({"text", "raw"}));
    dec->add_flag("--report", report, "print 'f=<count> rows=<list>' after decoding");
    dec->add_flag("--incremental", incremental, "grow syndrome submatrices instead of a "
                                                "full elimination");
    dec->add_option("--check-cols", check_cols,
                    "extra columns used to confirm an incremental candidate")
        ->check(CLI::NonNegativeNumber);
    dec->add_option("--decoder", decoder, "collab | indep")
        ->check(CLI::IsMember({"collab", "indep"}));

    int bn = 204, bk = 188, bl = 16;
    double bq = 256.0;
    std::string grid = "1e-3:1e-1:log10x7";
    auto* bnd = app.add_subcommand("bounds", "emit analytical FER bound curves as CSV");
    bnd->add_option("--n", bn, "transmitted rows per word");
    bnd->add_option("--k", bk, "information symbols per column");
    bnd->add_option("--q", bq, "field size");
    bnd->add_option("--l", bl, "interleaving depth")->check(CLI::PositiveNumber);
    bnd->add_option("--grid", grid, "p_i grid: start:stop:step, start:stop:log10xN or list");
    bnd->add_option("--out", out_path, "output path (default stdout)");

    uint64_t trials = 10000, seed = 0;
    int workers = 1, ff = 2;
    bool force_independent = false;
    std::string mode = "bernoulli";
    auto* simc = app.add_subcommand("simulate", "Monte-Carlo decoding experiments");
    add_code_options(simc, code);
    simc->add_option("--grid", grid, "p_i grid for bernoulli mode");
    simc->add_option("--trials", trials, "trials per grid point");
    simc->add_option("--seed", seed, "master seed");
    simc->add_option("--workers", workers, "worker threads (output independent of this)")
        ->check(CLI::PositiveNumber);
    simc->add_option("--decoder", decoder, "collab | incremental | indep")
        ->check(CLI::IsMember({"collab", "incremental", "indep"}));
    simc->add_option("--check-cols", check_cols, "incremental confirmation columns")
        ->check(CLI::NonNegativeNumber);
    simc->add_option("--mode", mode, "bernoulli | fixed | dependent")
        ->check(CLI::IsMember({"bernoulli", "fixed", "dependent"}));
    simc->add_option("--f", ff, "row-error count for fixed/dependent modes");
    simc->add_flag("--force-independent", force_independent,
                   "redraw fixed-mode rows until linearly independent");
    simc->add_option("--out", out_path, "output path (default stdout)");

    auto* self = app.add_subcommand("selftest", "run the embedded invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enc->parsed()) return cmd_encode(code, in_path, out_path, format);
        if (dec->parsed())
            return cmd_decode(code, in_path, out_path, format, report, decoder, incremental,
                              check_cols);
        if (bnd->parsed()) return cmd_bounds(bn, bk, bq, bl, grid, out_path);
        if (simc->parsed())
            return cmd_simulate(code, grid, trials, seed, workers, decoder, check_cols, mode,
                                ff, force_independent, out_path);
        if (self->parsed()) return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
