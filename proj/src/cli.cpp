#include "qlc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>

#include "qlc/bench.hpp"
#include "qlc/codec.hpp"
#include "qlc/error.hpp"
#include "qlc/report.hpp"
#include "qlc/synth.hpp"

namespace qlc::cli {

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open " + path);
    }
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(ErrorKind::Io, "read failed on " + path);
    }
    return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error(ErrorKind::Io, "write failed on " + path);
    }
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::BadMagic:
    case ErrorKind::BadVersion:
        return kBadFormat;
    case ErrorKind::TruncatedPayload:
    case ErrorKind::InvalidCode:
    case ErrorKind::TrailingGarbage:
    case ErrorKind::InvalidMapping:
    case ErrorKind::InvalidScheme:
        return kCorruptPayload;
    case ErrorKind::VerificationFailed:
        return kVerificationFailed;
    default:
        return kIoError;
    }
}

struct Choice {
    QlcScheme scheme;
    SymbolMapping mapping;
};

Choice choose(const std::string& name, std::span<const std::uint8_t> data) {
    if (data.empty()) {
        return {name == "ffn2" ? preset_ffn2() : preset_ffn1(), SymbolMapping::identity()};
    }
    const Pmf256 p = to_pmf(build_histogram(data));
    const QlcScheme scheme = name == "ffn1" ? preset_ffn1() : name == "ffn2" ? preset_ffn2() : adapt_scheme(p);
    return {scheme, build_mapping(p)};
}

int cmd_analyze(const std::string& input, bool json, bool occupancy, std::ostream& out, std::ostream& err) {
    const auto data = read_file(input);
    if (data.empty()) {
        err << "qlc: " << input << " is empty; nothing to analyze\n";
        return kIoError;
    }
    const AnalysisReport report = analyze(build_histogram(data));
    if (json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        print_report(out, report, occupancy);
    }
    return kOk;
}

int cmd_encode(const std::string& input, const std::string& output, const std::string& scheme_name, bool raw,
               std::ostream& out, std::ostream& err) {
    const auto data = read_file(input);
    if (data.empty() && scheme_name == "adapt") {
        err << "qlc: cannot adapt a scheme to empty input; use --scheme ffn1 or ffn2\n";
        return kEmptyAdaptInput;
    }
    const Choice choice = choose(scheme_name, data);
    const QlcContainer container = encode(data, choice.scheme, choice.mapping);
    const std::vector<std::uint8_t> bytes = raw ? container.payload : container.serialize();
    write_file(output, bytes);

    out << "original   " << data.size() << " bytes\n";
    out << "encoded    " << bytes.size() << " bytes" << (raw ? " (raw payload)" : "") << '\n';
    out << "payload    " << container.payload_bits << " bits\n";
    if (!data.empty()) {
        const double n = static_cast<double>(data.size());
        out << std::fixed << std::setprecision(2);
        out << "compressibility " << 100.0 * (1.0 - static_cast<double>(bytes.size()) / n) << " % (file), "
            << 100.0 * (1.0 - static_cast<double>(container.payload_bits) / (8.0 * n)) << " % (payload)\n";
        out << std::defaultfloat;
    }
    return kOk;
}

int cmd_decode(const std::string& input, const std::string& output, std::ostream& out) {
    const auto bytes = read_file(input);
    const QlcContainer container = QlcContainer::parse(bytes);
    const auto data = decode(container);
    write_file(output, data);
    out << "decoded    " << data.size() << " bytes\n";
    return kOk;
}

int cmd_gen(const SyntheticSpec& spec, const std::string& output, std::ostream& out) {
    const auto data = generate(spec);
    write_file(output, data);
    out << "wrote " << data.size() << " bytes of " << to_string(spec.kind) << " (seed " << spec.seed << ")\n";
    return kOk;
}

int cmd_bench(const std::string& input, const std::string& scheme_name, int reps, std::ostream& out,
              std::ostream& err) {
    const auto data = read_file(input);
    if (data.empty()) {
        err << "qlc: " << input << " is empty; nothing to benchmark\n";
        return kIoError;
    }
    const Choice choice = choose(scheme_name, data);
    const BenchResult result = run_bench(data, choice.scheme, choice.mapping, reps);

    out << "input " << result.input_bytes << " bytes, scheme " << scheme_name << ", best of " << result.repetitions
        << '\n';
    out << "qlc payload " << result.qlc_payload_bits << " bits, huffman " << result.huffman_bits << " bits\n";
    out << "decode outputs verified\n";
    for (const auto& row : result.rows) {
        out << std::left << std::setw(30) << row.name << std::right << std::fixed << std::setprecision(1)
            << std::setw(10) << row.megabytes_per_second << " MB/s" << std::setprecision(6) << std::setw(12)
            << row.best_seconds << " s\n";
    }
    out << std::defaultfloat;
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quad length coding for 8-bit symbol streams", "qlc"};
    app.require_subcommand(1);

    const std::vector<std::string> schemes{"ffn1", "ffn2", "adapt"};

    std::string input;
    std::string output;
    bool json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Entropy, Huffman and QLC compressibility of a file");
    analyze_cmd->add_option("input", input, "Input file")->required();
    analyze_cmd->add_flag("--json", json, "Emit JSON");
    auto* compare_cmd = app.add_subcommand("compare", "analyze with per-area occupancy for each scheme");
    compare_cmd->add_option("input", input, "Input file")->required();
    compare_cmd->add_flag("--json", json, "Emit JSON");

    std::string scheme_name = "adapt";
    bool raw = false;
    auto* encode_cmd = app.add_subcommand("encode", "Encode a file into a QLC1 container");
    encode_cmd->add_option("input", input, "Input file")->required();
    encode_cmd->add_option("output", output, "Output file")->required();
    encode_cmd->add_option("--scheme", scheme_name, "Coding scheme")->check(CLI::IsMember(schemes));
    encode_cmd->add_flag("--raw", raw, "Write the packed payload only, without the container header");

    auto* decode_cmd = app.add_subcommand("decode", "Decode a QLC1 container");
    decode_cmd->add_option("input", input, "Input container")->required();
    decode_cmd->add_option("output", output, "Output file")->required();

    SyntheticSpec spec;
    std::string kind_name;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic corpus");
    gen_cmd->add_option("kind", kind_name, "gaussian-e4m3 | spike-zero | uniform | zipf")
        ->required()
        ->check(CLI::IsMember({"gaussian-e4m3", "spike-zero", "uniform", "zipf"}));
    gen_cmd->add_option("output", output, "Output file")->required();
    gen_cmd->add_option("--size", spec.size, "Bytes to generate")->check(CLI::PositiveNumber)->default_val(1 << 20);
    gen_cmd->add_option("--seed", spec.seed, "RNG seed")->default_val(1);
    gen_cmd->add_option("--sigma", spec.sigma, "Gaussian sigma before block scaling")->default_val(1.0);
    gen_cmd->add_option("--p0", spec.p0, "Probability of the zero pattern (spike-zero)")
        ->check(CLI::Range(0.0, 1.0))
        ->default_val(0.5);
    gen_cmd->add_option("--exponent", spec.zipf_exponent, "Zipf exponent")->default_val(1.0);
    gen_cmd->add_option("--block-size", spec.block_size, "Scaling block size")
        ->check(CLI::PositiveNumber)
        ->default_val(32);

    int reps = 5;
    auto* bench_cmd = app.add_subcommand("bench", "Throughput of QLC and Huffman encode/decode");
    bench_cmd->add_option("input", input, "Input file")->required();
    bench_cmd->add_option("--scheme", scheme_name, "Coding scheme")->check(CLI::IsMember(schemes));
    bench_cmd->add_option("--reps", reps, "Timed repetitions (best-of)")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (analyze_cmd->parsed()) {
            return cmd_analyze(input, json, false, out, err);
        }
        if (compare_cmd->parsed()) {
            return cmd_analyze(input, json, true, out, err);
        }
        if (encode_cmd->parsed()) {
            return cmd_encode(input, output, scheme_name, raw, out, err);
        }
        if (decode_cmd->parsed()) {
            return cmd_decode(input, output, out);
        }
        if (gen_cmd->parsed()) {
            spec.kind = *parse_distribution(kind_name);
            return cmd_gen(spec, output, out);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(input, scheme_name, reps, out, err);
        }
    } catch (const Error& e) {
        err << "qlc: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kUsage;
}

} // namespace qlc::cli
