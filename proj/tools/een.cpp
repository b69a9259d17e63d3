// een: command-line front end for the essential-element-network pipeline.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "een/error.hpp"
#include "een/ingest.hpp"
#include "een/manifest.hpp"
#include "een/metrics.hpp"
#include "een/network.hpp"
#include "een/selforg.hpp"
#include "een/synth.hpp"
#include "een/textio.hpp"
#include "een/words.hpp"

namespace fs = std::filesystem;
using namespace een;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNoQualifying = 3;
constexpr int kExitEmpty = 4;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NoQualifyingCombo: return kExitNoQualifying;
        case ErrorCode::AllSilent:
        case ErrorCode::EmptyGrid:
        case ErrorCode::EmptyWordMap:
        case ErrorCode::EmptyInput: return kExitEmpty;
        default: return kExitInvalid;
    }
}

void report_error(std::string_view code, std::string_view message) {
    Json j;
    j["error"] = code;
    j["message"] = message;
    std::cerr << j.dump() << std::endl;
}

Json load_json(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::InvalidArgument, path + ": " + e.what());
    }
}

// Optional numeric flags that override a JSON config.
template <typename T>
struct Override {
    std::optional<T> value;
    void apply(T& target) const {
        if (value) target = *value;
    }
};

struct EncodeOptions {
    std::string config_path;
    Override<int> n_scales, vmax, activity_min;
    Override<double> f0, frame_sec, db_floor;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "EncodeConfig JSON file");
        cmd->add_option("--n-scales", n_scales.value, "number of semitone scale bins");
        cmd->add_option("--f0", f0.value, "centre of the lowest bin in Hz");
        cmd->add_option("--frame-sec", frame_sec.value, "frame length in seconds");
        cmd->add_option("--vmax", vmax.value, "volume ceiling");
        cmd->add_option("--db-floor", db_floor.value, "lower dB clamp (negative)");
        cmd->add_option("--activity-min", activity_min.value, "minimum active volume");
    }

    EncodeConfig resolve() const {
        EncodeConfig cfg;
        if (!config_path.empty()) cfg = encode_config_from_json(load_json(config_path));
        n_scales.apply(cfg.n_scales);
        f0.apply(cfg.f0);
        frame_sec.apply(cfg.frame_sec);
        vmax.apply(cfg.vmax);
        db_floor.apply(cfg.db_floor);
        activity_min.apply(cfg.activity_min);
        cfg.validate();
        return cfg;
    }
};

struct NeighborhoodOptions {
    std::optional<std::string> mode;
    Override<int> r_scale, r_time;

    void attach(CLI::App* cmd) {
        cmd->add_option("--mode", mode, "candidate neighbourhood: windowed or global")
            ->check(CLI::IsMember({"windowed", "global"}));
        cmd->add_option("--r-scale", r_scale.value, "window half-width in scales");
        cmd->add_option("--r-time", r_time.value, "window half-width in frames");
    }

    void apply(NeighborhoodSpec& nb) const {
        if (mode) nb.mode = *mode == "global" ? NeighborhoodMode::Global : NeighborhoodMode::Windowed;
        r_scale.apply(nb.r_scale);
        r_time.apply(nb.r_time);
        nb.validate();
    }
};

struct GridOptions {
    std::string spec_path;
    std::optional<std::string> theta_mode;
    NeighborhoodOptions neighborhood;

    void attach(CLI::App* cmd) {
        cmd->add_option("--grid", spec_path, "GridSpec JSON file (default: desk grid)");
        cmd->add_option("--theta-mode", theta_mode, "percentile or absolute")
            ->check(CLI::IsMember({"percentile", "absolute"}));
        neighborhood.attach(cmd);
    }

    GridSpec resolve() const {
        GridSpec spec = spec_path.empty() ? GridSpec::desk_default() : grid_spec_from_json(load_json(spec_path));
        if (theta_mode) spec.theta_mode = *theta_mode == "percentile" ? ThetaMode::Percentile : ThetaMode::Absolute;
        neighborhood.apply(spec.neighborhood);
        spec.validate();
        return spec;
    }
};

RunManifest make_manifest(std::string command, std::vector<std::string> inputs, const Json& config,
                          std::vector<std::string> outputs, std::uint64_t seed = 0) {
    RunManifest m;
    m.command = std::move(command);
    m.inputs = std::move(inputs);
    m.config_hash = fnv1a_hex(config.dump());
    m.seed = seed;
    m.outputs = std::move(outputs);
    return m;
}

void print_rows(const std::vector<std::pair<std::string, double>>& rows) {
    for (const auto& [name, value] : rows) std::cout << name << "," << format_number(value) << "\n";
}

Json search_config(const GridSpec& spec) {
    Json j;
    j["grid"] = to_json(spec);
    return j;
}

// --- subcommand bodies ------------------------------------------------------

int cmd_encode(const std::string& input, const std::string& output, const EncodeOptions& opts) {
    const EncodeConfig cfg = opts.resolve();
    const SampleBuffer buf = decode_audio(input, cfg);
    const ScaleTimeGrid grid = encode(buf, cfg);
    const auto m = make_manifest("encode", {input}, to_json(cfg), {output});
    write_file_atomic(output, format_grid_csv(grid, {m.comment()}));
    return 0;
}

struct NetworkArgs {
    std::string input, output, edges, weights_path;
    Override<double> w1, w2, w3, w4, theta;
    NeighborhoodOptions neighborhood;
};

int cmd_network(const NetworkArgs& a) {
    WeightConfig w;
    if (!a.weights_path.empty()) w = weight_config_from_json(load_json(a.weights_path));
    a.w1.apply(w.w1);
    a.w2.apply(w.w2);
    a.w3.apply(w.w3);
    a.w4.apply(w.w4);
    a.theta.apply(w.theta);
    w.validate();
    NeighborhoodSpec nb;
    a.neighborhood.apply(nb);

    const ScaleTimeGrid grid = parse_grid_csv(read_csv_file(a.input));
    const EenNetwork net = build_network(grid, w, nb);
    const WordMap wm = clustering_coefficients(net);

    Json config;
    config["weights"] = to_json(w);
    config["neighborhood"] = to_json(nb);
    std::vector<std::string> outputs{a.output};
    if (!a.edges.empty()) outputs.push_back(a.edges);
    const auto m = make_manifest("network", {a.input}, config, outputs);
    write_file_atomic(a.output, format_words_csv(wm, {m.comment()}));
    if (!a.edges.empty()) {
        std::string out = "# " + m.comment() + "\nscale_a,time_a,scale_b,time_b\n";
        for (auto [i, j] : net.edges) {
            const Pixel& p = net.nodes[i];
            const Pixel& q = net.nodes[j];
            out += std::to_string(p.scale) + "," + std::to_string(p.time) + "," + std::to_string(q.scale) + "," +
                   std::to_string(q.time) + "\n";
        }
        write_file_atomic(a.edges, out);
    }
    return 0;
}

int cmd_rank(const std::string& input, const std::string& output) {
    const WordMap wm = parse_words_csv(read_csv_file(input));
    const auto m = make_manifest("rank", {input}, to_json(wm.weights), {output});
    write_file_atomic(output, format_rank_csv(rank_table(wm), {m.comment()}));
    return 0;
}

int cmd_fit(const std::string& input, int drop_top) {
    const RankTable rt = parse_rank_csv(read_csv_file(input));
    const ZipfFit fit = zipf_fit(rt, drop_top);
    print_rows({{"a", fit.a}, {"b", fit.b}, {"r2", fit.r2}, {"n_points", fit.n_points},
                {"qualifies", fit.r2 > kQualifyingR2 ? 1.0 : 0.0}});
    return 0;
}

int cmd_seq(const std::string& input, const std::string& output, bool include_inactive, bool time_major) {
    const WordMap wm = parse_words_csv(read_csv_file(input));
    Json config;
    config["include_inactive"] = include_inactive;
    config["order"] = time_major ? "time-major" : "scale-major";
    const auto m = make_manifest("seq", {input}, config, {output});
    const auto seq = sequence_1d(wm, include_inactive, time_major ? ScanOrder::TimeMajor : ScanOrder::ScaleMajor);
    write_file_atomic(output, format_sequence_csv(seq, {m.comment()}));
    return 0;
}

int cmd_image(const std::string& input, const std::string& output, bool inverse) {
    if (inverse) {
        const DenseWordGrid dense = parse_image_csv(read_csv_file(input, false));
        const auto m = make_manifest("image --inverse", {input}, to_json(dense.weights), {output});
        write_file_atomic(output, format_words_csv(sparse_from_dense(dense), {m.comment()}));
        return 0;
    }
    const WordMap wm = parse_words_csv(read_csv_file(input));
    const auto m = make_manifest("image", {input}, to_json(wm.weights), {output});
    write_file_atomic(output, format_image_csv(word_grid_2d(wm), {m.comment()}));
    return 0;
}

void write_search(const SearchOutcome& outcome, const fs::path& dir, const RunManifest& base) {
    RunManifest m = base;
    write_file_atomic(dir / "sweep.csv", format_sweep_csv(outcome.results, {m.comment()}));
    if (outcome.winner) {
        Json best = winner_json(outcome.results[*outcome.winner]);
        best["manifest"] = m.to_json();
        write_file_atomic(dir / "best.json", best.dump(2) + "\n");
    }
}

int cmd_optimize(const std::string& input, const std::string& outdir, const GridOptions& opts, unsigned jobs) {
    const GridSpec spec = opts.resolve();
    const ScaleTimeGrid grid = parse_grid_csv(read_csv_file(input));
    fs::create_directories(outdir);
    const fs::path dir(outdir);
    const SearchOutcome outcome = self_organize(grid, spec, jobs);
    std::vector<std::string> outputs{(dir / "sweep.csv").string()};
    if (outcome.winner) outputs.push_back((dir / "best.json").string());
    write_search(outcome, dir, make_manifest("optimize", {input}, search_config(spec), outputs));
    outcome.best();  // NoQualifyingCombo -> exit 3 after the sweep is on disk
    return 0;
}

int cmd_run(const std::string& input, const std::string& outdir, const EncodeOptions& enc, const GridOptions& grid_opts,
            unsigned jobs) {
    const EncodeConfig cfg = enc.resolve();
    const GridSpec spec = grid_opts.resolve();
    const SampleBuffer buf = decode_audio(input, cfg);
    const ScaleTimeGrid grid = encode(buf, cfg);

    const fs::path dir(outdir);
    fs::create_directories(dir);
    Json config;
    config["encode"] = to_json(cfg);
    config["grid"] = to_json(spec);
    const std::vector<std::string> names{"grid.csv", "sweep.csv", "best.json", "words.csv", "rank.csv", "seq.csv"};
    std::vector<std::string> outputs;
    for (const auto& n : names) outputs.push_back((dir / n).string());
    const RunManifest m = make_manifest("run", {input}, config, outputs);

    write_file_atomic(dir / "grid.csv", format_grid_csv(grid, {m.comment()}));
    const SearchOutcome outcome = self_organize(grid, spec, jobs);
    write_search(outcome, dir, m);
    const EvalResult& best = outcome.best();

    const WordMap wm = clustering_coefficients(build_network(grid, best.config, spec.neighborhood));
    write_file_atomic(dir / "words.csv", format_words_csv(wm, {m.comment()}));
    write_file_atomic(dir / "rank.csv", format_rank_csv(rank_table(wm), {m.comment()}));
    write_file_atomic(dir / "seq.csv", format_sequence_csv(sequence_1d(wm), {m.comment()}));
    return 0;
}

int cmd_perturb(const std::string& input, const std::string& output, double loss_rate, std::uint64_t seed) {
    const WordMap wm = parse_words_csv(read_csv_file(input));
    Json config;
    config["loss_rate"] = loss_rate;
    const auto m = make_manifest("perturb", {input}, config, {output}, seed);
    write_file_atomic(output, format_words_csv(random_deletion(wm, loss_rate, seed), {m.comment()}));
    return 0;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
    return out;
}

std::vector<double> load_samples(const std::string& path, const std::string& column) {
    const CsvTable table = read_csv_file(path, false);
    if (column.empty() && !table.rows.empty() && table.rows.front().size() == 3 && table.rows.front()[0] == "x" &&
        table.rows.front()[2] == "score")
        return parse_samples(table, "score");
    return parse_samples(table, column);
}

std::vector<ScorePoint> load_points(const std::string& path) {
    return parse_points_csv(read_csv_file(path));
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Essential element network: audio -> scale-time words -> Zipf self-organization"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    unsigned jobs = 1;

    // encode
    std::string enc_in, enc_out;
    EncodeOptions enc_opts;
    auto* encode_cmd = app.add_subcommand("encode", "WAV -> een-grid CSV");
    encode_cmd->add_option("input", enc_in, "input WAV file")->required();
    encode_cmd->add_option("-o,--output", enc_out, "output grid CSV")->required();
    enc_opts.attach(encode_cmd);

    // network
    NetworkArgs net_args;
    auto* network_cmd = app.add_subcommand("network", "grid CSV -> word map (clustering coefficients)");
    network_cmd->add_option("input", net_args.input, "een-grid CSV")->required();
    network_cmd->add_option("-o,--output", net_args.output, "output een-words CSV")->required();
    network_cmd->add_option("--edges", net_args.edges, "also write the edge list");
    network_cmd->add_option("--weights", net_args.weights_path, "WeightConfig JSON file");
    network_cmd->add_option("--w1", net_args.w1.value);
    network_cmd->add_option("--w2", net_args.w2.value);
    network_cmd->add_option("--w3", net_args.w3.value);
    network_cmd->add_option("--w4", net_args.w4.value);
    network_cmd->add_option("--theta", net_args.theta.value, "absolute link threshold");
    net_args.neighborhood.attach(network_cmd);

    // rank / fit / seq / image
    std::string rank_in, rank_out;
    auto* rank_cmd = app.add_subcommand("rank", "word map -> rank-frequency table");
    rank_cmd->add_option("input", rank_in)->required();
    rank_cmd->add_option("-o,--output", rank_out)->required();

    std::string fit_in;
    int drop_top = 1;
    auto* fit_cmd = app.add_subcommand("fit", "Zipf fit of a rank table (name,value rows on stdout)");
    fit_cmd->add_option("input", fit_in)->required();
    fit_cmd->add_option("--drop-top", drop_top, "number of top ranks removed before fitting")->check(CLI::NonNegativeNumber);

    std::string seq_in, seq_out;
    bool include_inactive = false, time_major = false;
    auto* seq_cmd = app.add_subcommand("seq", "word map -> 1D word sequence");
    seq_cmd->add_option("input", seq_in)->required();
    seq_cmd->add_option("-o,--output", seq_out)->required();
    seq_cmd->add_flag("--include-inactive", include_inactive, "emit empty fields for inactive cells");
    seq_cmd->add_flag("--time-major", time_major, "scan frames in the outer loop");

    std::string img_in, img_out;
    bool inverse = false;
    auto* image_cmd = app.add_subcommand("image", "word map <-> dense 2D word image");
    image_cmd->add_option("input", img_in)->required();
    image_cmd->add_option("-o,--output", img_out)->required();
    image_cmd->add_flag("--inverse", inverse, "image CSV -> een-words CSV");

    // optimize / run
    std::string opt_in, opt_out;
    GridOptions opt_grid;
    auto* optimize_cmd = app.add_subcommand("optimize", "exhaustive weight search on a grid CSV");
    optimize_cmd->add_option("input", opt_in)->required();
    optimize_cmd->add_option("-o,--output", opt_out, "output directory")->required();
    optimize_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    opt_grid.attach(optimize_cmd);

    std::string run_in, run_out;
    EncodeOptions run_enc;
    GridOptions run_grid;
    auto* run_cmd = app.add_subcommand("run", "encode + optimize + word exports");
    run_cmd->add_option("input", run_in, "input WAV file")->required();
    run_cmd->add_option("-o,--output", run_out, "output directory")->required();
    run_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    run_enc.attach(run_cmd);
    run_grid.attach(run_cmd);

    // perturb
    std::string pert_in, pert_out;
    double loss_rate = 0.0;
    std::uint64_t pert_seed = 0;
    auto* perturb_cmd = app.add_subcommand("perturb", "randomly delete a fraction of words");
    perturb_cmd->add_option("input", pert_in)->required();
    perturb_cmd->add_option("-o,--output", pert_out)->required();
    perturb_cmd->add_option("--loss-rate", loss_rate)->required()->check(CLI::Range(0.0, 1.0));
    perturb_cmd->add_option("--seed", pert_seed);

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "downstream statistics");
    stats_cmd->require_subcommand(1);
    std::string probs_text, probs_file;
    double base = 0.0;
    auto* entropy_cmd = stats_cmd->add_subcommand("entropy", "Shannon entropy of a probability vector");
    entropy_cmd->add_option("input", probs_file, "file with one probability per row");
    entropy_cmd->add_option("--probs", probs_text, "comma-separated probabilities");
    entropy_cmd->add_option("--base", base, "logarithm base (default e)");

    std::string skew_in, skew_column;
    auto* skew_cmd = stats_cmd->add_subcommand("skew", "population skewness of samples or point scores");
    skew_cmd->add_option("input", skew_in)->required();
    skew_cmd->add_option("--column", skew_column, "column name to read");

    std::string density_in;
    bool per_point = false;
    auto* density_cmd = stats_cmd->add_subcommand("density", "graph density of a score point set");
    density_cmd->add_option("input", density_in)->required();
    density_cmd->add_flag("--per-point", per_point, "use per-point mean distances as the link threshold");

    std::string deciles_in;
    auto* deciles_cmd = stats_cmd->add_subcommand("deciles", "proportions of normalized scores per tenth");
    deciles_cmd->add_option("input", deciles_in)->required();

    std::string ttest_a, ttest_b, ttest_column;
    auto* ttest_cmd = stats_cmd->add_subcommand("ttest", "Welch two-sample t-test");
    ttest_cmd->add_option("a", ttest_a)->required();
    ttest_cmd->add_option("b", ttest_b)->required();
    ttest_cmd->add_option("--column", ttest_column);

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "generate synthetic WAV corpora");
    synth_cmd->require_subcommand(1);
    std::string synth_out, events_path, text = "PARIS";
    int rate = 44100;
    std::uint64_t synth_seed = 0;
    double duration = 10.0, wpm = 12.0, carrier = 700.0;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", synth_out, "output WAV file")->required();
        cmd->add_option("--rate", rate, "sample rate in Hz");
    };
    auto* tones_cmd = synth_cmd->add_subcommand("tones", "tone events (or the built-in structured corpus)");
    add_common(tones_cmd);
    tones_cmd->add_option("--events", events_path, "JSON list of {scale,start,duration,amplitude}");
    tones_cmd->add_option("--duration", duration, "length of the built-in corpus in seconds");
    auto* morse_cmd = synth_cmd->add_subcommand("morse", "Morse code on a sine carrier");
    add_common(morse_cmd);
    morse_cmd->add_option("--text", text, "text to key");
    morse_cmd->add_option("--wpm", wpm, "words per minute (PARIS timing)");
    morse_cmd->add_option("--carrier", carrier, "carrier frequency in Hz");
    morse_cmd->add_option("--seed", synth_seed, "with --duration: seed for random English text");
    auto* morse_duration = morse_cmd->add_option("--duration", duration, "key random English text, cut to this many seconds");
    auto* white_cmd = synth_cmd->add_subcommand("white", "uniform white noise");
    auto* pink_cmd = synth_cmd->add_subcommand("pink", "Voss-McCartney pink noise");
    for (auto* cmd : {white_cmd, pink_cmd}) {
        add_common(cmd);
        cmd->add_option("--duration", duration, "seconds");
        cmd->add_option("--seed", synth_seed);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("InvalidArgument", e.what());
        return kExitInvalid;
    }

    if (*encode_cmd) return cmd_encode(enc_in, enc_out, enc_opts);
    if (*network_cmd) return cmd_network(net_args);
    if (*rank_cmd) return cmd_rank(rank_in, rank_out);
    if (*fit_cmd) return cmd_fit(fit_in, drop_top);
    if (*seq_cmd) return cmd_seq(seq_in, seq_out, include_inactive, time_major);
    if (*image_cmd) return cmd_image(img_in, img_out, inverse);
    if (*optimize_cmd) return cmd_optimize(opt_in, opt_out, opt_grid, jobs);
    if (*run_cmd) return cmd_run(run_in, run_out, run_enc, run_grid, jobs);
    if (*perturb_cmd) return cmd_perturb(pert_in, pert_out, loss_rate, pert_seed);

    if (*stats_cmd) {
        if (*entropy_cmd) {
            require(probs_text.empty() != probs_file.empty(), ErrorCode::InvalidArgument,
                    "give either --probs or an input file");
            const std::vector<double> p = probs_text.empty() ? load_samples(probs_file, "") : parse_list(probs_text);
            const Eigen::Map<const Eigen::VectorXd> v(p.data(), static_cast<Eigen::Index>(p.size()));
            print_rows({{"entropy", base > 0.0 ? shannon_entropy(v, base) : shannon_entropy(v)}});
            return 0;
        }
        if (*skew_cmd) {
            const auto x = load_samples(skew_in, skew_column);
            const Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
            print_rows({{"skewness", skewness(v)}, {"n", static_cast<double>(x.size())}});
            return 0;
        }
        if (*density_cmd) {
            const auto pts = load_points(density_in);
            print_rows({{"density", point_density(pts, per_point ? DensityThreshold::PerPointMean
                                                                 : DensityThreshold::GlobalMean)},
                        {"n", static_cast<double>(pts.size())}});
            return 0;
        }
        if (*deciles_cmd) {
            const auto prop = decile_proportions(load_points(deciles_in));
            std::vector<std::pair<std::string, double>> rows;
            for (std::size_t k = 0; k < prop.size(); ++k) rows.emplace_back("decile_" + std::to_string(k + 1), prop[k]);
            print_rows(rows);
            return 0;
        }
        if (*ttest_cmd) {
            const auto a = load_samples(ttest_a, ttest_column);
            const auto b = load_samples(ttest_b, ttest_column);
            const TTestResult r = welch_t_test(a, b);
            print_rows({{"t", r.t}, {"df", r.df}, {"p", r.p}});
            return 0;
        }
    }

    if (*synth_cmd) {
        SampleBuffer buf;
        if (*tones_cmd) {
            const EncodeConfig cfg;
            const auto events = events_path.empty() ? structured_tone_events(duration, cfg)
                                                    : tone_events_from_json(load_json(events_path));
            buf = gen_tone_corpus(events, cfg, rate);
        } else if (*morse_cmd) {
            buf = morse_duration->count() > 0 ? gen_morse_corpus(duration, wpm, carrier, synth_seed, rate)
                                              : gen_morse(text, wpm, carrier, rate);
        } else {
            buf = gen_noise(*white_cmd ? NoiseKind::White : NoiseKind::Pink, duration, synth_seed, rate);
        }
        write_wav(synth_out, buf);
        return 0;
    }
    return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const Error& e) {
        report_error(to_string(e.code()), e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        report_error("Internal", e.what());
        return kExitFailure;
    }
}
