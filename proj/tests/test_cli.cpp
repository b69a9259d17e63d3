#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "een/ingest.hpp"
#include "een/textio.hpp"
#include "support.hpp"

using namespace een;
using namespace een::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const fs::path& dir, const std::string& args) {
    const auto out = dir / "stdout.txt", err = dir / "stderr.txt";
    const std::string cmd = "cd '" + dir.string() + "' && '" EEN_BINARY "' " + args + " >'" + out.string() + "' 2>'" +
                            err.string() + "'";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out), read_file(err)};
}

// Data lines only: comment lines carry per-command manifests.
std::string body(const fs::path& path) {
    std::istringstream in(read_file(path));
    std::string line, out;
    while (std::getline(in, line))
        if (line.empty() || line.front() != '#') out += line + "\n";
    return out;
}

void write(const fs::path& path, const std::string& text) {
    std::ofstream(path) << text;
}

const char* kSmallGrid = R"({"w1":[1,2],"w2":[1,2],"w3":[1],"w4":[0,1],"theta":[30,60,90]})";

}  // namespace

TEST_CASE("cli version and usage errors") {
    const auto dir = scratch_dir("cli_usage");
    const Outcome v = run(dir, "--version");
    CHECK(v.code == 0);
    CHECK(v.out.find("0.3.1") != std::string::npos);

    const Outcome bad = run(dir, "encode");
    CHECK(bad.code == 2);
    const Json err = Json::parse(bad.err);
    CHECK(err["error"] == "InvalidArgument");
    CHECK(bad.err.find('\n') == bad.err.size() - 1);
}

TEST_CASE("cli step-by-step pipeline") {
    const auto dir = scratch_dir("cli_steps");
    REQUIRE(run(dir, "synth tones -o t.wav --duration 3.2").code == 0);
    REQUIRE(run(dir, "encode t.wav -o grid.csv").code == 0);
    CHECK(read_file(dir / "grid.csv").find("# manifest {\"command\":\"encode\"") != std::string::npos);

    REQUIRE(run(dir, "network grid.csv -o words.csv --w1 1 --w2 1 --w3 1 --w4 0 --theta 6 --edges edges.csv").code == 0);
    const WordMap wm = parse_words_csv(read_csv_file(dir / "words.csv"));
    CHECK(wm.weights == WeightConfig{1, 1, 1, 0, 6});
    CHECK(read_file(dir / "edges.csv").find("scale_a,time_a,scale_b,time_b") != std::string::npos);

    write(dir / "w.json", R"({"w1":1,"w2":1,"w3":1,"w4":0,"theta":99})");
    REQUIRE(run(dir, "network grid.csv -o words2.csv --weights w.json --theta 6").code == 0);
    CHECK(body(dir / "words2.csv") == body(dir / "words.csv"));

    REQUIRE(run(dir, "rank words.csv -o rank.csv").code == 0);
    CHECK(parse_rank_csv(read_csv_file(dir / "rank.csv")) == rank_table(wm));

    const Outcome fit = run(dir, "fit rank.csv");
    CHECK(fit.code == 0);
    CHECK(fit.out.rfind("a,", 0) == 0);
    CHECK(fit.out.find("\nr2,") != std::string::npos);

    REQUIRE(run(dir, "seq words.csv -o seq.csv --include-inactive").code == 0);
    CHECK(body(dir / "seq.csv") == format_sequence_csv(sequence_1d(wm, true)));

    REQUIRE(run(dir, "image words.csv -o image.csv").code == 0);
    REQUIRE(run(dir, "image image.csv --inverse -o back.csv").code == 0);
    CHECK(parse_words_csv(read_csv_file(dir / "back.csv")) == wm);

    REQUIRE(run(dir, "perturb words.csv -o lossy.csv --loss-rate 0.5 --seed 3").code == 0);
    CHECK(parse_words_csv(read_csv_file(dir / "lossy.csv")).size() == wm.size() - wm.size() / 2);
    CHECK(read_file(dir / "lossy.csv").find("\"seed\":3") != std::string::npos);
}

TEST_CASE("cli run is deterministic and complete") {
    const auto dir = scratch_dir("cli_run");
    write(dir / "grid.json", kSmallGrid);
    REQUIRE(run(dir, "synth tones -o t.wav --duration 4.8").code == 0);
    REQUIRE(run(dir, "run t.wav -o a --grid grid.json").code == 0);
    REQUIRE(run(dir, "run t.wav -o b --grid grid.json --jobs 3").code == 0);
    for (const char* name : {"grid.csv", "words.csv", "rank.csv", "seq.csv", "sweep.csv"}) {
        CAPTURE(name);
        REQUIRE(fs::exists(dir / "a" / name));
        CHECK(body(dir / "a" / name) == body(dir / "b" / name));
    }
    const Json best = Json::parse(read_file(dir / "a" / "best.json"));
    Json other = Json::parse(read_file(dir / "b" / "best.json"));
    other["manifest"] = best["manifest"];
    CHECK(other == best);
    CHECK(best["r2"].get<double>() > 0.8);
    CHECK(best["manifest"]["command"] == "run");
    CHECK(read_csv_file(dir / "a" / "sweep.csv").rows.size() == 24);

    // Identical invocation gives identical bytes, manifests included.
    REQUIRE(run(dir, "run t.wav -o a2 --grid grid.json").code == 0);
    std::string a = read_file(dir / "a" / "best.json"), a2 = read_file(dir / "a2" / "best.json");
    const auto strip = [](std::string s, const std::string& from, const std::string& to) {
        for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
            s.replace(pos, from.size(), to);
        return s;
    };
    CHECK(strip(a, "a/", "X/") == strip(a2, "a2/", "X/"));
}

TEST_CASE("cli exit codes") {
    const auto dir = scratch_dir("cli_exit");
    write(dir / "junk.wav", "this is not audio");
    const Outcome junk = run(dir, "encode junk.wav -o g.csv");
    CHECK(junk.code == 2);
    CHECK(Json::parse(junk.err)["error"] == "UnsupportedFormat");
    CHECK_FALSE(fs::exists(dir / "g.csv"));

    write_wav(dir / "silent.wav", SampleBuffer{std::vector<double>(4410, 0.0), 44100});
    const Outcome silent = run(dir, "encode silent.wav -o g.csv");
    CHECK(silent.code == 4);
    CHECK(Json::parse(silent.err)["error"] == "AllSilent");

    // Three far-apart pixels: the vocabulary is too small for any fit.
    write(dir / "tiny.csv",
          "# een-grid v1\n# scales=84 frame_sec=0.1 vmax=10 f0=64 db_floor=-60 activity_min=1\n# n_frames=5\n"
          "scale,time,volume\n0,0,5\n40,2,7\n80,4,9\n");
    write(dir / "grid.json", kSmallGrid);
    const Outcome none = run(dir, "optimize tiny.csv -o out --grid grid.json");
    CHECK(none.code == 3);
    CHECK(Json::parse(none.err)["error"] == "NoQualifyingCombo");
    CHECK(read_csv_file(dir / "out" / "sweep.csv").rows.size() == 24);
    CHECK_FALSE(fs::exists(dir / "out" / "best.json"));

    CHECK(run(dir, "stats entropy --probs 0.5,0.4").code == 2);
    CHECK(run(dir, "network tiny.csv -o w.csv --theta -1").code == 2);
}

TEST_CASE("cli config files with flag overrides") {
    const auto dir = scratch_dir("cli_config");
    REQUIRE(run(dir, "synth tones -o t.wav --duration 1.6").code == 0);
    write(dir / "enc.json", R"({"n_scales": 60, "vmax": 8})");
    REQUIRE(run(dir, "encode t.wav -o g.csv --config enc.json --n-scales 70").code == 0);
    const ScaleTimeGrid g = parse_grid_csv(read_csv_file(dir / "g.csv"));
    CHECK(g.n_scales() == 70);
    CHECK(g.config().vmax == 8);

    write(dir / "bad.json", R"({"n_scale": 60})");
    CHECK(run(dir, "encode t.wav -o g2.csv --config bad.json").code == 2);
}

TEST_CASE("cli stats") {
    const auto dir = scratch_dir("cli_stats");
    CHECK(run(dir, "stats entropy --probs 0.5,0.25,0.25 --base 2").out == "entropy,1.5\n");
    write(dir / "pts.csv", "x,y,score\n0,0,0\n1,0,0.05\n10,0,0.95\n");
    CHECK(run(dir, "stats density pts.csv").out == "density," + format_number(1.0 / 3.0) + "\nn,3\n");
    const Outcome dec = run(dir, "stats deciles pts.csv");
    CHECK(dec.out.rfind("decile_1,", 0) == 0);
    const Outcome skew = run(dir, "stats skew pts.csv");
    CHECK(skew.code == 0);
    CHECK(skew.out.rfind("skewness,", 0) == 0);
    write(dir / "a.csv", "1\n2\n3\n4\n5\n");
    write(dir / "b.csv", "2\n3\n4\n5\n6\n");
    const Outcome t = run(dir, "stats ttest a.csv b.csv");
    CHECK(t.out.rfind("t,-1\ndf,8\np,0.34", 0) == 0);
}

TEST_CASE("cli synth outputs valid audio") {
    const auto dir = scratch_dir("cli_synth");
    REQUIRE(run(dir, "synth morse -o m.wav --text \"SOS\" --wpm 12").code == 0);
    CHECK(decode_audio(dir / "m.wav").samples.size() == 27 * 4410);
    REQUIRE(run(dir, "synth pink -o p.wav --duration 0.5 --seed 4").code == 0);
    REQUIRE(run(dir, "synth white -o w.wav --duration 0.5 --seed 4 --rate 22050").code == 0);
    CHECK(decode_audio(dir / "w.wav").sample_rate == 22050);
    write(dir / "ev.json", R"([{"scale": 40, "start": 0.0, "duration": 0.3, "amplitude": 0.5}])");
    REQUIRE(run(dir, "synth tones -o e.wav --events ev.json").code == 0);
    CHECK(decode_audio(dir / "e.wav").duration() == doctest::Approx(0.3));
    CHECK(run(dir, "synth morse -o x.wav --text \"#\"").code == 2);
}
