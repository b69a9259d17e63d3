#include "een/textio.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace een {
namespace {

using KeyValues = std::map<std::string, std::string, std::less<>>;

// key=value tokens from comment lines, skipping the manifest line.
KeyValues comment_fields(const std::vector<std::string>& comments) {
    KeyValues kv;
    for (const auto& line : comments) {
        if (line.rfind("manifest", 0) == 0) continue;
        std::istringstream in(line);
        std::string token;
        while (in >> token) {
            const auto eq = token.find('=');
            if (eq != std::string::npos && eq > 0) kv[token.substr(0, eq)] = token.substr(eq + 1);
        }
    }
    return kv;
}

const std::string& field(const KeyValues& kv, std::string_view key, std::string_view what) {
    const auto it = kv.find(key);
    require(it != kv.end(), ErrorCode::UnsupportedFormat, std::string(what) + ": missing '" + std::string(key) + "'");
    return it->second;
}

void expect_tag(const CsvTable& table, std::string_view tag) {
    require(!table.comments.empty() && table.comments.front() == tag, ErrorCode::UnsupportedFormat,
            "expected '# " + std::string(tag) + "' on the first line");
}

void append_comments(std::string& out, const CommentLines& lines) {
    for (const auto& line : lines) {
        out += "# ";
        out += line;
        out += '\n';
    }
}

std::string weights_line(const WeightConfig& w) {
    return "w1=" + format_number(w.w1) + " w2=" + format_number(w.w2) + " w3=" + format_number(w.w3) +
           " w4=" + format_number(w.w4) + " theta=" + format_number(w.theta);
}

WeightConfig weights_from_fields(const KeyValues& kv, std::string_view what) {
    WeightConfig w;
    w.w1 = parse_number(field(kv, "w1", what));
    w.w2 = parse_number(field(kv, "w2", what));
    w.w3 = parse_number(field(kv, "w3", what));
    w.w4 = parse_number(field(kv, "w4", what));
    w.theta = parse_number(field(kv, "theta", what));
    return w;
}

int to_int(const std::string& s) {
    const long long v = parse_integer(s);
    require(v >= INT32_MIN && v <= INT32_MAX, ErrorCode::UnsupportedFormat, "integer out of range: " + s);
    return static_cast<int>(v);
}

void check_keys(const Json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
    require(j.is_object(), ErrorCode::InvalidArgument, std::string(what) + " must be a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (auto k : allowed) known = known || item.key() == k;
        require(known, ErrorCode::InvalidArgument, std::string(what) + ": unknown field '" + item.key() + "'");
    }
}

template <typename T>
T json_get(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        fail(ErrorCode::InvalidArgument, std::string("field '") + key + "' has the wrong type");
    }
}

std::string rational_fields(const std::optional<Rational>& r) {
    if (!r) return ",";
    return std::to_string(r->num) + "," + std::to_string(r->den);
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    require(res.ec == std::errc() && res.ptr == text.data() + text.size(), ErrorCode::UnsupportedFormat,
            "not a number: '" + std::string(text) + "'");
    return v;
}

long long parse_integer(std::string_view text) {
    long long v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    require(res.ec == std::errc() && res.ptr == text.data() + text.size(), ErrorCode::UnsupportedFormat,
            "not an integer: '" + std::string(text) + "'");
    return v;
}

CsvTable read_csv(std::istream& in, bool has_header) {
    CsvTable table;
    std::string line;
    bool header_seen = !has_header;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') {
            std::string text = line.substr(1);
            if (!text.empty() && text.front() == ' ') text.erase(0, 1);
            table.comments.push_back(std::move(text));
            continue;
        }
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            cells.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!header_seen) {
            table.header = std::move(cells);
            header_seen = true;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

CsvTable read_csv_file(const std::filesystem::path& path, bool has_header) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + path.string());
    return read_csv(in, has_header);
}

void expect_header(const CsvTable& table, std::initializer_list<std::string_view> names, std::string_view what) {
    bool ok = table.header.size() == names.size();
    std::size_t i = 0;
    for (auto name : names) {
        if (!ok) break;
        ok = table.header[i++] == name;
    }
    std::string expected;
    for (auto name : names) expected += (expected.empty() ? "" : ",") + std::string(name);
    require(ok, ErrorCode::UnsupportedFormat, std::string(what) + ": expected header '" + expected + "'");
    for (const auto& row : table.rows)
        require(row.size() == names.size(), ErrorCode::UnsupportedFormat, std::string(what) + ": ragged row");
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(static_cast<bool>(out), ErrorCode::Io, "cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        require(static_cast<bool>(out), ErrorCode::Io, "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        fail(ErrorCode::Io, "cannot rename into " + path.string() + ": " + ec.message());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- JSON ------------------------------------------------------------------

Json to_json(const EncodeConfig& cfg) {
    Json j;
    j["n_scales"] = cfg.n_scales;
    j["f0"] = cfg.f0;
    j["frame_sec"] = cfg.frame_sec;
    j["vmax"] = cfg.vmax;
    j["db_floor"] = cfg.db_floor;
    j["activity_min"] = cfg.activity_min;
    return j;
}

EncodeConfig encode_config_from_json(const Json& j, EncodeConfig base) {
    check_keys(j, {"n_scales", "f0", "frame_sec", "vmax", "db_floor", "activity_min"}, "encode config");
    base.n_scales = json_get(j, "n_scales", base.n_scales);
    base.f0 = json_get(j, "f0", base.f0);
    base.frame_sec = json_get(j, "frame_sec", base.frame_sec);
    base.vmax = json_get(j, "vmax", base.vmax);
    base.db_floor = json_get(j, "db_floor", base.db_floor);
    base.activity_min = json_get(j, "activity_min", base.activity_min);
    base.validate();
    return base;
}

Json to_json(const WeightConfig& w) {
    Json j;
    j["w1"] = w.w1;
    j["w2"] = w.w2;
    j["w3"] = w.w3;
    j["w4"] = w.w4;
    j["theta"] = w.theta;
    return j;
}

WeightConfig weight_config_from_json(const Json& j, WeightConfig base) {
    check_keys(j, {"w1", "w2", "w3", "w4", "theta"}, "weight config");
    base.w1 = json_get(j, "w1", base.w1);
    base.w2 = json_get(j, "w2", base.w2);
    base.w3 = json_get(j, "w3", base.w3);
    base.w4 = json_get(j, "w4", base.w4);
    base.theta = json_get(j, "theta", base.theta);
    base.validate();
    return base;
}

Json to_json(const NeighborhoodSpec& nb) {
    Json j;
    j["mode"] = nb.mode == NeighborhoodMode::Global ? "global" : "windowed";
    j["r_scale"] = nb.r_scale;
    j["r_time"] = nb.r_time;
    return j;
}

NeighborhoodSpec neighborhood_from_json(const Json& j, NeighborhoodSpec base) {
    check_keys(j, {"mode", "r_scale", "r_time"}, "neighborhood");
    const std::string mode = json_get<std::string>(j, "mode", base.mode == NeighborhoodMode::Global ? "global" : "windowed");
    require(mode == "global" || mode == "windowed", ErrorCode::InvalidArgument, "neighborhood mode must be windowed or global");
    base.mode = mode == "global" ? NeighborhoodMode::Global : NeighborhoodMode::Windowed;
    base.r_scale = json_get(j, "r_scale", base.r_scale);
    base.r_time = json_get(j, "r_time", base.r_time);
    base.validate();
    return base;
}

Json to_json(const GridSpec& spec) {
    Json j;
    j["w1"] = spec.values_w1;
    j["w2"] = spec.values_w2;
    j["w3"] = spec.values_w3;
    j["w4"] = spec.values_w4;
    j["theta"] = spec.values_theta;
    j["theta_mode"] = spec.theta_mode == ThetaMode::Percentile ? "percentile" : "absolute";
    j["neighborhood"] = to_json(spec.neighborhood);
    return j;
}

GridSpec grid_spec_from_json(const Json& j) {
    check_keys(j, {"w1", "w2", "w3", "w4", "theta", "theta_mode", "neighborhood"}, "grid spec");
    GridSpec spec = GridSpec::desk_default();
    spec.values_w1 = json_get(j, "w1", spec.values_w1);
    spec.values_w2 = json_get(j, "w2", spec.values_w2);
    spec.values_w3 = json_get(j, "w3", spec.values_w3);
    spec.values_w4 = json_get(j, "w4", spec.values_w4);
    spec.values_theta = json_get(j, "theta", spec.values_theta);
    const std::string mode = json_get<std::string>(j, "theta_mode", "percentile");
    require(mode == "percentile" || mode == "absolute", ErrorCode::InvalidArgument,
            "theta_mode must be percentile or absolute");
    spec.theta_mode = mode == "percentile" ? ThetaMode::Percentile : ThetaMode::Absolute;
    if (j.contains("neighborhood")) spec.neighborhood = neighborhood_from_json(j.at("neighborhood"));
    spec.validate();
    return spec;
}

std::vector<ToneEvent> tone_events_from_json(const Json& j) {
    const Json& list = j.is_object() && j.contains("events") ? j.at("events") : j;
    require(list.is_array(), ErrorCode::InvalidArgument, "tone events must be a JSON array");
    std::vector<ToneEvent> events;
    for (const auto& item : list) {
        check_keys(item, {"scale", "start", "duration", "amplitude"}, "tone event");
        require(item.contains("scale") && item.contains("start") && item.contains("duration"),
                ErrorCode::InvalidArgument, "tone event needs scale, start and duration");
        ToneEvent e;
        e.scale = json_get(item, "scale", 0);
        e.start = json_get(item, "start", 0.0);
        e.duration = json_get(item, "duration", 0.0);
        e.amplitude = json_get(item, "amplitude", 1.0);
        events.push_back(e);
    }
    return events;
}

Json to_json(const std::vector<ToneEvent>& events) {
    Json list = Json::array();
    for (const auto& e : events) {
        Json item;
        item["scale"] = e.scale;
        item["start"] = e.start;
        item["duration"] = e.duration;
        item["amplitude"] = e.amplitude;
        list.push_back(std::move(item));
    }
    return list;
}

// --- CSV formats -----------------------------------------------------------

std::string format_grid_csv(const ScaleTimeGrid& grid, const CommentLines& extra) {
    const EncodeConfig& c = grid.config();
    std::string out = "# een-grid v1\n";
    out += "# scales=" + std::to_string(c.n_scales) + " frame_sec=" + format_number(c.frame_sec) +
           " vmax=" + std::to_string(c.vmax) + " f0=" + format_number(c.f0) + " db_floor=" + format_number(c.db_floor) +
           " activity_min=" + std::to_string(c.activity_min) + "\n";
    out += "# n_frames=" + std::to_string(grid.n_frames()) + "\n";
    append_comments(out, extra);
    out += "scale,time,volume\n";
    for (const auto& p : grid.pixels())
        out += std::to_string(p.scale) + "," + std::to_string(p.time) + "," + std::to_string(p.volume) + "\n";
    return out;
}

ScaleTimeGrid parse_grid_csv(const CsvTable& table) {
    expect_tag(table, "een-grid v1");
    expect_header(table, {"scale", "time", "volume"}, "een-grid");
    const KeyValues kv = comment_fields(table.comments);
    EncodeConfig cfg;
    cfg.n_scales = to_int(field(kv, "scales", "een-grid"));
    cfg.frame_sec = parse_number(field(kv, "frame_sec", "een-grid"));
    cfg.vmax = to_int(field(kv, "vmax", "een-grid"));
    cfg.f0 = parse_number(field(kv, "f0", "een-grid"));
    cfg.db_floor = parse_number(field(kv, "db_floor", "een-grid"));
    cfg.activity_min = to_int(field(kv, "activity_min", "een-grid"));
    cfg.validate();

    std::vector<Pixel> pixels;
    pixels.reserve(table.rows.size());
    int max_time = -1;
    for (const auto& row : table.rows) {
        Pixel p{to_int(row[0]), to_int(row[1]), to_int(row[2])};
        max_time = std::max(max_time, p.time);
        pixels.push_back(p);
    }
    const auto frames_it = kv.find("n_frames");
    const int n_frames = frames_it != kv.end() ? to_int(frames_it->second) : max_time + 1;
    try {
        return ScaleTimeGrid(cfg, n_frames, std::move(pixels));
    } catch (const Error& e) {
        fail(ErrorCode::UnsupportedFormat, std::string("een-grid: ") + e.what());
    }
}

std::string format_words_csv(const WordMap& wm, const CommentLines& extra) {
    std::string out = "# een-words v1\n";
    out += "# " + weights_line(wm.weights) + "\n";
    out += "# n_scales=" + std::to_string(wm.n_scales) + " n_frames=" + std::to_string(wm.n_frames) + "\n";
    append_comments(out, extra);
    out += "scale,time,cc_num,cc_den\n";
    WordMap sorted = wm;
    sorted.sort();
    for (const auto& w : sorted.words)
        out += std::to_string(w.scale) + "," + std::to_string(w.time) + "," + std::to_string(w.cc.num) + "," +
               std::to_string(w.cc.den) + "\n";
    return out;
}

WordMap parse_words_csv(const CsvTable& table) {
    expect_tag(table, "een-words v1");
    expect_header(table, {"scale", "time", "cc_num", "cc_den"}, "een-words");
    const KeyValues kv = comment_fields(table.comments);
    WordMap wm;
    wm.weights = weights_from_fields(kv, "een-words");
    wm.n_scales = to_int(field(kv, "n_scales", "een-words"));
    wm.n_frames = to_int(field(kv, "n_frames", "een-words"));
    for (const auto& row : table.rows) {
        const Word w{to_int(row[0]), to_int(row[1]), Rational::make(parse_integer(row[2]), parse_integer(row[3]))};
        require(w.scale >= 0 && w.scale < wm.n_scales && w.time >= 0 && w.time < wm.n_frames,
                ErrorCode::UnsupportedFormat, "een-words: word outside the grid dimensions");
        require(w.cc.num >= 0 && w.cc.num <= w.cc.den, ErrorCode::UnsupportedFormat,
                "een-words: clustering coefficient outside [0, 1]");
        wm.words.push_back(w);
    }
    wm.sort();
    return wm;
}

std::string format_rank_csv(const RankTable& rt, const CommentLines& extra) {
    std::string out;
    append_comments(out, extra);
    out += "rank,cc_num,cc_den,frequency\n";
    for (const auto& e : rt.entries)
        out += std::to_string(e.rank) + "," + std::to_string(e.word.num) + "," + std::to_string(e.word.den) + "," +
               std::to_string(e.frequency) + "\n";
    return out;
}

RankTable parse_rank_csv(const CsvTable& table) {
    expect_header(table, {"rank", "cc_num", "cc_den", "frequency"}, "rank table");
    RankTable rt;
    for (const auto& row : table.rows) {
        RankEntry e{to_int(row[0]), Rational::make(parse_integer(row[1]), parse_integer(row[2])),
                    parse_integer(row[3])};
        require(e.rank == static_cast<int>(rt.entries.size()) + 1, ErrorCode::UnsupportedFormat,
                "rank table: ranks must be consecutive from 1");
        require(e.frequency > 0, ErrorCode::UnsupportedFormat, "rank table: frequencies must be positive");
        require(rt.entries.empty() || rt.entries.back().frequency >= e.frequency, ErrorCode::UnsupportedFormat,
                "rank table: frequencies must be non-increasing");
        rt.entries.push_back(e);
    }
    return rt;
}

std::string format_sequence_csv(const std::vector<std::optional<Rational>>& seq, const CommentLines& extra) {
    std::string out;
    append_comments(out, extra);
    out += "index,cc_num,cc_den\n";
    for (std::size_t i = 0; i < seq.size(); ++i) out += std::to_string(i) + "," + rational_fields(seq[i]) + "\n";
    return out;
}

namespace {

constexpr double kImageTolerance = 5e-7 + 1e-12;

std::string image_cell(std::int64_t num, std::int64_t den) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(num) / static_cast<double>(den));
    return buf;
}

}  // namespace

std::string format_image_csv(const DenseWordGrid& dense, const CommentLines& extra) {
    std::string out = "# een-image v1\n";
    out += "# " + weights_line(dense.weights) + "\n";
    append_comments(out, extra);
    // Six decimals identify fractions with small denominators only; the rest
    // are listed exactly so the image converts back without loss.
    std::string grid;
    for (Eigen::Index s = 0; s < dense.rows(); ++s) {
        for (Eigen::Index t = 0; t < dense.cols(); ++t) {
            if (t > 0) grid += ',';
            if (!dense.active(s, t)) continue;
            const std::string cell = image_cell(dense.num(s, t), dense.den(s, t));
            grid += cell;
            const Rational exact = Rational::make(dense.num(s, t), dense.den(s, t));
            if (simplest_rational(parse_number(cell), kImageTolerance) != exact)
                out += "# cell " + std::to_string(s) + " " + std::to_string(t) + " " + std::to_string(exact.num) +
                       " " + std::to_string(exact.den) + "\n";
        }
        grid += '\n';
    }
    return out + grid;
}

DenseWordGrid parse_image_csv(const CsvTable& table) {
    const KeyValues kv = comment_fields(table.comments);
    DenseWordGrid dense;
    if (kv.contains("w1")) dense.weights = weights_from_fields(kv, "een-image");
    const auto rows = static_cast<Eigen::Index>(table.rows.size());
    const auto cols = rows > 0 ? static_cast<Eigen::Index>(table.rows.front().size()) : 0;
    dense.num.setZero(rows, cols);
    dense.den.setZero(rows, cols);
    Eigen::MatrixXd decimal = Eigen::MatrixXd::Zero(rows, cols);
    for (Eigen::Index s = 0; s < rows; ++s) {
        const auto& row = table.rows[static_cast<std::size_t>(s)];
        require(static_cast<Eigen::Index>(row.size()) == cols, ErrorCode::UnsupportedFormat, "image: ragged row");
        for (Eigen::Index t = 0; t < cols; ++t) {
            const std::string& cell = row[static_cast<std::size_t>(t)];
            if (cell.empty()) continue;
            const double x = parse_number(cell);
            require(x >= 0.0 && x <= 1.0, ErrorCode::UnsupportedFormat, "image: value outside [0, 1]");
            decimal(s, t) = x;
            const Rational r = simplest_rational(x, kImageTolerance);
            dense.num(s, t) = r.num;
            dense.den(s, t) = r.den;
        }
    }
    for (const auto& line : table.comments) {
        if (line.rfind("cell ", 0) != 0) continue;
        std::istringstream in(line.substr(5));
        Eigen::Index s = -1, t = -1;
        std::int64_t num = 0, den = 0;
        in >> s >> t >> num >> den;
        require(!in.fail() && s >= 0 && s < rows && t >= 0 && t < cols && dense.active(s, t) && den > 0 &&
                    num >= 0 && num <= den,
                ErrorCode::UnsupportedFormat, "image: bad cell line '" + line + "'");
        const Rational r = Rational::make(num, den);
        require(std::abs(r.value() - decimal(s, t)) <= kImageTolerance, ErrorCode::UnsupportedFormat,
                "image: cell line disagrees with the grid value");
        dense.num(s, t) = r.num;
        dense.den(s, t) = r.den;
    }
    return dense;
}

std::string format_sweep_csv(const std::vector<EvalResult>& results, const CommentLines& extra) {
    std::string out;
    append_comments(out, extra);
    out += "idx,w1,w2,w3,w4,theta,r2,word_types,qualifies\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        out += std::to_string(i) + "," + format_number(r.config.w1) + "," + format_number(r.config.w2) + "," +
               format_number(r.config.w3) + "," + format_number(r.config.w4) + "," + format_number(r.config.theta) +
               "," + format_number(r.r2) + "," + std::to_string(r.word_types) + "," + (r.qualifies ? "1" : "0") + "\n";
    }
    return out;
}

Json winner_json(const EvalResult& best) {
    Json j;
    j["w1"] = best.config.w1;
    j["w2"] = best.config.w2;
    j["w3"] = best.config.w3;
    j["w4"] = best.config.w4;
    j["theta"] = best.config.theta;
    j["r2"] = best.r2;
    j["zipf_a"] = best.zipf_a;
    j["zipf_b"] = best.zipf_b;
    j["word_types"] = best.word_types;
    return j;
}

std::vector<ScorePoint> parse_points_csv(const CsvTable& table) {
    expect_header(table, {"x", "y", "score"}, "score points");
    std::vector<ScorePoint> points;
    points.reserve(table.rows.size());
    for (const auto& row : table.rows)
        points.push_back({parse_number(row[0]), parse_number(row[1]), parse_number(row[2])});
    return points;
}

std::vector<double> parse_samples(const CsvTable& table, std::string_view column) {
    std::size_t col = 0;
    std::size_t first_row = 0;
    if (!column.empty()) {
        require(!table.rows.empty(), ErrorCode::UnsupportedFormat, "samples: empty file");
        const auto& head = table.rows.front();
        const auto it = std::find(head.begin(), head.end(), column);
        require(it != head.end(), ErrorCode::UnsupportedFormat, "samples: no column '" + std::string(column) + "'");
        col = static_cast<std::size_t>(it - head.begin());
        first_row = 1;
    } else if (!table.rows.empty()) {
        double ignored = 0.0;
        const auto& cell = table.rows.front().front();
        const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), ignored);
        if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) first_row = 1;
    }
    std::vector<double> out;
    for (std::size_t r = first_row; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() == 1 && row.front().empty()) continue;
        require(col < row.size(), ErrorCode::UnsupportedFormat, "samples: short row");
        out.push_back(parse_number(row[col]));
    }
    return out;
}

}  // namespace een
