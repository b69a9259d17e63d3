#pragma once

// Text file formats shared by the library and the command-line tool.
//
// Every CSV starts with zero or more '#' comment lines. Writers take an
// optional list of extra comment lines (the run manifest) that are emitted
// after the format's own comment lines and before the header.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "een/ingest.hpp"
#include "een/metrics.hpp"
#include "een/network.hpp"
#include "een/selforg.hpp"
#include "een/synth.hpp"
#include "een/words.hpp"

namespace een {

using Json = nlohmann::ordered_json;
using CommentLines = std::vector<std::string>;

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);
double parse_number(std::string_view text);
long long parse_integer(std::string_view text);

struct CsvTable {
    std::vector<std::string> comments;  // without the leading '#' and one optional space
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Splits on commas; no quoting (none of the formats need it).
CsvTable read_csv(std::istream& in, bool has_header = true);
CsvTable read_csv_file(const std::filesystem::path& path, bool has_header = true);
void expect_header(const CsvTable& table, std::initializer_list<std::string_view> names, std::string_view what);

/// Writes `content` to a sibling temporary file, then renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

// EncodeConfig <-> flat JSON object.
Json to_json(const EncodeConfig& cfg);
EncodeConfig encode_config_from_json(const Json& j, EncodeConfig base = {});

Json to_json(const WeightConfig& w);
WeightConfig weight_config_from_json(const Json& j, WeightConfig base = {});

Json to_json(const NeighborhoodSpec& nb);
NeighborhoodSpec neighborhood_from_json(const Json& j, NeighborhoodSpec base = {});

Json to_json(const GridSpec& spec);
GridSpec grid_spec_from_json(const Json& j);

std::vector<ToneEvent> tone_events_from_json(const Json& j);
Json to_json(const std::vector<ToneEvent>& events);

// een-grid v1
std::string format_grid_csv(const ScaleTimeGrid& grid, const CommentLines& extra = {});
ScaleTimeGrid parse_grid_csv(const CsvTable& table);

// een-words v1
std::string format_words_csv(const WordMap& wm, const CommentLines& extra = {});
WordMap parse_words_csv(const CsvTable& table);

std::string format_rank_csv(const RankTable& rt, const CommentLines& extra = {});
RankTable parse_rank_csv(const CsvTable& table);

std::string format_sequence_csv(const std::vector<std::optional<Rational>>& seq, const CommentLines& extra = {});

/// n_scales rows x n_frames columns, cc with 6 fractional digits, empty when
/// inactive. Cells whose fraction the decimal cannot identify are also listed
/// exactly as `# cell <scale> <time> <num> <den>` comment lines.
std::string format_image_csv(const DenseWordGrid& dense, const CommentLines& extra = {});
/// Inverse of format_image_csv; cc values are recovered as the simplest
/// fraction consistent with the 6-digit rounding unless a cell line gives them.
DenseWordGrid parse_image_csv(const CsvTable& table);

std::string format_sweep_csv(const std::vector<EvalResult>& results, const CommentLines& extra = {});

/// Winner JSON: w1..w4, theta, r2, zipf_a, zipf_b, word_types.
Json winner_json(const EvalResult& best);

std::vector<ScorePoint> parse_points_csv(const CsvTable& table);
/// Single-column (or first-column) numeric samples; an optional non-numeric header is skipped.
std::vector<double> parse_samples(const CsvTable& table, std::string_view column = {});

}  // namespace een
