#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordspot/wordspot.hpp"

namespace ws = wordspot;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonFlags {
    bool as_json = false;
    int jobs = 1;
    std::uint64_t seed = 0;
    int sector_width = ws::default_sector_width;
    int tolerance = ws::default_tolerance;
    int dpi = ws::default_dpi;
    int top = 10;
    std::string ordering = "ssd";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--json", flags.as_json, "emit JSON instead of the default format");
    cmd->add_option("--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", flags.seed, "random seed");
    cmd->add_option("--sector-width", flags.sector_width, "shape-code sector width in pixels")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tolerance", flags.tolerance, "length-filter tolerance in pixels at 300 dpi")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--dpi", flags.dpi, "scan resolution the tolerance is scaled to")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--top", flags.top, "rows kept per query")->check(CLI::PositiveNumber);
    cmd->add_option("--ordering", flags.ordering, "result ordering")
        ->check(CLI::IsMember({"ssd", "fused"}));
}

json word_meta(const ws::WordBlock& word) {
    return {{"id", word.id},
            {"box", word.box},
            {"width", word.width()},
            {"char_count", word.char_count}};
}

int cmd_segment(const std::vector<std::string>& paths, const CommonFlags&, bool dump_profile) {
    json pages = json::array();
    for (const auto& path : paths) {
        const ws::BinaryImage img = ws::load_page(path);
        const ws::PageSegmentation seg = ws::segment_page(img);
        json page;
        page["path"] = path;
        page["lines"] = seg.lines;
        json words = json::array();
        for (std::size_t li = 0; li < seg.words.size(); ++li) {
            json line_words = json::array();
            for (const auto& w : seg.words[li]) line_words.push_back(word_meta(w));
            words.push_back(std::move(line_words));
        }
        page["words"] = std::move(words);
        if (dump_profile) {
            page["profile"] = ws::horizontal_profile(img);
            json line_profiles = json::array();
            for (const auto& line : seg.lines) {
                const ws::BinaryImage band = ws::crop(img, line.band);
                const ws::Profile columns = ws::vertical_profile(band);
                json entry;
                entry["column_profile"] = columns;
                const ws::GapHistogram hist = ws::gap_histogram(columns);
                if (!hist.empty()) entry["gap_histogram"] = hist;
                line_profiles.push_back(std::move(entry));
            }
            page["line_profiles"] = std::move(line_profiles);
        }
        pages.push_back(std::move(page));
    }
    std::cout << json{{"pages", std::move(pages)}}.dump(2) << "\n";
    return 0;
}

int cmd_index(const std::vector<std::string>& paths, const std::string& output,
              const CommonFlags& flags) {
    ws::IndexOptions options;
    options.jobs = flags.jobs;
    options.shape.sector_width = flags.sector_width;
    const ws::WordIndex index = ws::build_index(paths, options);
    ws::write_file_bytes(output, json(index).dump(2) + "\n");
    return 0;
}

ws::WordBlock query_from_selector(const ws::MaterializedIndex& index, const std::string& spec) {
    ws::WordId id;
    char trailing = 0;
    if (std::sscanf(spec.c_str(), "%d:%d:%d%c", &id.page, &id.line, &id.position, &trailing) != 3)
        throw ws::InputError("query selector must be page:line:position, got: " + spec);
    for (std::size_t i = 0; i < index.meta.words.size(); ++i)
        if (index.meta.words[i].id == id) return index.block(i);
    throw ws::InputError("query id not in index: " + spec);
}

ws::WordBlock query_from_image(const std::string& path, const CommonFlags& flags) {
    const ws::BinaryImage img = ws::load_page(path);
    const ws::PageSegmentation seg = ws::segment_page(img);
    std::vector<ws::WordBlock> words;
    for (const auto& line : seg.words) words.insert(words.end(), line.begin(), line.end());
    if (words.empty()) throw ws::InputError("query image contains no words: " + path);
    if (words.size() > 1)
        throw ws::InputError("query image must contain a single word, found " +
                             std::to_string(words.size()) + ": " + path);
    ws::WordBlock query = std::move(words.front());
    ws::ShapeCodeOptions shape;
    shape.sector_width = flags.sector_width;
    query.shape_code = ws::shape_code(query, shape);
    return query;
}

int cmd_match(const std::string& index_path, const std::string& selector,
              const std::string& query_image, const CommonFlags& flags) {
    json doc;
    try {
        doc = json::parse(ws::read_file_bytes(index_path));
    } catch (const json::exception& e) {
        throw ws::InputError(index_path + ": invalid index JSON: " + e.what());
    }
    ws::WordIndex meta;
    try {
        meta = doc.get<ws::WordIndex>();
    } catch (const json::exception& e) {
        throw ws::InputError(index_path + ": malformed index: " + e.what());
    }
    const ws::MaterializedIndex index = ws::materialize(std::move(meta));

    const ws::WordBlock query = query_image.empty() ? query_from_selector(index, selector)
                                                    : query_from_image(query_image, flags);
    ws::MatchOptions options;
    options.top_k = flags.top;
    options.ordering = flags.ordering == "fused" ? ws::Ordering::fused : ws::Ordering::ssd;
    options.tolerance = flags.tolerance;
    options.dpi = flags.dpi;
    options.jobs = flags.jobs;
    const ws::RankedMatches matches = ws::match_word(query, index, options);
    if (flags.as_json)
        std::cout << json(matches).dump(2) << "\n";
    else
        std::cout << ws::to_tsv(matches);
    return 0;
}

int cmd_synth(const std::string& spec_path, const std::string& output_dir,
              const CommonFlags& flags) {
    json doc;
    try {
        doc = json::parse(ws::read_file_bytes(spec_path));
    } catch (const json::exception& e) {
        throw ws::InputError(spec_path + ": invalid spec JSON: " + e.what());
    }
    std::vector<ws::SyntheticPageSpec> specs;
    if (doc.is_object() && doc.contains("pages")) {
        for (const auto& page : doc.at("pages")) specs.push_back(page.get<ws::SyntheticPageSpec>());
    } else {
        specs.push_back(doc.get<ws::SyntheticPageSpec>());
    }

    std::error_code ec;
    fs::create_directories(output_dir, ec);
    if (ec) throw ws::ProcessingError("cannot create output directory: " + output_dir);

    json truth_pages = json::array();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const ws::SyntheticPage page = ws::render_synthetic_page(specs[i], flags.seed + i);
        char name[32];
        std::snprintf(name, sizeof name, "page%03zu.pbm", i);
        ws::write_file_bytes(fs::path(output_dir) / name,
                             ws::save_pnm(page.image, ws::PnmFormat::pbm_binary));
        truth_pages.push_back({{"image", name}, {"lines", page.lines}});
    }
    ws::write_file_bytes(fs::path(output_dir) / "truth.json",
                         json{{"pages", std::move(truth_pages)}}.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"word spotting toolkit for binarized document pages"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto* segment = app.add_subcommand("segment", "segment pages into lines and words");
    std::vector<std::string> segment_paths;
    bool dump_profile = false;
    segment->add_option("pages", segment_paths, "PNM page images")->required();
    segment->add_flag("--dump-profile", dump_profile, "include projection profiles");
    add_common(segment, flags);

    auto* index = app.add_subcommand("index", "build a word index from pages");
    std::vector<std::string> index_paths;
    std::string index_output;
    index->add_option("pages", index_paths, "PNM page images")->required();
    index->add_option("-o,--output", index_output, "index file to write")->required();
    add_common(index, flags);

    auto* match = app.add_subcommand("match", "rank index words against a query");
    std::string match_index, match_query, match_query_image;
    match->add_option("index", match_index, "index JSON file")->required();
    auto* sel = match->add_option("--query", match_query, "query word id page:line:position");
    auto* img = match->add_option("--query-image", match_query_image, "query word image");
    sel->excludes(img);
    add_common(match, flags);

    auto* synth = app.add_subcommand("synth", "render synthetic pages with ground truth");
    std::string synth_spec, synth_output;
    synth->add_option("spec", synth_spec, "page spec JSON file")->required();
    synth->add_option("-o,--output", synth_output, "output directory")->required();
    add_common(synth, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*segment) return cmd_segment(segment_paths, flags, dump_profile);
        if (*index) return cmd_index(index_paths, index_output, flags);
        if (*match) {
            if (match_query.empty() && match_query_image.empty())
                throw ws::InputError("match needs --query or --query-image");
            return cmd_match(match_index, match_query, match_query_image, flags);
        }
        if (*synth) return cmd_synth(synth_spec, synth_output, flags);
    } catch (const ws::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ws::ProcessingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
