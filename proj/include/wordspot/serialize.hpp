#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "wordspot/errors.hpp"
#include "wordspot/image.hpp"
#include "wordspot/index.hpp"
#include "wordspot/line_segmentation.hpp"
#include "wordspot/profile.hpp"
#include "wordspot/ranking.hpp"
#include "wordspot/shape_code.hpp"
#include "wordspot/synthetic.hpp"
#include "wordspot/word_segmentation.hpp"

// JSON bindings for every externally visible structure. nlohmann::json
// keeps object keys sorted, which makes all emitted documents
// byte-stable for identical inputs.

namespace wordspot {

inline void to_json(nlohmann::json& j, const BoundingBox& box) {
    j = {{"left", box.left}, {"top", box.top}, {"width", box.width}, {"height", box.height}};
}

inline void from_json(const nlohmann::json& j, BoundingBox& box) {
    j.at("left").get_to(box.left);
    j.at("top").get_to(box.top);
    j.at("width").get_to(box.width);
    j.at("height").get_to(box.height);
}

inline void to_json(nlohmann::json& j, const WordId& id) {
    j = {{"page", id.page}, {"line", id.line}, {"position", id.position}};
}

inline void from_json(const nlohmann::json& j, WordId& id) {
    j.at("page").get_to(id.page);
    j.at("line").get_to(id.line);
    j.at("position").get_to(id.position);
}

inline void to_json(nlohmann::json& j, const LineRef& ref) {
    j = {{"top_line", ref.top_line},
         {"x_line", ref.x_line},
         {"baseline", ref.baseline},
         {"bottom_line", ref.bottom_line}};
}

inline void from_json(const nlohmann::json& j, LineRef& ref) {
    j.at("top_line").get_to(ref.top_line);
    j.at("x_line").get_to(ref.x_line);
    j.at("baseline").get_to(ref.baseline);
    j.at("bottom_line").get_to(ref.bottom_line);
}

inline void to_json(nlohmann::json& j, const ShapeCode& code) {
    j = {{"sectors", code.sectors}, {"sector_width", code.sector_width}};
}

inline void from_json(const nlohmann::json& j, ShapeCode& code) {
    j.at("sectors").get_to(code.sectors);
    j.at("sector_width").get_to(code.sector_width);
}

inline void to_json(nlohmann::json& j, const TextLine& line) {
    j = {{"band", line.band},         {"top_line", line.top_line},
         {"x_line", line.x_line},     {"baseline", line.baseline},
         {"bottom_line", line.bottom_line}, {"k", line.k}};
}

inline void to_json(nlohmann::json& j, const Profile& profile) {
    j = {{"axis", profile.axis == ProfileAxis::horizontal ? "horizontal" : "vertical"},
         {"counts", profile.counts}};
}

inline void to_json(nlohmann::json& j, const GapHistogram& hist) {
    nlohmann::json bins = nlohmann::json::array();
    for (const auto& [length, count] : hist.bins) bins.push_back({length, count});
    j = {{"bins", bins}, {"mean_gap", hist.mean_gap}};
}

inline void to_json(nlohmann::json& j, const PageEntry& entry) {
    j = {{"path", entry.path},
         {"checksum", entry.checksum},
         {"width", entry.width},
         {"height", entry.height}};
}

inline void from_json(const nlohmann::json& j, PageEntry& entry) {
    j.at("path").get_to(entry.path);
    j.at("checksum").get_to(entry.checksum);
    j.at("width").get_to(entry.width);
    j.at("height").get_to(entry.height);
}

inline void to_json(nlohmann::json& j, const IndexedWord& word) {
    j = {{"id", word.id},
         {"box", word.box},
         {"line_ref", word.line_ref},
         {"char_count", word.char_count},
         {"shape_code", word.shape_code}};
}

inline void from_json(const nlohmann::json& j, IndexedWord& word) {
    j.at("id").get_to(word.id);
    j.at("box").get_to(word.box);
    j.at("line_ref").get_to(word.line_ref);
    j.at("char_count").get_to(word.char_count);
    j.at("shape_code").get_to(word.shape_code);
}

inline void to_json(nlohmann::json& j, const WordIndex& index) {
    j = {{"version", index.version}, {"pages", index.pages}, {"words", index.words}};
}

inline void from_json(const nlohmann::json& j, WordIndex& index) {
    j.at("version").get_to(index.version);
    if (index.version != index_format_version)
        throw InputError("unsupported index version: " + std::to_string(index.version));
    j.at("pages").get_to(index.pages);
    j.at("words").get_to(index.words);
}

inline void to_json(nlohmann::json& j, const MatchScore& score) {
    j = {{"word", score.candidate},
         {"width_delta", score.width_delta},
         {"ssd", score.ssd},
         {"shape_mismatches", score.shape_mismatches},
         {"ulam_tau", score.ulam_tau},
         {"char_count_delta", score.char_count_delta},
         {"fused_rank", score.fused_rank}};
}

inline void to_json(nlohmann::json& j, const RankedMatches& matches) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < matches.rows.size(); ++i) {
        nlohmann::json row = matches.rows[i];
        row["rank"] = i + 1;
        rows.push_back(std::move(row));
    }
    j = {{"query", matches.query},
         {"ordering", matches.ordering == Ordering::fused ? "fused" : "ssd"},
         {"rows", rows}};
}

inline void to_json(nlohmann::json& j, const WordTruth& word) {
    j = {{"box", word.box}, {"char_count", word.char_count}, {"text", word.text}};
}

inline void to_json(nlohmann::json& j, const LineTruth& line) {
    j = {{"box", line.box}, {"words", line.words}};
}

inline void from_json(const nlohmann::json& j, SyntheticPageSpec& spec) {
    static const std::set<std::string> known = {"glyph_set", "lines",   "char_gap",
                                                "word_gap",  "line_gap", "noise",
                                                "margin",    "page_width"};
    if (!j.is_object()) throw InputError("page spec must be a JSON object");
    for (const auto& item : j.items())
        if (!known.count(item.key()))
            throw InputError("unknown page spec field: " + item.key());
    if (!j.contains("lines")) throw InputError("page spec missing field: lines");
    try {
        j.at("lines").get_to(spec.lines);
        spec.glyph_set = j.value("glyph_set", spec.glyph_set);
        spec.char_gap = j.value("char_gap", spec.char_gap);
        spec.word_gap = j.value("word_gap", spec.word_gap);
        spec.line_gap = j.value("line_gap", spec.line_gap);
        spec.noise = j.value("noise", spec.noise);
        spec.margin = j.value("margin", spec.margin);
        spec.page_width = j.value("page_width", spec.page_width);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid page spec: ") + e.what());
    }
}

} // namespace wordspot
