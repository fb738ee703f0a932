#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wordspot/errors.hpp"
#include "wordspot/image.hpp"
#include "wordspot/matchers.hpp"
#include "wordspot/parallel.hpp"
#include "wordspot/pnm.hpp"
#include "wordspot/word_segmentation.hpp"

namespace wordspot {

inline constexpr int index_format_version = 1;

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

struct PageEntry {
    std::string path;
    std::uint64_t checksum = 0;
    int width = 0;
    int height = 0;

    bool operator==(const PageEntry&) const = default;
};

// Word metadata persisted in the index; bitmaps are re-cropped from the
// source pages when a query runs.
struct IndexedWord {
    WordId id;
    BoundingBox box;
    LineRef line_ref;
    int char_count = 0;
    ShapeCode shape_code;

    int width() const { return box.width; }
    bool operator==(const IndexedWord&) const = default;
};

struct WordIndex {
    int version = index_format_version;
    std::vector<PageEntry> pages;
    std::vector<IndexedWord> words;

    bool operator==(const WordIndex&) const = default;
};

struct IndexOptions {
    int jobs = 1;
    int binarize_threshold = auto_threshold;
    ShapeCodeOptions shape;
    WordSegOptions words;
};

/// Segments every page and collects word metadata. Deterministic for
/// fixed inputs and options regardless of the job count.
inline WordIndex build_index(const std::vector<std::string>& page_paths,
                             const IndexOptions& options = {}) {
    std::set<std::string> seen;
    for (const auto& path : page_paths)
        if (!seen.insert(path).second) throw InputError("duplicate page path: " + path);

    struct PageResult {
        PageEntry entry;
        std::vector<IndexedWord> words;
    };
    std::vector<PageResult> results(page_paths.size());
    parallel_for(page_paths.size(), options.jobs, [&](std::size_t i) {
        const std::string bytes = read_file_bytes(page_paths[i]);
        BinaryImage page;
        try {
            page = to_binary(load_pnm(bytes), options.binarize_threshold);
        } catch (const InputError& e) {
            throw InputError(page_paths[i] + ": " + e.what());
        }
        PageResult& res = results[i];
        res.entry = PageEntry{page_paths[i], fnv1a64(bytes), page.width, page.height};
        const PageSegmentation seg = segment_page(page, static_cast<int>(i), options.words);
        for (const auto& line : seg.words)
            for (const auto& word : line) {
                IndexedWord entry;
                entry.id = word.id;
                entry.box = word.box;
                entry.line_ref = word.line_ref;
                entry.char_count = word.char_count;
                entry.shape_code = shape_code(word, options.shape);
                res.words.push_back(std::move(entry));
            }
    });

    WordIndex index;
    for (auto& res : results) {
        index.pages.push_back(std::move(res.entry));
        index.words.insert(index.words.end(), res.words.begin(), res.words.end());
    }
    return index;
}

// An index joined with its loaded source pages, ready to serve queries.
struct MaterializedIndex {
    WordIndex meta;
    std::vector<BinaryImage> pages;

    WordBlock block(std::size_t word_pos) const {
        const IndexedWord& entry = meta.words.at(word_pos);
        const BinaryImage& page = pages.at(static_cast<std::size_t>(entry.id.page));
        WordBlock block;
        block.id = entry.id;
        block.box = entry.box;
        block.bitmap = crop(page, entry.box);
        block.line_ref = entry.line_ref;
        block.char_count = entry.char_count;
        block.shape_code = entry.shape_code;
        return block;
    }
};

/// Reloads the index's source pages, verifying checksums and geometry.
inline MaterializedIndex materialize(WordIndex index,
                                     int binarize_threshold = auto_threshold) {
    MaterializedIndex out;
    out.pages.reserve(index.pages.size());
    for (const auto& entry : index.pages) {
        const std::string bytes = read_file_bytes(entry.path);
        if (fnv1a64(bytes) != entry.checksum)
            throw ProcessingError("checksum mismatch on source page: " + entry.path);
        BinaryImage page;
        try {
            page = to_binary(load_pnm(bytes), binarize_threshold);
        } catch (const InputError& e) {
            throw InputError(entry.path + ": " + e.what());
        }
        if (page.width != entry.width || page.height != entry.height)
            throw ProcessingError("page dimensions changed: " + entry.path);
        out.pages.push_back(std::move(page));
    }
    out.meta = std::move(index);
    return out;
}

} // namespace wordspot
