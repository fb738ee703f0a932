#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wordspot/errors.hpp"

namespace wordspot {

struct BoundingBox {
    int left = 0;
    int top = 0;
    int width = 0;
    int height = 0;

    int right() const { return left + width - 1; }  // inclusive
    int bottom() const { return top + height - 1; } // inclusive

    bool operator==(const BoundingBox&) const = default;
};

namespace detail {

inline void check_dimensions(int width, int height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("image dimensions must be at least 1x1");
}

} // namespace detail

/// Row-major bitmap; pixel value 1 is foreground (ink), 0 is background.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    BinaryImage() = default;
    BinaryImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {
        detail::check_dimensions(w, h);
    }

    bool get(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool fg) { pixels[static_cast<std::size_t>(y) * width + x] = fg ? 1 : 0; }

    long foreground_count() const {
        long n = 0;
        for (std::uint8_t p : pixels) n += p;
        return n;
    }

    bool contains(const BoundingBox& box) const {
        return box.width >= 1 && box.height >= 1 && box.left >= 0 && box.top >= 0 &&
               box.left + box.width <= width && box.top + box.height <= height;
    }

    bool operator==(const BinaryImage&) const = default;
};

/// Row-major grid of intensities in [0, 255].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
        detail::check_dimensions(w, h);
    }

    std::uint8_t get(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    void set(int x, int y, std::uint8_t v) { pixels[static_cast<std::size_t>(y) * width + x] = v; }

    bool operator==(const GrayImage&) const = default;
};

inline BinaryImage crop(const BinaryImage& img, const BoundingBox& box) {
    if (!img.contains(box))
        throw InputError("crop box out of image range");
    BinaryImage out(box.width, box.height);
    for (int y = 0; y < box.height; ++y)
        for (int x = 0; x < box.width; ++x)
            out.set(x, y, img.get(box.left + x, box.top + y));
    return out;
}

inline BinaryImage transpose(const BinaryImage& img) {
    BinaryImage out(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.set(y, x, img.get(x, y));
    return out;
}

inline BinaryImage complement(const BinaryImage& img) {
    BinaryImage out = img;
    for (auto& p : out.pixels) p = p ? 0 : 1;
    return out;
}

/// Otsu's threshold: the smallest cut maximizing between-class variance.
/// Pixels strictly below the returned value are foreground.
inline int otsu_threshold(const GrayImage& img) {
    std::array<long, 256> hist{};
    for (std::uint8_t p : img.pixels) ++hist[p];
    const double total = static_cast<double>(img.pixels.size());

    double sum_all = 0.0;
    for (int v = 0; v < 256; ++v) sum_all += static_cast<double>(v) * hist[v];

    int best_t = 0;
    double best_var = -1.0;
    long n0 = 0;
    double sum0 = 0.0;
    for (int t = 0; t < 256; ++t) {
        // class 0: intensity < t
        if (t > 0) {
            n0 += hist[t - 1];
            sum0 += static_cast<double>(t - 1) * hist[t - 1];
        }
        const long n1 = static_cast<long>(total) - n0;
        if (n0 == 0 || n1 == 0) continue;
        const double mu0 = sum0 / n0;
        const double mu1 = (sum_all - sum0) / n1;
        const double var = (n0 / total) * (n1 / total) * (mu0 - mu1) * (mu0 - mu1);
        if (var > best_var + 1e-12) {
            best_var = var;
            best_t = t;
        }
    }
    return best_t; // 0 for constant images: everything background
}

inline constexpr int auto_threshold = -1;

/// Foreground iff intensity < threshold (dark ink on a light page).
inline BinaryImage binarize(const GrayImage& img, int threshold = auto_threshold) {
    const int t = (threshold == auto_threshold) ? otsu_threshold(img) : threshold;
    BinaryImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        out.pixels[i] = img.pixels[i] < t ? 1 : 0;
    return out;
}

} // namespace wordspot
