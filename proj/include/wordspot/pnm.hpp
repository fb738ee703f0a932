#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include "wordspot/errors.hpp"
#include "wordspot/image.hpp"

namespace wordspot {

enum class PnmFormat { pbm_ascii, pbm_binary, pgm_ascii, pgm_binary };

using PnmImage = std::variant<BinaryImage, GrayImage>;

namespace detail {

class PnmReader {
public:
    explicit PnmReader(std::string_view bytes) : data_(bytes) {}

    // Header tokens are separated by whitespace; '#' starts a comment to end of line.
    std::string header_token() {
        skip_header_space();
        if (pos_ >= data_.size())
            throw InputError("malformed header: unexpected end of file");
        std::string tok;
        while (pos_ < data_.size() && !std::isspace(static_cast<unsigned char>(data_[pos_])) &&
               data_[pos_] != '#')
            tok.push_back(data_[pos_++]);
        if (tok.empty())
            throw InputError("malformed header: empty token");
        return tok;
    }

    int header_int(const char* what) {
        const std::string tok = header_token();
        int value = 0;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InputError(std::string("malformed header: bad ") + what);
            value = value * 10 + (c - '0');
            if (value > 1'000'000'000)
                throw InputError(std::string("malformed header: bad ") + what);
        }
        if (value == 0)
            throw InputError(std::string("malformed header: bad ") + what);
        return value;
    }

    // A raw payload begins after exactly one whitespace character.
    void begin_raw_payload() {
        if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_])))
            throw InputError("malformed header: missing payload separator");
        ++pos_;
    }

    std::string_view rest() const { return data_.substr(pos_); }

    int next_ascii_bit() {
        while (pos_ < data_.size()) {
            const char c = data_[pos_];
            if (c == '#') {
                skip_comment();
                continue;
            }
            ++pos_;
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c == '0') return 0;
            if (c == '1') return 1;
            throw InputError("malformed payload: unexpected character");
        }
        throw InputError("truncated payload");
    }

    int next_ascii_value(int maxval) {
        skip_header_space();
        if (pos_ >= data_.size())
            throw InputError("truncated payload");
        int value = 0;
        bool any = false;
        while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
            value = value * 10 + (data_[pos_++] - '0');
            any = true;
            if (value > 65535)
                throw InputError("malformed payload: sample out of range");
        }
        if (!any)
            throw InputError("malformed payload: unexpected character");
        if (value > maxval)
            throw InputError("malformed payload: sample out of range");
        return value;
    }

private:
    void skip_comment() {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
    }

    void skip_header_space() {
        while (pos_ < data_.size()) {
            const char c = data_[pos_];
            if (c == '#') {
                skip_comment();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline PnmImage load_pnm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw InputError("unsupported magic number");
    const char kind = bytes[1];
    detail::PnmReader reader(bytes.substr(2));

    switch (kind) {
    case '1': {
        const int w = reader.header_int("width");
        const int h = reader.header_int("height");
        BinaryImage img(w, h);
        for (std::size_t i = 0; i < img.pixels.size(); ++i)
            img.pixels[i] = static_cast<std::uint8_t>(reader.next_ascii_bit());
        return img;
    }
    case '4': {
        const int w = reader.header_int("width");
        const int h = reader.header_int("height");
        reader.begin_raw_payload();
        const std::string_view raw = reader.rest();
        const std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
        if (raw.size() < row_bytes * h)
            throw InputError("truncated payload");
        BinaryImage img(w, h);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const unsigned char byte =
                    static_cast<unsigned char>(raw[y * row_bytes + x / 8]);
                img.set(x, y, (byte >> (7 - x % 8)) & 1);
            }
        }
        return img;
    }
    case '2': {
        const int w = reader.header_int("width");
        const int h = reader.header_int("height");
        const int maxval = reader.header_int("maxval");
        if (maxval > 255)
            throw InputError("unsupported maxval (only up to 255)");
        GrayImage img(w, h);
        for (std::size_t i = 0; i < img.pixels.size(); ++i)
            img.pixels[i] = static_cast<std::uint8_t>(reader.next_ascii_value(maxval));
        return img;
    }
    case '5': {
        const int w = reader.header_int("width");
        const int h = reader.header_int("height");
        const int maxval = reader.header_int("maxval");
        if (maxval > 255)
            throw InputError("unsupported maxval (only up to 255)");
        reader.begin_raw_payload();
        const std::string_view raw = reader.rest();
        if (raw.size() < static_cast<std::size_t>(w) * h)
            throw InputError("truncated payload");
        GrayImage img(w, h);
        for (std::size_t i = 0; i < img.pixels.size(); ++i)
            img.pixels[i] = static_cast<std::uint8_t>(raw[i]);
        return img;
    }
    default:
        throw InputError(std::string("unsupported magic number: P") + kind);
    }
}

inline std::string save_pnm(const BinaryImage& img, PnmFormat format = PnmFormat::pbm_binary) {
    std::ostringstream out;
    if (format == PnmFormat::pbm_ascii) {
        out << "P1\n" << img.width << ' ' << img.height << '\n';
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) out << (img.get(x, y) ? '1' : '0');
            out << '\n';
        }
    } else if (format == PnmFormat::pbm_binary) {
        out << "P4\n" << img.width << ' ' << img.height << '\n';
        const int row_bytes = (img.width + 7) / 8;
        for (int y = 0; y < img.height; ++y) {
            for (int b = 0; b < row_bytes; ++b) {
                unsigned char byte = 0;
                for (int bit = 0; bit < 8; ++bit) {
                    const int x = b * 8 + bit;
                    if (x < img.width && img.get(x, y)) byte |= 1 << (7 - bit);
                }
                out << static_cast<char>(byte);
            }
        }
    } else {
        throw std::invalid_argument("binary image requires a PBM format");
    }
    return out.str();
}

inline std::string save_pnm(const GrayImage& img, PnmFormat format = PnmFormat::pgm_binary) {
    std::ostringstream out;
    if (format == PnmFormat::pgm_ascii) {
        out << "P2\n" << img.width << ' ' << img.height << "\n255\n";
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                if (x) out << ' ';
                out << static_cast<int>(img.get(x, y));
            }
            out << '\n';
        }
    } else if (format == PnmFormat::pgm_binary) {
        out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
        for (std::uint8_t p : img.pixels) out << static_cast<char>(p);
    } else {
        throw std::invalid_argument("gray image requires a PGM format");
    }
    return out.str();
}

inline std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline PnmImage load_pnm_file(const std::filesystem::path& path) {
    const std::string bytes = read_file_bytes(path); // open errors already name the path
    try {
        return load_pnm(bytes);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

inline void write_file_bytes(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ProcessingError("cannot open file for writing: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw ProcessingError("write failure: " + path.string());
}

/// Reduces a loaded PNM to a bitmap, binarizing grayscale input with the
/// given threshold (Otsu when auto_threshold).
inline BinaryImage to_binary(PnmImage img, int threshold = auto_threshold) {
    if (std::holds_alternative<BinaryImage>(img))
        return std::get<BinaryImage>(std::move(img));
    return binarize(std::get<GrayImage>(img), threshold);
}

inline BinaryImage load_page(const std::filesystem::path& path, int threshold = auto_threshold) {
    return to_binary(load_pnm_file(path), threshold);
}

} // namespace wordspot
