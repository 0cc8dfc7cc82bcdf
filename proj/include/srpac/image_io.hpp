// Grayscale image I/O: PGM (P2/P5, 8- or 16-bit) implemented natively,
// 8-bit grayscale PNG via libpng.
#ifndef SRPAC_IMAGE_IO_HPP
#define SRPAC_IMAGE_IO_HPP

#include <png.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "srpac/common.hpp"

namespace srpac {

struct GrayImage {
    int width = 0, height = 0;
    int maxval = 255;
    std::vector<uint16_t> pixels;  // row-major

    uint16_t& at(int row, int col) { return pixels[static_cast<size_t>(row) * width + col]; }
    uint16_t at(int row, int col) const { return pixels[static_cast<size_t>(row) * width + col]; }
};

namespace detail {

inline int pnm_next_int(std::istream& in) {
    // Skips whitespace and '#' comments per the PNM grammar.
    while (true) {
        int c = in.peek();
        if (c == EOF) throw std::runtime_error("pgm: unexpected end of file");
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int value = 0;
    in >> value;
    if (!in) throw std::runtime_error("pgm: malformed header integer");
    return value;
}

}  // namespace detail

inline GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("pgm: cannot open " + path);
    char magic0 = 0, magic1 = 0;
    in.get(magic0);
    in.get(magic1);
    if (magic0 != 'P' || (magic1 != '2' && magic1 != '5'))
        throw std::runtime_error("pgm: not a P2/P5 file: " + path);
    const bool binary = magic1 == '5';
    GrayImage img;
    img.width = detail::pnm_next_int(in);
    img.height = detail::pnm_next_int(in);
    img.maxval = detail::pnm_next_int(in);
    if (img.width <= 0 || img.height <= 0 || img.maxval <= 0 || img.maxval > 65535)
        throw std::runtime_error("pgm: bad dimensions/maxval in " + path);
    img.pixels.resize(static_cast<size_t>(img.width) * img.height);
    if (binary) {
        in.get();  // single whitespace after maxval
        const int bytes = img.maxval > 255 ? 2 : 1;
        std::vector<unsigned char> buf(img.pixels.size() * bytes);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (!in) throw std::runtime_error("pgm: truncated pixel data in " + path);
        for (size_t i = 0; i < img.pixels.size(); ++i)
            img.pixels[i] = bytes == 2
                                ? static_cast<uint16_t>(buf[2 * i] << 8 | buf[2 * i + 1])
                                : buf[i];
    } else {
        for (auto& p : img.pixels) p = static_cast<uint16_t>(detail::pnm_next_int(in));
    }
    return img;
}

inline void write_pgm(const std::string& path, const GrayImage& img, bool binary = true) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("pgm: cannot write " + path);
    out << (binary ? "P5" : "P2") << "\n"
        << img.width << " " << img.height << "\n"
        << img.maxval << "\n";
    if (binary) {
        const int bytes = img.maxval > 255 ? 2 : 1;
        std::vector<unsigned char> buf;
        buf.reserve(img.pixels.size() * bytes);
        for (uint16_t p : img.pixels) {
            if (bytes == 2) buf.push_back(static_cast<unsigned char>(p >> 8));
            buf.push_back(static_cast<unsigned char>(p & 0xFF));
        }
        out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    } else {
        for (size_t i = 0; i < img.pixels.size(); ++i)
            out << img.pixels[i] << ((i + 1) % 16 == 0 ? "\n" : " ");
        out << "\n";
    }
}

inline GrayImage read_png(const std::string& path) {
    FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) throw std::runtime_error("png: cannot open " + path);
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (!png || !info || setjmp(png_jmpbuf(png))) {
        if (png) png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error("png: failed reading " + path);
    }
    png_init_io(png, fp);
    png_read_info(png, info);
    // Normalize everything to 8-bit grayscale.
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    if ((png_get_color_type(png, info) & PNG_COLOR_MASK_COLOR) != 0)
        png_set_rgb_to_gray_fixed(png, 1, -1, -1);
    png_read_update_info(png, info);
    GrayImage img;
    img.width = static_cast<int>(png_get_image_width(png, info));
    img.height = static_cast<int>(png_get_image_height(png, info));
    img.maxval = 255;
    img.pixels.resize(static_cast<size_t>(img.width) * img.height);
    std::vector<unsigned char> row(png_get_rowbytes(png, info));
    for (int y = 0; y < img.height; ++y) {
        png_read_row(png, row.data(), nullptr);
        for (int x = 0; x < img.width; ++x) img.at(y, x) = row[x];
    }
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return img;
}

inline void write_png(const std::string& path, const GrayImage& img) {
    FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) throw std::runtime_error("png: cannot write " + path);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (!png || !info || setjmp(png_jmpbuf(png))) {
        if (png) png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        throw std::runtime_error("png: failed writing " + path);
    }
    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<unsigned char> row(static_cast<size_t>(img.width));
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const int scale = img.maxval == 255 ? 1 : (img.maxval + 1) / 256;
            row[x] = static_cast<unsigned char>(std::min(255, img.at(y, x) / std::max(1, scale)));
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

// Linear map of a real array to an 8-bit image (min -> 0, max -> 255).
inline GrayImage to_gray8(const RealImage& img) {
    GrayImage out;
    out.width = img.cols();
    out.height = img.rows();
    out.maxval = 255;
    out.pixels.resize(img.size());
    double lo = img.raw().empty() ? 0.0 : img.raw()[0], hi = lo;
    for (double v : img.raw()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi > lo ? hi - lo : 1.0;
    for (size_t i = 0; i < img.size(); ++i) {
        const double t = (img.raw()[i] - lo) / span;
        out.pixels[i] = static_cast<uint16_t>(std::lround(255.0 * std::clamp(t, 0.0, 1.0)));
    }
    return out;
}

}  // namespace srpac

#endif  // SRPAC_IMAGE_IO_HPP
