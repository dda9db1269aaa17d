#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "fqa/common.hpp"

namespace fqa {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// 8-bit RGB raster, row major, 3 interleaved channels.
struct ImageBuffer {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> data;

    static constexpr int kChannels = 3;

    static ImageBuffer make(int height, int width, std::uint8_t fill = 0) {
        if (height < 1 || width < 1)
            throw InvalidArgument("image dimensions must be at least 1x1");
        ImageBuffer img;
        img.height = height;
        img.width = width;
        img.data.assign(static_cast<std::size_t>(height) * width * kChannels, fill);
        return img;
    }

    bool valid() const {
        return height >= 1 && width >= 1 &&
               data.size() == static_cast<std::size_t>(height) * width * kChannels;
    }

    std::uint8_t& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
    }
    std::uint8_t at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
    }

    bool operator==(const ImageBuffer&) const = default;
};

// Float-valued working image, same layout as ImageBuffer.
struct ImageF {
    int height = 0;
    int width = 0;
    std::vector<float> data;

    static ImageF make(int height, int width, float fill = 0.f) {
        ImageF img;
        img.height = height;
        img.width = width;
        img.data.assign(static_cast<std::size_t>(height) * width * 3, fill);
        return img;
    }

    float& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    float at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
};

inline ImageF to_float(const ImageBuffer& img) {
    ImageF out;
    out.height = img.height;
    out.width = img.width;
    out.data.assign(img.data.begin(), img.data.end());
    return out;
}

inline std::uint8_t quantize_u8(float v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.f, 255.f)));
}

inline ImageBuffer to_u8(const ImageF& img) {
    ImageBuffer out;
    out.height = img.height;
    out.width = img.width;
    out.data.resize(img.data.size());
    for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = quantize_u8(img.data[i]);
    return out;
}

struct BoundingBox {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    bool valid() const { return w > 0.0 && h > 0.0; }

    // Intersection over union with another box; 0 when disjoint.
    double iou(const BoundingBox& o) const {
        const double ix = std::max(0.0, std::min(x + w, o.x + o.w) - std::max(x, o.x));
        const double iy = std::max(0.0, std::min(y + h, o.y + o.h) - std::max(y, o.y));
        const double inter = ix * iy;
        const double uni = w * h + o.w * o.h - inter;
        return uni > 0.0 ? inter / uni : 0.0;
    }

    bool intersects_image(int img_h, int img_w) const {
        return x < img_w && y < img_h && x + w > 0.0 && y + h > 0.0;
    }
};

// Five facial points in the fixed order below.
struct LandmarkSet {
    enum Index { kLeftEye = 0, kRightEye, kNose, kLeftMouth, kRightMouth };

    std::array<Point, 5> points{};

    bool finite() const {
        for (const auto& p : points)
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
        return true;
    }
};

struct FaceSample {
    ImageBuffer image;
    std::string identity;
    std::optional<BoundingBox> bbox;
    std::optional<LandmarkSet> landmarks;
    std::string source_id;
};

// Bilinear sample of a float image at (sx, sy), clamped to the frame.
inline void sample_bilinear(const ImageF& img, double sx, double sy, float out[3]) {
    const double cx = std::clamp(sx, 0.0, static_cast<double>(img.width - 1));
    const double cy = std::clamp(sy, 0.0, static_cast<double>(img.height - 1));
    const int x0 = static_cast<int>(cx);
    const int y0 = static_cast<int>(cy);
    const int x1 = std::min(x0 + 1, img.width - 1);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const float fx = static_cast<float>(cx - x0);
    const float fy = static_cast<float>(cy - y0);
    for (int c = 0; c < 3; ++c) {
        const float top = img.at(y0, x0, c) * (1.f - fx) + img.at(y0, x1, c) * fx;
        const float bot = img.at(y1, x0, c) * (1.f - fx) + img.at(y1, x1, c) * fx;
        out[c] = top * (1.f - fy) + bot * fy;
    }
}

// Resamples the axis-aligned region [rx, rx+rw) x [ry, ry+rh) of src into an
// out_h x out_w image, pixel-center convention.
inline ImageF resize_region_bilinear(const ImageF& src, double rx, double ry, double rw,
                                     double rh, int out_h, int out_w) {
    if (out_h < 1 || out_w < 1) throw InvalidArgument("resize target must be at least 1x1");
    ImageF out = ImageF::make(out_h, out_w);
    const double sx_scale = rw / out_w;
    const double sy_scale = rh / out_h;
    float px[3];
    for (int y = 0; y < out_h; ++y) {
        const double sy = ry + (y + 0.5) * sy_scale - 0.5;
        for (int x = 0; x < out_w; ++x) {
            const double sx = rx + (x + 0.5) * sx_scale - 0.5;
            sample_bilinear(src, sx, sy, px);
            for (int c = 0; c < 3; ++c) out.at(y, x, c) = px[c];
        }
    }
    return out;
}

inline ImageF resize_bilinear(const ImageF& src, int out_h, int out_w) {
    return resize_region_bilinear(src, 0.0, 0.0, src.width, src.height, out_h, out_w);
}

inline ImageBuffer resize_bilinear(const ImageBuffer& src, int out_h, int out_w) {
    return to_u8(resize_bilinear(to_float(src), out_h, out_w));
}

struct CropResult {
    ImageBuffer image;
    std::optional<LandmarkSet> landmarks;  // transformed into crop coordinates
};

// Expands the sample's bbox by `margin` per side, clips to the image, and
// resamples to output_size x output_size. Landmarks follow the same mapping.
inline CropResult crop_face(const FaceSample& sample, int output_size, double margin) {
    if (!sample.bbox.has_value()) throw InvalidArgument("crop_face requires a bounding box");
    if (output_size < 1) throw InvalidArgument("crop_face output size must be positive");
    const BoundingBox& b = *sample.bbox;
    if (!b.valid()) throw InvalidArgument("crop_face bounding box is empty");

    double rx = b.x - margin * b.w;
    double ry = b.y - margin * b.h;
    double rx1 = b.x + b.w + margin * b.w;
    double ry1 = b.y + b.h + margin * b.h;
    rx = std::max(rx, 0.0);
    ry = std::max(ry, 0.0);
    rx1 = std::min(rx1, static_cast<double>(sample.image.width));
    ry1 = std::min(ry1, static_cast<double>(sample.image.height));
    if (rx1 <= rx || ry1 <= ry)
        throw InvalidArgument("crop_face bounding box lies outside the image");

    const double rw = rx1 - rx;
    const double rh = ry1 - ry;
    CropResult result;
    result.image =
        to_u8(resize_region_bilinear(to_float(sample.image), rx, ry, rw, rh, output_size, output_size));
    if (sample.landmarks.has_value()) {
        LandmarkSet lm = *sample.landmarks;
        for (auto& p : lm.points) {
            p.x = (p.x - rx) * output_size / rw;
            p.y = (p.y - ry) * output_size / rh;
        }
        result.landmarks = lm;
    }
    return result;
}

inline std::vector<float> to_gray(const ImageBuffer& img) {
    std::vector<float> gray(static_cast<std::size_t>(img.height) * img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            gray[static_cast<std::size_t>(y) * img.width + x] =
                0.299f * img.at(y, x, 0) + 0.587f * img.at(y, x, 1) + 0.114f * img.at(y, x, 2);
    return gray;
}

// Binary PPM (P6) I/O; the on-disk image format used throughout the toolkit.
inline void write_ppm(const ImageBuffer& img, const std::filesystem::path& path) {
    if (!img.valid()) throw InvalidArgument("cannot write invalid image");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path.string());
    f << "P6\n" << img.width << " " << img.height << "\n255\n";
    f.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
    if (!f) throw IoError("short write: " + path.string());
}

inline ImageBuffer read_ppm(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open: " + path.string());
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    f >> magic >> w >> h >> maxval;
    if (magic != "P6" || maxval != 255 || w < 1 || h < 1)
        throw ParseError("unsupported PPM header in " + path.string());
    f.get();  // single whitespace after header
    ImageBuffer img = ImageBuffer::make(h, w);
    f.read(reinterpret_cast<char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
    if (f.gcount() != static_cast<std::streamsize>(img.data.size()))
        throw ParseError("truncated PPM payload in " + path.string());
    return img;
}

}  // namespace fqa
