#include "pngio.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

#include "errors.hpp"

namespace ws {

namespace {

void put_u32be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
               const std::vector<std::uint8_t>& data) {
    put_u32be(out, static_cast<std::uint32_t>(data.size()));
    std::size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    std::uint32_t crc = static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(out.data() + start), static_cast<uInt>(out.size() - start)));
    put_u32be(out, crc);
}

} // namespace

std::vector<std::uint8_t> encode_gray_png(const std::uint8_t* pixels, int width, int height) {
    require(width >= 1 && height >= 1, errc::invalid_argument, "png dimensions must be positive");

    // raw scanlines, filter byte 0 per row
    std::vector<std::uint8_t> raw;
    raw.reserve(static_cast<std::size_t>(height) * (static_cast<std::size_t>(width) + 1));
    for (int r = 0; r < height; ++r) {
        raw.push_back(0);
        raw.insert(raw.end(), pixels + static_cast<std::size_t>(r) * static_cast<std::size_t>(width),
                   pixels + static_cast<std::size_t>(r + 1) * static_cast<std::size_t>(width));
    }

    uLongf bound = ::compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> deflated(bound);
    int rc = ::compress2(deflated.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), 6);
    require(rc == Z_OK, errc::internal, "zlib compress failed");
    deflated.resize(bound);

    std::vector<std::uint8_t> out = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    std::vector<std::uint8_t> ihdr;
    put_u32be(ihdr, static_cast<std::uint32_t>(width));
    put_u32be(ihdr, static_cast<std::uint32_t>(height));
    ihdr.push_back(8);  // bit depth
    ihdr.push_back(0);  // color type: grayscale
    ihdr.push_back(0);  // compression
    ihdr.push_back(0);  // filter
    ihdr.push_back(0);  // interlace
    put_chunk(out, "IHDR", ihdr);
    put_chunk(out, "IDAT", deflated);
    put_chunk(out, "IEND", {});
    return out;
}

void write_gray_png(const std::string& path, const std::uint8_t* pixels, int width, int height) {
    auto buf = encode_gray_png(pixels, width, height);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    require(f.good(), errc::io, "cannot open for write: " + path);
    f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    require(f.good(), errc::io, "write failed: " + path);
}

} // namespace ws
