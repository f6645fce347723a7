#include "tensor.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>

namespace ws {

namespace {

constexpr char MAGIC[4] = {'W', 'S', 'T', 'F'};
constexpr std::uint16_t VERSION = 1;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

std::uint16_t get_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

static_assert(std::endian::native == std::endian::little,
              "payload serialization assumes a little-endian host");

} // namespace

tensor::tensor(dtype t, std::vector<std::uint32_t> dims) : type_(t), dims_(std::move(dims)) {
    data_.assign(size() * dtype_size(type_), 0);
}

std::size_t tensor::size() const {
    std::size_t n = 1;
    for (auto d : dims_) n *= d;
    return n;
}

tensor tensor::from_f64(const std::vector<double>& v, std::vector<std::uint32_t> dims) {
    tensor t(dtype::f64, std::move(dims));
    require(v.size() == t.size(), errc::invalid_argument, "tensor payload/dims mismatch");
    std::memcpy(t.data_.data(), v.data(), v.size() * 8);
    return t;
}

tensor tensor::from_f32(const std::vector<float>& v, std::vector<std::uint32_t> dims) {
    tensor t(dtype::f32, std::move(dims));
    require(v.size() == t.size(), errc::invalid_argument, "tensor payload/dims mismatch");
    std::memcpy(t.data_.data(), v.data(), v.size() * 4);
    return t;
}

tensor tensor::from_u8(const std::vector<std::uint8_t>& v, std::vector<std::uint32_t> dims) {
    tensor t(dtype::u8, std::move(dims));
    require(v.size() == t.size(), errc::invalid_argument, "tensor payload/dims mismatch");
    std::memcpy(t.data_.data(), v.data(), v.size());
    return t;
}

std::vector<double> tensor::as_f64() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i);
    return out;
}

std::vector<float> tensor::as_f32() const {
    std::vector<float> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<float>(at(i));
    return out;
}

std::vector<std::uint8_t> tensor::as_u8() const {
    std::vector<std::uint8_t> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(at(i));
    return out;
}

double tensor::at(std::size_t i) const {
    switch (type_) {
        case dtype::f32: {
            float f;
            std::memcpy(&f, data_.data() + i * 4, 4);
            return f;
        }
        case dtype::f64: {
            double d;
            std::memcpy(&d, data_.data() + i * 8, 8);
            return d;
        }
        case dtype::u8: return data_[i];
    }
    fail(errc::internal, "bad dtype tag");
}

std::vector<std::uint8_t> encode_tensor(const tensor& t) {
    require(t.rank() <= 255, errc::invalid_argument, "tensor rank > 255");
    std::vector<std::uint8_t> out;
    out.reserve(16 + t.bytes().size());
    out.insert(out.end(), MAGIC, MAGIC + 4);
    put_u16(out, VERSION);
    out.push_back(static_cast<std::uint8_t>(t.rank()));
    for (auto d : t.dims()) put_u32(out, d);
    out.push_back(static_cast<std::uint8_t>(t.type()));
    out.insert(out.end(), t.bytes().begin(), t.bytes().end());
    std::uint32_t crc = static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(out.data()), static_cast<uInt>(out.size())));
    put_u32(out, crc);
    return out;
}

tensor decode_tensor(const std::vector<std::uint8_t>& buf) {
    require(buf.size() >= 4 && std::memcmp(buf.data(), MAGIC, 4) == 0, errc::parse,
            "tensor file: bad magic");
    require(buf.size() >= 7, errc::parse, "tensor file: truncated header");
    std::uint16_t version = get_u16(buf.data() + 4);
    require(version == VERSION, errc::parse,
            "tensor file: unsupported version " + std::to_string(version));
    std::size_t rank = buf[6];
    std::size_t pos = 7;
    require(buf.size() >= pos + 4 * rank + 1, errc::parse, "tensor file: truncated dims");
    std::vector<std::uint32_t> dims(rank);
    for (std::size_t i = 0; i < rank; ++i, pos += 4) dims[i] = get_u32(buf.data() + pos);
    std::uint8_t tag = buf[pos++];
    require(tag <= 2, errc::parse, "tensor file: bad dtype tag");
    dtype t = static_cast<dtype>(tag);

    std::size_t count = 1;
    for (auto d : dims) count *= d;
    std::size_t payload = count * dtype_size(t);
    require(buf.size() == pos + payload + 4, errc::parse,
            buf.size() < pos + payload + 4 ? "tensor file: truncated payload"
                                           : "tensor file: trailing bytes");

    std::uint32_t want = get_u32(buf.data() + pos + payload);
    std::uint32_t got = static_cast<std::uint32_t>(::crc32(
        0L, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(pos + payload)));
    require(want == got, errc::parse, "tensor file: crc mismatch");

    tensor out(t, dims);
    std::memcpy(out.bytes().data(), buf.data() + pos, payload);
    return out;
}

void write_tensor_file(const std::string& path, const tensor& t) {
    auto buf = encode_tensor(t);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    require(f.good(), errc::io, "cannot open for write: " + path);
    f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    require(f.good(), errc::io, "write failed: " + path);
}

tensor read_tensor_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    require(f.good(), errc::io, "cannot open: " + path);
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
    return decode_tensor(buf);
}

} // namespace ws
