// Dense row-major tensors and the WSTF on-disk format:
//   "WSTF" | version u16 | rank u8 | dims u32[rank] | dtype u8 | payload | crc32
// All integers and payload little-endian; crc32 (IEEE) covers every byte
// before it. dtype: 0 = f32, 1 = f64, 2 = u8.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ws {

enum class dtype : std::uint8_t { f32 = 0, f64 = 1, u8 = 2 };

inline std::size_t dtype_size(dtype t) {
    switch (t) {
        case dtype::f32: return 4;
        case dtype::f64: return 8;
        case dtype::u8: return 1;
    }
    fail(errc::internal, "bad dtype tag");
}

class tensor {
public:
    tensor() : type_(dtype::f64) {}
    tensor(dtype t, std::vector<std::uint32_t> dims);

    static tensor from_f64(const std::vector<double>& v, std::vector<std::uint32_t> dims);
    static tensor from_f32(const std::vector<float>& v, std::vector<std::uint32_t> dims);
    static tensor from_u8(const std::vector<std::uint8_t>& v, std::vector<std::uint32_t> dims);

    dtype type() const { return type_; }
    const std::vector<std::uint32_t>& dims() const { return dims_; }
    std::size_t rank() const { return dims_.size(); }
    std::size_t size() const;  // element count (1 for rank 0)

    const std::vector<std::uint8_t>& bytes() const { return data_; }
    std::vector<std::uint8_t>& bytes() { return data_; }

    // elementwise views converted to the requested type
    std::vector<double> as_f64() const;
    std::vector<float> as_f32() const;
    std::vector<std::uint8_t> as_u8() const;

    double at(std::size_t i) const;

    bool operator==(const tensor& o) const {
        return type_ == o.type_ && dims_ == o.dims_ && data_ == o.data_;
    }

private:
    dtype type_;
    std::vector<std::uint32_t> dims_;
    std::vector<std::uint8_t> data_;
};

void write_tensor_file(const std::string& path, const tensor& t);
tensor read_tensor_file(const std::string& path);

// in-memory codecs (used by the file functions; handy for tests)
std::vector<std::uint8_t> encode_tensor(const tensor& t);
tensor decode_tensor(const std::vector<std::uint8_t>& buf);

} // namespace ws
