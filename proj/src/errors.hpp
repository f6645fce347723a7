// Error taxonomy shared by the C++ core and the C API boundary.
#pragma once

#include <stdexcept>
#include <string>

namespace ws {

enum class errc {
    invalid_argument = 1,  // bad parameter, config value, or precondition
    io               = 2,  // file unreadable/unwritable
    parse            = 3,  // malformed file content (CSV, config, tensor file)
    data             = 4,  // inconsistent data at runtime (count mismatch, divergence)
    internal         = 5,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace ws
