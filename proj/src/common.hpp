#ifndef GH_COMMON_HPP
#define GH_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gh {

using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i64 = std::int64_t;

// Field element in its canonical encoding (residue for prime fields,
// base-p digit value for extensions). Always < field order.
using Fel = std::uint64_t;

// Error classes mirror the CLI exit codes: input 2, cap 3, mismatch 4,
// internal 5.
enum class Errc { input = 2, cap = 3, mismatch = 4, internal = 5 };

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail_input(const std::string& w) { throw Error(Errc::input, w); }
[[noreturn]] inline void fail_cap(const std::string& w) { throw Error(Errc::cap, w); }
[[noreturn]] inline void fail_mismatch(const std::string& w) { throw Error(Errc::mismatch, w); }
[[noreturn]] inline void fail_internal(const std::string& w) { throw Error(Errc::internal, w); }

inline void require(bool ok, Errc c, const std::string& w) {
  if (!ok) throw Error(c, w);
}

}  // namespace gh

#endif
