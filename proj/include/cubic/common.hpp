#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubic {

using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Error categories map 1:1 onto CLI exit codes (2/3/4).
enum class errc {
    validation,  // bad input: rejected curve, malformed file, bad flag
    budget,      // a guarded computation exceeded its cost budget
    invariant,   // internal invariant violated; always a bug
};

class error : public std::runtime_error {
  public:
    error(errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    errc kind;
};

[[noreturn]] inline void fail_validation(const std::string& msg) { throw error(errc::validation, msg); }
[[noreturn]] inline void fail_budget(const std::string& msg) { throw error(errc::budget, msg); }
[[noreturn]] inline void fail_invariant(const std::string& msg) { throw error(errc::invariant, msg); }

inline void check(bool ok, errc k, const std::string& msg) {
    if (!ok) throw error(k, msg);
}

}  // namespace cubic
