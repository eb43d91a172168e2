#ifndef SEPSYS_ERRORS_HPP
#define SEPSYS_ERRORS_HPP

#include <sstream>
#include <stdexcept>
#include <string>

namespace sepsys {

// Bad user input (malformed files, loops in edge lists, out-of-range args).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant. Carries enough context to identify the
// construction step that went wrong.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
[[noreturn]] inline void throw_invariant(const char* cond, const char* file, int line,
                                         const std::string& msg) {
    std::ostringstream os;
    os << "invariant violated: " << cond;
    if (!msg.empty()) os << " (" << msg << ")";
    os << " at " << file << ":" << line;
    throw invariant_error(os.str());
}
}  // namespace detail

}  // namespace sepsys

#define SEPSYS_CHECK(cond, msg)                                                   \
    do {                                                                          \
        if (!(cond)) ::sepsys::detail::throw_invariant(#cond, __FILE__, __LINE__, \
                                                       std::string(msg));         \
    } while (0)

#define SEPSYS_REQUIRE(cond, msg)                            \
    do {                                                     \
        if (!(cond)) throw ::sepsys::input_error(msg);       \
    } while (0)

#endif
