#ifndef SHADOWLAB_ERROR_HPP
#define SHADOWLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace shadowlab {

enum class ErrorCode {
    invalid_argument,
    out_of_range,
    parse,
    budget_exceeded,
    unknown_claim,
    io,
    internal,
};

/// Every failure raised by the library carries one of the codes above so the
/// C API can translate it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string &what)
{
    if (!condition)
        fail(code, what);
}

} // namespace shadowlab

#endif
