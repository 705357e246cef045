#ifndef LGKIT_ERROR_HPP
#define LGKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lgkit {

/// Error codes surfaced by the library. CLI exit codes: usage/parse-class
/// errors map to 2, internal-consistency errors (engine bugs) to 3.
enum class Errc {
    parse_error,
    domain,
    io_error,
    empty_set,
    empty_table,
    missing_mu,
    negative_entry,
    not_homogeneous,
    mixed_degree,
    not_symmetric,
    odd_exponent,
    half_exponent,
    residual_y,
    not_scalar,
    site_out_of_range,
    resource_limit,
    inverse_verification_failed,
};

const char* errc_name(Errc c);

/// True for errors that signal an internal inconsistency rather than bad input.
bool errc_is_internal(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace lgkit

#endif
