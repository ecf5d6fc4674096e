#ifndef ORB_ERROR_HPP
#define ORB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orb {

enum class errc {
    field_mismatch,
    division_by_zero,
    zero_polynomial,
    zero_map,
    degree_too_small,
    degree_mismatch,
    not_mobius,
    reducible_modulus,
    no_factorization,
    bad_params,
    bad_form,
    unsupported_group,
    no_descent,
    no_such_sigma,
    not_polynomial,
    not_gl,
    not_holomorphic,
    verification_failure,
    syntax_error,
    unknown_symbol,
    limit_exceeded,
};

const char* errc_name(errc c);

/// All library errors are reported through this exception; `code()` gives the
/// machine-readable kind, `what()` a human-readable message.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace orb

#endif
