#include "orb/rational.hpp"

#include <numeric>

#include "orb/error.hpp"

namespace orb {

const char* errc_name(errc c) {
    switch (c) {
        case errc::field_mismatch: return "FieldMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::zero_map: return "ZeroMap";
        case errc::degree_too_small: return "DegreeTooSmall";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::not_mobius: return "NotMobius";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::no_factorization: return "NoFactorization";
        case errc::bad_params: return "BadParams";
        case errc::bad_form: return "BadForm";
        case errc::unsupported_group: return "UnsupportedGroup";
        case errc::no_descent: return "NoDescent";
        case errc::no_such_sigma: return "NoSuchSigma";
        case errc::not_polynomial: return "NotPolynomial";
        case errc::not_gl: return "NotGL";
        case errc::not_holomorphic: return "NotHolomorphic";
        case errc::verification_failure: return "VerificationFailure";
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_symbol: return "UnknownSymbol";
        case errc::limit_exceeded: return "LimitExceeded";
    }
    return "Error";
}

Rational rational_from_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) fail(errc::syntax_error, "bad rational literal '" + text + "'");
    r.canonicalize();
    require(sgn(r.get_den()) > 0, errc::syntax_error, "zero denominator in '" + text + "'");
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

long integer_gcd(long a, long b) { return std::gcd(a, b); }
long integer_lcm(long a, long b) { return std::lcm(a, b); }

} // namespace orb
