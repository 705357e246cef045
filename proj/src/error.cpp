#include "lgkit/error.hpp"

namespace lgkit {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::parse_error: return "PARSE_ERROR";
        case Errc::domain: return "DOMAIN";
        case Errc::io_error: return "IO_ERROR";
        case Errc::empty_set: return "EMPTY_SET";
        case Errc::empty_table: return "EMPTY_TABLE";
        case Errc::missing_mu: return "MISSING_MU";
        case Errc::negative_entry: return "NEGATIVE_ENTRY";
        case Errc::not_homogeneous: return "NOT_HOMOGENEOUS";
        case Errc::mixed_degree: return "MIXED_DEGREE";
        case Errc::not_symmetric: return "NOT_SYMMETRIC";
        case Errc::odd_exponent: return "ODD_EXPONENT";
        case Errc::half_exponent: return "HALF_EXPONENT";
        case Errc::residual_y: return "RESIDUAL_Y";
        case Errc::not_scalar: return "NOT_SCALAR";
        case Errc::site_out_of_range: return "SITE_OUT_OF_RANGE";
        case Errc::resource_limit: return "RESOURCE_LIMIT";
        case Errc::inverse_verification_failed: return "INVERSE_VERIFICATION_FAILED";
    }
    return "UNKNOWN";
}

bool errc_is_internal(Errc c) {
    switch (c) {
        case Errc::half_exponent:
        case Errc::residual_y:
        case Errc::not_scalar:
        case Errc::inverse_verification_failed:
            return true;
        default:
            return false;
    }
}

} // namespace lgkit
