#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

enum class errc {
    parse_error,
    field_mismatch,
    non_unit_leading,
    division_by_zero,
    zero_denominator,
    constant_modulus,
    bad_constant_term,
    precondition_failed,
    not_a_divisor,
    not_integer,
    dimension_mismatch,
    isolation_failure,
    zero_input,
    unsupported,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace dioph
