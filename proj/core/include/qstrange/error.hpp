#pragma once

#include <stdexcept>
#include <string>

namespace qstrange {

enum class Errc {
    not_a_unit,
    out_of_range,
    divergent_product,
    bad_specialization,
    bad_params,
    bad_rel_param,
    precondition_violated,
    integrality_violation,
    denominator_vanishes,
    singular_expansion,
    division_by_zero,
    unknown_identity,
    catalog_parse_error,
    usage_error,
    internal_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace qstrange
