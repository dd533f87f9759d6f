#pragma once

#include <stdexcept>
#include <string>

namespace syllogist {

enum class errc {
    division_by_zero_interval,
    mismatched_alpha_grid,
    kernel_not_in_support,
    empty_term,
    zero_converse,
    inconsistent_premises,
    unsatisfiable_premises,
    undefined_proportion,
    constraint_violated,
    missing_mix_ratio,
    empty_subject,
    absolute_quantifier,
    unknown_quantifier,
    malformed_interval,
    syntax_error,
    bad_lexicon,
    io_error,
    domain_error,
};

const char* errc_name(errc code);

/// Single exception type for the whole engine; the code distinguishes the
/// error classes named in the module contracts.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace syllogist
