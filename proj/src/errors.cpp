#include "syllogist/errors.hpp"

namespace syllogist {

const char* errc_name(errc code) {
    switch (code) {
    case errc::division_by_zero_interval: return "DivisionByZeroInterval";
    case errc::mismatched_alpha_grid: return "MismatchedAlphaGrid";
    case errc::kernel_not_in_support: return "KernelNotInSupport";
    case errc::empty_term: return "EmptyTerm";
    case errc::zero_converse: return "ZeroConverse";
    case errc::inconsistent_premises: return "InconsistentPremises";
    case errc::unsatisfiable_premises: return "UnsatisfiablePremises";
    case errc::undefined_proportion: return "UndefinedProportion";
    case errc::constraint_violated: return "ConstraintViolated";
    case errc::missing_mix_ratio: return "MissingMixRatio";
    case errc::empty_subject: return "EmptySubject";
    case errc::absolute_quantifier: return "AbsoluteQuantifier";
    case errc::unknown_quantifier: return "UnknownQuantifier";
    case errc::malformed_interval: return "MalformedInterval";
    case errc::syntax_error: return "SyntaxError";
    case errc::bad_lexicon: return "BadLexicon";
    case errc::io_error: return "IoError";
    case errc::domain_error: return "DomainError";
    }
    return "Error";
}

} // namespace syllogist
