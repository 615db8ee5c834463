#pragma once

#include <stdexcept>
#include <string>

namespace coxcomb {

enum class errc {
    division_by_zero,
    mixed_field_context,
    parse_error,
    malformed_complex,
    dimension_mismatch,
    unknown_face,
    bad_parameters,
    empty_region,
    not_complete,
    no_positive_combination,
    unbounded_component,
    unbounded_root_polyhedron,
    root_is_geometric,
    rays_do_not_span,
    not_rational,
    odd_kernel,
    not_isomorphic_projection,
    quotient_not_complete,
    invalid_complex_structure,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::mixed_field_context: return "MixedFieldContext";
    case errc::parse_error: return "ParseError";
    case errc::malformed_complex: return "MalformedComplex";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::unknown_face: return "UnknownFace";
    case errc::bad_parameters: return "BadParameters";
    case errc::empty_region: return "EmptyRegion";
    case errc::not_complete: return "NotComplete";
    case errc::no_positive_combination: return "NoPositiveCombination";
    case errc::unbounded_component: return "UnboundedComponent";
    case errc::unbounded_root_polyhedron: return "UnboundedRootPolyhedron";
    case errc::root_is_geometric: return "RootIsGeometric";
    case errc::rays_do_not_span: return "RaysDoNotSpan";
    case errc::not_rational: return "NotRational";
    case errc::odd_kernel: return "OddKernel";
    case errc::not_isomorphic_projection: return "NotIsomorphicProjection";
    case errc::quotient_not_complete: return "QuotientNotComplete";
    case errc::invalid_complex_structure: return "InvalidComplexStructure";
    case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

/// Library exception carrying a stable error code alongside the message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace coxcomb
