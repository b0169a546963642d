#pragma once

#include <stdexcept>
#include <string>

namespace k3rm {

// Domain error kinds surfaced through the library API and the CLI (exit 2).
enum class errc {
    bad_degree,
    reducible,
    not_totally_real,
    division_by_zero,
    not_quadratic,
    not_integral,
    degenerate,
    not_even,
    zero_input,
    not_quadratic_field,
    search_exhausted,
    ram_condition_violated,
    split_center,
    not_real_quadratic,
    not_symmetric,
    not_decomposable,
    weight_out_of_range,
    not_k3_type,
    bad_input,
};

inline const char* errc_name(errc k) {
    switch (k) {
    case errc::bad_degree: return "BadDegree";
    case errc::reducible: return "Reducible";
    case errc::not_totally_real: return "NotTotallyReal";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_quadratic: return "NotQuadratic";
    case errc::not_integral: return "NotIntegral";
    case errc::degenerate: return "Degenerate";
    case errc::not_even: return "NotEven";
    case errc::zero_input: return "ZeroInput";
    case errc::not_quadratic_field: return "NotQuadraticField";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::ram_condition_violated: return "RamConditionViolated";
    case errc::split_center: return "SplitCenter";
    case errc::not_real_quadratic: return "NotRealQuadratic";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::not_decomposable: return "NotDecomposable";
    case errc::weight_out_of_range: return "WeightOutOfRange";
    case errc::not_k3_type: return "NotK3Type";
    case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

    errc kind() const noexcept { return kind_; }
    const char* kind_name() const noexcept { return errc_name(kind_); }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

} // namespace k3rm
