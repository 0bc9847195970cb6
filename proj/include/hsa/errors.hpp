#pragma once

#include <stdexcept>
#include <string>

namespace hsa {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct domain_error : error {
    using error::error;
};

struct pole_error : error {
    using error::error;
};

struct step_budget_exceeded : error {
    step_budget_exceeded() : error("rewrite step budget exceeded") {}
};

struct unsupported_rank : error {
    using error::error;
};

struct not_an_integral : error {
    using error::error;
};

struct grouplike_check_failed : error {
    using error::error;
};

struct axiom_check_failed : error {
    using error::error;
};

struct not_subcomodule : error {
    using error::error;
};

struct duality_check_failed : error {
    using error::error;
};

struct index_out_of_range : error {
    using error::error;
};

struct invariance_not_verified : error {
    using error::error;
};

struct not_completely_reducible : error {
    using error::error;
};

struct normalization_unpinned : error {
    using error::error;
};

struct unknown_suite : error {
    using error::error;
};

struct not_in_k : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

} // namespace hsa
