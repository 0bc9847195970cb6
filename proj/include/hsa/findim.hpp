#pragma once

#include "hsa/hopf.hpp"
#include "hsa/linalg.hpp"
#include "hsa/presentation.hpp"

#include <string>
#include <vector>

namespace hsa {

// Parity-homogeneous linear form on a FinDimHopf, as a coefficient vector
// against the basis.
struct LinearForm {
    Vec coeffs;
    int parity = 0;
};

// A finite-dimensional Hopf superalgebra given by structure constants on an
// explicit graded basis. Axioms are checked on construction via check().
struct FinDimHopf {
    std::vector<std::string> labels;
    std::vector<int> parity;
    size_t unit = 0;
    bool graded = true; // false after bosonization

    // mult[i][j]: coefficients of e_i * e_j
    std::vector<std::vector<Vec>> mult;
    // delta[i]: matrix D with Delta(e_i) = sum_{j,k} D[j][k] e_j (x) e_k
    std::vector<Mat> delta;
    Vec eps;
    std::vector<Vec> antipode; // S(e_i) as coefficient vector

    size_t dim() const { return labels.size(); }
    int vec_parity(const Vec& v) const; // -1 if inhomogeneous
    Vec mul(const Vec& a, const Vec& b) const;
    Vec apply_antipode(const Vec& a) const;
    Scalar apply_eps(const Vec& a) const;
    Mat coproduct_of(const Vec& a) const;

    void check() const; // throws axiom_check_failed with a description
};

// Build the finite-dimensional quotient from a presentation whose normal
// words of weight <= bound exhaust the algebra (checked for closure).
FinDimHopf findim_from_presentation(const Presentation& p, const HopfData& h, int weight_bound);

// Basis of the space of left integrals (Thm 1 machinery), parity-homogeneous.
std::vector<LinearForm> left_integral_space(const FinDimHopf& H);
bool is_left_integral(const FinDimHopf& H, const Vec& s);

// The unique even group-like a0 with (s (x) id) Delta = a0 * s (Prop 2).
Vec modular_grouplike(const FinDimHopf& H, const LinearForm& s);

// The ordinary Hopf algebra A (x) C Z2 of the bosonization construction.
FinDimHopf bosonize(const FinDimHopf& H);
// s_bar = s (x) t_sigma on the bosonization of H.
Vec bosonized_integral(const FinDimHopf& H, const LinearForm& s);

} // namespace hsa
