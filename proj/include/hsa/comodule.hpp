#pragma once

#include "hsa/findim.hpp"

namespace hsa {

// Finite-dimensional graded right comodule over a FinDimHopf:
// omega(v_a) = sum_b v_b (x) t[b][a], with t[b][a] an element of A
// in basis coordinates. check() verifies coassociativity and the counit law.
struct Comodule {
    const FinDimHopf* H = nullptr;
    std::vector<int> parity;
    std::vector<std::vector<Vec>> t;

    size_t dim() const { return parity.size(); }
    void check() const;
};

// A coacting on itself via its coproduct.
Comodule regular_comodule(const FinDimHopf& H);

// Z2-graded vector space as a comodule over the group algebra C Z2
// (basis order of H: unit = g0 first, g1 second).
Comodule z2_comodule(const FinDimHopf& H, const std::vector<int>& parities);

// Dual comodule via the antipode; the structure map is pinned by the
// dual-pairing identity and re-verified before returning.
Comodule dual_comodule(const Comodule& V);

// End(V) = V (x) V* with basis (i,j) at index i*dim+j.
Comodule end_comodule(const Comodule& V);

bool is_coinvariant(const Comodule& C, const Vec& v);

// Phi = (id (x) integral) delta on End(V), applied to the operator P.
Mat phi_map(const Comodule& V, const LinearForm& integral, const Mat& P);

struct MaschkeResult {
    bool split = false;
    Mat phi;                          // the computed Phi(P)
    std::vector<Vec> complement;      // comodule complement basis when split
};

// Lemma 3 / Prop 3 machinery: returns a comodule complement of V1 when the
// integral does not vanish on 1, otherwise a NotSplit result carrying Phi(P).
MaschkeResult maschke_split(const Comodule& V, const std::vector<Vec>& v1_basis,
                            const LinearForm& s);

} // namespace hsa
