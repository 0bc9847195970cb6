#pragma once

#include "hsa/presets.hpp"

namespace hsa {

struct InvarianceReport {
    bool ok = true;
    std::string witness; // violating generator and residue, or "z in J"
};

// Thm 3 precondition: x(z+J) = eps(x) z + J for every generator, and z not in J.
InvarianceReport invariance_check(const Element& z, const SupergroupPreset& P,
                                  uint64_t max_steps = Presentation::kDefaultMaxSteps);

// The invariant-integration data: preset + invariant z (+ cached projectors).
class IntegralSpec {
  public:
    explicit IntegralSpec(const SupergroupPreset& preset, Element z, bool check = true);
    static IntegralSpec for_gamma(const SupergroupPreset& preset, bool check = true);

    const SupergroupPreset& preset() const { return *preset_; }
    const Element& z() const { return z_; }

    // <∫, w_IJ> = sum_K sigma(I,K,J) rho(z)_IK Pi0_KJ
    Scalar eval(const MatrixWord& w);
    Scalar eval(const std::string& word_text);

    // (id (x) ∫)Delta = 1 ∫ and its mirror, evaluated against all matrix
    // words of length <= L and normal words of degree <= d; exact.
    bool left_invariance_test(int L, int d);
    bool right_invariance_test(int L, int d);

  private:
    const SupergroupPreset* preset_;
    EvalContext ctx_;
    Element z_;
    std::map<std::vector<int>, Mat> projector_cache_;

    const Mat& projector(const std::vector<int>& slots);
    Scalar eval_with(const std::vector<int>& slots, const MIdx& I, const MIdx& J);
    friend struct HaarTestAccess;
};

// Direct construction of the invariants projector of the tail action on the
// tensor representation with the given slots: W = Inv ⊕ span{(rho(X)-eps(X))w}.
Mat invariants_projector(const SupergroupPreset& P, const std::vector<int>& slots);

// Krylov column Pi0 e_J via the preset's invariant Laplacian (classical tails).
SparseVec projector_column_krylov(const SupergroupPreset& P, const std::vector<int>& slots,
                                  const MIdx& J);

// Joint tail invariants of the tensor representation (used by RepBound
// certificates); exact nullspace over the Scalar field.
std::vector<Vec> tail_invariant_vectors(const SupergroupPreset& P,
                                        const std::vector<int>& slots);

// The induced module U/J on the classes of tail-free normal words (for
// classical presets this realizes W = U/(U g0) on the Grassmann basis).
Rep quotient_module_rep(const SupergroupPreset& P);

struct JCertificate {
    bool exact = false; // true: decided by rewriting; false: representation evidence
    bool pass = false;
    int bound = 0; // r+s bound in RepBound mode
};

// Exact mode when the preset ships a confluent rule set (exact_ok), else the
// necessary condition x v = 0 on all tail invariants of t^r (x) tbar^s.
JCertificate j_membership_certificate(const Element& x, const SupergroupPreset& P,
                                      bool exact_ok, int rep_bound = 3);

// The Koszul sign bundle sigma(I,K,J) combining the coproduct factor signs
// with the pairing twists of both halves (pinned by left_invariance_test).
int integral_sigma(const EvalContext& ctx, const std::vector<int>& slots, const MIdx& I,
                   const MIdx& K, const MIdx& J);

} // namespace hsa
