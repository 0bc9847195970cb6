#pragma once

#include "hsa/findim.hpp"
#include "hsa/pairing.hpp"

#include <map>
#include <memory>
#include <string>

namespace hsa {

// One of the paper's algebras, fully equipped: presentation + Hopf structure,
// the even-tail data defining J, the invariant candidate, representations and
// the named matrix-element words used by the integral pipeline.
struct SupergroupPreset {
    std::string name;
    Presentation pres;
    HopfData hopf;
    std::vector<bool> is_tail;   // per generator
    std::vector<Scalar> gen_eps; // counit per generator (for the J test)
    Element gamma;               // the invariant z (Gamma, 1+ef, z_o, ...)
    bool quantum = false;
    bool half_power_q = false;   // scalars use s = q^(1/2) internally

    std::vector<Rep> reps;
    struct TagSpec {
        int rep = 0;
        int mode = 0; // 0: T(row,col); 1: theta-style single index into the regular rep
    };
    std::map<std::string, TagSpec> tags;
    std::vector<int> theta_row; // mode-1 lookup: generator -> regular-rep row
    int unit_row = 0;
    std::map<int, int> index_of; // user-facing index -> 0-based matrix row

    std::map<std::string, MatrixWord> named_words;
    std::map<std::string, Element> named_elements; // Casimir pieces and such
    std::vector<MWFactor> word_letters; // alphabet for the invariance tests

    // classical tails: element of U acting semisimply with kernel = invariants
    Element laplacian;
    bool has_laplacian = false;

    EvalContext context() const;
    MatrixWord parse_matrix_word(const std::string& text) const;
    std::string matrix_word_str(const MatrixWord& w) const;
    Scalar eps_of(const Element& x) const;
};

// --- helpers shared by the preset constructors ---

// Generate straightening rules for an enveloping algebra from a faithful
// matrix realization of the Lie superalgebra basis (brackets are computed in
// the realization and expanded back over the basis).
void classical_rules_from_matrices(Presentation& p, const std::vector<Mat>& mats,
                                   const std::vector<int>& parities);

// primitive coproducts, eps = 0, S = -x on every generator
HopfData classical_hopf(const Presentation& p);

// --- the paper's presets ---

SupergroupPreset grassmann_preset(int n);      // Example 1 (with the regular rep)
FinDimHopf grassmann_dual_hopf(int n);         // the dual as a FinDimHopf
FinDimHopf group_z2_hopf();                    // C Z2 fixture

SupergroupPreset u_sl(int m, int n);           // Example 2, mn <= 4
SupergroupPreset u_osp12();                    // Example 4 (n = 1)
SupergroupPreset u_osp32();                    // Example 5

SupergroupPreset uq_sl(int m, int n);          // Example 6, mn <= 4
SupergroupPreset uq_osp(int n);                // Example 7, n in {1, 2}
SupergroupPreset u_osp2_2n(int n);             // Example 3 as the q -> 1 limit

// osp(3|2) extras (Example 5)
struct Osp32Data {
    Element casimir;   // normalized quadratic Casimir
    Element casimir_odd;
    Element z_full;    // C(C-2)(C+6)
    // z_o = C_o(C_o-2)(C_o+6) is the preset's gamma
};
const Osp32Data& osp32_data(const SupergroupPreset& p);

// preset registry for the CLI: berezin(n), sl(m|n), slq(m|n), osp12, osp32,
// ospq(n), osp22(n)
std::unique_ptr<SupergroupPreset> make_preset(const std::string& name);
std::vector<std::string> preset_catalog();

} // namespace hsa
