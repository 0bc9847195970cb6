#pragma once

#include "hsa/rep.hpp"

#include <map>
#include <string>
#include <vector>

namespace hsa {

// One matrix-element factor t^{(rep)}_{row,col} of a word of matrix elements.
struct MWFactor {
    int rep = 0;
    int row = 0;
    int col = 0;
};
using MatrixWord = std::vector<MWFactor>;

// Multi-index into a tensor-product basis, one byte per slot.
using MIdx = std::basic_string<unsigned char>;
using SparseVec = std::map<MIdx, Scalar>;

// Evaluation context: the algebra, its Hopf data, and the representations
// reachable from matrix words. Caches iterated coproducts of generators.
class EvalContext {
  public:
    EvalContext(const Presentation& p, const HopfData& h, std::vector<const Rep*> reps)
        : p_(&p), h_(&h), reps_(std::move(reps)) {}

    const Presentation& pres() const { return *p_; }
    const HopfData& hopf() const { return *h_; }
    const Rep& rep(int i) const;

    // Sweedler expansion of a generator for the given arity, cached.
    struct SweedlerTerm {
        std::vector<Word> comps;
        Scalar coeff;
    };
    const std::vector<SweedlerTerm>& sweedler(int gen, size_t arity) const;

  private:
    const Presentation* p_;
    const HopfData* h_;
    std::vector<const Rep*> reps_;
    mutable std::map<std::pair<int, size_t>, std::vector<SweedlerTerm>> cache_;
};

// Graded tensor action of x on v, where slot i carries ctx.rep(slots[i]).
SparseVec tensor_apply_gen(const EvalContext& ctx, const std::vector<int>& slots, int gen,
                           const SparseVec& v);
SparseVec tensor_apply(const EvalContext& ctx, const std::vector<int>& slots, const Element& x,
                       const SparseVec& v);
// Row action: w = v^T rho(x), i.e. accumulate rho(x)_{I,.} from covector v.
SparseVec tensor_apply_transpose(const EvalContext& ctx, const std::vector<int>& slots,
                                 const Element& x, const SparseVec& v);

int midx_parity(const EvalContext& ctx, const std::vector<int>& slots, const MIdx& m);

// The static twist relating products of matrix elements to graded tensor-rep
// entries: <w_AB, u> = twist(A,B) * rho(u)_{AB}.
int pairing_twist_sign(const EvalContext& ctx, const MatrixWord& w);

// <t_{a1 b1} ... t_{ak bk}, u> via the tensor representation.
Scalar pair_matrix_word(const EvalContext& ctx, const MatrixWord& w, const Element& u);
// Independent oracle: same value via the symbolic Sweedler expansion of u.
Scalar pair_matrix_word_sweedler(const EvalContext& ctx, const MatrixWord& w, const Element& u);

// Materialized graded tensor-product representation (small dimensions).
Rep tensor_rep(const EvalContext& ctx, const std::vector<int>& slots);

// Dual representation from the antipode, graded-transpose sign pinned by the
// orthogonality identity sum_c tbar_ca t_cb (-1)^(([a]+[c])([b]+1)) = delta_ab,
// verified over all normal words of weight <= 3.
Rep dual_rep(const Rep& r, const Presentation& p, const HopfData& h);

} // namespace hsa
