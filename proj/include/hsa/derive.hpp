#pragma once

#include "hsa/presentation.hpp"

#include <string>
#include <vector>

namespace hsa {

// Builder for quantum-superalgebra presentations on a root-vector generator
// set. Base rules (Cartan moves, e-f relations, odd squares, Serre) are
// entered by the preset; straightening rules for the remaining descending
// generator pairs are derived by expanding composite definitions and reducing
// with the rules established so far, in order of increasing height. Every
// derived rule is therefore a consequence of the defining relations.
class QuantumBuilder {
  public:
    struct GenInfo {
        std::vector<int> wt;   // root-lattice weight in the (eps/delta) basis
        std::vector<int> alpha; // for Cartan generators: the simple root
        int a = -1, b = -1;    // composite: X = c_ab A B + c_ba B A
        Scalar c_ab, c_ba;
        bool is_k = false;
        int k_sign = 1; // +1 for k, -1 for k^{-1}
    };

    explicit QuantumBuilder(std::vector<int> form_diag) : form_(std::move(form_diag)) {}

    Presentation& pres() { return p_; }
    const Presentation& pres() const { return p_; }
    const GenInfo& info(int g) const { return info_[(size_t)g]; }

    int add_root_gen(const std::string& name, int parity, std::vector<int> wt);
    // a Cartan pair k, k^{-1} attached to the simple root alpha; returns (k, ki)
    std::pair<int, int> add_k_pair(const std::string& name, std::vector<int> alpha);
    // record X = c_ab A B + c_ba B A for an already-declared generator and add
    // the defining rule (generators are declared in rank order first)
    void set_composite(int g, int a, int b, Scalar c_ab, Scalar c_ba);

    int inner(const std::vector<int>& u, const std::vector<int>& v) const;

    // k-sorting, k k^{-1} -> 1 and k X k^{-1} = var^(alpha, wt X) X moves
    void add_cartan_rules();

    // derive straightening rules for all remaining descending pairs;
    // returns the list of pairs left unresolved (empty unless allow_partial)
    std::vector<std::string> derive_remaining(bool allow_partial);

    Element def_element(int g) const; // c_ab A B + c_ba B A

  private:
    Presentation p_;
    std::vector<GenInfo> info_;
    std::vector<int> form_;

    bool has_pair_rule(int x, int y) const;
    int height(int g) const;
};

} // namespace hsa
