#pragma once

#include "hsa/element.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hsa {

struct Generator {
    std::string name;
    int parity = 0; // 0 even, 1 odd
    int weight = 1; // ordering weight; 0 for group-like k generators
};

struct Rule {
    Word lhs;
    Element rhs;
};

struct CriticalPair {
    Word word;      // the overlap ambiguity
    Element left;   // normal form via the first rule
    Element right;  // normal form via the second rule
    size_t rule_a = 0, rule_b = 0;
};

// A graded algebra presentation: generators with parities and ranks plus
// oriented rewrite rules. The monomial order is (total weight, length,
// rank-lexicographic); every rule must strictly decrease it.
class Presentation {
  public:
    static constexpr uint64_t kDefaultMaxSteps = 10'000'000;

    int add_generator(std::string name, int parity, int weight = 1);
    void add_rule(Word lhs, Element rhs); // validates orientation and parity homogeneity

    size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& gen(int id) const { return gens_[(size_t)id]; }
    int gen_by_name(const std::string& name) const; // -1 when absent
    const std::vector<Rule>& rules() const { return rules_; }

    int word_weight(const Word& w) const;
    int word_parity(const Word& w) const;
    bool word_less(const Word& a, const Word& b) const;
    // -1 for inhomogeneous, else the common parity
    int element_parity(const Element& e) const;

    Element normal_form(const Element& x, uint64_t max_steps = kDefaultMaxSteps) const;
    bool is_normal(const Word& w) const { return !find_redex(w).has_value(); }

    std::vector<CriticalPair> check_local_confluence(int weight_bound,
                                                     uint64_t max_steps = kDefaultMaxSteps) const;

    // Left-ideal membership for J = U * span(tail subalgebra's counit kernel).
    // Requires tail generators to sit above all non-tail generators in rank.
    // gen_eps supplies the counit of each generator (zero where unset).
    bool in_left_ideal_J(const Element& x, const std::vector<bool>& is_tail,
                         const std::vector<Scalar>& gen_eps,
                         uint64_t max_steps = kDefaultMaxSteps) const;

    // All normal words of weight <= bound, in increasing monomial order.
    std::vector<Word> normal_words_up_to(int weight_bound) const;

    std::string word_str(const Word& w) const;
    std::string element_str(const Element& e) const;
    Element parse_element(const std::string& text) const;

  private:
    std::vector<Generator> gens_;
    std::vector<Rule> rules_;
    std::vector<std::vector<size_t>> rules_by_first_; // indexed by first generator of lhs

    std::optional<std::pair<size_t, size_t>> find_redex(const Word& w) const; // (pos, rule)
};

} // namespace hsa
