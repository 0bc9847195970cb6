#include "hsa/presentation.hpp"

#include "hsa/errors.hpp"

#include <algorithm>
#include <cctype>

namespace hsa {

int Presentation::add_generator(std::string name, int parity, int weight) {
    if (gens_.size() >= 250) throw domain_error("too many generators");
    if (gen_by_name(name) >= 0) throw domain_error("duplicate generator name: " + name);
    gens_.push_back(Generator{std::move(name), parity & 1, weight});
    rules_by_first_.resize(gens_.size());
    return (int)gens_.size() - 1;
}

int Presentation::gen_by_name(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return (int)i;
    return -1;
}

int Presentation::word_weight(const Word& w) const {
    int s = 0;
    for (unsigned char g : w) s += gens_[g].weight;
    return s;
}

int Presentation::word_parity(const Word& w) const {
    int s = 0;
    for (unsigned char g : w) s += gens_[g].parity;
    return s & 1;
}

bool Presentation::word_less(const Word& a, const Word& b) const {
    int wa = word_weight(a), wb = word_weight(b);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

int Presentation::element_parity(const Element& e) const {
    int p = -2;
    for (const auto& [w, c] : e.terms()) {
        int wp = word_parity(w);
        if (p == -2)
            p = wp;
        else if (p != wp)
            return -1;
    }
    return p == -2 ? 0 : p;
}

void Presentation::add_rule(Word lhs, Element rhs) {
    if (lhs.empty()) throw domain_error("empty rule lhs");
    int lp = word_parity(lhs);
    for (const auto& [w, c] : rhs.terms()) {
        (void)c;
        if (!word_less(w, lhs))
            throw domain_error("rule does not decrease the monomial order: " + word_str(lhs) +
                               " -> " + word_str(w));
        if (word_parity(w) != lp)
            throw domain_error("parity-inhomogeneous rule: " + word_str(lhs));
    }
    rules_by_first_[lhs[0]].push_back(rules_.size());
    rules_.push_back(Rule{std::move(lhs), std::move(rhs)});
    // keep longest lhs first for deterministic longest-match
    auto& bucket = rules_by_first_[rules_.back().lhs[0]];
    std::stable_sort(bucket.begin(), bucket.end(), [&](size_t x, size_t y) {
        return rules_[x].lhs.size() > rules_[y].lhs.size();
    });
}

std::optional<std::pair<size_t, size_t>> Presentation::find_redex(const Word& w) const {
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t ri : rules_by_first_[w[i]]) {
            const Word& lhs = rules_[ri].lhs;
            if (lhs.size() <= w.size() - i && w.compare(i, lhs.size(), lhs) == 0)
                return std::make_pair(i, ri);
        }
    }
    return std::nullopt;
}

namespace {
struct OrderGreater {
    const Presentation* p;
    bool operator()(const Word& a, const Word& b) const { return p->word_less(b, a); }
};
} // namespace

Element Presentation::normal_form(const Element& x, uint64_t max_steps) const {
    std::map<Word, Scalar, OrderGreater> agenda{OrderGreater{this}};
    for (const auto& [w, c] : x.terms()) agenda.emplace(w, c);
    Element result;
    uint64_t steps = 0;
    while (!agenda.empty()) {
        auto it = agenda.begin(); // highest word first
        Word w = it->first;
        Scalar c = std::move(it->second);
        agenda.erase(it);
        if (c.is_zero()) continue;
        auto redex = find_redex(w);
        if (!redex) {
            result.add_term(w, c);
            continue;
        }
        if (++steps > max_steps) throw step_budget_exceeded();
        auto [pos, ri] = *redex;
        const Rule& rule = rules_[ri];
        Word prefix = w.substr(0, pos);
        Word suffix = w.substr(pos + rule.lhs.size());
        for (const auto& [rw, rc] : rule.rhs.terms()) {
            Word nw = prefix + rw + suffix;
            Scalar nc = c * rc;
            auto [jt, inserted] = agenda.emplace(std::move(nw), nc);
            if (!inserted) {
                jt->second += nc;
                if (jt->second.is_zero()) agenda.erase(jt);
            }
        }
    }
    return result;
}

std::vector<CriticalPair> Presentation::check_local_confluence(int weight_bound,
                                                               uint64_t max_steps) const {
    std::vector<CriticalPair> bad;
    auto one_step = [&](const Word& w, size_t pos, size_t ri) {
        const Rule& rule = rules_[ri];
        Element out;
        Word prefix = w.substr(0, pos);
        Word suffix = w.substr(pos + rule.lhs.size());
        for (const auto& [rw, rc] : rule.rhs.terms()) out.add_term(prefix + rw + suffix, rc);
        return out;
    };
    for (size_t a = 0; a < rules_.size(); ++a) {
        const Word& A = rules_[a].lhs;
        for (size_t b = 0; b < rules_.size(); ++b) {
            const Word& B = rules_[b].lhs;
            // straddling overlap: suffix of A = prefix of B
            for (size_t s = 1; s < A.size(); ++s) {
                size_t ov = A.size() - s;
                if (ov >= B.size()) continue; // containment handled below
                if (A.compare(s, ov, B, 0, ov) != 0) continue;
                Word w = A + B.substr(ov);
                if (word_weight(w) > weight_bound) continue;
                Element left = normal_form(one_step(w, 0, a), max_steps);
                Element right = normal_form(one_step(w, s, b), max_steps);
                if (left != right) bad.push_back(CriticalPair{w, left, right, a, b});
            }
            // containment: B inside A
            if (B.size() <= A.size()) {
                for (size_t s = 0; s + B.size() <= A.size(); ++s) {
                    if (a == b && s == 0 && B.size() == A.size()) continue;
                    if (A.compare(s, B.size(), B) != 0) continue;
                    if (word_weight(A) > weight_bound) continue;
                    Element left = normal_form(one_step(A, 0, a), max_steps);
                    Element right = normal_form(one_step(A, s, b), max_steps);
                    if (left != right) bad.push_back(CriticalPair{A, left, right, a, b});
                }
            }
        }
    }
    return bad;
}

bool Presentation::in_left_ideal_J(const Element& x, const std::vector<bool>& is_tail,
                                   const std::vector<Scalar>& gen_eps,
                                   uint64_t max_steps) const {
    Element nf = normal_form(x, max_steps);
    // group normal monomials by their non-tail prefix; the tail suffix
    // contributes its counit value. x is in J iff every group sums to zero.
    std::map<Word, Scalar> groups;
    for (const auto& [w, c] : nf.terms()) {
        size_t split = w.size();
        for (size_t i = 0; i < w.size(); ++i) {
            if (is_tail[w[i]]) {
                split = i;
                break;
            }
        }
        for (size_t i = split; i < w.size(); ++i)
            if (!is_tail[w[i]])
                throw domain_error("normal word does not factor as (head)(tail): " + word_str(w));
        Scalar eps(1);
        for (size_t i = split; i < w.size(); ++i) {
            eps *= gen_eps[w[i]];
            if (eps.is_zero()) break;
        }
        if (eps.is_zero()) continue;
        Word key = w.substr(0, split);
        auto [it, inserted] = groups.emplace(std::move(key), c * eps);
        if (!inserted) it->second += c * eps;
    }
    for (const auto& [k, v] : groups) {
        (void)k;
        if (!v.is_zero()) return false;
    }
    return true;
}

std::vector<Word> Presentation::normal_words_up_to(int weight_bound) const {
    std::vector<Word> out{Word()};
    std::vector<Word> frontier{Word()};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (size_t g = 0; g < gens_.size(); ++g) {
                Word cand = w + Word(1, (unsigned char)g);
                if (word_weight(cand) > weight_bound) continue;
                if (gens_[g].weight == 0) {
                    // group-like letters contribute nothing new beyond low
                    // degree; cap them so the spanning set stays finite
                    int zeros = 0;
                    for (unsigned char c : cand) zeros += gens_[c].weight == 0;
                    if (zeros > 2) continue;
                }
                if (!is_normal(cand)) continue;
                out.push_back(cand);
                next.push_back(std::move(cand));
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return word_less(a, b); });
    return out;
}

std::string Presentation::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += gens_[w[i]].name;
    }
    return out;
}

namespace {
bool coeff_needs_parens(const std::string& s) {
    // bare integers and simple monomials like 3*q^-2 stay unparenthesized
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == ' ' || c == '+' || c == '/') return true;
        if (c == '-' && i > 0 && s[i - 1] != '^') return true;
    }
    return false;
}
} // namespace

std::string Presentation::element_str(const Element& e) const {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : e.terms()) {
        Scalar coeff = c;
        std::string sep;
        bool neg = false;
        if (!out.empty()) {
            // pull a leading minus out of purely negative coefficients
            std::string cs = coeff.to_string();
            if (cs.size() > 1 && cs[0] == '-' && !coeff_needs_parens(cs.substr(1))) {
                neg = true;
                coeff = -coeff;
            }
            sep = neg ? " - " : " + ";
        } else {
            std::string cs = coeff.to_string();
            if (cs.size() > 1 && cs[0] == '-' && !coeff_needs_parens(cs.substr(1))) {
                sep = "-";
                coeff = -coeff;
            }
        }
        out += sep;
        std::string cs = coeff.to_string();
        if (w.empty()) {
            out += coeff_needs_parens(cs) ? "(" + cs + ")" : cs;
        } else {
            if (!coeff.is_one()) {
                out += coeff_needs_parens(cs) ? "(" + cs + ")*" : cs + "*";
            }
            out += word_str(w);
        }
    }
    return out;
}

namespace {

struct ElementParser {
    const Presentation& p;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    // reads identifier possibly followed by a balanced (...) argument list
    std::string read_atom_name() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (pos == start) throw parse_error("expected name at '" + s.substr(pos, 8) + "'");
        std::string name = s.substr(start, pos - start);
        if (pos < s.size() && s[pos] == '(') {
            size_t depth = 0, begin = pos;
            while (pos < s.size()) {
                if (s[pos] == '(') ++depth;
                if (s[pos] == ')') {
                    --depth;
                    if (depth == 0) {
                        ++pos;
                        break;
                    }
                }
                ++pos;
            }
            if (depth != 0) throw parse_error("unbalanced parentheses in '" + name + "'");
            name += s.substr(begin, pos - begin);
        }
        return name;
    }

    int parse_nat() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw parse_error("expected number");
        return (int)std::stol(s.substr(start, pos - start));
    }

    // factor := (scalar) | number[/number] | q[^e] | GEN[^n]
    void parse_factor(Scalar& coeff, Word& word) {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of element");
        char c = s[pos];
        if (c == '(') {
            size_t depth = 0, begin = pos;
            while (pos < s.size()) {
                if (s[pos] == '(') ++depth;
                if (s[pos] == ')') {
                    --depth;
                    if (depth == 0) {
                        ++pos;
                        break;
                    }
                }
                ++pos;
            }
            if (depth != 0) throw parse_error("unbalanced parentheses in scalar");
            std::string inner = s.substr(begin + 1, pos - begin - 2);
            Scalar v = Scalar::from_string(inner);
            if (eat('^')) {
                bool neg = eat('-');
                int e = parse_nat();
                v = v.pow(neg ? -e : e);
            }
            coeff *= v;
            return;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            BigInt n = BigInt::from_string(s.substr(start, pos - start));
            skip_ws();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                skip_ws();
                size_t ds = pos;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
                if (ds == pos) throw parse_error("expected denominator");
                coeff *= Scalar(Rational(n, BigInt::from_string(s.substr(ds, pos - ds))));
            } else {
                coeff *= Scalar(Rational(n));
            }
            return;
        }
        std::string name = read_atom_name();
        int rep = 1;
        if (eat('^')) {
            bool neg = eat('-');
            rep = parse_nat();
            if (name == "q") {
                coeff *= Scalar::q(neg ? -rep : rep);
                return;
            }
            if (neg) throw parse_error("negative power of generator " + name);
        } else if (name == "q") {
            coeff *= Scalar::q(1);
            return;
        }
        int g = p.gen_by_name(name);
        if (g < 0) throw parse_error("unknown generator '" + name + "'");
        for (int i = 0; i < rep; ++i) word.push_back((unsigned char)g);
    }

    Element parse() {
        Element acc;
        for (;;) {
            skip_ws();
            bool neg = false;
            if (eat('-'))
                neg = true;
            else
                eat('+');
            Scalar coeff(neg ? -1 : 1);
            Word word;
            parse_factor(coeff, word);
            while (eat('*')) parse_factor(coeff, word);
            acc.add_term(word, coeff);
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] != '+' && s[pos] != '-')
                throw parse_error("expected '+' or '-' at '" + s.substr(pos, 8) + "'");
        }
        return acc;
    }
};

} // namespace

Element Presentation::parse_element(const std::string& text) const {
    ElementParser parser{*this, text};
    return parser.parse();
}

} // namespace hsa
