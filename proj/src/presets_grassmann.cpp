#include "hsa/errors.hpp"
#include "hsa/presets.hpp"

#include <cctype>

namespace hsa {

EvalContext SupergroupPreset::context() const {
    std::vector<const Rep*> ptrs;
    for (const Rep& r : reps) ptrs.push_back(&r);
    return EvalContext(pres, hopf, std::move(ptrs));
}

Scalar SupergroupPreset::eps_of(const Element& x) const { return counit(x, pres, hopf); }

namespace {

std::vector<int> parse_int_args(const std::string& s, size_t& pos) {
    std::vector<int> args;
    if (pos >= s.size() || s[pos] != '(') throw parse_error("expected '(' in matrix word");
    ++pos;
    while (pos < s.size() && s[pos] != ')') {
        size_t start = pos;
        if (s[pos] == '-' || s[pos] == '+') ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw parse_error("expected index in matrix word");
        args.push_back((int)std::stol(s.substr(start, pos - start)));
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    if (pos >= s.size()) throw parse_error("unbalanced '(' in matrix word");
    ++pos;
    return args;
}

} // namespace

MatrixWord SupergroupPreset::parse_matrix_word(const std::string& text) const {
    MatrixWord out;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace((unsigned char)text[pos]) || text[pos] == '*'))
            ++pos;
    };
    skip();
    while (pos < text.size()) {
        size_t start = pos;
        while (pos < text.size() && (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            ++pos;
        std::string tag = text.substr(start, pos - start);
        auto it = tags.find(tag);
        if (it == tags.end()) throw parse_error("unknown matrix-element tag '" + tag + "'");
        std::vector<int> args = parse_int_args(text, pos);
        const TagSpec& spec = it->second;
        const Rep& r = reps[(size_t)spec.rep];
        if (spec.mode == 1) {
            if (args.size() != 1) throw parse_error(tag + " expects one index");
            int g = args[0] - 1;
            if (g < 0 || (size_t)g >= theta_row.size())
                throw index_out_of_range("no such generator index in " + tag);
            out.push_back(MWFactor{spec.rep, theta_row[(size_t)g], unit_row});
        } else {
            if (args.size() != 2) throw parse_error(tag + " expects two indices");
            auto resolve = [&](int user) {
                auto f = index_of.find(user);
                if (f == index_of.end()) throw index_out_of_range("bad index in " + tag);
                return f->second;
            };
            int row = resolve(args[0]), col = resolve(args[1]);
            if ((size_t)row >= r.dim || (size_t)col >= r.dim)
                throw index_out_of_range("index out of range in " + tag);
            out.push_back(MWFactor{spec.rep, row, col});
        }
        skip();
    }
    return out;
}

std::string SupergroupPreset::matrix_word_str(const MatrixWord& w) const {
    std::string out;
    for (const auto& f : w) {
        std::string tag = "?";
        for (const auto& [name, spec] : tags)
            if (spec.rep == f.rep && spec.mode == 0) tag = name;
        bool theta = false;
        for (const auto& [name, spec] : tags)
            if (spec.rep == f.rep && spec.mode == 1 && f.col == unit_row) {
                for (size_t g = 0; g < theta_row.size(); ++g)
                    if (theta_row[g] == f.row) {
                        if (!out.empty()) out += "*";
                        out += name + "(" + std::to_string(g + 1) + ")";
                        theta = true;
                    }
            }
        if (theta) continue;
        int ru = f.row, cu = f.col;
        for (const auto& [user, idx] : index_of) {
            if (idx == f.row) ru = user;
            if (idx == f.col) cu = user;
        }
        if (!out.empty()) out += "*";
        out += tag + "(" + std::to_string(ru) + "," + std::to_string(cu) + ")";
    }
    return out.empty() ? "1" : out;
}

void classical_rules_from_matrices(Presentation& p, const std::vector<Mat>& mats,
                                   const std::vector<int>& parities) {
    size_t n = mats.size();
    size_t d = mats[0].rows();
    // coordinate solver: columns are the vectorized basis matrices
    Mat basis(d * d, n);
    for (size_t g = 0; g < n; ++g)
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) basis.at(i * d + j, g) = mats[g].at(i, j);
    auto coords = [&](const Mat& m) {
        Vec b(d * d, Scalar(0));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) b[i * d + j] = m.at(i, j);
        auto x = solve(basis, b);
        if (!x) throw domain_error("bracket leaves the span of the basis");
        return *x;
    };
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y <= x; ++y) {
            int px = parities[x], py = parities[y];
            if (x == y) {
                if (px == 0) continue; // even squares are normal monomials
                // [X,X] = 2 X^2
                Mat sq = mats[x] * mats[x];
                Vec c = coords(sq);
                Element rhs;
                for (size_t g = 0; g < n; ++g)
                    if (!c[g].is_zero()) rhs += Element::generator((int)g) * c[g];
                p.add_rule(word_of({(int)x, (int)x}), rhs);
                continue;
            }
            // X Y -> (-1)^(px py) Y X + [X, Y]
            Mat br = mats[x] * mats[y] - ((px & py & 1) ? mats[y] * mats[x] * Scalar(-1)
                                                        : mats[y] * mats[x]);
            Vec c = coords(br);
            Element rhs = Element::from_word(word_of({(int)y, (int)x}),
                                             (px & py & 1) ? Scalar(-1) : Scalar(1));
            for (size_t g = 0; g < n; ++g)
                if (!c[g].is_zero()) rhs += Element::generator((int)g) * c[g];
            p.add_rule(word_of({(int)x, (int)y}), rhs);
        }
}

HopfData classical_hopf(const Presentation& p) {
    HopfData h;
    for (int g = 0; g < (int)p.size(); ++g)
        h.set(g, HopfData::primitive(g), Scalar(0), Element::generator(g) * Scalar(-1));
    return h;
}

SupergroupPreset grassmann_preset(int n) {
    if (n < 1 || n > 6) throw unsupported_rank("grassmann(n) shipped for 1 <= n <= 6");
    SupergroupPreset P;
    P.name = "berezin(" + std::to_string(n) + ")";
    for (int i = 1; i <= n; ++i) P.pres.add_generator("xi(" + std::to_string(i) + ")", 1);
    for (int i = 0; i < n; ++i) {
        P.pres.add_rule(word_of({i, i}), Element());
        for (int j = i + 1; j < n; ++j)
            P.pres.add_rule(word_of({j, i}), Element::from_word(word_of({i, j}), Scalar(-1)));
    }
    P.hopf = classical_hopf(P.pres);
    P.is_tail.assign(P.pres.size(), false);
    P.gen_eps.assign(P.pres.size(), Scalar(0));
    // z = (-1)^(n(n-1)/2) xi_1 ... xi_n
    Word top;
    for (int i = 0; i < n; ++i) top.push_back((unsigned char)i);
    P.gamma = Element::from_word(top, (n * (n - 1) / 2) % 2 ? Scalar(-1) : Scalar(1));

    // left regular representation on the 2^n normal words
    std::vector<Word> basis = P.pres.normal_words_up_to(n);
    std::map<Word, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = (int)i;
    Rep reg;
    reg.dim = basis.size();
    reg.parity.resize(reg.dim);
    reg.basis_labels.resize(reg.dim);
    for (size_t i = 0; i < reg.dim; ++i) {
        reg.parity[i] = P.pres.word_parity(basis[i]);
        reg.basis_labels[i] = P.pres.word_str(basis[i]);
    }
    reg.mats.assign(P.pres.size(), SparseMat(reg.dim));
    for (size_t g = 0; g < P.pres.size(); ++g) {
        SparseMat m(reg.dim);
        for (size_t b = 0; b < basis.size(); ++b) {
            Element img = P.pres.normal_form(Element::generator((int)g) *
                                             Element::from_word(basis[b]));
            for (const auto& [w, c] : img.terms()) m.add(index.at(w), (int)b, c);
        }
        reg.mats[g] = std::move(m);
    }
    P.reps.push_back(std::move(reg));
    P.tags["th"] = SupergroupPreset::TagSpec{0, 1};
    P.theta_row.resize(n);
    for (int g = 0; g < n; ++g) P.theta_row[(size_t)g] = index.at(Word(1, (unsigned char)g));
    P.unit_row = index.at(Word());
    for (int g = 1; g <= n; ++g)
        P.word_letters.push_back(MWFactor{0, P.theta_row[(size_t)g - 1], P.unit_row});
    MatrixWord topw;
    for (int g = 1; g <= n; ++g)
        topw.push_back(MWFactor{0, P.theta_row[(size_t)g - 1], P.unit_row});
    P.named_words["top"] = topw;
    return P;
}

FinDimHopf grassmann_dual_hopf(int n) {
    Presentation p;
    for (int i = 1; i <= n; ++i) p.add_generator("th(" + std::to_string(i) + ")", 1);
    for (int i = 0; i < n; ++i) {
        p.add_rule(word_of({i, i}), Element());
        for (int j = i + 1; j < n; ++j)
            p.add_rule(word_of({j, i}), Element::from_word(word_of({i, j}), Scalar(-1)));
    }
    HopfData h = classical_hopf(p);
    return findim_from_presentation(p, h, n);
}

FinDimHopf group_z2_hopf() {
    Presentation p;
    int g = p.add_generator("g", 0);
    p.add_rule(word_of({g, g}), Element::unit());
    HopfData h;
    h.set(g, HopfData::grouplike(g), Scalar(1), Element::generator(g));
    return findim_from_presentation(p, h, 1);
}

namespace {

bool parse_rank2(const std::string& s, const std::string& head, int& m, int& n) {
    // head(m|n)
    if (s.size() < head.size() + 5 || s.compare(0, head.size(), head) != 0) return false;
    size_t pos = head.size();
    if (s[pos] != '(') return false;
    size_t bar = s.find('|', pos);
    size_t close = s.find(')', pos);
    if (bar == std::string::npos || close == std::string::npos || bar > close) return false;
    try {
        m = std::stoi(s.substr(pos + 1, bar - pos - 1));
        n = std::stoi(s.substr(bar + 1, close - bar - 1));
    } catch (...) {
        return false;
    }
    return true;
}

bool parse_rank1(const std::string& s, const std::string& head, int& n) {
    if (s.size() < head.size() + 3 || s.compare(0, head.size(), head) != 0) return false;
    size_t pos = head.size();
    if (s[pos] != '(') return false;
    size_t close = s.find(')', pos);
    if (close == std::string::npos) return false;
    try {
        n = std::stoi(s.substr(pos + 1, close - pos - 1));
    } catch (...) {
        return false;
    }
    return true;
}

} // namespace

std::unique_ptr<SupergroupPreset> make_preset(const std::string& name) {
    int m = 0, n = 0;
    if (parse_rank1(name, "berezin", n) || parse_rank1(name, "grassmann", n))
        return std::make_unique<SupergroupPreset>(grassmann_preset(n));
    if (parse_rank2(name, "slq", m, n)) return std::make_unique<SupergroupPreset>(uq_sl(m, n));
    if (parse_rank2(name, "sl", m, n)) return std::make_unique<SupergroupPreset>(u_sl(m, n));
    if (name == "osp12") return std::make_unique<SupergroupPreset>(u_osp12());
    if (name == "osp32") return std::make_unique<SupergroupPreset>(u_osp32());
    if (parse_rank1(name, "ospq", n)) return std::make_unique<SupergroupPreset>(uq_osp(n));
    if (parse_rank1(name, "osp22", n)) return std::make_unique<SupergroupPreset>(u_osp2_2n(n));
    throw unsupported_rank("unknown preset '" + name + "'");
}

std::vector<std::string> preset_catalog() {
    return {"berezin(n), n = 1..6   [Grassmann algebra, Berezin integral]",
            "sl(m|n), mn <= 4       [classical SL(m|n); words in T(a,b), Tb(a,b)]",
            "slq(m|n), mn <= 4      [quantum SL_q(m|n)]",
            "osp12                  [classical OSP(1|2)]",
            "osp32                  [classical OSP(3|2) with Casimir invariant]",
            "ospq(n), n = 1..2      [quantum OSP_q(2|2n); q = s^2 convention]",
            "osp22(n), n = 1..2     [classical OSP(2|2n) as the q -> 1 limit]"};
}

} // namespace hsa
