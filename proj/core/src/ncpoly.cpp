#include "hopfgal/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace hopfgal {

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms[w] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms) r.add_term(w, c);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms) r.add_term(w, -c);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    NcPoly r;
    for (const auto& [w1, c1] : terms)
        for (const auto& [w2, c2] : o.terms) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

NcPoly NcPoly::operator*(const Scalar& c) const {
    NcPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms) r.terms[w] = k * c;
    return r;
}

NcPoly NcPoly::operator-() const {
    NcPoly r;
    for (const auto& [w, c] : terms) r.terms[w] = -c;
    return r;
}

std::string NcPoly::to_string(const Presentation& pres) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (w.empty()) {
            os << cs;
            continue;
        }
        if (cs != "1") os << cs << "*";
        os << pres.word_name(w);
    }
    return os.str();
}

std::string Presentation::word_name(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << "*";
        os << gens[w[i]].name;
    }
    return os.str();
}

int Presentation::gen_index(const std::string& gname) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == gname) return (int)i;
    return -1;
}

int Presentation::add_gen(const std::string& gname) {
    if (gen_index(gname) >= 0) throw Error("duplicate generator " + gname);
    GeneratorInfo g;
    g.name = gname;
    gens.push_back(g);
    return (int)gens.size() - 1;
}

void Presentation::set_star_pair(const std::string& a, const std::string& b) {
    int ia = gen_index(a), ib = gen_index(b);
    if (ia < 0 || ib < 0) throw Error("star pair names unknown generator");
    gens[ia].star = ib;
    gens[ib].star = ia;
    if (ia == ib) gens[ia].star_self = true;
}

void Presentation::add_rule(const Word& lhs, const NcPoly& rhs) {
    if (lhs.empty()) throw Error("rewrite rule with empty left side");
    if (!rhs.is_zero() && rhs.degree() > (int)lhs.size())
        throw Error("rewrite rule increases degree: " + word_name(lhs));
    // equal-degree targets must be smaller in the monomial order
    for (const auto& [w, c] : rhs.terms)
        if (w.size() == lhs.size() && !WordLess()(w, lhs))
            throw Error("rewrite rule not decreasing: " + word_name(lhs) + " -> " + word_name(w));
    rules.push_back({lhs, rhs});
}

namespace {
// first (position, rule) such that rules[rule].lhs occurs at position in w
std::optional<std::pair<size_t, size_t>> find_redex(const Word& w,
                                                    const std::vector<RewriteRule>& rules) {
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (size_t r = 0; r < rules.size(); ++r) {
            const Word& l = rules[r].lhs;
            if (pos + l.size() > w.size()) continue;
            if (std::equal(l.begin(), l.end(), w.begin() + pos)) return {{pos, r}};
        }
    }
    return std::nullopt;
}
}  // namespace

NcPoly Presentation::nf(const NcPoly& p, long budget) const {
    NcPoly out;
    // worklist of unreduced terms
    std::vector<std::pair<Word, Scalar>> work(p.terms.begin(), p.terms.end());
    long steps = 0;
    while (!work.empty()) {
        auto [w, c] = work.back();
        work.pop_back();
        if (c.is_zero()) continue;
        auto redex = find_redex(w, rules);
        if (!redex) {
            out.add_term(w, c);
            continue;
        }
        if (++steps > budget)
            throw Error("rewrite budget exceeded at word " + word_name(w));
        auto [pos, r] = *redex;
        const RewriteRule& rule = rules[r];
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + rule.lhs.size(), w.end());
        for (const auto& [rw, rc] : rule.rhs.terms) {
            Word nw = prefix;
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            work.push_back({nw, c * rc});
        }
    }
    return out;
}

NcPoly Presentation::nf_word(const Word& w, long budget) const {
    return nf(NcPoly::word(w), budget);
}

bool Presentation::has_star() const {
    for (const auto& g : gens)
        if (g.star >= 0) return true;
    return false;
}

NcPoly Presentation::star(const NcPoly& p) const {
    NcPoly r;
    for (const auto& [w, c] : p.terms) {
        Word sw;
        sw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            int partner = gens[*it].star;
            if (partner < 0) throw Error("generator " + gens[*it].name + " has no star partner");
            sw.push_back(partner);
        }
        r.add_term(sw, c.star());
    }
    return nf(r);
}

std::vector<Rational> Presentation::kdegree(const Word& w) const {
    std::vector<Rational> d(kdim, Rational(0));
    for (int g : w) {
        const auto& gd = gens[g].kdeg;
        for (size_t i = 0; i < gd.size() && i < d.size(); ++i) d[i] += gd[i];
    }
    return d;
}

const std::vector<Word>& Presentation::normal_words(int d) const {
    auto it = normal_cache_.find(d);
    if (it != normal_cache_.end()) return it->second;
    std::vector<Word> out;
    std::vector<Word> frontier{Word{}};
    out.push_back(Word{});
    for (int deg = 1; deg <= d; ++deg) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (int g = 0; g < (int)gens.size(); ++g) {
                Word nw = w;
                nw.push_back(g);
                if (!find_redex(nw, rules)) next.push_back(nw);
            }
        }
        std::sort(next.begin(), next.end(), WordLess());
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), WordLess());
    return normal_cache_.emplace(d, std::move(out)).first->second;
}

ConfluenceReport Presentation::check_local_confluence(int degree_bound) const {
    ConfluenceReport rep;
    rep.degree = degree_bound;
    auto consider = [&](const Word& w, size_t ra, size_t pa, size_t rb, size_t pb) {
        if ((int)w.size() > degree_bound) return;
        auto rewrite_at = [&](size_t rule, size_t pos) {
            const RewriteRule& rl = rules[rule];
            NcPoly out;
            Word prefix(w.begin(), w.begin() + pos);
            Word suffix(w.begin() + pos + rl.lhs.size(), w.end());
            for (const auto& [rw, rc] : rl.rhs.terms) {
                Word nw = prefix;
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), suffix.begin(), suffix.end());
                out.add_term(nw, rc);
            }
            return nf(out);
        };
        ConfluenceReport::Ambiguity amb;
        amb.word = w;
        amb.rule_a = (int)ra;
        amb.rule_b = (int)rb;
        amb.nf_a = rewrite_at(ra, pa);
        amb.nf_b = rewrite_at(rb, pb);
        amb.ok = (amb.nf_a == amb.nf_b);
        if (!amb.ok) rep.pass = false;
        rep.ambiguities.push_back(std::move(amb));
    };
    for (size_t i = 0; i < rules.size(); ++i) {
        for (size_t j = 0; j < rules.size(); ++j) {
            const Word& li = rules[i].lhs;
            const Word& lj = rules[j].lhs;
            // overlap: proper suffix of li equals proper prefix of lj
            for (size_t k = 1; k < li.size() && k < lj.size(); ++k) {
                if (std::equal(li.end() - k, li.end(), lj.begin())) {
                    Word w = li;
                    w.insert(w.end(), lj.begin() + k, lj.end());
                    consider(w, i, 0, j, li.size() - k);
                }
            }
            // inclusion: lj occurs strictly inside li
            if (i != j && lj.size() < li.size()) {
                for (size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
                    if (std::equal(lj.begin(), lj.end(), li.begin() + pos))
                        consider(li, i, 0, j, pos);
                }
            }
        }
    }
    return rep;
}

bool Presentation::star_compatible() const {
    if (!has_star()) return true;
    for (const auto& rule : rules) {
        NcPoly diff = star(NcPoly::word(rule.lhs)) - star(rule.rhs);
        if (!nf(diff).is_zero()) return false;
    }
    return true;
}

// ---- Morphism ------------------------------------------------------------

Morphism::Morphism(PresPtr src, PresPtr tgt, std::vector<NcPoly> imgs, bool anti_, std::string n)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)), anti(anti_),
      name(std::move(n)) {
    if (images.size() != source->gens.size())
        throw Error("morphism image count mismatch for " + name);
}

Morphism Morphism::identity(PresPtr p) {
    std::vector<NcPoly> imgs;
    for (size_t i = 0; i < p->gens.size(); ++i) imgs.push_back(NcPoly::gen((int)i));
    return Morphism(p, p, std::move(imgs), false, "id");
}

NcPoly Morphism::apply_word(const Word& w) const {
    NcPoly out = NcPoly::one();
    if (!anti) {
        for (int g : w) {
            if (g >= (int)images.size()) throw Error("morphism undefined on generator");
            out = out * images[g];
        }
    } else {
        for (auto it = w.rbegin(); it != w.rend(); ++it) out = out * images[*it];
    }
    return target->nf(out);
}

NcPoly Morphism::apply(const NcPoly& p) const {
    NcPoly out;
    for (const auto& [w, c] : p.terms) out = out + apply_word(w) * c;
    return target->nf(out);
}

bool Morphism::well_defined(std::string* witness) const {
    for (const auto& rule : source->rules) {
        NcPoly img = apply(NcPoly::word(rule.lhs)) - apply(rule.rhs);
        if (!target->nf(img).is_zero()) {
            if (witness) *witness = source->word_name(rule.lhs);
            return false;
        }
    }
    return true;
}

int Morphism::max_image_degree() const {
    int d = 0;
    for (const auto& img : images) d = std::max(d, img.degree());
    return d;
}

}  // namespace hopfgal
