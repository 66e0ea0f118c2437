#include "hopfgal/tensor.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hopfgal {

int tuple_degree(const WordTuple& t) {
    int d = 0;
    for (const auto& w : t) d += (int)w.size();
    return d;
}

void TensorElement::add_term(const WordTuple& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms[t] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

int TensorElement::max_degree() const {
    int d = 0;
    for (const auto& [t, c] : terms) d = std::max(d, tuple_degree(t));
    return d;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    if (!r.space) r.space = o.space;
    for (const auto& [t, c] : o.terms) r.add_term(t, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    if (!r.space) r.space = o.space;
    for (const auto& [t, c] : o.terms) r.add_term(t, -c);
    return r;
}

TensorElement TensorElement::operator*(const Scalar& c) const {
    TensorElement r(space);
    if (c.is_zero()) return r;
    for (const auto& [t, k] : terms) r.terms[t] = k * c;
    return r;
}

TensorElement TensorElement::operator-() const {
    TensorElement r(space);
    for (const auto& [t, c] : terms) r.terms[t] = -c;
    return r;
}

TensorElement TensorElement::mul(const TensorElement& o) const {
    TensorElement r(space);
    size_t n = space->factors.size();
    for (const auto& [t1, c1] : terms)
        for (const auto& [t2, c2] : o.terms) {
            // componentwise concatenation, then slotwise nf
            std::vector<NcPoly> legs(n);
            for (size_t i = 0; i < n; ++i) {
                Word w = t1[i];
                w.insert(w.end(), t2[i].begin(), t2[i].end());
                legs[i] = space->factors[i]->nf_word(w);
            }
            TensorElement part = space->pure(legs, c1 * c2);
            r = r + part;
        }
    return r;
}

std::string TensorElement::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs != "1") os << cs << "*";
        os << "(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) os << " (x) ";
            os << (t[i].empty() ? "1" : space->factors[i]->word_name(t[i]));
        }
        os << ")";
    }
    return os.str();
}

SpacePtr TensorSpace::make(std::string name, std::vector<PresPtr> factors,
                           std::vector<TensorBalancing> relations,
                           std::vector<TensorTakeuchi> takeuchi) {
    auto s = std::make_shared<TensorSpace>();
    s->name = std::move(name);
    s->factors = std::move(factors);
    s->relations = std::move(relations);
    s->takeuchi = std::move(takeuchi);
    return s;
}

TensorElement TensorSpace::unit() const {
    TensorElement e(shared_from_this());
    e.terms[WordTuple(factors.size())] = Scalar(1);
    return e;
}

TensorElement TensorSpace::pure(const std::vector<NcPoly>& legs, const Scalar& c) const {
    if (legs.size() != factors.size()) throw Error("pure tensor arity mismatch in " + name);
    TensorElement e(shared_from_this());
    if (c.is_zero()) return e;
    // distribute
    std::vector<std::pair<WordTuple, Scalar>> acc{{WordTuple{}, c}};
    for (size_t i = 0; i < legs.size(); ++i) {
        NcPoly leg = factors[i]->nf(legs[i]);
        std::vector<std::pair<WordTuple, Scalar>> next;
        for (const auto& [t, k] : acc)
            for (const auto& [w, cw] : leg.terms) {
                WordTuple nt = t;
                nt.push_back(w);
                next.push_back({nt, k * cw});
            }
        acc = std::move(next);
    }
    for (auto& [t, k] : acc) e.add_term(t, k);
    return e;
}

TensorElement TensorSpace::normalize(const TensorElement& e) const {
    TensorElement r(shared_from_this());
    for (const auto& [t, c] : e.terms) {
        std::vector<NcPoly> legs;
        legs.reserve(t.size());
        for (size_t i = 0; i < t.size(); ++i) legs.push_back(factors[i]->nf_word(t[i]));
        r = r + pure(legs, c);
    }
    return r;
}

TensorElement TensorSpace::apply(const TensorAction& act, int gen, const TensorElement& e) const {
    const NcPoly& img = act.map->images.at(gen);
    return splice(e, act.factor, [&](const Word& w) {
        NcPoly p = NcPoly::word(w);
        return act.right_mult ? p * img : img * p;
    });
}

TensorElement TensorSpace::splice(const TensorElement& e, int factor,
                                  const std::function<NcPoly(const Word&)>& f) const {
    TensorElement r(shared_from_this());
    for (const auto& [t, c] : e.terms) {
        NcPoly leg = factors[factor]->nf(f(t[factor]));
        for (const auto& [w, cw] : leg.terms) {
            WordTuple nt = t;
            nt[factor] = w;
            r.add_term(nt, c * cw);
        }
    }
    return r;
}

namespace {

struct LocalReducer {
    const TensorSpace& space;
    KeyIndex<WordTuple> idx;
    RowSpace rows;
    std::set<WordTuple, TupleLess> seen;     // tuples whose relation rows were generated
    std::set<WordTuple, TupleLess> frontier;

    explicit LocalReducer(const TensorSpace& s) : space(s) {}

    SparseVec to_vec(const TensorElement& e) {
        SparseVec v;
        for (const auto& [t, c] : e.terms) v[idx.intern(t)] = c;
        return v;
    }

    void seed(const TensorElement& e) {
        for (const auto& [t, c] : e.terms) frontier.insert(t);
    }

    // generate relation rows from the frontier tuples; move their supports
    // into the next frontier
    void expand_once() {
        std::set<WordTuple, TupleLess> next;
        for (const WordTuple& t : frontier) {
            if (seen.count(t)) continue;
            seen.insert(t);
            TensorElement unit_elem(nullptr);
            for (const auto& rel : space.relations) {
                for (int g = 0; g < (int)rel.base->gens.size(); ++g) {
                    TensorElement one(space.shared_from_this());
                    one.terms[t] = Scalar(1);
                    TensorElement row =
                        space.apply(rel.lhs, g, one) - space.apply(rel.rhs, g, one);
                    if (row.is_zero()) continue;
                    for (const auto& [tt, c] : row.terms) next.insert(tt);
                    rows.insert(to_vec(row));
                }
            }
        }
        frontier = std::move(next);
    }
};

}  // namespace

bool TensorSpace::equal_mod_relations(const TensorElement& a, const TensorElement& b, int rounds,
                                      std::string* witness) const {
    TensorElement diff = normalize(a) - normalize(b);
    if (diff.is_zero()) return true;
    if (relations.empty()) {
        if (witness) *witness = diff.to_string();
        return false;
    }
    LocalReducer red(*this);
    red.seed(diff);
    SparseVec v = red.to_vec(diff);
    for (int r = 0; r < rounds; ++r) {
        red.expand_once();
        SparseVec res = red.rows.reduce(v);
        if (res.empty()) return true;
        if (red.frontier.empty()) break;
    }
    SparseVec res = red.rows.reduce(v);
    if (res.empty()) return true;
    if (witness) {
        TensorElement w(shared_from_this());
        for (const auto& [i, c] : res) w.add_term(red.idx.key(i), c);
        *witness = w.to_string();
    }
    return false;
}

bool TensorSpace::is_zero_mod_relations(const TensorElement& a, int rounds) const {
    return equal_mod_relations(a, zero(), rounds);
}

bool TensorSpace::takeuchi_member(const TensorElement& e, int rounds, std::string* witness) const {
    for (const auto& cond : takeuchi) {
        for (int g = 0; g < (int)cond.base->gens.size(); ++g) {
            TensorElement lhs = apply(cond.a, g, e);
            TensorElement rhs = apply(cond.b, g, e);
            if (!equal_mod_relations(lhs, rhs, rounds)) {
                if (witness) *witness = cond.base->gens[g].name;
                return false;
            }
        }
    }
    return true;
}

std::shared_ptr<TensorQuotient> TensorSpace::quotient(int degree_cap) const {
    auto it = quot_cache_.find(degree_cap);
    if (it != quot_cache_.end()) return it->second;
    auto q = std::make_shared<TensorQuotient>(*this, degree_cap);
    quot_cache_[degree_cap] = q;
    return q;
}

TensorQuotient::TensorQuotient(const TensorSpace& space, int degree_cap)
    : space_(space), cap_(degree_cap) {
    // enumerate all tuples of normal words with total degree <= cap
    std::vector<WordTuple> acc{WordTuple{}};
    for (const auto& f : space.factors) {
        std::vector<WordTuple> next;
        for (const auto& t : acc) {
            int used = tuple_degree(t);
            for (const Word& w : f->normal_words(degree_cap - used)) {
                WordTuple nt = t;
                nt.push_back(w);
                next.push_back(nt);
            }
        }
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end(), TupleLess());
    tuples_ = std::move(acc);
    long id = 0;
    for (const auto& t : tuples_) index_[t] = id++;

    // relation rows
    for (const auto& rel : space.relations) {
        int img_deg = std::max(rel.lhs.map->max_image_degree(), rel.rhs.map->max_image_degree());
        for (const auto& t : tuples_) {
            if (tuple_degree(t) + img_deg > degree_cap) continue;
            for (int g = 0; g < (int)rel.base->gens.size(); ++g) {
                TensorElement one(space.shared_from_this());
                one.terms[t] = Scalar(1);
                TensorElement row = space.apply(rel.lhs, g, one) - space.apply(rel.rhs, g, one);
                if (row.is_zero()) continue;
                SparseVec v;
                bool in_range = true;
                for (const auto& [tt, c] : row.terms) {
                    auto jt = index_.find(tt);
                    if (jt == index_.end()) {
                        in_range = false;
                        break;
                    }
                    v[jt->second] = c;
                }
                if (in_range) rel_.insert(std::move(v));
            }
        }
    }
}

long TensorQuotient::tuple_id(const WordTuple& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw Error("tuple exceeds quotient degree cap");
    return it->second;
}

SparseVec TensorQuotient::reduce(const TensorElement& e) const {
    TensorElement n = space_.normalize(e);
    SparseVec v;
    for (const auto& [t, c] : n.terms) v[tuple_id(t)] = c;
    return rel_.reduce(std::move(v));
}

std::vector<WordTuple> TensorQuotient::basis() const {
    std::vector<WordTuple> out;
    for (const auto& t : tuples_) {
        long id = index_.at(t);
        if (!rel_.pivots().count(id)) out.push_back(t);
    }
    return out;
}

TensorElement TensorQuotient::from_coords(const SparseVec& v, SpacePtr space) const {
    TensorElement e(std::move(space));
    for (const auto& [i, c] : v) e.add_term(tuples_[i], c);
    return e;
}

FlatBasis flat_basis(const SpacePtr& space, int d) {
    FlatBasis fb;
    fb.quot = space->quotient(d);
    bool unver = false;
    for (const auto& f : space->factors) {
        if (f->is_trivial()) continue;
        auto rep = f->check_local_confluence(2 * d);
        if (!rep.pass) unver = true;
    }
    fb.quot = space->quotient(d);
    fb.unverified = unver;
    fb.tuples = fb.quot->basis();
    return fb;
}

}  // namespace hopfgal
