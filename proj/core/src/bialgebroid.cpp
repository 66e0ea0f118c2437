#include "hopfgal/bialgebroid.hpp"

#include <algorithm>

namespace hopfgal {

namespace {
TensorAction act(int factor, bool right, MorPtr m) { return TensorAction{factor, right, m}; }
}

std::shared_ptr<Bialgebroid> Bialgebroid::create(std::string name, PresPtr total, PresPtr base,
                                                 MorPtr s, MorPtr t,
                                                 std::vector<TensorElement> coprod,
                                                 std::vector<NcPoly> counit) {
    auto L = std::make_shared<Bialgebroid>();
    L->name = std::move(name);
    L->total = std::move(total);
    L->base = std::move(base);
    L->src = std::move(s);
    L->tgt = std::move(t);
    L->coprod = std::move(coprod);
    L->counit = std::move(counit);

    std::vector<PresPtr> two{L->total, L->total};
    L->sp_diamond = TensorSpace::make(
        L->name + ".LdL", two,
        {{L->base, act(0, false, L->tgt), act(1, false, L->src)}},
        {{L->base, act(0, true, L->tgt), act(1, true, L->src)}});
    L->sp_obar = TensorSpace::make(L->name + ".LobarL", two,
                                   {{L->base, act(0, true, L->tgt), act(1, false, L->tgt)}});
    L->sp_upper = TensorSpace::make(L->name + ".LupL", two,
                                    {{L->base, act(0, false, L->src), act(1, true, L->src)}});
    std::vector<PresPtr> three{L->total, L->total, L->total};
    L->sp_triple = TensorSpace::make(
        L->name + ".LxLxL", three,
        {{L->base, act(0, false, L->tgt), act(1, false, L->src)},
         {L->base, act(1, false, L->tgt), act(2, false, L->src)}},
        {{L->base, act(0, true, L->tgt), act(1, true, L->src)},
         {L->base, act(1, true, L->tgt), act(2, true, L->src)}});

    // fix the space tag of the generator data
    for (auto& e : L->coprod) {
        TensorElement fixed(L->sp_diamond);
        fixed.terms = e.terms;
        e = fixed;
    }
    return L;
}

TensorElement Bialgebroid::delta_word(const Word& w) const {
    TensorElement acc = sp_diamond->unit();
    for (int g : w) acc = acc.mul(coprod.at(g));
    return acc;
}

TensorElement Bialgebroid::delta(const NcPoly& x) const {
    TensorElement out(sp_diamond);
    for (const auto& [w, c] : total->nf(x).terms) out = out + delta_word(w) * c;
    return out;
}

NcPoly Bialgebroid::eps(const NcPoly& x) const {
    // left-character extension: on words the counit is the ordered product of
    // the generator counits, computed in B
    NcPoly out;
    for (const auto& [w, c] : total->nf(x).terms) {
        NcPoly e = NcPoly::one();
        for (int g : w) e = e * counit.at(g);
        out = out + base->nf(e) * c;
    }
    return base->nf(out);
}

namespace {
// (a (x) b) , (p (x) m) -> a p (x) m b   [the lambda-inverse fold]
TensorElement fold_pm(const TensorElement& acc, const TensorElement& g) {
    TensorElement r(acc.space);
    for (const auto& [t1, c1] : acc.terms)
        for (const auto& [t2, c2] : g.terms) {
            const auto& P = acc.space->factors;
            NcPoly left = P[0]->nf(NcPoly::word(t1[0]) * NcPoly::word(t2[0]));
            NcPoly right = P[1]->nf(NcPoly::word(t2[1]) * NcPoly::word(t1[1]));
            r = r + acc.space->pure({left, right}, c1 * c2);
        }
    return r;
}
// (a (x) b) , (m (x) p) -> m a (x) b p   [the mu-inverse fold]
TensorElement fold_mp(const TensorElement& acc, const TensorElement& g) {
    TensorElement r(acc.space);
    for (const auto& [t1, c1] : acc.terms)
        for (const auto& [t2, c2] : g.terms) {
            const auto& P = acc.space->factors;
            NcPoly left = P[0]->nf(NcPoly::word(t2[0]) * NcPoly::word(t1[0]));
            NcPoly right = P[1]->nf(NcPoly::word(t1[1]) * NcPoly::word(t2[1]));
            r = r + acc.space->pure({left, right}, c1 * c2);
        }
    return r;
}
}  // namespace

TensorElement Bialgebroid::lambda_inv_word(const Word& w) const {
    if (!hopf_pm) throw Error(name + ": missing left Hopf inverse data (derive_hopf_inverse)");
    TensorElement acc = sp_obar->unit();
    for (int g : w) acc = fold_pm(acc, hopf_pm->at(g));
    return acc;
}

TensorElement Bialgebroid::lambda_inv(const NcPoly& x) const {
    TensorElement out(sp_obar);
    for (const auto& [w, c] : total->nf(x).terms) out = out + lambda_inv_word(w) * c;
    return out;
}

TensorElement Bialgebroid::mu_inv_word(const Word& w) const {
    if (!hopf_mp) throw Error(name + ": missing anti-left Hopf inverse data");
    TensorElement acc = sp_upper->unit();
    for (int g : w) acc = fold_mp(acc, hopf_mp->at(g));
    return acc;
}

TensorElement Bialgebroid::mu_inv(const NcPoly& x) const {
    TensorElement out(sp_upper);
    for (const auto& [w, c] : total->nf(x).terms) out = out + mu_inv_word(w) * c;
    return out;
}

TensorElement Bialgebroid::lambda_of(const TensorElement& e) const {
    // X (x)Bbar Y -> X1 <> X2 Y
    TensorElement out(sp_diamond);
    for (const auto& [t, c] : e.terms) {
        TensorElement d = delta_word(t[0]);
        out = out + sp_diamond->splice(d, 1, [&](const Word& w) {
                  return NcPoly::word(w) * NcPoly::word(t[1]);
              }) * c;
    }
    return out;
}

TensorElement Bialgebroid::lambda_inv_of(const TensorElement& e) const {
    // X <> Y -> X+ (x) X- Y
    TensorElement out(sp_obar);
    for (const auto& [t, c] : e.terms) {
        TensorElement pm = lambda_inv_word(t[0]);
        out = out + sp_obar->splice(pm, 1, [&](const Word& w) {
                  return NcPoly::word(w) * NcPoly::word(t[1]);
              }) * c;
    }
    return out;
}

TensorElement Bialgebroid::mu_of(const TensorElement& e) const {
    // X (x)^B Y -> Y1 X <> Y2
    TensorElement out(sp_diamond);
    for (const auto& [t, c] : e.terms) {
        TensorElement d = delta_word(t[1]);
        out = out + sp_diamond->splice(d, 0, [&](const Word& w) {
                  return NcPoly::word(w) * NcPoly::word(t[0]);
              }) * c;
    }
    return out;
}

TensorElement Bialgebroid::mu_inv_of(const TensorElement& e) const {
    // X <> Y -> Y[-] X (x)^B Y[+]
    TensorElement out(sp_upper);
    for (const auto& [t, c] : e.terms) {
        TensorElement mp = mu_inv_word(t[1]);
        out = out + sp_upper->splice(mp, 0, [&](const Word& w) {
                  return NcPoly::word(w) * NcPoly::word(t[0]);
              }) * c;
    }
    return out;
}

TensorElement Bialgebroid::delta2_left(const NcPoly& x) const {
    TensorElement out(sp_triple);
    TensorElement d = delta(x);
    for (const auto& [t, c] : d.terms) {
        TensorElement dd = delta_word(t[0]);
        for (const auto& [tt, cc] : dd.terms)
            out.add_term({tt[0], tt[1], t[1]}, c * cc);
    }
    return out;
}

TensorElement Bialgebroid::delta2_right(const NcPoly& x) const {
    TensorElement out(sp_triple);
    TensorElement d = delta(x);
    for (const auto& [t, c] : d.terms) {
        TensorElement dd = delta_word(t[1]);
        for (const auto& [tt, cc] : dd.terms)
            out.add_term({t[0], tt[0], tt[1]}, c * cc);
    }
    return out;
}

Word Bialgebroid::random_word(int d, unsigned long long& state) const {
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return (state >> 33);
    };
    if (total->gens.empty()) return Word{};
    int len = (int)(next() % (unsigned long long)(d + 1));
    Word w;
    for (int i = 0; i < len; ++i) w.push_back((int)(next() % total->gens.size()));
    return w;
}

// ---------------------------------------------------------------------------

Report check_bialgebroid(const Bialgebroid& L, int d, unsigned seed) {
    Report rep;
    rep.title = "bialgebroid." + L.name;
    for (const auto& f : L.base->assumptions) rep.assumption_flags.push_back(f);
    for (const auto& f : L.total->assumptions) rep.assumption_flags.push_back(f);

    std::string w;
    rep.add("source.well_defined", L.src->well_defined(&w), w);
    w.clear();
    rep.add("target.well_defined", L.tgt->well_defined(&w), w);

    bool commute = true;
    std::string cw;
    for (size_t a = 0; a < L.base->gens.size() && commute; ++a)
        for (size_t b = 0; b < L.base->gens.size() && commute; ++b) {
            NcPoly diff = L.s_of(NcPoly::gen((int)a)) * L.t_of(NcPoly::gen((int)b)) -
                          L.t_of(NcPoly::gen((int)b)) * L.s_of(NcPoly::gen((int)a));
            if (!L.total->nf(diff).is_zero()) {
                commute = false;
                cw = L.base->gens[a].name + "," + L.base->gens[b].name;
            }
        }
    rep.add("source_target_commute", commute, cw);

    // well-definedness on relations
    bool dwd = true, ewd = true;
    std::string dww, eww;
    for (const auto& rule : L.total->rules) {
        TensorElement dl = L.delta(NcPoly::word(rule.lhs));
        TensorElement dr = L.delta(rule.rhs);
        if (!L.sp_diamond->equal_mod_relations(dl, dr)) {
            dwd = false;
            dww = L.total->word_name(rule.lhs);
            break;
        }
    }
    for (const auto& rule : L.total->rules) {
        if (!L.base->nf(L.eps(NcPoly::word(rule.lhs)) - L.eps(rule.rhs)).is_zero()) {
            ewd = false;
            eww = L.total->word_name(rule.lhs);
            break;
        }
    }
    rep.add("coproduct.well_defined", dwd, dww);
    rep.add("counit.well_defined", ewd, eww);

    // Delta(1) = 1 <> 1 and eps(1) = 1
    rep.add("counit.unit", L.eps(NcPoly::one()) == NcPoly::one());
    rep.add("coproduct.unit", L.delta(NcPoly::one()).identical(L.sp_diamond->unit()));

    auto counit_law = [&](const Word& word, std::string label) {
        TensorElement dx = L.delta_word(word);
        NcPoly left, right;
        for (const auto& [t, c] : dx.terms) {
            left = left + L.s_of(L.eps(NcPoly::word(t[0]))) * NcPoly::word(t[1]) * c;
            right = right + L.t_of(L.eps(NcPoly::word(t[1]))) * NcPoly::word(t[0]) * c;
        }
        NcPoly x = L.total->nf_word(word);
        rep.add(label + ".eps_first_leg", L.total->nf(left - x).is_zero(), L.total->word_name(word),
                d);
        rep.add(label + ".eps_second_leg", L.total->nf(right - x).is_zero(),
                L.total->word_name(word), d);
    };

    for (size_t g = 0; g < L.total->gens.size(); ++g) {
        std::string gn = L.total->gens[g].name;
        counit_law(Word{(int)g}, "counit_law." + gn);
        std::string tw;
        rep.add("takeuchi." + gn, L.sp_diamond->takeuchi_member(L.coprod[g], 4, &tw), tw, d);
        rep.add("coassoc." + gn,
                L.sp_triple->equal_mod_relations(L.delta2_left(NcPoly::gen((int)g)),
                                                 L.delta2_right(NcPoly::gen((int)g))),
                gn, d);
    }

    // left-character law on generator pairs
    for (size_t g = 0; g < L.total->gens.size(); ++g)
        for (size_t h = 0; h < L.total->gens.size(); ++h) {
            NcPoly gh = L.total->nf(NcPoly::gen((int)g) * NcPoly::gen((int)h));
            NcPoly e1 = L.eps(gh);
            NcPoly e2 = L.eps(NcPoly::gen((int)g) * L.s_of(L.eps(NcPoly::gen((int)h))));
            NcPoly e3 = L.eps(NcPoly::gen((int)g) * L.t_of(L.eps(NcPoly::gen((int)h))));
            bool ok = L.base->nf(e1 - e2).is_zero() && L.base->nf(e1 - e3).is_zero();
            if (!ok || (g == 0 && h == 0))
                rep.add("left_character." + L.total->gens[g].name + "." + L.total->gens[h].name,
                        ok);
            if (!ok) return rep;
        }

    // seeded random spot checks
    unsigned long long state = seed;
    for (int i = 0; i < 20; ++i) {
        Word w2 = L.random_word(d, state);
        counit_law(w2, "random." + std::to_string(i));
        rep.add("random_coassoc." + std::to_string(i),
                L.sp_triple->equal_mod_relations(L.delta2_left(NcPoly::word(w2)),
                                                 L.delta2_right(NcPoly::word(w2))),
                L.total->word_name(w2), d);
    }
    return rep;
}

namespace {
TensorElement slide(const SpacePtr& sp, const TensorElement& e, int factor, bool right,
                    const NcPoly& by) {
    return sp->splice(e, factor, [&](const Word& w) {
        return right ? NcPoly::word(w) * by : by * NcPoly::word(w);
    });
}
}  // namespace

Report check_left_hopf(const Bialgebroid& L, int d) {
    Report rep;
    rep.title = "left_hopf." + L.name;
    if (!L.hopf_pm) {
        rep.add("inverse_data_present", false,
                "no X+ (x) X- data; use derive_hopf_inverse on a Galois extension");
        return rep;
    }
    // extension well-defined on relations
    bool wd = true;
    std::string ww;
    for (const auto& rule : L.total->rules) {
        TensorElement a = L.lambda_inv(NcPoly::word(rule.lhs));
        TensorElement b = L.lambda_inv(rule.rhs);
        if (!L.sp_obar->equal_mod_relations(a, b)) {
            wd = false;
            ww = L.total->word_name(rule.lhs);
            break;
        }
    }
    rep.add("lambda_inv.well_defined", wd, ww);

    auto sp_l5 = TensorSpace::make(
        L.name + ".LdL.obarL", {L.total, L.total, L.total},
        {{L.base, act(0, false, L.tgt), act(1, false, L.src)},
         {L.base, act(1, true, L.tgt), act(2, false, L.tgt)}});
    auto sp_l6 = TensorSpace::make(
        L.name + ".l6", {L.total, L.total, L.total},
        {{L.base, act(0, true, L.tgt), act(2, false, L.tgt)},
         {L.base, act(1, false, L.tgt), act(2, false, L.src)}});

    for (size_t gi = 0; gi < L.total->gens.size(); ++gi) {
        const std::string gn = L.total->gens[gi].name;
        NcPoly g = NcPoly::gen((int)gi);
        TensorElement pm = L.lambda_inv(g);

        // (1) lambda(lambda_inv(X <> 1)) = X <> 1
        rep.add("l1." + gn,
                L.sp_diamond->equal_mod_relations(L.lambda_of(pm),
                                                  L.sp_diamond->pure({g, NcPoly::one()})),
                gn, d);
        // (2) X1+ (x) X1- X2 = X (x) 1
        {
            TensorElement lhs(L.sp_obar);
            for (const auto& [t, c] : L.coprod[gi].terms) {
                TensorElement q = L.lambda_inv_word(t[0]);
                lhs = lhs + L.sp_obar->splice(q, 1, [&](const Word& w2) {
                          return NcPoly::word(w2) * NcPoly::word(t[1]);
                      }) * c;
            }
            rep.add("l2." + gn,
                    L.sp_obar->equal_mod_relations(lhs, L.sp_obar->pure({g, NcPoly::one()})), gn,
                    d);
        }
        // (5) X+1 <> X+2 (x) X-  =  X1 <> X2+ (x) X2-
        {
            TensorElement lhs(sp_l5), rhs(sp_l5);
            for (const auto& [t, c] : pm.terms) {
                TensorElement dd = L.delta_word(t[0]);
                for (const auto& [tt, cc] : dd.terms) lhs.add_term({tt[0], tt[1], t[1]}, c * cc);
            }
            for (const auto& [t, c] : L.coprod[gi].terms) {
                TensorElement q = L.lambda_inv_word(t[1]);
                for (const auto& [tt, cc] : q.terms) rhs.add_term({t[0], tt[0], tt[1]}, c * cc);
            }
            rep.add("l5." + gn, sp_l5->equal_mod_relations(lhs, rhs), gn, d);
        }
        // (6) X+ (x) X-1 (x) X-2 = X++ (x) X- (x) X+-
        {
            TensorElement lhs(sp_l6), rhs(sp_l6);
            for (const auto& [t, c] : pm.terms) {
                TensorElement dd = L.delta_word(t[1]);
                for (const auto& [tt, cc] : dd.terms) lhs.add_term({t[0], tt[0], tt[1]}, c * cc);
            }
            for (const auto& [t, c] : pm.terms) {
                TensorElement q = L.lambda_inv_word(t[0]);
                for (const auto& [tt, cc] : q.terms) rhs.add_term({tt[0], t[1], tt[1]}, c * cc);
            }
            rep.add("l6." + gn, sp_l6->equal_mod_relations(lhs, rhs), gn, d);
        }
        // (7) X = X+ t(eps(X-))
        {
            NcPoly acc;
            for (const auto& [t, c] : pm.terms)
                acc = acc + NcPoly::word(t[0]) * L.t_of(L.eps(NcPoly::word(t[1]))) * c;
            rep.add("l7." + gn, L.total->nf(acc - g).is_zero(), gn, d);
        }
        // (8) X+ X- = s(eps(X))
        {
            NcPoly acc;
            for (const auto& [t, c] : pm.terms)
                acc = acc + NcPoly::word(t[0]) * NcPoly::word(t[1]) * c;
            rep.add("l8." + gn, L.total->nf(acc - L.s_of(L.eps(g))).is_zero(), gn, d);
        }
        // (9), (10): base-element slides
        for (size_t bi = 0; bi < L.base->gens.size(); ++bi) {
            NcPoly sb = L.s_of(NcPoly::gen((int)bi));
            NcPoly tb = L.t_of(NcPoly::gen((int)bi));
            std::string bn = L.base->gens[bi].name;
            bool ok = L.sp_obar->equal_mod_relations(L.lambda_inv(sb * g),
                                                     slide(L.sp_obar, pm, 0, false, sb)) &&
                      L.sp_obar->equal_mod_relations(L.lambda_inv(tb * g),
                                                     slide(L.sp_obar, pm, 1, true, sb)) &&
                      L.sp_obar->equal_mod_relations(L.lambda_inv(g * sb),
                                                     slide(L.sp_obar, pm, 0, true, sb)) &&
                      L.sp_obar->equal_mod_relations(L.lambda_inv(g * tb),
                                                     slide(L.sp_obar, pm, 1, false, sb));
            rep.add("l9." + gn + "." + bn, ok, gn, d);
            rep.add("l10." + gn + "." + bn,
                    L.sp_obar->equal_mod_relations(slide(L.sp_obar, pm, 0, false, tb),
                                                   slide(L.sp_obar, pm, 1, true, tb)),
                    gn, d);
        }
    }

    // (3) anti-multiplicativity against rewriting on generator pairs
    bool mult_ok = true;
    std::string mw;
    for (size_t gi = 0; gi < L.total->gens.size() && mult_ok; ++gi)
        for (size_t hi = 0; hi < L.total->gens.size() && mult_ok; ++hi) {
            NcPoly gh = NcPoly::gen((int)gi) * NcPoly::gen((int)hi);
            TensorElement via_nf = L.lambda_inv(gh);
            TensorElement direct = fold_pm(L.lambda_inv(NcPoly::gen((int)gi)),
                                           (*L.hopf_pm)[hi]);
            if (!L.sp_obar->equal_mod_relations(via_nf, direct)) {
                mult_ok = false;
                mw = L.total->gens[gi].name + "*" + L.total->gens[hi].name;
            }
        }
    rep.add("l3.antimultiplicative", mult_ok, mw, d);
    // (4)
    rep.add("l4.unit", L.lambda_inv(NcPoly::one()).identical(L.sp_obar->unit()));

    // bijectivity on the flat bases at degree d
    {
        auto qs = L.sp_obar->quotient(d);
        bool ok = true;
        std::string bw;
        for (const auto& t : qs->basis()) {
            TensorElement e(L.sp_obar);
            e.terms[t] = Scalar(1);
            TensorElement back = L.lambda_inv_of(L.lambda_of(e));
            if (!L.sp_obar->equal_mod_relations(back, e)) {
                ok = false;
                bw = e.to_string();
                break;
            }
        }
        rep.add("lambda_inv_lambda.identity", ok, bw, d);
    }
    {
        auto qd = L.sp_diamond->quotient(d);
        bool ok = true;
        std::string bw;
        for (const auto& t : qd->basis()) {
            TensorElement e(L.sp_diamond);
            e.terms[t] = Scalar(1);
            TensorElement back = L.lambda_of(L.lambda_inv_of(e));
            if (!L.sp_diamond->equal_mod_relations(back, e)) {
                ok = false;
                bw = e.to_string();
                break;
            }
        }
        rep.add("lambda_lambda_inv.identity", ok, bw, d);
    }
    return rep;
}

Report check_anti_left_hopf(const Bialgebroid& L, int d) {
    Report rep;
    rep.title = "anti_left_hopf." + L.name;
    if (!L.hopf_mp) {
        rep.add("inverse_data_present", false, "no X[-] (x) X[+] data");
        return rep;
    }
    bool wd = true;
    std::string ww;
    for (const auto& rule : L.total->rules) {
        TensorElement a = L.mu_inv(NcPoly::word(rule.lhs));
        TensorElement b = L.mu_inv(rule.rhs);
        if (!L.sp_upper->equal_mod_relations(a, b)) {
            wd = false;
            ww = L.total->word_name(rule.lhs);
            break;
        }
    }
    rep.add("mu_inv.well_defined", wd, ww);

    auto sp_m5 = TensorSpace::make(
        L.name + ".m5", {L.total, L.total, L.total},
        {{L.base, act(0, false, L.src), act(1, true, L.src)},
         {L.base, act(1, false, L.tgt), act(2, false, L.src)}});
    auto sp_m6 = TensorSpace::make(
        L.name + ".m6", {L.total, L.total, L.total},
        {{L.base, act(0, false, L.src), act(2, true, L.src)},
         {L.base, act(0, false, L.tgt), act(1, false, L.src)}});

    for (size_t gi = 0; gi < L.total->gens.size(); ++gi) {
        const std::string gn = L.total->gens[gi].name;
        NcPoly g = NcPoly::gen((int)gi);
        TensorElement mp = L.mu_inv(g);

        // (1) mu(mu_inv(1 <> X)) = 1 <> X
        rep.add("m1." + gn,
                L.sp_diamond->equal_mod_relations(L.mu_of(mp),
                                                  L.sp_diamond->pure({NcPoly::one(), g})),
                gn, d);
        // (2) X2[-] X1 (x)^B X2[+] = 1 (x) X
        {
            TensorElement lhs(L.sp_upper);
            for (const auto& [t, c] : L.coprod[gi].terms) {
                TensorElement q = L.mu_inv_word(t[1]);
                lhs = lhs + L.sp_upper->splice(q, 0, [&](const Word& w2) {
                          return NcPoly::word(w2) * NcPoly::word(t[0]);
                      }) * c;
            }
            rep.add("m2." + gn,
                    L.sp_upper->equal_mod_relations(lhs, L.sp_upper->pure({NcPoly::one(), g})), gn,
                    d);
        }
        // (5) X[-] (x) X[+]1 <> X[+]2 = X1[-] (x) X1[+] <> X2
        {
            TensorElement lhs(sp_m5), rhs(sp_m5);
            for (const auto& [t, c] : mp.terms) {
                TensorElement dd = L.delta_word(t[1]);
                for (const auto& [tt, cc] : dd.terms) lhs.add_term({t[0], tt[0], tt[1]}, c * cc);
            }
            for (const auto& [t, c] : L.coprod[gi].terms) {
                TensorElement q = L.mu_inv_word(t[0]);
                for (const auto& [tt, cc] : q.terms) rhs.add_term({tt[0], tt[1], t[1]}, c * cc);
            }
            rep.add("m5." + gn, sp_m5->equal_mod_relations(lhs, rhs), gn, d);
        }
        // (6) X[-]1 (x) X[-]2 (x) X[+] = X[+][-] (x) X[-] (x) X[+][+]
        {
            TensorElement lhs(sp_m6), rhs(sp_m6);
            for (const auto& [t, c] : mp.terms) {
                TensorElement dd = L.delta_word(t[0]);
                for (const auto& [tt, cc] : dd.terms) lhs.add_term({tt[0], tt[1], t[1]}, c * cc);
            }
            for (const auto& [t, c] : mp.terms) {
                TensorElement q = L.mu_inv_word(t[1]);
                for (const auto& [tt, cc] : q.terms) rhs.add_term({tt[0], t[0], tt[1]}, c * cc);
            }
            rep.add("m6." + gn, sp_m6->equal_mod_relations(lhs, rhs), gn, d);
        }
        // (7) X = X[+] s(eps(X[-]))
        {
            NcPoly acc;
            for (const auto& [t, c] : mp.terms)
                acc = acc + NcPoly::word(t[1]) * L.s_of(L.eps(NcPoly::word(t[0]))) * c;
            rep.add("m7." + gn, L.total->nf(acc - g).is_zero(), gn, d);
        }
        // (8) X[+] X[-] = t(eps(X))
        {
            NcPoly acc;
            for (const auto& [t, c] : mp.terms)
                acc = acc + NcPoly::word(t[1]) * NcPoly::word(t[0]) * c;
            rep.add("m8." + gn, L.total->nf(acc - L.t_of(L.eps(g))).is_zero(), gn, d);
        }
        // (9), (10)
        for (size_t bi = 0; bi < L.base->gens.size(); ++bi) {
            NcPoly sb = L.s_of(NcPoly::gen((int)bi));
            NcPoly tb = L.t_of(NcPoly::gen((int)bi));
            std::string bn = L.base->gens[bi].name;
            bool ok = L.sp_upper->equal_mod_relations(L.mu_inv(sb * g),
                                                      slide(L.sp_upper, mp, 0, true, tb)) &&
                      L.sp_upper->equal_mod_relations(L.mu_inv(tb * g),
                                                      slide(L.sp_upper, mp, 1, false, tb)) &&
                      L.sp_upper->equal_mod_relations(L.mu_inv(g * sb),
                                                      slide(L.sp_upper, mp, 0, false, tb)) &&
                      L.sp_upper->equal_mod_relations(L.mu_inv(g * tb),
                                                      slide(L.sp_upper, mp, 1, true, tb));
            rep.add("m9." + gn + "." + bn, ok, gn, d);
            rep.add("m10." + gn + "." + bn,
                    L.sp_upper->equal_mod_relations(slide(L.sp_upper, mp, 0, true, sb),
                                                    slide(L.sp_upper, mp, 1, false, sb)),
                    gn, d);
        }
    }

    bool mult_ok = true;
    std::string mw;
    for (size_t gi = 0; gi < L.total->gens.size() && mult_ok; ++gi)
        for (size_t hi = 0; hi < L.total->gens.size() && mult_ok; ++hi) {
            NcPoly gh = NcPoly::gen((int)gi) * NcPoly::gen((int)hi);
            TensorElement via_nf = L.mu_inv(gh);
            TensorElement direct = fold_mp(L.mu_inv(NcPoly::gen((int)gi)), (*L.hopf_mp)[hi]);
            if (!L.sp_upper->equal_mod_relations(via_nf, direct)) {
                mult_ok = false;
                mw = L.total->gens[gi].name + "*" + L.total->gens[hi].name;
            }
        }
    rep.add("m3.antimultiplicative", mult_ok, mw, d);
    rep.add("m4.unit", L.mu_inv(NcPoly::one()).identical(L.sp_upper->unit()));

    {
        auto qs = L.sp_upper->quotient(d);
        bool ok = true;
        std::string bw;
        for (const auto& t : qs->basis()) {
            TensorElement e(L.sp_upper);
            e.terms[t] = Scalar(1);
            TensorElement back = L.mu_inv_of(L.mu_of(e));
            if (!L.sp_upper->equal_mod_relations(back, e)) {
                ok = false;
                bw = e.to_string();
                break;
            }
        }
        rep.add("mu_inv_mu.identity", ok, bw, d);
    }
    {
        auto qd = L.sp_diamond->quotient(d);
        bool ok = true;
        std::string bw;
        for (const auto& t : qd->basis()) {
            TensorElement e(L.sp_diamond);
            e.terms[t] = Scalar(1);
            TensorElement back = L.mu_of(L.mu_inv_of(e));
            if (!L.sp_diamond->equal_mod_relations(back, e)) {
                ok = false;
                bw = e.to_string();
                break;
            }
        }
        rep.add("mu_mu_inv.identity", ok, bw, d);
    }
    return rep;
}

Report check_mixed_hopf_identities(const Bialgebroid& L, int d) {
    Report rep;
    rep.title = "mixed_hopf." + L.name;
    if (!L.hopf_pm || !L.hopf_mp) {
        rep.add("inverse_data_present", false, "both inverse structures required");
        return rep;
    }
    auto sp_m1 = TensorSpace::make(
        L.name + ".mix1", {L.total, L.total, L.total},
        {{L.base, act(0, true, L.src), act(1, false, L.src)},
         {L.base, act(1, true, L.tgt), act(2, false, L.tgt)}});
    auto sp_m2 = TensorSpace::make(
        L.name + ".mix2", {L.total, L.total, L.total},
        {{L.base, act(0, true, L.tgt), act(1, false, L.tgt)},
         {L.base, act(1, true, L.src), act(2, false, L.src)}});
    auto sp_m3 = TensorSpace::make(
        L.name + ".mix3", {L.total, L.total, L.total},
        {{L.base, act(0, true, L.tgt), act(2, false, L.tgt)},
         {L.base, act(0, true, L.src), act(1, false, L.src)}});

    for (size_t gi = 0; gi < L.total->gens.size(); ++gi) {
        const std::string gn = L.total->gens[gi].name;
        NcPoly g = NcPoly::gen((int)gi);
        TensorElement pm = L.lambda_inv(g);
        TensorElement mp = L.mu_inv(g);

        // (i) X[+] (x) X[-]+ (x) X[-]- = X2[+] (x) X2[-] (x) X1
        {
            TensorElement lhs(sp_m1), rhs(sp_m1);
            for (const auto& [t, c] : mp.terms) {
                TensorElement q = L.lambda_inv_word(t[0]);
                for (const auto& [tt, cc] : q.terms) lhs.add_term({t[1], tt[0], tt[1]}, c * cc);
            }
            for (const auto& [t, c] : L.coprod[gi].terms) {
                TensorElement q = L.mu_inv_word(t[1]);
                for (const auto& [tt, cc] : q.terms) rhs.add_term({tt[1], tt[0], t[0]}, c * cc);
            }
            rep.add("mixed1." + gn, sp_m1->equal_mod_relations(lhs, rhs), gn, d);
        }
        // (ii) X+ (x) X-[+] (x) X-[-] = X1+ (x) X1- (x) X2
        {
            TensorElement lhs(sp_m2), rhs(sp_m2);
            for (const auto& [t, c] : pm.terms) {
                TensorElement q = L.mu_inv_word(t[1]);
                for (const auto& [tt, cc] : q.terms) lhs.add_term({t[0], tt[1], tt[0]}, c * cc);
            }
            for (const auto& [t, c] : L.coprod[gi].terms) {
                TensorElement q = L.lambda_inv_word(t[0]);
                for (const auto& [tt, cc] : q.terms) rhs.add_term({tt[0], tt[1], t[1]}, c * cc);
            }
            rep.add("mixed2." + gn, sp_m2->equal_mod_relations(lhs, rhs), gn, d);
        }
        // (iii) X[+]+ (x) X[-] (x) X[+]- = X+[+] (x) X+[-] (x) X-
        {
            TensorElement lhs(sp_m3), rhs(sp_m3);
            for (const auto& [t, c] : mp.terms) {
                TensorElement q = L.lambda_inv_word(t[1]);
                for (const auto& [tt, cc] : q.terms) lhs.add_term({tt[0], t[0], tt[1]}, c * cc);
            }
            for (const auto& [t, c] : pm.terms) {
                TensorElement q = L.mu_inv_word(t[0]);
                for (const auto& [tt, cc] : q.terms) rhs.add_term({tt[1], tt[0], t[1]}, c * cc);
            }
            rep.add("mixed3." + gn, sp_m3->equal_mod_relations(lhs, rhs), gn, d);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

SparseVec YDData::act_word(const Bialgebroid& L, const Word& w, int j) const {
    SparseVec v{{j, Scalar(1)}};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        SparseVec next;
        for (const auto& [k, c] : v) vec_add(next, action.at(*it).at(k), c);
        v = std::move(next);
    }
    return v;
}

SparseVec YDData::act_poly(const Bialgebroid& L, const NcPoly& p, int j) const {
    SparseVec out;
    for (const auto& [w, c] : L.total->nf(p).terms) vec_add(out, act_word(L, w, j), c);
    return out;
}

Report yd_check(const Bialgebroid& L, const YDData& M) {
    Report rep;
    rep.title = "yetter_drinfeld." + L.name;

    // unitality of the action
    bool unital = true;
    for (int j = 0; j < M.dim && unital; ++j) {
        SparseVec v = M.act_poly(L, NcPoly::one(), j);
        unital = (v.size() == 1 && v.count(j) && v.at(j).is_one());
    }
    rep.add("action.unital", unital);

    // action respects the relations of L
    bool assoc = true;
    std::string aw;
    for (const auto& rule : L.total->rules) {
        for (int j = 0; j < M.dim; ++j) {
            SparseVec a = M.act_word(L, rule.lhs, j);
            SparseVec b = M.act_poly(L, rule.rhs, j);
            vec_add(a, b, Scalar(-1));
            if (!a.empty()) {
                assoc = false;
                aw = L.total->word_name(rule.lhs);
                break;
            }
        }
        if (!assoc) break;
    }
    rep.add("action.respects_relations", assoc, aw);

    // bullet 1: s(b) acts as left-, t(b) as right-multiplication by b; over a
    // trivial base this reduces to unitality, checked above
    bool st_ok = true;
    std::string stw;
    for (size_t bi = 0; bi < L.base->gens.size() && st_ok; ++bi) {
        // the B-bimodule structure on M is induced by the action itself, so
        // here we check s(b) and t(b) act identically on the coinvariant-like
        // pairing: s(b)t(b') v = t(b')s(b) v
        for (size_t ci = 0; ci < L.base->gens.size() && st_ok; ++ci) {
            NcPoly x = L.s_of(NcPoly::gen((int)bi)) * L.t_of(NcPoly::gen((int)ci));
            NcPoly y = L.t_of(NcPoly::gen((int)ci)) * L.s_of(NcPoly::gen((int)bi));
            for (int j = 0; j < M.dim; ++j) {
                SparseVec a = M.act_poly(L, x, j), b = M.act_poly(L, y, j);
                vec_add(a, b, Scalar(-1));
                if (!a.empty()) {
                    st_ok = false;
                    stw = L.base->gens[bi].name;
                    break;
                }
            }
        }
    }
    rep.add("action.base_compat", st_ok, stw);

    // counitality and coassociativity of the coaction
    bool counital = true;
    for (int j = 0; j < M.dim && counital; ++j) {
        SparseVec v;
        for (const auto& [i, coef] : M.coaction.at(j)) {
            NcPoly e = L.eps(coef);
            Scalar c;
            for (const auto& [w, cc] : e.terms)
                if (w.empty()) c = cc;
            if (!e.is_zero() && (e.terms.size() > 1 || !e.terms.begin()->first.empty()))
                counital = false;   // counit value not scalar over trivial base
            vec_add(v, SparseVec{{i, Scalar(1)}}, c);
        }
        SparseVec expect{{j, Scalar(1)}};
        vec_add(v, expect, Scalar(-1));
        if (!v.empty()) counital = false;
    }
    rep.add("coaction.counital", counital);

    bool coassoc = true;
    {
        // compare (Delta x id) and (id x coaction) applied to the coaction in
        // the flat key space (L-word, L-word, basis index)
        KeyIndex<std::tuple<Word, Word, int>> keys;
        for (int j = 0; j < M.dim && coassoc; ++j) {
            SparseVec lhs, rhs;
            for (const auto& [i, coef] : M.coaction.at(j)) {
                TensorElement d = L.delta(coef);
                for (const auto& [t, c] : d.terms)
                    vec_add(lhs, SparseVec{{keys.intern({t[0], t[1], i}), Scalar(1)}}, c);
                for (const auto& [i2, coef2] : M.coaction.at(i)) {
                    for (const auto& [w2, c2] : L.total->nf(coef2).terms)
                        for (const auto& [w1, c1] : L.total->nf(coef).terms)
                            vec_add(rhs, SparseVec{{keys.intern({w1, w2, i2}), Scalar(1)}},
                                    c1 * c2);
                }
            }
            vec_add(lhs, rhs, Scalar(-1));
            if (!lhs.empty()) coassoc = false;
        }
    }
    rep.add("coaction.coassociative", coassoc);

    // bullet 2: (X1 |> rho)(-1) X2 <> (X1 |> rho)(0) = X1 rho(-1) <> X2 |> rho(0)
    bool yd_ok = true;
    std::string ydw;
    KeyIndex<std::pair<Word, int>> keys;
    for (size_t gi = 0; gi < L.total->gens.size() && yd_ok; ++gi) {
        for (int j = 0; j < M.dim && yd_ok; ++j) {
            SparseVec lhs, rhs;
            for (const auto& [t, c] : L.coprod[gi].terms) {
                // lhs
                SparseVec acted = M.act_word(L, t[0], j);
                for (const auto& [k, ck] : acted) {
                    for (const auto& [i, coef] : M.coaction.at(k)) {
                        NcPoly first = L.total->nf(coef * NcPoly::word(t[1]));
                        for (const auto& [w, cw] : first.terms)
                            vec_add(lhs, SparseVec{{keys.intern({w, i}), Scalar(1)}},
                                    c * ck * cw);
                    }
                }
                // rhs
                for (const auto& [i, coef] : M.coaction.at(j)) {
                    NcPoly first = L.total->nf(NcPoly::word(t[0]) * coef);
                    SparseVec acted2 = M.act_word(L, t[1], i);
                    for (const auto& [w, cw] : first.terms)
                        for (const auto& [k2, ck2] : acted2)
                            vec_add(rhs, SparseVec{{keys.intern({w, k2}), Scalar(1)}},
                                    c * cw * ck2);
                }
            }
            vec_add(lhs, rhs, Scalar(-1));
            if (!lhs.empty()) {
                yd_ok = false;
                ydw = L.total->gens[gi].name;
            }
        }
    }
    rep.add("yd_condition", yd_ok, ydw);
    return rep;
}

}  // namespace hopfgal
