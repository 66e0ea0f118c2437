#include "hopfgal/comodule.hpp"

#include <algorithm>

namespace hopfgal {

namespace {
TensorAction act(int factor, bool right, MorPtr m) { return TensorAction{factor, right, m}; }

// (a (x) b) * (p (x) q) -> a p (x) q b    [translation-map fold, eq. tau(XY)]
TensorElement fold_translation(const TensorElement& acc, const TensorElement& g) {
    TensorElement r(acc.space);
    for (const auto& [t1, c1] : acc.terms)
        for (const auto& [t2, c2] : g.terms) {
            const auto& F = acc.space->factors;
            NcPoly left = F[0]->nf(NcPoly::word(t1[0]) * NcPoly::word(t2[0]));
            NcPoly right = F[1]->nf(NcPoly::word(t2[1]) * NcPoly::word(t1[1]));
            r = r + acc.space->pure({left, right}, c1 * c2);
        }
    return r;
}
}  // namespace

std::shared_ptr<ComoduleAlgebra> ComoduleAlgebra::create(std::string name, BgdPtr L, PresPtr P,
                                                         bool left_side, MorPtr unit_embed,
                                                         std::vector<TensorElement> coaction,
                                                         PresPtr Npres, MorPtr Nembed) {
    auto C = std::make_shared<ComoduleAlgebra>();
    C->name = std::move(name);
    C->L = std::move(L);
    C->P = std::move(P);
    C->left_side = left_side;
    C->unit_embed = std::move(unit_embed);
    C->coaction = std::move(coaction);
    C->Npres = std::move(Npres);
    C->Nembed = std::move(Nembed);

    const auto& Lp = C->L->total;
    if (left_side) {
        C->sp_coact = TensorSpace::make(
            C->name + ".LdP", {Lp, C->P},
            {{C->L->base, act(0, false, C->L->tgt), act(1, false, C->unit_embed)}},
            {{C->L->base, act(0, true, C->L->tgt), act(1, true, C->unit_embed)}});
        C->sp_reverse = TensorSpace::make(
            C->name + ".LupP", {Lp, C->P},
            {{C->L->base, act(0, false, C->L->src), act(1, true, C->unit_embed)}});
    } else {
        C->sp_coact = TensorSpace::make(
            C->name + ".PdL", {C->P, Lp},
            {{C->L->base, act(0, false, C->unit_embed), act(1, false, C->L->src)}},
            {{C->L->base, act(0, true, C->unit_embed), act(1, true, C->L->src)}});
        C->sp_reverse = TensorSpace::make(
            C->name + ".PobarL", {C->P, Lp},
            {{C->L->base, act(0, true, C->unit_embed), act(1, false, C->L->tgt)}});
    }
    if (C->Nembed) {
        C->sp_PP = TensorSpace::make(
            C->name + ".PtNP", {C->P, C->P},
            {{C->Npres, act(0, true, C->Nembed), act(1, false, C->Nembed)}});
    } else {
        C->sp_PP = TensorSpace::make(C->name + ".PtNP", {C->P, C->P});
    }
    for (auto& e : C->coaction) {
        TensorElement fixed(C->sp_coact);
        fixed.terms = e.terms;
        e = fixed;
    }
    return C;
}

CmdPtr self_comodule(const BgdPtr& L, bool left_side) {
    std::vector<TensorElement> coact = L->coprod;
    if (left_side) {
        auto C = ComoduleAlgebra::create(L->name + ".self", L, L->total, true, L->src, coact,
                                         L->base, L->tgt);
        if (L->hopf_pm) {
            std::vector<TensorElement> tr;
            for (const auto& e : *L->hopf_pm) {
                TensorElement t(C->sp_PP);
                t.terms = e.terms;
                tr.push_back(t);
            }
            C->translation = tr;
        }
        if (L->hopf_mp) {
            std::vector<TensorElement> rv;
            for (const auto& e : *L->hopf_mp) {
                TensorElement t(C->sp_reverse);
                t.terms = e.terms;   // X[-] (x)^B X[+] matches L (x)^B P slots
                rv.push_back(t);
            }
            C->regularity = rv;
        }
        return C;
    }
    auto C = ComoduleAlgebra::create(L->name + ".selfR", L, L->total, false, L->tgt, coact,
                                     L->base, L->src);
    if (L->hopf_mp) {
        std::vector<TensorElement> tr;
        for (const auto& e : *L->hopf_mp) {
            // anti-right translation tau(X) = X[+] (x)_{s(B)} X[-]
            TensorElement t(C->sp_PP);
            for (const auto& [tt, c] : e.terms) t.add_term({tt[1], tt[0]}, c);
            tr.push_back(t);
        }
        C->translation = tr;
    }
    if (L->hopf_pm) {
        std::vector<TensorElement> rv;
        for (const auto& e : *L->hopf_pm) {
            TensorElement t(C->sp_reverse);
            t.terms = e.terms;   // X+ (x)Bbar X- matches P (x)Bbar L slots
            rv.push_back(t);
        }
        C->regularity = rv;
    }
    return C;
}

TensorElement ComoduleAlgebra::coact_word(const Word& w) const {
    TensorElement acc = sp_coact->unit();
    for (int g : w) acc = acc.mul(coaction.at(g));
    return acc;
}

TensorElement ComoduleAlgebra::coact(const NcPoly& p) const {
    TensorElement out(sp_coact);
    for (const auto& [w, c] : P->nf(p).terms) out = out + coact_word(w) * c;
    return out;
}

TensorElement ComoduleAlgebra::translate_word(const Word& w) const {
    if (!translation) throw Error(name + ": no translation map data");
    TensorElement acc = sp_PP->unit();
    for (int g : w) acc = fold_translation(acc, translation->at(g));
    return acc;
}

TensorElement ComoduleAlgebra::translate(const NcPoly& x) const {
    TensorElement out(sp_PP);
    for (const auto& [w, c] : L->total->nf(x).terms) out = out + translate_word(w) * c;
    return out;
}

TensorElement ComoduleAlgebra::reverse_word(const Word& w) const {
    if (!regularity) throw Error(name + ": no regularity data");
    TensorElement acc = sp_reverse->unit();
    if (left_side) {
        // left comodule: (pq)[1] (x) (pq)[0] = q[1] p[1] (x) p[0] q[0]
        for (int g : w) {
            const TensorElement& gd = regularity->at(g);
            TensorElement r(sp_reverse);
            for (const auto& [t1, c1] : acc.terms)
                for (const auto& [t2, c2] : gd.terms) {
                    NcPoly ell = L->total->nf(NcPoly::word(t2[0]) * NcPoly::word(t1[0]));
                    NcPoly pp = P->nf(NcPoly::word(t1[1]) * NcPoly::word(t2[1]));
                    r = r + sp_reverse->pure({ell, pp}, c1 * c2);
                }
            acc = r;
        }
    } else {
        // right comodule: (pq)[0] (x) (pq)[1] = p[0] q[0] (x) q[1] p[1]
        for (int g : w) {
            const TensorElement& gd = regularity->at(g);
            TensorElement r(sp_reverse);
            for (const auto& [t1, c1] : acc.terms)
                for (const auto& [t2, c2] : gd.terms) {
                    NcPoly pp = P->nf(NcPoly::word(t1[0]) * NcPoly::word(t2[0]));
                    NcPoly ell = L->total->nf(NcPoly::word(t2[1]) * NcPoly::word(t1[1]));
                    r = r + sp_reverse->pure({pp, ell}, c1 * c2);
                }
            acc = r;
        }
    }
    return acc;
}

TensorElement ComoduleAlgebra::reverse_of(const NcPoly& p) const {
    TensorElement out(sp_reverse);
    for (const auto& [w, c] : P->nf(p).terms) out = out + reverse_word(w) * c;
    return out;
}

TensorElement ComoduleAlgebra::can_pair(const NcPoly& p, const NcPoly& q) const {
    TensorElement d = coact(p);
    if (left_side) {
        return sp_coact->splice(d, 1, [&](const Word& w) { return NcPoly::word(w) * q; });
    }
    return sp_coact->splice(d, 0, [&](const Word& w) { return NcPoly::word(w) * q; });
}

Report ComoduleAlgebra::check_comodule(int d) const {
    Report rep;
    rep.title = "comodule." + name;
    for (const auto& f : P->assumptions) rep.assumption_flags.push_back(f);

    std::string w;
    rep.add("unit_embed.well_defined", unit_embed->well_defined(&w), w);
    if (Nembed) {
        w.clear();
        rep.add("coinv_embed.well_defined", Nembed->well_defined(&w), w);
    }
    bool wd = true;
    std::string ww;
    for (const auto& rule : P->rules) {
        TensorElement a = coact(NcPoly::word(rule.lhs)), b = coact(rule.rhs);
        if (!sp_coact->equal_mod_relations(a, b)) {
            wd = false;
            ww = P->word_name(rule.lhs);
            break;
        }
    }
    rep.add("coaction.well_defined", wd, ww);

    int lslot = left_side ? 0 : 1;   // L-leg of the coaction
    int pslot = 1 - lslot;
    for (size_t g = 0; g < P->gens.size(); ++g) {
        std::string gn = P->gens[g].name;
        const TensorElement& cg = coaction[g];
        // counitality
        NcPoly acc;
        for (const auto& [t, c] : cg.terms)
            acc = acc + embed_base(L->eps(NcPoly::word(t[lslot]))) * NcPoly::word(t[pslot]) * c;
        rep.add("counital." + gn, P->nf(acc - NcPoly::gen((int)g)).is_zero(), gn, d);
        // Takeuchi membership
        std::string tw;
        rep.add("takeuchi." + gn, sp_coact->takeuchi_member(cg, 4, &tw), tw, d);
        // coassociativity in the flat triple space
        SpacePtr triple =
            left_side
                ? TensorSpace::make(
                      name + ".LLP", {L->total, L->total, P},
                      {{L->base, act(0, false, L->tgt), act(1, false, L->src)},
                       {L->base, act(1, false, L->tgt), act(2, false, unit_embed)}})
                : TensorSpace::make(
                      name + ".PLL", {P, L->total, L->total},
                      {{L->base, act(0, false, unit_embed), act(1, false, L->src)},
                       {L->base, act(1, false, L->tgt), act(2, false, L->src)}});
        TensorElement lhs(triple), rhs(triple);
        if (left_side) {
            for (const auto& [t, c] : cg.terms) {
                TensorElement dd = L->delta_word(t[0]);
                for (const auto& [tt, cc] : dd.terms) lhs.add_term({tt[0], tt[1], t[1]}, c * cc);
                TensorElement pp = coact_word(t[1]);
                for (const auto& [tt, cc] : pp.terms) rhs.add_term({t[0], tt[0], tt[1]}, c * cc);
            }
        } else {
            for (const auto& [t, c] : cg.terms) {
                TensorElement pp = coact_word(t[0]);
                for (const auto& [tt, cc] : pp.terms) lhs.add_term({tt[0], tt[1], t[1]}, c * cc);
                TensorElement dd = L->delta_word(t[1]);
                for (const auto& [tt, cc] : dd.terms) rhs.add_term({t[0], tt[0], tt[1]}, c * cc);
            }
        }
        rep.add("coassoc." + gn, triple->equal_mod_relations(lhs, rhs), gn, d);
    }
    return rep;
}

// ---------------------------------------------------------------------------

CoinvResult coinvariants(const ComoduleAlgebra& P, int d) {
    CoinvResult res;
    auto conf = P.P->check_local_confluence(2 * d);
    res.unverified = !conf.pass;

    int maxc = 1;
    for (const auto& e : P.coaction) maxc = std::max(maxc, e.max_degree());
    int cap = d * maxc;
    auto quot = P.sp_coact->quotient(cap);

    const auto& words = P.P->normal_words(d);
    std::vector<SparseVec> images;
    for (const Word& w : words) {
        TensorElement delta = P.coact_word(w);
        TensorElement expect(P.sp_coact);
        if (P.left_side)
            expect.add_term({Word{}, w}, Scalar(1));
        else
            expect.add_term({w, Word{}}, Scalar(1));
        images.push_back(quot->reduce(delta - expect));
    }
    auto kers = kernel_basis(images);
    for (const auto& combo : kers) {
        NcPoly p;
        for (const auto& [i, c] : combo) p.add_term(words[i], c);
        res.basis.push_back(p);
    }
    return res;
}

GaloisReport galois_check(const ComoduleAlgebra& P, int d) {
    GaloisReport out;
    out.rep.title = "galois." + P.name;
    for (const auto& f : P.P->assumptions) out.rep.assumption_flags.push_back(f);

    // declared vs computed coinvariants
    CoinvResult coin = coinvariants(P, d);
    if (coin.unverified) out.rep.add_unverified("confluence", "factor confluence unknown", 2 * d);
    if (P.Nembed) {
        // every computed coinvariant must lie in the span of the declared
        // subalgebra's normal words (mapped through the embedding), and each
        // declared generator must be coinvariant
        std::vector<SparseVec> span;
        KeyIndex<Word> keys;
        for (const Word& nw : P.Npres->normal_words(d)) {
            NcPoly img = P.embed_N(NcPoly::word(nw));
            SparseVec v;
            for (const auto& [w, c] : img.terms) v[keys.intern(w)] = c;
            span.push_back(v);
        }
        bool ok = true;
        std::string wit;
        RowSpace rs;
        for (auto& v : span) rs.insert(v);
        for (const auto& p : coin.basis) {
            SparseVec v;
            bool in_range = true;
            for (const auto& [w, c] : p.terms) {
                long id = keys.find(w);
                if (id < 0) {
                    in_range = false;
                    break;
                }
                v[id] = c;
            }
            if (!in_range || !rs.contains(v)) {
                ok = false;
                wit = p.to_string(*P.P);
                break;
            }
        }
        out.rep.add("coinvariants.declared_cover_computed", ok, wit, d);
        bool ok2 = true;
        std::string wit2;
        for (size_t g = 0; g < P.Npres->gens.size(); ++g) {
            NcPoly img = P.embed_N(NcPoly::gen((int)g));
            TensorElement dimg = P.coact(img);
            TensorElement expect(P.sp_coact);
            for (const auto& [w, c] : img.terms) {
                if (P.left_side)
                    expect.add_term({Word{}, w}, c);
                else
                    expect.add_term({w, Word{}}, c);
            }
            if (!P.sp_coact->equal_mod_relations(dimg, expect)) {
                ok2 = false;
                wit2 = P.Npres->gens[g].name;
                break;
            }
        }
        out.rep.add("coinvariants.declared_are_coinvariant", ok2, wit2, d);
    }

    int maxc = 1;
    for (const auto& e : P.coaction) maxc = std::max(maxc, e.max_degree());
    int cap = d * maxc + d;
    auto src_q = P.sp_PP->quotient(d);
    auto tgt_q = P.sp_coact->quotient(cap);

    std::vector<SparseVec> cols;
    std::vector<WordTuple> src_basis = src_q->basis();
    for (const auto& t : src_basis) {
        TensorElement img = P.can_pair(P.P->nf_word(t[0]), P.P->nf_word(t[1]));
        cols.push_back(tgt_q->reduce(img));
    }
    auto ker = kernel_basis(cols);
    out.injective = ker.empty();
    std::string kw;
    if (!ker.empty()) {
        TensorElement w(P.sp_PP);
        for (const auto& [i, c] : ker.front()) w.add_term(src_basis[i], c);
        kw = w.to_string();
    }
    out.rep.add("canonical_map.injective", out.injective, kw, d);

    // surjectivity per degree against the target flat basis
    int up_to = -1;
    std::string miss;
    for (int m = 0; m <= d; ++m) {
        bool all = true;
        for (const auto& t : tgt_q->basis()) {
            if (tuple_degree(t) != m) continue;
            TensorElement e(P.sp_coact);
            e.terms[t] = Scalar(1);
            if (!solve_in_span(cols, tgt_q->reduce(e), nullptr)) {
                all = false;
                miss = e.to_string();
                break;
            }
        }
        if (!all) break;
        up_to = m;
    }
    out.surjective_up_to = up_to;
    out.filtration_loss = d - up_to;
    out.rep.add("canonical_map.surjective_up_to_degree_" + std::to_string(up_to), up_to >= 0,
                miss, d);
    out.bijective = out.injective && up_to >= d;
    out.rep.add("canonical_map.bijective_at_degree", out.bijective, out.bijective ? "" : miss, d);
    return out;
}

// ---------------------------------------------------------------------------

Report translation_identity_suite(const ComoduleAlgebra& C, int d) {
    Report rep;
    rep.title = "translation." + C.name;
    if (!C.translation) {
        rep.add("translation_data_present", false, "no translation map data");
        return rep;
    }
    const auto& L = *C.L;
    const PresPtr& Lp = L.total;
    const PresPtr& Pp = C.P;
    MorPtr iota = C.unit_embed;
    MorPtr iN = C.Nembed;

    auto PPn = [&](int a, int b) {
        return TensorBalancing{C.Npres, act(a, true, iN), act(b, false, iN)};
    };

    if (C.left_side) {
        auto sp1 = TensorSpace::make(C.name + ".t1", {Lp, Pp, Pp},
                                     {{L.base, act(0, false, L.tgt), act(1, false, iota)},
                                      PPn(1, 2)});
        auto sp2 = TensorSpace::make(C.name + ".t2", {Lp, Pp, Pp},
                                     {{L.base, act(0, false, L.tgt), act(2, false, iota)},
                                      PPn(1, 2)});
        for (size_t gi = 0; gi < Lp->gens.size(); ++gi) {
            std::string gn = Lp->gens[gi].name;
            NcPoly X = NcPoly::gen((int)gi);
            TensorElement tau = C.translate(X);

            // (1) tau1(X)(-1) <> tau1(X)(0) (x) tau2(X) = X1 <> tau1(X2) (x) tau2(X2)
            TensorElement lhs(sp1), rhs(sp1);
            for (const auto& [t, c] : tau.terms) {
                TensorElement dd = C.coact_word(t[0]);
                for (const auto& [tt, cc] : dd.terms) lhs.add_term({tt[0], tt[1], t[1]}, c * cc);
            }
            for (const auto& [t, c] : L.coprod[gi].terms) {
                TensorElement q = C.translate_word(t[1]);
                for (const auto& [tt, cc] : q.terms) rhs.add_term({t[0], tt[0], tt[1]}, c * cc);
            }
            rep.add("t1." + gn, sp1->equal_mod_relations(lhs, rhs), gn, d);

            // (2) tau2(X)(-1) (x) tau1(X) (x) tau2(X)(0) = X- (x) tau1(X+) (x) tau2(X+)
            if (L.hopf_pm) {
                TensorElement lhs2(sp2), rhs2(sp2);
                for (const auto& [t, c] : tau.terms) {
                    TensorElement dd = C.coact_word(t[1]);
                    for (const auto& [tt, cc] : dd.terms)
                        lhs2.add_term({tt[0], t[0], tt[1]}, c * cc);
                }
                TensorElement pm = L.lambda_inv(X);
                for (const auto& [t, c] : pm.terms) {
                    TensorElement q = C.translate_word(t[0]);
                    for (const auto& [tt, cc] : q.terms)
                        rhs2.add_term({t[1], tt[0], tt[1]}, c * cc);
                }
                rep.add("t2." + gn, sp2->equal_mod_relations(lhs2, rhs2), gn, d);
            }

            // (3) can(tau(X)) = X <> 1
            {
                TensorElement acc(C.sp_coact);
                for (const auto& [t, c] : tau.terms)
                    acc = acc + C.can_pair(NcPoly::word(t[0]), NcPoly::word(t[1])) * c;
                rep.add("t3." + gn,
                        C.sp_coact->equal_mod_relations(
                            acc, C.sp_coact->pure({X, NcPoly::one()})),
                        gn, d);
            }
            // (6.5) tau1(X) tau2(X) = eps(X) in P
            {
                NcPoly acc;
                for (const auto& [t, c] : tau.terms)
                    acc = acc + NcPoly::word(t[0]) * NcPoly::word(t[1]) * c;
                rep.add("t6_5." + gn,
                        Pp->nf(acc - C.embed_base(L.eps(X))).is_zero(), gn, d);
            }
            // (5)/(6) base slides through the translation map
            for (size_t bi = 0; bi < L.base->gens.size(); ++bi) {
                NcPoly sb = L.s_of(NcPoly::gen((int)bi));
                NcPoly tb = L.t_of(NcPoly::gen((int)bi));
                NcPoly ib = iota->apply(NcPoly::gen((int)bi));
                std::string bn = L.base->gens[bi].name;
                auto mulslot = [&](const TensorElement& e, int slot, bool right,
                                   const NcPoly& by) {
                    return C.sp_PP->splice(e, slot, [&](const Word& w) {
                        return right ? NcPoly::word(w) * by : by * NcPoly::word(w);
                    });
                };
                bool ok5 = C.sp_PP->equal_mod_relations(C.translate(sb * X),
                                                        mulslot(tau, 0, false, ib)) &&
                           C.sp_PP->equal_mod_relations(C.translate(X * sb),
                                                        mulslot(tau, 0, true, ib));
                bool ok6 = C.sp_PP->equal_mod_relations(C.translate(tb * X),
                                                        mulslot(tau, 1, true, ib)) &&
                           C.sp_PP->equal_mod_relations(C.translate(X * tb),
                                                        mulslot(tau, 1, false, ib));
                rep.add("t5." + gn + "." + bn, ok5, gn, d);
                rep.add("t6." + gn + "." + bn, ok6, gn, d);
            }
            // (7.5) tau1(X+) (x) tau1(X-) (x) tau2(X-) tau2(X+) = tau1(X) (x) tau2(X) (x) 1
            if (L.hopf_pm) {
                auto sp3 = TensorSpace::make(C.name + ".t75", {Pp, Pp, Pp},
                                             {PPn(0, 1), PPn(1, 2)});
                TensorElement lhs3(sp3), rhs3(sp3);
                TensorElement pm = L.lambda_inv(X);
                for (const auto& [t, c] : pm.terms) {
                    TensorElement tp = C.translate_word(t[0]);
                    TensorElement tm = C.translate_word(t[1]);
                    for (const auto& [a, ca] : tp.terms)
                        for (const auto& [b, cb] : tm.terms) {
                            NcPoly last = Pp->nf(NcPoly::word(b[1]) * NcPoly::word(a[1]));
                            for (const auto& [w, cw] : last.terms)
                                lhs3.add_term({a[0], b[0], w}, c * ca * cb * cw);
                        }
                }
                for (const auto& [t, c] : tau.terms) rhs3.add_term({t[0], t[1], Word{}}, c);
                rep.add("t7_5." + gn, sp3->equal_mod_relations(lhs3, rhs3), gn, d);
            }
        }
        // (4) tau(p(-1)) (1 (x) p(0)) = p (x) 1 on P-generators
        for (size_t pi = 0; pi < Pp->gens.size(); ++pi) {
            TensorElement acc(C.sp_PP);
            for (const auto& [t, c] : C.coaction[pi].terms) {
                TensorElement q = C.translate_word(t[0]);
                acc = acc + C.sp_PP->splice(q, 1, [&](const Word& w) {
                          return NcPoly::word(w) * NcPoly::word(t[1]);
                      }) * c;
            }
            TensorElement expect(C.sp_PP);
            expect.add_term({Word{(int)pi}, Word{}}, Scalar(1));
            rep.add("t4." + Pp->gens[pi].name,
                    C.sp_PP->equal_mod_relations(acc, expect), Pp->gens[pi].name, d);
        }
        // (4.5) n tau1(X) (x) tau2(X) = tau1(X) (x) tau2(X) n
        if (C.Nembed)
            for (size_t gi = 0; gi < Lp->gens.size(); ++gi)
                for (size_t ni = 0; ni < C.Npres->gens.size(); ++ni) {
                    NcPoly n = C.embed_N(NcPoly::gen((int)ni));
                    TensorElement tau = C.translate(NcPoly::gen((int)gi));
                    TensorElement a = C.sp_PP->splice(
                        tau, 0, [&](const Word& w) { return n * NcPoly::word(w); });
                    TensorElement b = C.sp_PP->splice(
                        tau, 1, [&](const Word& w) { return NcPoly::word(w) * n; });
                    rep.add("t4_5." + Lp->gens[gi].name + "." + C.Npres->gens[ni].name,
                            C.sp_PP->equal_mod_relations(a, b), "", d);
                }
        // (7) multiplicativity against rewriting
        bool ok7 = true;
        std::string w7;
        for (size_t gi = 0; gi < Lp->gens.size() && ok7; ++gi)
            for (size_t hi = 0; hi < Lp->gens.size() && ok7; ++hi) {
                NcPoly gh = NcPoly::gen((int)gi) * NcPoly::gen((int)hi);
                TensorElement via_nf = C.translate(gh);
                TensorElement direct = fold_translation(C.translate(NcPoly::gen((int)gi)),
                                                        C.translation->at(hi));
                if (!C.sp_PP->equal_mod_relations(via_nf, direct)) {
                    ok7 = false;
                    w7 = Lp->gens[gi].name + "*" + Lp->gens[hi].name;
                }
            }
        rep.add("t7.antimultiplicative", ok7, w7, d);
    } else {
        // anti-right list
        auto sp1 = TensorSpace::make(C.name + ".a1", {Pp, Pp, Lp},
                                     {{L.base, act(0, false, iota), act(2, false, L.src)},
                                      PPn(0, 1)});
        auto sp2 = TensorSpace::make(C.name + ".a2", {Pp, Pp, Lp},
                                     {{L.base, act(1, false, iota), act(2, false, L.src)},
                                      PPn(0, 1)});
        for (size_t gi = 0; gi < Lp->gens.size(); ++gi) {
            std::string gn = Lp->gens[gi].name;
            NcPoly X = NcPoly::gen((int)gi);
            TensorElement tau = C.translate(X);

            // (a1) tau1(X)(0) (x) tau2(X) (x) tau1(X)(1) = tau1(X1) (x) tau2(X1) (x) X2
            TensorElement lhs(sp1), rhs(sp1);
            for (const auto& [t, c] : tau.terms) {
                TensorElement dd = C.coact_word(t[0]);
                for (const auto& [tt, cc] : dd.terms) lhs.add_term({tt[0], t[1], tt[1]}, c * cc);
            }
            for (const auto& [t, c] : L.coprod[gi].terms) {
                TensorElement q = C.translate_word(t[0]);
                for (const auto& [tt, cc] : q.terms) rhs.add_term({tt[0], tt[1], t[1]}, c * cc);
            }
            rep.add("a1." + gn, sp1->equal_mod_relations(lhs, rhs), gn, d);

            // (a2) tau1(X) (x) tau2(X)(0) <> tau2(X)(1) = tau1(X[+]) (x) tau2(X[+]) <> X[-]
            if (L.hopf_mp) {
                TensorElement lhs2(sp2), rhs2(sp2);
                for (const auto& [t, c] : tau.terms) {
                    TensorElement dd = C.coact_word(t[1]);
                    for (const auto& [tt, cc] : dd.terms)
                        lhs2.add_term({t[0], tt[0], tt[1]}, c * cc);
                }
                TensorElement mp = L.mu_inv(X);
                for (const auto& [t, c] : mp.terms) {
                    TensorElement q = C.translate_word(t[1]);
                    for (const auto& [tt, cc] : q.terms)
                        rhs2.add_term({tt[0], tt[1], t[0]}, c * cc);
                }
                rep.add("a2." + gn, sp2->equal_mod_relations(lhs2, rhs2), gn, d);
            }
            // (a3) can(tau(X)) = 1 <> X
            {
                TensorElement acc(C.sp_coact);
                for (const auto& [t, c] : tau.terms)
                    acc = acc + C.can_pair(NcPoly::word(t[0]), NcPoly::word(t[1])) * c;
                rep.add("a3." + gn,
                        C.sp_coact->equal_mod_relations(
                            acc, C.sp_coact->pure({NcPoly::one(), X})),
                        gn, d);
            }
            // (a6.5) tau1 tau2 = eps(X)
            {
                NcPoly acc;
                for (const auto& [t, c] : tau.terms)
                    acc = acc + NcPoly::word(t[0]) * NcPoly::word(t[1]) * c;
                rep.add("a6_5." + gn, Pp->nf(acc - C.embed_base(L.eps(X))).is_zero(), gn, d);
            }
            // (a5)/(a6) base slides
            for (size_t bi = 0; bi < L.base->gens.size(); ++bi) {
                NcPoly sb = L.s_of(NcPoly::gen((int)bi));
                NcPoly tb = L.t_of(NcPoly::gen((int)bi));
                NcPoly ib = iota->apply(NcPoly::gen((int)bi));
                std::string bn = L.base->gens[bi].name;
                auto mulslot = [&](const TensorElement& e, int slot, bool right,
                                   const NcPoly& by) {
                    return C.sp_PP->splice(e, slot, [&](const Word& w) {
                        return right ? NcPoly::word(w) * by : by * NcPoly::word(w);
                    });
                };
                bool ok5 = C.sp_PP->equal_mod_relations(C.translate(sb * X),
                                                        mulslot(tau, 1, true, ib)) &&
                           C.sp_PP->equal_mod_relations(C.translate(X * sb),
                                                        mulslot(tau, 1, false, ib));
                bool ok6 = C.sp_PP->equal_mod_relations(C.translate(tb * X),
                                                        mulslot(tau, 0, false, ib)) &&
                           C.sp_PP->equal_mod_relations(C.translate(X * tb),
                                                        mulslot(tau, 0, true, ib));
                rep.add("a5." + gn + "." + bn, ok5, gn, d);
                rep.add("a6." + gn + "." + bn, ok6, gn, d);
            }
            // (a7.5)
            if (L.hopf_mp) {
                auto sp3 = TensorSpace::make(C.name + ".a75", {Pp, Pp, Pp},
                                             {PPn(0, 1), PPn(1, 2)});
                TensorElement lhs3(sp3), rhs3(sp3);
                TensorElement mp = L.mu_inv(X);
                for (const auto& [t, c] : mp.terms) {
                    TensorElement tp = C.translate_word(t[1]);   // tau(X[+])
                    TensorElement tm = C.translate_word(t[0]);   // tau(X[-])
                    for (const auto& [a, ca] : tp.terms)
                        for (const auto& [b, cb] : tm.terms) {
                            NcPoly last = Pp->nf(NcPoly::word(b[1]) * NcPoly::word(a[1]));
                            for (const auto& [w, cw] : last.terms)
                                lhs3.add_term({a[0], b[0], w}, c * ca * cb * cw);
                        }
                }
                for (const auto& [t, c] : tau.terms) rhs3.add_term({t[0], t[1], Word{}}, c);
                rep.add("a7_5." + gn, sp3->equal_mod_relations(lhs3, rhs3), gn, d);
            }
        }
        // (a4) tau(p(1)) tails: tau1(p(1)) (x) tau2(p(1)) p(0) = p (x) 1
        for (size_t pi = 0; pi < Pp->gens.size(); ++pi) {
            TensorElement acc(C.sp_PP);
            for (const auto& [t, c] : C.coaction[pi].terms) {
                TensorElement q = C.translate_word(t[1]);
                acc = acc + C.sp_PP->splice(q, 1, [&](const Word& w) {
                          return NcPoly::word(w) * NcPoly::word(t[0]);
                      }) * c;
            }
            TensorElement expect(C.sp_PP);
            expect.add_term({Word{(int)pi}, Word{}}, Scalar(1));
            rep.add("a4." + Pp->gens[pi].name,
                    C.sp_PP->equal_mod_relations(acc, expect), Pp->gens[pi].name, d);
        }
        // (a4.5)
        if (C.Nembed)
            for (size_t gi = 0; gi < Lp->gens.size(); ++gi)
                for (size_t ni = 0; ni < C.Npres->gens.size(); ++ni) {
                    NcPoly n = C.embed_N(NcPoly::gen((int)ni));
                    TensorElement tau = C.translate(NcPoly::gen((int)gi));
                    TensorElement a = C.sp_PP->splice(
                        tau, 0, [&](const Word& w) { return n * NcPoly::word(w); });
                    TensorElement b = C.sp_PP->splice(
                        tau, 1, [&](const Word& w) { return NcPoly::word(w) * n; });
                    rep.add("a4_5." + Lp->gens[gi].name + "." + C.Npres->gens[ni].name,
                            C.sp_PP->equal_mod_relations(a, b), "", d);
                }
        // (a7)
        bool ok7 = true;
        std::string w7;
        for (size_t gi = 0; gi < Lp->gens.size() && ok7; ++gi)
            for (size_t hi = 0; hi < Lp->gens.size() && ok7; ++hi) {
                NcPoly gh = NcPoly::gen((int)gi) * NcPoly::gen((int)hi);
                TensorElement via_nf = C.translate(gh);
                TensorElement direct = fold_translation(C.translate(NcPoly::gen((int)gi)),
                                                        C.translation->at(hi));
                if (!C.sp_PP->equal_mod_relations(via_nf, direct)) {
                    ok7 = false;
                    w7 = Lp->gens[gi].name + "*" + Lp->gens[hi].name;
                }
            }
        rep.add("a7.antimultiplicative", ok7, w7, d);
    }
    return rep;
}

// ---------------------------------------------------------------------------

ReverseResult derive_reverse_coaction(const ComoduleAlgebra& C, int d) {
    ReverseResult out;
    out.rep.title = "reverse_coaction." + C.name;
    int maxc = 1;
    for (const auto& e : C.coaction) maxc = std::max(maxc, e.max_degree());
    int cap = d * maxc + d;
    auto src_q = C.sp_reverse->quotient(d + 1);
    auto tgt_q = C.sp_coact->quotient(cap);

    // columns of the regularity map phi (left) / psi (right)
    std::vector<SparseVec> cols;
    std::vector<WordTuple> src_basis = src_q->basis();
    for (const auto& t : src_basis) {
        TensorElement img(C.sp_coact);
        if (C.left_side) {
            // phi(X (x) p) = p(-1) X <> p(0)
            TensorElement dp = C.coact_word(t[1]);
            img = C.sp_coact->splice(dp, 0, [&](const Word& w) {
                return NcPoly::word(w) * NcPoly::word(t[0]);
            });
        } else {
            // psi(p (x) X) = p(0) <> p(1) X
            TensorElement dp = C.coact_word(t[0]);
            img = C.sp_coact->splice(dp, 1, [&](const Word& w) {
                return NcPoly::word(w) * NcPoly::word(t[1]);
            });
        }
        cols.push_back(tgt_q->reduce(img));
    }

    bool all_ok = true;
    std::string wit;
    for (size_t pi = 0; pi < C.P->gens.size(); ++pi) {
        TensorElement target(C.sp_coact);
        if (C.left_side)
            target.add_term({Word{}, Word{(int)pi}}, Scalar(1));   // 1 <> p
        else
            target.add_term({Word{(int)pi}, Word{}}, Scalar(1));   // p <> 1
        SparseVec sol;
        if (!solve_in_span(cols, tgt_q->reduce(target), &sol)) {
            all_ok = false;
            wit = C.P->gens[pi].name;
            out.data.clear();
            break;
        }
        TensorElement datum(C.sp_reverse);
        for (const auto& [i, c] : sol) datum.add_term(src_basis[i], c);
        out.data.push_back(datum);
    }
    out.rep.add("regularity_solvable", all_ok, wit, d);
    return out;
}

HopfInverseResult derive_hopf_inverse(const ComoduleAlgebra& C, int d) {
    HopfInverseResult out;
    out.rep.title = "derive_hopf_inverse." + C.name;
    if (!C.translation) {
        out.rep.add("translation_data_present", false, "");
        return out;
    }
    if (!C.left_side) {
        out.rep.add("left_side", false, "derive_hopf_inverse expects a left Galois extension");
        return out;
    }
    const auto& L = *C.L;
    // space of X+ (x) X- (x) 1-leg: int_{a,b} Lbar (x) L (x) P
    auto sp = TensorSpace::make(
        C.name + ".hinv", {L.total, L.total, C.P},
        {{L.base, act(0, true, L.tgt), act(1, false, L.tgt)},
         {L.base, act(0, false, L.tgt), act(2, false, C.unit_embed)}});

    int cap = 3 * d + 2;
    auto tgt_q = sp->quotient(cap);
    auto src_q = L.sp_obar->quotient(2 * d);
    std::vector<SparseVec> cols;
    std::vector<WordTuple> src_basis = src_q->basis();
    for (const auto& t : src_basis) {
        TensorElement e(sp);
        e.add_term({t[0], t[1], Word{}}, Scalar(1));
        cols.push_back(tgt_q->reduce(e));
    }

    bool all_ok = true;
    std::string wit;
    for (size_t gi = 0; gi < L.total->gens.size(); ++gi) {
        // rhs: tau1(X)(-1) (x) tau2(X)(-1) (x) tau1(X)(0) tau2(X)(0)
        TensorElement rhs(sp);
        TensorElement tau = C.translate(NcPoly::gen((int)gi));
        for (const auto& [t, c] : tau.terms) {
            TensorElement du = C.coact_word(t[0]);
            TensorElement dv = C.coact_word(t[1]);
            for (const auto& [tu, cu] : du.terms)
                for (const auto& [tv, cv] : dv.terms) {
                    NcPoly last = C.P->nf(NcPoly::word(tu[1]) * NcPoly::word(tv[1]));
                    for (const auto& [w, cw] : last.terms)
                        rhs.add_term({tu[0], tv[0], w}, c * cu * cv * cw);
                }
        }
        SparseVec sol;
        if (!solve_in_span(cols, tgt_q->reduce(rhs), &sol)) {
            all_ok = false;
            wit = L.total->gens[gi].name + " third leg does not contract: " + rhs.to_string();
            out.plus_minus.clear();
            break;
        }
        TensorElement datum(L.sp_obar);
        for (const auto& [i, c] : sol) datum.add_term(src_basis[i], c);
        out.plus_minus.push_back(datum);
    }
    out.rep.add("third_leg_contracts", all_ok, wit, d);
    return out;
}

// ---------------------------------------------------------------------------

HopfModule hopf_module_self(const CmdPtr& P, int d) {
    HopfModule M;
    M.space = TensorSpace::make(P->name + ".M", {P->P});
    M.coact_space = TensorSpace::make(
        P->name + ".LM", {P->L->total, P->P},
        {{P->L->base, act(0, false, P->L->tgt), act(1, false, P->unit_embed)}});
    auto space = M.space;
    auto cspace = M.coact_space;
    M.coact = [P, cspace](const TensorElement& e) {
        TensorElement out(cspace);
        for (const auto& [t, c] : e.terms) {
            TensorElement dp = P->coact_word(t[0]);
            for (const auto& [tt, cc] : dp.terms) out.add_term({tt[0], tt[1]}, c * cc);
        }
        return out;
    };
    M.act = [P, space](const Word& w, const TensorElement& e) {
        return space->splice(e, 0,
                             [&](const Word& v) { return NcPoly::word(w) * NcPoly::word(v); });
    };
    for (const Word& w : P->P->normal_words(d)) {
        TensorElement e(M.space);
        e.add_term({w}, Scalar(1));
        M.basis.push_back(e);
    }
    return M;
}

HopfModule hopf_module_tensor_table(const CmdPtr& P,
                                    const std::vector<std::map<int, NcPoly>>& V, int d) {
    // V is a finite left L-comodule given by a coaction table; model its
    // basis as words of length one over a scratch presentation
    auto vp = std::make_shared<Presentation>();
    vp->name = "Vtab";
    for (size_t i = 0; i < V.size(); ++i) vp->add_gen("v" + std::to_string(i));
    for (int i = 0; i < (int)V.size(); ++i)
        for (int j = 0; j < (int)V.size(); ++j) vp->add_rule(Word{i, j}, NcPoly());

    HopfModule M;
    M.space = TensorSpace::make(P->name + ".MPV", {P->P, PresPtr(vp)});
    M.coact_space = TensorSpace::make(P->name + ".LMPV", {P->L->total, P->P, PresPtr(vp)});
    auto space = M.space;
    auto cspace = M.coact_space;
    auto L = P->L;
    M.coact = [P, V, space, cspace, L](const TensorElement& e) {
        TensorElement out(cspace);
        for (const auto& [t, c] : e.terms) {
            if (t[1].size() != 1) throw Error("table module leg must be a single basis vector");
            int j = t[1][0];
            TensorElement dp = P->coact_word(t[0]);
            for (const auto& [tt, cc] : dp.terms)
                for (const auto& [i, coef] : V.at(j)) {
                    NcPoly first = L->total->nf(NcPoly::word(tt[0]) * coef);
                    for (const auto& [w, cw] : first.terms)
                        out.add_term({w, tt[1], Word{i}}, c * cc * cw);
                }
        }
        return out;
    };
    M.act = [space](const Word& w, const TensorElement& e) {
        return space->splice(e, 0,
                             [&](const Word& v) { return NcPoly::word(w) * NcPoly::word(v); });
    };
    for (const Word& w : P->P->normal_words(d))
        for (int i = 0; i < (int)V.size(); ++i) {
            TensorElement e(M.space);
            e.add_term({w, Word{i}}, Scalar(1));
            M.basis.push_back(e);
        }
    return M;
}

HopfModule hopf_module_can_target(const CmdPtr& P, int d) {
    auto L = P->L;
    HopfModule M;
    M.space = TensorSpace::make(
        P->name + ".MLP", {L->total, P->P},
        {{L->base, act(0, false, L->tgt), act(1, false, P->unit_embed)}});
    M.coact_space = TensorSpace::make(
        P->name + ".LMLP", {L->total, L->total, P->P},
        {{L->base, act(0, false, L->tgt), act(1, false, L->src)},
         {L->base, act(1, false, L->tgt), act(2, false, P->unit_embed)}});
    auto space = M.space;
    auto cspace = M.coact_space;
    M.coact = [P, L, cspace](const TensorElement& e) {
        // delta(X <> p) = X- p(-1) <> (X+ <> p(0))
        TensorElement out(cspace);
        for (const auto& [t, c] : e.terms) {
            TensorElement pm = L->lambda_inv_word(t[0]);
            TensorElement dp = P->coact_word(t[1]);
            for (const auto& [tp, cp] : pm.terms)
                for (const auto& [tq, cq] : dp.terms) {
                    NcPoly first = L->total->nf(NcPoly::word(tp[1]) * NcPoly::word(tq[0]));
                    for (const auto& [w, cw] : first.terms)
                        out.add_term({w, tp[0], tq[1]}, c * cp * cq * cw);
                }
        }
        return out;
    };
    M.act = [P, L, space](const Word& w, const TensorElement& e) {
        // transport of the left P-action through the canonical map
        TensorElement out(space);
        for (const auto& [t, c] : e.terms) {
            TensorElement tr = P->translate_word(t[0]);
            for (const auto& [tt, cc] : tr.terms) {
                NcPoly u = P->P->nf(NcPoly::word(w) * NcPoly::word(tt[0]));
                for (const auto& [uw, cu] : u.terms) {
                    TensorElement du = P->coact_word(uw);
                    for (const auto& [tv, cv] : du.terms) {
                        NcPoly last =
                            P->P->nf(NcPoly::word(tv[1]) * NcPoly::word(tt[1]) *
                                     NcPoly::word(t[1]));
                        for (const auto& [lw, cl] : last.terms)
                            out.add_term({tv[0], lw}, c * cc * cu * cv * cl);
                    }
                }
            }
        }
        return out;
    };
    auto q = M.space->quotient(d);
    for (const auto& t : q->basis()) {
        TensorElement e(M.space);
        e.terms[t] = Scalar(1);
        M.basis.push_back(e);
    }
    return M;
}

DecomposeResult hopf_module_decompose(const CmdPtr& P, const HopfModule& M, int d) {
    DecomposeResult out;
    out.rep.title = "hopf_module_decompose." + P->name;
    if (!P->translation) {
        out.rep.add("translation_data_present", false, "");
        return out;
    }
    // coinvariants of M
    int cap = 0;
    for (const auto& e : M.basis) cap = std::max(cap, e.max_degree());
    cap = cap * 2 + 2;
    auto cq = M.coact_space->quotient(cap);
    std::vector<SparseVec> images;
    for (const auto& m : M.basis) {
        TensorElement dm = M.coact(m);
        TensorElement expect(M.coact_space);
        for (const auto& [t, c] : m.terms) {
            WordTuple nt;
            nt.push_back(Word{});
            for (const auto& w : t) nt.push_back(w);
            expect.add_term(nt, c);
        }
        images.push_back(cq->reduce(dm - expect));
    }
    auto kers = kernel_basis(images);
    for (const auto& combo : kers) {
        TensorElement e(M.space);
        for (const auto& [i, c] : combo) e = e + M.basis[i] * c;
        out.coinvariants.push_back(e);
    }
    out.rep.add("coinvariants_computed", true, std::to_string(out.coinvariants.size()) + " dim",
                d);

    // beta(alpha(m)) = m : alpha(m) = tau1(m(-1)) (x) tau2(m(-1)) m(0), beta = action
    bool ok = true;
    std::string wit;
    for (const auto& m : M.basis) {
        TensorElement dm = M.coact(m);
        TensorElement acc(M.space);
        for (const auto& [t, c] : dm.terms) {
            // t[0] is the L-leg; the rest is the module part
            TensorElement tr = P->translate_word(t[0]);
            TensorElement m0(M.space);
            WordTuple rest(t.begin() + 1, t.end());
            m0.add_term(rest, Scalar(1));
            for (const auto& [tt, cc] : tr.terms)
                acc = acc + M.act(tt[0], M.act(tt[1], m0)) * (c * cc);
        }
        if (!M.space->equal_mod_relations(acc, m)) {
            ok = false;
            wit = m.to_string();
            break;
        }
    }
    out.rep.add("counit_of_adjunction", ok, wit, d);

    // alpha(beta(p (x) eta)) = p (x) eta for P-words p and coinvariants eta,
    // compared in the key space (P-word, coinvariant index) modulo N-moves
    bool ok2 = true;
    std::string wit2;
    {
        KeyIndex<std::pair<Word, long>> keys;
        auto expand_in_coinv = [&](const TensorElement& z, SparseVec* coords) {
            std::vector<SparseVec> cols;
            KeyIndex<WordTuple> tk;
            for (const auto& e : out.coinvariants) {
                SparseVec v;
                for (const auto& [t, c] : e.terms) v[tk.intern(t)] = c;
                cols.push_back(v);
            }
            SparseVec b;
            for (const auto& [t, c] : z.terms) {
                long id = tk.find(t);
                if (id < 0) return false;
                b[id] = c;
            }
            return solve_in_span(cols, b, coords);
        };
        for (const Word& pw : P->P->normal_words(std::min(d, 2))) {
            for (size_t ei = 0; ei < out.coinvariants.size() && ok2; ++ei) {
                TensorElement m = M.act(pw, out.coinvariants[ei]);
                TensorElement dm = M.coact(m);
                SparseVec got;
                bool expandable = true;
                TensorElement acc_first(M.space);
                for (const auto& [t, c] : dm.terms) {
                    TensorElement tr = P->translate_word(t[0]);
                    TensorElement m0(M.space);
                    WordTuple rest(t.begin() + 1, t.end());
                    m0.add_term(rest, Scalar(1));
                    for (const auto& [tt, cc] : tr.terms) {
                        TensorElement second = M.act(tt[1], m0);
                        SparseVec coords;
                        if (!expand_in_coinv(second, &coords)) {
                            expandable = false;
                            break;
                        }
                        for (const auto& [ci, cv] : coords)
                            vec_add(got, SparseVec{{keys.intern({tt[0], ci}), Scalar(1)}},
                                    c * cc * cv);
                    }
                    if (!expandable) break;
                }
                if (!expandable) {
                    ok2 = false;
                    wit2 = "second leg not coinvariant at " + P->P->word_name(pw);
                    break;
                }
                SparseVec expect{{keys.intern({pw, (long)ei}), Scalar(1)}};
                vec_add(got, expect, Scalar(-1));
                if (!got.empty()) {
                    ok2 = false;
                    wit2 = P->P->word_name(pw);
                }
            }
            if (!ok2) break;
        }
    }
    out.rep.add("unit_of_adjunction", ok2, wit2, d);
    return out;
}

// ---------------------------------------------------------------------------

CotensorResult cotensor(const CmdPtr& V, const CmdPtr& W, int d) {
    CotensorResult out;
    out.rep.title = "cotensor." + V->name + "." + W->name;
    if (V->left_side || !W->left_side)
        throw Error("cotensor expects a right comodule and a left comodule");
    auto L = V->L;
    out.space = TensorSpace::make(
        "cot." + V->name + "." + W->name, {V->P, W->P},
        {{L->base, act(0, true, V->unit_embed), act(1, false, W->unit_embed)}});
    auto triple = TensorSpace::make(
        "cot3." + V->name + "." + W->name, {V->P, L->total, W->P},
        {{L->base, act(0, true, V->unit_embed), act(1, false, L->src)},
         {L->base, act(1, false, L->tgt), act(2, false, W->unit_embed)}});

    int maxc = 1;
    for (const auto& e : V->coaction) maxc = std::max(maxc, e.max_degree());
    for (const auto& e : W->coaction) maxc = std::max(maxc, e.max_degree());
    int cap = d * maxc + d;
    auto pair_q = out.space->quotient(d);
    auto tq = triple->quotient(cap);

    std::vector<WordTuple> basis = pair_q->basis();
    std::vector<SparseVec> images;
    for (const auto& t : basis) {
        TensorElement img(triple);
        TensorElement dv = V->coact_word(t[0]);
        for (const auto& [tt, cc] : dv.terms) img.add_term({tt[0], tt[1], t[1]}, cc);
        TensorElement dw = W->coact_word(t[1]);
        for (const auto& [tt, cc] : dw.terms) img.add_term({t[0], tt[0], tt[1]}, -cc);
        images.push_back(tq->reduce(img));
    }
    auto kers = kernel_basis(images);
    for (const auto& combo : kers) {
        TensorElement e(out.space);
        for (const auto& [i, c] : combo) e.add_term(basis[i], c);
        out.basis.push_back(e);
    }
    out.rep.add("basis_computed", true, std::to_string(out.basis.size()) + " dim", d);
    return out;
}

Report cotensor_monoidal_xi(const CmdPtr& P, const CmdPtr& V, const CmdPtr& W, int d) {
    Report rep;
    rep.title = "cotensor_xi." + P->name;
    if (!P->L->base->is_trivial()) {
        rep.add("trivial_base", false, "xi maps implemented over the ground field");
        return rep;
    }
    if (!P->translation) {
        rep.add("anti_translation_present", false, "");
        return rep;
    }
    CotensorResult PV = cotensor(P, V, d);
    CotensorResult PW = cotensor(P, W, d);

    // target: P box (V (x) W), cut out inside [P, V.P, W.P]
    auto L = P->L;
    auto sp_pvw = TensorSpace::make("pvw", {P->P, V->P, W->P});
    auto sp_plvw = TensorSpace::make("plvw", {P->P, L->total, V->P, W->P});
    int maxc = 2;
    int cap = 2 * d * maxc + 2;
    auto q_pvw = sp_pvw->quotient(2 * d);
    auto q_plvw = sp_plvw->quotient(cap);
    std::vector<WordTuple> tbasis = q_pvw->basis();
    std::vector<SparseVec> timages;
    for (const auto& t : tbasis) {
        TensorElement img(sp_plvw);
        TensorElement dp = P->coact_word(t[0]);
        for (const auto& [tt, cc] : dp.terms) img.add_term({tt[0], tt[1], t[1], t[2]}, cc);
        TensorElement dv = V->coact_word(t[1]);
        TensorElement dw = W->coact_word(t[2]);
        for (const auto& [tv, cv] : dv.terms)
            for (const auto& [tw, cw] : dw.terms) {
                NcPoly prod = L->total->nf(NcPoly::word(tv[0]) * NcPoly::word(tw[0]));
                for (const auto& [u, cu] : prod.terms)
                    img.add_term({t[0], u, tv[1], tw[1]}, -(cv * cw * cu));
            }
        timages.push_back(q_plvw->reduce(img));
    }
    auto tkers = kernel_basis(timages);
    std::vector<TensorElement> target;
    for (const auto& combo : tkers) {
        TensorElement e(sp_pvw);
        for (const auto& [i, c] : combo) e.add_term(tbasis[i], c);
        target.push_back(e);
    }
    rep.add("target_basis", true, std::to_string(target.size()) + " dim", d);

    // xi on the pair basis
    KeyIndex<WordTuple> tk;
    auto tovec = [&](const TensorElement& e) {
        SparseVec v;
        for (const auto& [t, c] : e.terms) v[tk.intern(t)] = c;
        return v;
    };
    std::vector<SparseVec> target_cols;
    for (const auto& e : target) target_cols.push_back(tovec(e));

    bool ok_fwd = true;
    std::string wfwd;
    std::vector<std::pair<int, int>> pair_index;
    std::vector<SparseVec> xi_cols;
    for (size_t i = 0; i < PV.basis.size(); ++i)
        for (size_t j = 0; j < PW.basis.size(); ++j) {
            TensorElement img(sp_pvw);
            for (const auto& [a, ca] : PV.basis[i].terms)
                for (const auto& [b, cb] : PW.basis[j].terms) {
                    NcPoly prod = P->P->nf(NcPoly::word(a[0]) * NcPoly::word(b[0]));
                    for (const auto& [u, cu] : prod.terms)
                        img.add_term({u, a[1], b[1]}, ca * cb * cu);
                }
            SparseVec coords;
            if (!solve_in_span(target_cols, tovec(img), &coords)) {
                ok_fwd = false;
                wfwd = img.to_string();
            }
            pair_index.push_back({(int)i, (int)j});
            xi_cols.push_back(tovec(img));
        }
    rep.add("xi_lands_in_cotensor", ok_fwd, wfwd, d);

    // xi inverse on the target basis: p <> (v (x) w) ->
    //   (tau1(v(-1)) <> v(0)) (x) (tau2(v(-1)) p <> w)
    bool ok_inv = true;
    std::string winv;
    KeyIndex<std::pair<WordTuple, WordTuple>> pk;
    auto pair_to_vec = [&](const TensorElement& a, const TensorElement& b) {
        SparseVec v;
        for (const auto& [ta, ca] : a.terms)
            for (const auto& [tb, cb] : b.terms)
                vec_add(v, SparseVec{{pk.intern({ta, tb}), Scalar(1)}}, ca * cb);
        return v;
    };
    std::vector<SparseVec> pair_cols;
    for (auto [i, j] : pair_index) pair_cols.push_back(pair_to_vec(PV.basis[i], PW.basis[j]));

    for (const auto& e : target) {
        SparseVec img;
        for (const auto& [t, c] : e.terms) {
            TensorElement dv = V->coact_word(t[1]);
            for (const auto& [tv, cv] : dv.terms) {
                TensorElement tr = P->translate_word(tv[0]);
                for (const auto& [tt, cc] : tr.terms) {
                    // first pair: (tau1 , v0); second: (tau2 * p , w)
                    NcPoly second = P->P->nf(NcPoly::word(tt[1]) * NcPoly::word(t[0]));
                    for (const auto& [u, cu] : second.terms) {
                        WordTuple f{tt[0], tv[1]};
                        WordTuple s{u, t[2]};
                        vec_add(img, SparseVec{{pk.intern({f, s}), Scalar(1)}},
                                c * cv * cc * cu);
                    }
                }
            }
        }
        SparseVec coords;
        if (!solve_in_span(pair_cols, img, &coords)) {
            ok_inv = false;
            winv = e.to_string();
            break;
        }
        // round trip: xi(coords) must reproduce e
        SparseVec back;
        for (const auto& [i, c] : coords) vec_add(back, xi_cols[i], c);
        vec_add(back, tovec(e), Scalar(-1));
        if (!back.empty()) {
            ok_inv = false;
            winv = e.to_string();
            break;
        }
    }
    rep.add("xi_inverse_roundtrip", ok_inv, winv, d);

    // injectivity of xi (mutual inverse on the pair side)
    auto xi_ker = kernel_basis(xi_cols);
    rep.add("xi_injective", xi_ker.empty(), "", d);
    return rep;
}

}  // namespace hopfgal
