#pragma once

#include <optional>

#include "hopfgal/report.hpp"
#include "hopfgal/tensor.hpp"

namespace hopfgal {

// Left bialgebroid data on a finitely presented total algebra. Structure maps
// are given on generators and extended: the coproduct multiplicatively, the
// counit as a left character, the Galois-map inverses anti-multiplicatively.
class Bialgebroid : public std::enable_shared_from_this<Bialgebroid> {
  public:
    std::string name;
    PresPtr total;   // L
    PresPtr base;    // B; the trivial presentation models the ground field
    MorPtr src;      // s : B -> L
    MorPtr tgt;      // t : B-bar -> L (anti algebra map)
    std::vector<TensorElement> coprod;   // Delta on generators, in L <>B L
    std::vector<NcPoly> counit;          // epsilon on generators, in B

    // optional left/anti-left Hopf inverse data on generators
    std::optional<std::vector<TensorElement>> hopf_pm;   // X+ (x)Bbar X-
    std::optional<std::vector<TensorElement>> hopf_mp;   // X[-] (x)^B X[+]

    // spaces
    SpacePtr sp_diamond;    // L <>B L
    SpacePtr sp_obar;       // L (x)Bbar L
    SpacePtr sp_upper;      // L (x)^B L
    SpacePtr sp_triple;     // L xB L xB L (flat triple space)

    static std::shared_ptr<Bialgebroid> create(std::string name, PresPtr total, PresPtr base,
                                               MorPtr s, MorPtr t,
                                               std::vector<TensorElement> coprod,
                                               std::vector<NcPoly> counit);

    // structure-map extensions
    TensorElement delta(const NcPoly& x) const;
    TensorElement delta_word(const Word& w) const;
    NcPoly eps(const NcPoly& x) const;   // valued in B
    NcPoly eps_in_total(const NcPoly& x) const { return total->nf(src->apply(eps(x))); }
    NcPoly s_of(const NcPoly& b) const { return src->apply(b); }
    NcPoly t_of(const NcPoly& b) const { return tgt->apply(b); }

    TensorElement lambda_inv_word(const Word& w) const;   // X+ (x) X-
    TensorElement lambda_inv(const NcPoly& x) const;
    TensorElement mu_inv_word(const Word& w) const;       // X[-] (x) X[+]
    TensorElement mu_inv(const NcPoly& x) const;

    // lambda(X (x)Bbar Y) = X1 (x) X2 Y   and its inverse; mu likewise
    TensorElement lambda_of(const TensorElement& e) const;
    TensorElement lambda_inv_of(const TensorElement& e) const;
    TensorElement mu_of(const TensorElement& e) const;
    TensorElement mu_inv_of(const TensorElement& e) const;

    // iterated coproduct legs X1 (x) X2 (x) X3 in the flat triple space
    TensorElement delta2_left(const NcPoly& x) const;    // alpha  (Delta x id) Delta
    TensorElement delta2_right(const NcPoly& x) const;   // alpha' (id x Delta) Delta

    bool is_hopf() const { return hopf_pm.has_value(); }
    bool is_anti_hopf() const { return hopf_mp.has_value(); }

    // random degree-<=d word of the total algebra (for seeded spot checks)
    Word random_word(int d, unsigned long long& state) const;
};

using BgdPtr = std::shared_ptr<Bialgebroid>;

Report check_bialgebroid(const Bialgebroid& L, int d, unsigned seed = 1);
Report check_left_hopf(const Bialgebroid& L, int d);
Report check_anti_left_hopf(const Bialgebroid& L, int d);
Report check_mixed_hopf_identities(const Bialgebroid& L, int d);

// Finite-dimensional Yetter-Drinfeld module data over a presented bialgebroid.
struct YDData {
    int dim = 0;
    // action[g] : column j -> image of basis vector j (SparseVec over basis)
    std::vector<std::vector<SparseVec>> action;
    // coaction of basis vector j: basis index -> coefficient in L
    std::vector<std::map<int, NcPoly>> coaction;

    SparseVec act_word(const Bialgebroid& L, const Word& w, int j) const;
    SparseVec act_poly(const Bialgebroid& L, const NcPoly& p, int j) const;
};

Report yd_check(const Bialgebroid& L, const YDData& M);

}  // namespace hopfgal
