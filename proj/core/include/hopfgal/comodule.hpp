#pragma once

#include <functional>

#include "hopfgal/bialgebroid.hpp"

namespace hopfgal {

// Comodule algebra over a presented left bialgebroid. Left side: coaction in
// L <>B P, P a B-ring via unit_embed. Right side: coaction in P <>B L, P a
// Bbar-ring via unit_embed.
class ComoduleAlgebra : public std::enable_shared_from_this<ComoduleAlgebra> {
  public:
    std::string name;
    BgdPtr L;
    PresPtr P;
    bool left_side = true;
    MorPtr unit_embed;                    // B -> P
    std::vector<TensorElement> coaction;  // per P-generator

    // coinvariant subalgebra: presentation + embedding into P (may be the
    // trivial presentation when N = k)
    PresPtr Npres;
    MorPtr Nembed;

    std::optional<std::vector<TensorElement>> translation;  // tau on L-gens, in P (x)N P
    // reverse-coaction data per P-generator:
    //   left comodule:  p[1] (x)^B p[0]  in  L (x)^B P
    //   right comodule: p[0] (x)Bbar p[1]  in  P (x)Bbar L
    std::optional<std::vector<TensorElement>> regularity;

    SpacePtr sp_coact;    // L <> P or P <> L
    SpacePtr sp_PP;       // P (x)N P
    SpacePtr sp_reverse;  // L (x)^B P or P (x)Bbar L

    static std::shared_ptr<ComoduleAlgebra> create(std::string name, BgdPtr L, PresPtr P,
                                                   bool left_side, MorPtr unit_embed,
                                                   std::vector<TensorElement> coaction,
                                                   PresPtr Npres, MorPtr Nembed);

    TensorElement coact_word(const Word& w) const;
    TensorElement coact(const NcPoly& p) const;
    // translation map extension (anti-multiplicative twisted product)
    TensorElement translate_word(const Word& w) const;
    TensorElement translate(const NcPoly& x) const;
    TensorElement reverse_word(const Word& w) const;
    TensorElement reverse_of(const NcPoly& p) const;

    NcPoly embed_base(const NcPoly& b) const { return unit_embed->apply(b); }
    NcPoly embed_N(const NcPoly& n) const { return Nembed->apply(n); }

    // canonical map on a pair representative
    //   left:  can(p (x) q) = p(-1) <> p(0) q     in L <> P
    //   right: can(p (x) q) = p(0) q <> p(1)      in P <> L
    TensorElement can_pair(const NcPoly& p, const NcPoly& q) const;

    Report check_comodule(int d) const;
};

using CmdPtr = std::shared_ptr<ComoduleAlgebra>;

// The bialgebroid as a (left or right) comodule algebra over itself; the
// translation map is the lambda- (resp. mu-) inverse.
CmdPtr self_comodule(const BgdPtr& L, bool left_side);

struct CoinvResult {
    std::vector<NcPoly> basis;
    bool unverified = false;
};
CoinvResult coinvariants(const ComoduleAlgebra& P, int d);

struct GaloisReport {
    Report rep;
    bool injective = false;
    int surjective_up_to = -1;   // image contains all target basis vectors of degree <= this
    int filtration_loss = 0;
    bool bijective = false;      // at degree d
};
GaloisReport galois_check(const ComoduleAlgebra& P, int d);

Report translation_identity_suite(const ComoduleAlgebra& P, int d);

struct ReverseResult {
    std::vector<TensorElement> data;   // per P-generator, in sp_reverse
    Report rep;
};
// solves the regularity map psi/phi for the reverse coaction at degree <= d
ReverseResult derive_reverse_coaction(const ComoduleAlgebra& P, int d);

struct HopfInverseResult {
    std::vector<TensorElement> plus_minus;   // on L-generators, in L (x)Bbar L
    Report rep;
};
HopfInverseResult derive_hopf_inverse(const ComoduleAlgebra& P, int d);

// ---- Hopf modules --------------------------------------------------------

// Relative Hopf module in ^L_P M, realized inside a tensor space.
struct HopfModule {
    SpacePtr space;   // ambient space of the module elements
    std::function<TensorElement(const TensorElement&)> coact;   // into [L | space]
    SpacePtr coact_space;
    std::function<TensorElement(const Word&, const TensorElement&)> act;   // P-word action
    std::vector<TensorElement> basis;   // spanning elements, degree filtered
};

HopfModule hopf_module_self(const CmdPtr& P, int d);
HopfModule hopf_module_tensor_table(const CmdPtr& P, const std::vector<std::map<int, NcPoly>>& V,
                                    int d);
HopfModule hopf_module_can_target(const CmdPtr& P, int d);

struct DecomposeResult {
    std::vector<TensorElement> coinvariants;
    Report rep;
};
DecomposeResult hopf_module_decompose(const CmdPtr& P, const HopfModule& M, int d);

// ---- cotensor products ----------------------------------------------------

// V a right comodule algebra, W a left comodule algebra over the same L.
struct CotensorResult {
    SpacePtr space;   // [V.P, W.P] with the <> balancing
    std::vector<TensorElement> basis;
    Report rep;
};
CotensorResult cotensor(const CmdPtr& V, const CmdPtr& W, int d);

// monoidal structure maps xi / xi^-1 for P anti-right Galois (trivial base)
Report cotensor_monoidal_xi(const CmdPtr& P, const CmdPtr& V, const CmdPtr& W, int d);

}  // namespace hopfgal
