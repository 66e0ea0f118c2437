#pragma once

#include <memory>
#include <optional>
#include <set>

#include "hopfgal/linalg.hpp"
#include "hopfgal/ncpoly.hpp"

namespace hopfgal {

using WordTuple = std::vector<Word>;

int tuple_degree(const WordTuple& t);

struct TupleLess {
    bool operator()(const WordTuple& a, const WordTuple& b) const {
        int da = tuple_degree(a), db = tuple_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// One-sided multiplication by the image of a base generator inside one factor.
struct TensorAction {
    int factor = 0;
    bool right_mult = false;
    MorPtr map;   // base -> factor algebra
};

// For every base generator g: lhs(g) applied to a tuple is identified with
// rhs(g) applied to it. This covers all the balanced tensor products of the
// catalog; the two actions may touch non-adjacent factors.
struct TensorBalancing {
    PresPtr base;
    TensorAction lhs, rhs;
};

// Membership condition of a Takeuchi-type subspace: a(g)(x) == b(g)(x) in the
// quotient, for every base generator g.
struct TensorTakeuchi {
    PresPtr base;
    TensorAction a, b;
};

class TensorSpace;
using SpacePtr = std::shared_ptr<const TensorSpace>;

class TensorElement {
  public:
    SpacePtr space;
    std::map<WordTuple, Scalar, TupleLess> terms;

    TensorElement() = default;
    explicit TensorElement(SpacePtr s) : space(std::move(s)) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const WordTuple& t, const Scalar& c);
    int max_degree() const;

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const Scalar& c) const;
    TensorElement operator-() const;

    // componentwise product (Takeuchi-product algebra structure)
    TensorElement mul(const TensorElement& o) const;

    // literal term-by-term equality of normal-form representatives
    bool identical(const TensorElement& o) const { return terms == o.terms; }

    std::string to_string() const;
};

class TensorQuotient;

class TensorSpace : public std::enable_shared_from_this<TensorSpace> {
  public:
    std::string name;
    std::vector<PresPtr> factors;
    std::vector<TensorBalancing> relations;
    std::vector<TensorTakeuchi> takeuchi;

    static SpacePtr make(std::string name, std::vector<PresPtr> factors,
                         std::vector<TensorBalancing> relations = {},
                         std::vector<TensorTakeuchi> takeuchi = {});

    TensorElement zero() const { return TensorElement(shared_from_this()); }
    TensorElement unit() const;   // 1 x 1 x ... x 1
    TensorElement pure(const std::vector<NcPoly>& legs, const Scalar& c = Scalar(1)) const;

    // nf every slot of every term
    TensorElement normalize(const TensorElement& e) const;

    // apply a one-sided action for base generator g
    TensorElement apply(const TensorAction& act, int gen, const TensorElement& e) const;

    // in-place replacement of one factor leg by an NcPoly (distributes)
    TensorElement splice(const TensorElement& e, int factor,
                         const std::function<NcPoly(const Word&)>& f) const;

    // exact equality modulo the balancing relations, built from the local
    // closure of the supports; sound, and exact whenever the needed moves
    // start from the supports (rounds bounds the closure depth)
    bool equal_mod_relations(const TensorElement& a, const TensorElement& b, int rounds = 4,
                             std::string* witness = nullptr) const;
    bool is_zero_mod_relations(const TensorElement& a, int rounds = 4) const;

    // Takeuchi membership: all conditions reduce to zero; on failure returns
    // the witness base-generator name
    bool takeuchi_member(const TensorElement& e, int rounds, std::string* witness) const;

    std::shared_ptr<TensorQuotient> quotient(int degree_cap) const;

  private:
    mutable std::map<int, std::shared_ptr<TensorQuotient>> quot_cache_;
};

// Full flat-basis quotient of a tensor space at bounded total degree.
class TensorQuotient {
  public:
    TensorQuotient(const TensorSpace& space, int degree_cap);

    SparseVec reduce(const TensorElement& e) const;
    bool is_zero(const TensorElement& e) const { return reduce(e).empty(); }
    bool equal(const TensorElement& a, const TensorElement& b) const {
        return is_zero(a - b);
    }
    // representative tuples spanning the quotient (non-pivot columns)
    std::vector<WordTuple> basis() const;
    const std::vector<WordTuple>& tuples() const { return tuples_; }
    long tuple_id(const WordTuple& t) const;
    int degree_cap() const { return cap_; }
    bool unverified = false;   // set when a factor's confluence is unknown

    TensorElement from_coords(const SparseVec& v, SpacePtr space) const;

  private:
    const TensorSpace& space_;
    int cap_;
    std::vector<WordTuple> tuples_;
    std::map<WordTuple, long, TupleLess> index_;
    RowSpace rel_;
};

// Flat basis with confluence verification (the public flat_basis operation).
struct FlatBasis {
    std::vector<WordTuple> tuples;
    bool unverified = false;
    std::shared_ptr<TensorQuotient> quot;
};
FlatBasis flat_basis(const SpacePtr& space, int d);

}  // namespace hopfgal
