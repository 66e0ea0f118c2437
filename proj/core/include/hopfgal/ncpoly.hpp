#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hopfgal/scalar.hpp"

namespace hopfgal {

// A word is a sequence of generator indices of one presentation.
using Word = std::vector<int>;

struct WordLess {
    // degree first, then lexicographic by generator precedence (= index)
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class Presentation;

// Element of the free algebra on a presentation's generators.
class NcPoly {
  public:
    std::map<Word, Scalar, WordLess> terms;

    NcPoly() = default;
    explicit NcPoly(const Scalar& c) {
        if (!c.is_zero()) terms[Word{}] = c;
    }
    static NcPoly one() { return NcPoly(Scalar(1)); }
    static NcPoly word(const Word& w, const Scalar& c = Scalar(1)) {
        NcPoly p;
        if (!c.is_zero()) p.terms[w] = c;
        return p;
    }
    static NcPoly gen(int g, const Scalar& c = Scalar(1)) { return word(Word{g}, c); }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& w, const Scalar& c);

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly operator*(const Scalar& c) const;
    NcPoly operator-() const;
    bool operator==(const NcPoly& o) const { return terms == o.terms; }
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    int degree() const { return terms.empty() ? 0 : (int)terms.rbegin()->first.size(); }

    std::string to_string(const Presentation& pres) const;
};

struct RewriteRule {
    Word lhs;     // a single word
    NcPoly rhs;   // degree(rhs) <= |lhs|
};

struct GeneratorInfo {
    std::string name;
    int star = -1;                 // partner index, or -1 if none declared
    bool star_self = false;        // hermitian generator
    std::vector<Rational> kdeg;    // optional Z^m multidegree (as rationals for torus weights)
};

struct ConfluenceReport {
    struct Ambiguity {
        Word word;
        int rule_a = 0, rule_b = 0;
        NcPoly nf_a, nf_b;
        bool ok = false;
    };
    std::vector<Ambiguity> ambiguities;
    bool pass = true;
    int degree = 0;
};

// Finitely presented involutive algebra with oriented, degree-non-increasing
// rewrite rules. Immutable after construction.
class Presentation {
  public:
    std::string name;
    std::vector<GeneratorInfo> gens;
    std::vector<RewriteRule> rules;
    std::vector<std::string> assumptions;   // declared assumption flags
    int kdim = 0;                           // dimension of the grading lattice

    Presentation() = default;

    int gen_index(const std::string& gname) const;
    int add_gen(const std::string& gname);
    void set_star_pair(const std::string& a, const std::string& b);
    void add_rule(const Word& lhs, const NcPoly& rhs);

    bool is_trivial() const { return gens.empty(); }   // the ground field k

    // normal form; throws Error with the offending word if the step budget
    // is exhausted
    NcPoly nf(const NcPoly& p, long budget = 2000000) const;
    NcPoly nf_word(const Word& w, long budget = 2000000) const;

    // star of a polynomial: reverse words, map generators to their partners,
    // star the coefficients; result is nf-reduced
    NcPoly star(const NcPoly& p) const;
    bool has_star() const;

    // K-multidegree of a word (sum of generator degrees); empty if ungraded
    std::vector<Rational> kdegree(const Word& w) const;
    bool kgraded() const { return kdim > 0; }

    // all normal-form words of degree <= d, sorted
    const std::vector<Word>& normal_words(int d) const;

    ConfluenceReport check_local_confluence(int degree_bound) const;

    // check that star maps every rule to a consequence of the rules
    bool star_compatible() const;

    std::string word_name(const Word& w) const;

  private:
    mutable std::map<int, std::vector<Word>> normal_cache_;
};

using PresPtr = std::shared_ptr<const Presentation>;

// Algebra map (or anti-map) between presentations, defined on generators.
class Morphism {
  public:
    PresPtr source, target;
    std::vector<NcPoly> images;   // indexed by source generator
    bool anti = false;            // reverses products (e.g. target maps from B-bar)
    std::string name;

    Morphism() = default;
    Morphism(PresPtr src, PresPtr tgt, std::vector<NcPoly> imgs, bool anti_ = false,
             std::string n = "");

    static Morphism identity(PresPtr p);

    NcPoly apply(const NcPoly& p) const;
    NcPoly apply_word(const Word& w) const;

    // every source relation must map to zero in the target
    bool well_defined(std::string* witness = nullptr) const;

    int max_image_degree() const;
};

using MorPtr = std::shared_ptr<const Morphism>;

}  // namespace hopfgal
