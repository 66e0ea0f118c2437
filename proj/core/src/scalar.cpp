#include "hopfgal/scalar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hopfgal {

PhaseMono mono_mul(const PhaseMono& a, const PhaseMono& b) {
    PhaseMono r = a;
    for (const auto& [name, e] : b) {
        int v = (r.count(name) ? r[name] : 0) + e;
        if (v == 0)
            r.erase(name);
        else
            r[name] = v;
    }
    return r;
}

PhaseMono mono_inv(const PhaseMono& a) {
    PhaseMono r;
    for (const auto& [name, e] : a) r[name] = -e;
    return r;
}

bool mono_less(const PhaseMono& a, const PhaseMono& b) {
    long da = 0, db = 0;
    for (const auto& [n, e] : a) da += e;
    for (const auto& [n, e] : b) db += e;
    if (da != db) return da < db;
    return a < b;
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms[PhaseMono{}] = c;
}

LaurentPoly LaurentPoly::mono(const PhaseMono& m, const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.terms[m] = c;
    return p;
}

void LaurentPoly::add_term(const PhaseMono& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms) r.terms[m] = -c;
    return r;
}

LaurentPoly LaurentPoly::star() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms) r.add_term(mono_inv(m), c);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading terms first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Rational c = it->second;
        if (!first) {
            os << (c > 0 ? " + " : " - ");
            if (c < 0) c = -c;
        } else if (c < 0 && it->first.empty()) {
            // sign printed as part of the coefficient below
        }
        first = false;
        bool coeff_one = (c == 1 || c == -1);
        bool printed = false;
        if (!coeff_one || it->first.empty()) {
            os << c.str();
            printed = true;
        } else if (c == -1) {
            os << "-";
        }
        for (const auto& [n, e] : it->first) {
            if (printed) os << "*";
            os << n;
            if (e != 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

namespace {

// ---- helpers for gcd over ordinary polynomials -------------------------

std::vector<std::string> poly_vars(const LaurentPoly& p) {
    std::set<std::string> s;
    for (const auto& [m, c] : p.terms)
        for (const auto& [n, e] : m) s.insert(n);
    return {s.begin(), s.end()};
}

bool is_constant(const LaurentPoly& p) {
    return p.terms.empty() || (p.terms.size() == 1 && p.terms.begin()->first.empty());
}

// view p as univariate in var: exponent -> coefficient polynomial
std::map<int, LaurentPoly> univariate_view(const LaurentPoly& p, const std::string& var) {
    std::map<int, LaurentPoly> v;
    for (const auto& [m, c] : p.terms) {
        PhaseMono rest = m;
        int e = 0;
        auto it = rest.find(var);
        if (it != rest.end()) {
            e = it->second;
            rest.erase(it);
        }
        v[e].add_term(rest, c);
    }
    return v;
}

LaurentPoly from_univariate(const std::map<int, LaurentPoly>& v, const std::string& var) {
    LaurentPoly p;
    for (const auto& [e, coef] : v) {
        PhaseMono shift;
        if (e != 0) shift[var] = e;
        p = p + coef * LaurentPoly::mono(shift);
    }
    return p;
}

int uni_deg(const std::map<int, LaurentPoly>& v) { return v.empty() ? -1 : v.rbegin()->first; }

LaurentPoly shift_var(const LaurentPoly& p, const std::string& var, int by) {
    if (by == 0) return p;
    PhaseMono m;
    m[var] = by;
    return p * LaurentPoly::mono(m);
}

LaurentPoly leading_monic(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Rational lc = p.terms.rbegin()->second;
    LaurentPoly r;
    for (const auto& [m, c] : p.terms) r.terms[m] = c / lc;
    return r;
}

}  // namespace

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error("poly_divexact: division by zero polynomial");
    LaurentPoly rem = a, q;
    while (!rem.is_zero()) {
        const auto& [ma, ca] = *rem.terms.rbegin();
        const auto& [mb, cb] = *b.terms.rbegin();
        // ma / mb must have non-negative exponents
        PhaseMono mq = mono_mul(ma, mono_inv(mb));
        for (const auto& [n, e] : mq)
            if (e < 0) throw Error("poly_divexact: not divisible");
        Rational cq = ca / cb;
        q.add_term(mq, cq);
        rem = rem - b * LaurentPoly::mono(mq, cq);
    }
    return q;
}

static LaurentPoly poly_gcd_rec(LaurentPoly a, LaurentPoly b);

static LaurentPoly list_gcd(const std::vector<LaurentPoly>& xs) {
    LaurentPoly g;
    for (const auto& x : xs) {
        g = g.is_zero() ? x : poly_gcd_rec(g, x);
        if (is_constant(g) && !g.is_zero()) return LaurentPoly(Rational(1));
    }
    return g;
}

// primitive pseudo-remainder sequence gcd; inputs ordinary polynomials
static LaurentPoly poly_gcd_rec(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return leading_monic(b);
    if (b.is_zero()) return leading_monic(a);
    if (is_constant(a) || is_constant(b)) return LaurentPoly(Rational(1));

    auto vars_a = poly_vars(a);
    auto vars_b = poly_vars(b);
    std::string var = vars_a.front();
    if (std::find(vars_b.begin(), vars_b.end(), var) == vars_b.end()) {
        // var does not occur in b: gcd divides the content of a w.r.t. var
        auto ua = univariate_view(a, var);
        std::vector<LaurentPoly> coeffs;
        for (auto& [e, c] : ua) coeffs.push_back(c);
        return poly_gcd_rec(list_gcd(coeffs), b);
    }

    auto ua = univariate_view(a, var);
    auto ub = univariate_view(b, var);
    std::vector<LaurentPoly> ca, cb;
    for (auto& [e, c] : ua) ca.push_back(c);
    for (auto& [e, c] : ub) cb.push_back(c);
    LaurentPoly cont_a = list_gcd(ca), cont_b = list_gcd(cb);
    LaurentPoly cont_g = poly_gcd_rec(cont_a, cont_b);

    LaurentPoly pa = poly_divexact(a, cont_a);
    LaurentPoly pb = poly_divexact(b, cont_b);

    // Euclid with pseudo-division, keeping primitive parts
    while (true) {
        auto va = univariate_view(pa, var);
        auto vb = univariate_view(pb, var);
        if (uni_deg(va) < uni_deg(vb)) {
            std::swap(pa, pb);
            std::swap(va, vb);
        }
        if (pb.is_zero()) break;
        // pseudo remainder of pa by pb in var
        LaurentPoly lead_b = vb.rbegin()->second;
        int db = uni_deg(vb);
        LaurentPoly rem = pa;
        while (true) {
            auto vr = univariate_view(rem, var);
            int dr = uni_deg(vr);
            if (rem.is_zero() || dr < db) break;
            LaurentPoly lead_r = vr.rbegin()->second;
            // rem = rem*lead_b - lead_r * x^(dr-db) * pb
            rem = rem * lead_b - shift_var(pb, var, dr - db) * lead_r;
        }
        pa = pb;
        if (rem.is_zero()) {
            pb = rem;
            break;
        }
        auto vr = univariate_view(rem, var);
        std::vector<LaurentPoly> cr;
        for (auto& [e, c] : vr) cr.push_back(c);
        pb = poly_divexact(rem, list_gcd(cr));
    }
    return leading_monic(cont_g * pa);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) { return poly_gcd_rec(a, b); }

// ---- Scalar -------------------------------------------------------------

Scalar::Scalar(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw Error("Scalar: zero denominator");
    canonicalize();
}

Scalar Scalar::param(const std::string& name, int exp) {
    PhaseMono m;
    if (exp != 0) m[name] = exp;
    return Scalar(LaurentPoly::mono(m));
}

bool Scalar::is_one() const {
    return num_.terms.size() == 1 && num_.terms.begin()->first.empty() &&
           num_.terms.begin()->second == 1 && den_ == LaurentPoly(Rational(1));
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return;
    }
    // shift so the denominator becomes an ordinary polynomial with zero
    // minimum exponent in every variable; the numerator absorbs the shift
    std::map<std::string, int> den_min;
    for (const auto& [m, c] : den_.terms) {
        std::set<std::string> seen;
        for (const auto& [n, e] : m) {
            auto it = den_min.find(n);
            den_min[n] = (it == den_min.end()) ? e : std::min(it->second, e);
            seen.insert(n);
        }
        // a term missing the variable has exponent 0 there
        for (auto& [n, e] : den_min)
            if (!m.count(n)) e = std::min(e, 0);
    }
    PhaseMono shift;
    for (const auto& [n, e] : den_min)
        if (e != 0) shift[n] = -e;
    if (!shift.empty()) {
        LaurentPoly s = LaurentPoly::mono(shift);
        num_ = num_ * s;
        den_ = den_ * s;
    }
    // split numerator into monomial prefactor * ordinary polynomial
    std::map<std::string, int> num_min;
    bool first = true;
    for (const auto& [m, c] : num_.terms) {
        if (first) {
            for (const auto& [n, e] : m) num_min[n] = e;
            first = false;
            continue;
        }
        for (auto& [n, e] : num_min) {
            auto it = m.find(n);
            e = std::min(e, it == m.end() ? 0 : it->second);
        }
        for (const auto& [n, e] : m)
            if (!num_min.count(n)) num_min[n] = std::min(0, e);
    }
    PhaseMono pre;
    for (const auto& [n, e] : num_min)
        if (e != 0) pre[n] = e;
    LaurentPoly num_poly = num_ * LaurentPoly::mono(mono_inv(pre));

    LaurentPoly g = poly_gcd(num_poly, den_);
    if (!is_constant(g)) {
        num_poly = poly_divexact(num_poly, g);
        den_ = poly_divexact(den_, g);
    }
    // make the denominator monic; numerator absorbs the scale and the shift
    Rational lc = den_.terms.rbegin()->second;
    if (lc != 1) {
        LaurentPoly scaled;
        for (const auto& [m, c] : den_.terms) scaled.terms[m] = c / lc;
        den_ = scaled;
        LaurentPoly nscaled;
        for (const auto& [m, c] : num_poly.terms) nscaled.terms[m] = c / lc;
        num_poly = nscaled;
    }
    num_ = num_poly * LaurentPoly::mono(pre);
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("Scalar: division by zero");
    return Scalar(den_, num_);
}

Scalar Scalar::star() const { return Scalar(num_.star(), den_.star()); }

bool Scalar::equals_cross(const Scalar& o) const { return (num_ * o.den_) == (o.num_ * den_); }

std::string Scalar::to_string() const {
    if (den_ == LaurentPoly(Rational(1))) {
        if (num_.terms.size() > 1) return "(" + num_.to_string() + ")";
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hopfgal
