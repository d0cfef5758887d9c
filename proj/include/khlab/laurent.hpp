#pragma once

// Exact Laurent polynomials with integer coefficients, in one variable
// (tagged A or q) and in two variables (t, q).  Zero coefficients are
// never stored.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace khlab {

enum class Var : uint8_t { A, q };

inline const char* var_name(Var v) { return v == Var::A ? "A" : "q"; }

inline std::complex<double> cpow(std::complex<double> z, int e) {
    if (e == 0) return {1.0, 0.0};
    std::complex<double> base = e > 0 ? z : 1.0 / z;
    int n = e > 0 ? e : -e;
    std::complex<double> acc{1.0, 0.0};
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

class LaurentPoly {
public:
    explicit LaurentPoly(Var v = Var::q) : var_(v) {}

    static LaurentPoly zero(Var v) { return LaurentPoly(v); }
    static LaurentPoly constant(Var v, long long c) {
        LaurentPoly p(v);
        p.add_term(0, c);
        return p;
    }
    static LaurentPoly monomial(Var v, int exp, long long c = 1) {
        LaurentPoly p(v);
        p.add_term(exp, c);
        return p;
    }

    Var var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, long long>& terms() const { return terms_; }

    long long coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(int exp, long long c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_var(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_var(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_var(b);
        LaurentPoly r(a.var_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend LaurentPoly operator*(long long s, const LaurentPoly& p) {
        LaurentPoly r(p.var_);
        if (s != 0)
            for (auto& [e, c] : p.terms_) r.add_term(e, s * c);
        return r;
    }
    LaurentPoly shifted(int dexp) const {
        LaurentPoly r(var_);
        for (auto& [e, c] : terms_) r.add_term(e + dexp, c);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return var_ == o.var_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Substitute the variable by (sign * var^k), e.g. A -> A^-1 for mirrors.
    LaurentPoly substituted(Var new_var, int k, int sign) const {
        LaurentPoly r(new_var);
        for (auto& [e, c] : terms_) {
            long long s = (sign < 0 && (e & 1)) ? -c : c;
            r.add_term(e * k, s);
        }
        return r;
    }

    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> acc{0.0, 0.0};
        for (auto& [e, c] : terms_) acc += double(c) * cpow(z, e);
        return acc;
    }

    // Rendering: terms sorted by ascending exponent, e.g. "q^-1 + q".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            long long a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1 || e == 0) os << a;
            if (e != 0) {
                os << var_name(var_);
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void check_var(const LaurentPoly& o) const {
        if (var_ != o.var_) throw std::invalid_argument("mixed polynomial variables");
    }

    Var var_;
    std::map<int, long long> terms_;
};

// Integer-coefficient Laurent polynomial in t and q.
class Laurent2 {
public:
    using Key = std::pair<int, int>;  // (t exponent, q exponent)

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, long long>& terms() const { return terms_; }

    void add_term(int te, int qe, long long c) {
        if (c == 0) return;
        Key k{te, qe};
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long long coeff(int te, int qe) const {
        auto it = terms_.find({te, qe});
        return it == terms_.end() ? 0 : it->second;
    }

    bool operator==(const Laurent2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent2& o) const { return !(*this == o); }

    LaurentPoly at_t(long long t_value) const {
        LaurentPoly r(Var::q);
        for (auto& [k, c] : terms_) {
            long long f = 1;
            int e = k.first;
            if (t_value == -1) f = (e % 2 == 0) ? 1 : -1;
            else if (t_value == 1) f = 1;
            else {
                if (e < 0) throw std::invalid_argument("negative t exponent needs unit t");
                for (int i = 0; i < e; ++i) f *= t_value;
            }
            r.add_term(k.second, f * c);
        }
        return r;
    }

    std::complex<double> eval(std::complex<double> t, std::complex<double> q) const {
        std::complex<double> acc{0.0, 0.0};
        for (auto& [k, c] : terms_) acc += double(c) * cpow(t, k.first) * cpow(q, k.second);
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : terms_) {
            long long a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            auto [te, qe] = k;
            if (a != 1 || (te == 0 && qe == 0)) os << a;
            if (te != 0) {
                os << "t";
                if (te != 1) os << "^" << te;
            }
            if (qe != 0) {
                if (te != 0) os << " ";
                os << "q";
                if (qe != 1) os << "^" << qe;
            }
        }
        return os.str();
    }

private:
    std::map<Key, long long> terms_;
};

}  // namespace khlab
