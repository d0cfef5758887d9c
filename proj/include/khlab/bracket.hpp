#pragma once

// Bracket polynomial in the A form and the q form, and the normalized
// Jones polynomial J with J(unknot) = q + q^-1.
//
// Three routes are kept deliberately separate and serve as mutual oracles:
//   bracket_A        state sum  sum_S A^(#A - #B) delta^{||S||}
//   bracket_q        enhanced-state monomial sum  sum_s (-1)^i q^j
//   skein_bracket_A  recursive smoothing expansion with memoization

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "khlab/diagram.hpp"
#include "khlab/laurent.hpp"
#include "khlab/resolution.hpp"

namespace khlab {

inline LaurentPoly loop_value_A() {
    LaurentPoly delta(Var::A);
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    return delta;
}

inline LaurentPoly loop_value_q() {
    LaurentPoly v(Var::q);
    v.add_term(1, 1);
    v.add_term(-1, 1);
    return v;
}

inline LaurentPoly bracket_A(const KnotDiagram& d, int cap = kDefaultCap) {
    const int n = d.crossing_count();
    std::vector<LaurentPoly> delta_pow{LaurentPoly::constant(Var::A, 1)};
    auto delta = loop_value_A();
    LaurentPoly acc(Var::A);
    for_each_state(d, [&](const ResolvedState& st) {
        while (int(delta_pow.size()) <= st.loop_count)
            delta_pow.push_back(delta_pow.back() * delta);
        int b = st.resolution.b_count();
        acc += delta_pow[size_t(st.loop_count)].shifted(n - 2 * b);
    }, cap);
    return acc;
}

inline LaurentPoly bracket_q(const KnotDiagram& d, int cap = kDefaultCap) {
    LaurentPoly acc(Var::q);
    for_each_enhanced(d, [&](const ResolvedState&, const EnhancedState& s) {
        acc.add_term(s.j(), (s.i() % 2 == 0) ? 1 : -1);
    }, cap);
    return acc;
}

// Rewrites an A-form bracket of a c-crossing diagram into the q form:
// multiply by A^-c, then substitute A^2 -> -q^-1.
inline LaurentPoly to_q_form(const LaurentPoly& a_poly, int crossing_count) {
    LaurentPoly out(Var::q);
    for (auto& [e, c] : a_poly.terms()) {
        int shifted = e - crossing_count;
        if (shifted % 2 != 0)
            throw std::invalid_argument("A-form bracket has unexpected odd exponent");
        int half = shifted / 2;
        long long sign = (half % 2 == 0) ? 1 : -1;
        out.add_term(-half, sign * c);
    }
    return out;
}

namespace detail {

class SkeinContext {
public:
    SkeinContext(const KnotDiagram& d) : d_(d), delta_(loop_value_A()) {}

    LaurentPoly run() {
        std::vector<int> uf(size_t(d_.edge_count()));
        for (size_t i = 0; i < uf.size(); ++i) uf[i] = int(i);
        LaurentPoly result = solve(0, uf);
        for (int i = 0; i < d_.circle_count(); ++i) result = result * delta_;
        return result;
    }

private:
    static int find(std::vector<int>& uf, int x) {
        while (uf[size_t(x)] != x) {
            uf[size_t(x)] = uf[size_t(uf[size_t(x)])];
            x = uf[size_t(x)];
        }
        return x;
    }

    LaurentPoly delta_power(int k) {
        while (int(powers_.size()) <= k) {
            if (powers_.empty()) powers_.push_back(LaurentPoly::constant(Var::A, 1));
            else powers_.push_back(powers_.back() * delta_);
        }
        return powers_[size_t(k)];
    }

    std::string memo_key(int i, std::vector<int>& uf) {
        // Canonical root pattern of the edges still to be consumed.
        std::string key;
        key.reserve(size_t(4 * (d_.crossing_count() - i) + 4));
        std::unordered_map<int, int> relabel;
        for (int k = i; k < d_.crossing_count(); ++k)
            for (int s = 0; s < 4; ++s) {
                int root = find(uf, d_.crossings()[size_t(k)].e[size_t(s)]);
                auto [it, fresh] = relabel.emplace(root, int(relabel.size()));
                key.push_back(char('a' + it->second % 26));
                key.push_back(char('0' + it->second / 26));
            }
        return key;
    }

    LaurentPoly solve(int i, std::vector<int>& uf) {
        if (i == d_.crossing_count()) return LaurentPoly::constant(Var::A, 1);
        std::string key = std::to_string(i) + "|" + memo_key(i, uf);
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;

        const auto& cr = d_.crossings()[size_t(i)];
        LaurentPoly acc(Var::A);
        for (int branch = 0; branch < 2; ++branch) {
            std::vector<int> sub = uf;
            int circles = 0;
            auto join = [&](int x, int y) {
                int rx = find(sub, x), ry = find(sub, y);
                if (rx == ry) ++circles;
                else sub[size_t(rx)] = ry;
            };
            if (branch == 0) {  // A smoothing
                join(cr.e[0], cr.e[3]);
                join(cr.e[1], cr.e[2]);
            } else {  // B smoothing
                join(cr.e[0], cr.e[1]);
                join(cr.e[2], cr.e[3]);
            }
            LaurentPoly rest = solve(i + 1, sub);
            acc += (delta_power(circles) * rest).shifted(branch == 0 ? 1 : -1);
        }
        memo_.emplace(std::move(key), acc);
        return acc;
    }

    const KnotDiagram& d_;
    LaurentPoly delta_;
    std::vector<LaurentPoly> powers_;
    std::unordered_map<std::string, LaurentPoly> memo_;
};

}  // namespace detail

inline LaurentPoly skein_bracket_A(const KnotDiagram& d, int cap = kDefaultCap) {
    check_cap(d, cap);
    return detail::SkeinContext(d).run();
}

inline LaurentPoly skein_bracket_q(const KnotDiagram& d, int cap = kDefaultCap) {
    return to_q_form(skein_bracket_A(d, cap), d.crossing_count());
}

// J_K = (-1)^{n-} q^{n+ - 2 n-} <K>_q, invariant under Reidemeister moves.
inline LaurentPoly jones(const KnotDiagram& d, int cap = kDefaultCap) {
    LaurentPoly b = bracket_q(d, cap);
    long long sign = (d.n_minus() % 2 == 0) ? 1 : -1;
    return (sign * b).shifted(d.n_plus() - 2 * d.n_minus());
}

}  // namespace khlab
