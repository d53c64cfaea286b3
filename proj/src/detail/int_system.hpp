#pragma once

// Integer fast paths shared by the representation and grading code.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rigidity/cartan.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/weight.hpp"

namespace rigidity::detail {

// Integral weights in the hot loops are plain int64 vectors.
using IVec = std::vector<std::int64_t>;

struct IVecHash {
    std::size_t operator()(const IVec& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

inline IVec to_ivec(const Weight& w) {
    IVec v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i].is_integer()) throw DomainError("weight " + w.str() + " is not integral");
        v[i] = w[i].num();
    }
    return v;
}

inline Weight to_weight(const IVec& v) { return Weight::from_integers(v); }

// Precomputed integer data for one root system.
struct IntSystem {
    std::size_t n;
    std::vector<int> cartan;
    std::vector<IVec> roots;     // simple-root coordinates
    std::vector<IVec> root_w;    // ω-coordinates
    std::vector<IVec> roots_dn;  // root coefficient times half-norm, scaled by L: (ν, α) = <ν, roots_dn>/L
    std::vector<std::int64_t> sym;  // L · (ω_i, ω_j)
    std::int64_t scale = 1;

    explicit IntSystem(const RootSystemData& rs) : n(rs.rank()) {
        cartan.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) cartan[i * n + j] = rs.cartan(i, j);
        std::int64_t l = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) l = std::lcm(l, (rs.inverse_cartan(i, j) * rs.half_norm(j)).den());
        scale = l;
        sym.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                sym[i * n + j] = (rs.inverse_cartan(i, j) * rs.half_norm(j) * Rational(l)).to_integer();
        for (const auto& r : rs.positive_roots()) {
            IVec c(r.coeffs.begin(), r.coeffs.end());
            IVec dn(n);
            for (std::size_t j = 0; j < n; ++j) dn[j] = c[j] * rs.half_norm(j).to_integer() * l;
            roots.push_back(c);
            roots_dn.push_back(dn);
            root_w.push_back(to_ivec(rs.root_to_weight(r.coeffs)));
        }
    }

    [[nodiscard]] std::int64_t inner(const IVec& a, const IVec& b) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) s += a[i] * b[j] * sym[i * n + j];
        }
        return s;
    }

    // Pairing with a weight ν: L · (ν, α_k).
    [[nodiscard]] std::int64_t with_root(const IVec& nu, std::size_t k) const {
        std::int64_t s = 0;
        const auto& d = roots_dn[k];
        for (std::size_t j = 0; j < n; ++j) s += nu[j] * d[j];
        return s;
    }

    void reflect(std::size_t i, IVec& v) const {
        const auto c = v[i];
        if (c == 0) return;
        for (std::size_t j = 0; j < n; ++j) v[j] -= c * cartan[i * n + j];
    }

    [[nodiscard]] IVec dominant(IVec v) const {
        while (true) {
            std::size_t i = 0;
            while (i < n && v[i] >= 0) ++i;
            if (i == n) return v;
            reflect(i, v);
        }
    }

    // ρ-shifted dominant form; sign 0 on a wall.
    [[nodiscard]] std::pair<IVec, int> dominant_shifted(IVec v) const {
        for (auto& x : v) x += 1;
        int sign = 1;
        while (true) {
            std::size_t i = 0;
            while (i < n && v[i] > 0) ++i;
            if (i == n) break;
            if (v[i] == 0) return {{}, 0};
            reflect(i, v);
            sign = -sign;
        }
        for (auto& x : v) x -= 1;
        return {v, sign};
    }

    [[nodiscard]] std::vector<IVec> orbit(const IVec& dom) const {
        std::unordered_set<IVec, IVecHash> seen{dom};
        std::vector<IVec> out{dom};
        for (std::size_t h = 0; h < out.size(); ++h) {
            for (std::size_t i = 0; i < n; ++i) {
                if (out[h][i] <= 0) continue;
                IVec next = out[h];
                reflect(i, next);
                if (seen.insert(next).second) out.push_back(std::move(next));
            }
        }
        return out;
    }
};

}  // namespace rigidity::detail
