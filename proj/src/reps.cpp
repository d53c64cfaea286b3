#include "rigidity/reps.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "rigidity/errors.hpp"
#include "rigidity/weyl.hpp"
#include "detail/int_system.hpp"

namespace rigidity {

namespace {

using detail::IntSystem;
using detail::IVec;
using detail::IVecHash;
using detail::to_ivec;
using detail::to_weight;

void require_dominant_integral(const Weight& w, const RootSystemData& rs, const char* what) {
    rs.check_weight(w);
    if (!w.is_integral() || !w.is_dominant()) {
        throw DomainError(std::string(what) + " needs a dominant integral weight, got " + w.str());
    }
}

std::int64_t checked_dim(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw ResourceError(std::string(what) + " dimension overflows 64 bits");
    return v.get_si();
}

std::vector<std::pair<Weight, std::int64_t>> dominant_table(const Weight& lambda, const RootSystemData& rs) {
    const IntSystem sys(rs);
    const IVec top = to_ivec(lambda);
    const std::size_t n = sys.n;

    // Dominant weights below λ, found by subtracting positive roots while staying dominant.
    struct Node {
        IVec w;
        std::int64_t depth;
    };
    std::vector<Node> nodes{{top, 0}};
    std::unordered_map<IVec, std::size_t, IVecHash> where{{top, 0}};
    for (std::size_t h = 0; h < nodes.size(); ++h) {
        for (std::size_t k = 0; k < sys.roots.size(); ++k) {
            IVec next = nodes[h].w;
            bool dom = true;
            for (std::size_t j = 0; j < n; ++j) {
                next[j] -= sys.root_w[k][j];
                if (next[j] < 0) dom = false;
            }
            if (!dom || where.count(next)) continue;
            std::int64_t ht = 0;
            for (auto c : sys.roots[k]) ht += c;
            where.emplace(next, nodes.size());
            nodes.push_back({std::move(next), nodes[h].depth + ht});
        }
    }
    // depth = height of λ - μ; every μ + kα looked up below is strictly shallower.
    std::vector<std::size_t> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return nodes[a].depth < nodes[b].depth; });

    IVec top_rho = top;
    for (auto& x : top_rho) x += 1;
    const std::int64_t top_norm = sys.inner(top_rho, top_rho);

    std::vector<std::int64_t> mult(nodes.size(), 0);
    mult[0] = 1;
    for (std::size_t idx : order) {
        if (idx == 0) continue;
        const IVec& mu = nodes[idx].w;
        IVec mu_rho = mu;
        for (auto& x : mu_rho) x += 1;
        const std::int64_t denom = top_norm - sys.inner(mu_rho, mu_rho);
        if (denom <= 0) throw InternalError("Freudenthal denominator vanished at " + to_weight(mu).str());
        __int128 acc = 0;
        for (std::size_t k = 0; k < sys.roots.size(); ++k) {
            IVec nu = mu;
            while (true) {
                for (std::size_t j = 0; j < n; ++j) nu[j] += sys.root_w[k][j];
                auto it = where.find(sys.dominant(nu));
                if (it == where.end() || mult[it->second] == 0) break;
                acc += static_cast<__int128>(mult[it->second]) * sys.with_root(nu, k);
            }
        }
        acc *= 2;
        // Scale: both the numerator pairing and the denominator carry one factor L.
        if (acc % denom != 0) throw InternalError("Freudenthal recursion produced a non-integer multiplicity");
        mult[idx] = static_cast<std::int64_t>(acc / denom);
    }

    std::vector<std::pair<Weight, std::int64_t>> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (mult[i] > 0) out.emplace_back(to_weight(nodes[i].w), mult[i]);
    std::sort(out.begin(), out.end());
    return out;
}

WeightMultiplicityTable simple_table(const Weight& lambda, const RootSystemData& comp) {
    const IntSystem sys(comp);
    std::vector<std::pair<Weight, std::int64_t>> entries;
    for (const auto& [dom, m] : dominant_table(lambda, comp)) {
        for (const auto& w : sys.orbit(to_ivec(dom))) entries.emplace_back(to_weight(w), m);
    }
    return WeightMultiplicityTable(lambda, std::move(entries));
}

ModuleDecomposition simple_tensor(const Weight& lambda, const Weight& mu, const RootSystemData& comp,
                                  ComputeContext& ctx) {
    const bool iterate_lambda = weyl_dim(lambda, comp) < weyl_dim(mu, comp);
    const Weight& big = iterate_lambda ? mu : lambda;
    const Weight& small = iterate_lambda ? lambda : mu;
    const auto table = freudenthal(small, comp, ctx);
    const IntSystem sys(comp);
    const IVec base = to_ivec(big);
    std::map<IVec, std::int64_t> acc;
    for (const auto& [w, m] : table.entries()) {
        IVec v = to_ivec(w);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += base[j];
        auto [dom, sign] = sys.dominant_shifted(std::move(v));
        if (sign != 0) acc[dom] += sign * m;
    }
    ModuleDecomposition out;
    for (const auto& [w, m] : acc) {
        if (m < 0) throw InternalError("Klimyk sum left a negative multiplicity at " + to_weight(w).str());
        if (m > 0) out.add(to_weight(w), m);
    }
    if (out.total_dimension(comp) != weyl_dim(lambda, comp) * weyl_dim(mu, comp)) {
        throw InternalError("Klimyk decomposition of " + lambda.str() + " ⊗ " + mu.str() + " lost dimension");
    }
    return out;
}

}  // namespace

WeightMultiplicityTable::WeightMultiplicityTable(Weight highest, std::vector<std::pair<Weight, std::int64_t>> entries)
    : highest_(std::move(highest)), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (const auto& [w, m] : entries_) {
        if (m <= 0) throw InternalError("weight table entry with nonpositive multiplicity");
        if (!index_.emplace(w, m).second) throw InternalError("duplicate weight " + w.str() + " in weight table");
        total_ += m;
    }
}

std::int64_t WeightMultiplicityTable::multiplicity(const Weight& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? 0 : it->second;
}

void ModuleDecomposition::add(const Weight& highest, std::int64_t multiplicity) {
    if (multiplicity <= 0) throw DomainError("module multiplicity must be positive");
    entries_[highest] += multiplicity;
}

bool ModuleDecomposition::remove_one(const Weight& highest) {
    auto it = entries_.find(highest);
    if (it == entries_.end()) return false;
    if (--it->second == 0) entries_.erase(it);
    return true;
}

std::int64_t ModuleDecomposition::multiplicity(const Weight& highest) const {
    auto it = entries_.find(highest);
    return it == entries_.end() ? 0 : it->second;
}

std::int64_t ModuleDecomposition::total_dimension(const RootSystemData& rs) const {
    std::int64_t s = 0;
    for (const auto& [w, m] : entries_) {
        if (__builtin_add_overflow(s, m * weyl_dim(w, rs), &s)) throw ResourceError("module dimension overflows");
    }
    return s;
}

std::string table_key(const RootSystemData& component, const Weight& highest) {
    std::string key = component.diagram().literal() + "|";
    for (std::size_t i = 0; i < highest.size(); ++i) {
        if (i) key += ',';
        key += highest[i].str();
    }
    return key;
}

std::int64_t weyl_dim(const Weight& lambda, const RootSystemData& rs) {
    require_dominant_integral(lambda, rs, "weyl_dim");
    mpz_class num = 1, den = 1;
    for (const auto& a : rs.positive_roots()) {
        std::int64_t top = 0, bottom = 0;
        for (std::size_t j = 0; j < rs.rank(); ++j) {
            if (a.coroot[j] == 0) continue;
            top += (lambda[j].num() + 1) * a.coroot[j];
            bottom += a.coroot[j];
        }
        num *= mpz_class(static_cast<long>(top));
        den *= mpz_class(static_cast<long>(bottom));
    }
    if (num % den != 0) throw InternalError("Weyl dimension formula gave a fraction");
    return checked_dim(num / den, "irreducible");
}

std::vector<std::pair<Weight, std::int64_t>> dominant_multiplicities(const Weight& lambda, const RootSystemData& rs) {
    require_dominant_integral(lambda, rs, "dominant_multiplicities");
    return dominant_table(lambda, rs);
}

WeightMultiplicityTable freudenthal(const Weight& lambda, const RootSystemData& rs, ComputeContext& ctx) {
    require_dominant_integral(lambda, rs, "freudenthal");
    const auto dim = weyl_dim(lambda, rs);
    if (dim > ctx.limits.max_weight_entries) {
        throw ResourceError("weight table for " + lambda.str() + " on " + rs.diagram().literal() + " has " +
                            std::to_string(dim) + " entries, above the cap of " +
                            std::to_string(ctx.limits.max_weight_entries));
    }
    const auto parts = rs.split(lambda);
    std::vector<WeightMultiplicityTable> tables;
    for (std::size_t c = 0; c < parts.size(); ++c) {
        const auto& comp = rs.component_system(c);
        const auto key = table_key(comp, parts[c]);
        std::optional<WeightMultiplicityTable> t;
        if (ctx.store) t = ctx.store->lookup(key, comp, parts[c]);
        if (t) {
            ++ctx.cache_hits;
        } else {
            ++ctx.cache_misses;
            t = simple_table(parts[c], comp);
            if (ctx.store) ctx.store->store(key, *t);
        }
        tables.push_back(std::move(*t));
    }
    if (tables.size() == 1) return std::move(tables[0]);

    std::vector<std::pair<std::vector<Weight>, std::int64_t>> acc{{{}, 1}};
    for (const auto& t : tables) {
        std::vector<std::pair<std::vector<Weight>, std::int64_t>> next;
        next.reserve(acc.size() * t.distinct());
        for (const auto& [ws, m] : acc) {
            for (const auto& [w, mm] : t.entries()) {
                auto grown = ws;
                grown.push_back(w);
                next.emplace_back(std::move(grown), m * mm);
            }
        }
        acc = std::move(next);
    }
    std::vector<std::pair<Weight, std::int64_t>> entries;
    entries.reserve(acc.size());
    for (auto& [ws, m] : acc) entries.emplace_back(rs.join(ws), m);
    return WeightMultiplicityTable(lambda, std::move(entries));
}

WeightMultiplicityTable freudenthal(const Weight& lambda, const RootSystemData& rs) {
    ComputeContext ctx;
    return freudenthal(lambda, rs, ctx);
}

ModuleDecomposition tensor_decompose(const Weight& lambda, const Weight& mu, const RootSystemData& rs,
                                     ComputeContext& ctx) {
    require_dominant_integral(lambda, rs, "tensor_decompose");
    require_dominant_integral(mu, rs, "tensor_decompose");
    const auto lp = rs.split(lambda);
    const auto mp = rs.split(mu);
    std::vector<ModuleDecomposition> parts;
    for (std::size_t c = 0; c < lp.size(); ++c) parts.push_back(simple_tensor(lp[c], mp[c], rs.component_system(c), ctx));
    if (parts.size() == 1) return std::move(parts[0]);

    std::vector<std::pair<std::vector<Weight>, std::int64_t>> acc{{{}, 1}};
    for (const auto& p : parts) {
        std::vector<std::pair<std::vector<Weight>, std::int64_t>> next;
        for (const auto& [ws, m] : acc) {
            for (const auto& [w, mm] : p.entries()) {
                auto grown = ws;
                grown.push_back(w);
                next.emplace_back(std::move(grown), m * mm);
            }
        }
        acc = std::move(next);
    }
    ModuleDecomposition out;
    for (auto& [ws, m] : acc) out.add(rs.join(ws), m);
    return out;
}

ModuleDecomposition tensor_decompose(const Weight& lambda, const Weight& mu, const RootSystemData& rs) {
    ComputeContext ctx;
    return tensor_decompose(lambda, mu, rs, ctx);
}

Weight dual(const Weight& lambda, const RootSystemData& rs) {
    require_dominant_integral(lambda, rs, "dual");
    return dominant_representative(-lambda, rs);
}

ModuleDecomposition gperp(const Weight& lambda, const RootSystemData& rs, ComputeContext& ctx) {
    require_dominant_integral(lambda, rs, "gperp");
    const auto parts = rs.split(lambda);
    for (std::size_t c = 0; c < parts.size(); ++c) {
        if (parts[c].is_zero()) {
            throw DomainError("weight " + lambda.str() + " vanishes on component " +
                              rs.diagram().components()[c].literal() + "; that factor would act trivially");
        }
    }
    auto prod = tensor_decompose(lambda, dual(lambda, rs), rs, ctx);
    if (!prod.remove_one(rs.zero_weight())) throw InternalError("trivial module missing from U ⊗ U*");
    for (std::size_t c = 0; c < parts.size(); ++c) {
        if (!prod.remove_one(rs.adjoint_weight(c))) {
            throw InternalError("adjoint of " + rs.diagram().components()[c].literal() + " missing from U ⊗ U*");
        }
    }
    return prod;
}

ModuleDecomposition gperp(const Weight& lambda, const RootSystemData& rs) {
    ComputeContext ctx;
    return gperp(lambda, rs, ctx);
}

std::int64_t levi_dim(const Weight& w, const ParabolicMarking& marking, const RootSystemData& rs) {
    rs.check_weight(w);
    if (marking.rank() != rs.rank()) throw DomainError("marking rank does not match the diagram");
    for (std::size_t j = 0; j < rs.rank(); ++j) {
        if (marking.contains(j)) continue;
        if (!w[j].is_integer() || w[j].sign() < 0) {
            throw DomainError("weight " + w.str() + " is not dominant for the Levi of " + marking.str());
        }
    }
    mpz_class num = 1, den = 1;
    for (const auto& a : rs.positive_roots()) {
        bool inside = true;
        for (std::size_t j = 0; j < rs.rank() && inside; ++j)
            if (a.coeffs[j] != 0 && marking.contains(j)) inside = false;
        if (!inside) continue;
        std::int64_t top = 0, bottom = 0;
        for (std::size_t j = 0; j < rs.rank(); ++j) {
            if (a.coroot[j] == 0) continue;
            top += (w[j].num() + 1) * a.coroot[j];
            bottom += a.coroot[j];
        }
        num *= mpz_class(static_cast<long>(top));
        den *= mpz_class(static_cast<long>(bottom));
    }
    if (num % den != 0) throw InternalError("Levi dimension formula gave a fraction");
    return checked_dim(num / den, "Levi module");
}

bool is_weight_of(const Weight& mu, const Weight& lambda, const RootSystemData& rs) {
    require_dominant_integral(lambda, rs, "is_weight_of");
    rs.check_weight(mu);
    if (!mu.is_integral()) return false;
    const auto diff = rs.weight_in_root_coords(lambda - dominant_representative(mu, rs));
    return std::all_of(diff.begin(), diff.end(), [](const Rational& q) { return q.is_integer() && q.sign() >= 0; });
}

}  // namespace rigidity
