#include "rigidity/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rigidity/errors.hpp"
#include "rigidity/grading.hpp"
#include "rigidity/kostant.hpp"

namespace rigidity {

namespace {

using Coeffs = std::vector<int>;

Coeffs neg(Coeffs v) {
    for (auto& x : v) x = -x;
    return v;
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
    Coeffs c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

int sign_of(const Coeffs& v) {
    for (auto x : v) {
        if (x > 0) return 1;
        if (x < 0) return -1;
    }
    return 0;
}

// Structure constants by the extraspecial-pair algorithm.
class ConstantSolver {
public:
    ConstantSolver(const RootSystemData& rs, RootOrder order) : rs_(rs) {
        const auto& pos = rs.positive_roots();
        order_.resize(pos.size());
        std::vector<std::size_t> perm(pos.size());
        std::iota(perm.begin(), perm.end(), 0);
        if (order == RootOrder::reversed) {
            std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) {
                if (pos[a].height != pos[b].height) return pos[a].height < pos[b].height;
                return pos[a].coeffs < pos[b].coeffs;
            });
        }
        for (std::size_t k = 0; k < perm.size(); ++k) order_[perm[k]] = k;
        for (const auto& r : pos) {
            const Weight w = rs.root_to_weight(r.coeffs);
            norms_.push_back(rs.inner(w, w));
        }
        for (std::size_t x = 0; x < pos.size(); ++x) {
            if (pos[x].height == 1) continue;
            solve_for(x);
        }
    }

    [[nodiscard]] std::optional<std::size_t> positive(const Coeffs& v) const { return rs_.positive_root_index(v); }
    [[nodiscard]] bool is_root(const Coeffs& v) const { return positive(v) || positive(neg(v)); }

    [[nodiscard]] Rational norm(const Coeffs& v) const {
        auto p = positive(sign_of(v) > 0 ? v : neg(v));
        if (!p) throw InternalError("norm requested for a non-root");
        return norms_[*p];
    }

    // N_{x,y} for arbitrary roots with x + y a root.
    [[nodiscard]] Rational n(const Coeffs& x, const Coeffs& y) const {
        const int sx = sign_of(x), sy = sign_of(y);
        if (sx > 0 && sy > 0) {
            auto it = table_.find({*positive(x), *positive(y)});
            if (it == table_.end()) throw InternalError("structure constant requested before it was fixed");
            return it->second;
        }
        if (sx < 0 && sy < 0) return -n(neg(x), neg(y));
        const Coeffs z = neg(add(x, y));
        const int sz = sign_of(z);
        if (sy == sz) return norm(z) / norm(x) * n(y, z);
        return norm(z) / norm(y) * n(z, x);
    }

    [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, Rational>& table() const { return table_; }

private:
    void solve_for(std::size_t xi) {
        const auto& pos = rs_.positive_roots();
        const Coeffs& target = pos[xi].coeffs;
        std::vector<std::pair<std::size_t, std::size_t>> special;
        for (std::size_t r = 0; r < pos.size(); ++r) {
            if (pos[r].height >= pos[xi].height) continue;
            Coeffs rest = target;
            for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= pos[r].coeffs[i];
            auto s = positive(rest);
            if (s && order_[r] < order_[*s]) special.emplace_back(r, *s);
        }
        if (special.empty()) throw InternalError("non-simple root with no decomposition");
        auto extra = *std::min_element(special.begin(), special.end(),
                                       [&](auto& p, auto& q) { return order_[p.first] < order_[q.first]; });
        const auto& a = pos[extra.first].coeffs;
        const auto& b = pos[extra.second].coeffs;
        int p = 0;
        for (Coeffs c = b;;) {
            for (std::size_t i = 0; i < c.size(); ++i) c[i] -= a[i];
            if (!is_root(c)) break;
            ++p;
        }
        set(extra.first, extra.second, Rational(p + 1));
        const Rational nab(p + 1);
        for (auto [r, s] : special) {
            if (r == extra.first) continue;
            const auto& rc = pos[r].coeffs;
            const auto& sc = pos[s].coeffs;
            Rational acc(0);
            const Coeffs s_a = add(sc, neg(a));
            if (is_root(s_a)) acc += n(sc, neg(a)) * n(rc, neg(b)) / norm(s_a);
            const Coeffs r_a = add(rc, neg(a));
            if (is_root(r_a)) acc += n(neg(a), rc) * n(sc, neg(b)) / norm(r_a);
            set(r, s, norms_[xi] / nab * acc);
        }
    }

    void set(std::size_t r, std::size_t s, const Rational& v) {
        if (!v.is_integer() || v.is_zero()) throw InternalError("structure constant is not a nonzero integer");
        table_[{r, s}] = v;
        table_[{s, r}] = -v;
    }

    const RootSystemData& rs_;
    std::vector<std::size_t> order_;
    std::vector<Rational> norms_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> table_;
};

using Sparse = std::map<std::size_t, mpq_class>;

// ρ(v) split into nonzero entries by column and by row, for commutators with sparse X.
struct SparseRho {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<std::size_t, mpq_class>>> by_col, by_row;

    explicit SparseRho(const QMatrix& m) : n(m.rows()), by_col(n), by_row(n) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(m(i, j)) != 0) {
                    by_col[j].emplace_back(i, m(i, j));
                    by_row[i].emplace_back(j, m(i, j));
                }
    }

    // [ρ, X] accumulated into out with a scalar factor.
    void act(const Sparse& x, const mpq_class& scale, Sparse& out) const {
        for (const auto& [key, val] : x) {
            const std::size_t k = key / n, j = key % n;
            for (const auto& [i, r] : by_col[k]) out[i * n + j] += scale * r * val;
            const std::size_t i = key / n, kk = key % n;
            for (const auto& [jj, r] : by_row[kk]) out[i * n + jj] -= scale * val * r;
        }
    }
};

void prune(Sparse& s) {
    for (auto it = s.begin(); it != s.end();) it = sgn(it->second) == 0 ? s.erase(it) : std::next(it);
}

QMatrix zero_matrix(std::size_t n) { return QMatrix(n, n); }

Weight diagonal_weight(const std::vector<QMatrix>& mats, std::size_t rank, std::size_t idx) {
    Weight w(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        const mpq_class& v = mats[i](idx, idx);
        if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw InternalError("h eigenvalue is not an integer");
        w[i] = Rational(v.get_num().get_si());
    }
    return w;
}

}  // namespace

// ---------------------------------------------------------------- algebra

ChevalleyAlgebra::ChevalleyAlgebra(std::shared_ptr<const RootSystemData> rs, RootOrder order) : rs_(std::move(rs)) {
    const auto& pos = rs_->positive_roots();
    const std::size_t r = rank(), np = pos.size();
    dim_ = r + 2 * np;
    basis_roots_.assign(dim_, Coeffs(r, 0));
    for (std::size_t k = 0; k < np; ++k) {
        basis_roots_[e(k)] = pos[k].coeffs;
        basis_roots_[f(k)] = neg(pos[k].coeffs);
    }
    simple_.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        Coeffs c(r, 0);
        c[i] = 1;
        simple_[i] = *rs_->positive_root_index(c);
    }

    const ConstantSolver solver(*rs_, order);
    table_.assign(dim_ * dim_, {});
    std::vector<std::vector<int>> pairing(dim_, std::vector<int>(r, 0));
    for (std::size_t k = 0; k < np; ++k) {
        const Weight w = rs_->root_to_weight(pos[k].coeffs);
        for (std::size_t i = 0; i < r; ++i) {
            pairing[e(k)][i] = static_cast<int>(w[i].num());
            pairing[f(k)][i] = -static_cast<int>(w[i].num());
        }
    }
    for (std::size_t x = 0; x < dim_; ++x) {
        for (std::size_t y = 0; y < dim_; ++y) {
            auto& out = table_[x * dim_ + y];
            if (x < r && y < r) continue;
            if (x < r) {
                if (pairing[y][x] != 0) out.emplace_back(y, pairing[y][x]);
                continue;
            }
            if (y < r) {
                if (pairing[x][y] != 0) out.emplace_back(x, -pairing[x][y]);
                continue;
            }
            const Coeffs& a = basis_roots_[x];
            const Coeffs& b = basis_roots_[y];
            const Coeffs sum = add(a, b);
            if (sign_of(sum) == 0) {
                const int s = sign_of(a);
                const auto k = *rs_->positive_root_index(s > 0 ? a : b);
                for (std::size_t i = 0; i < r; ++i)
                    if (pos[k].coroot[i] != 0) out.emplace_back(h(i), s * pos[k].coroot[i]);
                continue;
            }
            if (!solver.is_root(sum)) continue;
            const Rational nv = solver.n(a, b);
            if (!nv.is_integer()) throw InternalError("non-integral structure constant");
            out.emplace_back(*root_vector(sum), nv.num());
        }
    }
}

std::optional<std::size_t> ChevalleyAlgebra::root_vector(const std::vector<int>& gamma) const {
    if (auto p = rs_->positive_root_index(gamma)) return e(*p);
    if (auto p = rs_->positive_root_index(neg(gamma))) return f(*p);
    return std::nullopt;
}

std::int64_t ChevalleyAlgebra::structure_constant(std::size_t a, std::size_t b) const {
    for (const auto& [idx, c] : bracket(e(a), e(b))) return c;
    throw DomainError("sum of the two roots is not a root");
}

std::size_t ChevalleyAlgebra::verify_jacobi() const {
    std::vector<std::int64_t> acc(dim_);
    std::size_t count = 0;
    auto nested = [&](std::size_t x, std::size_t y, std::size_t z) {
        for (const auto& [t, c] : bracket(x, y))
            for (const auto& [u, d] : bracket(t, z)) acc[u] += c * d;
    };
    for (std::size_t x = 0; x < dim_; ++x)
        for (std::size_t y = x + 1; y < dim_; ++y)
            for (std::size_t z = y + 1; z < dim_; ++z) {
                std::fill(acc.begin(), acc.end(), 0);
                nested(x, y, z);
                nested(y, z, x);
                nested(z, x, y);
                for (auto v : acc)
                    if (v != 0) {
                        throw InternalError("Jacobi identity fails on basis triple (" + std::to_string(x) + ", " +
                                            std::to_string(y) + ", " + std::to_string(z) + ")");
                    }
                ++count;
            }
    return count;
}

std::shared_ptr<const ChevalleyAlgebra> build_chevalley(const DynkinDiagram& diagram, RootOrder order,
                                                        const OracleLimits& limits) {
    auto rs = build_root_system(diagram);
    if (rs->dimension() > limits.max_algebra_dim) {
        throw ResourceError("dim " + diagram.literal() + " = " + std::to_string(rs->dimension()) +
                            " exceeds the oracle cap of " + std::to_string(limits.max_algebra_dim));
    }
    auto alg = std::make_shared<const ChevalleyAlgebra>(rs, order);
    alg->verify_jacobi();
    return alg;
}

// ---------------------------------------------------------------- rep specs

std::string RepFactor::str() const {
    const std::string b = base == Base::defining ? "defining" : "adjoint";
    switch (functor) {
        case Functor::none: return b;
        case Functor::sym: return "sym^" + std::to_string(degree) + "(" + b + ")";
        case Functor::ext: return "ext^" + std::to_string(degree) + "(" + b + ")";
    }
    return b;
}

RepSpec RepSpec::parse(std::string_view text) {
    RepSpec spec;
    std::vector<std::string> parts;
    std::string cur;
    const std::string s(text);
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == '*') {
            parts.push_back(cur);
            cur.clear();
            ++i;
        } else if (s.compare(i, 3, "⊠") == 0) {
            parts.push_back(cur);
            cur.clear();
            i += 3;
        } else if (s[i] == ' ') {
            ++i;
        } else {
            cur += s[i++];
        }
    }
    parts.push_back(cur);
    for (const auto& part : parts) {
        RepFactor f;
        auto base_of = [&](const std::string& b) {
            if (b == "defining") return RepFactor::Base::defining;
            if (b == "adjoint") return RepFactor::Base::adjoint;
            throw DomainError("unknown representation base '" + b + "' in '" + s + "'");
        };
        if (part.rfind("sym^", 0) == 0 || part.rfind("ext^", 0) == 0) {
            f.functor = part[0] == 's' ? RepFactor::Functor::sym : RepFactor::Functor::ext;
            const auto open = part.find('(');
            if (open == std::string::npos || part.back() != ')') {
                throw DomainError("malformed representation factor '" + part + "'");
            }
            const auto deg = part.substr(4, open - 4);
            if (deg.empty() || !std::all_of(deg.begin(), deg.end(), ::isdigit) || deg.size() > 3) {
                throw DomainError("bad degree in representation factor '" + part + "'");
            }
            f.degree = std::stoi(deg);
            if (f.degree < 1) throw DomainError("degree must be positive in '" + part + "'");
            f.base = base_of(part.substr(open + 1, part.size() - open - 2));
        } else {
            f.base = base_of(part);
        }
        spec.factors.push_back(f);
    }
    return spec;
}

std::string RepSpec::str() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i].str();
    }
    return out;
}

// ---------------------------------------------------------------- reps

namespace {

struct FactorRep {
    std::vector<QMatrix> mats;  // one per algebra basis element
    std::size_t dim = 0;
};

// Local generator matrices of the defining representation of a classical component.
void defining_generators(const SimpleComponent& c, std::vector<QMatrix>& e, std::vector<QMatrix>& f) {
    const int n = c.rank;
    std::size_t dim = 0;
    std::function<std::size_t(int)> idx;
    switch (c.family) {
        case Family::A:
            dim = static_cast<std::size_t>(n + 1);
            break;
        case Family::B:
            dim = static_cast<std::size_t>(2 * n + 1);
            break;
        case Family::C:
        case Family::D:
            dim = static_cast<std::size_t>(2 * n);
            break;
        default: throw DomainError("no defining representation is built for " + c.literal() + "; use adjoint");
    }
    // Basis order for B, C, D: ε_1..ε_n, (0 for B), -ε_1..-ε_n.
    const bool has_zero = c.family == Family::B;
    idx = [n, has_zero](int k) -> std::size_t {
        if (k > 0) return static_cast<std::size_t>(k - 1);
        if (k == 0) return static_cast<std::size_t>(n);
        return static_cast<std::size_t>(n + (has_zero ? 1 : 0) + (-k - 1));
    };
    e.assign(static_cast<std::size_t>(n), QMatrix(dim, dim));
    f.assign(static_cast<std::size_t>(n), QMatrix(dim, dim));
    if (c.family == Family::A) {
        for (int i = 0; i < n; ++i) {
            e[i](i, i + 1) = 1;
            f[i](i + 1, i) = 1;
        }
        return;
    }
    for (int i = 1; i < n; ++i) {
        e[i - 1](idx(i), idx(i + 1)) = 1;
        e[i - 1](idx(-(i + 1)), idx(-i)) = -1;
        f[i - 1](idx(i + 1), idx(i)) = 1;
        f[i - 1](idx(-i), idx(-(i + 1))) = -1;
    }
    auto& en = e[n - 1];
    auto& fn = f[n - 1];
    switch (c.family) {
        case Family::B:
            en(idx(n), idx(0)) = 1;
            en(idx(0), idx(-n)) = -1;
            fn(idx(0), idx(n)) = 2;
            fn(idx(-n), idx(0)) = -2;
            break;
        case Family::C:
            en(idx(n), idx(-n)) = 1;
            fn(idx(-n), idx(n)) = 1;
            break;
        case Family::D:
            en(idx(n - 1), idx(-n)) = 1;
            en(idx(n), idx(-(n - 1))) = -1;
            fn(idx(-n), idx(n - 1)) = 1;
            fn(idx(-(n - 1)), idx(n)) = -1;
            break;
        default: break;
    }
}

// Extends generator matrices to every root vector: ρ(e_ξ) = [ρ(e_i), ρ(e_{ξ-α_i})] / N.
void fill_from_generators(const ChevalleyAlgebra& alg, std::vector<QMatrix>& mats) {
    const auto& pos = alg.roots().positive_roots();
    const std::size_t r = alg.rank();
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (pos[k].height == 1) continue;
        for (std::size_t i = 0; i < r; ++i) {
            Coeffs rest = pos[k].coeffs;
            rest[i] -= 1;
            auto z = alg.roots().positive_root_index(rest);
            if (!z) continue;
            const std::size_t si = alg.simple_index(i);
            for (bool positive : {true, false}) {
                const std::size_t x = positive ? alg.e(si) : alg.f(si);
                const std::size_t y = positive ? alg.e(*z) : alg.f(*z);
                const std::size_t target = positive ? alg.e(k) : alg.f(k);
                const auto& br = alg.bracket(x, y);
                if (br.size() != 1 || br[0].first != target) throw InternalError("root vector recursion broke");
                mpq_class inv(1, br[0].second);
                inv.canonicalize();
                mats[target] = inv * commutator(mats[x], mats[y]);
            }
            break;
        }
    }
}

FactorRep defining_factor(const ChevalleyAlgebra& alg, std::size_t comp) {
    const auto& dg = alg.roots().diagram();
    std::vector<QMatrix> e, f;
    defining_generators(dg.components()[comp], e, f);
    FactorRep out;
    out.dim = e[0].rows();
    out.mats.assign(alg.dim(), zero_matrix(out.dim));
    const auto off = dg.offset(comp);
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::size_t s = alg.simple_index(off + i);
        out.mats[alg.e(s)] = e[i];
        out.mats[alg.f(s)] = f[i];
        out.mats[alg.h(off + i)] = commutator(e[i], f[i]);
    }
    fill_from_generators(alg, out.mats);
    return out;
}

FactorRep adjoint_factor(const ChevalleyAlgebra& alg, std::size_t comp) {
    const auto& rs = alg.roots();
    std::vector<std::size_t> basis;
    for (std::size_t x = 0; x < alg.dim(); ++x) {
        std::size_t c;
        if (x < alg.rank()) {
            c = rs.diagram().component_of(x);
        } else {
            const auto& root = alg.root_of(x);
            std::size_t node = 0;
            while (root[node] == 0) ++node;
            c = rs.diagram().component_of(node);
        }
        if (c == comp) basis.push_back(x);
    }
    std::vector<std::size_t> pos_of(alg.dim(), SIZE_MAX);
    for (std::size_t k = 0; k < basis.size(); ++k) pos_of[basis[k]] = k;
    FactorRep out;
    out.dim = basis.size();
    out.mats.assign(alg.dim(), zero_matrix(out.dim));
    for (std::size_t x = 0; x < alg.dim(); ++x) {
        for (std::size_t col = 0; col < basis.size(); ++col) {
            for (const auto& [t, c] : alg.bracket(x, basis[col])) {
                if (pos_of[t] == SIZE_MAX) throw InternalError("adjoint action leaves its component");
                out.mats[x](pos_of[t], col) += c;
            }
        }
    }
    return out;
}

// Induced action on sym^d or ext^d; basis is sorted (strictly, for ext) index tuples.
FactorRep apply_functor(const FactorRep& in, RepFactor::Functor fn, int d, std::size_t cap) {
    if (fn == RepFactor::Functor::none) return in;
    const bool sym = fn == RepFactor::Functor::sym;
    std::vector<std::vector<std::size_t>> basis;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> gen = [&](std::size_t start) {
        if (basis.size() > cap) return;
        if (cur.size() == static_cast<std::size_t>(d)) {
            basis.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < in.dim; ++i) {
            cur.push_back(i);
            gen(sym ? i : i + 1);
            cur.pop_back();
        }
    };
    gen(0);
    if (basis.size() > cap) throw ResourceError("functor module exceeds the oracle dimension cap");
    if (basis.empty()) throw DomainError("exterior power is zero");
    std::map<std::vector<std::size_t>, std::size_t> where;
    for (std::size_t k = 0; k < basis.size(); ++k) where[basis[k]] = k;

    FactorRep out;
    out.dim = basis.size();
    out.mats.assign(in.mats.size(), zero_matrix(out.dim));
    for (std::size_t x = 0; x < in.mats.size(); ++x) {
        const QMatrix& a = in.mats[x];
        if (a.is_zero()) continue;
        for (std::size_t col = 0; col < basis.size(); ++col) {
            const auto& tuple = basis[col];
            for (std::size_t p = 0; p < tuple.size(); ++p) {
                for (std::size_t j = 0; j < in.dim; ++j) {
                    const mpq_class& coef = a(j, tuple[p]);
                    if (sgn(coef) == 0) continue;
                    auto t = tuple;
                    t[p] = j;
                    int sign = 1;
                    if (sym) {
                        std::sort(t.begin(), t.end());
                    } else {
                        // bubble sort, tracking the permutation sign
                        bool dup = false;
                        for (std::size_t u = 0; u < t.size() && !dup; ++u)
                            for (std::size_t v = 0; v + 1 < t.size() - u; ++v) {
                                if (t[v] == t[v + 1]) dup = true;
                                if (t[v] > t[v + 1]) {
                                    std::swap(t[v], t[v + 1]);
                                    sign = -sign;
                                }
                            }
                        for (std::size_t v = 0; v + 1 < t.size(); ++v) dup = dup || t[v] == t[v + 1];
                        if (dup) continue;
                    }
                    out.mats[x](where.at(t), col) += sign * coef;
                }
            }
        }
    }
    return out;
}

}  // namespace

MatrixRep build_rep(const RepSpec& spec, std::shared_ptr<const ChevalleyAlgebra> alg, const OracleLimits& limits) {
    const auto& rs = alg->roots();
    const auto& dg = rs.diagram();
    if (spec.factors.size() != dg.num_components()) {
        throw DomainError("representation '" + spec.str() + "' has " + std::to_string(spec.factors.size()) +
                          " factors, diagram " + dg.literal() + " has " + std::to_string(dg.num_components()) +
                          " components");
    }
    std::vector<FactorRep> factors;
    std::size_t total = 1;
    for (std::size_t c = 0; c < spec.factors.size(); ++c) {
        const auto& fs = spec.factors[c];
        FactorRep base = fs.base == RepFactor::Base::defining ? defining_factor(*alg, c) : adjoint_factor(*alg, c);
        factors.push_back(apply_functor(base, fs.functor, fs.degree, limits.max_rep_dim));
        total *= factors.back().dim;
        if (total > limits.max_rep_dim) {
            throw ResourceError("representation '" + spec.str() + "' exceeds the oracle cap of " +
                                std::to_string(limits.max_rep_dim));
        }
    }

    MatrixRep rep;
    rep.spec_ = spec;
    rep.alg_ = alg;
    rep.mats_.assign(alg->dim(), zero_matrix(total));
    for (std::size_t c = 0; c < factors.size(); ++c) {
        std::size_t left = 1, right = 1;
        for (std::size_t k = 0; k < c; ++k) left *= factors[k].dim;
        for (std::size_t k = c + 1; k < factors.size(); ++k) right *= factors[k].dim;
        for (std::size_t x = 0; x < alg->dim(); ++x) {
            if (factors[c].mats[x].is_zero()) continue;
            rep.mats_[x] = rep.mats_[x] +
                           kron(kron(QMatrix::identity(left), factors[c].mats[x]), QMatrix::identity(right));
        }
    }

    for (std::size_t i = 0; i < alg->rank(); ++i) {
        if (!rep.mats_[i].is_diagonal()) throw InternalError("ρ(h_" + std::to_string(i + 1) + ") is not diagonal");
    }
    for (std::size_t v = 0; v < total; ++v) rep.weights_.push_back(diagonal_weight(rep.mats_, alg->rank(), v));

    for (std::size_t x = 0; x < alg->dim(); ++x) {
        for (std::size_t y = x + 1; y < alg->dim(); ++y) {
            QMatrix lhs = zero_matrix(total);
            for (const auto& [t, c] : alg->bracket(x, y)) lhs = lhs + mpq_class(c) * rep.mats_[t];
            if (!(lhs == commutator(rep.mats_[x], rep.mats_[y]))) {
                throw InternalError("representation '" + spec.str() + "' fails the bracket check on basis pair (" +
                                    std::to_string(x) + ", " + std::to_string(y) + ")");
            }
        }
    }

    QMatrix raising(alg->rank() * total, total);
    for (std::size_t i = 0; i < alg->rank(); ++i) {
        const QMatrix& m = rep.mats_[alg->e(alg->simple_index(i))];
        for (std::size_t a = 0; a < total; ++a)
            for (std::size_t b = 0; b < total; ++b) raising(i * total + a, b) = m(a, b);
    }
    const auto top = kernel(raising);
    if (top.size() != 1) {
        throw DomainError("representation '" + spec.str() + "' is not irreducible (" + std::to_string(top.size()) +
                          " highest weight vectors)");
    }
    for (std::size_t v = 0; v < total; ++v) {
        if (sgn(top[0][v]) != 0) {
            rep.highest_ = rep.weights_[v];
            break;
        }
    }
    return rep;
}

std::optional<RepSpec> rep_spec_for_weight(const Weight& lambda, const RootSystemData& rs) {
    RepSpec spec;
    const auto parts = rs.split(lambda);
    for (std::size_t c = 0; c < parts.size(); ++c) {
        const auto& comp = rs.diagram().components()[c];
        const auto& sys = rs.component_system(c);
        const Weight& w = parts[c];
        RepFactor f;
        if (w == sys.adjoint_weight(0)) {
            f.base = RepFactor::Base::adjoint;
            spec.factors.push_back(f);
            continue;
        }
        std::size_t nonzero = 0, node = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!w[i].is_zero()) {
                ++nonzero;
                node = i;
            }
        if (nonzero != 1 || !w[node].is_integer()) return std::nullopt;
        const auto coef = w[node].num();
        const auto n = static_cast<std::size_t>(comp.rank);
        const bool classical = comp.family == Family::A || comp.family == Family::B || comp.family == Family::C ||
                               comp.family == Family::D;
        if (!classical) return std::nullopt;
        if (node == 0 && (coef == 1 || comp.family == Family::A || comp.family == Family::C)) {
            if (coef > 1) {
                f.functor = RepFactor::Functor::sym;
                f.degree = static_cast<int>(coef);
            }
        } else if (coef == 1 && node > 0 &&
                   (comp.family == Family::A || (comp.family == Family::B && node + 1 < n) ||
                    (comp.family == Family::D && node + 2 < n))) {
            f.functor = RepFactor::Functor::ext;
            f.degree = static_cast<int>(node + 1);
        } else {
            return std::nullopt;
        }
        spec.factors.push_back(f);
    }
    return spec;
}

// ---------------------------------------------------------------- Γ

GammaBasis gperp_matrices(const MatrixRep& rep, const ParabolicMarking& marking) {
    const auto& alg = rep.algebra();
    const auto& rs = alg.roots();
    const std::size_t n = rep.dim();
    std::map<Weight, std::vector<std::pair<std::size_t, std::size_t>>> blocks;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) blocks[rep.basis_weights()[a] - rep.basis_weights()[b]].emplace_back(a, b);

    GammaBasis out;
    out.module_dim = n;
    for (const auto& [mu, vars] : blocks) {
        std::vector<std::size_t> ys;
        bool trace = false;
        if (mu.is_zero()) {
            for (std::size_t i = 0; i < alg.rank(); ++i) ys.push_back(alg.h(i));
            trace = true;
        } else {
            const auto rc = rs.weight_in_root_coords(-mu);
            Coeffs c;
            bool integral = true;
            for (const auto& q : rc) {
                if (!q.is_integer()) integral = false;
                c.push_back(static_cast<int>(q.num()));
            }
            if (integral)
                if (auto y = alg.root_vector(c)) ys.push_back(*y);
        }
        const std::size_t rows = ys.size() + (trace ? 1 : 0);
        QMatrix m(rows, vars.size());
        for (std::size_t r = 0; r < ys.size(); ++r) {
            const QMatrix& py = rep.matrix(ys[r]);
            for (std::size_t v = 0; v < vars.size(); ++v) m(r, v) = py(vars[v].second, vars[v].first);
        }
        if (trace)
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (vars[v].first == vars[v].second) m(rows - 1, v) = 1;
        if (rank(m) != rows) throw InternalError("trace form is degenerate on ρ(𝔤) at weight " + mu.str());
        const Rational deg = z_value(mu, marking, rs);
        if (!deg.is_integer()) throw InternalError("Γ weight " + mu.str() + " has a non-integral degree");
        for (auto& vec : kernel(m)) {
            GammaVector g{mu, deg, {}};
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (sgn(vec[v]) != 0) g.entries.emplace_back(vars[v].first * n + vars[v].second, vec[v]);
            out.vectors.push_back(std::move(g));
        }
    }
    const std::size_t expected = n * n - 1 - alg.dim();
    if (out.vectors.size() != expected) {
        throw InternalError("dim Γ = " + std::to_string(out.vectors.size()) + ", expected " + std::to_string(expected));
    }
    return out;
}

bool gamma_is_stable(const MatrixRep& rep, const GammaBasis& gamma) {
    const auto& alg = rep.algebra();
    const std::size_t n = rep.dim();
    std::map<Weight, std::vector<std::size_t>> by_weight;
    for (std::size_t k = 0; k < gamma.vectors.size(); ++k) by_weight[gamma.vectors[k].weight].push_back(k);
    for (std::size_t y = 0; y < alg.dim(); ++y) {
        const SparseRho rho(rep.matrix(y));
        const Weight shift = alg.roots().root_to_weight(alg.root_of(y));
        for (const auto& gv : gamma.vectors) {
            Sparse x(gv.entries.begin(), gv.entries.end()), img;
            rho.act(x, 1, img);
            prune(img);
            if (img.empty()) continue;
            auto it = by_weight.find(gv.weight + shift);
            if (it == by_weight.end()) return false;
            QMatrix m(it->second.size() + 1, n * n);
            for (std::size_t r = 0; r < it->second.size(); ++r)
                for (const auto& [key, v] : gamma.vectors[it->second[r]].entries) m(r, key) = v;
            for (const auto& [key, v] : img) m(it->second.size(), key) = v;
            if (rank(m) != it->second.size()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- cochains

GradedComplexDims h1_dims(const MatrixRep& rep, const ParabolicMarking& marking, std::int64_t d_max) {
    if (d_max < 1) throw DomainError("d_max must be at least 1");
    const auto& alg = rep.algebra();
    const auto& rs = alg.roots();
    const std::size_t n = rep.dim(), nn = n * n;
    const GammaBasis gamma = gperp_matrices(rep, marking);

    // 𝔤₋ basis e_{-γ}, Z(γ) > 0; its dual vector carries weight +γ.
    std::vector<std::size_t> gm;
    std::vector<Weight> gm_weight;
    std::vector<std::size_t> slot_of(alg.dim(), SIZE_MAX);
    for (std::size_t k = 0; k < alg.num_positive(); ++k) {
        if (root_degree(rs.positive_roots()[k].coeffs, marking) <= 0) continue;
        slot_of[alg.f(k)] = gm.size();
        gm.push_back(alg.f(k));
        gm_weight.push_back(rs.root_to_weight(rs.positive_roots()[k].coeffs));
    }
    const std::size_t m = gm.size();
    std::vector<SparseRho> rho;
    for (auto v : gm) rho.emplace_back(rep.matrix(v));
    auto pair_slot = [m](std::size_t a, std::size_t b) { return a * m + b; };

    std::map<Weight, std::vector<std::size_t>> gamma_at;
    for (std::size_t k = 0; k < gamma.vectors.size(); ++k) gamma_at[gamma.vectors[k].weight].push_back(k);
    auto sparse_of = [&](std::size_t k) {
        return Sparse(gamma.vectors[k].entries.begin(), gamma.vectors[k].entries.end());
    };

    // ∂⁰X(v) = v.X
    auto d0 = [&](const Sparse& x) {
        std::vector<Sparse> phi(m);
        for (std::size_t s = 0; s < m; ++s) {
            rho[s].act(x, 1, phi[s]);
            prune(phi[s]);
        }
        return phi;
    };
    // ∂¹φ(v_a, v_b) = φ([v_a, v_b]) + v_b.φ(v_a) - v_a.φ(v_b), stored on a < b
    auto d1 = [&](const std::vector<Sparse>& phi) {
        Sparse out;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b) {
                Sparse val;
                for (const auto& [t, c] : alg.bracket(gm[a], gm[b])) {
                    const auto s = slot_of.at(t);
                    if (s == SIZE_MAX) throw InternalError("𝔤₋ is not closed under the bracket");
                    for (const auto& [key, v] : phi[s]) val[key] += mpq_class(c) * v;
                }
                rho[b].act(phi[a], 1, val);
                rho[a].act(phi[b], -1, val);
                for (const auto& [key, v] : val)
                    if (sgn(v) != 0) out[pair_slot(a, b) * nn + key] += v;
            }
        prune(out);
        return out;
    };
    auto flatten = [&](const std::vector<Sparse>& phi) {
        Sparse out;
        for (std::size_t s = 0; s < m; ++s)
            for (const auto& [key, v] : phi[s]) out[s * nn + key] = v;
        return out;
    };
    auto rank_of = [](const std::vector<Sparse>& cols) -> std::int64_t {
        if (cols.empty()) return 0;
        std::map<std::size_t, std::size_t> row_of;
        for (const auto& c : cols)
            for (const auto& [key, v] : c) row_of.emplace(key, 0);
        std::size_t r = 0;
        for (auto& [key, idx] : row_of) idx = r++;
        if (row_of.empty()) return 0;
        QMatrix mat(row_of.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [key, v] : cols[j]) mat(row_of.at(key), j) = v;
        return static_cast<std::int64_t>(rank(mat));
    };

    // Total weights ω of C¹ and the pieces that live there.
    std::set<Weight> weights;
    for (std::size_t s = 0; s < m; ++s)
        for (const auto& [mu, ks] : gamma_at) weights.insert(mu + gm_weight[s]);
    for (const auto& [mu, ks] : gamma_at) weights.insert(mu);

    GradedComplexDims out{marking, d_max, static_cast<std::int64_t>(gamma.vectors.size()), {}, 0};
    std::map<Rational, DegreeDims> per_degree;
    for (const auto& omega : weights) {
        const Rational deg = z_value(omega, marking, rs);
        if (deg > Rational(d_max)) continue;
        auto& dd = per_degree[deg];
        dd.degree = deg;

        std::vector<Sparse> c1_cols, d0_cols;
        std::vector<std::vector<Sparse>> d0_full;
        for (std::size_t s = 0; s < m; ++s) {
            auto it = gamma_at.find(omega - gm_weight[s]);
            if (it == gamma_at.end()) continue;
            for (auto k : it->second) {
                std::vector<Sparse> phi(m);
                phi[s] = sparse_of(k);
                c1_cols.push_back(d1(phi));
                ++dd.c1;
            }
        }
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b) {
                auto it = gamma_at.find(omega - gm_weight[a] - gm_weight[b]);
                if (it != gamma_at.end()) dd.c2 += static_cast<std::int64_t>(it->second.size());
            }
        if (auto it = gamma_at.find(omega); it != gamma_at.end()) {
            for (auto k : it->second) {
                auto phi = d0(sparse_of(k));
                if (!d1(phi).empty()) throw InternalError("∂¹∘∂⁰ ≠ 0 at weight " + omega.str());
                d0_cols.push_back(flatten(phi));
            }
            dd.c0 += static_cast<std::int64_t>(it->second.size());
        }
        ++out.blocks_checked;
        dd.rank0 += rank_of(d0_cols);
        dd.rank1 += rank_of(c1_cols);
    }
    for (auto& [deg, dd] : per_degree) {
        if (dd.c1 == 0) continue;
        dd.h1 = dd.c1 - dd.rank1 - dd.rank0;
        if (dd.h1 < 0) throw InternalError("negative cohomology dimension");
        out.degrees.push_back(dd);
    }
    return out;
}

}  // namespace rigidity
