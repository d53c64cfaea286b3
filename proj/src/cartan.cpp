#include "rigidity/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>

#include "rigidity/errors.hpp"

namespace rigidity {

std::string SimpleComponent::literal() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

namespace {

void validate(const SimpleComponent& c) {
    const auto bad = [&](const char* why) {
        throw DomainError("invalid Dynkin component " + c.literal() + ": " + why);
    };
    if (c.rank < 1) bad("rank must be at least 1");
    switch (c.family) {
        case Family::A: break;
        case Family::B:
        case Family::C:
            if (c.rank < 2) bad("B and C need rank >= 2");
            break;
        case Family::D:
            if (c.rank < 3) bad("D needs rank >= 3");
            break;
        case Family::E:
            if (c.rank < 6 || c.rank > 8) bad("E needs rank 6, 7 or 8");
            break;
        case Family::F:
            if (c.rank != 4) bad("F needs rank 4");
            break;
        case Family::G:
            if (c.rank != 2) bad("G needs rank 2");
            break;
        default: bad("unknown family");
    }
}

// Local Cartan matrix C_ij = <α_i, α_j^∨>, 0-based.
std::vector<int> local_cartan(const SimpleComponent& c) {
    const int n = c.rank;
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    auto at = [&](int i, int j) -> int& { return m[static_cast<std::size_t>(i * n + j)]; };
    auto bond = [&](int i, int j) { at(i, j) = at(j, i) = -1; };
    for (int i = 0; i < n; ++i) at(i, i) = 2;
    switch (c.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            at(n - 2, n - 1) = -2;
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            at(n - 1, n - 2) = -2;
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case Family::E:
            bond(0, 2);
            bond(1, 3);
            for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::F:
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
            at(1, 2) = -2;
            break;
        case Family::G:
            bond(0, 1);
            at(1, 0) = -3;
            break;
    }
    return m;
}

std::vector<Rational> invert(const std::vector<int>& m, std::size_t n) {
    std::vector<Rational> a(n * 2 * n);
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * 2 * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) at(i, j) = Rational(m[i * n + j]);
        at(i, n + i) = Rational(1);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && at(piv, col).is_zero()) ++piv;
        if (piv == n) throw InternalError("singular Cartan matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(piv, j), at(col, j));
        }
        const Rational inv = Rational(1) / at(col, col);
        for (std::size_t j = 0; j < 2 * n; ++j) at(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || at(i, col).is_zero()) continue;
            const Rational f = at(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(col, j);
        }
    }
    std::vector<Rational> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = at(i, n + j);
    return out;
}

}  // namespace

DynkinDiagram::DynkinDiagram(std::vector<SimpleComponent> components) : components_(std::move(components)) {
    if (components_.empty()) throw DomainError("empty Dynkin diagram");
    for (const auto& c : components_) {
        validate(c);
        offsets_.push_back(total_rank_);
        total_rank_ += static_cast<std::size_t>(c.rank);
    }
}

DynkinDiagram DynkinDiagram::parse(std::string_view literal) {
    std::vector<SimpleComponent> comps;
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) {
        throw DomainError("cannot parse diagram '" + std::string(literal) + "': " + why);
    };
    if (literal.empty()) fail("empty literal");
    while (true) {
        if (pos >= literal.size()) fail("expected a component");
        const char f = literal[pos];
        if (f < 'A' || f > 'G') fail(std::string("unknown family '") + f + "'");
        ++pos;
        const std::size_t start = pos;
        while (pos < literal.size() && std::isdigit(static_cast<unsigned char>(literal[pos]))) ++pos;
        if (pos == start) fail("missing rank after family letter");
        if (pos - start > 3) fail("rank too large");
        const int r = std::stoi(std::string(literal.substr(start, pos - start)));
        comps.push_back({static_cast<Family>(f), r});
        if (pos == literal.size()) break;
        if (literal[pos] != 'x') fail(std::string("unexpected character '") + literal[pos] + "'");
        ++pos;
    }
    return DynkinDiagram(std::move(comps));
}

std::string DynkinDiagram::literal() const {
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) s += 'x';
        s += components_[i].literal();
    }
    return s;
}

std::size_t DynkinDiagram::component_of(std::size_t node) const {
    if (node >= total_rank_) throw DomainError("node " + std::to_string(node + 1) + " out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), node);
    return static_cast<std::size_t>(std::distance(offsets_.begin(), it)) - 1;
}

std::size_t expected_positive_root_count(const SimpleComponent& c) {
    const auto n = static_cast<std::size_t>(c.rank);
    switch (c.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;
}

RootSystemData::RootSystemData(DynkinDiagram diagram) : diagram_(std::move(diagram)) {
    const std::size_t n = rank();
    cartan_.assign(n * n, 0);
    for (std::size_t c = 0; c < diagram_.num_components(); ++c) {
        const auto& comp = diagram_.components()[c];
        const auto local = local_cartan(comp);
        const std::size_t off = diagram_.offset(c);
        const auto r = static_cast<std::size_t>(comp.rank);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) cartan_[(off + i) * n + off + j] = local[i * r + j];
    }
    inverse_ = invert(cartan_, n);

    // Symmetrizer: (α_i, α_j) = C_ij d_j must be symmetric.
    half_norm_.assign(n, Rational(0));
    for (std::size_t c = 0; c < diagram_.num_components(); ++c) {
        const std::size_t off = diagram_.offset(c);
        const auto r = static_cast<std::size_t>(diagram_.components()[c].rank);
        std::queue<std::size_t> todo;
        half_norm_[off] = Rational(1);
        todo.push(off);
        while (!todo.empty()) {
            const std::size_t i = todo.front();
            todo.pop();
            for (std::size_t j = off; j < off + r; ++j) {
                if (j == i || cartan(i, j) == 0 || !half_norm_[j].is_zero()) continue;
                half_norm_[j] = Rational(cartan(j, i)) * half_norm_[i] / Rational(cartan(i, j));
                todo.push(j);
            }
        }
        Rational smallest = half_norm_[off];
        for (std::size_t j = off; j < off + r; ++j) smallest = std::min(smallest, half_norm_[j]);
        for (std::size_t j = off; j < off + r; ++j) half_norm_[j] /= smallest;
    }

    // Positive roots by closure: β + α_i is a root iff p - <β, α_i^∨> > 0.
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> level;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        level.push_back(e);
        known.insert(e);
    }
    std::vector<std::vector<int>> all = level;
    while (!level.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& beta : level) {
            for (std::size_t i = 0; i < n; ++i) {
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.contains(down)) break;
                    ++p;
                }
                int pairing = 0;
                for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan(j, i);
                if (p - pairing > 0) {
                    auto up = beta;
                    up[i] += 1;
                    if (!known.contains(up)) next.insert(up);
                }
            }
        }
        level.assign(next.begin(), next.end());
        for (const auto& r : level) {
            known.insert(r);
            all.push_back(r);
        }
    }
    for (auto& coeffs : all) {
        Root r;
        r.coeffs = coeffs;
        for (int v : coeffs) r.height += v;
        for (std::size_t j = 0; j < n; ++j) {
            if (coeffs[j] != 0) {
                r.component = diagram_.component_of(j);
                break;
            }
        }
        // α^∨ = Σ a_j d_j / ((α,α)/2) α_j^∨
        Rational half_len(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (coeffs[i] && coeffs[j]) half_len += Rational(coeffs[i] * coeffs[j] * cartan(i, j)) * half_norm_[j];
        half_len /= Rational(2);
        r.coroot.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            r.coroot[j] = static_cast<int>((Rational(coeffs[j]) * half_norm_[j] / half_len).to_integer());
        }
        positive_.push_back(std::move(r));
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coeffs > b.coeffs;
    });

    highest_.assign(diagram_.num_components(), 0);
    std::vector<int> best(diagram_.num_components(), 0);
    for (std::size_t k = 0; k < positive_.size(); ++k) {
        const auto& r = positive_[k];
        if (r.height > best[r.component]) {
            best[r.component] = r.height;
            highest_[r.component] = k;
        }
    }

    if (diagram_.num_components() > 1) {
        for (const auto& comp : diagram_.components()) {
            components_.push_back(std::make_shared<const RootSystemData>(DynkinDiagram({comp})));
        }
    }
}

std::vector<Rational> RootSystemData::inverse_cartan_diagonal() const {
    std::vector<Rational> d;
    for (std::size_t i = 0; i < rank(); ++i) d.push_back(inverse_cartan(i, i));
    return d;
}

std::optional<std::size_t> RootSystemData::positive_root_index(const std::vector<int>& coeffs) const {
    if (coeffs.size() != rank()) return std::nullopt;
    int h = 0;
    for (int v : coeffs) {
        if (v < 0) return std::nullopt;
        h += v;
    }
    auto lo = std::lower_bound(positive_.begin(), positive_.end(), h,
                               [](const Root& r, int height) { return r.height < height; });
    for (auto it = lo; it != positive_.end() && it->height == h; ++it) {
        if (it->coeffs == coeffs) return static_cast<std::size_t>(std::distance(positive_.begin(), it));
    }
    return std::nullopt;
}

Weight RootSystemData::rho() const {
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i) w[i] = Rational(1);
    return w;
}

Weight RootSystemData::fundamental(std::size_t i) const {
    Weight w(rank());
    w[i] = Rational(1);
    return w;
}

Weight RootSystemData::root_to_weight(const std::vector<int>& coeffs) const {
    if (coeffs.size() != rank()) throw DomainError("root length mismatch");
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) w[j] += Rational(coeffs[i] * cartan(i, j));
    }
    return w;
}

Weight RootSystemData::root_to_weight(const std::vector<Rational>& coeffs) const {
    if (coeffs.size() != rank()) throw DomainError("root length mismatch");
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < rank(); ++j) w[j] += coeffs[i] * Rational(cartan(i, j));
    }
    return w;
}

Weight RootSystemData::simple_root(std::size_t i) const {
    Weight w(rank());
    for (std::size_t j = 0; j < rank(); ++j) w[j] = Rational(cartan(i, j));
    return w;
}

std::vector<Rational> RootSystemData::weight_in_root_coords(const Weight& w) const {
    check_weight(w);
    std::vector<Rational> out(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
        if (w[j].is_zero()) continue;
        for (std::size_t i = 0; i < rank(); ++i) out[i] += w[j] * inverse_cartan(j, i);
    }
    return out;
}

Rational RootSystemData::coroot_pairing(const Weight& w, const Root& alpha) const {
    Rational s(0);
    for (std::size_t j = 0; j < rank(); ++j)
        if (alpha.coroot[j] != 0) s += w[j] * Rational(alpha.coroot[j]);
    return s;
}

Rational RootSystemData::inner(const Weight& a, const Weight& b) const {
    check_weight(a);
    check_weight(b);
    Rational s(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (b[j].is_zero() || inverse_cartan(i, j).is_zero()) continue;
            s += a[i] * b[j] * inverse_cartan(i, j) * half_norm_[j];
        }
    }
    return s;
}

const RootSystemData& RootSystemData::component_system(std::size_t c) const {
    if (c >= diagram_.num_components()) throw DomainError("component index out of range");
    if (components_.empty()) return *this;
    return *components_[c];
}

std::vector<Weight> RootSystemData::split(const Weight& w) const {
    check_weight(w);
    std::vector<Weight> parts;
    for (std::size_t c = 0; c < diagram_.num_components(); ++c) {
        const auto r = static_cast<std::size_t>(diagram_.components()[c].rank);
        std::vector<Rational> coords(w.coords().begin() + static_cast<long>(diagram_.offset(c)),
                                     w.coords().begin() + static_cast<long>(diagram_.offset(c) + r));
        parts.emplace_back(std::move(coords));
    }
    return parts;
}

Weight RootSystemData::join(const std::vector<Weight>& parts) const {
    if (parts.size() != diagram_.num_components()) throw DomainError("component count mismatch");
    std::vector<Rational> coords;
    for (std::size_t c = 0; c < parts.size(); ++c) {
        if (parts[c].size() != static_cast<std::size_t>(diagram_.components()[c].rank)) {
            throw DomainError("component weight length mismatch");
        }
        coords.insert(coords.end(), parts[c].coords().begin(), parts[c].coords().end());
    }
    return Weight(std::move(coords));
}

Weight RootSystemData::adjoint_weight(std::size_t component) const { return root_to_weight(highest_root(component).coeffs); }

void RootSystemData::check_weight(const Weight& w) const {
    if (w.size() != rank()) {
        throw DomainError("weight has " + std::to_string(w.size()) + " coordinates, diagram " + diagram_.literal() +
                          " has rank " + std::to_string(rank()));
    }
}

std::shared_ptr<const RootSystemData> build_root_system(const DynkinDiagram& diagram) {
    return std::make_shared<const RootSystemData>(diagram);
}

}  // namespace rigidity
