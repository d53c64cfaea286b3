#include "rigidity/weight.hpp"

#include <algorithm>
#include <sstream>

#include "rigidity/errors.hpp"

namespace rigidity {

Weight::Weight(std::initializer_list<std::int64_t> ints) {
    coords_.reserve(ints.size());
    for (auto v : ints) coords_.emplace_back(v);
}

Weight Weight::from_integers(std::span<const std::int64_t> ints) {
    std::vector<Rational> c;
    c.reserve(ints.size());
    for (auto v : ints) c.emplace_back(v);
    return Weight(std::move(c));
}

bool Weight::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool Weight::is_integral() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q.is_integer(); });
}

bool Weight::is_dominant() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q.sign() >= 0; });
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

void Weight::check_same_size(const Weight& o) const {
    if (o.size() != size()) {
        throw DomainError("weight length mismatch: " + std::to_string(size()) + " vs " + std::to_string(o.size()));
    }
}

Weight& Weight::operator+=(const Weight& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                  b.coords_.end());
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& c : w.coords()) {
        h ^= static_cast<std::size_t>(c.num()) * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(c.den());
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace rigidity
