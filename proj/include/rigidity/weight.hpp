#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rigidity/rational.hpp"

namespace rigidity {

/// A weight in fundamental-weight coordinates: w = Σ w^i ω_i.
///
/// Coordinates are exact rationals; highest weights, Weyl-orbit points and
/// ρ-shifted reflections are always integral, but Z-values and root-coordinate
/// conversions are not.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : coords_(rank) {}
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<std::int64_t> ints);

    static Weight from_integers(std::span<const std::int64_t> ints);

    [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coords_.at(i); }
    Rational& operator[](std::size_t i) { return coords_.at(i); }
    [[nodiscard]] const std::vector<Rational>& coords() const noexcept { return coords_; }

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_integral() const noexcept;
    [[nodiscard]] bool is_dominant() const noexcept;

    /// "(1, 0, -2)"
    [[nodiscard]] std::string str() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight& operator*=(const Rational& s);
    Weight operator-() const;

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
    friend Weight operator*(const Rational& s, Weight a) { return a *= s; }

    friend bool operator==(const Weight&, const Weight&) = default;
    /// Lexicographic; only a container order, not the dominance order.
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

private:
    void check_same_size(const Weight& o) const;

    std::vector<Rational> coords_;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace rigidity
