#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cliff {

// A bijection of the points {0, ..., degree-1}. External text is 1-based
// disjoint cycle notation; the identity renders as "()".
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint8_t> images);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int point) const { return img_[static_cast<std::size_t>(point)]; }
    bool is_identity() const;

    // (p * q)(x) = p(q(x))
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    Permutation power(long e) const;
    int order() const;

    const std::vector<std::uint8_t>& images() const { return img_; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<std::uint8_t> img_;
};

// g^-1 * a * g
Permutation conjugate(const Permutation& a, const Permutation& g);

// Parses 1-based disjoint cycle text such as "(1 2)(3 4)"; "()" is the
// identity. Throws input_error on malformed text, repeated points, or points
// outside 1..degree.
Permutation parse_permutation(std::string_view text, int degree);

// Canonical disjoint cycle rendering, 1-based, fixed points omitted.
std::string cycle_string(const Permutation& p);

}  // namespace cliff
