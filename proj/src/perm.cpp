#include "cliffgraph/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cliffgraph/errors.hpp"

namespace cliff {

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    if (img_.empty()) throw input_error("permutation of degree 0");
    std::vector<bool> seen(img_.size(), false);
    for (std::uint8_t v : img_) {
        if (v >= img_.size() || seen[v]) throw input_error("permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree <= 0) throw input_error("permutation degree must be positive");
    std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    Permutation out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out.img_[i] = img_[rhs.img_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return out;
}

Permutation Permutation::power(long e) const {
    int n = order();
    long r = e % n;
    if (r < 0) r += n;
    Permutation acc = identity(degree());
    Permutation base = *this;
    while (r > 0) {
        if (r & 1) acc = acc * base;
        base = base * base;
        r >>= 1;
    }
    return acc;
}

int Permutation::order() const {
    std::vector<bool> seen(img_.size(), false);
    long ord = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return static_cast<int>(ord);
}

// The conjugate of a by g, acting as cycle relabeling: points of a are mapped
// through g, so e.g. (1 2) conjugated by (1 2 3) is (2 3).
Permutation conjugate(const Permutation& a, const Permutation& g) {
    return g * a * g.inverse();
}

Permutation parse_permutation(std::string_view text, int degree) {
    if (degree <= 0) throw input_error("permutation degree must be positive");
    std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    std::vector<bool> used(static_cast<std::size_t>(degree), false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == text.size()) throw input_error("empty permutation text");
    bool any_cycle = false;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw input_error("expected '(' in cycle text: " + std::string(text));
        ++i;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (i == text.size()) throw input_error("unterminated cycle: " + std::string(text));
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!isdigit(static_cast<unsigned char>(text[i])))
                throw input_error("expected point or ')' in cycle text: " + std::string(text));
            int v = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 100000) throw input_error("point out of range");
                ++i;
            }
            if (v < 1 || v > degree)
                throw input_error("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
            if (used[static_cast<std::size_t>(v - 1)])
                throw input_error("point " + std::to_string(v) + " repeated in cycle text");
            used[static_cast<std::size_t>(v - 1)] = true;
            cycle.push_back(v - 1);
        }
        any_cycle = true;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            img[static_cast<std::size_t>(cycle[k])] =
                static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    }
    skip_ws();
    if (i != text.size() || !any_cycle) throw input_error("malformed cycle text: " + std::string(text));
    return Permutation(std::move(img));
}

std::string cycle_string(const Permutation& p) {
    std::ostringstream os;
    std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
    bool printed = false;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || p(i) == i) continue;
        os << '(';
        int j = i;
        bool first = true;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            if (!first) os << ' ';
            os << (j + 1);
            first = false;
            j = p(j);
        }
        os << ')';
        printed = true;
    }
    if (!printed) return "()";
    return os.str();
}

}  // namespace cliff
