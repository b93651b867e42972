#include "cliffgraph/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cliffgraph/errors.hpp"

namespace cliff {

namespace {

std::vector<unsigned> prime_factors(unsigned m) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) out.push_back(m);
    return out;
}

// Exact division of integer polynomials, divisor monic.
std::vector<Int> divide_monic(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
        Int c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        int shift = i - static_cast<int>(den.size()) + 1;
        quot[static_cast<std::size_t>(shift)] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[static_cast<std::size_t>(shift) + j] -= c * den[j];
    }
    for (const Int& c : rem)
        if (c != 0) throw consistency_error("cyclotomic polynomial division not exact");
    while (quot.size() > 1 && quot.back() == 0) quot.pop_back();
    return quot;
}

std::mutex cyclo_cache_mutex;
std::map<unsigned, std::vector<Int>> phi_poly_cache;
// (m, d) -> columns of x^{(m/d)j} mod Phi_m, j < phi(d)
std::map<std::pair<unsigned, unsigned>, std::vector<std::vector<Int>>> descent_basis_cache;

// Remainder of a rational polynomial modulo the monic integer polynomial mod.
std::vector<Rational> poly_mod(std::vector<Rational> poly, const std::vector<Int>& mod) {
    const std::size_t deg = mod.size() - 1;
    for (int i = static_cast<int>(poly.size()) - 1; i >= static_cast<int>(deg); --i) {
        Rational c = poly[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        poly[static_cast<std::size_t>(i)] = 0;
        int shift = i - static_cast<int>(deg);
        for (std::size_t j = 0; j < deg; ++j)
            poly[static_cast<std::size_t>(shift) + j] -= c * Rational(mod[j]);
    }
    poly.resize(deg, Rational(0));
    return poly;
}

// Solves sum_j x_j * cols[j] = target over Q; empty optional if inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Int>>& cols,
                                                   const std::vector<Rational>& target) {
    const std::size_t rows = target.size();
    const std::size_t k = cols.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < cols[j].size() && i < rows; ++i) m[i][j] = Rational(cols[j][i]);
    for (std::size_t i = 0; i < rows; ++i) m[i][k] = target[i];

    std::vector<int> pivot_col_of_row(rows, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j <= k; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col_of_row[row] = static_cast<int>(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (m[i][k] != 0) return std::nullopt;
    std::vector<Rational> x(k, Rational(0));
    for (std::size_t i = 0; i < row; ++i)
        x[static_cast<std::size_t>(pivot_col_of_row[i])] = m[i][k];
    return x;
}

const std::vector<std::vector<Int>>& descent_basis(unsigned m, unsigned d) {
    auto key = std::make_pair(m, d);
    {
        std::lock_guard<std::mutex> lock(cyclo_cache_mutex);
        auto it = descent_basis_cache.find(key);
        if (it != descent_basis_cache.end()) return it->second;
    }
    const std::vector<Int>& phi_m = cyclotomic_polynomial(m);
    unsigned k = euler_phi(d);
    std::vector<std::vector<Int>> cols;
    for (unsigned j = 0; j < k; ++j) {
        std::vector<Rational> p((m / d) * j + 1, Rational(0));
        p.back() = 1;
        std::vector<Rational> r = poly_mod(std::move(p), phi_m);
        std::vector<Int> col(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) col[i] = numerator(r[i]);  // integral here
        cols.push_back(std::move(col));
    }
    std::lock_guard<std::mutex> lock(cyclo_cache_mutex);
    return descent_basis_cache.emplace(key, std::move(cols)).first->second;
}

}  // namespace

unsigned euler_phi(unsigned m) {
    unsigned out = m;
    for (unsigned p : prime_factors(m)) out = out / p * (p - 1);
    return out;
}

const std::vector<Int>& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw input_error("conductor must be positive");
    {
        std::lock_guard<std::mutex> lock(cyclo_cache_mutex);
        auto it = phi_poly_cache.find(m);
        if (it != phi_poly_cache.end()) return it->second;
    }
    // Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d, computed outside the lock.
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(cyclo_cache_mutex);
    return phi_poly_cache.emplace(m, std::move(num)).first->second;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned m, long k) {
    if (m == 0) throw input_error("conductor must be positive");
    long e = k % static_cast<long>(m);
    if (e < 0) e += static_cast<long>(m);
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
    poly.back() = 1;
    return from_poly(m, std::move(poly));
}

Cyclotomic Cyclotomic::from_poly(unsigned m, std::vector<Rational> poly) {
    Cyclotomic out(m, poly_mod(std::move(poly), cyclotomic_polynomial(m)));
    out.normalize();
    return out;
}

void Cyclotomic::normalize() {
    coef_.resize(euler_phi(cond_), Rational(0));
    for (;;) {
        bool rational = true;
        for (std::size_t i = 1; i < coef_.size(); ++i)
            if (coef_[i] != 0) {
                rational = false;
                break;
            }
        if (rational) {
            coef_.resize(1);
            cond_ = 1;
            return;
        }
        bool descended = false;
        for (unsigned p : prime_factors(cond_)) {
            unsigned d = cond_ / p;
            if (d <= 1) continue;  // rational case handled above
            auto sol = solve_columns(descent_basis(cond_, d), coef_);
            if (sol) {
                cond_ = d;
                coef_ = std::move(*sol);
                coef_.resize(euler_phi(cond_), Rational(0));
                descended = true;
                break;
            }
        }
        if (!descended) return;
    }
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (cond_ != 1) return std::nullopt;
    return coef_[0];
}

std::optional<Int> Cyclotomic::as_rational_integer() const {
    if (cond_ != 1) return std::nullopt;
    if (denominator(coef_[0]) != 1) return std::nullopt;
    return numerator(coef_[0]);
}

bool Cyclotomic::has_integral_coefficients() const {
    for (const auto& c : coef_)
        if (denominator(c) != 1) return false;
    return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    if (cond_ == rhs.cond_) {
        std::vector<Rational> c = coef_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coef_[i];
        Cyclotomic out(cond_, std::move(c));
        out.normalize();
        return out;
    }
    if (cond_ == 1) {
        std::vector<Rational> c = rhs.coef_;
        c[0] += coef_[0];
        Cyclotomic out(rhs.cond_, std::move(c));
        out.normalize();
        return out;
    }
    if (rhs.cond_ == 1) return rhs + *this;
    unsigned m = static_cast<unsigned>(std::lcm(cond_, rhs.cond_));
    std::vector<Rational> a(static_cast<std::size_t>(m / cond_) * (coef_.size() - 1) + 1, Rational(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) a[i * (m / cond_)] = coef_[i];
    std::size_t blen = static_cast<std::size_t>(m / rhs.cond_) * (rhs.coef_.size() - 1) + 1;
    if (blen > a.size()) a.resize(blen, Rational(0));
    for (std::size_t i = 0; i < rhs.coef_.size(); ++i) a[i * (m / rhs.cond_)] += rhs.coef_[i];
    return from_poly(m, std::move(a));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c = coef_;
    for (auto& v : c) v = -v;
    return Cyclotomic(cond_, std::move(c));  // negation preserves canonical form
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    if (cond_ == 1) return rhs.scaled(coef_[0]);
    if (rhs.cond_ == 1) return scaled(rhs.coef_[0]);
    unsigned m = static_cast<unsigned>(std::lcm(cond_, rhs.cond_));
    std::vector<Rational> a(static_cast<std::size_t>(m / cond_) * (coef_.size() - 1) + 1, Rational(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) a[i * (m / cond_)] = coef_[i];
    std::vector<Rational> b(static_cast<std::size_t>(m / rhs.cond_) * (rhs.coef_.size() - 1) + 1,
                            Rational(0));
    for (std::size_t i = 0; i < rhs.coef_.size(); ++i) b[i * (m / rhs.cond_)] = rhs.coef_[i];
    std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    return from_poly(m, std::move(prod));
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    if (r == 0) return Cyclotomic();
    std::vector<Rational> c = coef_;
    for (auto& v : c) v *= r;
    return Cyclotomic(cond_, std::move(c));  // nonzero scaling preserves conductor
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (cond_ == 1) return *this;
    long kk = k % static_cast<long>(cond_);
    if (kk < 0) kk += static_cast<long>(cond_);
    if (std::gcd(kk, static_cast<long>(cond_)) != 1)
        throw precondition_error("galois exponent not coprime to conductor");
    std::vector<Rational> poly(cond_, Rational(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        poly[(i * static_cast<unsigned long>(kk)) % cond_] += coef_[i];
    }
    return from_poly(cond_, std::move(poly));
}

Cyclotomic Cyclotomic::conjugate() const {
    return galois(static_cast<long>(cond_) - 1);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw precondition_error("inverse of zero");
    if (cond_ == 1) return Cyclotomic(Rational(1) / coef_[0]);
    // Extended Euclid in Q[x] against Phi_m: u*a + v*Phi = gcd (a unit).
    const std::vector<Int>& phi = cyclotomic_polynomial(cond_);
    std::vector<Rational> r0(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = Rational(phi[i]);
    std::vector<Rational> r1 = coef_;
    std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};
    auto deg = [](const std::vector<Rational>& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (p[static_cast<std::size_t>(i)] != 0) return i;
        return -1;
    };
    while (deg(r1) > 0) {
        int d1 = deg(r1);
        std::vector<Rational> q(static_cast<std::size_t>(deg(r0) - d1) + 1, Rational(0));
        std::vector<Rational> rem = r0;
        for (int i = deg(r0); i >= d1; --i) {
            Rational c = rem[static_cast<std::size_t>(i)] / r1[static_cast<std::size_t>(d1)];
            if (c == 0) continue;
            q[static_cast<std::size_t>(i - d1)] = c;
            for (int j = 0; j <= d1; ++j)
                rem[static_cast<std::size_t>(i - d1 + j)] -= c * r1[static_cast<std::size_t>(j)];
        }
        // u_next = u0 - q*u1
        std::vector<Rational> un(std::max(u0.size(), q.size() + u1.size() - 1), Rational(0));
        for (std::size_t i = 0; i < u0.size(); ++i) un[i] = u0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < u1.size(); ++j) un[i + j] -= q[i] * u1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(un);
    }
    if (deg(r1) != 0) throw consistency_error("nonzero cyclotomic not invertible");
    Rational lead = r1[0];
    for (auto& c : u1) c /= lead;
    return from_poly(cond_, std::move(u1));
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << rational_to_string(coef_[0]);
        } else {
            os << rational_to_string(coef_[i]) << "*z(" << cond_ << ")^" << i;
        }
    }
    return os.str();
}

}  // namespace cliff
