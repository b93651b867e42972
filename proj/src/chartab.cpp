#include "cliffgraph/chartab.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cliffgraph/errors.hpp"

namespace cliff {

namespace {

using u64 = std::uint64_t;

u64 modpow(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

u64 modinv(u64 a, u64 p) { return modpow(a % p, p - 2, p); }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

u64 primitive_root(u64 p) {
    std::vector<long> qs = prime_divisors(static_cast<long>(p - 1));
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs)
            if (modpow(g, (p - 1) / static_cast<u64>(q), p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw consistency_error("no primitive root found");
}

using Vec = std::vector<u64>;  // vector over GF(p)
using Basis = std::vector<Vec>;

// Reduced row echelon form of the given spanning vectors; pivot columns
// strictly increasing, pivots 1, pivot columns cleared elsewhere.
Basis echelonize(Basis rows, u64 p) {
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    Basis out;
    std::vector<int> pivots;
    for (auto& v : rows) {
        for (std::size_t k = 0; k < out.size(); ++k) {
            u64 c = v[static_cast<std::size_t>(pivots[k])];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + (p - c) * out[k][j]) % p;
        }
        std::size_t piv = 0;
        while (piv < n && v[piv] == 0) ++piv;
        if (piv == n) continue;
        u64 inv = modinv(v[piv], p);
        for (std::size_t j = 0; j < n; ++j) v[j] = v[j] * inv % p;
        for (std::size_t k = 0; k < out.size(); ++k) {
            u64 c = out[k][piv];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[k][j] = (out[k][j] + (p - c) * v[j]) % p;
        }
        // keep pivot columns sorted
        std::size_t pos = 0;
        while (pos < pivots.size() && static_cast<std::size_t>(pivots[pos]) < piv) ++pos;
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), v);
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<int>(piv));
    }
    return out;
}

// Basis of the right nullspace of the k x k matrix a.
Basis nullspace(std::vector<Vec> a, u64 p) {
    const std::size_t k = a.size();
    // column echelon via row ops on transpose-free gaussian
    std::vector<int> pivot_row_of_col(k, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < k; ++col) {
        std::size_t sel = row;
        while (sel < k && a[sel][col] == 0) ++sel;
        if (sel == k) continue;
        std::swap(a[sel], a[row]);
        u64 inv = modinv(a[row][col], p);
        for (std::size_t j = 0; j < k; ++j) a[row][j] = a[row][j] * inv % p;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == row) continue;
            u64 c = a[i][col];
            if (c == 0) continue;
            for (std::size_t j = 0; j < k; ++j) a[i][j] = (a[i][j] + (p - c) * a[row][j]) % p;
        }
        pivot_row_of_col[col] = static_cast<int>(row);
        ++row;
    }
    Basis out;
    for (std::size_t col = 0; col < k; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        Vec v(k, 0);
        v[col] = 1;
        for (std::size_t c2 = 0; c2 < k; ++c2)
            if (pivot_row_of_col[c2] >= 0)
                v[c2] = (p - a[static_cast<std::size_t>(pivot_row_of_col[c2])][col] % p) % p;
        out.push_back(std::move(v));
    }
    return out;
}

struct DixonContext {
    const GroupClasses& gc;
    long n;                   // |G|
    int r;                    // class count
    u64 p;
    u64 w;                    // primitive root mod p
    std::vector<std::vector<std::vector<long>>> a;  // a[i][j][k]
    std::vector<int> inverse_class;
};

// (M_i v)_j = sum_k a[i][j][k] v_k
Vec apply_class_matrix(const DixonContext& ctx, int i, const Vec& v) {
    Vec out(static_cast<std::size_t>(ctx.r), 0);
    for (int j = 0; j < ctx.r; ++j) {
        u64 acc = 0;
        const auto& row = ctx.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int k = 0; k < ctx.r; ++k)
            acc = (acc + static_cast<u64>(row[static_cast<std::size_t>(k)]) % ctx.p *
                             v[static_cast<std::size_t>(k)]) %
                  ctx.p;
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

// Splits an invariant subspace (RREF basis) into eigenspaces of M_i.
std::vector<Basis> split_space(const DixonContext& ctx, int i, const Basis& basis) {
    const std::size_t k = basis.size();
    const u64 p = ctx.p;
    std::vector<int> pivots;
    for (const auto& b : basis) {
        std::size_t piv = 0;
        while (b[piv] == 0) ++piv;
        pivots.push_back(static_cast<int>(piv));
    }
    // restricted matrix X: M b_t = sum_s X[s][t] b_s (coordinates read off pivots)
    std::vector<Vec> x(k, Vec(k, 0));
    for (std::size_t t = 0; t < k; ++t) {
        Vec w = apply_class_matrix(ctx, i, basis[t]);
        Vec recon(w.size(), 0);
        for (std::size_t s = 0; s < k; ++s) {
            u64 c = w[static_cast<std::size_t>(pivots[s])];
            x[s][t] = c;
            if (c)
                for (std::size_t j = 0; j < w.size(); ++j)
                    recon[j] = (recon[j] + c * basis[s][j]) % p;
        }
        if (recon != w) throw consistency_error("class-sum matrix does not preserve subspace");
    }
    std::vector<Basis> out;
    std::size_t total = 0;
    for (u64 lambda = 0; lambda < p && total < k; ++lambda) {
        std::vector<Vec> shifted = x;
        for (std::size_t t = 0; t < k; ++t) shifted[t][t] = (shifted[t][t] + p - lambda) % p;
        Basis null = nullspace(std::move(shifted), p);
        if (null.empty()) continue;
        Basis sub;
        for (const auto& c : null) {
            Vec v(basis[0].size(), 0);
            for (std::size_t t = 0; t < k; ++t) {
                if (c[t] == 0) continue;
                for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + c[t] * basis[t][j]) % p;
            }
            sub.push_back(std::move(v));
        }
        total += sub.size();
        out.push_back(echelonize(std::move(sub), p));
    }
    if (total != k) throw consistency_error("class-sum matrix not diagonalizable over GF(p)");
    return out;
}

}  // namespace

int GroupClasses::class_of(const Permutation& p) const {
    int idx = group.element_index(p);
    if (idx < 0) throw precondition_error("element not in group");
    return classes.class_of[static_cast<std::size_t>(idx)];
}

GroupClassesPtr make_group_classes(Group g) {
    auto gc = std::make_shared<GroupClasses>();
    gc->classes = conjugacy_classes(g);
    gc->group_exponent = exponent(g);
    gc->group = std::move(g);
    return gc;
}

long ClassFunction::degree_int() const {
    auto d = values[0].as_rational_integer();
    if (!d) throw consistency_error("class function degree is not a rational integer");
    return static_cast<long>(*d);
}

bool ClassFunction::operator==(const ClassFunction& rhs) const {
    return gc->group.id == rhs.gc->group.id && values == rhs.values;
}

int CharacterTable::index_of(const std::vector<Cyclotomic>& values) const {
    for (int i = 0; i < size(); ++i)
        if (irreducibles[static_cast<std::size_t>(i)].values == values) return i;
    return -1;
}

long dixon_prime(long order, int group_exponent) {
    long e = group_exponent;
    for (long p = e + 1;; p += e) {
        if (p * p > 4 * order && is_prime(p)) return p;
    }
}

CharacterTable compute_character_table(const GroupClassesPtr& gcp) {
    const GroupClasses& gc = *gcp;
    const int r = gc.class_count();
    const long n = gc.order();

    DixonContext ctx{gc, n, r, 0, 0, {}, {}};
    ctx.p = static_cast<u64>(dixon_prime(n, gc.group_exponent));
    ctx.w = primitive_root(ctx.p);

    // class multiplication coefficients: a[i][j][k] counts pairs in
    // C_i x C_j with product equal to the fixed representative of C_k
    ctx.a.assign(static_cast<std::size_t>(r),
                 std::vector<std::vector<long>>(static_cast<std::size_t>(r),
                                                std::vector<long>(static_cast<std::size_t>(r), 0)));
    for (int k = 0; k < r; ++k) {
        const Permutation& z = gc.rep(k);
        for (std::size_t xi = 0; xi < gc.group.elements.size(); ++xi) {
            const Permutation& x = gc.group.elements[xi];
            int i = gc.classes.class_of[xi];
            Permutation y = x.inverse() * z;
            int j = gc.class_of(y);
            ++ctx.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                   [static_cast<std::size_t>(k)];
        }
    }
    ctx.inverse_class.resize(static_cast<std::size_t>(r));
    for (int c = 0; c < r; ++c)
        ctx.inverse_class[static_cast<std::size_t>(c)] = gc.class_of(gc.rep(c).inverse());

    // simultaneous eigenspaces of all class-sum matrices
    Basis full;
    for (int i = 0; i < r; ++i) {
        Vec v(static_cast<std::size_t>(r), 0);
        v[static_cast<std::size_t>(i)] = 1;
        full.push_back(std::move(v));
    }
    std::vector<Basis> spaces{full};
    for (int i = 1; i < r; ++i) {
        bool all_done = true;
        for (const auto& s : spaces)
            if (s.size() > 1) all_done = false;
        if (all_done) break;
        std::vector<Basis> next;
        for (auto& s : spaces) {
            if (s.size() == 1) {
                next.push_back(std::move(s));
                continue;
            }
            for (auto& piece : split_space(ctx, i, s)) next.push_back(std::move(piece));
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != r)
        throw consistency_error("simultaneous eigenspace split incomplete");

    const u64 p = ctx.p;
    std::vector<ClassFunction> rows;
    for (const auto& s : spaces) {
        Vec omega = s[0];
        if (omega[0] == 0) throw consistency_error("eigenvector vanishes at identity class");
        u64 inv0 = modinv(omega[0], p);
        for (auto& v : omega) v = v * inv0 % p;

        // degree from first orthogonality
        u64 t = 0;
        for (int c = 0; c < r; ++c) {
            u64 term = omega[static_cast<std::size_t>(c)] *
                       omega[static_cast<std::size_t>(ctx.inverse_class[static_cast<std::size_t>(c)])] %
                       p;
            term = term *
                   modinv(static_cast<u64>(gc.classes.classes[static_cast<std::size_t>(c)].size()) %
                              p,
                          p) %
                   p;
            t = (t + term) % p;
        }
        u64 d2 = static_cast<u64>(n) % p * modinv(t, p) % p;
        long degree = 0;
        for (long d = 1; d * d <= n; ++d)
            if (static_cast<u64>(d) * static_cast<u64>(d) % p == d2) {
                degree = d;
                break;
            }
        if (degree == 0) throw consistency_error("no valid character degree for eigenvector");

        std::vector<u64> theta(static_cast<std::size_t>(r));
        for (int c = 0; c < r; ++c) {
            u64 size_c =
                static_cast<u64>(gc.classes.classes[static_cast<std::size_t>(c)].size()) % p;
            theta[static_cast<std::size_t>(c)] =
                static_cast<u64>(degree) % p * omega[static_cast<std::size_t>(c)] % p *
                modinv(size_c, p) % p;
        }

        // lift each class value: multiplicities of e-th roots of unity
        ClassFunction row;
        row.gc = gcp;
        row.values.resize(static_cast<std::size_t>(r));
        for (int c = 0; c < r; ++c) {
            const Permutation& g = gc.rep(c);
            const int e = g.order();
            std::vector<int> pm(static_cast<std::size_t>(e));
            Permutation acc = Permutation::identity(gc.group.degree);
            for (int l = 0; l < e; ++l) {
                pm[static_cast<std::size_t>(l)] = gc.class_of(acc);
                acc = acc * g;
            }
            u64 z = modpow(ctx.w, (p - 1) / static_cast<u64>(e), p);
            u64 inv_e = modinv(static_cast<u64>(e) % p, p);
            std::vector<Rational> poly(static_cast<std::size_t>(e), Rational(0));
            long total = 0;
            for (int j = 0; j < e; ++j) {
                u64 acc_s = 0;
                for (int l = 0; l < e; ++l) {
                    u64 zexp = modpow(z, static_cast<u64>((e - (j * l) % e) % e), p);
                    acc_s = (acc_s + theta[static_cast<std::size_t>(pm[static_cast<std::size_t>(l)])] *
                                         zexp) %
                            p;
                }
                u64 mj = acc_s * inv_e % p;
                if (mj > static_cast<u64>(degree))
                    throw consistency_error("root-of-unity multiplicity exceeds degree");
                total += static_cast<long>(mj);
                poly[static_cast<std::size_t>(j)] = Rational(static_cast<long>(mj));
            }
            if (total != degree)
                throw consistency_error("root-of-unity multiplicities do not sum to degree");
            row.values[static_cast<std::size_t>(c)] =
                Cyclotomic::from_poly(static_cast<unsigned>(e), std::move(poly));
        }
        rows.push_back(std::move(row));
    }

    // canonical order: ascending degree, then lexicographic rendered values
    std::vector<std::vector<std::string>> rendered(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& v : rows[i].values) rendered[i].push_back(v.to_string());
    std::vector<int> order_idx(rows.size());
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        long da = rows[static_cast<std::size_t>(a)].degree_int();
        long db = rows[static_cast<std::size_t>(b)].degree_int();
        if (da != db) return da < db;
        return rendered[static_cast<std::size_t>(a)] < rendered[static_cast<std::size_t>(b)];
    });

    CharacterTable table;
    table.gc = gcp;
    for (int i : order_idx) {
        table.degrees.push_back(rows[static_cast<std::size_t>(i)].degree_int());
        table.irreducibles.push_back(std::move(rows[static_cast<std::size_t>(i)]));
    }
    verify_table(table);
    return table;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
    if (f.gc->group.id != h.gc->group.id)
        throw precondition_error("inner product of class functions on different groups");
    Cyclotomic acc;
    const int r = f.gc->class_count();
    for (int c = 0; c < r; ++c) {
        Cyclotomic term = f.at_class(c) * h.at_class(c).conjugate();
        acc += term.scaled(
            Rational(static_cast<long>(f.gc->classes.classes[static_cast<std::size_t>(c)].size())));
    }
    return acc.scaled(Rational(1, f.gc->order()));
}

ClassFunction restrict_to(const ClassFunction& f, const GroupClassesPtr& sub) {
    if (!sub->group.subset_of(f.gc->group))
        throw precondition_error("restriction target is not a subgroup");
    ClassFunction out;
    out.gc = sub;
    out.values.reserve(static_cast<std::size_t>(sub->class_count()));
    for (int c = 0; c < sub->class_count(); ++c)
        out.values.push_back(f.at_class(f.gc->class_of(sub->rep(c))));
    return out;
}

ClassFunction induce_to(const ClassFunction& f, const GroupClassesPtr& big) {
    const GroupClasses& a = *f.gc;
    if (!a.group.subset_of(big->group))
        throw precondition_error("induction source is not a subgroup");
    ClassFunction out;
    out.gc = big;
    const int rg = big->class_count();
    const int ra = a.class_count();
    for (int c = 0; c < rg; ++c) {
        const Permutation& g = big->rep(c);
        std::vector<long> cnt(static_cast<std::size_t>(ra), 0);
        for (const auto& x : big->group.elements) {
            Permutation y = x * g * x.inverse();
            int idx = a.group.element_index(y);
            if (idx < 0) continue;
            ++cnt[static_cast<std::size_t>(a.classes.class_of[static_cast<std::size_t>(idx)])];
        }
        Cyclotomic val;
        for (int j = 0; j < ra; ++j) {
            if (cnt[static_cast<std::size_t>(j)] == 0) continue;
            val += f.at_class(j).scaled(Rational(cnt[static_cast<std::size_t>(j)], a.order()));
        }
        out.values.push_back(std::move(val));
    }
    return out;
}

std::vector<std::pair<int, long>> decompose(const ClassFunction& f, const CharacterTable& table) {
    std::vector<std::pair<int, long>> out;
    for (int i = 0; i < table.size(); ++i) {
        Cyclotomic m = inner_product(f, table.irreducibles[static_cast<std::size_t>(i)]);
        auto mi = m.as_rational_integer();
        if (!mi || *mi < 0)
            throw decomposition_error("multiplicity of constituent " + std::to_string(i) +
                                      " is not a non-negative integer: " + m.to_string());
        if (*mi != 0) out.emplace_back(i, static_cast<long>(*mi));
    }
    return out;
}

bool is_homogeneous(const ClassFunction& f, const CharacterTable& table) {
    return decompose(f, table).size() == 1;
}

void verify_table(const CharacterTable& table) {
    const GroupClasses& gc = *table.gc;
    const int r = gc.class_count();
    if (table.size() != r) throw consistency_error("table row count differs from class count");
    long sum_sq = 0;
    for (long d : table.degrees) {
        if (d <= 0 || gc.order() % d != 0)
            throw consistency_error("character degree does not divide group order");
        sum_sq += d * d;
    }
    if (sum_sq != gc.order())
        throw consistency_error("sum of squared degrees differs from group order");
    for (const auto& row : table.irreducibles)
        for (const auto& v : row.values)
            if (!v.has_integral_coefficients())
                throw consistency_error("character value is not an algebraic integer");
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Cyclotomic ip = inner_product(table.irreducibles[static_cast<std::size_t>(i)],
                                          table.irreducibles[static_cast<std::size_t>(j)]);
            auto v = ip.as_rational_integer();
            if (!v || *v != (i == j ? 1 : 0))
                throw consistency_error("row orthogonality violated at (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
        }
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Cyclotomic acc;
            for (int t = 0; t < r; ++t)
                acc += table.irreducibles[static_cast<std::size_t>(t)].at_class(i) *
                       table.irreducibles[static_cast<std::size_t>(t)].at_class(j).conjugate();
            auto v = acc.as_rational_integer();
            Int expect = (i == j) ? Int(gc.classes.centralizer_orders[static_cast<std::size_t>(i)])
                                  : Int(0);
            if (!v || *v != expect)
                throw consistency_error("column orthogonality violated at (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
        }
}

std::string table_to_json(const CharacterTable& table) {
    const GroupClasses& gc = *table.gc;
    nlohmann::json j;
    std::vector<std::string> gens;
    for (const auto& g : gc.group.generators) gens.push_back(cycle_string(g));
    j["group"] = {{"order", gc.order()},
                  {"degree", gc.group.degree},
                  {"id", id_string(gc.group.id)},
                  {"exponent", gc.group_exponent},
                  {"generators", gens}};
    nlohmann::json classes = nlohmann::json::array();
    for (int c = 0; c < gc.class_count(); ++c)
        classes.push_back(
            {{"rep", cycle_string(gc.rep(c))},
             {"size", gc.classes.classes[static_cast<std::size_t>(c)].size()},
             {"centralizer_order", gc.classes.centralizer_orders[static_cast<std::size_t>(c)]},
             {"element_order", gc.rep(c).order()}});
    j["classes"] = std::move(classes);
    nlohmann::json irr = nlohmann::json::array();
    for (int i = 0; i < table.size(); ++i) {
        std::vector<std::string> values;
        for (const auto& v : table.irreducibles[static_cast<std::size_t>(i)].values)
            values.push_back(v.to_string());
        irr.push_back({{"degree", table.degrees[static_cast<std::size_t>(i)]}, {"values", values}});
    }
    j["irreducibles"] = std::move(irr);
    return j.dump(2);
}

}  // namespace cliff
