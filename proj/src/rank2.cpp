#include "rouquier/rank2.hpp"

#include <numeric>

#include "rouquier/cyclotomic.hpp"
#include "rouquier/errors.hpp"

namespace rouquier::rank2 {

namespace {

constexpr std::size_t kA0 = 0, kB0 = 2, kC0 = 4;

void check_d(int d) { require(d >= 1, "rank-two family needs d >= 1"); }

void check_label(const Label& lbl, int d) {
    check_d(d);
    if (const auto* x = std::get_if<Lin>(&lbl)) {
        require(x->i >= 0 && x->i <= 1 && x->j >= 0 && x->j <= 1, "linear label indices i, j must be 0 or 1");
        require(x->k >= 0 && x->k < d, "linear label index k out of range");
    } else {
        const auto& y = std::get<Two>(lbl);
        require(0 <= y.k && y.k < y.l && y.l < d, "degree-two label needs 0 <= k < l < d");
        require(y.sup == 1 || y.sup == 2, "degree-two label superscript must be 1 or 2");
    }
}

std::optional<int> root_prime(int d, int k, int l) {
    auto primes = prime_divisors_of_root_difference({d, k, l});
    if (primes.empty()) return std::nullopt;
    return *primes.begin();
}

ExponentVector unit(std::size_t n, std::size_t pos, std::size_t neg) {
    ExponentVector v(n, 0);
    v[pos] += 1;
    v[neg] -= 1;
    return v;
}

ExponentVector add(ExponentVector a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::int64_t sum_c(const Spec& s) { return std::accumulate(s.c.begin(), s.c.end(), std::int64_t{0}); }

void unite(UnionFind& uf, int d, const Label& x, const Label& y) { uf.unite(index_of(x, d), index_of(y, d)); }

Two two(int k, int l, int sup) { return k < l ? Two{k, l, sup} : Two{l, k, sup}; }

void unite_two_pairs(UnionFind& uf, int d) {
    for (int k = 0; k < d; ++k)
        for (int l = k + 1; l < d; ++l) unite(uf, d, Two{k, l, 1}, Two{k, l, 2});
}

}  // namespace

std::string to_string(const Label& lbl) {
    if (const auto* x = std::get_if<Lin>(&lbl))
        return "chi[" + std::to_string(x->i) + "," + std::to_string(x->j) + "," + std::to_string(x->k) + "]";
    const auto& y = std::get<Two>(lbl);
    return "chi2[" + std::to_string(y.k) + "," + std::to_string(y.l) + "," + std::to_string(y.sup) + "]";
}

std::vector<Label> labels(int d) {
    check_d(d);
    std::vector<Label> out;
    out.reserve(4 * d + d * (d - 1));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < d; ++k) out.emplace_back(Lin{i, j, k});
    for (int k = 0; k < d; ++k)
        for (int l = k + 1; l < d; ++l)
            for (int sup = 1; sup <= 2; ++sup) out.emplace_back(Two{k, l, sup});
    return out;
}

std::size_t index_of(const Label& lbl, int d) {
    check_label(lbl, d);
    if (const auto* x = std::get_if<Lin>(&lbl)) return static_cast<std::size_t>((x->i * 2 + x->j) * d + x->k);
    const auto& y = std::get<Two>(lbl);
    // Pairs (k', l') with k' < k come first: Σ_{k'<k} (d-1-k') of them.
    const int before = y.k * (d - 1) - y.k * (y.k - 1) / 2;
    const int pair = before + (y.l - y.k - 1);
    return static_cast<std::size_t>(4 * d + 2 * pair + (y.sup - 1));
}

std::string to_string(const Hyperplane& h) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AEq>) {
                return "A0=A1";
            } else if constexpr (std::is_same_v<T, BEq>) {
                return "B0=B1";
            } else if constexpr (std::is_same_v<T, CEq>) {
                return "C" + std::to_string(x.k) + "=C" + std::to_string(x.l);
            } else {
                return "A" + std::to_string(x.i) + "-A" + std::to_string(1 - x.i) + "+B" + std::to_string(x.j) +
                       "-B" + std::to_string(1 - x.j) + "+C" + std::to_string(x.k) + "-C" + std::to_string(x.l) +
                       "=0";
            }
        },
        h);
}

void Spec::validate() const {
    check_d(d);
    require(static_cast<int>(c.size()) == d, "c weights must have length d");
}

Specialization Spec::as_specialization() const {
    Specialization s{a[0], a[1], b[0], b[1]};
    s.insert(s.end(), c.begin(), c.end());
    return s;
}

FactoredSchurElement schur_element(const Label& lbl, int d) {
    check_label(lbl, d);
    const std::size_t n = kC0 + d;
    FactoredSchurElement f;
    f.leading_monomial.assign(n, 0);

    if (const auto* x = std::get_if<Lin>(&lbl)) {
        const auto xm = unit(n, kA0 + x->i, kA0 + 1 - x->i);
        const auto ym = unit(n, kB0 + x->j, kB0 + 1 - x->j);
        f.factors.push_back({xm, 2, 2, 1});
        f.factors.push_back({ym, 2, 2, 1});
        for (int l = 0; l < d; ++l) {
            if (l == x->k) continue;
            const auto zm = unit(n, kC0 + x->k, kC0 + l);
            const auto p = root_prime(d, std::min(x->k, l), std::max(x->k, l));
            f.factors.push_back({zm, 2, p, 1});
            f.factors.push_back({add(add(xm, ym), zm), 2, p, 1});
        }
        return f;
    }

    const auto& y = std::get<Two>(lbl);
    f.leading_primes = {2};
    for (int m = 0; m < d; ++m) {
        if (m == y.k || m == y.l) continue;
        f.factors.push_back({unit(n, kC0 + y.k, kC0 + m), 2, root_prime(d, std::min(y.k, m), std::max(y.k, m)), 1});
        f.factors.push_back({unit(n, kC0 + y.l, kC0 + m), 2, root_prime(d, std::min(y.l, m), std::max(y.l, m)), 1});
    }
    const auto p = root_prime(d, y.k, y.l);
    for (int h = 0; h < 2; ++h) {
        const auto xm = unit(n, kA0 + h, kA0 + 1 - h);
        // X_h X_{1-h}^{-1} Y_h Y_{1-h}^{-1} Z_k Z_l^{-1}
        f.factors.push_back({add(add(xm, unit(n, kB0 + h, kB0 + 1 - h)), unit(n, kC0 + y.k, kC0 + y.l)), 1, p, 1});
        // X_h X_{1-h}^{-1} Y_{1-h} Y_h^{-1} Z_l Z_k^{-1}
        f.factors.push_back({add(add(xm, unit(n, kB0 + 1 - h, kB0 + h)), unit(n, kC0 + y.l, kC0 + y.k)), 1, p, 1});
    }
    return f;
}

Rational a_value(const Label& lbl, const Spec& s) {
    s.validate();
    check_label(lbl, s.d);
    if (const auto* x = std::get_if<Lin>(&lbl)) {
        const std::int64_t alpha = s.a[x->i] - s.a[1 - x->i];
        const std::int64_t beta = s.b[x->j] - s.b[1 - x->j];
        std::int64_t v = neg_part(alpha) + neg_part(beta);
        for (int m = 0; m < s.d; ++m) {
            if (m == x->k) continue;
            const std::int64_t gamma = s.c[x->k] - s.c[m];
            v += neg_part(gamma) + neg_part(alpha + beta + gamma);
        }
        return Rational(v);
    }
    const auto& y = std::get<Two>(lbl);
    std::int64_t whole = 0;
    for (int m = 0; m < s.d; ++m) {
        if (m == y.k || m == y.l) continue;
        whole += neg_part(s.c[y.k] - s.c[m]) + neg_part(s.c[y.l] - s.c[m]);
    }
    std::int64_t halves = 0;
    for (int h = 0; h < 2; ++h) {
        const std::int64_t ah = s.a[h] - s.a[1 - h];
        const std::int64_t bh = s.b[h] - s.b[1 - h];
        const std::int64_t ckl = s.c[y.k] - s.c[y.l];
        halves += neg_part(ah + bh + ckl) + neg_part(ah - bh - ckl);
    }
    return Rational(whole) + Rational(halves, 2);
}

std::int64_t aA_sum(const Label& lbl, const Spec& s) {
    s.validate();
    check_label(lbl, s.d);
    if (const auto* x = std::get_if<Lin>(&lbl)) {
        return s.d * (s.a[x->i] - s.a[1 - x->i] + s.b[x->j] - s.b[1 - x->j] + 2 * s.c[x->k]) - 2 * sum_c(s);
    }
    const auto& y = std::get<Two>(lbl);
    return s.d * (s.c[y.k] + s.c[y.l]) - 2 * sum_c(s);
}

Rational A_value(const Label& lbl, const Spec& s) { return Rational(aA_sum(lbl, s)) - a_value(lbl, s); }

std::vector<Hyperplane> hyperplanes(int d) {
    check_d(d);
    std::vector<Hyperplane> out{AEq{}, BEq{}};
    for (int k = 0; k < d; ++k)
        for (int l = k + 1; l < d; ++l) {
            if (!is_essential_pair(d, k, l)) continue;
            out.emplace_back(CEq{k, l});
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) out.emplace_back(Quad{i, j, k, l});
        }
    return out;
}

bool contains(const Hyperplane& h, const Spec& s) {
    s.validate();
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AEq>) {
                return s.a[0] == s.a[1];
            } else if constexpr (std::is_same_v<T, BEq>) {
                return s.b[0] == s.b[1];
            } else if constexpr (std::is_same_v<T, CEq>) {
                return s.c.at(x.k) == s.c.at(x.l);
            } else {
                return s.a[x.i] - s.a[1 - x.i] + s.b[x.j] - s.b[1 - x.j] + s.c.at(x.k) - s.c.at(x.l) == 0;
            }
        },
        h);
}

std::vector<Hyperplane> hyperplanes_containing(const Spec& s) {
    std::vector<Hyperplane> out;
    for (const auto& h : hyperplanes(s.d))
        if (contains(h, s)) out.push_back(h);
    return out;
}

BlockPartition generic_blocks(int d) {
    check_d(d);
    UnionFind uf(labels(d).size());
    unite_two_pairs(uf, d);
    return BlockPartition::from_union_find(uf);
}

BlockPartition blocks_for_hyperplane(const Hyperplane& h, int d) {
    check_d(d);
    UnionFind uf(labels(d).size());
    unite_two_pairs(uf, d);
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AEq>) {
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < d; ++k) unite(uf, d, Lin{0, j, k}, Lin{1, j, k});
            } else if constexpr (std::is_same_v<T, BEq>) {
                for (int i = 0; i < 2; ++i)
                    for (int k = 0; k < d; ++k) unite(uf, d, Lin{i, 0, k}, Lin{i, 1, k});
            } else if constexpr (std::is_same_v<T, CEq>) {
                require(0 <= x.k && x.k < x.l && x.l < d, "C_k = C_l needs 0 <= k < l < d");
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) unite(uf, d, Lin{i, j, x.k}, Lin{i, j, x.l});
                for (int m = 0; m < d; ++m) {
                    if (m == x.k || m == x.l) continue;
                    unite(uf, d, two(x.k, m, 1), two(x.l, m, 1));
                }
            } else {
                require(0 <= x.k && x.k < x.l && x.l < d, "quadruple hyperplane needs 0 <= k < l < d");
                require(x.i >= 0 && x.i <= 1 && x.j >= 0 && x.j <= 1, "quadruple hyperplane needs i, j in {0,1}");
                unite(uf, d, Lin{x.i, x.j, x.k}, Lin{1 - x.i, 1 - x.j, x.l});
                unite(uf, d, Lin{x.i, x.j, x.k}, Two{x.k, x.l, 1});
            }
        },
        h);
    return BlockPartition::from_union_find(uf);
}

BlockPartition rouquier_blocks(const Spec& spec) {
    spec.validate();
    const auto contained = hyperplanes_containing(spec);
    if (contained.empty()) return generic_blocks(spec.d);
    std::vector<BlockPartition> parts;
    parts.reserve(contained.size());
    for (const auto& h : contained) parts.push_back(blocks_for_hyperplane(h, spec.d));
    return join_all(labels(spec.d).size(), parts);
}

}  // namespace rouquier::rank2
