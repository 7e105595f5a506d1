#include "rouquier/oracles.hpp"

#include <map>
#include <queue>

#include "rouquier/combinatorics.hpp"
#include "rouquier/errors.hpp"

namespace rouquier::oracle {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient a / b for monic b.
Poly divide_exact(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {0};
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const auto coef = a[i];
        q[i - db] = coef;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= coef * b[j];
    }
    for (std::size_t i = 0; i < db; ++i) ensure(a[i] == 0, "cyclotomic division left a remainder");
    return q;
}

// Remainder of a modulo monic b.
Poly reduce(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
        const auto coef = a[i];
        if (coef == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= coef * b[j];
    }
    a.resize(db);
    return a;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<std::int64_t> partition_numbers(int n) {
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) p[s] += p[s - part];
    return p;
}

MultiPartition rotate(const MultiPartition& mp, int shift) {
    const int total = static_cast<int>(mp.d());
    std::vector<Partition> out(total);
    for (int a = 0; a < total; ++a) out[((a + shift) % total + total) % total] = mp[a];
    return MultiPartition(std::move(out));
}

std::string lin(int i, int j, int k) {
    return "chi[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
}

std::string two(int k, int l, int sup) {
    if (k > l) std::swap(k, l);
    return "chi2[" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(sup) + "]";
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
    require(n >= 1, "cyclotomic index must be positive");
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int m = 1; m < n; ++m)
        if (n % m == 0) p = divide_exact(p, cyclotomic_polynomial(m));
    return p;
}

BigInt norm_one_minus_root_power(int d, int k) {
    const Poly phi = cyclotomic_polynomial(d);
    const std::size_t deg = phi.size() - 1;
    k = ((k % d) + d) % d;
    std::vector<std::vector<BigInt>> mat(deg, std::vector<BigInt>(deg));
    for (std::size_t col = 0; col < deg; ++col) {
        // (1 - x^k) * x^col
        Poly g(col + k + 1, 0);
        g[col] += 1;
        g[col + k] -= 1;
        const Poly r = reduce(g, phi);
        for (std::size_t row = 0; row < deg; ++row) mat[row][col] = r[row];
    }
    return bareiss_determinant(std::move(mat));
}

std::set<int> prime_divisors(const BigInt& n) {
    BigInt m = n < 0 ? BigInt(-n) : n;
    std::set<int> out;
    if (m == 0) return out;
    for (int p = 2; BigInt(p) * p <= m; ++p) {
        if (m % p != 0) continue;
        out.insert(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) out.insert(static_cast<int>(m));
    return out;
}

BlockPartition bfs_ak_blocks(const ak::Specialization& spec) {
    const auto labels = multipartitions_of(spec.d, spec.r);
    const auto hyps = ak::hyperplanes_containing(spec);
    const std::size_t n = labels.size();

    auto linked = [&](const MultiPartition& x, const MultiPartition& y) {
        for (const auto& h : hyps) {
            if (std::holds_alternative<ak::NZero>(h)) {
                bool same = true;
                for (std::size_t a = 0; a < x.d() && same; ++a) same = x[a].size() == y[a].size();
                if (same) return true;
                continue;
            }
            const auto& lh = std::get<ak::Linear>(h);
            bool rest_equal = true;
            for (std::size_t a = 0; a < x.d() && rest_equal; ++a)
                if (static_cast<int>(a) != lh.s && static_cast<int>(a) != lh.t) rest_equal = x[a] == y[a];
            if (!rest_equal) continue;
            MultiPartition xs({x[lh.s], x[lh.t]});
            MultiPartition ys({y[lh.s], y[lh.t]});
            if (contents_equal(xs, ys, {0, lh.k})) return true;
        }
        return false;
    };

    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (linked(labels[i], labels[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }

    std::vector<std::size_t> comp(n, n);
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != n) continue;
        blocks.emplace_back();
        std::queue<std::size_t> q;
        q.push(s);
        comp[s] = blocks.size() - 1;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            blocks.back().push_back(u);
            for (auto v : adj[u])
                if (comp[v] == n) {
                    comp[v] = comp[s];
                    q.push(v);
                }
        }
    }
    return BlockPartition(n, std::move(blocks));
}

std::int64_t count_multipartitions(int d, int n) {
    const auto p = partition_numbers(n);
    std::vector<std::int64_t> acc(n + 1, 0);
    acc[0] = 1;
    for (int a = 0; a < d; ++a) {
        std::vector<std::int64_t> next(n + 1, 0);
        for (int x = 0; x <= n; ++x)
            for (int y = 0; x + y <= n; ++y) next[x + y] += acc[x] * p[y];
        acc = std::move(next);
    }
    return acc[n];
}

std::int64_t clifford_character_count(int de, int e, int r) {
    require(e >= 1 && de % e == 0, "e must divide de");
    const int d = de / e;
    std::int64_t sum_sq = 0;
    for (const auto& mp : multipartitions_of(de, r)) {
        std::int64_t stab = 0;
        for (int j = 0; j < e; ++j)
            if (rotate(mp, j * d) == mp) ++stab;
        sum_sq += stab * stab;
    }
    ensure(sum_sq % e == 0, "Clifford count is not an integer");
    return sum_sq / e;
}

std::int64_t count_stuttering(int d, int e, int r) {
    std::int64_t count = 0;
    for (const auto& mp : multipartitions_of(d * e, r)) {
        bool repeated = true;
        for (int a = d; a < d * e && repeated; ++a) repeated = mp[a] == mp[a % d];
        if (repeated) ++count;
    }
    return count;
}

std::set<std::set<std::string>> rank2_expected_blocks(int d, const std::string& kind, int i, int j, int k, int l) {
    // Non-trivial blocks first; every label not mentioned is a singleton.
    std::vector<std::set<std::string>> nontrivial;
    auto two_pair = [&](int r, int s) { nontrivial.push_back({two(r, s, 1), two(r, s, 2)}); };

    if (kind == "none") {
        for (int r = 0; r < d; ++r)
            for (int s = r + 1; s < d; ++s) two_pair(r, s);
    } else if (kind == "A" || kind == "B") {
        for (int x = 0; x <= 1; ++x)
            for (int kk = 0; kk < d; ++kk)
                nontrivial.push_back(kind == "A" ? std::set<std::string>{lin(0, x, kk), lin(1, x, kk)}
                                                 : std::set<std::string>{lin(x, 0, kk), lin(x, 1, kk)});
        for (int r = 0; r < d; ++r)
            for (int s = r + 1; s < d; ++s) two_pair(r, s);
    } else if (kind == "C") {
        for (int ii = 0; ii <= 1; ++ii)
            for (int jj = 0; jj <= 1; ++jj) nontrivial.push_back({lin(ii, jj, k), lin(ii, jj, l)});
        for (int m = 0; m < d; ++m)
            if (m != k && m != l) nontrivial.push_back({two(k, m, 1), two(k, m, 2), two(l, m, 1), two(l, m, 2)});
        two_pair(k, l);
        for (int r = 0; r < d; ++r)
            for (int s = r + 1; s < d; ++s)
                if (r != k && r != l && s != k && s != l) two_pair(r, s);
    } else if (kind == "Q") {
        nontrivial.push_back({lin(i, j, k), lin(1 - i, 1 - j, l), two(k, l, 1), two(k, l, 2)});
        for (int r = 0; r < d; ++r)
            for (int s = r + 1; s < d; ++s)
                if (!(r == k && s == l)) two_pair(r, s);
    } else {
        throw ValidationError("unknown hyperplane kind: " + kind);
    }

    std::set<std::set<std::string>> out(nontrivial.begin(), nontrivial.end());
    std::set<std::string> mentioned;
    for (const auto& b : out) mentioned.insert(b.begin(), b.end());
    for (int ii = 0; ii <= 1; ++ii)
        for (int jj = 0; jj <= 1; ++jj)
            for (int kk = 0; kk < d; ++kk)
                if (!mentioned.count(lin(ii, jj, kk))) out.insert({lin(ii, jj, kk)});
    for (int r = 0; r < d; ++r)
        for (int s = r + 1; s < d; ++s)
            for (int sup = 1; sup <= 2; ++sup)
                if (!mentioned.count(two(r, s, sup))) out.insert({two(r, s, sup)});
    return out;
}

}  // namespace rouquier::oracle
