#include "rouquier/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "rouquier/ariki_koike.hpp"
#include "rouquier/combinatorics.hpp"
#include "rouquier/cyclotomic.hpp"
#include "rouquier/descent.hpp"
#include "rouquier/errors.hpp"
#include "rouquier/oracles.hpp"
#include "rouquier/rank2.hpp"

namespace rouquier::verify {

namespace {

using Rng = std::mt19937_64;

struct Tally {
    CheckResult r;

    explicit Tally(std::string name) { r.name = std::move(name); }
    void tick() { ++r.cases; }
    // Records the first failure only.
    void fail(const std::string& what) {
        if (r.passed) r.detail = what;
        r.passed = false;
    }
    void expect(bool ok, const std::function<std::string()>& what) {
        tick();
        if (!ok) fail(what());
    }
    CheckResult done() { return r; }
};

// Runs `body`, turning a thrown error into a failure rather than an abort.
CheckResult guarded(const std::string& name, const std::function<void(Tally&)>& body) {
    Tally t(name);
    try {
        body(t);
    } catch (const std::exception& ex) {
        t.fail(std::string("exception: ") + ex.what());
    }
    return t.done();
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

rank2::Spec random_rank2(int d, int range, Rng& rng) {
    rank2::Spec s;
    s.d = d;
    for (int i = 0; i < 2; ++i) {
        s.a[i] = uniform(rng, -range, range);
        s.b[i] = uniform(rng, -range, range);
    }
    s.c.resize(d);
    for (auto& x : s.c) x = uniform(rng, -range, range);
    return s;
}

std::string describe(const rank2::Spec& s) {
    std::vector<std::int64_t> c(s.c.begin(), s.c.end());
    return "d=" + std::to_string(s.d) + " a=" + std::to_string(s.a[0]) + "," + std::to_string(s.a[1]) +
           " b=" + std::to_string(s.b[0]) + "," + std::to_string(s.b[1]) + " c=" + join(c);
}

std::string describe(const ak::Specialization& s) {
    return "d=" + std::to_string(s.d) + " r=" + std::to_string(s.r) + " m=" + join(s.m) + " n=" + std::to_string(s.n);
}

std::set<std::set<std::string>> named(const BlockPartition& bp, const std::vector<std::string>& names) {
    std::set<std::set<std::string>> out;
    for (const auto& b : bp.blocks()) {
        std::set<std::string> one;
        for (auto i : b) one.insert(names[i]);
        out.insert(std::move(one));
    }
    return out;
}

std::vector<std::string> rank2_names(int d) {
    std::vector<std::string> out;
    for (const auto& l : rank2::labels(d)) out.push_back(rank2::to_string(l));
    return out;
}

// Checks that f takes one value on every block.
template <class F>
bool constant_on_blocks(const BlockPartition& bp, F&& f) {
    for (const auto& b : bp.blocks())
        for (auto i : b)
            if (!(f(i) == f(b.front()))) return false;
    return true;
}

// Enumerates every vector in [lo, hi]^len.
void for_each_vector(int len, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(len, lo);
    while (true) {
        fn(v);
        int pos = 0;
        while (pos < len && v[pos] == hi) v[pos++] = lo;
        if (pos == len) return;
        ++v[pos];
    }
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) out.push_back(k);
    return out;
}

std::size_t index_in(const std::vector<MultiPartition>& labels, const MultiPartition& mp) {
    auto it = std::lower_bound(labels.begin(), labels.end(), mp, MultiPartitionOrder{});
    ensure(it != labels.end() && *it == mp, "label missing from the enumeration");
    return static_cast<std::size_t>(it - labels.begin());
}

MultiPartition swap_components(const MultiPartition& mp, int x, int y) {
    auto comps = mp.components();
    std::swap(comps[x], comps[y]);
    return MultiPartition(std::move(comps));
}

ak::Specialization repeated(int de, int e, int r, const std::vector<int>& m, int n) {
    std::vector<int> rep(de);
    for (int j = 0; j < de; ++j) rep[j] = m[j % (de / e)];
    return {de, r, rep, e * n};
}

rank2::Spec repeated_rank2(int p, const rank2::Spec& s) {
    rank2::Spec out;
    out.d = p * s.d;
    for (int i = 0; i < 2; ++i) {
        out.a[i] = p * s.a[i];
        out.b[i] = p * s.b[i];
    }
    out.c.resize(out.d);
    for (int k = 0; k < out.d; ++k) out.c[k] = s.c[k % s.d];
    return out;
}

}  // namespace

// --- combinatorics ---------------------------------------------------------

CheckResult beta_round_trip(int max_size) {
    return guarded("beta-number round trip", [&](Tally& t) {
        for (int n = 0; n <= max_size; ++n)
            for (const auto& p : partitions_of(n)) {
                const auto b = beta_number(p);
                t.expect(partition_from_beta(b) == p, [&] { return "round trip failed for " + p.to_string(); });
                for (int m = 0; m <= 3; ++m)
                    t.expect(partition_from_beta(shift(b, m)) == p,
                             [&] { return "shifted round trip failed for " + p.to_string(); });
            }
    });
}

CheckResult shift_composition(int max_size) {
    return guarded("shift composition", [&](Tally& t) {
        for (int n = 0; n <= max_size; ++n)
            for (const auto& p : partitions_of(n)) {
                const auto b = beta_number(p);
                for (int m1 = 0; m1 <= 3; ++m1)
                    for (int m2 = 0; m2 <= 3; ++m2)
                        t.expect(shift(shift(b, m1), m2) == shift(b, m1 + m2), [&] {
                            return "shift(shift(b," + std::to_string(m1) + ")," + std::to_string(m2) +
                                   ") differs for " + p.to_string();
                        });
            }
    });
}

CheckResult floor_stability(int max_size, int max_k) {
    return guarded("content floor stability", [&](Tally& t) {
        for (int n = 0; n <= max_size; ++n) {
            const auto mps = multipartitions_of(2, n);
            for (int k = -max_k; k <= max_k; ++k) {
                const WeightSystem w{0, k};
                for (std::size_t x = 0; x < mps.size(); ++x)
                    for (std::size_t y = x; y < mps.size(); ++y) {
                        const int base = std::max(charged_height(mps[x], w), charged_height(mps[y], w));
                        const bool at_base = content(charged_symbol(mps[x], w, base)) ==
                                             content(charged_symbol(mps[y], w, base));
                        for (int extra = 1; extra <= 3; ++extra) {
                            const bool higher = content(charged_symbol(mps[x], w, base + extra)) ==
                                                content(charged_symbol(mps[y], w, base + extra));
                            t.expect(higher == at_base, [&] {
                                return "floor dependence for " + mps[x].to_string() + " vs " + mps[y].to_string() +
                                       " k=" + std::to_string(k);
                            });
                        }
                        t.expect(contents_equal(mps[x], mps[y], w) == at_base, [&] {
                            return "contents_equal disagrees with the common floor for " + mps[x].to_string() +
                                   " vs " + mps[y].to_string();
                        });
                    }
            }
        }
    });
}

CheckResult content_equivalence(int max_size, int max_k) {
    return guarded("content equivalence relation", [&](Tally& t) {
        for (int n = 0; n <= max_size; ++n) {
            const auto mps = multipartitions_of(2, n);
            const std::size_t sz = mps.size();
            for (int k = -max_k; k <= max_k; ++k) {
                const WeightSystem w{0, k};
                const WeightSystem swapped{k, 0};
                std::vector<std::vector<bool>> rel(sz, std::vector<bool>(sz));
                for (std::size_t x = 0; x < sz; ++x)
                    for (std::size_t y = 0; y < sz; ++y) rel[x][y] = contents_equal(mps[x], mps[y], w);
                for (std::size_t x = 0; x < sz; ++x) {
                    t.expect(rel[x][x], [&] { return "not reflexive at " + mps[x].to_string(); });
                    for (std::size_t y = 0; y < sz; ++y) {
                        t.expect(rel[x][y] == rel[y][x], [&] {
                            return "not symmetric at " + mps[x].to_string() + ", " + mps[y].to_string();
                        });
                        const bool perm = contents_equal(swap_components(mps[x], 0, 1), swap_components(mps[y], 0, 1),
                                                         swapped);
                        t.expect(perm == rel[x][y], [&] {
                            return "relabelling changes the relation at " + mps[x].to_string() + ", " +
                                   mps[y].to_string();
                        });
                        if (!rel[x][y]) continue;
                        for (std::size_t z = 0; z < sz; ++z)
                            if (rel[y][z])
                                t.expect(rel[x][z], [&] {
                                    return "not transitive at " + mps[x].to_string() + ", " + mps[y].to_string() +
                                           ", " + mps[z].to_string();
                                });
                    }
                }
            }
        }
    });
}

// --- cyclotomic ------------------------------------------------------------

CheckResult cyclotomic_oracle(int max_d) {
    return guarded("cyclotomic criterion vs field norm", [&](Tally& t) {
        for (int d = 2; d <= max_d; ++d) {
            std::map<int, std::set<int>> norm_primes;
            for (int k = 1; k < d; ++k)
                norm_primes[k] = oracle::prime_divisors(oracle::norm_one_minus_root_power(d, k));
            for (int s = 0; s < d; ++s)
                for (int u = s + 1; u < d; ++u) {
                    const auto got = prime_divisors_of_root_difference({d, s, u});
                    t.expect(got == norm_primes[u - s], [&] {
                        return "d=" + std::to_string(d) + " s=" + std::to_string(s) + " t=" + std::to_string(u);
                    });
                    t.expect(is_essential_pair(d, s, u) == !got.empty(), [&] {
                        return "essential pair disagrees at d=" + std::to_string(d) + " s=" + std::to_string(s) +
                               " t=" + std::to_string(u);
                    });
                }
        }
    });
}

CheckResult root_difference_symmetry(int max_d) {
    return guarded("root difference symmetry and translation", [&](Tally& t) {
        for (int d = 2; d <= max_d; ++d)
            for (int s = 0; s < d; ++s)
                for (int u = 0; u < d; ++u) {
                    if (s == u) continue;
                    const auto base = prime_divisors_of_root_difference({d, s, u});
                    t.expect(base == prime_divisors_of_root_difference({d, u, s}),
                             [&] { return "asymmetric at d=" + std::to_string(d); });
                    for (int shift_by = 1; shift_by < d; ++shift_by)
                        t.expect(base == prime_divisors_of_root_difference({d, (s + shift_by) % d, (u + shift_by) % d}),
                                 [&] { return "not translation invariant at d=" + std::to_string(d); });
                }
    });
}

// --- schur / rank2 ---------------------------------------------------------

CheckResult schur_consistency(int max_d, int per_d, int range, std::uint64_t seed) {
    return guarded("closed-form a/A vs Schur valuation and degree", [&](Tally& t) {
        Rng rng(seed);
        for (int d = 1; d <= max_d; ++d) {
            const auto lbls = rank2::labels(d);
            std::vector<FactoredSchurElement> elems;
            for (const auto& l : lbls) elems.push_back(rank2::schur_element(l, d));
            for (int it = 0; it < per_d; ++it) {
                const auto spec = random_rank2(d, range, rng);
                const auto sp = spec.as_specialization();
                for (std::size_t i = 0; i < lbls.size(); ++i) {
                    const auto vd = valuation_and_degree(elems[i], sp);
                    const rank2::Rational a(vd.valuation, rank2::kTPerQ);
                    const rank2::Rational big_a(vd.degree, rank2::kTPerQ);
                    t.expect(a == rank2::a_value(lbls[i], spec) && big_a == rank2::A_value(lbls[i], spec), [&] {
                        return rank2::to_string(lbls[i]) + " at " + describe(spec);
                    });
                    // a + A is integral even where a is not.
                    t.expect((a + big_a).denominator() == 1 && (2 * a).denominator() == 1,
                             [&] { return "non-integral a+A for " + rank2::to_string(lbls[i]); });
                }
            }
        }
    });
}

CheckResult schur_structure(int max_d) {
    return guarded("Schur element structure", [&](Tally& t) {
        for (int d = 1; d <= max_d; ++d) {
            const std::vector<std::size_t> groups{2, 2, static_cast<std::size_t>(d)};
            for (const auto& l : rank2::labels(d)) {
                const auto f = rank2::schur_element(l, d);
                f.validate();
                t.expect(f.zero_sum_on_blocks(groups), [&] { return "non-zero block sum for " + rank2::to_string(l); });
                // Scaling the specialization scales valuation and degree.
                Specialization s{3, -1, 2, 0};
                for (int k = 0; k < d; ++k) s.push_back((k * 7) % 5 - 2);
                const auto base = valuation_and_degree(f, s);
                for (std::int64_t lam = 2; lam <= 3; ++lam) {
                    Specialization scaled = s;
                    for (auto& x : scaled) x *= lam;
                    const auto vd = valuation_and_degree(f, scaled);
                    t.expect(vd.valuation == lam * base.valuation && vd.degree == lam * base.degree,
                             [&] { return "scaling fails for " + rank2::to_string(l); });
                }
                t.expect(base.valuation <= base.degree, [&] { return "valuation exceeds degree"; });
            }
        }
    });
}

CheckResult rank2_golden(const std::vector<int>& ds) {
    return guarded("rank-two per-hyperplane blocks vs case descriptions", [&](Tally& t) {
        Rng rng(12345);
        for (int d : ds) {
            const auto names = rank2_names(d);
            t.expect(named(rank2::generic_blocks(d), names) == oracle::rank2_expected_blocks(d, "none"),
                     [&] { return "generic blocks, d=" + std::to_string(d); });
            for (const auto& h : rank2::hyperplanes(d)) {
                std::set<std::set<std::string>> expected;
                if (std::holds_alternative<rank2::AEq>(h)) {
                    expected = oracle::rank2_expected_blocks(d, "A");
                } else if (std::holds_alternative<rank2::BEq>(h)) {
                    expected = oracle::rank2_expected_blocks(d, "B");
                } else if (const auto* c = std::get_if<rank2::CEq>(&h)) {
                    expected = oracle::rank2_expected_blocks(d, "C", 0, 0, c->k, c->l);
                } else {
                    const auto& q = std::get<rank2::Quad>(h);
                    expected = oracle::rank2_expected_blocks(d, "Q", q.i, q.j, q.k, q.l);
                }
                const auto mine = rank2::blocks_for_hyperplane(h, d);
                t.expect(named(mine, names) == expected,
                         [&] { return rank2::to_string(h) + ", d=" + std::to_string(d); });

                // A specialization lying on h alone has exactly these blocks.
                for (int tries = 0; tries < 20000; ++tries) {
                    const auto spec = random_rank2(d, 4, rng);
                    const auto hs = rank2::hyperplanes_containing(spec);
                    if (hs.size() != 1 || !(hs.front() == h)) continue;
                    t.expect(rank2::rouquier_blocks(spec) == mine,
                             [&] { return "blocks at " + describe(spec) + " differ from " + rank2::to_string(h); });
                    break;
                }
            }
        }
    });
}

CheckResult rank2_aA_constancy(int max_d, int per_d, int range, std::uint64_t seed) {
    return guarded("a+A constant on rank-two blocks", [&](Tally& t) {
        Rng rng(seed);
        for (int d = 1; d <= max_d; ++d) {
            const auto lbls = rank2::labels(d);
            for (int it = 0; it < per_d; ++it) {
                const auto spec = random_rank2(d, range, rng);
                const auto bp = rank2::rouquier_blocks(spec);
                t.expect(constant_on_blocks(bp, [&](std::size_t i) { return rank2::aA_sum(lbls[i], spec); }),
                         [&] { return describe(spec); });
            }
        }
    });
}

CheckResult rank2_a_A_constancy(int max_d, int per_d, int range, std::uint64_t seed) {
    return guarded("a and A separately constant on rank-two blocks", [&](Tally& t) {
        Rng rng(seed);
        for (int d = 1; d <= max_d; ++d) {
            const auto lbls = rank2::labels(d);
            for (int it = 0; it < per_d; ++it) {
                const auto spec = random_rank2(d, range, rng);
                const auto bp = rank2::rouquier_blocks(spec);
                t.expect(constant_on_blocks(bp, [&](std::size_t i) { return rank2::a_value(lbls[i], spec); }),
                         [&] { return "a varies at " + describe(spec); });
                t.expect(constant_on_blocks(bp, [&](std::size_t i) { return rank2::A_value(lbls[i], spec); }),
                         [&] { return "A varies at " + describe(spec); });
            }
        }
    });
}

CheckResult rank2_two_pairs(int max_d, int per_d, int range, std::uint64_t seed) {
    return guarded("degree-two pairs always share a block", [&](Tally& t) {
        Rng rng(seed);
        for (int d = 2; d <= max_d; ++d)
            for (int it = 0; it < per_d; ++it) {
                const auto spec = random_rank2(d, range, rng);
                const auto bp = rank2::rouquier_blocks(spec);
                for (int k = 0; k < d; ++k)
                    for (int l = k + 1; l < d; ++l)
                        t.expect(bp.same_block(rank2::index_of(rank2::Two{k, l, 1}, d),
                                               rank2::index_of(rank2::Two{k, l, 2}, d)),
                                 [&] { return describe(spec); });
            }
    });
}

// --- ariki_koike -----------------------------------------------------------

CheckResult ak_oracle(int max_d, int max_r, int samples, std::uint64_t seed) {
    return guarded("Ariki-Koike blocks vs breadth-first oracle", [&](Tally& t) {
        Rng rng(seed);
        for (int d = 1; d <= max_d; ++d)
            for (int r = 1; r <= max_r; ++r)
                for (int it = 0; it < samples; ++it) {
                    ak::Specialization spec{d, r, std::vector<int>(d), uniform(rng, -2, 2)};
                    for (auto& x : spec.m) x = uniform(rng, -3, 3);
                    t.expect(ak::rouquier_blocks(spec) == oracle::bfs_ak_blocks(spec),
                             [&] { return describe(spec); });
                }
    });
}

CheckResult ak_invariance(int max_d, int max_r, int samples, std::uint64_t seed) {
    return guarded("Ariki-Koike blocks under translation and scaling", [&](Tally& t) {
        Rng rng(seed);
        for (int d = 1; d <= max_d; ++d)
            for (int r = 1; r <= max_r; ++r)
                for (int it = 0; it < samples; ++it) {
                    ak::Specialization spec{d, r, std::vector<int>(d), uniform(rng, -2, 2)};
                    for (auto& x : spec.m) x = uniform(rng, -3, 3);
                    const auto base = ak::rouquier_blocks(spec);
                    auto moved = spec;
                    const int c = uniform(rng, -4, 4);
                    for (auto& x : moved.m) x += c;
                    t.expect(ak::rouquier_blocks(moved) == base, [&] { return "translation at " + describe(spec); });
                    auto scaled = spec;
                    const int lam = uniform(rng, 2, 3);
                    for (auto& x : scaled.m) x *= lam;
                    scaled.n *= lam;
                    t.expect(ak::rouquier_blocks(scaled) == base, [&] { return "scaling at " + describe(spec); });
                }
    });
}

// --- descent ---------------------------------------------------------------

CheckResult tau_exchange(int max_de, int max_r) {
    return guarded("parent blocks stable under tau and exchanges", [&](Tally& t) {
        for (int de = 1; de <= max_de; ++de)
            for (int e : divisors(de)) {
                const int d = de / e;
                for (int r = 2; r <= max_r; ++r) {
                    const auto lbls = ak::labels(de, r);
                    const auto perm = descent::tau_permutation(lbls, d);
                    // Exchanges (j, j+kd) as index permutations.
                    std::vector<std::vector<std::size_t>> exchanges;
                    for (int j = 0; j < de; ++j)
                        for (int k = 1; j + k * d < de; ++k) {
                            std::vector<std::size_t> img(lbls.size());
                            for (std::size_t i = 0; i < lbls.size(); ++i)
                                img[i] = index_in(lbls, swap_components(lbls[i], j, j + k * d));
                            exchanges.push_back(std::move(img));
                        }
                    for_each_vector(d, -1, 1, [&](const std::vector<int>& m) {
                        for (int n = -1; n <= 1; ++n) {
                            const auto spec = repeated(de, e, r, m, n);
                            const auto bp = ak::rouquier_blocks(spec);
                            bool ok = true;
                            for (std::size_t i = 0; i < lbls.size() && ok; ++i) ok = bp.same_block(i, perm[i]);
                            t.expect(ok, [&] { return "tau instability at " + describe(spec); });
                            for (const auto& img : exchanges) {
                                ok = true;
                                for (std::size_t i = 0; i < lbls.size() && ok; ++i) ok = bp.same_block(i, img[i]);
                                t.expect(ok, [&] { return "exchange instability at " + describe(spec); });
                            }
                        }
                    });
                }
            }
    });
}

CheckResult descent_counts(int max_de, int max_r) {
    return guarded("descended character counts", [&](Tally& t) {
        const std::vector<std::pair<descent::GroupParams, std::size_t>> known{
            {{2, 2, 2}, 4}, {{3, 3, 2}, 3}, {{4, 4, 2}, 5}};
        for (const auto& [g, want] : known) {
            const auto got = descent::blocks_for_group(g, std::vector<int>(g.d(), 0), 1).labels.size();
            t.expect(got == want, [&] { return g.to_string() + " has " + std::to_string(got) + " characters"; });
        }
        for (int de = 1; de <= max_de; ++de)
            for (int e : divisors(de)) {
                const int d = de / e;
                for (int r = 2; r <= max_r; ++r) {
                    const descent::GroupParams g{de, e, r};
                    const auto want = oracle::clifford_character_count(de, e, r);
                    const auto gb = descent::blocks_for_group(g, std::vector<int>(d, 0), 1);
                    t.expect(static_cast<std::int64_t>(gb.labels.size()) == want, [&] {
                        return g.to_string() + ": " + std::to_string(gb.labels.size()) + " vs " + std::to_string(want);
                    });
                    if (r == 2 && e % 2 == 0) continue;
                    const auto lbls = ak::labels(de, r);
                    const auto perm = descent::tau_permutation(lbls, d);
                    const auto orbs = descent::orbits(lbls.size(), [&](std::size_t i) { return perm[i]; }, e);
                    std::int64_t total = 0;
                    bool sizes_ok = true;
                    for (const auto& o : orbs) {
                        total += o.stabilizer_order;
                        sizes_ok = sizes_ok && static_cast<int>(o.members.size()) * o.stabilizer_order == e;
                    }
                    t.expect(sizes_ok && total == want, [&] { return "orbit-stabiliser identity at " + g.to_string(); });
                }
            }
    });
}

CheckResult stuttering_count(int max_de, int max_r) {
    return guarded("stuttering count identity", [&](Tally& t) {
        for (int de = 1; de <= max_de; ++de)
            for (int e : divisors(de)) {
                const int d = de / e;
                for (int r = 1; r <= max_r; ++r) {
                    const std::int64_t want = r % e == 0 ? oracle::count_multipartitions(d, r / e) : 0;
                    std::int64_t mine = 0;
                    for (const auto& mp : ak::labels(de, r))
                        if (descent::is_d_stuttering(mp, d, e)) ++mine;
                    const auto brute = oracle::count_stuttering(d, e, r);
                    t.expect(mine == want && brute == want, [&] {
                        return "de=" + std::to_string(de) + " e=" + std::to_string(e) + " r=" + std::to_string(r) +
                               ": " + std::to_string(mine) + " vs " + std::to_string(want);
                    });
                }
            }
    });
}

CheckResult stabiliser_coprimality(int max_de, int max_r) {
    return guarded("stabiliser coprimality in parent blocks", [&](Tally& t) {
        for (int de = 2; de <= max_de; ++de)
            for (int e : divisors(de)) {
                if (e == 1) continue;
                const int d = de / e;
                std::vector<int> primes;
                for (int p = 2; p <= e; ++p)
                    if (e % p == 0 && prime_power_base(p) == p) primes.push_back(p);
                for (int r = 2; r <= max_r; ++r) {
                    const auto lbls = ak::labels(de, r);
                    const auto perm = descent::tau_permutation(lbls, d);
                    const auto orbs = descent::orbits(lbls.size(), [&](std::size_t i) { return perm[i]; }, e);
                    std::vector<int> stab(lbls.size());
                    for (const auto& o : orbs)
                        for (auto mbr : o.members) stab[mbr] = o.stabilizer_order;
                    for_each_vector(d, 0, 1, [&](const std::vector<int>& m) {
                        for (int n = 0; n <= 1; ++n) {
                            const auto spec = repeated(de, e, r, m, n);
                            const auto bp = ak::rouquier_blocks(spec);
                            for (const auto& b : bp.blocks()) {
                                if (b.size() == 1) continue;
                                bool has_moving = false;
                                for (auto i : b) has_moving = has_moving || stab[i] < e;
                                if (!has_moving) continue;
                                for (int p : primes) {
                                    bool found = false;
                                    for (auto i : b) found = found || stab[i] % p != 0;
                                    t.expect(found, [&] {
                                        return "prime " + std::to_string(p) + " divides every stabiliser in a block at " +
                                               describe(spec);
                                    });
                                }
                            }
                        }
                    });
                }
            }
    });
}

CheckResult three_hyperplanes(int max_p, int max_d, int samples, std::uint64_t seed) {
    return guarded("three hyperplanes closure", [&](Tally& t) {
        Rng rng(seed);
        for (int p = 1; p <= max_p; ++p)
            for (int d = 1; d <= max_d; ++d) {
                const int pd = p * d;
                if (pd < 3) continue;
                for (int it = 0; it < samples; ++it) {
                    const auto parent = repeated_rank2(p, random_rank2(d, 1, rng));
                    const auto bp = rank2::rouquier_blocks(parent);
                    for (int k1 = 0; k1 < pd; ++k1)
                        for (int k2 = 0; k2 < pd; ++k2)
                            for (int k3 = 0; k3 < pd; ++k3) {
                                if (k1 == k2 || k2 == k3 || k1 == k3) continue;
                                if (parent.c[k1] != parent.c[k2] || parent.c[k2] != parent.c[k3]) continue;
                                if (!is_essential_pair(pd, std::min(k1, k2), std::max(k1, k2)) ||
                                    !is_essential_pair(pd, std::min(k2, k3), std::max(k2, k3)))
                                    continue;
                                const auto third =
                                    rank2::blocks_for_hyperplane(rank2::CEq{std::min(k1, k3), std::max(k1, k3)}, pd);
                                t.expect(third.refines(bp), [&] {
                                    return "C" + std::to_string(k1) + "=C" + std::to_string(k3) + " at " +
                                           describe(parent);
                                });
                            }
                }
            }
    });
}

CheckResult descended_aa(int max_p, int max_d, int samples, std::uint64_t seed) {
    return guarded("a/A on descended rank-two characters", [&](Tally& t) {
        Rng rng(seed);
        for (int p = 2; p <= max_p; ++p)
            for (int d = 1; d <= max_d; ++d) {
                const int pd = p * d;
                const auto lbls = rank2::labels(pd);
                for (int it = 0; it < samples; ++it) {
                    const auto spec = random_rank2(d, 3, rng);
                    const auto parent = repeated_rank2(p, spec);
                    for (const auto& l : lbls) {
                        // a/A agree along the orbit.
                        auto img = l;
                        for (int step = 1; step < p; ++step) {
                            img = descent::rank2_action(img, p, d);
                            t.expect(rank2::a_value(img, parent) == rank2::a_value(l, parent) &&
                                         rank2::A_value(img, parent) == rank2::A_value(l, parent),
                                     [&] { return "orbit of " + rank2::to_string(l) + " at " + describe(parent); });
                        }
                    }
                    const auto gb = descent::blocks_for_rank2_group(p, spec);
                    t.expect(constant_on_blocks(gb.blocks,
                                                [&](std::size_t i) {
                                                    const auto& v = (*gb.aa)[i];
                                                    return std::make_pair(v.a, v.A);
                                                }),
                             [&] { return "descended blocks at p=" + std::to_string(p) + " " + describe(spec); });
                }
            }
    });
}

// --- suites ----------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"combinatorics", "cyclotomic", "schur",
                                                "ariki_koike",   "rank2",      "descent"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const Bounds& b) {
    require(b.max_d >= 1, "--max-d: must be positive");
    require(b.max_r >= 2, "--max-r: must be at least 2");
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, b);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    const int small_d = std::min(b.max_d, 3);
    if (suite == "combinatorics")
        return {beta_round_trip(3 * b.max_r), shift_composition(3 * b.max_r), floor_stability(b.max_r + 2, b.max_r - 1),
                content_equivalence(b.max_r + 2, b.max_r - 1)};
    if (suite == "cyclotomic") return {cyclotomic_oracle(6 * b.max_d), root_difference_symmetry(6 * b.max_d)};
    if (suite == "schur") return {schur_consistency(b.max_d, 100, 5, b.seed), schur_structure(b.max_d)};
    if (suite == "ariki_koike")
        return {ak_oracle(small_d, b.max_r, 30, b.seed), ak_invariance(small_d, b.max_r, 20, b.seed)};
    if (suite == "rank2") {
        std::vector<int> ds(b.max_d);
        std::iota(ds.begin(), ds.end(), 1);
        return {rank2_golden(ds), rank2_aA_constancy(b.max_d, 100, 5, b.seed),
                rank2_a_A_constancy(b.max_d, 100, 5, b.seed), rank2_two_pairs(b.max_d, 100, 5, b.seed)};
    }
    if (suite == "descent")
        return {tau_exchange(b.max_d, b.max_r),      descent_counts(b.max_d + 2, b.max_r),
                stuttering_count(b.max_d + 2, b.max_r + 2), stabiliser_coprimality(b.max_d, b.max_r),
                three_hyperplanes(3, small_d, 30, b.seed),  descended_aa(3, small_d, 30, b.seed)};
    throw ValidationError("--suite: unknown suite '" + suite + "'");
}

report::Json to_json(const std::vector<CheckResult>& results, const Bounds& b, const std::string& suite) {
    report::Json j;
    j["schemaVersion"] = report::kSchemaVersion;
    j["command"] = "verify";
    j["spec"] = {{"suite", suite}, {"maxD", b.max_d}, {"maxR", b.max_r}, {"seed", b.seed}};
    report::Json checks = report::Json::array();
    std::int64_t passed = 0;
    for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
        if (r.passed) ++passed;
    }
    j["checks"] = std::move(checks);
    j["passed"] = passed;
    j["total"] = static_cast<std::int64_t>(results.size());
    return j;
}

}  // namespace rouquier::verify
