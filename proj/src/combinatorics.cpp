#include "rouquier/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rouquier/errors.hpp"

namespace rouquier {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] >= 1, "partition parts must be positive");
        require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
    }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ']';
    return os.str();
}

bool precedes(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

std::vector<Partition> partitions_of(int n) {
    require(n >= 0, "cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Parts are emitted largest-first, so depth-first with descending choices
    // yields reverse-lex order directly.
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

BetaNumber beta_number(const Partition& p) {
    const int h = p.height();
    BetaNumber b(h);
    for (int i = 0; i < h; ++i) b[i] = h + p.parts()[i] - (i + 1);
    return b;
}

BetaNumber shift(const BetaNumber& b, int m) {
    require(m >= 0, "shift amount must be non-negative");
    BetaNumber out;
    out.reserve(b.size() + m);
    for (int x : b) out.push_back(x + m);
    for (int j = m - 1; j >= 0; --j) out.push_back(j);
    return out;
}

Partition partition_from_beta(const BetaNumber& b) {
    const int h = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < h; ++i) {
        require(i == 0 || b[i - 1] > b[i], "beta number must be strictly decreasing");
        int part = b[i] - (h - (i + 1));
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

MultiPartition::MultiPartition(std::vector<Partition> components) : comps_(std::move(components)) {
    require(!comps_.empty(), "a multipartition needs at least one component");
}

int MultiPartition::size() const noexcept {
    int s = 0;
    for (const auto& p : comps_) s += p.size();
    return s;
}

std::string MultiPartition::to_string() const {
    std::string s = "[";
    for (std::size_t a = 0; a < comps_.size(); ++a) {
        if (a) s += ',';
        s += comps_[a].to_string();
    }
    return s + "]";
}

bool precedes(const MultiPartition& a, const MultiPartition& b) {
    const std::size_t n = std::min(a.comps_.size(), b.comps_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.comps_[i] == b.comps_[i]) continue;
        return precedes(a.comps_[i], b.comps_[i]);
    }
    return a.comps_.size() < b.comps_.size();
}

std::vector<MultiPartition> multipartitions_of(int d, int r) {
    require(d >= 1, "d must be positive");
    require(r >= 0, "r must be non-negative");
    std::vector<std::vector<Partition>> by_size(r + 1);
    for (int n = 0; n <= r; ++n) by_size[n] = partitions_of(n);

    std::vector<MultiPartition> out;
    std::vector<Partition> cur;
    std::function<void(int, int)> rec = [&](int a, int rest) {
        if (a == d - 1) {
            for (const auto& p : by_size[rest]) {
                cur.push_back(p);
                out.emplace_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int n = rest; n >= 0; --n) {
            for (const auto& p : by_size[n]) {
                cur.push_back(p);
                rec(a + 1, rest - n);
                cur.pop_back();
            }
        }
    };
    rec(0, r);
    std::sort(out.begin(), out.end(), MultiPartitionOrder{});
    return out;
}

int charged_height(const MultiPartition& mp, const WeightSystem& w) {
    require(w.size() == mp.d(), "weight system length must equal the number of components");
    int hc = mp[0].height() - w[0];
    for (std::size_t a = 1; a < mp.d(); ++a) hc = std::max(hc, mp[a].height() - w[a]);
    return hc;
}

Symbol charged_symbol(const MultiPartition& mp, const WeightSystem& w, std::optional<int> floor) {
    const int hc = charged_height(mp, w);
    const int base = floor.value_or(hc);
    require(base >= hc, "symbol floor below the charged height");
    Symbol s;
    s.shift_base = base;
    s.rows.reserve(mp.d());
    for (std::size_t a = 0; a < mp.d(); ++a) {
        const int hca = mp[a].height() - w[a];
        s.rows.push_back(shift(beta_number(mp[a]), base - hca));
    }
    return s;
}

int ContentMultiset::total() const noexcept {
    int t = 0;
    for (const auto& [v, c] : counts) t += c;
    return t;
}

ContentMultiset content(const Symbol& s) {
    ContentMultiset c;
    for (const auto& row : s.rows)
        for (int x : row) ++c.counts[x];
    return c;
}

bool contents_equal(const MultiPartition& mp1, const MultiPartition& mp2, const WeightSystem& w) {
    require(mp1.d() == mp2.d(), "multipartitions must have the same number of components");
    require(mp1.size() == mp2.size(), "multipartitions must have the same size");
    const int floor = std::max(charged_height(mp1, w), charged_height(mp2, w));
    return content(charged_symbol(mp1, w, floor)) == content(charged_symbol(mp2, w, floor));
}

}  // namespace rouquier
