#include "rouquier/schur.hpp"

#include <algorithm>
#include <numeric>

#include "rouquier/errors.hpp"

namespace rouquier {

bool is_primitive(const ExponentVector& m) {
    std::int64_t g = 0;
    for (auto x : m) g = std::gcd(g, x);
    return g == 1;
}

void FactoredSchurElement::validate() const {
    for (const auto& f : factors) {
        require(f.monomial.size() == leading_monomial.size(), "factor monomial length differs from leading monomial");
        require(is_primitive(f.monomial), "factor monomial is not primitive");
        require(f.degree >= 1, "cyclotomic factor degree must be positive");
        require(f.multiplicity >= 1, "factor multiplicity must be positive");
    }
}

bool FactoredSchurElement::zero_sum_on_blocks(const std::vector<std::size_t>& blocks) const {
    auto ok = [&](const ExponentVector& m) {
        std::size_t pos = 0;
        for (auto len : blocks) {
            if (pos + len > m.size()) return false;
            std::int64_t sum = 0;
            for (std::size_t i = pos; i < pos + len; ++i) sum += m[i];
            if (sum != 0) return false;
            pos += len;
        }
        return pos == m.size();
    };
    if (!ok(leading_monomial)) return false;
    return std::all_of(factors.begin(), factors.end(), [&](const CycloFactor& f) { return ok(f.monomial); });
}

std::int64_t specialize_monomial(const ExponentVector& m, const Specialization& s) {
    require(m.size() == s.size(), "monomial and specialization lengths differ");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] * s[i];
    return acc;
}

ValuationDegree valuation_and_degree(const FactoredSchurElement& f, const Specialization& s) {
    const std::int64_t lead = specialize_monomial(f.leading_monomial, s);
    ValuationDegree vd{pos_part(lead) + neg_part(lead), pos_part(lead) + neg_part(lead)};
    for (const auto& fac : f.factors) {
        const std::int64_t e = specialize_monomial(fac.monomial, s);
        const std::int64_t w = std::int64_t{fac.multiplicity} * fac.degree;
        vd.valuation += w * neg_part(e);
        vd.degree += w * pos_part(e);
    }
    return vd;
}

bool is_essential_for(const FactoredSchurElement& f, const ExponentVector& m, int p) {
    ExponentVector neg(m.size());
    std::transform(m.begin(), m.end(), neg.begin(), [](auto x) { return -x; });
    return std::any_of(f.factors.begin(), f.factors.end(), [&](const CycloFactor& fac) {
        return fac.psi_at_one_prime == p && (fac.monomial == m || fac.monomial == neg);
    });
}

}  // namespace rouquier
