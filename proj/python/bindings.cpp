#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rouquier/combinatorics.hpp"
#include "rouquier/cyclotomic.hpp"
#include "rouquier/descent.hpp"
#include "rouquier/errors.hpp"
#include "rouquier/report.hpp"
#include "rouquier/verify.hpp"

namespace py = pybind11;
using namespace rouquier;

namespace {

MultiPartition to_mp(const std::vector<std::vector<int>>& v) {
    std::vector<Partition> comps;
    for (const auto& x : v) comps.emplace_back(x);
    return MultiPartition(std::move(comps));
}

std::vector<std::vector<int>> from_mp(const MultiPartition& mp) {
    std::vector<std::vector<int>> out;
    for (const auto& p : mp.components()) out.push_back(p.parts());
    return out;
}

report::Job group_job(int de, int e, int r, std::vector<int> m, int n) {
    report::Job j;
    j.family = report::Family::Group;
    j.de = de;
    j.e = e;
    j.r = r;
    j.m = std::move(m);
    j.n = n;
    return j;
}

report::Job ak_job(int d, int r, std::vector<int> m, int n) {
    report::Job j;
    j.family = report::Family::ArikiKoike;
    j.d = d;
    j.r = r;
    j.m = std::move(m);
    j.n = n;
    return j;
}

report::Job rank2_job(int d, std::vector<std::int64_t> a, std::vector<std::int64_t> b, std::vector<std::int64_t> c,
                      int p) {
    report::Job j;
    j.family = report::Family::Rank2;
    j.d = d;
    j.p = p;
    j.a = std::move(a);
    j.b = std::move(b);
    j.c = std::move(c);
    return j;
}

}  // namespace

PYBIND11_MODULE(_rouquier, m) {
    m.doc() = "Rouquier blocks of cyclotomic Hecke algebras of G(de,e,r)";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.attr("SCHEMA_VERSION") = report::kSchemaVersion;

    // Reports, returned as serialized JSON.
    m.def("group_blocks_json", [](int de, int e, int r, std::vector<int> mm, int n) {
        return report::serialize(report::blocks(group_job(de, e, r, std::move(mm), n)));
    }, py::arg("de"), py::arg("e"), py::arg("r"), py::arg("m"), py::arg("n"));
    m.def("ak_blocks_json", [](int d, int r, std::vector<int> mm, int n) {
        return report::serialize(report::blocks(ak_job(d, r, std::move(mm), n)));
    }, py::arg("d"), py::arg("r"), py::arg("m"), py::arg("n"));
    m.def("rank2_blocks_json", [](int d, std::vector<std::int64_t> a, std::vector<std::int64_t> b,
                                  std::vector<std::int64_t> c, int p) {
        return report::serialize(report::blocks(rank2_job(d, std::move(a), std::move(b), std::move(c), p)));
    }, py::arg("d"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p") = 1);
    m.def("rank2_aa_json", [](int d, std::vector<std::int64_t> a, std::vector<std::int64_t> b,
                              std::vector<std::int64_t> c, int p) {
        return report::serialize(report::aa(rank2_job(d, std::move(a), std::move(b), std::move(c), p)));
    }, py::arg("d"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p") = 1);
    m.def("rank2_hyperplanes_json", [](int d, int p) {
        auto j = rank2_job(d, {}, {}, {}, p);
        j.has_weights = false;
        return report::serialize(report::hyperplanes(j));
    }, py::arg("d"), py::arg("p") = 1);
    m.def("ak_hyperplanes_json", [](int d, int r) {
        auto j = ak_job(d, r, {}, 0);
        j.has_weights = false;
        return report::serialize(report::hyperplanes(j));
    }, py::arg("d"), py::arg("r"));
    m.def("verify_json", [](const std::string& suite, int max_d, int max_r, std::uint64_t seed) {
        const verify::Bounds b{max_d, max_r, seed};
        return report::serialize(verify::to_json(verify::run_suite(suite, b), b, suite));
    }, py::arg("suite") = "all", py::arg("max_d") = 4, py::arg("max_r") = 4, py::arg("seed") = 7);

    // Combinatorial primitives.
    m.def("beta_number", [](const std::vector<int>& p) { return beta_number(Partition(p)); }, py::arg("partition"));
    m.def("shift", &shift, py::arg("beta"), py::arg("m"));
    m.def("partition_from_beta", [](const BetaNumber& b) { return partition_from_beta(b).parts(); }, py::arg("beta"));
    m.def("multipartitions", [](int d, int r) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& mp : multipartitions_of(d, r)) out.push_back(from_mp(mp));
        return out;
    }, py::arg("d"), py::arg("r"));
    m.def("contents_equal", [](const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                               const WeightSystem& w) { return contents_equal(to_mp(a), to_mp(b), w); },
          py::arg("mp1"), py::arg("mp2"), py::arg("weights"));
    m.def("prime_divisors_of_root_difference",
          [](int d, int s, int t) { return prime_divisors_of_root_difference({d, s, t}); }, py::arg("d"),
          py::arg("s"), py::arg("t"));
    m.def("is_essential_pair", &is_essential_pair, py::arg("d"), py::arg("s"), py::arg("t"));
    m.def("tau", [](const std::vector<std::vector<int>>& mp, int d) { return from_mp(descent::tau(to_mp(mp), d)); },
          py::arg("mp"), py::arg("d"));
    m.def("is_d_stuttering", [](const std::vector<std::vector<int>>& mp, int d, int e) {
        return descent::is_d_stuttering(to_mp(mp), d, e);
    }, py::arg("mp"), py::arg("d"), py::arg("e"));
}
