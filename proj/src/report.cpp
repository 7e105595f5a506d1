#include "rouquier/report.hpp"

#include <sstream>

#include "rouquier/ariki_koike.hpp"
#include "rouquier/errors.hpp"

namespace rouquier::report {

namespace {

template <class T>
Json array_of(const std::vector<T>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x);
    return out;
}

descent::GroupParams group_params(const Job& job) {
    if (job.family == Family::ArikiKoike) return {job.d, 1, job.r};
    return {job.de, job.e, job.r};
}

rank2::Spec rank2_spec(const Job& job) {
    rank2::Spec s;
    s.d = job.d;
    s.a[0] = job.a[0];
    s.a[1] = job.a[1];
    s.b[0] = job.b[0];
    s.b[1] = job.b[1];
    s.c = job.c;
    return s;
}

Json spec_echo(const Job& job) {
    Json s;
    s["family"] = family_name(job.family);
    switch (job.family) {
        case Family::Group:
            s["de"] = job.de;
            s["e"] = job.e;
            s["r"] = job.r;
            break;
        case Family::ArikiKoike:
            s["d"] = job.d;
            s["r"] = job.r;
            break;
        case Family::Rank2:
            s["d"] = job.d;
            s["p"] = job.p;
            break;
    }
    if (!job.has_weights) return s;
    if (job.family == Family::Rank2) {
        s["a"] = array_of(job.a);
        s["b"] = array_of(job.b);
        s["c"] = array_of(job.c);
    } else {
        s["m"] = array_of(job.m);
        s["n"] = job.n;
    }
    return s;
}

Json header(const std::string& command, const Job& job) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["command"] = command;
    j["spec"] = spec_echo(job);
    return j;
}

descent::GroupBlocks compute(const Job& job) {
    if (job.family == Family::Rank2) return descent::blocks_for_rank2_group(job.p, rank2_spec(job));
    return descent::blocks_for_group(group_params(job), job.m, job.n);
}

void fill_blocks(Json& j, const descent::GroupBlocks& g) {
    j["group"] = g.group;
    j["path"] = descent::path_name(g.path);
    j["hyperplanes"] = array_of(g.hyperplanes);
    j["labels"] = array_of(g.labels);
    j["characterCount"] = g.labels.size();
    j["parentCharacterCount"] = g.parent_label_count;
    Json bl = Json::array();
    for (const auto& b : g.blocks.blocks()) {
        Json one = Json::array();
        for (auto i : b) one.push_back(g.labels[i]);
        bl.push_back(std::move(one));
    }
    j["blocks"] = std::move(bl);
}

void check_length(std::size_t got, std::size_t want, const char* field) {
    require(got == want, std::string("--") + field + ": expected " + std::to_string(want) + " values, got " +
                             std::to_string(got));
}

}  // namespace

Family parse_family(const std::string& name) {
    if (name == "group") return Family::Group;
    if (name == "ak") return Family::ArikiKoike;
    if (name == "rank2") return Family::Rank2;
    throw ValidationError("--family: unknown family '" + name + "' (expected group, ak or rank2)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Group: return "group";
        case Family::ArikiKoike: return "ak";
        case Family::Rank2: return "rank2";
    }
    return "unknown";
}

void Job::validate() const {
    switch (family) {
        case Family::Group:
            require(de >= 1, "--de: must be positive");
            require(e >= 1, "--e: must be positive");
            require(de % e == 0, "--e: must divide --de");
            require(r >= 2, "--r: rank must be at least 2");
            if (has_weights) check_length(m.size(), static_cast<std::size_t>(de / e), "m");
            break;
        case Family::ArikiKoike:
            require(d >= 1, "--d: must be positive");
            require(r >= 1, "--r: must be positive");
            if (has_weights) check_length(m.size(), static_cast<std::size_t>(d), "m");
            break;
        case Family::Rank2:
            require(d >= 1, "--d: must be positive");
            require(p >= 1, "--p: must be positive");
            if (has_weights) {
                check_length(a.size(), 2, "a");
                check_length(b.size(), 2, "b");
                check_length(c.size(), static_cast<std::size_t>(d), "c");
            }
            break;
    }
}

std::string rational_string(const rank2::Rational& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

Json blocks(const Job& job) {
    job.validate();
    require(job.has_weights, "blocks: weights are required");
    Json j = header("blocks", job);
    fill_blocks(j, compute(job));
    return j;
}

Json hyperplanes(const Job& job) {
    job.validate();
    Json j = header("hyperplanes", job);
    std::vector<std::string> all;
    std::optional<std::vector<std::string>> containing;
    auto names = [](const auto& hs) {
        std::vector<std::string> out;
        for (const auto& h : hs) out.push_back(to_string(h));
        return out;
    };

    const bool rank2_parent =
        job.family == Family::Rank2 || (job.family == Family::Group && job.e > 1 && job.e % 2 == 0 && job.r == 2);
    if (job.family == Family::Group && job.e == 1) {
        Job ak = job;
        ak.family = Family::ArikiKoike;
        ak.d = job.de;
        auto out = hyperplanes(ak);
        out["spec"] = spec_echo(job);
        return out;
    }
    if (rank2_parent) {
        const int pd = job.family == Family::Rank2 ? job.p * job.d : job.de / 2;
        all = names(rank2::hyperplanes(pd));
        j["algebra"] = "G(" + std::to_string(2 * pd) + ",2,2)";
    } else {
        const int dd = job.family == Family::ArikiKoike ? job.d : job.de;
        all = names(ak::enumerate_hyperplanes(dd, job.r));
        j["algebra"] = "G(" + std::to_string(dd) + ",1," + std::to_string(job.r) + ")";
    }
    if (job.has_weights) containing = compute(job).hyperplanes;

    j["hyperplanes"] = array_of(all);
    j["hyperplaneCount"] = all.size();
    if (containing) j["containing"] = array_of(*containing);
    return j;
}

Json aa(const Job& job) {
    job.validate();
    require(job.has_weights, "aa: weights are required");
    const auto g = compute(job);
    require(g.aa.has_value(), "aa: a/A values are available only for the rank-two family (r = 2, e even)");
    Json j = header("aa", job);
    fill_blocks(j, g);
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.labels.size(); ++i) {
        const auto& v = (*g.aa)[i];
        Json row;
        row["label"] = g.labels[i];
        row["a"] = rational_string(v.a);
        row["A"] = rational_string(v.A);
        row["aPlusA"] = rational_string(v.a + v.A);
        rows.push_back(std::move(row));
    }
    j["aa"] = std::move(rows);
    return j;
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

std::string render_text(const Json& j) {
    std::ostringstream os;
    auto list = [&](const Json& arr) {
        std::string s;
        for (const auto& x : arr) s += (s.empty() ? "" : ", ") + x.get<std::string>();
        return s.empty() ? std::string("(none)") : s;
    };
    const auto cmd = j.value("command", std::string());
    if (j.contains("group")) os << j["group"].get<std::string>() << " via " << j["path"].get<std::string>() << "\n";
    if (j.contains("algebra")) os << "algebra " << j["algebra"].get<std::string>() << "\n";
    if (cmd == "hyperplanes") {
        os << "essential hyperplanes (" << j["hyperplaneCount"].get<std::size_t>() << "):\n";
        for (const auto& h : j["hyperplanes"]) os << "  " << h.get<std::string>() << "\n";
        if (j.contains("containing")) os << "containing: " << list(j["containing"]) << "\n";
        return os.str();
    }
    if (j.contains("blocks")) {
        os << "hyperplanes containing the specialization: " << list(j["hyperplanes"]) << "\n";
        os << "characters: " << j["characterCount"].get<std::size_t>() << "\n";
        os << "blocks (" << j["blocks"].size() << "):\n";
        for (const auto& b : j["blocks"]) os << "  {" << list(b) << "}\n";
    }
    if (j.contains("aa")) {
        os << "a / A / a+A:\n";
        for (const auto& row : j["aa"])
            os << "  " << row["label"].get<std::string>() << "  a=" << row["a"].get<std::string>()
               << "  A=" << row["A"].get<std::string>() << "  a+A=" << row["aPlusA"].get<std::string>() << "\n";
    }
    if (j.contains("checks")) {
        for (const auto& c : j["checks"])
            os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " ("
               << c["cases"].get<std::int64_t>() << " cases)"
               << (c["detail"].get<std::string>().empty() ? "" : ": " + c["detail"].get<std::string>()) << "\n";
        os << j["passed"].get<std::int64_t>() << "/" << j["total"].get<std::int64_t>() << " checks passed\n";
    }
    return os.str();
}

}  // namespace rouquier::report
