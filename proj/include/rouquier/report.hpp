#pragma once

// Serialisable reports shared by the command-line tool and the Python module.

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rouquier/descent.hpp"
#include "rouquier/rank2.hpp"

namespace rouquier::report {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum class Family { Group, ArikiKoike, Rank2 };

Family parse_family(const std::string& name);
std::string family_name(Family f);

/// One query. Which fields are read depends on `family`:
///  Group: de, e, r, m, n.   ArikiKoike: d, r, m, n.   Rank2: p, d, a, b, c.
/// `has_weights` is false when only the hyperplane list is wanted.
struct Job {
    Family family = Family::Group;
    int de = 1;
    int e = 1;
    int d = 1;
    int r = 2;
    int p = 1;
    std::vector<int> m;
    int n = 0;
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
    std::vector<std::int64_t> c;
    bool has_weights = true;

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

std::string rational_string(const rank2::Rational& x);

/// Characters, hyperplanes and blocks of the job's algebra.
Json blocks(const Job& job);
/// Essential hyperplanes, plus those containing the specialization when
/// weights are present.
Json hyperplanes(const Job& job);
/// Blocks together with per-character a, A and a+A. Only the rank-two
/// family (direct or via G(de,e,2) with e even) carries these.
Json aa(const Job& job);

/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string serialize(const Json& j);
/// Human-readable rendering of any report produced above.
std::string render_text(const Json& j);

}  // namespace rouquier::report
