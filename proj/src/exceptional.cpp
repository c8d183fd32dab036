#include "goodgrad/exceptional.hpp"

#include "goodgrad/exceptional_data.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace goodgrad {

namespace {

using nlohmann::json;

struct Record {
    ExceptionalType algebra;
    std::string orbit;
    bool printed;
    std::vector<PrintedCharacteristic> row;
};

bool is_e_type(ExceptionalType t) {
    return t == ExceptionalType::E6 || t == ExceptionalType::E7 || t == ExceptionalType::E8;
}

const std::vector<Record>& records() {
    static const std::vector<Record> data = [] {
        const json doc = json::parse(embedded::exceptional_tables_json);
        if (doc.at("format_version").get<int>() != 1) throw std::runtime_error("unsupported table format");
        std::vector<Record> out;
        for (const auto& o : doc.at("orbits")) {
            Record r{parse_exceptional_type(o.at("algebra").get<std::string>()), o.at("orbit").get<std::string>(),
                     o.at("printed").get<bool>(), {}};
            for (const auto& c : o.at("characteristics")) {
                r.row.push_back(PrintedCharacteristic{c.at("chain").get<std::vector<int>>(), c.at("branch").get<int>()});
            }
            out.push_back(std::move(r));
        }
        return out;
    }();
    return data;
}

std::string normalize_label(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch != ' ' && ch != '_') out += ch;
    }
    return out;
}

}  // namespace

ExceptionalType parse_exceptional_type(const std::string& name) {
    static const std::map<std::string, ExceptionalType> names{{"G2", ExceptionalType::G2}, {"F4", ExceptionalType::F4},
                                                              {"E6", ExceptionalType::E6}, {"E7", ExceptionalType::E7},
                                                              {"E8", ExceptionalType::E8}};
    std::string key = normalize_label(name);
    if (!key.empty()) key[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(key[0])));
    const auto it = names.find(key);
    if (it == names.end()) throw std::invalid_argument("unknown exceptional algebra '" + name + "'");
    return it->second;
}

std::string exceptional_name(ExceptionalType t) {
    switch (t) {
        case ExceptionalType::G2: return "G2";
        case ExceptionalType::F4: return "F4";
        case ExceptionalType::E6: return "E6";
        case ExceptionalType::E7: return "E7";
        case ExceptionalType::E8: return "E8";
    }
    return "?";
}

int exceptional_rank(ExceptionalType t) {
    switch (t) {
        case ExceptionalType::G2: return 2;
        case ExceptionalType::F4: return 4;
        case ExceptionalType::E6: return 6;
        case ExceptionalType::E7: return 7;
        case ExceptionalType::E8: return 8;
    }
    return 0;
}

std::vector<int> bourbaki_labels(const PrintedCharacteristic& c) {
    const int r = static_cast<int>(c.chain.size()) + 1;
    if (r < 6 || r > 8) throw std::invalid_argument("printed characteristic has wrong length");
    std::vector<int> out(static_cast<std::size_t>(r));
    for (int i = 1; i <= r - 2; ++i) out[r - i] = c.chain[i - 1];
    out[0] = c.chain[r - 2];
    out[1] = c.branch;
    return out;
}

PrintedCharacteristic printed_layout(ExceptionalType t, const std::vector<int>& labels) {
    const int r = exceptional_rank(t);
    if (!is_e_type(t) || static_cast<int>(labels.size()) != r) {
        throw std::invalid_argument("printed layout needs " + std::to_string(r) + " labels of an E-type algebra");
    }
    PrintedCharacteristic c;
    for (int i = 1; i <= r - 2; ++i) c.chain.push_back(labels[r - i]);
    c.chain.push_back(labels[0]);
    c.branch = labels[1];
    return c;
}

std::vector<int> e6_mirror(const std::vector<int>& labels) {
    if (labels.size() != 6) throw std::invalid_argument("E6 characteristics have 6 labels");
    return {labels[5], labels[1], labels[4], labels[3], labels[2], labels[0]};
}

ExceptionalEntry exceptional_lookup(ExceptionalType t, const std::string& orbit, bool with_mirrors) {
    ExceptionalEntry entry;
    entry.algebra = t;
    entry.orbit_label = orbit;
    if (!is_e_type(t)) return entry;
    const std::string key = normalize_label(orbit);
    for (const auto& r : records()) {
        if (r.algebra != t || normalize_label(r.orbit) != key) continue;
        entry.orbit_label = r.orbit;
        entry.printed = r.printed;
        for (const auto& c : r.row) entry.row.push_back(bourbaki_labels(c));
        if (entry.row.size() > 1) entry.non_dynkin_characteristics.assign(entry.row.begin() + 1, entry.row.end());
        if (with_mirrors && t == ExceptionalType::E6) {
            const auto listed = entry.non_dynkin_characteristics;
            for (const auto& c : listed) {
                const auto m = e6_mirror(c);
                const auto& nd = entry.non_dynkin_characteristics;
                if (std::find(nd.begin(), nd.end(), m) == nd.end() && m != entry.row.front()) {
                    entry.non_dynkin_characteristics.push_back(m);
                }
            }
        }
        return entry;
    }
    std::string known;
    for (const auto& name : exceptional_orbits(t)) known += (known.empty() ? "" : ", ") + name;
    throw std::invalid_argument("orbit '" + orbit + "' is not listed for " + exceptional_name(t) + " (known: " + known + ")");
}

std::vector<std::string> exceptional_orbits(ExceptionalType t) {
    std::vector<std::string> out;
    for (const auto& r : records()) {
        if (r.algebra == t) out.push_back(r.orbit);
    }
    return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t exceptional_table_checksum() { return fnv1a64(embedded::exceptional_tables_json); }

std::uint64_t exceptional_table_expected_checksum() {
    return std::stoull(embedded::exceptional_tables_fnv1a, nullptr, 16);
}

std::vector<std::vector<int>> exceptional_positive_roots(ExceptionalType t) {
    if (!is_e_type(t)) throw std::invalid_argument("root data are provided for E6, E7 and E8");
    const int r = exceptional_rank(t);
    std::vector<std::vector<int>> cartan(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) cartan[i][i] = 2;
    std::vector<std::pair<int, int>> edges{{1, 3}, {2, 4}, {3, 4}};
    for (int j = 4; j < r; ++j) edges.emplace_back(j, j + 1);
    for (auto [a, b] : edges) cartan[a - 1][b - 1] = cartan[b - 1][a - 1] = -1;

    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < r; ++i) {
        std::vector<int> s(r, 0);
        s[i] = 1;
        roots.insert(s);
        layer.push_back(s);
    }
    // alpha_i-strings: beta + alpha_i is a root iff p - <beta, alpha_i> > 0
    while (!layer.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& b : layer) {
            for (int i = 0; i < r; ++i) {
                int pairing = 0;
                for (int j = 0; j < r; ++j) pairing += b[j] * cartan[j][i];
                int p = 0;
                auto down = b;
                while (true) {
                    --down[i];
                    if (!roots.count(down)) break;
                    ++p;
                }
                if (p - pairing <= 0) continue;
                auto up = b;
                ++up[i];
                if (roots.insert(up).second) next.push_back(up);
            }
        }
        layer = std::move(next);
    }
    return {roots.begin(), roots.end()};
}

std::map<int, std::size_t> exceptional_grading_dims(ExceptionalType t, const std::vector<int>& labels) {
    const auto roots = exceptional_positive_roots(t);
    if (static_cast<int>(labels.size()) != exceptional_rank(t)) throw std::invalid_argument("label count differs from rank");
    std::map<int, std::size_t> dims;
    dims[0] = static_cast<std::size_t>(exceptional_rank(t));
    for (const auto& b : roots) {
        int d = 0;
        for (std::size_t i = 0; i < b.size(); ++i) d += b[i] * labels[i];
        ++dims[d];
        ++dims[-d];
    }
    return dims;
}

std::vector<std::string> verify_exceptional_tables() {
    std::vector<std::string> problems;
    if (exceptional_table_checksum() != exceptional_table_expected_checksum()) {
        problems.push_back("table checksum mismatch");
    }
    for (const auto& rec : records()) {
        const std::string where = exceptional_name(rec.algebra) + " " + rec.orbit + ": ";
        if (rec.printed == rec.row.empty()) problems.push_back(where + "printed flag disagrees with the stored row");
        if (!is_e_type(rec.algebra)) continue;
        std::set<std::size_t> centralizer_dims;
        std::set<std::vector<int>> seen;
        for (const auto& pc : rec.row) {
            if (static_cast<int>(pc.chain.size()) + 1 != exceptional_rank(rec.algebra)) {
                problems.push_back(where + "label vector has the wrong length");
                continue;
            }
            const auto labels = bourbaki_labels(pc);
            if (std::any_of(labels.begin(), labels.end(), [](int x) { return x < 0 || x > 2; })) {
                problems.push_back(where + "label outside {0,1,2}");
            }
            auto canonical = labels;
            if (rec.algebra == ExceptionalType::E6) canonical = std::min(labels, e6_mirror(labels));
            if (!seen.insert(canonical).second) problems.push_back(where + "repeated characteristic");
            const auto dims = exceptional_grading_dims(rec.algebra, labels);
            auto dim = [&](int j) {
                auto it = dims.find(j);
                return it == dims.end() ? std::size_t{0} : it->second;
            };
            centralizer_dims.insert(dim(0) + dim(1));
            for (int j = -1; j <= dims.rbegin()->first; ++j) {
                if (dim(j) < dim(j + 2)) {
                    problems.push_back(where + "dim g_" + std::to_string(j) + " < dim g_" + std::to_string(j + 2));
                    break;
                }
            }
        }
        if (centralizer_dims.size() > 1) problems.push_back(where + "dim g_0 + dim g_1 varies along the row");
    }
    return problems;
}

}  // namespace goodgrad
