#include "goodgrad/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace goodgrad {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

Partition Partition::sorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) { return Partition(parse_int_list(text)); }

int Partition::total() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
}

std::vector<int> Partition::distinct_parts() const {
    std::vector<int> out;
    for (int x : parts_) {
        if (out.empty() || out.back() != x) out.push_back(x);
    }
    return out;
}

std::size_t Partition::multiplicity(int j) const {
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), j));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition dual_partition(const Partition& p) {
    std::vector<int> d;
    const int top = p.empty() ? 0 : p[0];
    for (int j = 1; j <= top; ++j) {
        int c = 0;
        for (int x : p.parts()) c += x >= j ? 1 : 0;
        d.push_back(c);
    }
    return Partition(std::move(d));
}

long orbit_dimension(const Partition& p) {
    const long n = p.total();
    long s = 0;
    const Partition dual = dual_partition(p);
    for (int x : dual.parts()) s += static_cast<long>(x) * x;
    return n * n - s;
}

bool is_symplectic(const Partition& p) {
    for (int x : p.distinct_parts()) {
        if (x % 2 == 1 && p.multiplicity(x) % 2 == 1) return false;
    }
    return true;
}

bool is_orthogonal(const Partition& p) {
    for (int x : p.distinct_parts()) {
        if (x % 2 == 0 && p.multiplicity(x) % 2 == 1) return false;
    }
    return true;
}

void check_partition_for(const AlgebraSpec& spec, const Partition& p) {
    spec.validate();
    if (p.total() != spec.size) {
        throw std::invalid_argument("partition " + p.to_string() + " does not sum to " +
                                    std::to_string(spec.size));
    }
    if (spec.family == Family::SP && !is_symplectic(p)) {
        throw std::invalid_argument("partition " + p.to_string() + " is not symplectic");
    }
    if (spec.family == Family::SO && !is_orthogonal(p)) {
        throw std::invalid_argument("partition " + p.to_string() + " is not orthogonal");
    }
}

std::vector<int> center_parts(const AlgebraSpec& spec, const Partition& p) {
    check_partition_for(spec, p);
    if (spec.is_type_a()) return p.distinct_parts();
    std::vector<int> out;
    const int parity = spec.family == Family::SP ? 0 : 1;
    for (int x : p.distinct_parts()) {
        if (x % 2 == parity && p.multiplicity(x) == 2) out.push_back(x);
    }
    return out;
}

int center_dim(const AlgebraSpec& spec, const Partition& p) {
    const int c = static_cast<int>(center_parts(spec, p).size());
    return spec.is_type_a() ? c - 1 : c;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int x = std::min(rest, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

std::vector<Partition> symplectic_partitions(int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n)) {
        if (is_symplectic(p)) out.push_back(std::move(p));
    }
    return out;
}

std::vector<Partition> orthogonal_partitions(int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n)) {
        if (is_orthogonal(p)) out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = 1; x <= rest; ++x) {
            cur.push_back(x);
            rec(rest - x);
            cur.pop_back();
        }
    };
    if (n > 0) rec(n);
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    if (text.empty()) throw std::invalid_argument("empty integer list");
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty() || item.size() > 6 ||
            !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("malformed integer list: " + text);
        }
        const int v = std::stoi(item);
        if (v <= 0) throw std::invalid_argument("list entries must be positive: " + text);
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

}  // namespace goodgrad
