#include "goodgrad/cli.hpp"

#include "goodgrad/classification.hpp"
#include "goodgrad/errors.hpp"
#include "goodgrad/exceptional.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

namespace goodgrad::cli {

namespace {

using nlohmann::json;

std::string upper(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return s;
}

AlgebraSpec spec_for(const std::string& family, int n) {
    const std::string f = upper(family);
    if (f == "GL") return AlgebraSpec::gl(n);
    if (f == "A") return AlgebraSpec::sl(n);
    if (f == "C") return AlgebraSpec::sp(n);
    if (f == "B") {
        if (n % 2 == 0) throw std::invalid_argument("family B needs odd N, got " + std::to_string(n));
        return AlgebraSpec::so(n);
    }
    if (f == "D") {
        if (n % 2 != 0) throw std::invalid_argument("family D needs even N, got " + std::to_string(n));
        return AlgebraSpec::so(n);
    }
    throw std::invalid_argument("unknown family '" + family + "' (expected A, B, C, D or GL)");
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        out.push_back(Rational::parse(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list of numbers");
    return out;
}

json fractions(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_fraction_string());
    return a;
}

std::string plain(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

std::string plain(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

json characteristic_json(const Characteristic& c) {
    json j;
    j["diagram"] = c.diagram();
    j["labels"] = c.labels;
    j["node_order"] = c.fork_unordered() ? "bourbaki, fork nodes larger label first" : "bourbaki";
    return j;
}

struct Output {
    json results;
    std::string text;
};

void require(const CliRequest& r, std::initializer_list<std::pair<const char*, bool>> flags) {
    std::string missing;
    for (const auto& [name, present] : flags) {
        if (!present) missing += std::string(missing.empty() ? "" : ", ") + "--" + name;
    }
    if (!missing.empty()) throw std::invalid_argument(r.subcommand + " requires " + missing);
}

Partition partition_of(const CliRequest& r) { return Partition::sorted(parse_int_list(r.partition)); }

Output do_classify(const CliRequest& r) {
    require(r, {{"family", !r.family.empty()}, {"partition", !r.partition.empty()}});
    const Partition p = partition_of(r);
    const AlgebraSpec spec = spec_for(r.family, p.total());
    const GoodGradingFamily fam = classify(spec, p);
    Output o;
    o.results["algebra"] = spec.name();
    o.results["partition"] = p.parts();
    o.results["center_dim"] = center_dim(spec, p);
    o.results["count"] = fam.entries.size();
    json list = json::array();
    std::ostringstream text;
    text << spec.name() << ", partition " << p.to_string() << ": " << fam.entries.size() << " good grading"
         << (fam.entries.size() == 1 ? "" : "s") << "\n";
    if (fam.entries.empty()) text << "  the zero orbit has no good grading\n";
    for (const auto& e : fam.entries) {
        json g;
        g["diagonal"] = fractions(e.h.diagonal);
        g["params"] = fractions(e.params);
        g["characteristic"] = characteristic_json(e.characteristic);
        g["is_dynkin"] = e.is_dynkin;
        g["is_even"] = e.is_even;
        g["verification"] = "verified";
        list.push_back(std::move(g));
        text << "  " << (e.is_dynkin ? "[dynkin] " : "") << (e.is_even ? "[even] " : "") << "H = diag"
             << plain(e.h.diagonal) << "  characteristic " << e.characteristic.diagram() << " "
             << e.characteristic.to_string() << "  params " << plain(e.params) << "\n";
    }
    o.results["gradings"] = std::move(list);
    o.text = text.str();
    return o;
}

Output do_verify(const CliRequest& r) {
    require(r, {{"family", !r.family.empty()}, {"partition", !r.partition.empty()}, {"diagonal", !r.diagonal.empty()}});
    const Partition p = partition_of(r);
    const AlgebraSpec spec = spec_for(r.family, p.total());
    check_partition_for(spec, p);
    GradingElement h{spec, parse_rationals(r.diagonal)};
    h.validate();
    const AlgebraBasis g(spec);
    const Matrix e = nilpotent_of_partition(spec, p);
    if (e.is_zero()) throw std::invalid_argument("the zero nilpotent is never good");
    const GoodnessChecker checker(g, e);
    Output o;
    o.results["algebra"] = spec.name();
    o.results["partition"] = p.parts();
    o.results["diagonal"] = fractions(h.diagonal);
    std::string verdict;
    if (!checker.has_degree_two(h)) {
        o.results["good"] = false;
        verdict = "e(p) is not homogeneous of degree 2";
    } else {
        const GoodPair pair = checker.check(h);
        o.results["good"] = pair.verified;
        if (!graded_decomposition(g, h).is_integral()) {
            verdict = "the grading is not integral";
        } else {
            verdict = pair.verified ? "ad e is injective in negative degrees" : "ad e has kernel in negative degrees";
            json dims = json::object();
            for (const auto& [d, n] : pair.centralizer_degrees) dims[d.to_string()] = n;
            o.results["centralizer_degrees"] = std::move(dims);
            if (pair.verified) o.results["characteristic"] = characteristic_json(characteristic_of(g, h));
        }
    }
    o.results["reason"] = verdict;
    o.text = std::string(o.results["good"].get<bool>() ? "good" : "not good") + " (" + verdict + ")\n";
    return o;
}

std::vector<Pyramid> pyramids_for(const AlgebraSpec& spec, const Partition& p) {
    check_partition_for(spec, p);
    switch (spec.family) {
        case Family::GL:
        case Family::SL: return enumerate_pyramids(p);
        case Family::SP: return symplectic_pyramids(p);
        case Family::SO: return orthogonal_pyramids(p);
    }
    return {};
}

Output do_pyramids(const CliRequest& r) {
    require(r, {{"family", !r.family.empty()}, {"partition", !r.partition.empty()}});
    const Partition p = partition_of(r);
    const AlgebraSpec spec = spec_for(r.family, p.total());
    const auto pyramids = pyramids_for(spec, p);
    Output o;
    o.results["algebra"] = spec.name();
    o.results["partition"] = p.parts();
    o.results["count"] = pyramids.size();
    json list = json::array();
    std::ostringstream text;
    text << pyramids.size() << " pyramid" << (pyramids.size() == 1 ? "" : "s") << " for " << spec.name() << ", partition "
         << p.to_string() << "\n";
    for (const auto& pyr : pyramids) {
        GradingElement h = grading_of_pyramid(spec, pyr);
        json item;
        item["shifts"] = fractions(pyr.shifts);
        item["diagonal"] = fractions(h.diagonal);
        item["render"] = render_pyramid(pyr);
        list.push_back(std::move(item));
        text << "\nshifts " << plain(pyr.shifts) << "\n" << render_pyramid(pyr);
    }
    o.results["pyramids"] = std::move(list);
    o.text = text.str();
    return o;
}

Output do_series(const CliRequest& r) {
    if (r.order < 1 || r.order > 200) throw std::invalid_argument("--order must lie in 1..200");
    const PowerSeries f = pyramid_closed_form(r.order);
    const PowerSeries u = unimodal_generating_function(r.order);
    const bool andrews = andrews_identity_check(r.order);
    if (!andrews) throw VerificationError("the two pyramid generating functions disagree");
    Output o;
    json fc = json::array();
    json uc = json::array();
    for (const auto& c : f.coefficients()) fc.push_back(c.get_str());
    for (const auto& c : u.coefficients()) uc.push_back(c.get_str());
    o.results["order"] = r.order;
    o.results["pyramid_counts"] = std::move(fc);
    o.results["unimodal_counts"] = std::move(uc);
    o.results["andrews_identity"] = andrews;
    o.text = "pyramids: " + f.to_string() + "\nunimodal: " + u.to_string() + "\nidentity holds through q^" +
             std::to_string(r.order) + "\n";
    return o;
}

Output do_richardson(const CliRequest& r) {
    require(r, {{"family", !r.family.empty()}, {"composition", !r.composition.empty()}});
    const std::vector<int> comp = parse_int_list(r.composition);
    int sum = 0;
    for (int a : comp) sum += a;
    const std::string f = upper(r.family);
    const bool type_a = f == "A" || f == "GL";
    const AlgebraSpec spec = spec_for(r.family, type_a ? sum : 2 * sum + r.q);
    const ParabolicSpec par{spec, comp, type_a ? 0 : r.q};
    if (type_a && r.q != 0) throw std::invalid_argument("--q applies to families B, C, D only");
    const RichardsonVerdict v = richardson_is_good(par);
    Output o;
    o.results["parabolic"] = par.to_string();
    o.results["good"] = v.good;
    o.results["reason"] = v.reason;
    o.text = std::string(v.good ? "good" : "not good") + " (" + v.reason + ")\n";
    if (r.samples > 0) {
        const bool oracle = generic_richardson_oracle(par, r.samples);
        o.results["oracle"] = oracle;
        if (oracle != v.good) throw VerificationError("criterion and sampling oracle disagree for " + par.to_string());
        o.text += "sampling oracle agrees\n";
    }
    return o;
}

Output do_exceptional(const CliRequest& r) {
    require(r, {{"algebra", !r.algebra.empty()}, {"orbit", !r.orbit.empty()}});
    const ExceptionalType t = parse_exceptional_type(r.algebra);
    const ExceptionalEntry entry = exceptional_lookup(t, r.orbit, r.mirrors);
    Output o;
    o.results["algebra"] = exceptional_name(t);
    o.results["orbit"] = entry.orbit_label;
    o.results["printed"] = entry.printed;
    o.results["dynkin_only"] = entry.dynkin_only();
    o.results["node_order"] = "bourbaki";
    o.results["row"] = entry.row;
    o.results["non_dynkin"] = entry.non_dynkin_characteristics;
    std::ostringstream text;
    if (entry.dynkin_only()) {
        text << "Dynkin only\n";
    } else {
        text << exceptional_name(t) << " " << entry.orbit_label << ": Dynkin characteristic " << plain(entry.row.front())
             << "\n";
        for (const auto& c : entry.non_dynkin_characteristics) text << "  non-Dynkin " << plain(c) << "\n";
    }
    o.text = text.str();
    return o;
}

Output do_render(const CliRequest& r) {
    require(r, {{"family", !r.family.empty()}, {"partition", !r.partition.empty()}});
    const Partition p = partition_of(r);
    const AlgebraSpec spec = spec_for(r.family, p.total());
    const auto pyramids = pyramids_for(spec, p);
    std::vector<Rational> shifts;
    if (!r.shifts.empty()) {
        shifts = parse_rationals(r.shifts);
    } else {
        shifts = pyramids.front().shifts;
        std::fill(shifts.begin(), shifts.end(), Rational(0));
    }
    const auto it = std::find_if(pyramids.begin(), pyramids.end(), [&](const Pyramid& x) { return x.shifts == shifts; });
    if (it == pyramids.end()) throw std::invalid_argument("no pyramid of " + p.to_string() + " has shifts " + plain(shifts));
    Output o;
    o.results["shifts"] = fractions(it->shifts);
    o.results["render"] = render_pyramid(*it);
    o.text = render_pyramid(*it);
    return o;
}

json echo(const CliRequest& r) {
    json j;
    j["subcommand"] = r.subcommand;
    if (!r.family.empty()) j["family"] = r.family;
    if (!r.partition.empty()) j["partition"] = r.partition;
    if (!r.composition.empty()) j["composition"] = r.composition;
    if (r.subcommand == "richardson") j["q"] = r.q;
    if (!r.diagonal.empty()) j["diagonal"] = r.diagonal;
    if (!r.shifts.empty()) j["shifts"] = r.shifts;
    if (!r.algebra.empty()) j["algebra"] = r.algebra;
    if (!r.orbit.empty()) j["orbit"] = r.orbit;
    if (r.subcommand == "series") j["order"] = r.order;
    return j;
}

}  // namespace

CliResult run(const CliRequest& request) {
    static const std::map<std::string, Output (*)(const CliRequest&)> handlers{
        {"classify", do_classify},       {"verify", do_verify}, {"pyramids", do_pyramids}, {"series", do_series},
        {"richardson", do_richardson}, {"exceptional", do_exceptional}, {"render", do_render}};
    CliResult result;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (request.format != "text" && request.format != "json") {
            throw std::invalid_argument("--format must be text or json");
        }
        const auto handler = handlers.find(request.subcommand);
        if (handler == handlers.end()) throw std::invalid_argument("unknown subcommand '" + request.subcommand + "'");
        Output o = handler->second(request);
        if (request.format == "text") {
            result.out = o.text;
        } else {
            json report;
            report["schema_version"] = kSchemaVersion;
            report["input"] = echo(request);
            report["results"] = std::move(o.results);
            const auto elapsed = std::chrono::steady_clock::now() - start;
            report["timing"]["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
            result.out = report.dump(2) + "\n";
        }
    } catch (const VerificationError& e) {
        result.exit_code = kVerificationFailure;
        result.err = std::string("internal verification failure: ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        result.exit_code = kInvalidInput;
        result.err = std::string("invalid input: ") + e.what() + "\n";
    } catch (const std::out_of_range& e) {
        result.exit_code = kInvalidInput;
        result.err = std::string("invalid input: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = kVerificationFailure;
        result.err = std::string("internal error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace goodgrad::cli
