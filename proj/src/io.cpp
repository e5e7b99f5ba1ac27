#include "resonance/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "resonance/class_sieve.hpp"
#include "resonance/oracle.hpp"

namespace resonance {

namespace {

using nlohmann::json;

long long ll(i64 v) { return static_cast<long long>(v); }

}  // namespace

std::string to_jsonl(const ResonanceQuad& r) {
    char buf[320];
    std::snprintf(buf, sizeof(buf),
                  "{\"kind\":\"gravity4\",\"q\":%lld,\"weights\":[%lld,%lld,"
                  "%lld,%lld],\"case\":%d,\"asymmetric\":%s,\"vectors\":[[%lld,"
                  "%lld],[%lld,%lld],[%lld,%lld],[%lld,%lld]]}",
                  ll(r.q), ll(r.weights.g1l), ll(r.weights.g2l),
                  ll(r.weights.g1r), ll(r.weights.g2r),
                  degeneracy_case(r.weights.degeneracy),
                  classify_asymmetric(r) ? "true" : "false", ll(r.k[0].m),
                  ll(r.k[0].n), ll(r.k[1].m), ll(r.k[1].n), ll(r.k[2].m),
                  ll(r.k[2].n), ll(r.k[3].m), ll(r.k[3].n));
    return buf;
}

std::string to_jsonl(const ResonanceTriad& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "{\"kind\":\"planetary3\",\"q\":%lld,\"weights\":[%lld,%lld,"
                  "%lld],\"asymmetric\":false,\"vectors\":[[%lld,%lld],[%lld,"
                  "%lld],[%lld,%lld]]}",
                  ll(r.q), ll(r.weights.g1), ll(r.weights.g2), ll(r.weights.g3),
                  ll(r.k[0].m), ll(r.k[0].n), ll(r.k[1].m), ll(r.k[1].n),
                  ll(r.k[2].m), ll(r.k[2].n));
    return buf;
}

std::string to_jsonl(const Case2Pairing& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "{\"kind\":\"gravity4\",\"case2\":true,\"q\":[%lld,%lld],"
                  "\"weights\":[%lld,%lld],\"vectors\":[[%lld,%lld],[%lld,%lld]]}",
                  ll(r.qa), ll(r.qb), ll(r.ga), ll(r.gb), ll(r.a.m), ll(r.a.n),
                  ll(r.b.m), ll(r.b.n));
    return buf;
}

ParsedSolution parse_solution_line(const std::string& line) {
    json j = json::parse(line);
    const std::string kind = j.at("kind").get<std::string>();
    auto vec_at = [&](size_t i) {
        return WaveVector{j.at("vectors").at(i).at(0).get<i64>(),
                          j.at("vectors").at(i).at(1).get<i64>()};
    };
    if (j.contains("case2") && j.at("case2").get<bool>()) {
        Case2Pairing p;
        p.qa = j.at("q").at(0).get<i64>();
        p.qb = j.at("q").at(1).get<i64>();
        p.ga = j.at("weights").at(0).get<i64>();
        p.gb = j.at("weights").at(1).get<i64>();
        p.a = vec_at(0);
        p.b = vec_at(1);
        return p;
    }
    if (kind == "gravity4") {
        ResonanceQuad r;
        r.q = j.at("q").get<i64>();
        i64 g1l = j.at("weights").at(0).get<i64>();
        i64 g2l = j.at("weights").at(1).get<i64>();
        i64 g1r = j.at("weights").at(2).get<i64>();
        i64 g2r = j.at("weights").at(3).get<i64>();
        r.weights = {g1l, g2l, g1r, g2r, g1l + g2l,
                     classify_degeneracy(g1l, g2l, g1r, g2r)};
        for (size_t i = 0; i < 4; ++i) r.k[i] = vec_at(i);
        return r;
    }
    if (kind == "planetary3") {
        ResonanceTriad r;
        r.q = j.at("q").get<i64>();
        r.weights = {j.at("weights").at(0).get<i64>(),
                     j.at("weights").at(1).get<i64>(),
                     j.at("weights").at(2).get<i64>()};
        for (size_t i = 0; i < 3; ++i) r.k[i] = vec_at(i);
        return r;
    }
    throw std::runtime_error("unknown record kind: " + kind);
}

namespace {

i64 pow_i(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::optional<std::string> recheck_quad(const ResonanceQuad& r,
                                        std::optional<i64> domain) {
    if (!is_class_index(r.q, WaveKind::gravity4))
        return "q is not a gravity class index";
    const auto& w = r.weights;
    if (!(w.g1l >= 1 && w.g1l <= w.g1r && w.g1r <= w.g2r && w.g2r <= w.g2l))
        return "weight ordering violated";
    if (w.g1l + w.g2l != w.g1r + w.g2r) return "weight sums differ";
    const i64 g[4] = {w.g1l, w.g2l, w.g1r, w.g2r};
    for (int i = 0; i < 4; ++i) {
        if (r.k[i].m == 0 && r.k[i].n == 0) return "zero wave vector";
        if (r.k[i].norm_sq() != pow_i(g[i], 4) * r.q)
            return "norm does not match weight";
        if (domain && (std::abs(r.k[i].m) > *domain || std::abs(r.k[i].n) > *domain))
            return "coordinate outside domain";
        for (int j = i + 1; j < 4; ++j)
            if (r.k[i] == r.k[j]) return "vectors not pairwise distinct";
    }
    if (r.k[0].m + r.k[1].m != r.k[2].m + r.k[3].m ||
        r.k[0].n + r.k[1].n != r.k[2].n + r.k[3].n)
        return "momentum condition violated";
    ResonanceQuad canon = make_canonical_quad(r.q, {g[0], r.k[0]}, {g[1], r.k[1]},
                                              {g[2], r.k[2]}, {g[3], r.k[3]});
    if (!(canon == r)) return "record not in canonical form";
    return std::nullopt;
}

std::optional<std::string> recheck_triad(const ResonanceTriad& r,
                                         std::optional<i64> domain) {
    if (!is_class_index(r.q, WaveKind::planetary3))
        return "q is not a planetary class index";
    const auto& w = r.weights;
    if (!(w.g1 >= 1 && w.g1 <= w.g2 && w.g3 >= 1)) return "weight ordering violated";
    if (w.g3 * (w.g1 + w.g2) != w.g1 * w.g2) return "harmonic equation violated";
    const i64 g[3] = {w.g1, w.g2, w.g3};
    for (int i = 0; i < 3; ++i) {
        if (r.k[i].m == 0 && r.k[i].n == 0) return "zero wave vector";
        if (r.k[i].norm_sq() != g[i] * g[i] * r.q)
            return "norm does not match weight";
        if (domain && (std::abs(r.k[i].m) > *domain || std::abs(r.k[i].n) > *domain))
            return "coordinate outside domain";
        for (int j = i + 1; j < 3; ++j)
            if (r.k[i] == r.k[j]) return "vectors not pairwise distinct";
    }
    if (r.k[0].m + r.k[1].m != r.k[2].m) return "momentum condition violated";
    ResonanceTriad canon =
        make_canonical_triad(r.q, {g[0], r.k[0]}, {g[1], r.k[1]}, {g[2], r.k[2]});
    if (!(canon == r)) return "record not in canonical form";
    return std::nullopt;
}

std::optional<std::string> recheck_case2(const Case2Pairing& r,
                                         std::optional<i64> domain) {
    if (r.qa == r.qb) return "case-2 pairing within one class";
    for (const auto& [v, q, g] :
         {std::tuple{r.a, r.qa, r.ga}, std::tuple{r.b, r.qb, r.gb}}) {
        if (v.m == 0 && v.n == 0) return "zero wave vector";
        if (v.norm_sq() != pow_i(g, 4) * q) return "norm does not match weight";
        auto key = radical_key(v.norm_sq(), 4);
        if (key.q != q || key.gamma != g) return "class key mismatch";
        if (domain && (std::abs(v.m) > *domain || std::abs(v.n) > *domain))
            return "coordinate outside domain";
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> recheck(const ParsedSolution& sol,
                                   std::optional<i64> domain) {
    return std::visit(
        [&](const auto& r) -> std::optional<std::string> {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ResonanceQuad>)
                return recheck_quad(r, domain);
            else if constexpr (std::is_same_v<T, ResonanceTriad>)
                return recheck_triad(r, domain);
            else
                return recheck_case2(r, domain);
        },
        sol);
}

VerifyReport verify_solutions_stream(std::istream& in,
                                     std::optional<i64> domain) {
    VerifyReport rep;
    std::string line;
    i64 lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ++rep.records;
        std::optional<std::string> err;
        try {
            ParsedSolution sol = parse_solution_line(line);
            err = recheck(sol, domain);
            if (!err) {
                // Round-trip must reproduce the line byte for byte.
                std::string again = std::visit(
                    [](const auto& r) { return to_jsonl(r); }, sol);
                if (again != line) err = "record does not round-trip";
            }
        } catch (const std::exception& e) {
            err = e.what();
        }
        if (err) {
            ++rep.failures;
            if (rep.messages.size() < 10)
                rep.messages.push_back("line " + std::to_string(lineno) + ": " +
                                       *err);
        }
    }
    return rep;
}

void write_classes_cache(std::ostream& os, WaveKind kind, i64 domain,
                         const std::vector<i64>& classes) {
    os << "resonance-classes,v1," << wave_kind_name(kind) << ',' << domain << ','
       << classes.size() << "\n";
    for (i64 q : classes) os << q << "\n";
}

std::optional<std::vector<i64>> read_classes_cache(std::istream& is,
                                                   WaveKind kind, i64 domain) {
    std::string header;
    if (!std::getline(is, header)) return std::nullopt;
    std::ostringstream want;
    want << "resonance-classes,v1," << wave_kind_name(kind) << ',' << domain
         << ',';
    if (header.rfind(want.str(), 0) != 0) return std::nullopt;
    i64 count = 0;
    try {
        count = std::stoll(header.substr(want.str().size()));
    } catch (...) {
        return std::nullopt;
    }
    std::vector<i64> classes;
    classes.reserve(static_cast<size_t>(count));
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        classes.push_back(std::stoll(line));
    }
    if (static_cast<i64>(classes.size()) != count) return std::nullopt;
    return classes;
}

}  // namespace resonance
