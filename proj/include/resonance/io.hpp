#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "resonance/resonance_search.hpp"

namespace resonance {

/// One line per record; field order is fixed so identical runs produce
/// byte-identical files.
std::string to_jsonl(const ResonanceQuad& r);
std::string to_jsonl(const ResonanceTriad& r);
std::string to_jsonl(const Case2Pairing& r);

using ParsedSolution = std::variant<ResonanceQuad, ResonanceTriad, Case2Pairing>;

/// Parses one serialized record; throws std::runtime_error on malformed input.
ParsedSolution parse_solution_line(const std::string& line);

/// Independent re-check of a parsed record: class-index admissibility, exact
/// norm/weight agreement, the weight equation, the linear momentum
/// condition(s), pairwise distinctness, canonical form, and (when a domain is
/// given) the coordinate bounds.
std::optional<std::string> recheck(const ParsedSolution& sol,
                                   std::optional<i64> domain);

struct VerifyReport {
    i64 records = 0;
    i64 failures = 0;
    std::vector<std::string> messages;  // first few failures
};

VerifyReport verify_solutions_stream(std::istream& in, std::optional<i64> domain);

/// Class-list cache keyed by (kind, D): a one-line header, then ascending q.
void write_classes_cache(std::ostream& os, WaveKind kind, i64 domain,
                         const std::vector<i64>& classes);
std::optional<std::vector<i64>> read_classes_cache(std::istream& is,
                                                   WaveKind kind, i64 domain);

}  // namespace resonance
