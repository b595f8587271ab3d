#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/integral.hpp"

namespace hyperlab {

enum class GridTemplate { kIntegral, kF32 };

std::string to_string(GridTemplate t);

// Grid of parameter tuples to evaluate exactly. The integral template
// enumerates (h..l) within the bounds; the 3F2 template enumerates
// (a, b, c) and forms the series [a, b, c; a+1, b+c], keeping tuples that
// admit exact evaluation.
struct SearchSpec {
    GridTemplate tmpl = GridTemplate::kIntegral;
    std::array<long, 5> max_bounds = {3, 3, 3, 3, 3};  // inclusive; 3F2 uses first three
    std::optional<long> max_lower_sum;  // 3F2 template: cap on e = b + c
    std::size_t pair_budget = 1'000'000;
    unsigned threads = 1;
};

enum class RelationClass { kPhiExplained, kTExplained, kExotic, kRationalPair };

std::string to_string(RelationClass c);

// A discovered pair with exact rational ratio: value(p) = ratio * value(q).
struct RelationRecord {
    GridTemplate tmpl = GridTemplate::kIntegral;
    std::array<long, 5> p{}, q{};
    Rational ratio;
    RelationClass classification = RelationClass::kExotic;

    bool operator==(const RelationRecord&) const = default;
};

struct SearchResult {
    std::vector<RelationRecord> records;
    bool budget_exhausted = false;
    std::size_t tuples_evaluated = 0;
};

// Bucketing key: r/z for irrational values; nullopt marks the rational
// bucket. Two values with nonzero z are rational multiples of each other
// iff their keys coincide.
std::optional<Rational> ratio_key(const Zeta2Number& v);

// Evaluates every admissible tuple exactly, buckets by ratio_key, emits
// all pairs within irrational buckets (exact ratio z_p/z_q) and then pairs
// of rational values as rational_pair records, deterministically ordered,
// up to the pair budget. Pairs are oriented so the ratio is at most 1,
// with lexicographic tuple order breaking ties.
SearchResult grid_search(const SearchSpec& spec);

// Fills in the classification: t_explained when the tuples are related by
// the order-10 group, phi_explained when the pair-sum multisets match,
// exotic otherwise. 3F2 tuples are mapped to integral coordinates first.
RelationRecord classify(RelationRecord record);

// Records file: UTF-8, header line "#zeta2-hyperlab v1", then one record
// per line: REL <TAB> template <TAB> p <TAB> q <TAB> ratio <TAB> class.
void write_records(const std::vector<RelationRecord>& records, std::ostream& out);
void write_records_file(const std::vector<RelationRecord>& records, const std::string& path);
std::vector<RelationRecord> read_records(std::istream& in);
std::vector<RelationRecord> read_records_file(const std::string& path);

}  // namespace hyperlab
