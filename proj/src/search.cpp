#include "hyperlab/search.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "hyperlab/thomae.hpp"

namespace hyperlab {

namespace {

struct Evaluated {
    std::array<long, 5> tuple;
    Zeta2Number value;
};

std::vector<std::array<long, 5>> enumerate_tuples(const SearchSpec& spec) {
    std::vector<std::array<long, 5>> tuples;
    if (spec.tmpl == GridTemplate::kIntegral) {
        const auto& m = spec.max_bounds;
        for (long h = 0; h <= m[0]; ++h)
            for (long i = 0; i <= m[1]; ++i)
                for (long j = 0; j <= m[2]; ++j)
                    for (long k = 0; k <= m[3]; ++k)
                        for (long l = 0; l <= m[4]; ++l) tuples.push_back({h, i, j, k, l});
        return tuples;
    }
    for (long a = 1; a <= spec.max_bounds[0]; ++a)
        for (long b = 1; b <= spec.max_bounds[1]; ++b)
            for (long c = 1; c <= spec.max_bounds[2]; ++c) {
                long d = a + 1, e = b + c;
                if (spec.max_lower_sum && e > *spec.max_lower_sum) continue;
                tuples.push_back({a, b, c, d, e});
            }
    return tuples;
}

F32Params f32_of_tuple(const std::array<long, 5>& t) {
    return {{Rational(t[0]), Rational(t[1]), Rational(t[2])}, {Rational(t[3]), Rational(t[4])}};
}

std::optional<Zeta2Number> evaluate_tuple(GridTemplate tmpl, const std::array<long, 5>& t) {
    if (tmpl == GridTemplate::kIntegral)
        return eval_integral_exact(IntegralParams::from_array(t));
    auto mapped = try_map_to_integral(f32_of_tuple(t));
    if (!mapped) return std::nullopt;
    return eval_3f2_exact(f32_of_tuple(t));
}

std::optional<IntegralParams> integral_form(GridTemplate tmpl, const std::array<long, 5>& t) {
    if (tmpl == GridTemplate::kIntegral) return IntegralParams::from_array(t);
    return try_map_to_integral(f32_of_tuple(t));
}

std::string tuple_string(const std::array<long, 5>& t) {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < 5; ++i) out << (i ? "," : "") << t[i];
    out << "]";
    return out.str();
}

std::array<long, 5> parse_tuple(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw FormatError("malformed tuple: '" + text + "'");
    std::array<long, 5> t{};
    std::istringstream in(text.substr(1, text.size() - 2));
    std::string field;
    for (int i = 0; i < 5; ++i) {
        if (!std::getline(in, field, ','))
            throw FormatError("tuple needs five entries: '" + text + "'");
        try {
            std::size_t pos = 0;
            t[i] = std::stol(field, &pos);
            if (pos != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw FormatError("malformed tuple entry: '" + field + "'");
        }
    }
    if (in.rdbuf()->in_avail() > 0) throw FormatError("tuple has extra entries: '" + text + "'");
    return t;
}

RelationClass parse_class(const std::string& text) {
    if (text == "phi_explained") return RelationClass::kPhiExplained;
    if (text == "t_explained") return RelationClass::kTExplained;
    if (text == "exotic") return RelationClass::kExotic;
    if (text == "rational_pair") return RelationClass::kRationalPair;
    throw FormatError("unknown classification: '" + text + "'");
}

GridTemplate parse_template(const std::string& text) {
    if (text == "integral") return GridTemplate::kIntegral;
    if (text == "3f2") return GridTemplate::kF32;
    throw FormatError("unknown template: '" + text + "'");
}

constexpr const char* kHeader = "#zeta2-hyperlab v1";

}  // namespace

std::string to_string(GridTemplate t) {
    return t == GridTemplate::kIntegral ? "integral" : "3f2";
}

std::string to_string(RelationClass c) {
    switch (c) {
        case RelationClass::kPhiExplained:
            return "phi_explained";
        case RelationClass::kTExplained:
            return "t_explained";
        case RelationClass::kExotic:
            return "exotic";
        case RelationClass::kRationalPair:
            return "rational_pair";
    }
    return "?";
}

std::optional<Rational> ratio_key(const Zeta2Number& v) {
    if (v.z == 0) return std::nullopt;
    return v.r / v.z;
}

RelationRecord classify(RelationRecord record) {
    auto p = integral_form(record.tmpl, record.p);
    auto q = integral_form(record.tmpl, record.q);
    if (!p || !q) throw DomainError("tuple not representable as integral parameters");
    if (t_related(*p, *q))
        record.classification = RelationClass::kTExplained;
    else if (phi_related(*p, *q))
        record.classification = RelationClass::kPhiExplained;
    else
        record.classification = RelationClass::kExotic;
    return record;
}

SearchResult grid_search(const SearchSpec& spec) {
    const auto tuples = enumerate_tuples(spec);

    // Embarrassingly parallel evaluation over deterministic slices; the
    // merge below is single-threaded and order-preserving.
    std::vector<std::optional<Zeta2Number>> values(tuples.size());
    const unsigned thread_count =
        std::max(1u, std::min<unsigned>(spec.threads, std::thread::hardware_concurrency()));
    if (thread_count <= 1 || tuples.size() < 64) {
        for (std::size_t i = 0; i < tuples.size(); ++i)
            values[i] = evaluate_tuple(spec.tmpl, tuples[i]);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < thread_count; ++w) {
            workers.emplace_back([&, w]() {
                for (std::size_t i = w; i < tuples.size(); i += thread_count)
                    values[i] = evaluate_tuple(spec.tmpl, tuples[i]);
            });
        }
        for (auto& worker : workers) worker.join();
    }

    // Bucket by the rational invariant r/z; tuples inside a bucket are
    // pairwise rational multiples.
    std::map<Rational, std::vector<std::size_t>> irrational_buckets;
    std::vector<std::size_t> rational_bucket;
    std::size_t evaluated = 0;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (!values[i]) continue;
        ++evaluated;
        auto key = ratio_key(*values[i]);
        if (key)
            irrational_buckets[*key].push_back(i);
        else
            rational_bucket.push_back(i);
    }

    SearchResult result;
    result.tuples_evaluated = evaluated;
    auto emit = [&](std::size_t i, std::size_t j, bool rational_pair) {
        if (result.records.size() >= spec.pair_budget) {
            result.budget_exhausted = true;
            return false;
        }
        RelationRecord record;
        record.tmpl = spec.tmpl;
        record.p = tuples[i];
        record.q = tuples[j];
        const Zeta2Number &vp = *values[i], &vq = *values[j];
        record.ratio = rational_pair ? vp.r / vq.r : vp.z / vq.z;
        // orient each pair so the ratio is at most 1 (lex order on ties)
        if (record.ratio > 1) {
            std::swap(record.p, record.q);
            record.ratio = 1 / record.ratio;
        }
        if (rational_pair)
            record.classification = RelationClass::kRationalPair;
        else
            record = classify(std::move(record));
        result.records.push_back(std::move(record));
        return true;
    };

    for (const auto& [key, bucket] : irrational_buckets) {
        for (std::size_t x = 0; x < bucket.size(); ++x)
            for (std::size_t y = x + 1; y < bucket.size(); ++y)
                if (!emit(bucket[x], bucket[y], false)) return result;
    }
    for (std::size_t x = 0; x < rational_bucket.size(); ++x)
        for (std::size_t y = x + 1; y < rational_bucket.size(); ++y)
            if (!emit(rational_bucket[x], rational_bucket[y], true)) return result;
    return result;
}

void write_records(const std::vector<RelationRecord>& records, std::ostream& out) {
    out << kHeader << "\n";
    for (const auto& r : records) {
        out << "REL\t" << to_string(r.tmpl) << "\t" << tuple_string(r.p) << "\t"
            << tuple_string(r.q) << "\t" << to_fraction_string(r.ratio) << "\t"
            << to_string(r.classification) << "\n";
    }
}

void write_records_file(const std::vector<RelationRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    write_records(records, out);
}

std::vector<RelationRecord> read_records(std::istream& in) {
    std::vector<RelationRecord> records;
    std::string line;
    std::size_t line_number = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line_number == 1 && line == kHeader) saw_header = true;
            continue;
        }
        if (!saw_header)
            throw FormatError("line 1: missing header '" + std::string(kHeader) + "'");
        std::vector<std::string> fields;
        std::istringstream split(line);
        std::string field;
        while (std::getline(split, field, '\t')) fields.push_back(field);
        std::string where = "line " + std::to_string(line_number);
        if (fields.size() != 6 || fields[0] != "REL")
            throw FormatError(where + ": expected six tab-separated fields starting with REL");
        try {
            RelationRecord record;
            record.tmpl = parse_template(fields[1]);
            record.p = parse_tuple(fields[2]);
            record.q = parse_tuple(fields[3]);
            record.ratio = parse_rational(fields[4]);
            record.classification = parse_class(fields[5]);
            records.push_back(std::move(record));
        } catch (const FormatError& err) {
            throw FormatError(where + ": " + err.what());
        }
    }
    return records;
}

std::vector<RelationRecord> read_records_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open for reading: " + path);
    return read_records(in);
}

}  // namespace hyperlab
