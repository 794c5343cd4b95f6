#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tpminors/determinant.hpp"
#include "tpminors/errors.hpp"
#include "tpminors/matrix.hpp"
#include "tpminors/parallel.hpp"

namespace tpm {

enum class MinorScope {
    columns_only,  // k = rows; every k-subset of columns
    all_pairs,     // every (row k-subset, column k-subset)
};

using MinorWitness = std::pair<IndexTuple, IndexTuple>;

/// Multiset of values with multiplicities, optionally with the (I, J) index
/// pairs that produced each value.
struct ValueCensus {
    std::map<Rational, std::uint64_t> entries;
    std::optional<std::map<Rational, std::vector<MinorWitness>>> witnesses;

    std::uint64_t multiplicity(const Rational& v) const {
        auto it = entries.find(v);
        return it == entries.end() ? 0 : it->second;
    }
    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (const auto& [v, m] : entries) s += m;
        return s;
    }
    std::size_t distinct() const { return entries.size(); }

    void merge(const ValueCensus& o) {
        for (const auto& [v, m] : o.entries) entries[v] += m;
        if (o.witnesses) {
            if (!witnesses) witnesses.emplace();
            for (const auto& [v, w] : o.witnesses.value()) {
                auto& dst = (*witnesses)[v];
                dst.insert(dst.end(), w.begin(), w.end());
            }
        }
    }

    friend bool operator==(const ValueCensus&, const ValueCensus&) = default;
};

struct CensusOptions {
    std::size_t threads = 1;
    bool keep_witnesses = false;
};

/// Exact census of all k x k minor values over the chosen scope. Work is
/// range-partitioned over (row tuple, column tuple) pairs; partial censuses
/// are merged by addition, so the result does not depend on `threads`.
inline ValueCensus minor_census(const RatMatrix& a, std::size_t k, MinorScope scope, CensusOptions opt = {}) {
    if (k == 0) throw DomainError("order-0 minors are not defined");
    if (k > std::min(a.rows(), a.cols()))
        throw DimensionError("order " + std::to_string(k) + " exceeds matrix " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
    if (scope == MinorScope::columns_only && k != a.rows())
        throw DimensionError("columns-only scope needs k = rows (" + std::to_string(a.rows()) + ")");

    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    // For columns-only scope k = rows, so this yields the single full row set.
    for_each_combination(a.rows(), k, [&](const auto& c) { row_sets.push_back(c); });
    for_each_combination(a.cols(), k, [&](const auto& c) { col_sets.push_back(c); });
    const std::size_t ncols = col_sets.size();
    const std::size_t total = row_sets.size() * ncols;

    const std::size_t threads = std::max<std::size_t>(1, opt.threads);
    std::vector<ValueCensus> parts(std::min(threads, std::max<std::size_t>(total, 1)));
    parallel_ranges(total, parts.size(), [&](std::size_t b, std::size_t e, std::size_t slot) {
        std::unordered_map<Rational, std::uint64_t> counts;
        std::unordered_map<Rational, std::vector<MinorWitness>> wit;
        std::vector<std::size_t> r(k), c(k);
        for (std::size_t idx = b; idx < e; ++idx) {
            const auto& R = row_sets[idx / ncols];
            const auto& C = col_sets[idx % ncols];
            for (std::size_t t = 0; t < k; ++t) {
                r[t] = R[t] - 1;
                c[t] = C[t] - 1;
            }
            Rational v = detail::det_unchecked(a, r, c);
            if (opt.keep_witnesses) wit[v].emplace_back(IndexTuple(R), IndexTuple(C));
            ++counts[std::move(v)];
        }
        auto& part = parts[slot];
        for (auto& [v, m] : counts) part.entries.emplace(v, m);
        if (opt.keep_witnesses) {
            part.witnesses.emplace();
            for (auto& [v, w] : wit) (*part.witnesses).emplace(v, std::move(w));
        }
    });

    ValueCensus out;
    if (opt.keep_witnesses) out.witnesses.emplace();
    for (const auto& p : parts) out.merge(p);
    if (out.witnesses)
        for (auto& [v, w] : *out.witnesses) std::sort(w.begin(), w.end());
    return out;
}

inline std::uint64_t count_minors_equal(const RatMatrix& a, std::size_t k, const Rational& t, MinorScope scope,
                                        CensusOptions opt = {}) {
    return minor_census(a, k, scope, opt).multiplicity(t);
}

/// Most repeated minor value and its multiplicity; ties go to the smaller
/// value.
inline std::pair<Rational, std::uint64_t> max_repeated_minor(const RatMatrix& a, std::size_t k, MinorScope scope,
                                                             CensusOptions opt = {}) {
    auto census = minor_census(a, k, scope, opt);
    auto best = census.entries.begin();
    for (auto it = census.entries.begin(); it != census.entries.end(); ++it)
        if (it->second > best->second) best = it;
    return *best;
}

inline std::size_t distinct_minor_count(const RatMatrix& a, std::size_t k, MinorScope scope, CensusOptions opt = {}) {
    return minor_census(a, k, scope, opt).distinct();
}

// Census output: CSV rows `value,multiplicity` (value as p/q or integer) or a
// JSON array of {"value", "multiplicity"} objects.

inline void write_census_csv(std::ostream& out, const ValueCensus& c) {
    out << "value,multiplicity\n";
    for (const auto& [v, m] : c.entries) out << v << ',' << m << '\n';
}

inline nlohmann::json census_to_json(const ValueCensus& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [v, m] : c.entries) arr.push_back({{"value", v.to_string()}, {"multiplicity", m}});
    return arr;
}

}  // namespace tpm
