#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "engine.hpp"
#include "group.hpp"

namespace sumset {

/// Streams the canonical k-sets {0 = a_1 < a_2 < ... < a_k <= M} with
/// gcd(a_2, ..., a_k) = 1 that are lexicographically no larger than their
/// reflection. Order is lexicographic over (a_2, ..., a_k). The optional
/// [a2_first, a2_last] range restricts a_2 and is how scans are partitioned.
class CanonicalSetStream {
public:
    CanonicalSetStream(int k, Int bound) : CanonicalSetStream(k, bound, 1, bound) {}

    CanonicalSetStream(int k, Int bound, Int a2_first, Int a2_last) : k_(k), bound_(bound), a2_last_(a2_last) {
        if (k < 2) throw std::invalid_argument("canonical enumeration requires k >= 2");
        if (bound < k - 1) throw std::invalid_argument("canonical enumeration requires M >= k - 1");
        current_.resize(static_cast<std::size_t>(k));
        current_[0] = 0;
        current_[1] = std::max<Int>(a2_first, 1);
        for (std::size_t i = 2; i < current_.size(); ++i) current_[i] = current_[i - 1] + 1;
        exhausted_ = current_[1] > a2_last_ || current_.back() > bound_;
    }

    /// Next canonical set, or nullopt when the stream is exhausted.
    std::optional<IntSet> next() {
        while (!exhausted_) {
            const bool keep = is_canonical_candidate();
            std::optional<IntSet> out;
            if (keep) out = IntSet::from_sorted(current_);
            advance();
            if (keep) return out;
        }
        return std::nullopt;
    }

private:
    bool is_canonical_candidate() const {
        Int g = 0;
        for (std::size_t i = 1; i < current_.size(); ++i) g = gcd(g, current_[i]);
        if (g != 1) return false;
        const Int top = current_.back();
        const std::size_t n = current_.size();
        for (std::size_t j = 0; j < n; ++j) {
            const Int mirrored = top - current_[n - 1 - j];
            if (current_[j] != mirrored) return current_[j] < mirrored;
        }
        return true;
    }

    void advance() {
        const std::size_t n = current_.size();
        for (std::size_t i = n - 1; i >= 1; --i) {
            const Int room = bound_ - static_cast<Int>(n - 1 - i);
            const Int limit = i == 1 ? std::min(room, a2_last_) : room;
            if (current_[i] + 1 <= limit) {
                ++current_[i];
                for (std::size_t j = i + 1; j < n; ++j) current_[j] = current_[j - 1] + 1;
                return;
            }
        }
        exhausted_ = true;
    }

    int k_;
    Int bound_;
    Int a2_last_;
    std::vector<Int> current_;
    bool exhausted_ = false;
};

/// All canonical sets, materialized in stream order.
inline std::vector<IntSet> enumerate_canonical(int k, Int bound) {
    std::vector<IntSet> out;
    CanonicalSetStream stream(k, bound);
    while (auto s = stream.next()) out.push_back(std::move(*s));
    return out;
}

/// Sizes of hA over canonical k-sets of diameter at most M. Only a lower
/// bound on R(h, k): a size missing from the scan is not excluded beyond M.
struct SpectrumReport {
    int h = 0;
    int k = 0;
    Int bound = 0;
    /// achieved size -> lexicographically smallest canonical witness
    std::map<std::size_t, IntSet> witnesses;
    std::uint64_t sets_scanned = 0;
    std::chrono::duration<double> duration{};

    // Bookkeeping for the progression dichotomy.
    std::uint64_t ap_sets = 0;
    std::set<std::size_t> ap_sizes;
    std::optional<std::size_t> min_non_ap_size;
    std::optional<IntSet> min_non_ap_witness;

    std::vector<std::size_t> achieved() const {
        std::vector<std::size_t> out;
        for (const auto& [size, _] : witnesses) out.push_back(size);
        return out;
    }
    bool contains(std::size_t size) const { return witnesses.contains(size); }
};

namespace detail {

inline void record(SpectrumReport& report, const IntSet& set, std::size_t size) {
    ++report.sets_scanned;
    auto it = report.witnesses.find(size);
    if (it == report.witnesses.end()) report.witnesses.emplace(size, set);
    else if (set < it->second) it->second = set;
    if (is_arithmetic_progression(set)) {
        ++report.ap_sets;
        report.ap_sizes.insert(size);
    } else if (!report.min_non_ap_size || size < *report.min_non_ap_size ||
               (size == *report.min_non_ap_size && set < *report.min_non_ap_witness)) {
        report.min_non_ap_size = size;
        report.min_non_ap_witness = set;
    }
}

inline void check_spectrum_args(int h, int k, Int bound) {
    if (h < 2) throw std::invalid_argument("spectrum requires h >= 2");
    if (k < 2) throw std::invalid_argument("spectrum requires k >= 2");
    if (bound < k - 1) throw std::invalid_argument("spectrum requires M >= k - 1");
}

} // namespace detail

/// Folds a partial report into `into`. Associative and commutative: witness
/// ties resolve to the lexicographically smallest set.
inline void merge(SpectrumReport& into, const SpectrumReport& part) {
    if (into.h != part.h || into.k != part.k)
        throw std::invalid_argument("cannot merge spectrum reports for different (h, k)");
    into.bound = std::max(into.bound, part.bound);
    for (const auto& [size, set] : part.witnesses) {
        auto it = into.witnesses.find(size);
        if (it == into.witnesses.end()) into.witnesses.emplace(size, set);
        else if (set < it->second) it->second = set;
    }
    into.sets_scanned += part.sets_scanned;
    into.ap_sets += part.ap_sets;
    into.ap_sizes.insert(part.ap_sizes.begin(), part.ap_sizes.end());
    if (part.min_non_ap_size &&
        (!into.min_non_ap_size || *part.min_non_ap_size < *into.min_non_ap_size ||
         (*part.min_non_ap_size == *into.min_non_ap_size && *part.min_non_ap_witness < *into.min_non_ap_witness))) {
        into.min_non_ap_size = part.min_non_ap_size;
        into.min_non_ap_witness = part.min_non_ap_witness;
    }
}

/// Scans canonical sets whose second element lies in [a2_first, a2_last].
inline SpectrumReport scan_partition(int h, int k, Int bound, Int a2_first, Int a2_last) {
    detail::check_spectrum_args(h, k, bound);
    SpectrumReport report;
    report.h = h;
    report.k = k;
    report.bound = bound;
    CanonicalSetStream stream(k, bound, a2_first, a2_last);
    while (auto set = stream.next()) detail::record(report, *set, sumset_size(*set, h));
    return report;
}

/// Exhaustive scan over canonical k-sets with max element <= bound. With
/// jobs > 1 workers pull a_2 values from a shared counter; the merged report
/// does not depend on the job count.
inline SpectrumReport compute_spectrum(int h, int k, Int bound, unsigned jobs = 1) {
    detail::check_spectrum_args(h, k, bound);
    const auto start = std::chrono::steady_clock::now();
    SpectrumReport total;
    total.h = h;
    total.k = k;
    total.bound = bound;
    // a_2 can be at most bound - (k - 2)
    const Int a2_max = bound - (k - 2);
    if (jobs <= 1) {
        merge(total, scan_partition(h, k, bound, 1, a2_max));
    } else {
        std::atomic<std::int64_t> next_a2{1};
        std::vector<SpectrumReport> parts(jobs);
        std::vector<std::exception_ptr> errors(jobs);
        {
            std::vector<std::jthread> workers;
            for (unsigned w = 0; w < jobs; ++w) {
                workers.emplace_back([&, w] {
                    try {
                        parts[w].h = h;
                        parts[w].k = k;
                        parts[w].bound = bound;
                        for (Int a2 = next_a2++; a2 <= a2_max; a2 = next_a2++)
                            merge(parts[w], scan_partition(h, k, bound, a2, a2));
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (const auto& part : parts) merge(total, part);
    }
    total.duration = std::chrono::steady_clock::now() - start;
    return total;
}

enum class VerdictStatus { pass, vacuous, fail, not_applicable };

inline std::string_view to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::vacuous: return "vacuous";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

/// Passing statuses: pass, vacuous, not_applicable.
inline bool ok(VerdictStatus s) { return s != VerdictStatus::fail; }

struct GapVerdict {
    VerdictStatus status = VerdictStatus::pass;
    std::size_t interval_low = 0;  // hk - h + 2
    std::size_t interval_high = 0; // hk - 1
    std::vector<std::size_t> offending;
};

/// The achieved sizes must avoid [hk - h + 2, hk - 1] whenever k >= 4.
inline GapVerdict gap_check(const SpectrumReport& report) {
    GapVerdict v;
    const auto h = static_cast<std::size_t>(report.h);
    const auto k = static_cast<std::size_t>(report.k);
    v.interval_low = h * k - h + 2;
    v.interval_high = h * k - 1;
    if (report.k < 4) {
        v.status = VerdictStatus::not_applicable;
        return v;
    }
    if (v.interval_low > v.interval_high) {
        v.status = VerdictStatus::vacuous;
        return v;
    }
    for (auto it = report.witnesses.lower_bound(v.interval_low);
         it != report.witnesses.end() && it->first <= v.interval_high; ++it)
        v.offending.push_back(it->first);
    v.status = v.offending.empty() ? VerdictStatus::pass : VerdictStatus::fail;
    return v;
}

struct DichotomyVerdict {
    VerdictStatus status = VerdictStatus::pass;
    std::string detail;
    std::optional<IntSet> counterexample;
};

/// Every scanned progression has |hA| = hk - h + 1 and every other scanned
/// set has |hA| >= hk.
inline DichotomyVerdict min_dichotomy_check(const SpectrumReport& report) {
    DichotomyVerdict v;
    if (report.k < 4) {
        v.status = VerdictStatus::not_applicable;
        v.detail = "dichotomy is stated for k >= 4";
        return v;
    }
    const auto h = static_cast<std::size_t>(report.h);
    const auto k = static_cast<std::size_t>(report.k);
    const std::size_t minimum = h * k - h + 1;
    for (std::size_t s : report.ap_sizes) {
        if (s != minimum) {
            v.status = VerdictStatus::fail;
            v.detail = "progression with size " + std::to_string(s) + " != " + std::to_string(minimum);
            return v;
        }
    }
    if (report.min_non_ap_size && *report.min_non_ap_size < h * k) {
        v.status = VerdictStatus::fail;
        v.detail = "non-progression with size " + std::to_string(*report.min_non_ap_size) + " < hk = " +
                   std::to_string(h * k);
        v.counterexample = report.min_non_ap_witness;
        return v;
    }
    v.detail = std::to_string(report.ap_sets) + " progression(s) at size " + std::to_string(minimum) +
               (report.min_non_ap_size ? ", smallest non-progression size " + std::to_string(*report.min_non_ap_size)
                                       : ", no non-progressions scanned");
    return v;
}

} // namespace sumset
